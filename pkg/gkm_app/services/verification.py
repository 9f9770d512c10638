"""
Характеризующие свойства локализованных классов Шуберта и локализованные
тождества копроизведения и антипода.

При y -> a(t) и x -> (ab)(t) копроизведение по модулю идеала трёх блоков
принимает вид xi_w(ab) = sum_{w = u.v} xi_u(a) a(xi_v(b));
при x -> u(t) и t -> t антипод принимает вид
xi_w(u) = (-1)^{l(w)} u(xi_{w^-1}(u^-1)).
"""
import itertools
import logging
from typing import Dict, Optional

from django.conf import settings

from config.exceptions import InvalidGKMClassError, ResourceLimitError
from gkm_app.services.classes import (
    DEFAULT_CONVENTION,
    GKMClass,
    GKMConvention,
    demazure_gkm,
    gkm_table,
    is_gkm_compatible,
    restriction_witnesses,
)
from poly_app.services import Poly, to_text, weyl_act
from schubert_app.services import IdentityReport, localization_values
from weyl_app.services import (
    WeylElement,
    enumerate_weyl,
    inverse,
    is_right_descent,
    length_additive_factorizations,
    multiply,
    simple_reflection,
)

logger = logging.getLogger(__name__)


def characterization_witnesses(
        w: WeylElement, table: Dict[WeylElement, GKMClass], epsilon: int
) -> list:
    """ Нарушенные свойства xi_w: нормировка, степень, носитель, действие d_i, условия на рёбрах """
    rs = w.root_system
    xi = table[w]
    witnesses = restriction_witnesses(w, xi)
    for i in rs.indices:
        try:
            image = demazure_gkm(i, xi, epsilon)
        except InvalidGKMClassError:
            witnesses.append(['gkm', i])
            continue
        if is_right_descent(w, i):
            expected = table[multiply(w, simple_reflection(rs, i))]
            if (image - expected).is_zero:
                continue
        elif image.is_zero:
            continue
        witnesses.append(['demazure', i])
    return witnesses


def verify_characterization(w: WeylElement, convention: Optional[GKMConvention] = None) -> IdentityReport:
    convention = convention or DEFAULT_CONVENTION
    table = gkm_table(w.root_system, convention)
    witnesses = characterization_witnesses(w, table, convention.epsilon)
    if not is_gkm_compatible(table[w]):
        witnesses.append(['gkm', list(w.word)])
    return IdentityReport.for_element(
        w, 'gkm-characterization', passed=not witnesses, witnesses=witnesses,
        substitutions=len(enumerate_weyl(w.root_system)),
    )


def type_a_disagreements(w: WeylElement, table: Dict[WeylElement, GKMClass]) -> list:
    values = localization_values(w)
    return [list(u.word) for u, value in values.items() if table[w](u) != value]


def verify_type_a_agreement(w: WeylElement, convention: Optional[GKMConvention] = None) -> IdentityReport:
    """ xi_w(u) = S_w|_u при всех u """
    witnesses = type_a_disagreements(w, gkm_table(w.root_system, convention))
    return IdentityReport.for_element(
        w, 'gkm-type-a', passed=not witnesses, witnesses=witnesses,
        substitutions=len(enumerate_weyl(w.root_system)),
    )


def _check_coproduct_order(w: WeylElement, allow_large: bool) -> None:
    order = len(enumerate_weyl(w.root_system))
    if order > settings.GKM_COPRODUCT_MAX_ORDER and not allow_large:
        raise ResourceLimitError(
            f'The localized coproduct of {w.root_system.name} needs {order ** 2} pairs per element; '
            f'use --allow-large',
            required=order,
        )


def verify_coproduct_gkm(
        w: WeylElement, convention: Optional[GKMConvention] = None, allow_large: bool = False
) -> IdentityReport:
    """ xi_w(ab) = sum_{w = u.v} xi_u(a) a(xi_v(b)) при всех a, b """
    _check_coproduct_order(w, allow_large)
    rs = w.root_system
    table = gkm_table(rs, convention)
    xi = table[w]
    factorizations = length_additive_factorizations(w)
    elements = enumerate_weyl(rs)
    witnesses, substitutions = [], 0
    for a, b in itertools.product(elements, repeat=2):
        substitutions += 1
        rhs = Poly.zero(rs.ambient_dim)
        for u, v in factorizations:
            left = table[u](a)
            if left.is_zero:
                continue
            right = table[v](b)
            if right.is_zero:
                continue
            rhs = rhs + left * weyl_act(right, a, 't')
        if xi(multiply(a, b)) != rhs:
            witnesses.append([list(a.word), list(b.word)])
    logger.info('gkm coproduct %s %s: %s pairs', rs.name, list(w.word), substitutions)
    return IdentityReport.for_element(
        w, 'gkm-coproduct', passed=not witnesses, witnesses=witnesses, substitutions=substitutions,
    )


def verify_antipode_gkm(w: WeylElement, convention: Optional[GKMConvention] = None) -> IdentityReport:
    """ xi_w(u) = (-1)^{l(w)} u(xi_{w^-1}(u^-1)) при всех u """
    rs = w.root_system
    table = gkm_table(rs, convention)
    xi, xi_inverse = table[w], table[inverse(w)]
    sign = -1 if w.length % 2 else 1
    witnesses = []
    elements = enumerate_weyl(rs)
    for u in elements:
        if xi(u) != weyl_act(xi_inverse(inverse(u)), u, 't') * sign:
            witnesses.append([list(u.word), to_text(xi(u))])
    return IdentityReport.for_element(
        w, 'gkm-antipode', passed=not witnesses, witnesses=witnesses, substitutions=len(elements),
    )
