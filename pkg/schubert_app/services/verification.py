"""
Проверки тождеств копроизведения и антипода, специализации y = 0 и
характеризующих свойств двойных полиномов Шуберта
"""
import logging

import sympy

from config.exceptions import ConventionError
from nilhecke_app.services import demazure_w
from poly_app.services import Poly, is_symmetric, rename_block, substitute, weyl_act
from schubert_app.services.double_schubert import (
    double_schubert,
    localize,
    nu_star,
    pi1_star,
    pi2_star,
    schubert_table,
    single_schubert,
    swap_blocks,
    type_a,
)
from schubert_app.services.ideals import (
    SPLIT,
    THREE_BLOCK,
    TWO_BLOCK,
    IdealSpec,
    coinvariant_normal_form,
    ideal_member,
    membership,
    staircase_monomials,
)
from schubert_app.services.reports import IdentityReport
from weyl_app.services import (
    WeylElement,
    bruhat_leq,
    enumerate_weyl,
    identity,
    inverse,
    length_additive_factorizations,
    longest_element,
    multiply,
)

logger = logging.getLogger(__name__)


def _sign(length: int) -> int:
    return -1 if length % 2 else 1


def _factorization_words(w: WeylElement) -> list:
    return [[list(u.word), list(v.word)] for u, v in length_additive_factorizations(w)]


def coproduct_difference(w: WeylElement) -> Poly:
    """ S_w(x, t) - sum_{w = u.v} S_v(x, y) S_u(y, t) """
    table = schubert_table(w.root_system.ambient_dim)
    rhs = Poly.zero(w.root_system.ambient_dim)
    for u, v in length_additive_factorizations(w):
        rhs = rhs + pi2_star(table[v]) * pi1_star(table[u])
    return table[w] - rhs


def verify_coproduct(w: WeylElement) -> IdentityReport:
    result = membership(coproduct_difference(w), IdealSpec(THREE_BLOCK, w.root_system))
    return IdentityReport.for_element(
        w, 'coproduct', passed=result.member, witnesses=result.witnesses, substitutions=result.substitutions,
        details={'factorizations': _factorization_words(w)},
    )


def antipode_difference(w: WeylElement) -> Poly:
    """ S_w(x, t) - (-1)^{l(w)} S_{w^-1}(t, x) """
    return double_schubert(w).poly - swap_blocks(double_schubert(inverse(w)).poly) * _sign(w.length)


def verify_antipode(w: WeylElement) -> IdentityReport:
    difference = antipode_difference(w)
    result = membership(difference, IdealSpec(TWO_BLOCK, w.root_system))
    return IdentityReport.for_element(
        w, 'antipode', passed=result.member, witnesses=result.witnesses, substitutions=result.substitutions,
        details={'exact': difference.is_zero},
    )


def specialized_difference(w: WeylElement) -> Poly:
    """ S_w(x, t) - sum_{w = u.v} (-1)^{l(u)} S_v(x) S_{u^-1}(t) """
    rhs = Poly.zero(w.root_system.ambient_dim)
    for u, v in length_additive_factorizations(w):
        rhs = rhs + single_schubert(v) * rename_block(single_schubert(inverse(u)), 'x', 't') * _sign(u.length)
    return double_schubert(w).poly - rhs


def verify_specialized(w: WeylElement) -> IdentityReport:
    difference = specialized_difference(w)
    result = membership(difference, IdealSpec(SPLIT, w.root_system))
    return IdentityReport.for_element(
        w, 'specialized', passed=result.member, witnesses=result.witnesses,
        details={'exact': difference.is_zero, 'factorizations': _factorization_words(w)},
    )


def verify_support(w: WeylElement) -> IdentityReport:
    """ Из S_w|_u != 0 следует u >= w, и S_w|_w != 0 """
    poly = double_schubert(w).poly
    support, witnesses = [], []
    elements = enumerate_weyl(w.root_system)
    for u in elements:
        if not localize(poly, u).is_zero:
            support.append(list(u.word))
            if not bruhat_leq(w, u):
                witnesses.append(list(u.word))
    if localize(poly, w).is_zero:
        witnesses.append(list(w.word))
    return IdentityReport.for_element(
        w, 'support', passed=not witnesses, witnesses=witnesses, substitutions=len(elements),
        details={'support': support},
    )


def verify_delta(w: WeylElement) -> IdentityReport:
    """ S_w(t, t) = 1 при w = e и 0 иначе """
    value = rename_block(double_schubert(w).poly, 'x', 't')
    expected = Poly.one(value.n) if w.is_identity else Poly.zero(value.n)
    return IdentityReport.for_element(
        w, 'delta', passed=value == expected, witnesses=[] if value == expected else [str(value)], substitutions=1,
    )


def verify_demazure_compatibility(w: WeylElement) -> IdentityReport:
    """
    d^x_v S_w = S_{w v^-1} при l(w v^-1) + l(v) = l(w) и 0 иначе; для стабильного
    выбора равенство точное, иначе проверяется принадлежность двублочному идеалу
    """
    table = schubert_table(w.root_system.ambient_dim)
    spec = IdealSpec(TWO_BLOCK, w.root_system)
    witnesses, exact = [], True
    for v in enumerate_weyl(w.root_system):
        if v.length > w.length:
            break
        image = demazure_w(v, 'x', table[w])
        target = multiply(w, inverse(v))
        expected = table[target] if target.length + v.length == w.length else Poly.zero(image.n)
        if image == expected:
            continue
        exact = False
        if not ideal_member(image - expected, spec):
            witnesses.append(list(v.word))
    return IdentityReport.for_element(
        w, 'demazure-compat', passed=not witnesses, witnesses=witnesses, details={'exact': exact},
    )


def verify_characterization(w: WeylElement) -> IdentityReport:
    """ Действие d, носитель и S_e = 1 вместе """
    parts = [verify_demazure_compatibility(w), verify_support(w)]
    e_poly = schubert_table(w.root_system.ambient_dim)[identity(w.root_system)]
    normalized = e_poly == Poly.one(e_poly.n)
    witnesses = [[part.identity, part.witnesses] for part in parts if not part.passed]
    if not normalized:
        witnesses.append(['normalization', str(e_poly)])
    return IdentityReport.for_element(
        w, 'characterization', passed=not witnesses, witnesses=witnesses,
        substitutions=sum(part.substitutions for part in parts),
    )


def verify_symmetrization(w: WeylElement) -> IdentityReport:
    """ d^y_{w0}(S_{w0}(w0 y, x) S_w(y, t)) симметричен по y """
    rs = w.root_system
    n = rs.ambient_dim
    w0 = longest_element(rs)
    top = schubert_table(n)[w0]
    twisted = substitute(top, {'x': [weyl_act(y, w0, 'y') for y in Poly.gens('y', n)], 't': Poly.gens('x', n)})
    value = demazure_w(w0, 'y', twisted * pi1_star(schubert_table(n)[w]))
    symmetric = is_symmetric(value, 'y', rs)
    return IdentityReport.for_element(
        w, 'symmetrization', passed=symmetric, witnesses=[] if symmetric else [str(value)],
    )


def nu_star_sign(w: WeylElement) -> int:
    """
    Знак c, для которого nu^* S_w = c S_{w^-1} по модулю двублочного идеала,
    находится вычислением
    """
    image = nu_star(double_schubert(w).poly)
    target = double_schubert(inverse(w)).poly
    spec = IdealSpec(TWO_BLOCK, w.root_system)
    for sign in (1, -1):
        if ideal_member(image - target * sign, spec):
            logger.info('nu* S_%s = %+d S_w^-1', list(w.word), sign)
            return sign
    raise ConventionError(f'nu* S_{list(w.word)} is not +-S_w^-1 modulo the ideal')


def schubert_basis_rank(n: int) -> int:
    """ Ранг нормальных форм {S_w(x)} в лестничных мономах; для базиса n! """
    columns = [next(iter(monomial.terms)) for monomial in staircase_monomials(n)]
    rows = []
    for w in enumerate_weyl(type_a(n)):
        reduced = coinvariant_normal_form(single_schubert(w), 'x')
        rows.append([
            sympy.Rational(reduced.terms[c].numerator, reduced.terms[c].denominator) if c in reduced.terms else 0
            for c in columns
        ])
    return sympy.Matrix(rows).rank()


def localization_values(w: WeylElement) -> dict:
    """ u -> S_w|_u для всех u """
    poly = double_schubert(w).poly
    return {u: localize(poly, u) for u in enumerate_weyl(w.root_system)}
