"""
Эквивариантные классы G/B как функции W -> Q[t] (ограничения на неподвижные
точки тора) и локализованные операторы Демазюра
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from django.conf import settings
from django.core.cache import cache

from config.exceptions import ConventionError, DivisibilityError, InvalidGKMClassError, UsageError
from poly_app.services import LinearForm, Poly, divide_exact, to_text
from weyl_app.services import (
    RootSystem,
    WeylElement,
    bruhat_leq,
    enumerate_weyl,
    is_right_descent,
    longest_element,
    multiply,
    reflection,
    simple_reflection,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GKMConvention:
    """
    epsilon: знак знаменателя, d_i c(u) = (c(u) - c(u s_i)) / (epsilon u(alpha_i))
    sigma: значение класса точки равно prod_{alpha > 0} (sigma alpha)(t)
    placement: неподвижная точка с классом точки, 'w0' или 'e'
    """
    epsilon: int
    sigma: int
    placement: str

    def to_json(self) -> dict:
        return {'epsilon': self.epsilon, 'sigma': self.sigma, 'placement': self.placement}

    @classmethod
    def from_json(cls, data: dict) -> 'GKMConvention':
        return cls(int(data['epsilon']), int(data['sigma']), str(data['placement']))

    @property
    def key(self) -> str:
        return f'{self.epsilon:+d}{self.sigma:+d}{self.placement}'


# Frozen result of conventions.search_convention, kept in goldens/conventions.json
DEFAULT_CONVENTION = GKMConvention(epsilon=1, sigma=-1, placement='w0')


@dataclass(frozen=True)
class GKMClass:
    rs: RootSystem
    values: Dict[WeylElement, Poly]

    @property
    def n(self) -> int:
        return self.rs.ambient_dim

    def __call__(self, u: WeylElement) -> Poly:
        return self.values.get(u, Poly.zero(self.n))

    def support(self) -> List[WeylElement]:
        return [u for u in enumerate_weyl(self.rs) if not self(u).is_zero]

    def __sub__(self, other: 'GKMClass') -> 'GKMClass':
        return GKMClass(self.rs, {u: self(u) - other(u) for u in enumerate_weyl(self.rs)})

    @property
    def is_zero(self) -> bool:
        return all(value.is_zero for value in self.values.values())

    def to_json(self) -> List[list]:
        """ [(слово u, ограничение в u)] в фиксированном порядке на W """
        return [[list(u.word), to_text(self(u))] for u in enumerate_weyl(self.rs)]


def root_form(u: WeylElement, root) -> LinearForm:
    """ u(root) как линейная форма от t """
    return LinearForm.from_vector('t', u.apply(root))


def constant_class(rs: RootSystem, value=1) -> GKMClass:
    return GKMClass(rs, {u: Poly.constant(value, rs.ambient_dim) for u in enumerate_weyl(rs)})


def point_class(rs: RootSystem, convention: GKMConvention = DEFAULT_CONVENTION) -> GKMClass:
    """ prod_{alpha > 0} (sigma alpha)(t) в точке placement, ноль в остальных """
    n = rs.ambient_dim
    value = Poly.one(n)
    for root in rs.positive_roots:
        value = value * LinearForm.from_vector('t', root).to_poly(n) * convention.sigma
    if convention.placement not in ('w0', 'e'):
        raise UsageError(f'Unknown point class placement {convention.placement!r}')
    point = longest_element(rs) if convention.placement == 'w0' else enumerate_weyl(rs)[0]
    return GKMClass(rs, {u: value if u == point else Poly.zero(n) for u in enumerate_weyl(rs)})


def demazure_gkm(i: int, c: GKMClass, epsilon: int = DEFAULT_CONVENTION.epsilon) -> GKMClass:
    rs = c.rs
    s = simple_reflection(rs, i)
    alpha = rs.simple_roots[i - 1]
    values = {}
    for u in enumerate_weyl(rs):
        difference = c(u) - c(multiply(u, s))
        try:
            values[u] = divide_exact(difference, root_form(u, alpha), 't') * epsilon
        except DivisibilityError as error:
            raise InvalidGKMClassError(f'Not a GKM class: edge ({list(u.word)}, s{i}) fails, {error}')
    return GKMClass(rs, values)


def is_gkm_compatible(c: GKMClass) -> bool:
    """ c(u) - c(u s_alpha) делится на u(alpha)(t) при всех u и положительных корнях alpha """
    rs = c.rs
    reflections = [(root, reflection(rs, root)) for root in rs.positive_roots]
    for u in enumerate_weyl(rs):
        for root, s in reflections:
            try:
                divide_exact(c(u) - c(multiply(u, s)), root_form(u, root), 't')
            except DivisibilityError:
                return False
    return True


def build_table(rs: RootSystem, convention: GKMConvention) -> Dict[WeylElement, GKMClass]:
    """ xi_{w0} = класс точки, xi_w = d_i xi_{w s_i} для правого подъёма i элемента w """
    elements = enumerate_weyl(rs)
    w0 = longest_element(rs)
    table = {w0: point_class(rs, convention)}
    for w in reversed(elements):
        if w in table:
            continue
        i = next(i for i in rs.indices if not is_right_descent(w, i))
        table[w] = demazure_gkm(i, table[multiply(w, simple_reflection(rs, i))], convention.epsilon)
    return table


def restriction_witnesses(w: WeylElement, xi: GKMClass) -> list:
    """ Нарушения нормировки, степени и носителя класса xi_w: [свойство, слово точки u] """
    witnesses = []
    for u in enumerate_weyl(w.root_system):
        value = xi(u)
        if w.is_identity and value != 1:
            witnesses.append(['normalization', list(u.word)])
        if not value.is_zero:
            if not value.is_homogeneous or value.degree != w.length:
                witnesses.append(['degree', list(u.word)])
            if not bruhat_leq(w, u):
                witnesses.append(['support', list(u.word)])
    if xi(w).is_zero:
        witnesses.append(['support', list(w.word)])
    return witnesses


def gkm_table(rs: RootSystem, convention: Optional[GKMConvention] = None) -> Dict[WeylElement, GKMClass]:
    """
    Таблица классов Шуберта для соглашения convention (по умолчанию зафиксированного).
    Таблица, нарушающая нормировку, степень или носитель, даёт ConventionError
    """
    convention = convention or DEFAULT_CONVENTION
    cache_key = f'gkm:table:{rs.name}:{convention.key}'
    table = cache.get(cache_key)
    if table is None:
        try:
            table = build_table(rs, convention)
        except InvalidGKMClassError as error:
            raise ConventionError(f'Convention {convention.key} leaves the GKM classes on {rs.name}: {error}')
        for w, xi in table.items():
            witnesses = restriction_witnesses(w, xi)
            if witnesses:
                raise ConventionError(
                    f'Convention {convention.key} breaks the characterization of xi_{list(w.word)} '
                    f'on {rs.name}: {witnesses}'
                )
        logger.info('built the GKM table of %s (%s classes)', rs.name, len(table))
        cache.set(cache_key, table, settings.TABLE_CACHE_TIMEOUT)
    return table


def schubert_gkm(w: WeylElement, convention: Optional[GKMConvention] = None) -> GKMClass:
    return gkm_table(w.root_system, convention)[w]
