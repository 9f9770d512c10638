"""
Двойные полиномы Шуберта типа A, стабильный выбор:
S_{w0} = prod_{i+j<=n} (x_i - t_j), S_w = d^x_{w^-1 w0} S_{w0}
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from django.conf import settings
from django.core.cache import cache

from config.exceptions import UsageError
from nilhecke_app.services import demazure
from poly_app.services import LinearForm, Poly, rename_block, specialize_to_zero, substitute, substitute_block
from weyl_app.services import (
    RootSystem,
    WeylElement,
    build_root_system,
    enumerate_weyl,
    is_right_descent,
    longest_element,
    multiply,
    simple_reflection,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DoubleSchubert:
    """
    w: перестановка (None для тривиальной группы S_1)
    poly: многочлен от блоков x и t
    """
    w: Optional[WeylElement]
    poly: Poly

    @property
    def degree(self) -> int:
        return self.w.length if self.w is not None else 0


def type_a(n: int) -> RootSystem:
    """ Система корней S_n, n - число переменных x """
    if n < 2:
        raise UsageError(f'S_{n} has no generators, n must be at least 2')
    return build_root_system('A', n - 1)


def _require_type_a(w: WeylElement) -> None:
    if w.root_system.family != 'A':
        raise UsageError(f'Double Schubert polynomials are defined for family A, got {w.root_system.name}')


def top_polynomial(n: int) -> Poly:
    x, t = Poly.gens('x', n), Poly.gens('t', n)
    result = Poly.one(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            result = result * (x[i - 1] - t[j - 1])
    return result


def top_double_schubert(n: int) -> DoubleSchubert:
    if n < 1:
        raise UsageError('n must be positive')
    w0 = longest_element(type_a(n)) if n > 1 else None
    return DoubleSchubert(w0, top_polynomial(n))


def schubert_table(n: int) -> Dict[WeylElement, Poly]:
    """
    S_w для всех w из S_n, сверху вниз: S_w = d_i S_{w s_i} для любого правого подъёма i элемента w
    """
    rs = type_a(n)
    cache_key = f'schubert:table:A:{rs.rank}'
    table = cache.get(cache_key)
    if table is None:
        elements = enumerate_weyl(rs)
        w0 = longest_element(rs)
        table = {w0: top_polynomial(n)}
        for w in reversed(elements):
            if w in table:
                continue
            i = next(i for i in rs.indices if not is_right_descent(w, i))
            table[w] = demazure(rs, i, 'x', table[multiply(w, simple_reflection(rs, i))])
        logger.info('built the double Schubert table of S_%s (%s polynomials)', n, len(table))
        cache.set(cache_key, table, settings.TABLE_CACHE_TIMEOUT)
    return table


def double_schubert(w: WeylElement) -> DoubleSchubert:
    _require_type_a(w)
    return DoubleSchubert(w, schubert_table(w.root_system.ambient_dim)[w])


def single_schubert(w: WeylElement) -> Poly:
    """ S_w(x) = S_w(x, 0) """
    return specialize_to_zero(double_schubert(w).poly, 't')


def point_images(u: WeylElement, block: str = 't') -> List[LinearForm]:
    """ u(e_1), ..., u(e_n) как линейные формы от ``block`` """
    n = u.root_system.ambient_dim
    return [LinearForm.from_vector(block, u.apply(tuple(int(k == j) for k in range(n)))) for j in range(n)]


def localize(p: Poly, u: WeylElement) -> Poly:
    """ p|_u: x_i -> t_{u(i)}, многочлен от t """
    if 'y' in p.blocks():
        raise UsageError('Localization takes polynomials in the x and t blocks')
    return substitute_block(p, 'x', point_images(u))


# Pullbacks along the structure maps of G/B x G/B

def mu_star(p: Poly) -> Poly:
    """ f(x, t) -> f(x, t) """
    return p


def pi1_star(p: Poly) -> Poly:
    """ f(x, t) -> f(y, t) """
    return rename_block(p, 'x', 'y')


def pi2_star(p: Poly) -> Poly:
    """ f(x, t) -> f(x, y) """
    return rename_block(p, 't', 'y')


def nu_star(p: Poly) -> Poly:
    """ f(x, t) -> f(-t, -x) """
    n = p.n
    x, t = Poly.gens('x', n), Poly.gens('t', n)
    return substitute(p, {'x': [-v for v in t], 't': [-v for v in x]})


def swap_blocks(p: Poly) -> Poly:
    """ f(x, t) -> f(t, x) """
    return substitute(p, {'x': Poly.gens('t', p.n), 't': Poly.gens('x', p.n)})
