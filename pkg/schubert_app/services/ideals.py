"""
Принадлежность идеалам борелевского типа

two_block:   <f(x) - f(t) : f symmetric>
three_block: <f(x) - f(y), f(t) - f(y) : f symmetric>
split:       <Q[x]^W_+> + <Q[t]^W_+>

Первые два проверяются локализацией: фактор вкладывается в многочлены от t,
занумерованные W (соответственно W x W). Расщеплённый идеал проверяется
нормальной формой по модулю коинвариантов.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import sympy

from config.exceptions import UsageError
from poly_app.services import Poly, block_offset, monomials_of_degree, substitute
from schubert_app.services.double_schubert import point_images
from weyl_app.services import RootSystem, enumerate_weyl

logger = logging.getLogger(__name__)

TWO_BLOCK = 'two_block'
THREE_BLOCK = 'three_block'
SPLIT = 'split'

VARIANT_BLOCKS = {
    TWO_BLOCK: {'x', 't'},
    THREE_BLOCK: {'x', 'y', 't'},
    SPLIT: {'x', 't'},
}


@dataclass(frozen=True)
class IdealSpec:
    variant: str
    rs: RootSystem

    def __post_init__(self):
        if self.variant not in VARIANT_BLOCKS:
            raise UsageError(f'Unknown ideal variant {self.variant!r}')
        if self.variant == SPLIT and self.rs.family != 'A':
            raise UsageError('The coinvariant normal form is implemented for family A only')

    @property
    def n(self) -> int:
        return self.rs.ambient_dim


@dataclass
class MembershipResult:
    member: bool
    substitutions: int
    witnesses: List[list]


def _check_blocks(p: Poly, spec: IdealSpec) -> None:
    if p.n != spec.n:
        raise UsageError(f'{spec.rs.name} acts on {spec.n} coordinates, the polynomial has {p.n}')
    extra = set(p.blocks()) - VARIANT_BLOCKS[spec.variant]
    if extra:
        raise UsageError(f'Blocks {sorted(extra)} do not occur in the {spec.variant} ideal')


def membership(p: Poly, spec: IdealSpec, stop_early: bool = False) -> MembershipResult:
    """ Прогоняет оракул для ``spec`` и собирает подстановки, на которых он не выполнен """
    _check_blocks(p, spec)
    witnesses = []
    substitutions = 0
    if spec.variant == SPLIT:
        member = coinvariant_normal_form(coinvariant_normal_form(p, 'x'), 't').is_zero
        return MembershipResult(member, 0, [] if member else [['normal_form']])

    elements = enumerate_weyl(spec.rs)
    if spec.variant == TWO_BLOCK:
        for u in elements:
            substitutions += 1
            if not substitute(p, {'x': point_images(u)}).is_zero:
                witnesses.append([list(u.word)])
                if stop_early:
                    break
    else:
        for a, b in itertools.product(elements, repeat=2):
            substitutions += 1
            if not substitute(p, {'y': point_images(a), 'x': point_images(b)}).is_zero:
                witnesses.append([list(a.word), list(b.word)])
                if stop_early:
                    break
    logger.debug('%s oracle: %s substitutions, %s witnesses', spec.variant, substitutions, len(witnesses))
    return MembershipResult(not witnesses, substitutions, witnesses)


def ideal_member(p: Poly, spec: IdealSpec) -> bool:
    return membership(p, spec, stop_early=True).member


# Coinvariant normal form

def _complete_homogeneous(n: int, block: str, i: int, k: int) -> Dict[Tuple[int, ...], int]:
    """ h_k(v_1, ..., v_i) как векторы показателей во всём кольце """
    offset = block_offset(block, n)
    terms = {}
    for combination in itertools.combinations_with_replacement(range(i), k):
        exponents = [0] * (3 * n)
        for j in combination:
            exponents[offset + j] += 1
        terms[tuple(exponents)] = 1
    return terms


def coinvariant_normal_form(p: Poly, block: str = 'x') -> Poly:
    """
    Остаток от деления на h_{n-i+1}(v_1..v_i), i = 1..n, в лексикографическом
    порядке v_n > ... > v_1; старшие члены v_i^{n-i+1}, поэтому остаток лежит на
    лестничных мономах (показатель v_i не больше n - i)
    """
    n = p.n
    offset = block_offset(block, n)
    tails = {}
    for i in range(1, n + 1):
        k = n - i + 1
        basis = _complete_homogeneous(n, block, i, k)
        lead = [0] * (3 * n)
        lead[offset + i - 1] = k
        del basis[tuple(lead)]
        tails[i] = basis

    def reducible(monomial) -> Optional[int]:
        for i in range(n, 0, -1):
            if monomial[offset + i - 1] >= n - i + 1:
                return i
        return None

    def lex_key(monomial):
        return tuple(monomial[offset + j] for j in range(n - 1, -1, -1))

    work = dict(p.terms)
    while True:
        candidates = [monomial for monomial in work if reducible(monomial) is not None]
        if not candidates:
            break
        monomial = max(candidates, key=lex_key)
        i = reducible(monomial)
        coefficient = work.pop(monomial)
        quotient = list(monomial)
        quotient[offset + i - 1] -= n - i + 1
        for tail in tails[i]:
            key = tuple(a + b for a, b in zip(quotient, tail))
            value = work.get(key, 0) - coefficient
            if value:
                work[key] = value
            else:
                work.pop(key, None)
    return Poly(n, work)


def staircase_monomials(n: int, block: str = 'x') -> List[Poly]:
    """ v^a с a_i <= n - i, всего n! штук """
    offset = block_offset(block, n)
    result = []
    for exponents in itertools.product(*(range(n - i + 1) for i in range(1, n + 1))):
        vector = [0] * (3 * n)
        vector[offset:offset + n] = exponents
        result.append(Poly(n, {tuple(vector): 1}))
    return result


def elementary_symmetric(n: int, block: str, k: int) -> Poly:
    offset = block_offset(block, n)
    terms = {}
    for combination in itertools.combinations(range(n), k):
        exponents = [0] * (3 * n)
        for j in combination:
            exponents[offset + j] = 1
        terms[tuple(exponents)] = 1
    return Poly(n, terms)


# Degree-wise linear algebra oracle

def ideal_generators(spec: IdealSpec) -> List[Poly]:
    n = spec.n
    generators = []
    for k in range(1, n + 1):
        e_x, e_y, e_t = (elementary_symmetric(n, block, k) for block in ('x', 'y', 't'))
        if spec.variant == TWO_BLOCK:
            generators.append(e_x - e_t)
        elif spec.variant == THREE_BLOCK:
            generators.extend([e_x - e_y, e_t - e_y])
        else:
            generators.extend([e_x, e_t])
    return generators


def linear_algebra_member(p: Poly, spec: IdealSpec) -> bool:
    """
    Принадлежность по степеням: часть степени d однородного идеала натянута на
    мономиальные кратные образующих, сравнение по точному рангу
    """
    _check_blocks(p, spec)
    blocks = sorted(VARIANT_BLOCKS[spec.variant], key=('x', 'y', 't').index)
    generators = ideal_generators(spec)
    for degree, component in p.homogeneous_components().items():
        if degree == 0:
            return False
        span = []
        for generator in generators:
            shift = degree - generator.degree
            if shift < 0:
                continue
            span.extend(monomial * generator for monomial in monomials_of_degree(spec.n, blocks, shift))
        if not span:
            return False
        columns = sorted({monomial for poly in span + [component] for monomial in poly.terms})
        index = {monomial: j for j, monomial in enumerate(columns)}

        def row(poly):
            values = [sympy.Integer(0)] * len(columns)
            for monomial, coefficient in poly.terms.items():
                values[index[monomial]] = sympy.Rational(coefficient.numerator, coefficient.denominator)
            return values

        matrix = sympy.Matrix([row(poly) for poly in span])
        if matrix.rank() != matrix.col_join(sympy.Matrix([row(component)])).rank():
            return False
    return True
