"""
Случайные многочлены с фиксированным seed и порождающие наборы мономов для проверок свойств
"""
import itertools
from fractions import Fraction
from random import Random
from typing import Iterable, List, Sequence

from poly_app.services.polynomial import Poly, block_offset


def monomials_of_degree(n: int, blocks: Sequence[str], degree: int) -> List[Poly]:
    positions = [block_offset(block, n) + j for block in blocks for j in range(n)]
    result = []
    for combination in itertools.combinations_with_replacement(positions, degree):
        exponents = [0] * (3 * n)
        for position in combination:
            exponents[position] += 1
        result.append(Poly(n, {tuple(exponents): 1}))
    return result


def monomials_up_to(n: int, blocks: Iterable[str], degree: int) -> List[Poly]:
    """ Все мономы от заданных блоков степени <= degree, первой идёт константа 1 """
    blocks = tuple(blocks)
    return [monomial for d in range(degree + 1) for monomial in monomials_of_degree(n, blocks, d)]


def random_poly(
        rng: Random, n: int, blocks: Iterable[str] = ('x',), degree: int = 3, terms: int = 4, bound: int = 5
) -> Poly:
    """ Сумма ``terms`` случайных мономов степени <= degree с небольшими рациональными коэффициентами """
    pool = monomials_up_to(n, blocks, degree)
    result = Poly.zero(n)
    for _ in range(terms):
        numerator = rng.randint(-bound, bound)
        denominator = rng.choice((1, 1, 1, 2, 3))
        result = result + rng.choice(pool) * Fraction(numerator, denominator)
    return result


def random_homogeneous(rng: Random, n: int, blocks: Iterable[str], degree: int, terms: int = 3) -> Poly:
    pool = monomials_of_degree(n, tuple(blocks), degree)
    result = Poly.zero(n)
    for _ in range(terms):
        result = result + rng.choice(pool) * rng.randint(-4, 4)
    return result
