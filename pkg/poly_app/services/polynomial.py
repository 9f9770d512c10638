"""
Разреженные многочлены над Q от трёх блоков переменных x, y, t.

Poly размерности n имеет 3n переменных в фиксированном порядке
x_1..x_n, y_1..y_n, t_1..t_n. Члены хранятся словарём из кортежей показателей
длины 3n в ненулевые Fraction; после создания значения не изменяются.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

from config.exceptions import DivisibilityError, UsageError

BLOCKS = ('x', 'y', 't')

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


def block_offset(block: str, n: int) -> int:
    if block not in BLOCKS:
        raise UsageError(f'Unknown variable block {block!r}, expected one of {BLOCKS}')
    return BLOCKS.index(block) * n


class Poly:
    __slots__ = ('n', 'terms')

    def __init__(self, n: int, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self.n = n
        self.terms: Dict[Monomial, Fraction] = {
            monomial: Fraction(coefficient) for monomial, coefficient in (terms or {}).items() if coefficient
        }

    @classmethod
    def _raw(cls, n: int, terms: Dict[Monomial, Fraction]) -> 'Poly':
        poly = cls.__new__(cls)
        poly.n = n
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, n: int) -> 'Poly':
        return cls._raw(n, {})

    @classmethod
    def constant(cls, value: Scalar, n: int) -> 'Poly':
        return cls(n, {(0,) * (3 * n): value})

    @classmethod
    def one(cls, n: int) -> 'Poly':
        return cls.constant(1, n)

    @classmethod
    def var(cls, block: str, i: int, n: int) -> 'Poly':
        if not 1 <= i <= n:
            raise UsageError(f'Variable {block}{i} is outside 1..{n}')
        exponents = [0] * (3 * n)
        exponents[block_offset(block, n) + i - 1] = 1
        return cls._raw(n, {tuple(exponents): Fraction(1)})

    @classmethod
    def gens(cls, block: str, n: int) -> List['Poly']:
        return [cls.var(block, i, n) for i in range(1, n + 1)]

    @classmethod
    def parse(cls, text: str, n: int) -> 'Poly':
        return parse(text, n)

    def _coerce(self, other) -> 'Poly':
        if isinstance(other, Poly):
            if other.n != self.n:
                raise UsageError(f'Polynomials over {self.n} and {other.n} coordinates cannot be combined')
            return other
        if isinstance(other, Rational):
            return Poly.constant(other, self.n)
        return NotImplemented

    def __add__(self, other) -> 'Poly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            value = terms.get(monomial, 0) + coefficient
            if value:
                terms[monomial] = value
            else:
                terms.pop(monomial, None)
        return Poly._raw(self.n, terms)

    __radd__ = __add__

    def __neg__(self) -> 'Poly':
        return Poly._raw(self.n, {monomial: -coefficient for monomial, coefficient in self.terms.items()})

    def __sub__(self, other) -> 'Poly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'Poly':
        return (-self) + other

    def __mul__(self, other) -> 'Poly':
        if isinstance(other, Rational):
            return scale(self, other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                monomial = tuple(a + b for a, b in zip(m1, m2))
                terms[monomial] = terms.get(monomial, 0) + c1 * c2
        return Poly._raw(self.n, {monomial: c for monomial, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Poly':
        if exponent < 0:
            raise UsageError('Negative powers are not polynomials')
        result = Poly.one(self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Rational):
            other = Poly.constant(other, self.n)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f'Poly({to_text(self)!r}, n={self.n})'

    def __getstate__(self):
        return self.n, self.terms

    def __setstate__(self, state):
        self.n, self.terms = state

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """ Полная степень, -1 для нулевого многочлена """
        return max((sum(monomial) for monomial in self.terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(monomial) for monomial in self.terms}) <= 1

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * (3 * self.n), Fraction(0))

    def blocks(self) -> Tuple[str, ...]:
        """ Блоки, переменные которых действительно встречаются """
        used = []
        for index, block in enumerate(BLOCKS):
            window = slice(index * self.n, (index + 1) * self.n)
            if any(any(monomial[window]) for monomial in self.terms):
                used.append(block)
        return tuple(used)

    def homogeneous_components(self) -> Dict[int, 'Poly']:
        components: Dict[int, Dict[Monomial, Fraction]] = {}
        for monomial, coefficient in self.terms.items():
            components.setdefault(sum(monomial), {})[monomial] = coefficient
        return {degree: Poly._raw(self.n, terms) for degree, terms in sorted(components.items())}


@dataclass(frozen=True)
class LinearForm:
    """ sum_j coeffs[j] * block_{j+1} """
    block: str
    coeffs: Tuple[Fraction, ...]

    @classmethod
    def from_vector(cls, block: str, vector: Iterable[Scalar]) -> 'LinearForm':
        return cls(block, tuple(Fraction(value) for value in vector))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_poly(self, n: Optional[int] = None) -> Poly:
        n = len(self.coeffs) if n is None else n
        if len(self.coeffs) > n:
            raise UsageError(f'Linear form over {len(self.coeffs)} coordinates does not fit {n}')
        offset = block_offset(self.block, n)
        terms = {}
        for j, coefficient in enumerate(self.coeffs):
            if coefficient:
                exponents = [0] * (3 * n)
                exponents[offset + j] = 1
                terms[tuple(exponents)] = coefficient
        return Poly._raw(n, terms)


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def scale(p: Poly, c: Scalar) -> Poly:
    c = Fraction(c)
    if not c:
        return Poly.zero(p.n)
    return Poly._raw(p.n, {monomial: coefficient * c for monomial, coefficient in p.terms.items()})


# Substitutions

Image = Union[Poly, LinearForm, int, Fraction]


def _image_poly(image: Image, n: int) -> Poly:
    if isinstance(image, LinearForm):
        return image.to_poly(n)
    if isinstance(image, Poly):
        if image.n != n:
            raise UsageError(f'Image over {image.n} coordinates used in a polynomial over {n}')
        return image
    return Poly.constant(image, n)


def _as_signed_variable(image: Poly) -> Optional[Tuple[int, int]]:
    """ (глобальный индекс, знак), если образ равен ±переменной, (-1, 0) для нуля, иначе None """
    if image.is_zero:
        return -1, 0
    if len(image.terms) != 1:
        return None
    (monomial, coefficient), = image.terms.items()
    if sum(monomial) != 1 or abs(coefficient) != 1:
        return None
    return monomial.index(1), int(coefficient)


def _signed_rename(p: Poly, targets: Dict[int, Tuple[int, int]]) -> Poly:
    """ Одновременная подстановка ±переменных (или нуля) вместо переменных, мономы переходят в мономы """
    terms: Dict[Monomial, Fraction] = {}
    for monomial, coefficient in p.terms.items():
        exponents = list(monomial)
        for source in targets:
            exponents[source] = 0
        vanished = False
        for source, (target, sign) in targets.items():
            exponent = monomial[source]
            if not exponent:
                continue
            if not sign:
                vanished = True
                break
            exponents[target] += exponent
            if sign < 0 and exponent % 2:
                coefficient = -coefficient
        if vanished:
            continue
        key = tuple(exponents)
        value = terms.get(key, 0) + coefficient
        if value:
            terms[key] = value
        else:
            terms.pop(key, None)
    return Poly._raw(p.n, terms)


def substitute(p: Poly, mapping: Mapping[str, Sequence[Image]]) -> Poly:
    """
    Одновременная подстановка целых блоков, например {'x': [...], 't': [...]};
    по одному образу на каждую переменную подставляемого блока
    """
    n = p.n
    images: Dict[int, Poly] = {}
    for block, block_images in mapping.items():
        if len(block_images) != n:
            raise UsageError(f'Block {block} needs {n} images, got {len(block_images)}')
        offset = block_offset(block, n)
        for j, image in enumerate(block_images):
            images[offset + j] = _image_poly(image, n)

    signed = {source: _as_signed_variable(image) for source, image in images.items()}
    if all(target is not None for target in signed.values()):
        return _signed_rename(p, signed)

    powers: Dict[Tuple[int, int], Poly] = {}
    result: Dict[Monomial, Fraction] = {}
    for monomial, coefficient in p.terms.items():
        exponents = list(monomial)
        for source in images:
            exponents[source] = 0
        product = Poly._raw(n, {tuple(exponents): coefficient})
        for source, image in images.items():
            exponent = monomial[source]
            if exponent:
                if (source, exponent) not in powers:
                    powers[source, exponent] = image ** exponent
                product = product * powers[source, exponent]
                if product.is_zero:
                    break
        for key, value in product.terms.items():
            total = result.get(key, 0) + value
            if total:
                result[key] = total
            else:
                result.pop(key, None)
    return Poly._raw(n, result)


def substitute_block(p: Poly, block: str, images: Sequence[Image]) -> Poly:
    return substitute(p, {block: images})


def rename_block(p: Poly, source: str, target: str) -> Poly:
    """ f(..source..) -> f(..target..), например x -> y """
    return substitute_block(p, source, Poly.gens(target, p.n))


def specialize_to_zero(p: Poly, block: str) -> Poly:
    return substitute_block(p, block, [0] * p.n)


def weyl_act(p: Poly, w, block: str) -> Poly:
    """
    Левое действие элемента группы Вейля на одном блоке: block_j -> w(e_j) как
    линейная форма, поэтому weyl_act(weyl_act(p, a), b) == weyl_act(p, b * a)
    """
    n = p.n
    if w.root_system.ambient_dim != n:
        raise UsageError(f'{w.root_system.name} acts on {w.root_system.ambient_dim} coordinates, not {n}')
    offset = block_offset(block, n)
    targets = {
        offset + j: (offset + abs(image) - 1, 1 if image > 0 else -1)
        for j, image in enumerate(w.images)
    }
    return _signed_rename(p, targets)


def divide_exact(p: Poly, d: LinearForm, block: str) -> Poly:
    """
    q, для которого q * d == p. Деление идёт по старшей переменной v_k формы d:
    каждый член с v_k сокращается кратным d, начиная со старших степеней;
    остаток обязан быть нулевым.
    """
    if d.block != block:
        raise UsageError(f'Divisor lives in block {d.block}, not {block}')
    if d.is_zero:
        raise DivisibilityError('Division by the zero linear form')
    n = p.n
    offset = block_offset(block, n)
    k = next(j for j, coefficient in enumerate(d.coeffs) if coefficient)
    lead = offset + k
    lead_coefficient = d.coeffs[k]
    others = [(offset + j, coefficient) for j, coefficient in enumerate(d.coeffs) if coefficient and j != k]

    work = dict(p.terms)
    quotient: Dict[Monomial, Fraction] = {}
    top = max((monomial[lead] for monomial in work), default=0)
    for level in range(top, 0, -1):
        for monomial in [monomial for monomial in work if monomial[lead] == level]:
            factor = work.pop(monomial) / lead_coefficient
            reduced = list(monomial)
            reduced[lead] -= 1
            key = tuple(reduced)
            quotient[key] = quotient.get(key, 0) + factor
            for index, coefficient in others:
                shifted = list(key)
                shifted[index] += 1
                shifted = tuple(shifted)
                value = work.get(shifted, 0) - factor * coefficient
                if value:
                    work[shifted] = value
                else:
                    work.pop(shifted, None)
    if work:
        raise DivisibilityError(f'{to_text(p)} is not divisible by {to_text(d.to_poly(n))}')
    return Poly._raw(n, {monomial: c for monomial, c in quotient.items() if c})


def is_symmetric(p: Poly, block: str, rs) -> bool:
    from weyl_app.services import simple_reflection

    return all(weyl_act(p, simple_reflection(rs, i), block) == p for i in rs.indices)


# Text forms

def variable_name(index: int, n: int) -> str:
    return f'{BLOCKS[index // n]}{index % n + 1}'


def _monomial_text(monomial: Monomial, n: int) -> str:
    factors = []
    for index, exponent in enumerate(monomial):
        if exponent == 1:
            factors.append(variable_name(index, n))
        elif exponent > 1:
            factors.append(f'{variable_name(index, n)}^{exponent}')
    return '*'.join(factors)


def sorted_terms(p: Poly) -> List[Tuple[Monomial, Fraction]]:
    """ Градуированный лексикографический порядок, старшие члены первыми """
    return sorted(p.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)


def to_text(p: Poly) -> str:
    """ Каноническая запись, например 'x1^2*t2 - 3/2*y1' """
    if p.is_zero:
        return '0'
    parts = []
    for monomial, coefficient in sorted_terms(p):
        name = _monomial_text(monomial, p.n)
        if not name:
            term = str(coefficient)
        elif coefficient == 1:
            term = name
        elif coefficient == -1:
            term = f'-{name}'
        else:
            term = f'{coefficient}*{name}'
        if not parts:
            parts.append(term)
        elif term.startswith('-'):
            parts.append(f'- {term[1:]}')
        else:
            parts.append(f'+ {term}')
    return ' '.join(parts)


_TERM = re.compile(r'([+-]?)([^+-]+)')
_NUMBER = re.compile(r'^\d+(/\d+)?$')
_VARIABLE = re.compile(r'^([xyt])(\d+)(?:\^(\d+))?$')


def parse(text: str, n: int) -> Poly:
    """ Обратное к to_text """
    compact = re.sub(r'\s+', '', text or '')
    if not compact:
        raise UsageError('Empty polynomial text')
    result = Poly.zero(n)
    position = 0
    for match in _TERM.finditer(compact):
        if match.start() != position:
            raise UsageError(f'Cannot parse polynomial {text!r}')
        position = match.end()
        sign, body = match.groups()
        coefficient = Fraction(-1 if sign == '-' else 1)
        exponents = [0] * (3 * n)
        for factor in body.split('*'):
            if _NUMBER.match(factor):
                coefficient *= Fraction(factor)
                continue
            variable = _VARIABLE.match(factor)
            if not variable:
                raise UsageError(f'Bad factor {factor!r} in {text!r}')
            block, index, power = variable.groups()
            index = int(index)
            if not 1 <= index <= n:
                raise UsageError(f'Variable {block}{index} is outside 1..{n}')
            exponents[block_offset(block, n) + index - 1] += int(power or 1)
        result = result + Poly._raw(n, {tuple(exponents): coefficient})
    if position != len(compact):
        raise UsageError(f'Cannot parse polynomial {text!r}')
    return result


def to_sympy(p: Poly) -> sympy.Expr:
    symbols = [sympy.Symbol(f'{BLOCKS[index // p.n]}_{index % p.n + 1}') for index in range(3 * p.n)]
    expression = sympy.Integer(0)
    for monomial, coefficient in p.terms.items():
        term = sympy.Rational(coefficient.numerator, coefficient.denominator)
        for symbol, exponent in zip(symbols, monomial):
            if exponent:
                term *= symbol ** exponent
        expression += term
    return expression


def to_latex(p: Poly) -> str:
    return sympy.latex(to_sympy(p), order='grlex')
