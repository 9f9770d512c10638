"""
Нильгеккова алгебра в нормальной форме sum_w c_w(x) d_w, коэффициенты слева
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

from config.exceptions import UsageError
from nilhecke_app.services.demazure import demazure, demazure_w
from poly_app.services import Poly, to_text, weyl_act
from weyl_app.services import (
    RootSystem,
    WeylElement,
    enumerate_weyl,
    identity,
    is_left_descent,
    longest_element,
    multiply,
    simple_reflection,
)


@dataclass(frozen=True)
class NilHeckeElement:
    """
    Конечная сумма c_w(x) d_w

    rs: система корней операторов
    coeffs: WeylElement -> ненулевой многочлен от блока x
    """
    rs: RootSystem
    coeffs: Dict[WeylElement, Poly] = field(default_factory=dict)

    def __post_init__(self):
        for w, c in self.coeffs.items():
            if w.root_system != self.rs:
                raise UsageError(f'd_w for {w.root_system.name} in a {self.rs.name} nil-Hecke element')
            if c.blocks() not in ((), ('x',)):
                raise UsageError(f'Nil-Hecke coefficients live in the x block, got {to_text(c)}')
        object.__setattr__(self, 'coeffs', {w: c for w, c in self.coeffs.items() if not c.is_zero})

    @classmethod
    def zero(cls, rs: RootSystem) -> 'NilHeckeElement':
        return cls(rs, {})

    @classmethod
    def polynomial(cls, rs: RootSystem, f: Poly) -> 'NilHeckeElement':
        """ f * d_e """
        return cls(rs, {identity(rs): f})

    @classmethod
    def operator(cls, w: WeylElement) -> 'NilHeckeElement':
        """ 1 * d_w """
        return cls(w.root_system, {w: Poly.one(w.root_system.ambient_dim)})

    @classmethod
    def generator(cls, rs: RootSystem, i: int) -> 'NilHeckeElement':
        return cls.operator(simple_reflection(rs, i))

    @property
    def n(self) -> int:
        return self.rs.ambient_dim

    def coefficient(self, w: WeylElement) -> Poly:
        return self.coeffs.get(w, Poly.zero(self.n))

    def terms(self) -> List[Tuple[WeylElement, Poly]]:
        """ Члены в фиксированном порядке на W """
        return sorted(self.coeffs.items(), key=lambda item: item[0].sort_key)

    def __add__(self, other: 'NilHeckeElement') -> 'NilHeckeElement':
        _same_algebra(self, other)
        coeffs = dict(self.coeffs)
        for w, c in other.coeffs.items():
            coeffs[w] = coeffs.get(w, Poly.zero(self.n)) + c
        return NilHeckeElement(self.rs, coeffs)

    def __neg__(self) -> 'NilHeckeElement':
        return self.scale(-1)

    def __sub__(self, other: 'NilHeckeElement') -> 'NilHeckeElement':
        return self + (-other)

    def __mul__(self, other: 'NilHeckeElement') -> 'NilHeckeElement':
        return nh_multiply(self, other)

    def scale(self, c) -> 'NilHeckeElement':
        return NilHeckeElement(self.rs, {w: p * c for w, p in self.coeffs.items()})

    def __str__(self) -> str:
        return to_text_form(self)


def _same_algebra(a: NilHeckeElement, b: NilHeckeElement) -> None:
    if a.rs != b.rs:
        raise UsageError(f'Cannot combine nil-Hecke elements of {a.rs.name} and {b.rs.name}')


def _accumulate(coeffs: Dict[WeylElement, Poly], w: WeylElement, c: Poly) -> None:
    if not c.is_zero:
        coeffs[w] = coeffs[w] + c if w in coeffs else c


def leibniz_expand(rs: RootSystem, i: int, f: Poly) -> NilHeckeElement:
    """ d_i f = (d_i f) d_e + (s_i f) d_i """
    s = simple_reflection(rs, i)
    return NilHeckeElement(rs, {
        identity(rs): demazure(rs, i, 'x', f),
        s: weyl_act(f, s, 'x'),
    })


def _left_generator(i: int, element: NilHeckeElement) -> NilHeckeElement:
    """ d_i * element, почленно по правилу Лейбница """
    rs = element.rs
    s = simple_reflection(rs, i)
    coeffs: Dict[WeylElement, Poly] = {}
    for z, c in element.coeffs.items():
        _accumulate(coeffs, z, demazure(rs, i, 'x', c))
        if not is_left_descent(z, i):
            _accumulate(coeffs, multiply(s, z), weyl_act(c, s, 'x'))
    return NilHeckeElement(rs, coeffs)


def move(rs: RootSystem, word: Iterable[int], f: Poly) -> NilHeckeElement:
    """ Нормальная форма d_{i1} ... d_{ir} * f """
    element = NilHeckeElement.polynomial(rs, f)
    for i in reversed(list(word)):
        element = _left_generator(i, element)
        if not element.coeffs:
            break
    return element


def nh_multiply(a: NilHeckeElement, b: NilHeckeElement) -> NilHeckeElement:
    """
    Нормальная форма a * b: каждый d_u из ``a`` переносится через коэффициенты
    ``b``, затем d_z d_v = d_{zv} для аддитивных по длине пар и 0 иначе
    """
    _same_algebra(a, b)
    rs = a.rs
    coeffs: Dict[WeylElement, Poly] = {}
    for u, a_u in a.coeffs.items():
        for v, b_v in b.coeffs.items():
            for z, e_z in move(rs, u.word, b_v).coeffs.items():
                zv = multiply(z, v)
                if zv.length == z.length + v.length:
                    _accumulate(coeffs, zv, a_u * e_z)
    return NilHeckeElement(rs, coeffs)


def apply(element: NilHeckeElement, g: Poly) -> Poly:
    """ Действие на многочленах от блока x: sum_w c_w * d_w(g) """
    result = Poly.zero(element.n)
    for w, c in element.coeffs.items():
        result = result + c * demazure_w(w, 'x', g)
    return result


def total_leibniz_sides(rs: RootSystem, F: Poly) -> Tuple[NilHeckeElement, NilHeckeElement]:
    """
    lhs = (-1)^{l(w0)} d_{w0} o F(w0 x)
    rhs = sum_w (d_{w w0} F) (-1)^{l(w)} d_w
    """
    if F.blocks() not in ((), ('x',)):
        raise UsageError(f'F must be an x-block polynomial, got {to_text(F)}')
    w0 = longest_element(rs)
    sign = -1 if w0.length % 2 else 1
    lhs = move(rs, w0.word, weyl_act(F, w0, 'x')).scale(sign)

    coeffs = {}
    for w in enumerate_weyl(rs):
        c = demazure_w(multiply(w, w0), 'x', F)
        coeffs[w] = c * (-1 if w.length % 2 else 1)
    return lhs, NilHeckeElement(rs, coeffs)


def total_leibniz_polynomial_check(rs: RootSystem, F: Poly, G: Poly) -> Tuple[Poly, Poly]:
    """ Обе части (-1)^{w0} d_{w0}(F(w0 x) G(x)) = sum_w d_{w w0}F(x) (-1)^w d_w G(x) """
    w0 = longest_element(rs)
    sign = -1 if w0.length % 2 else 1
    lhs = demazure_w(w0, 'x', weyl_act(F, w0, 'x') * G) * sign
    rhs = Poly.zero(rs.ambient_dim)
    for w in enumerate_weyl(rs):
        term = demazure_w(multiply(w, w0), 'x', F)
        if not term.is_zero:
            rhs = rhs + term * demazure_w(w, 'x', G) * (-1 if w.length % 2 else 1)
    return lhs, rhs


def to_text_form(element: NilHeckeElement) -> str:
    """ '(c_w) d[word] + ...' в фиксированном порядке на W """
    if not element.coeffs:
        return '0'
    return ' + '.join(f'({to_text(c)}) d[{",".join(map(str, w.word))}]' for w, c in element.terms())


def to_json(element: NilHeckeElement) -> List[list]:
    return [[list(w.word), to_text(c)] for w, c in element.terms()]
