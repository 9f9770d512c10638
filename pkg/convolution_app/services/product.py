"""
Произведение свёртки в координатах:

    f * g = d^y_{w0} [g(x, y) f(y, t)] |_{y = t}
    f * g = d^y_{w0} [g(y) f(y, t)] |_{y = t}     (g многочлен от t)
"""
from dataclasses import dataclass

from config.exceptions import UsageError
from nilhecke_app.services import demazure_w
from poly_app.services import Poly, rename_block, weyl_act
from schubert_app.services import double_schubert, pi1_star, pi2_star, type_a
from weyl_app.services import RootSystem, WeylElement, longest_element, multiply


@dataclass(frozen=True)
class ConvolutionClass:
    """ poly: многочлен от блоков x и t; rs: система корней типа A """
    rs: RootSystem
    poly: Poly

    def __post_init__(self):
        if self.rs.family != 'A':
            raise UsageError('The coordinate model of the convolution algebra is implemented for family A')
        if self.poly.n != self.rs.ambient_dim or 'y' in self.poly.blocks():
            raise UsageError(f'A convolution class of {self.rs.name} is a polynomial in x1..x{self.rs.ambient_dim}'
                             f' and t1..t{self.rs.ambient_dim}')

    @classmethod
    def of(cls, poly: Poly) -> 'ConvolutionClass':
        return cls(type_a(poly.n), poly)

    def __mul__(self, other: 'ConvolutionClass') -> 'ConvolutionClass':
        return convolve(self, other)


def _push_forward(rs: RootSystem, p: Poly) -> Poly:
    """ f(x, y, t) -> d^y_{w0} f |_{y = t} """
    return rename_block(demazure_w(longest_element(rs), 'y', p), 'y', 't')


def convolve(f: ConvolutionClass, g: ConvolutionClass) -> ConvolutionClass:
    if f.rs != g.rs:
        raise UsageError(f'Cannot convolve classes of {f.rs.name} and {g.rs.name}')
    return ConvolutionClass(f.rs, _push_forward(f.rs, pi2_star(g.poly) * pi1_star(f.poly)))


def act(f: ConvolutionClass, g: Poly) -> Poly:
    """ Действие модуля на многочлены от t """
    if set(g.blocks()) - {'t'}:
        raise UsageError('The convolution action takes polynomials in the t block')
    return _push_forward(f.rs, rename_block(g, 't', 'y') * pi1_star(f.poly))


def psi_class(w: WeylElement) -> ConvolutionClass:
    """ S_{w0 w}(x, w0 t) """
    w0 = longest_element(w.root_system)
    return ConvolutionClass(w.root_system, weyl_act(double_schubert(multiply(w0, w)).poly, w0, 't'))
