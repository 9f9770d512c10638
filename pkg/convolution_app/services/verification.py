"""
Проверки свёртки: какой класс клетки Шуберта действует каким оператором
Демазюра, полное тождество Лейбница в форме свёртки, ассоциативность и
спуск на фактор
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import sympy

from config.exceptions import ConventionError
from convolution_app.services.product import ConvolutionClass, act, convolve, psi_class
from nilhecke_app.services import demazure_w
from poly_app.services import Poly, monomials_up_to, rename_block, specialize_to_zero, weyl_act
from schubert_app.services import (
    TWO_BLOCK,
    IdealSpec,
    IdentityReport,
    coinvariant_normal_form,
    ideal_member,
    pi1_star,
    staircase_monomials,
    type_a,
)
from weyl_app.services import RootSystem, WeylElement, enumerate_weyl, inverse, longest_element, multiply

logger = logging.getLogger(__name__)

ElementMap = Callable[[WeylElement, WeylElement], WeylElement]

INDEX_MAPS: Dict[str, ElementMap] = {
    'identity': lambda w, w0: w,
    'inverse': lambda w, w0: inverse(w),
    'conjugate': lambda w, w0: multiply(multiply(w0, w), w0),
    'inverse-conjugate': lambda w, w0: multiply(multiply(w0, inverse(w)), w0),
    'left-w0': lambda w, w0: multiply(w0, w),
    'right-w0': lambda w, w0: multiply(w, w0),
}

SIGNS: Dict[str, Callable[[WeylElement], int]] = {
    'plus': lambda w: 1,
    'minus': lambda w: -1,
    'length': lambda w: -1 if w.length % 2 else 1,
}


@dataclass(frozen=True)
class ActionConvention:
    """
    Соглашение act(psi_class(sigma(w)), g) = sign(w) * d_{tau(w)} g

    sigma, tau: имена отображений из INDEX_MAPS
    sign: имя знака из SIGNS
    """
    sigma: str
    tau: str
    sign: str

    def to_json(self) -> dict:
        return {'sigma': self.sigma, 'tau': self.tau, 'sign': self.sign}

    @classmethod
    def from_json(cls, data: dict) -> 'ActionConvention':
        return cls(str(data['sigma']), str(data['tau']), str(data['sign']))


def candidate_actions() -> List[ActionConvention]:
    return [ActionConvention(sigma, tau, sign) for sigma in INDEX_MAPS for tau in INDEX_MAPS for sign in SIGNS]


def _behaviour(candidate: ActionConvention, elements: List[WeylElement], w0: WeylElement) -> frozenset:
    """
    Множество троек (sigma(w), tau(w), sign(w)). Кандидаты с одинаковым
    множеством утверждают одно и то же, например (inverse, inverse, plus) и
    (identity, identity, plus)
    """
    sigma, tau, sign = INDEX_MAPS[candidate.sigma], INDEX_MAPS[candidate.tau], SIGNS[candidate.sign]
    return frozenset((sigma(w, w0), tau(w, w0), sign(w)) for w in elements)


def search_action_convention(n: int) -> Tuple[List[ActionConvention], List[dict]]:
    """
    Кандидаты, для которых act(psi_class(sigma(w)), g) = sign(w) d_{tau(w)} g при
    всех w и всех t-мономах g степени <= l(w0). Совпадающие на W кандидаты
    объединяются и представлены первым из них
    """
    rs = type_a(n)
    elements = enumerate_weyl(rs)
    w0 = longest_element(rs)
    spanning = monomials_up_to(n, ('t',), w0.length)
    actions = {v: [act(psi_class(v), g) for g in spanning] for v in elements}
    operators = {w: [demazure_w(w, 't', g) for g in spanning] for w in elements}

    verdicts, matches, seen = [], [], {}
    for candidate in candidate_actions():
        behaviour = _behaviour(candidate, elements, w0)
        if behaviour in seen:
            verdicts.append({**candidate.to_json(), 'same_as': seen[behaviour].to_json()})
            continue
        seen[behaviour] = candidate
        matched = all(
            actions[v] == [value * sign for value in operators[u]] for v, u, sign in behaviour
        )
        logger.info('convolution action %s at n=%s: %s', candidate.to_json(), n, matched)
        verdicts.append({**candidate.to_json(), 'match': matched})
        if matched:
            matches.append(candidate)
    return matches, verdicts


def verify_demazure_action(n: int) -> IdentityReport:
    matches, verdicts = search_action_convention(n)
    if not matches:
        raise ConventionError(f'No psi-class convention reproduces the Demazure operators at n={n}')
    details = {'n': n, 'candidates': verdicts}
    if len(matches) == 1:
        details['convention'] = matches[0].to_json()
    return IdentityReport.for_element(
        None, 'convolution', passed=len(matches) == 1,
        witnesses=[] if len(matches) == 1 else [match.to_json() for match in matches],
        substitutions=len(monomials_up_to(n, ('t',), longest_element(type_a(n)).length)),
        details=details,
    )


def total_leibniz_convolution_sides(f: ConvolutionClass, g: Poly) -> Tuple[Poly, Poly]:
    """
    lhs = f * g
    rhs = (-1)^{w0} sum_u (-1)^u d^y_u g(y) d^y_{u w0} f(w0 y, t) |_{y = t}
    """
    rs = f.rs
    w0 = longest_element(rs)
    g_y = rename_block(g, 't', 'y')
    f_twisted = weyl_act(pi1_star(f.poly), w0, 'y')
    rhs = Poly.zero(rs.ambient_dim)
    for u in enumerate_weyl(rs):
        left = demazure_w(u, 'y', g_y)
        if left.is_zero:
            continue
        right = demazure_w(multiply(u, w0), 'y', f_twisted)
        rhs = rhs + left * right * (-1 if u.length % 2 else 1)
    rhs = rename_block(rhs * (-1 if w0.length % 2 else 1), 'y', 't')
    return act(f, g), rhs


def verify_total_leibniz_via_convolution(f: ConvolutionClass, g: Poly, seed: Optional[int] = None) -> IdentityReport:
    lhs, rhs = total_leibniz_convolution_sides(f, g)
    details = {'seed': seed} if seed is not None else {}
    return IdentityReport.for_element(
        None, 'total-leibniz-convolution', passed=lhs == rhs, witnesses=[] if lhs == rhs else [str(lhs - rhs)],
        details=details,
    )


def commuting_square_check(rs: RootSystem, g: Poly) -> List[list]:
    """ Элементы v, для которых d_{w0 v w0}(w0 g) != w0((-1)^v d_v g), в виде слов """
    w0 = longest_element(rs)
    failures = []
    for v in enumerate_weyl(rs):
        lhs = demazure_w(multiply(multiply(w0, v), w0), 't', weyl_act(g, w0, 't'))
        rhs = weyl_act(demazure_w(v, 't', g), w0, 't') * (-1 if v.length % 2 else 1)
        if lhs != rhs:
            failures.append(list(v.word))
    return failures


def associativity_check(a: ConvolutionClass, b: ConvolutionClass, c: ConvolutionClass) -> bool:
    """ (a * b) * c = a * (b * c) по модулю идеала двух блоков """
    difference = convolve(convolve(a, b), c).poly - convolve(a, convolve(b, c)).poly
    return ideal_member(difference, IdealSpec(TWO_BLOCK, a.rs))


def descends_to_quotient_check(f: ConvolutionClass, g: ConvolutionClass, k: Poly) -> bool:
    """ Для k из идеала двух блоков f + k и f дают одинаковые произведения с обеих сторон """
    spec = IdealSpec(TWO_BLOCK, f.rs)
    if not ideal_member(k, spec):
        raise ConventionError('descends_to_quotient_check needs an element of the ideal')
    shifted = ConvolutionClass(f.rs, f.poly + k)
    left = convolve(shifted, g).poly - convolve(f, g).poly
    right = convolve(g, shifted).poly - convolve(g, f).poly
    return ideal_member(left, spec) and ideal_member(right, spec)


def psi_basis_rank(n: int) -> int:
    """ Ранг {psi_class(w)|_{t=0}} в алгебре коинвариантов; n! для базиса """
    columns = [next(iter(monomial.terms)) for monomial in staircase_monomials(n)]
    rows = []
    for w in enumerate_weyl(type_a(n)):
        reduced = coinvariant_normal_form(specialize_to_zero(psi_class(w).poly, 't'), 'x')
        rows.append([
            sympy.Rational(reduced.terms[c].numerator, reduced.terms[c].denominator) if c in reduced.terms else 0
            for c in columns
        ])
    return sympy.Matrix(rows).rank()
