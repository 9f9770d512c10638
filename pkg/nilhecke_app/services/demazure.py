"""
Операторы Демазюра (разделённые разности), действующие на одном блоке переменных
"""
from typing import Iterable

from poly_app.services import LinearForm, Poly, divide_exact, weyl_act
from weyl_app.services import RootSystem, WeylElement, simple_reflection


def simple_root_form(rs: RootSystem, i: int, block: str) -> LinearForm:
    """ alpha_i как линейная форма от ``block`` """
    return LinearForm.from_vector(block, rs.simple_roots[i - 1])


def demazure(rs: RootSystem, i: int, block: str, p: Poly) -> Poly:
    """ d_i p = (p - s_i p) / alpha_i """
    if p.is_zero:
        return p
    difference = p - weyl_act(p, simple_reflection(rs, i), block)
    if difference.is_zero:
        return difference
    return divide_exact(difference, simple_root_form(rs, i, block), block)


def demazure_word(rs: RootSystem, word: Iterable[int], block: str, p: Poly) -> Poly:
    """ d_{i1} ... d_{ir} p, первым применяется правый оператор """
    for i in reversed(list(word)):
        p = demazure(rs, i, block, p)
        if p.is_zero:
            break
    return p


def demazure_w(w: WeylElement, block: str, p: Poly) -> Poly:
    return demazure_word(w.root_system, w.word, block, p)
