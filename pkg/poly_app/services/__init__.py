from poly_app.services.polynomial import (
    BLOCKS,
    LinearForm,
    Poly,
    add,
    block_offset,
    divide_exact,
    is_symmetric,
    mul,
    parse,
    rename_block,
    scale,
    sorted_terms,
    specialize_to_zero,
    substitute,
    substitute_block,
    to_latex,
    to_text,
    weyl_act,
)
from poly_app.services.sampling import monomials_of_degree, monomials_up_to, random_homogeneous, random_poly

__all__ = (
    'BLOCKS', 'LinearForm', 'Poly', 'add', 'block_offset', 'divide_exact', 'is_symmetric', 'mul', 'parse',
    'rename_block', 'scale', 'sorted_terms', 'specialize_to_zero', 'substitute', 'substitute_block', 'to_latex',
    'to_text', 'weyl_act', 'monomials_of_degree', 'monomials_up_to', 'random_homogeneous', 'random_poly',
)
