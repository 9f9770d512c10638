from weyl_app.services.root_system import (
    RootSystem,
    build_root_system,
    group_order,
    positive_root_count,
    reflection_images,
)
from weyl_app.services.weyl_group import (
    WeylElement,
    all_reduced_words,
    braid_check_words,
    bruhat_leq,
    enumerate_weyl,
    extreme_reduced_words,
    identity,
    inverse,
    is_left_descent,
    is_right_descent,
    left_descents,
    length,
    length_additive_factorizations,
    longest_element,
    minimal_coset_reps,
    multiply,
    one_line,
    parabolic_subgroup,
    parse_element,
    reduced_word,
    reflection,
    right_descents,
    simple_reflection,
    to_json,
    word_to_element,
)

__all__ = (
    'RootSystem', 'build_root_system', 'group_order', 'positive_root_count', 'reflection_images',
    'WeylElement', 'all_reduced_words', 'braid_check_words', 'bruhat_leq', 'enumerate_weyl', 'extreme_reduced_words',
    'identity', 'inverse', 'is_left_descent', 'is_right_descent', 'left_descents', 'length',
    'length_additive_factorizations', 'longest_element', 'minimal_coset_reps', 'multiply', 'one_line',
    'parabolic_subgroup', 'parse_element', 'reduced_word', 'reflection', 'right_descents', 'simple_reflection',
    'to_json', 'word_to_element',
)
