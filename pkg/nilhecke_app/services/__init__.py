from nilhecke_app.services.demazure import demazure, demazure_w, demazure_word, simple_root_form
from nilhecke_app.services.nil_hecke import (
    NilHeckeElement,
    apply,
    leibniz_expand,
    move,
    nh_multiply,
    to_json,
    to_text_form,
    total_leibniz_polynomial_check,
    total_leibniz_sides,
)

__all__ = (
    'demazure', 'demazure_w', 'demazure_word', 'simple_root_form',
    'NilHeckeElement', 'apply', 'leibniz_expand', 'move', 'nh_multiply', 'to_json', 'to_text_form',
    'total_leibniz_polynomial_check', 'total_leibniz_sides',
)
