from convolution_app.services.product import ConvolutionClass, act, convolve, psi_class
from convolution_app.services.verification import (
    ActionConvention,
    associativity_check,
    candidate_actions,
    commuting_square_check,
    descends_to_quotient_check,
    psi_basis_rank,
    search_action_convention,
    total_leibniz_convolution_sides,
    verify_demazure_action,
    verify_total_leibniz_via_convolution,
)
