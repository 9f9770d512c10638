from schubert_app.services.double_schubert import (
    DoubleSchubert,
    double_schubert,
    localize,
    mu_star,
    nu_star,
    pi1_star,
    pi2_star,
    point_images,
    schubert_table,
    single_schubert,
    swap_blocks,
    top_double_schubert,
    top_polynomial,
    type_a,
)
from schubert_app.services.ideals import (
    SPLIT,
    THREE_BLOCK,
    TWO_BLOCK,
    IdealSpec,
    MembershipResult,
    coinvariant_normal_form,
    elementary_symmetric,
    ideal_member,
    linear_algebra_member,
    membership,
    staircase_monomials,
)
from schubert_app.services.reports import IdentityReport
from schubert_app.services.verification import (
    antipode_difference,
    coproduct_difference,
    localization_values,
    nu_star_sign,
    schubert_basis_rank,
    specialized_difference,
    verify_antipode,
    verify_characterization,
    verify_coproduct,
    verify_delta,
    verify_demazure_compatibility,
    verify_specialized,
    verify_support,
    verify_symmetrization,
)
