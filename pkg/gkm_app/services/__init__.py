from gkm_app.services.classes import (
    DEFAULT_CONVENTION,
    GKMClass,
    GKMConvention,
    build_table,
    constant_class,
    demazure_gkm,
    gkm_table,
    is_gkm_compatible,
    point_class,
    restriction_witnesses,
    root_form,
    schubert_gkm,
)
from gkm_app.services.conventions import candidate_conventions, candidate_verdict, search_convention
from gkm_app.services.verification import (
    verify_antipode_gkm,
    verify_characterization,
    verify_coproduct_gkm,
    verify_type_a_agreement,
)
