from .apolarity import annihilates, apply_differential, catalecticant_matrix, ideal_annihilates
from .decompose import Decomposition, DecompositionTerm, decompose, decompose_canonical
from .document import DecompositionDocument, from_document, from_json, to_document, to_json
from .expand import MultiCycloPoly, expand_linear_powers, expand_power_sum, verify
from .gamma import gamma_closed_form, multinomial, multinomial_table, solve_gamma_system
from .linear_product import (
    LinearProductCertificate,
    decompose_linear_product,
    expand_product,
    parse_linear_forms,
    verify_linear_product,
)
from .points import (
    cyclotomic_order,
    decomposition_points,
    point_ideal_generators,
    point_ideal_in_perp,
)

__all__ = [
    "Decomposition",
    "DecompositionDocument",
    "DecompositionTerm",
    "LinearProductCertificate",
    "MultiCycloPoly",
    "annihilates",
    "apply_differential",
    "catalecticant_matrix",
    "cyclotomic_order",
    "decompose",
    "decompose_canonical",
    "decompose_linear_product",
    "decomposition_points",
    "expand_linear_powers",
    "expand_power_sum",
    "expand_product",
    "from_document",
    "from_json",
    "gamma_closed_form",
    "ideal_annihilates",
    "multinomial",
    "multinomial_table",
    "parse_linear_forms",
    "point_ideal_generators",
    "point_ideal_in_perp",
    "solve_gamma_system",
    "to_document",
    "to_json",
    "verify",
    "verify_linear_product",
]
