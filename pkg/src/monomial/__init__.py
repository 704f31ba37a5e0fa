from .catalecticant import catalecticant_bound, catalecticant_rank, catalecticant_ranks
from .extremal import (
    ExtremalResult,
    TableRow,
    extremal_rank_bruteforce,
    extremal_rank_ternary,
    partitions,
    rank_table,
    ternary_asymptotic_ratio,
)
from .ideal import (
    MonomialIdeal,
    ideal_colon_variable,
    ideal_intersect,
    monomial_perp,
    perp_generators,
)
from .model import CanonicalMonomial, Monomial, Partition, format_exponents, normalize, parse_monomial
from .rank import (
    RankBounds,
    ci_multiplicity,
    coprime_rank_bounds,
    generic_rank_naive,
    multiplicity_lower_bound,
    non_radical_multiplicity,
    secant_bound,
    trivial_rank_bound,
    waring_rank,
)

__all__ = [
    "CanonicalMonomial",
    "ExtremalResult",
    "Monomial",
    "MonomialIdeal",
    "Partition",
    "RankBounds",
    "TableRow",
    "catalecticant_bound",
    "catalecticant_rank",
    "catalecticant_ranks",
    "ci_multiplicity",
    "coprime_rank_bounds",
    "extremal_rank_bruteforce",
    "extremal_rank_ternary",
    "format_exponents",
    "generic_rank_naive",
    "ideal_colon_variable",
    "ideal_intersect",
    "monomial_perp",
    "multiplicity_lower_bound",
    "non_radical_multiplicity",
    "normalize",
    "parse_monomial",
    "partitions",
    "perp_generators",
    "rank_table",
    "secant_bound",
    "ternary_asymptotic_ratio",
    "trivial_rank_bound",
    "waring_rank",
]
