from .series import (
    CIData,
    Lemma22Result,
    hilbert_function,
    hilbert_function_bruteforce,
    hilbert_multiplicity,
    hilbert_series,
    initial_segment_check,
    lemma22_check,
    lemma_ci,
    socle_degree,
)

__all__ = [
    "CIData",
    "Lemma22Result",
    "hilbert_function",
    "hilbert_function_bruteforce",
    "hilbert_multiplicity",
    "hilbert_series",
    "initial_segment_check",
    "lemma22_check",
    "lemma_ci",
    "socle_degree",
]
