"""Products of ladder representations, KL multiplicities and verification sweeps."""

from ._ladderprod import (
    InvalidArgument,
    TheoryViolation,
    Unsupported,
    census,
    decompose,
    decompose_irreducibles,
    indicator,
    is_ladder,
    jacquet_pairs,
    kl_poly,
    ladder_cover,
    load_cache,
    normalize,
    parse,
    save_cache,
    verify_conjecture,
    verify_identity,
    width,
)

__all__ = [
    "InvalidArgument",
    "TheoryViolation",
    "Unsupported",
    "census",
    "decompose",
    "decompose_irreducibles",
    "indicator",
    "is_ladder",
    "jacquet_pairs",
    "kl_poly",
    "ladder_cover",
    "load_cache",
    "normalize",
    "parse",
    "save_cache",
    "verify_conjecture",
    "verify_identity",
    "width",
]
