"""Adleman-Manders-Miller root extraction over finite fields."""

from .amm import (
    Counters,
    Params,
    RootReport,
    cbrt,
    coprime_root,
    extract,
    rth_root,
    sqrt_ext,
    sqrt_prime,
)
from .field import (
    FieldCtx,
    FieldElement,
    find_irreducible,
    is_irreducible,
    make_ext_field,
    make_field,
    make_prime_field,
)

__version__ = "0.1.0"
