"""Distance estimation and identity testing for poset linear-extension samplers."""

from fractions import Fraction

from ._cubeprobe import (
    BudgetExhausted,
    CycleError,
    Error,
    InvalidParameter,
    ParseError,
    Poset,
    TooLarge,
    derive_params,
    estimate,
    run_cli,
    sample,
    test,
)
from ._cubeprobe import exact_tv as _exact_tv


def exact_tv(poset, p="biased-equal", q="uniform"):
    """Exact distance between two sampler presets, as a Fraction."""
    num, den = _exact_tv(poset, p, q)
    return Fraction(num, den)


__all__ = [
    "BudgetExhausted",
    "CycleError",
    "Error",
    "InvalidParameter",
    "ParseError",
    "Poset",
    "TooLarge",
    "derive_params",
    "estimate",
    "exact_tv",
    "run_cli",
    "sample",
    "test",
]
