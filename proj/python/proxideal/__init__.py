"""Approximate ideals in descriptive relator spaces."""

from ._core import (
    DescriptiveSpace,
    Instance,
    ProxidealError,
    __version__,
    classical_oracle,
    classify,
    colon,
    enumerate_ideals,
    fixture_names,
    is_approx_ideal,
    is_one_absorbing_primary,
    is_primary,
    is_prime,
    is_semi_primary,
    quotient,
    radical,
    run_cli,
    run_suite,
    theorem_ids,
)

__all__ = [
    "DescriptiveSpace",
    "Instance",
    "ProxidealError",
    "__version__",
    "classical_oracle",
    "classify",
    "colon",
    "enumerate_ideals",
    "fixture_names",
    "is_approx_ideal",
    "is_one_absorbing_primary",
    "is_primary",
    "is_prime",
    "is_semi_primary",
    "quotient",
    "radical",
    "run_cli",
    "run_suite",
    "theorem_ids",
]
