"""Riemann-Silberstein wave packets and their position-momentum uncertainty."""

from ._core import (
    ELECTROMAGNETIC_BOUND,
    DomainError,
    Error,
    SaturatingFieldSpec,
    analytic_eigenvalue,
    dawson,
    erfi,
    laguerre,
    massless_bound,
    radial_spectrum,
    run,
    saturating_field,
    simplest_field,
    simplest_spec,
    spreading,
    uncertainty_product,
)

__all__ = [
    "ELECTROMAGNETIC_BOUND",
    "DomainError",
    "Error",
    "SaturatingFieldSpec",
    "analytic_eigenvalue",
    "dawson",
    "erfi",
    "laguerre",
    "massless_bound",
    "radial_spectrum",
    "run",
    "saturating_field",
    "simplest_field",
    "simplest_spec",
    "spreading",
    "uncertainty_product",
]
