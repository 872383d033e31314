"""Python bindings for the kms C++ library."""

from ._core import (
    KmsError,
    __version__,
    approximation_check,
    cfunction,
    classify,
    dl_apply,
    gk_census,
    iwahori_census,
    poincare,
    positive_roots,
    satake,
    spherical_census,
    upsilon,
    verify_all,
    weyl_ball,
)

__all__ = [
    "KmsError",
    "__version__",
    "approximation_check",
    "cfunction",
    "classify",
    "dl_apply",
    "gk_census",
    "iwahori_census",
    "poincare",
    "positive_roots",
    "satake",
    "spherical_census",
    "upsilon",
    "verify_all",
    "weyl_ball",
]
