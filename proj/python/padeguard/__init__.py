"""Padé approximation by SVD with conditioning diagnostics and spurious pole certificates."""

from ._core import (
    DegenerateInput,
    InvalidInput,
    PadeError,
    PadeResult,
    RankDeficient,
    certify,
    diagnostics,
    epsilon_gcd,
    kappa_cm,
    norm_sandwiches,
    pade,
    robust_pade,
    sweep,
    sweep_csv,
    taylor_f1,
    taylor_f2,
    taylor_f3,
)

__all__ = [
    "DegenerateInput",
    "InvalidInput",
    "PadeError",
    "PadeResult",
    "RankDeficient",
    "certify",
    "diagnostics",
    "epsilon_gcd",
    "kappa_cm",
    "norm_sandwiches",
    "pade",
    "robust_pade",
    "sweep",
    "sweep_csv",
    "taylor_f1",
    "taylor_f2",
    "taylor_f3",
]
