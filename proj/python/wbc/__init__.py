"""Exact computer algebra for walled Brauer-Clifford superalgebras.

The heavy lifting happens in the C++ extension; elements travel as strings
in the engine's canonical syntax (``e1``, ``x1``, ``c[1,0] D{...} cb[0,1]``,
coefficients in ``Q[w1, w3, ...]``).
"""

from wbc._core import (
    AdmissibilityError,
    FuelError,
    ParseError,
    ShapeError,
    admissible_stream,
    basis,
    basis_count,
    cyclo_count,
    delta_to_omega,
    derived_g,
    is_admissible,
    mul,
    omega_bar,
    omega_to_delta,
    oracle_rank,
    reduce,
    sigma,
    tau,
    verify,
)

__all__ = [
    "AdmissibilityError",
    "FuelError",
    "ParseError",
    "ShapeError",
    "admissible_stream",
    "basis",
    "basis_count",
    "cyclo_count",
    "delta_to_omega",
    "derived_g",
    "is_admissible",
    "mul",
    "omega_bar",
    "omega_to_delta",
    "oracle_rank",
    "reduce",
    "sigma",
    "tau",
    "verify",
]
