"""
Single-mode and two-mode quadrature fluctuations of S_N states (hbar = 1).

    Q = (a + a^dag)/sqrt2,          P = (a - a^dag)/(i sqrt2),        [Q, P] = i
    d1 = (a + b + a^dag + b^dag)/2^(3/2),
    d2 = (a + b - a^dag - b^dag)/(i 2^(3/2)),                          [d1, d2] = i/2

Vacuum levels are 1/2 for Q, P and 1/4 for d1, d2; a variance below its
vacuum level is squeezing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from logic.fock import A_DAG_B, N_A, N_B, SubspaceState, expectation_monomial, variance

SQUEEZE_TOL = 1e-12
SINGLE_MODE_VACUUM = 0.5
TWO_MODE_VACUUM = 0.25

# name -> (coefficients of the ladder combination, square of its prefactor)
QUADRATURES = {
    "Qa": ({"a": 1, "ad": 1}, 1 / 2),
    "Pa": ({"a": -1j, "ad": 1j}, 1 / 2),
    "Qb": ({"b": 1, "bd": 1}, 1 / 2),
    "Pb": ({"b": -1j, "bd": 1j}, 1 / 2),
    "D1": ({"a": 1, "b": 1, "ad": 1, "bd": 1}, 1 / 8),
    "D2": ({"a": -1j, "b": -1j, "ad": 1j, "bd": 1j}, 1 / 8),
}


@dataclass(frozen=True)
class QuadratureReport:
    varQa: float
    varPa: float
    varQb: float
    varPb: float
    varD1: float
    varD2: float
    squeezing_single: bool
    squeezing_two_mode: bool

    def single_mode(self):
        return (self.varQa, self.varPa, self.varQb, self.varPb)

    def two_mode(self):
        return (self.varD1, self.varD2)

    def as_row(self):
        return (*self.single_mode(), *self.two_mode())


def quadrature_report(state: SubspaceState) -> QuadratureReport:
    v = {name: scale * variance(state, coeffs) for name, (coeffs, scale) in QUADRATURES.items()}
    single = (v["Qa"], v["Pa"], v["Qb"], v["Pb"])
    two = (v["D1"], v["D2"])
    return QuadratureReport(
        *single, *two,
        squeezing_single=any(x < SINGLE_MODE_VACUUM - SQUEEZE_TOL for x in single),
        squeezing_two_mode=any(x < TWO_MODE_VACUUM - SQUEEZE_TOL for x in two),
    )


def closed_form_variances(state: SubspaceState):
    """(varQa, varQb, varD) from the S_N closed forms, for cross-checks.

    varQa = (1 + 2<n_a>)/2, varQb = (1 + 2<n_b>)/2 and
    varD1 = varD2 = [1 + N + <a b^dag> + <a^dag b>]/4.
    """
    n_a = expectation_monomial(state, N_A).real
    n_b = expectation_monomial(state, N_B).real
    hop = expectation_monomial(state, A_DAG_B)
    return 0.5 * (1 + 2 * n_a), 0.5 * (1 + 2 * n_b), 0.25 * (1 + state.N + 2 * hop.real)
