"""Central finite differences with Richardson extrapolation.

Used for the coupling-strength derivatives dF/dlam, dE/dlam, dS/dlam and
for temperature derivatives of thermal averages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .ensemble import ThermoPotentials

__all__ = ["DiffConfig", "central_diff", "lambda_derivative_of", "lambda_derivatives"]


@dataclass(frozen=True)
class DiffConfig:
    """Step control for central differences.

    relative_step scales with max(|x0|, 1); richardson_levels is the number
    of step halvings fed into the extrapolation table (1 = plain central
    difference).
    """

    relative_step: float = 1e-5
    richardson_levels: int = 2

    def __post_init__(self):
        if not (1e-12 < self.relative_step < 1e-1):
            raise ValueError(f"relative_step out of range: {self.relative_step}")
        if not (1 <= self.richardson_levels <= 5):
            raise ValueError(f"richardson_levels out of range: {self.richardson_levels}")


def central_diff(f, x0: float, config: DiffConfig = DiffConfig()):
    """Derivative of f at x0 by central differences.

    Returns (derivative, error_estimate). With richardson_levels > 1 the
    step is halved repeatedly and the results extrapolated; the error
    estimate is the difference between the last two extrapolation levels
    (nan when only one level is available).
    """
    h0 = config.relative_step * max(abs(x0), 1.0)
    levels = config.richardson_levels

    def slope(h):
        fp = f(x0 + h)
        fm = f(x0 - h)
        if not (math.isfinite(fp) and math.isfinite(fm)):
            raise ValueError(f"function returned non-finite value near x0={x0}")
        return (fp - fm) / (2.0 * h)

    # diag[k] is the best estimate using steps h0 .. h0/2^k
    row = [slope(h0)]
    diag = [row[0]]
    for k in range(1, levels):
        new_row = [slope(h0 / 2.0**k)]
        for j in range(1, k + 1):
            p = 4.0**j
            new_row.append((p * new_row[j - 1] - row[j - 1]) / (p - 1.0))
        row = new_row
        diag.append(row[-1])

    if levels == 1:
        return diag[0], math.nan
    return diag[-1], abs(diag[-1] - diag[-2])


_SELECTORS = {
    "F": lambda p: p.free_energy,
    "E": lambda p: p.energy,
    "S": lambda p: p.entropy,
}


def lambda_derivative_of(selector: str, potentials_of_lambda, x0: float = 1.0,
                         config: DiffConfig = DiffConfig()) -> float:
    """Derivative of one potential (F, E or S) with respect to the coupling.

    ``potentials_of_lambda(lam)`` must return a ThermoPotentials bundle.
    """
    pick = _SELECTORS[selector]
    deriv, _ = central_diff(lambda lam: pick(potentials_of_lambda(lam)), x0, config)
    return deriv


def lambda_derivatives(potentials_of_lambda, x0: float = 1.0,
                       config: DiffConfig = DiffConfig()) -> ThermoPotentials:
    """dF/dlam, dE/dlam, dS/dlam (and d lnZ/dlam) from shared evaluations.

    One spectrum evaluation per abscissa serves all four derivatives, so
    this costs the same as a single lambda_derivative_of call.
    """
    cache = {}

    def at(lam):
        if lam not in cache:
            cache[lam] = potentials_of_lambda(lam)
        return cache[lam]

    d_lnz, _ = central_diff(lambda lam: at(lam).ln_z, x0, config)
    d_f, _ = central_diff(lambda lam: at(lam).free_energy, x0, config)
    d_e, _ = central_diff(lambda lam: at(lam).energy, x0, config)
    d_s, _ = central_diff(lambda lam: at(lam).entropy, x0, config)
    return ThermoPotentials(ln_z=d_lnz, free_energy=d_f, energy=d_e, entropy=d_s)
