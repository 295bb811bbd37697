"""One-dimensional Ising chain with periodic boundary conditions.

H = -J sum_i s_i s_{i+1} - h sum_i s_i with s_i = +-1 and s_{N+1} = s_1
(each bond counted once; for N = 2 both coincident bonds are counted,
which is the convention under which the transfer-matrix formula matches
brute-force enumeration).

Two independent couplings modulate the Hamiltonian: lambda1 scales the
bond term, lambda2 the field term. Thermal averages of either term follow
from the coupling derivative of the free energy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from ..ensemble import EnsemblePoint, ThermoPotentials
from ..numdiff import DiffConfig, central_diff

__all__ = [
    "IsingChain",
    "ising_log_z",
    "ising_potentials",
    "ising_total_energy",
    "ising_hj_average",
    "ising_hh_average",
]


@dataclass(frozen=True)
class IsingChain:
    """Chain parameters; energies and temperatures in units of the field h."""

    coupling_j: float = 2.0
    field_h: float = 1.0
    n_spins: int = 10
    lambda1: float = 1.0
    lambda2: float = 1.0

    def __post_init__(self):
        if self.n_spins < 2:
            raise ValueError(f"need at least 2 spins, got {self.n_spins}")
        for name in ("coupling_j", "field_h", "lambda1", "lambda2"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


def _transfer_terms(params: IsingChain, beta: float):
    """Pieces of the transfer-matrix eigenvalues for the scaled couplings."""
    jj = params.lambda1 * params.coupling_j
    hh = params.lambda2 * params.field_h
    a = beta * hh
    c = math.cosh(a)
    s = math.sinh(a)
    q = math.exp(-4.0 * beta * jj)
    r = math.sqrt(s * s + q)
    return jj, hh, a, c, s, q, r


def _one_plus_ratio_pow(c: float, lam_plus: float, ratio: float, n: int):
    """(1 + ratio^n, its log) without cancellation.

    For ratio near -1 (negative subdominant eigenvalue, odd n) the naive
    1 + ratio^n loses all precision; factoring the geometric sum,
    1 + r^n = (1 + r) sum_k (-r)^k with 1 + r = 2 cosh(beta h')/lam_+,
    keeps every factor positive and well conditioned.
    """
    if ratio >= 0.0 or n % 2 == 0:
        t = ratio**n
        return 1.0 + t, math.log1p(t)
    one_plus_r = 2.0 * c / lam_plus
    geom = sum((-ratio) ** k for k in range(n))
    return one_plus_r * geom, math.log(one_plus_r) + math.log(geom)


def ising_log_z(params: IsingChain, point: EnsemblePoint) -> float:
    """ln Z from the two transfer-matrix eigenvalues, overflow-safe.

    Z = e^{N beta J'} (lam_+^N + lam_-^N) with lam_+- = cosh(beta h') +- R
    and R = sqrt(sinh^2(beta h') + e^{-4 beta J'}); |lam_-| <= lam_+ always,
    so the subdominant branch enters through a bounded ratio.
    """
    n = params.n_spins
    beta = point.beta
    jj, _, _, c, _, _, r = _transfer_terms(params, beta)
    lam_plus = c + r
    ratio = (c - r) / lam_plus
    _, log_term = _one_plus_ratio_pow(c, lam_plus, ratio, n)
    return n * beta * jj + n * math.log(lam_plus) + log_term


def ising_total_energy(params: IsingChain, point: EnsemblePoint) -> float:
    """E = -d lnZ/d beta via the analytic beta-derivative of the transfer form.

    Closed form, no numerical differentiation, so the energy curve carries
    no finite-difference noise.
    """
    n = params.n_spins
    beta = point.beta
    jj, hh, _, c, s, q, r = _transfer_terms(params, beta)
    lam_plus = c + r
    lam_minus = c - r
    # d/d beta of cosh, sinh, e^{-4 beta J'} and R
    dr = (s * c * hh - 2.0 * jj * q) / r
    dlam_plus = s * hh + dr
    dlam_minus = s * hh - dr
    ratio = lam_minus / lam_plus
    dratio = (dlam_minus * lam_plus - lam_minus * dlam_plus) / (lam_plus * lam_plus)
    one_plus, _ = _one_plus_ratio_pow(c, lam_plus, ratio, n)
    dlnz = n * jj + n * dlam_plus / lam_plus
    dlnz += n * ratio ** (n - 1) * dratio / one_plus
    return -dlnz


def ising_potentials(params: IsingChain, point: EnsemblePoint) -> ThermoPotentials:
    """lnZ, F, E, S at one temperature; E from the analytic beta-derivative."""
    beta = point.beta
    ln_z = ising_log_z(params, point)
    free_energy = -ln_z / beta
    energy = ising_total_energy(params, point)
    entropy = beta * (energy - free_energy)
    return ThermoPotentials(ln_z=ln_z, free_energy=free_energy, energy=energy, entropy=entropy)


def _free_energy(params: IsingChain, point: EnsemblePoint) -> float:
    return -ising_log_z(params, point) / point.beta


def ising_hj_average(params: IsingChain, point: EnsemblePoint,
                     config: DiffConfig = DiffConfig()) -> float:
    """Thermal average of the bond term, -J sum s_i s_{i+1}.

    Obtained as dF/dlambda1 at lambda1 = 1.
    """
    if params.lambda1 != 1.0:
        raise ValueError("bond average is defined at lambda1 = 1")
    deriv, _ = central_diff(
        lambda l1: _free_energy(replace(params, lambda1=l1), point), 1.0, config
    )
    return deriv


def ising_hh_average(params: IsingChain, point: EnsemblePoint,
                     config: DiffConfig = DiffConfig()) -> float:
    """Thermal average of the field term, -h sum s_i, as dF/dlambda2 at 1."""
    if params.lambda2 != 1.0:
        raise ValueError("field average is defined at lambda2 = 1")
    deriv, _ = central_diff(
        lambda l2: _free_energy(replace(params, lambda2=l2), point), 1.0, config
    )
    return deriv
