"""Self-verification suites: each check measures a deviation against a bound.

Automates the agreement checks between independent computation routes:
closed forms vs. the generic spectrum engine, transfer matrix vs.
exhaustive enumeration, block decomposition vs. full Fock diagonalization,
and the free-energy derivative vs. directly computed thermal averages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ensemble import EnsemblePoint, potentials
from .jacobi import jacobi_eigen
from .models.ho import (
    HarmonicOscillator,
    ho_closed_potentials,
    ho_entropy_lambda_derivative,
    ho_potential_average,
    ho_spectrum,
    truncation_level,
)
from .models.ising import (
    IsingChain,
    ising_hh_average,
    ising_hj_average,
    ising_log_z,
    ising_total_energy,
)
from .models.lipkin import (
    LipkinModel,
    lipkin_h1_average_direct,
    lipkin_spectrum,
    multiplicity,
)
from .numdiff import DiffConfig, central_diff, lambda_derivative_of, lambda_derivatives
from .oracles import ising_enumerate, lipkin_fock
from .sweep import temperature_grid

__all__ = ["CheckResult", "verify_ho", "verify_ising", "verify_lipkin", "verify_all"]


@dataclass(frozen=True)
class CheckResult:
    """Measured deviation of one check against its tolerance."""

    name: str
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


def _max_dev(pairs) -> float:
    return float(max(abs(a - b) for a, b in pairs))


def verify_ho(config: DiffConfig = DiffConfig()) -> list[CheckResult]:
    """Oscillator: generic engine vs. closed forms, virial, limits."""
    checks = []
    t_grid = temperature_grid(0.05, 20.0, 200)
    model = HarmonicOscillator(n_max=truncation_level(50.0))
    spectra = {}

    def pots(lam, point):
        if lam not in spectra:
            spectra[lam] = model.spectrum(lam)
        return potentials(spectra[lam], point)

    dev_f = dev_e = dev_s = dev_df = dev_ds = dev_virial = 0.0
    for t in t_grid:
        point = EnsemblePoint.from_temperature(float(t))
        numeric = pots(1.0, point)
        closed = ho_closed_potentials(1.0, point)
        dev_f = max(dev_f, abs(numeric.free_energy - closed.free_energy))
        dev_e = max(dev_e, abs(numeric.energy - closed.energy))
        dev_s = max(dev_s, abs(numeric.entropy - closed.entropy))
        deriv = lambda_derivatives(lambda lam: pots(lam, point), 1.0, config)
        dev_df = max(dev_df, abs(deriv.free_energy - ho_potential_average(point)))
        dev_ds = max(dev_ds, abs(deriv.entropy - ho_entropy_lambda_derivative(point)))
        dev_virial = max(dev_virial, abs(ho_potential_average(point) - 0.5 * closed.energy))

    checks.append(CheckResult("ho closed-form F agreement", dev_f, 1e-6))
    checks.append(CheckResult("ho closed-form E agreement", dev_e, 1e-6))
    checks.append(CheckResult("ho closed-form S agreement", dev_s, 1e-6))
    checks.append(CheckResult("ho dF/dlam vs potential average", dev_df, 1e-6))
    checks.append(CheckResult("ho dS/dlam vs closed form", dev_ds, 1e-6))
    checks.append(CheckResult("ho virial <x^2/2> = E/2", dev_virial, 1e-10))

    cold = EnsemblePoint.from_temperature(0.01)
    checks.append(CheckResult(
        "ho low-T potential average -> 1/4", abs(ho_potential_average(cold) - 0.25), 1e-12
    ))
    hot = EnsemblePoint.from_temperature(20.0)
    deriv_f = lambda_derivative_of("F", lambda lam: pots(lam, hot), 1.0, config)
    checks.append(CheckResult(
        "ho high-T dF/dlam -> T/2", abs(deriv_f - 10.0) / 10.0, 0.02
    ))
    hot50 = EnsemblePoint.from_temperature(50.0)
    checks.append(CheckResult(
        "ho high-T dS/dlam -> -1/2",
        abs(ho_entropy_lambda_derivative(hot50) + 0.5) / 0.5,
        0.02,
    ))
    ground, _ = central_diff(lambda lam: 0.5 * math.sqrt(lam), 1.0, config)
    checks.append(CheckResult("ho zero-T dE0/dlam = 1/4", abs(ground - 0.25), 1e-10))
    return checks


def verify_ising(n_spins: int = 12, config: DiffConfig = DiffConfig(),
                 seed: int = 20260823) -> list[CheckResult]:
    """Ising: enumeration oracle, term decomposition, symmetry, limits."""
    checks = []
    rng = np.random.default_rng(seed)

    dev_lnz = 0.0
    dev_terms = 0.0
    for n in range(2, n_spins + 1):
        for _ in range(20):
            params = IsingChain(
                coupling_j=float(rng.uniform(-2.5, 2.5)),
                field_h=float(rng.uniform(-2.5, 2.5)),
                n_spins=n,
                lambda1=float(rng.uniform(0.5, 1.5)),
                lambda2=float(rng.uniform(0.5, 1.5)),
            )
            point = EnsemblePoint(beta=float(rng.uniform(0.05, 3.0)))
            exact = ising_enumerate(params, point)
            ln_z = ising_log_z(params, point)
            dev_lnz = max(dev_lnz, abs(ln_z - exact.ln_z) / max(abs(exact.ln_z), 1e-300))
    checks.append(CheckResult("ising lnZ vs enumeration (relative)", dev_lnz, 1e-12))

    base = IsingChain(coupling_j=2.0, field_h=1.0, n_spins=10)
    for t in temperature_grid(0.1, 30.0, 40):
        point = EnsemblePoint.from_temperature(float(t))
        hj = ising_hj_average(base, point, config)
        hh = ising_hh_average(base, point, config)
        e = ising_total_energy(base, point)
        dev_terms = max(dev_terms, abs((hj + hh) - e))
    checks.append(CheckResult(
        "ising <H_J> + <H_h> = E over sweep", dev_terms, 1e-6 * base.n_spins
    ))

    cold = EnsemblePoint.from_temperature(0.1)
    hj = ising_hj_average(base, cold, config) / base.n_spins
    hh = ising_hh_average(base, cold, config) / base.n_spins
    e = ising_total_energy(base, cold) / base.n_spins
    checks.append(CheckResult("ising low-T <H_J>/N -> -J", abs(hj + 2.0), 0.01))
    checks.append(CheckResult("ising low-T <H_h>/N -> -h", abs(hh + 1.0), 0.01))
    checks.append(CheckResult("ising low-T E/N -> -(J+h)", abs(e + 3.0), 0.01))

    dev_sym = 0.0
    for _ in range(20):
        j = float(rng.uniform(-2.0, 2.0))
        h = float(rng.uniform(0.0, 2.0))
        n = int(rng.integers(2, 13))
        beta = float(rng.uniform(0.1, 2.0))
        point = EnsemblePoint(beta=beta)
        lz_p = ising_log_z(IsingChain(j, h, n), point)
        lz_m = ising_log_z(IsingChain(j, -h, n), point)
        dev_sym = max(dev_sym, abs(lz_p - lz_m))
    checks.append(CheckResult("ising lnZ even in h", dev_sym, 1e-13))

    t_hot = 100.0 * max(base.coupling_j, base.field_h)
    e_hot = ising_total_energy(base, EnsemblePoint.from_temperature(t_hot)) / base.n_spins
    law = -(base.coupling_j**2 + base.field_h**2) / t_hot
    checks.append(CheckResult(
        "ising high-T E/N -> -(J^2+h^2)/T", abs(e_hot - law), 0.05 * abs(law)
    ))
    return checks


def verify_lipkin(n_oracle: int = 8, config: DiffConfig = DiffConfig(),
                  seed: int = 20260823) -> list[CheckResult]:
    """Lipkin: dimension identity, Fock oracle, HF identity, corollary, limits."""
    checks = []

    dev_dim = 0
    for n in range(1, 65):
        total = sum(
            (two_j + 1) * multiplicity(n, two_j) for two_j in range(n % 2, n + 1, 2)
        )
        dev_dim = max(dev_dim, abs(total - 2**n))
    checks.append(CheckResult("lipkin weighted dimension = 2^N (N<=64)", float(dev_dim), 0.0))

    model_oracle = LipkinModel(n_particles=n_oracle, epsilon=1.0, v_coupling=3.0)
    block = lipkin_spectrum(model_oracle)
    fock = lipkin_fock(model_oracle)
    expanded = np.repeat(block.energies, block.degeneracies)
    dev_levels = float(np.max(np.abs(expanded - fock.energies)))
    checks.append(CheckResult(
        f"lipkin block vs Fock spectrum (N={n_oracle})", dev_levels, 1e-8
    ))
    dev_lnz = 0.0
    for beta in np.geomspace(0.01, 10.0, 10):
        point = EnsemblePoint(beta=float(beta))
        dev_lnz = max(dev_lnz, abs(
            potentials(block, point).ln_z - potentials(fock, point).ln_z
        ))
    checks.append(CheckResult(
        f"lipkin block vs Fock lnZ (N={n_oracle})", dev_lnz, 1e-9
    ))

    model = LipkinModel(n_particles=10, epsilon=1.0, v_coupling=3.0)
    spectra = {}

    def pots(lam, point):
        if lam not in spectra:
            spectra[lam] = model.spectrum(lam)
        return potentials(spectra[lam], point)

    t_grid = temperature_grid(0.1, 100.0, 50, "geometric")
    dev_hf = 0.0
    dev_corollary = 0.0
    de_dlam = []
    for t in t_grid:
        point = EnsemblePoint.from_temperature(float(t))
        deriv = lambda_derivatives(lambda lam: pots(lam, point), 1.0, config)
        direct = lipkin_h1_average_direct(model, point)
        dev_hf = max(
            dev_hf, abs(deriv.free_energy - direct) / max(1.0, abs(direct))
        )
        dh1_dt, _ = central_diff(
            lambda temp: lipkin_h1_average_direct(
                model, EnsemblePoint.from_temperature(temp)
            ),
            float(t),
            config,
        )
        dev_corollary = max(dev_corollary, abs(deriv.entropy + dh1_dt))
        de_dlam.append(deriv.energy)
    checks.append(CheckResult("lipkin dF/dlam vs direct <H1>", dev_hf, 1e-6))
    checks.append(CheckResult("lipkin dS/dlam = -d<H1>/dT", dev_corollary, 1e-4))

    idx = int(np.argmin(de_dlam))
    t_min_loc = float(t_grid[idx])
    in_window = 5.0 <= t_min_loc <= 20.0 and 0 < idx < len(de_dlam) - 1
    checks.append(CheckResult(
        f"lipkin dE/dlam minimum at T={t_min_loc:.2f} in [5, 20]",
        0.0 if in_window else 1.0,
        0.0,
    ))

    hot = EnsemblePoint.from_temperature(1e4)
    s_hot = potentials(lipkin_spectrum(model), hot).entropy
    checks.append(CheckResult(
        "lipkin S(T=1e4) -> N ln 2", abs(s_hot - model.n_particles * math.log(2)), 1e-3
    ))

    rng = np.random.default_rng(seed)
    dev_res = 0.0
    dev_orth = 0.0
    for _ in range(25):
        order = int(rng.integers(2, 65))
        m = rng.standard_normal((order, order))
        m = 0.5 * (m + m.T)
        dec = jacobi_eigen(m)
        fro = np.linalg.norm(m)
        residual = np.linalg.norm(
            m @ dec.eigenvectors - dec.eigenvectors * dec.eigenvalues, axis=0
        ).max()
        dev_res = max(dev_res, residual / fro)
        dev_orth = max(dev_orth, float(np.max(np.abs(
            dec.eigenvectors.T @ dec.eigenvectors - np.eye(order)
        ))))
    checks.append(CheckResult("eigensolver residual / ||A||_F", dev_res, 1e-10))
    checks.append(CheckResult("eigensolver orthonormality", dev_orth, 1e-12))
    return checks


def verify_all(config: DiffConfig = DiffConfig()) -> list[CheckResult]:
    return verify_ho(config) + verify_ising(config=config) + verify_lipkin(config=config)
