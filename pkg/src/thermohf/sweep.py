"""Temperature sweeps and their CSV/JSON serialization.

One SweepRow per grid point carries the potentials, the three coupling
derivatives at lam = 1 and, where the model supports it, the directly
computed thermal average of the interaction term.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

import numpy as np

from .ensemble import EnsemblePoint, potentials, thermal_average
from .models.ho import HarmonicOscillator, ho_potential_average, truncation_level
from .models.ising import (
    IsingChain,
    ising_hh_average,
    ising_hj_average,
    ising_potentials,
)
from .models.lipkin import LipkinModel, lipkin_levels_with_h1
from .numdiff import DiffConfig, lambda_derivatives

__all__ = [
    "SweepRow",
    "temperature_grid",
    "sweep_ho",
    "sweep_ising",
    "sweep_lipkin",
    "lipkin_hf_suite",
    "grid_derivative",
    "rows_to_csv",
    "rows_to_json",
    "CSV_HEADER",
]

CSV_HEADER = "T,E,F,S,dF_dlambda,dE_dlambda,dS_dlambda,H1_direct"


@dataclass(frozen=True)
class SweepRow:
    """One temperature grid point; h1_direct is None when no direct path exists."""

    temperature: float
    energy: float
    free_energy: float
    entropy: float
    df_dlambda: float
    de_dlambda: float
    ds_dlambda: float
    h1_direct: float | None = None


def temperature_grid(t_min: float, t_max: float, steps: int, kind: str = "linear") -> np.ndarray:
    """Strictly increasing temperature grid, linear or geometric."""
    if not (0.0 < t_min < t_max):
        raise ValueError(f"need 0 < t_min < t_max, got [{t_min}, {t_max}]")
    if steps < 2:
        raise ValueError(f"need at least 2 grid points, got {steps}")
    if kind == "linear":
        return np.linspace(t_min, t_max, steps)
    if kind == "geometric":
        return np.geomspace(t_min, t_max, steps)
    raise ValueError(f"unknown grid kind {kind!r}")


def _cached_potentials(spectrum_of_lambda):
    """Memoize spectra across grid points; the abscissae repeat at every T."""
    cache = {}

    def at(lam, point):
        if lam not in cache:
            cache[lam] = spectrum_of_lambda(lam)
        return potentials(cache[lam], point)

    return at


def sweep_ho(t_grid, config: DiffConfig = DiffConfig(), n_max: int | None = None):
    """Oscillator sweep using the generic spectrum + finite-difference path."""
    t_grid = np.asarray(t_grid, dtype=float)
    if n_max is None:
        n_max = truncation_level(float(t_grid.max()))
    model = HarmonicOscillator(n_max=n_max)
    pots_at = _cached_potentials(model.spectrum)
    rows = []
    for t in t_grid:
        point = EnsemblePoint.from_temperature(float(t))
        pots = pots_at(1.0, point)
        deriv = lambda_derivatives(lambda lam: pots_at(lam, point), 1.0, config)
        rows.append(SweepRow(
            temperature=float(t),
            energy=pots.energy,
            free_energy=pots.free_energy,
            entropy=pots.entropy,
            df_dlambda=deriv.free_energy,
            de_dlambda=deriv.energy,
            ds_dlambda=deriv.entropy,
            h1_direct=ho_potential_average(point),
        ))
    return rows


def sweep_ising(params: IsingChain, t_grid, config: DiffConfig = DiffConfig()):
    """Ising sweep; the coupling derivative columns use a global coupling
    that scales the whole Hamiltonian, so dF/dlam equals <H_J> + <H_h>.

    No direct (derivative-free) path exists for the term averages, so
    h1_direct is absent.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    rows = []
    for t in t_grid:
        point = EnsemblePoint.from_temperature(float(t))
        pots = ising_potentials(params, point)
        deriv = lambda_derivatives(
            lambda lam: ising_potentials(
                replace(params, lambda1=lam * params.lambda1, lambda2=lam * params.lambda2),
                point,
            ),
            1.0,
            config,
        )
        rows.append(SweepRow(
            temperature=float(t),
            energy=pots.energy,
            free_energy=pots.free_energy,
            entropy=pots.entropy,
            df_dlambda=deriv.free_energy,
            de_dlambda=deriv.energy,
            ds_dlambda=deriv.entropy,
            h1_direct=None,
        ))
    return rows


def sweep_lipkin(model: LipkinModel, t_grid, config: DiffConfig = DiffConfig()):
    """Lipkin sweep with both the derivative and the direct interaction average."""
    t_grid = np.asarray(t_grid, dtype=float)
    pots_at = _cached_potentials(model.spectrum)
    spectrum, h1_values = lipkin_levels_with_h1(model, lam=1.0)
    rows = []
    for t in t_grid:
        point = EnsemblePoint.from_temperature(float(t))
        pots = pots_at(1.0, point)
        deriv = lambda_derivatives(lambda lam: pots_at(lam, point), 1.0, config)
        rows.append(SweepRow(
            temperature=float(t),
            energy=pots.energy,
            free_energy=pots.free_energy,
            entropy=pots.entropy,
            df_dlambda=deriv.free_energy,
            de_dlambda=deriv.energy,
            ds_dlambda=deriv.entropy,
            h1_direct=thermal_average(h1_values, spectrum, point),
        ))
    return rows


def grid_derivative(t_grid, values) -> np.ndarray:
    """Derivative of tabulated values on a (possibly nonuniform) grid.

    Three-point stencils exact for quadratics; one-sided at the endpoints.
    """
    t = np.asarray(t_grid, dtype=float)
    f = np.asarray(values, dtype=float)
    if t.size != f.size or t.size < 3:
        raise ValueError("need aligned grids with at least 3 points")
    out = np.empty_like(f)
    h_prev = t[1:-1] - t[:-2]
    h_next = t[2:] - t[1:-1]
    out[1:-1] = (
        -h_next / (h_prev * (h_prev + h_next)) * f[:-2]
        + (h_next - h_prev) / (h_prev * h_next) * f[1:-1]
        + h_prev / (h_next * (h_prev + h_next)) * f[2:]
    )
    out[0] = (f[1] - f[0]) / (t[1] - t[0])
    out[-1] = (f[-1] - f[-2]) / (t[-1] - t[-2])
    return out


def lipkin_hf_suite(model: LipkinModel, t_grid, config: DiffConfig = DiffConfig()):
    """Sweep rows plus the on-grid temperature derivative of the direct average."""
    rows = sweep_lipkin(model, t_grid, config)
    dh1_dt = grid_derivative(t_grid, [r.h1_direct for r in rows])
    return rows, dh1_dt


def _fmt(x: float | None) -> str:
    return "" if x is None else format(x, ".17g")


def _row_values(row: SweepRow):
    return [
        row.temperature, row.energy, row.free_energy, row.entropy,
        row.df_dlambda, row.de_dlambda, row.ds_dlambda, row.h1_direct,
    ]


def rows_to_csv(rows) -> str:
    """Deterministic CSV with 17-significant-digit floats."""
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in _row_values(row)))
    return "\n".join(lines) + "\n"


def rows_to_json(rows, config_echo: dict) -> str:
    """Same rows as JSON objects, plus an echo of the run configuration."""
    keys = CSV_HEADER.split(",")
    payload = {
        "config": config_echo,
        "rows": [dict(zip(keys, _row_values(row))) for row in rows],
    }
    return json.dumps(payload, indent=2) + "\n"
