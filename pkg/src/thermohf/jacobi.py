"""Dense symmetric eigensolver: cyclic Jacobi rotations.

Matrix orders here are small (block Hamiltonians up to a few tens, brute
force Fock matrices up to 4096), so the simplicity and robustness of
Jacobi beats asymptotically faster methods.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["SymmetricEigenDecomposition", "jacobi_eigen", "JacobiConvergenceError"]


class JacobiConvergenceError(RuntimeError):
    """Raised when the sweep limit is reached with a large off-diagonal residual."""

    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal residual {residual:.3e})"
        )
        self.residual = residual


@dataclass(frozen=True)
class SymmetricEigenDecomposition:
    """Eigenvalues ascending; eigenvector k is column k of the orthogonal matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def jacobi_eigen(a, tol: float = 1e-14, max_sweeps: int = 100) -> SymmetricEigenDecomposition:
    """Diagonalize a real symmetric matrix by cyclic Jacobi sweeps.

    Sweeps run until the off-diagonal Frobenius norm drops below
    tol * ||A||_F. Output ordering is ascending in eigenvalue, which makes
    the decomposition deterministic for identical input.
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12 * max(1.0, float(np.abs(a).max()))):
        raise ValueError("matrix is not symmetric")
    a = 0.5 * (a + a.T)

    n = a.shape[0]
    v = np.eye(n)
    fro = float(np.linalg.norm(a))
    if n == 1 or fro == 0.0:
        return SymmetricEigenDecomposition(eigenvalues=np.diag(a).copy(), eigenvectors=v)

    def off_norm(m):
        # direct sum over off-diagonal entries; the ||A||_F^2 - sum(diag^2)
        # shortcut cancels catastrophically once the matrix is nearly diagonal
        return float(np.sqrt(np.sum(np.square(m - np.diag(np.diag(m))))))

    thresh = tol * fro
    for _ in range(max_sweeps):
        if off_norm(a) <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                # classic two-sided rotation zeroing a[p,q]
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-150 * abs(diff):
                    # rotation angle underflows; dropping apq perturbs the
                    # spectrum far below the convergence threshold
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = diff / (2.0 * apq)
                if abs(theta) > 1e100:
                    t = 0.5 / theta
                else:
                    t = np.sign(theta) if theta != 0.0 else 1.0
                    t /= abs(theta) + np.sqrt(theta * theta + 1.0)
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0

                col_p = v[:, p].copy()
                col_q = v[:, q].copy()
                v[:, p] = c * col_p - s * col_q
                v[:, q] = s * col_p + c * col_q
    else:
        off = off_norm(a)
        if off > thresh:
            raise JacobiConvergenceError(off, max_sweeps)

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return SymmetricEigenDecomposition(
        eigenvalues=eigenvalues[order], eigenvectors=v[:, order]
    )
