"""Cyclic Jacobi eigensolver for small dense complex Hermitian matrices.

Works on a stack of matrices at once: every rotation angle is computed
per matrix and applied with array arithmetic, so thousands of 3x3 problems
cost a handful of numpy calls per sweep.
"""
import numpy as np


class JacobiConvergenceError(RuntimeError):
    pass


def _off_norm(a):
    n = a.shape[-1]
    mask = ~np.eye(n, dtype=bool)
    return np.sqrt(np.sum(np.abs(a[..., mask]) ** 2, axis=-1))


def hermitian_jacobi(matrices, tol=1e-20, max_sweeps=60):
    """Eigen-decompose Hermitian matrices by cyclic complex Jacobi rotations.

    Parameters
    ----------
    matrices : array_like, shape (..., n, n)
        Hermitian input; only symmetric use of both triangles is assumed.
    tol : float
        Stop once the off-diagonal Frobenius norm falls below
        ``tol * ||A||_F`` for every matrix in the stack.  The default runs
        to full convergence, which near-degenerate pairs need for accurate
        eigenvectors; off-diagonal entries below that level are zeroed
        without a rotation.
    max_sweeps : int

    Returns
    -------
    eigenvalues : ndarray, shape (..., n)
        Real eigenvalues, sorted in descending order.  Ties keep the order
        of the diagonal they came from.
    eigenvectors : ndarray, shape (..., n, n)
        Unitary matrix whose column j belongs to ``eigenvalues[..., j]``.
    """
    a = np.array(matrices, dtype=complex)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise ValueError("expected a stack of square matrices")
    n = a.shape[-1]
    batch = a.shape[:-2]
    a = a.reshape(-1, n, n).copy()
    v = np.broadcast_to(np.eye(n, dtype=complex), a.shape).copy()
    scale = np.sqrt(np.sum(np.abs(a) ** 2, axis=(-2, -1)))
    threshold = tol * np.where(scale > 0, scale, 1.0)
    negligible = threshold / n

    for _ in range(max_sweeps):
        if np.all(_off_norm(a) <= threshold):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                mag = np.abs(apq)
                active = mag > negligible
                safe = np.where(active, mag, 1.0)
                phase = np.where(active, apq / safe, 1.0)
                app = a[:, p, p].real
                aqq = a[:, q, q].real
                tau = (aqq - app) / (2.0 * safe)
                t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
                t = np.where(active, t, 0.0)
                c = 1.0 / np.sqrt(1.0 + t**2)
                s = t * c
                cph = np.conj(phase)

                # columns: A <- A G, with G = diag-phase times real rotation
                col_p = a[:, :, p].copy()
                col_q = a[:, :, q].copy()
                a[:, :, p] = c[:, None] * col_p - (s * cph)[:, None] * col_q
                a[:, :, q] = s[:, None] * col_p + (c * cph)[:, None] * col_q
                # rows: A <- G^H A
                row_p = a[:, p, :].copy()
                row_q = a[:, q, :].copy()
                a[:, p, :] = c[:, None] * row_p - (s * phase)[:, None] * row_q
                a[:, q, :] = s[:, None] * row_p + (c * phase)[:, None] * row_q
                a[:, p, q] = 0.0
                a[:, q, p] = 0.0

                vp = v[:, :, p].copy()
                vq = v[:, :, q].copy()
                v[:, :, p] = c[:, None] * vp - (s * cph)[:, None] * vq
                v[:, :, q] = s[:, None] * vp + (c * cph)[:, None] * vq
    else:
        if not np.all(_off_norm(a) <= threshold):
            raise JacobiConvergenceError(f"no convergence after {max_sweeps} sweeps")

    evals = np.real(np.diagonal(a, axis1=-2, axis2=-1))
    order = np.argsort(-evals, axis=-1, kind="stable")
    evals = np.take_along_axis(evals, order, axis=-1)
    v = np.take_along_axis(v, order[:, None, :], axis=-1)
    return evals.reshape(batch + (n,)), v.reshape(batch + (n, n))
