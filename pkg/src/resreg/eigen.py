"""Cyclic Jacobi eigensolver for real symmetric matrices."""

import numpy as np


class ConvergenceError(ArithmeticError):
    pass


def jacobi_eigh(m, tol=1e-12, max_sweeps=100, symmetry_tol=1e-12):
    """Eigenvalues (descending) and orthonormal eigenvectors of a symmetric matrix.

    Cyclic row-by-row sweeps of plane rotations until the off-diagonal
    Frobenius norm drops below ``tol * ||m||_F``.  Column ``k`` of the
    returned vector matrix belongs to eigenvalue ``k``.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    scale = max(1.0, np.abs(a).max(initial=0.0))
    if np.abs(a - a.T).max(initial=0.0) > symmetry_tol * scale:
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2
    v = np.eye(n)
    target = tol * np.linalg.norm(a)

    skip = target * 1e-3 / max(n, 1)

    for _ in range(max_sweeps):
        if _off_norm(a) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                # negligible entries: skipping them leaves the off-norm far below target
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        off = _off_norm(a)
        if off > target:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {off:.3e})")

    w = np.diag(a).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def _off_norm(a):
    return np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2))


def eigvalsh_desc(m, **kw):
    return jacobi_eigh(m, **kw)[0]
