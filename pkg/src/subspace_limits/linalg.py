"""Numerical kernels for subspaces of R^d.

Everything here works on plain float vectors and on `Subspace` objects,
which store an orthonormal basis as rows of a read-only array. The module
provides inner products, orthonormalization, orthogonal projection,
point-to-subspace distance, the gap metric between equal-dimensional
subspaces, Gram determinants and the joint norm (volume) of a vector
family. All functions are pure and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Default tolerances. Callers may override per call where a function takes
# an explicit tolerance argument.
TOL_ORTHO = 1e-10      # max |B B^T - I| entry allowed in an orthonormal basis
RANK_TOL = 1e-8        # elimination residual below which a vector is dependent
SUBSPACE_EQ_TOL = 1e-8  # gap threshold under which two subspaces count as equal

JACOBI_OFFDIAG_TOL = 1e-13
JACOBI_MAX_SWEEPS = 50


class DimensionMismatchError(ValueError):
    """Operands live in different ambient spaces or have incompatible sizes."""


class RankDeficiencyError(ValueError):
    """A spanning set is numerically linearly dependent."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(
            message
            or f"vector {index} is linearly dependent on its predecessors"
        )


def _as_vector(u) -> np.ndarray:
    v = np.asarray(u, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise DimensionMismatchError(f"expected a nonempty 1-d vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite coordinates")
    return v


def _as_vector_family(vectors) -> np.ndarray:
    rows = [_as_vector(v) for v in vectors]
    if not rows:
        raise ValueError("expected at least one vector")
    d = rows[0].size
    for i, r in enumerate(rows):
        if r.size != d:
            raise DimensionMismatchError(
                f"vector {i} has length {r.size}, expected {d}"
            )
    return np.vstack(rows)


@dataclass(frozen=True)
class Subspace:
    """A k-dimensional subspace of R^d stored as k orthonormal basis rows.

    The constructor validates the basis: rows must be pairwise orthonormal
    within ``TOL_ORTHO``. Use :func:`orthonormalize` to build a Subspace
    from an arbitrary independent spanning set.
    """

    basis: np.ndarray

    def __post_init__(self):
        b = np.array(self.basis, dtype=float)
        if b.ndim != 2:
            raise ValueError(f"basis must be a 2-d array of rows, got shape {b.shape}")
        k, d = b.shape
        if not 1 <= k <= d:
            raise ValueError(f"need 1 <= k <= d, got k={k}, d={d}")
        if not np.all(np.isfinite(b)):
            raise ValueError("basis has non-finite entries")
        dev = float(np.max(np.abs(b @ b.T - np.eye(k))))
        if dev > TOL_ORTHO:
            raise ValueError(
                f"basis rows are not orthonormal (max |B B^T - I| entry = {dev:.3e})"
            )
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @property
    def ambient_dim(self) -> int:
        return int(self.basis.shape[1])

    @property
    def k(self) -> int:
        return int(self.basis.shape[0])

    def same_span(self, other: "Subspace", tol: float = SUBSPACE_EQ_TOL) -> bool:
        """True when both bases span the same subspace (gap within tol)."""
        return gap(self, other) <= tol

    def __repr__(self) -> str:  # keep reprs short; bases can be large
        return f"Subspace(k={self.k}, ambient_dim={self.ambient_dim})"


def inner(u, v) -> float:
    """Standard dot product <u, v> = sum_i u_i v_i."""
    a = _as_vector(u)
    b = _as_vector(v)
    if a.size != b.size:
        raise DimensionMismatchError(f"lengths differ: {a.size} vs {b.size}")
    return float(a @ b)


def orthonormalize(vectors, rank_tol: float = RANK_TOL) -> Subspace:
    """Build a Subspace from linearly independent spanning vectors.

    Modified Gram-Schmidt with one full re-orthogonalization pass, which is
    stable enough at the dimensions this library targets (d up to a few
    hundred). Raises :class:`RankDeficiencyError` naming the first vector
    whose elimination residual drops below ``rank_tol``.
    """
    rows = _as_vector_family(vectors)
    k, d = rows.shape
    if k > d:
        raise ValueError(f"{k} vectors cannot be independent in dimension {d}")
    basis: list[np.ndarray] = []
    for i in range(k):
        w = rows[i].copy()
        for b in basis:
            w -= (w @ b) * b
        for b in basis:  # second pass kills the round-off left by the first
            w -= (w @ b) * b
        norm = float(np.linalg.norm(w))
        if norm < rank_tol:
            raise RankDeficiencyError(i)
        basis.append(w / norm)
    return Subspace(np.vstack(basis))


def project(u, V: Subspace) -> np.ndarray:
    """Orthogonal projection of u onto V: sum_j <u, v_j> v_j."""
    x = _as_vector(u)
    if x.size != V.ambient_dim:
        raise DimensionMismatchError(
            f"vector length {x.size} != ambient dimension {V.ambient_dim}"
        )
    return (x @ V.basis.T) @ V.basis


def dist_point_subspace(u, V: Subspace) -> float:
    """Distance from the point u to the subspace V, i.e. ||u - P_V(u)||."""
    x = _as_vector(u)
    return float(np.linalg.norm(x - project(x, V)))


def projection_norm_sq(u, V: Subspace) -> float:
    """Squared norm of the projection of u onto V, as sum_j <u, v_j>^2."""
    x = _as_vector(u)
    if x.size != V.ambient_dim:
        raise DimensionMismatchError(
            f"vector length {x.size} != ambient dimension {V.ambient_dim}"
        )
    c = V.basis @ x
    return float(c @ c)


def jacobi_eigenvalues(
    matrix,
    offdiag_tol: float = JACOBI_OFFDIAG_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> np.ndarray:
    """Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations.

    Returns the eigenvalues sorted ascending. Sweeps stop once every
    off-diagonal entry is at most ``offdiag_tol`` in absolute value.
    Intended for the k x k matrices arising in gap computations (k <= 10).
    """
    A = np.array(matrix, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    if float(np.max(np.abs(A - A.T))) > 1e-12 * max(1.0, float(np.max(np.abs(A)))):
        raise ValueError("matrix is not symmetric")
    A = 0.5 * (A + A.T)
    if n == 1:
        return A[0].copy()
    for _ in range(max_sweeps):
        off = np.abs(A - np.diag(np.diag(A))).max()
        if off <= offdiag_tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= offdiag_tol:
                    continue
                # classical symmetric Schur rotation annihilating A[p, q]
                tau = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
    return np.sort(np.diag(A))


def gap(U: Subspace, V: Subspace) -> float:
    """Gap between two equal-dimensional subspaces.

    Defined as the supremum of ||u - P_V(u)|| over unit vectors u in U.
    For orthonormal row bases A (for U) and B (for V) this supremum equals
    sqrt(1 - lambda_min(G G^T)) with the cross-Gram G = A B^T. The value is
    computed from the residual matrix R = A - (A B^T) B, whose Gram
    R R^T equals I - G G^T exactly; taking lambda_max(R R^T) evaluates the
    same closed form but keeps near-zero gaps resolvable at the 1e-15
    level instead of the ~1e-8 floor of forming 1 - lambda_min directly.
    The radicand is clamped to [0, 1], so the result is always in [0, 1].
    """
    if U.ambient_dim != V.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {U.ambient_dim} vs {V.ambient_dim}"
        )
    if U.k != V.k:
        raise DimensionMismatchError(
            f"gap is defined for equal-dimensional subspaces only, got k={U.k} and k={V.k}"
        )
    A = U.basis
    B = V.basis
    R = A - (A @ B.T) @ B
    lam_max = float(jacobi_eigenvalues(R @ R.T)[-1])
    return math.sqrt(min(1.0, max(0.0, lam_max)))


def gram_matrix(vectors) -> np.ndarray:
    """Matrix of pairwise inner products <x_i, x_j> of the given vectors."""
    rows = _as_vector_family(vectors)
    return rows @ rows.T


def gramian(vectors) -> float:
    """Determinant of the Gram matrix of the given vectors.

    Nonnegative up to round-off; vanishes exactly when the vectors are
    linearly dependent.
    """
    return float(np.linalg.det(gram_matrix(vectors)))


def n_norm(vectors) -> float:
    """Joint norm of a vector family: sqrt of the Gram determinant.

    Measures the volume of the parallelotope the vectors span; zero when
    they are dependent. The Gramian is clamped at zero before the root to
    absorb round-off.
    """
    return math.sqrt(max(0.0, gramian(vectors)))
