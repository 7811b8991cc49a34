"""Linear algebra over R^(n+2) with a symmetric bilinear form of index one.

The form is fixed in coordinates: the first n+1 basis directions are
spacelike (+1) and the last one is timelike (-1).  Vectors are plain 1-d
numpy arrays; subspaces are immutable values wrapping an explicit basis
together with the inertia of its Gram matrix.
"""

from __future__ import annotations

import dataclasses
import enum
import math

import numpy as np

from .errors import DegenerateSubspace, InternalError, InvalidInput

#: Relative band below which a Gram eigenvalue / singular value counts as zero.
DEFAULT_RANK_TOL = 1e-9


class VectorType(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    ISOTROPIC = "isotropic"


class MetricType(enum.Enum):
    EUCLIDEAN = "euclidean"
    PSEUDO_EUCLIDEAN = "pseudo-euclidean"
    ISOTROPIC = "isotropic"


@dataclasses.dataclass(frozen=True)
class MinkowskiFrame:
    """Coordinate frame of the (n+2)-dimensional space with signature (n+1, 1)."""

    ambient_n: int

    def __post_init__(self):
        if not isinstance(self.ambient_n, int) or self.ambient_n < 1:
            raise InvalidInput(f"ambient_n must be an integer >= 1, got {self.ambient_n!r}")

    @property
    def dim(self) -> int:
        return self.ambient_n + 2

    @property
    def signature(self) -> np.ndarray:
        sig = np.ones(self.dim)
        sig[-1] = -1.0
        return sig

    def metric(self) -> np.ndarray:
        return np.diag(self.signature)


def as_vector(x, dim=None) -> np.ndarray:
    """Validate and convert a coordinate sequence to a 1-d float array."""
    v = np.asarray(x, dtype=float)
    if v.ndim != 1:
        raise InvalidInput(f"expected a coordinate vector, got shape {v.shape}")
    if dim is not None and v.shape[0] != dim:
        raise InvalidInput(f"expected a vector of length {dim}, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise InvalidInput("vector has non-finite entries")
    return v


def scalar_product(x, y) -> float:
    """Indefinite scalar product: sum of spacelike products minus the timelike one."""
    xv = as_vector(x)
    yv = as_vector(y)
    if xv.shape != yv.shape:
        raise InvalidInput(f"dimension mismatch: {xv.shape[0]} vs {yv.shape[0]}")
    return float(np.dot(xv[:-1], yv[:-1]) - xv[-1] * yv[-1])


def classify_vector(x, tol: float = DEFAULT_RANK_TOL) -> VectorType:
    """Classify a nonzero vector as spacelike, timelike or isotropic.

    The zero band is relative: |<x,x>| <= tol * ||x||^2 counts as isotropic.
    """
    xv = as_vector(x)
    scale = float(np.dot(xv, xv))
    if scale <= tol * tol:
        raise InvalidInput("cannot classify the zero vector")
    s = scalar_product(xv, xv)
    if s > tol * scale:
        return VectorType.SPACELIKE
    if s < -tol * scale:
        return VectorType.TIMELIKE
    return VectorType.ISOTROPIC


@dataclasses.dataclass(frozen=True, eq=False)
class Subspace:
    """A linear subspace given by an explicit basis (rows of ``basis``).

    ``inertia`` is the signature (n_plus, n_minus, n_zero) of the Gram matrix
    of the basis; by Sylvester's law it does not depend on the basis choice.
    """

    frame: MinkowskiFrame
    basis: np.ndarray
    inertia: tuple[int, int, int]
    metric_type: MetricType
    rank_tol: float

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def gram_rank(self) -> int:
        return self.inertia[0] + self.inertia[1]

    def __repr__(self):
        return (f"Subspace(dim={self.dim}, ambient_n={self.frame.ambient_n}, "
                f"metric_type={self.metric_type.value}, inertia={self.inertia})")


def gram_matrix(frame: MinkowskiFrame, rows: np.ndarray) -> np.ndarray:
    lowered = rows * frame.signature
    return rows @ lowered.T


def _inertia_of_gram(gram: np.ndarray, rank_tol: float) -> tuple[int, int, int]:
    if gram.shape[0] == 0:
        return (0, 0, 0)
    eigvals, _ = symmetric_eigen(gram)
    band = rank_tol * max(1.0, float(np.max(np.abs(eigvals)))) if eigvals.size else rank_tol
    n_plus = int(np.sum(eigvals > band))
    n_minus = int(np.sum(eigvals < -band))
    n_zero = int(eigvals.size - n_plus - n_minus)
    return (n_plus, n_minus, n_zero)


def _metric_type_of(inertia: tuple[int, int, int]) -> MetricType:
    n_plus, n_minus, n_zero = inertia
    if n_zero > 0:
        return MetricType.ISOTROPIC
    if n_minus == 0:
        return MetricType.EUCLIDEAN
    if n_minus == 1:
        return MetricType.PSEUDO_EUCLIDEAN
    raise InternalError(f"subspace of index {n_minus} in an ambient space of index 1")


def subspace(frame: MinkowskiFrame, vectors, rank_tol: float = DEFAULT_RANK_TOL) -> Subspace:
    """Build a subspace from linearly independent spanning vectors.

    Raises InvalidInput when the vectors are dependent (smallest singular value
    below rank_tol times the largest).
    """
    rows = np.atleast_2d(np.asarray(vectors, dtype=float))
    if rows.size == 0:
        rows = np.empty((0, frame.dim))
    if rows.shape[1] != frame.dim:
        raise InvalidInput(f"basis vectors must have length {frame.dim}, got {rows.shape[1]}")
    if not np.all(np.isfinite(rows)):
        raise InvalidInput("basis has non-finite entries")
    if rows.shape[0] > frame.dim:
        raise InvalidInput(f"{rows.shape[0]} vectors cannot be independent in dimension {frame.dim}")
    if rows.shape[0] > 0:
        svals = np.linalg.svd(rows, compute_uv=False)
        if svals[-1] <= rank_tol * svals[0]:
            raise InvalidInput("basis vectors are linearly dependent")
    inertia = _inertia_of_gram(gram_matrix(frame, rows), rank_tol)
    rows = rows.copy()
    rows.setflags(write=False)
    return Subspace(frame, rows, inertia, _metric_type_of(inertia), rank_tol)


def zero_subspace(frame: MinkowskiFrame, rank_tol: float = DEFAULT_RANK_TOL) -> Subspace:
    return subspace(frame, np.empty((0, frame.dim)), rank_tol)


def full_subspace(frame: MinkowskiFrame, rank_tol: float = DEFAULT_RANK_TOL) -> Subspace:
    return subspace(frame, np.eye(frame.dim), rank_tol)


def orthonormalize(space: Subspace, rank_tol: float | None = None):
    """Diagonalize the restricted form over a subspace basis.

    Returns (rows, inertia): a basis of the same span whose Gram matrix is
    diagonal with entries +1, -1 or 0 within tolerance, ordered +1 vectors
    first, then -1, then null directions.  Pivoting picks the remaining
    vector of largest |<v,v>|; when every remaining diagonal is within the
    null band but some cross product is not, the two vectors involved are
    summed first (a null-diagonal basis can still span a hyperbolic plane).
    """
    tol = space.rank_tol if rank_tol is None else rank_tol
    work = [row.copy() for row in space.basis]
    scale = max((float(np.linalg.norm(v)) for v in work), default=0.0)
    plus: list[np.ndarray] = []
    minus: list[np.ndarray] = []
    units: list[tuple[np.ndarray, float]] = []

    def refine(v):
        # two passes keep the diagonal Gram clean to machine precision
        for _ in range(2):
            for u, sgn in units:
                v = v - sgn * scalar_product(v, u) * u
        return v

    while work:
        for v in work:
            if float(np.linalg.norm(v)) <= 1e-12 * max(scale, 1.0):
                raise InvalidInput("basis vectors are linearly dependent")
        diags = [scalar_product(v, v) for v in work]
        enorms = [float(np.dot(v, v)) for v in work]
        i = int(np.argmax([abs(d) for d in diags]))
        if abs(diags[i]) > tol * enorms[i]:
            v = refine(work.pop(i))
            s = scalar_product(v, v)
            sgn = 1.0 if s > 0 else -1.0
            u = v / math.sqrt(abs(s))
            units.append((u, sgn))
            (plus if sgn > 0 else minus).append(u)
            work = [w - sgn * scalar_product(w, u) * u for w in work]
            continue
        # all diagonals in the null band: look for a hyperbolic pair
        best, bi, bj = 0.0, -1, -1
        for a in range(len(work)):
            for b in range(a + 1, len(work)):
                val = abs(scalar_product(work[a], work[b])) / math.sqrt(enorms[a] * enorms[b])
                if val > best:
                    best, bi, bj = val, a, b
        if best > tol:
            work[bi] = work[bi] + work[bj]
            continue
        break  # residual is numerically totally isotropic

    nulls = [v / np.linalg.norm(v) for v in work]
    if len(nulls) > 1:
        raise InternalError("more than one independent null direction in an index-1 space")
    rows = np.array(plus + minus + nulls) if (plus or minus or nulls) else np.empty((0, space.frame.dim))
    return rows, (len(plus), len(minus), len(nulls))


def complement(space: Subspace) -> Subspace:
    """Orthogonal complement with respect to the indefinite form."""
    frame = space.frame
    if space.dim == 0:
        return full_subspace(frame, space.rank_tol)
    lowered = space.basis * frame.signature
    _, svals, vh = np.linalg.svd(lowered, full_matrices=True)
    rank = int(np.sum(svals > space.rank_tol * svals[0])) if svals.size else 0
    return subspace(frame, vh[rank:], space.rank_tol)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    """Span of the union of the two bases, reduced to an independent basis."""
    if s1.frame != s2.frame:
        raise InvalidInput("subspaces live in different frames")
    stacked = np.vstack([s1.basis, s2.basis])
    if stacked.shape[0] == 0:
        return zero_subspace(s1.frame, s1.rank_tol)
    _, svals, vh = np.linalg.svd(stacked, full_matrices=False)
    rank = int(np.sum(svals > s1.rank_tol * svals[0])) if svals.size else 0
    return subspace(s1.frame, vh[:rank], s1.rank_tol)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection, computed through complements of the sum of complements."""
    return complement(subspace_sum(complement(s1), complement(s2)))


def project(x, space: Subspace) -> np.ndarray:
    """Orthogonal projection of x onto a non-degenerate subspace.

    Defined by the direct splitting of the ambient space into the subspace
    and its complement; raises DegenerateSubspace when the splitting does
    not exist (degenerate restriction of the form).
    """
    xv = as_vector(x, space.frame.dim)
    if space.metric_type is MetricType.ISOTROPIC:
        raise DegenerateSubspace("cannot project onto a degenerate subspace")
    if space.dim == 0:
        return np.zeros(space.frame.dim)
    gram = gram_matrix(space.frame, space.basis)
    rhs = (space.basis * space.frame.signature) @ xv
    coeffs = np.linalg.solve(gram, rhs)
    return coeffs @ space.basis


def member(x, space: Subspace, tol: float = DEFAULT_RANK_TOL) -> bool:
    """Span membership test (metric independent), relative residual below tol."""
    xv = as_vector(x, space.frame.dim)
    if space.dim == 0:
        return float(np.linalg.norm(xv)) <= tol
    q = _euclidean_orthonormal_rows(space.basis)
    resid = xv - (xv @ q.T) @ q
    return float(np.linalg.norm(resid)) <= tol * max(1.0, float(np.linalg.norm(xv)))


def spans_equal(s1: Subspace, s2: Subspace, tol: float = DEFAULT_RANK_TOL) -> bool:
    """True when the two subspaces span the same set of vectors."""
    if s1.frame != s2.frame or s1.dim != s2.dim:
        return False
    return all(member(v, s2, tol) for v in s1.basis) and all(member(v, s1, tol) for v in s2.basis)


def _euclidean_orthonormal_rows(rows: np.ndarray) -> np.ndarray:
    _, svals, vh = np.linalg.svd(rows, full_matrices=False)
    rank = int(np.sum(svals > 1e-12 * svals[0])) if svals.size else 0
    return vh[:rank]


def symmetric_eigen(matrix, off_tol: float = 1e-13, max_sweeps: int = 100):
    """Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps until every off-diagonal magnitude drops below off_tol times the
    Frobenius norm of the input.  Returns (eigenvalues, eigenvectors) with
    eigenvalues sorted descending and eigenvectors as the matching columns.
    """
    mat = np.asarray(matrix, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise InvalidInput(f"expected a square matrix, got shape {mat.shape}")
    if mat.size and not np.all(np.isfinite(mat)):
        raise InvalidInput("matrix has non-finite entries")
    size = mat.shape[0]
    if size == 0:
        return np.empty(0), np.empty((0, 0))
    scale = float(np.linalg.norm(mat, "fro"))
    if float(np.linalg.norm(mat - mat.T, "fro")) > 1e-12 * max(1.0, scale):
        raise InvalidInput("matrix is not symmetric")
    a = (mat + mat.T) / 2.0
    q = np.eye(size)
    if scale == 0.0:
        return np.zeros(size), q
    thresh = off_tol * scale

    for _ in range(max_sweeps):
        off = a - np.diag(np.diag(a))
        if not np.any(np.abs(off) >= thresh):
            break
        for p in range(size - 1):
            for r in range(p + 1, size):
                apr = a[p, r]
                if abs(apr) < thresh:
                    continue
                app, arr = a[p, p], a[r, r]
                tau = (arr - app) / (2.0 * apr)
                if tau >= 0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                colp, colr = a[:, p].copy(), a[:, r].copy()
                a[:, p] = c * colp - s * colr
                a[:, r] = s * colp + c * colr
                rowp, rowr = a[p, :].copy(), a[r, :].copy()
                a[p, :] = c * rowp - s * rowr
                a[r, :] = s * rowp + c * rowr
                a[p, p] = app - t * apr
                a[r, r] = arr + t * apr
                a[p, r] = a[r, p] = 0.0
                qp, qr = q[:, p].copy(), q[:, r].copy()
                q[:, p] = c * qp - s * qr
                q[:, r] = s * qp + c * qr
    else:
        raise InternalError("Jacobi iteration did not converge")

    eigvals = np.diag(a).copy()
    order = np.argsort(-eigvals, kind="stable")
    return eigvals[order], q[:, order]
