"""Spheres of the n-dimensional Moebius space as indefinite-metric subspaces.

An m-sphere is stored as an (m+2)-dimensional subspace of index 1; points of
the euclidean model travel through the isotropic cone via the inverse
stereographic lift.  Converters recover center/radius or normal/offset data
for hyperspheres.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .errors import InternalError, InvalidInput, PointsNotInGeneralPosition
from .minkowski import (
    DEFAULT_RANK_TOL,
    MetricType,
    MinkowskiFrame,
    Subspace,
    as_vector,
    complement,
    member,
    scalar_product,
    subspace,
)

#: Band on normalized coordinates inside which a lifted point counts as infinity.
POLE_TOL = 1e-13


@dataclasses.dataclass(frozen=True)
class ExtendedPoint:
    """A point of euclidean n-space, or the single point at infinity."""

    coords: tuple | None = None

    @classmethod
    def finite(cls, y) -> "ExtendedPoint":
        v = as_vector(y)
        return cls(tuple(float(c) for c in v))

    @classmethod
    def infinity(cls) -> "ExtendedPoint":
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.coords is None

    def array(self) -> np.ndarray:
        if self.coords is None:
            raise InvalidInput("the point at infinity has no finite coordinates")
        return np.array(self.coords)

    def __repr__(self):
        return "ExtendedPoint(infinity)" if self.is_infinity else f"ExtendedPoint{self.coords}"


POINT_AT_INFINITY = ExtendedPoint.infinity()


@dataclasses.dataclass(frozen=True, eq=False)
class EuclideanSphere:
    """Center/radius data of a hypersphere in the euclidean model."""

    center: np.ndarray
    radius: float


@dataclasses.dataclass(frozen=True, eq=False)
class EuclideanPlane:
    """Normal/offset data of a hyperplane <normal, x> = offset."""

    normal: np.ndarray
    offset: float


@dataclasses.dataclass(frozen=True, eq=False)
class Sphere:
    """An m-sphere of the Moebius space, carried by an index-1 subspace."""

    subspace: Subspace

    @property
    def frame(self) -> MinkowskiFrame:
        return self.subspace.frame

    @property
    def m(self) -> int:
        return self.subspace.dim - 2

    @property
    def ambient_n(self) -> int:
        return self.frame.ambient_n

    def __repr__(self):
        return f"Sphere(m={self.m}, ambient_n={self.ambient_n})"


def sphere_from_subspace(space: Subspace) -> Sphere:
    """Wrap a subspace as a sphere, checking that it actually carries one."""
    m = space.dim - 2
    if m < 0 or m > space.frame.ambient_n:
        raise InvalidInput(f"subspace of dimension {space.dim} does not define a sphere")
    if space.metric_type is not MetricType.PSEUDO_EUCLIDEAN:
        raise InvalidInput(f"sphere subspace must have index 1, got {space.metric_type.value}")
    if space.inertia != (m + 1, 1, 0):
        raise InternalError(f"unexpected sphere inertia {space.inertia}")
    return Sphere(space)


def lift(point: ExtendedPoint, ambient_n: int | None = None) -> np.ndarray:
    """Inverse stereographic lift of a point onto the isotropic cone.

    Finite y maps to ((2y, |y|^2 - 1) / (|y|^2 + 1), 1); infinity maps to the
    vector with last two coordinates 1.  The result is isotropic.
    """
    if point.is_infinity:
        if ambient_n is None:
            raise InvalidInput("lifting the point at infinity needs the ambient dimension")
        v = np.zeros(ambient_n + 2)
        v[-2] = 1.0
        v[-1] = 1.0
        return v
    y = point.array()
    n = y.shape[0]
    if ambient_n is not None and ambient_n != n:
        raise InvalidInput(f"point has dimension {n}, expected {ambient_n}")
    q = float(np.dot(y, y))
    v = np.empty(n + 2)
    v[:n] = 2.0 * y / (q + 1.0)
    v[n] = (q - 1.0) / (q + 1.0)
    v[n + 1] = 1.0
    return v


def stereographic(x, tol: float = DEFAULT_RANK_TOL, pole_tol: float = POLE_TOL) -> ExtendedPoint:
    """Stereographic projection of an isotropic vector to the euclidean model."""
    xv = as_vector(x)
    n = xv.shape[0] - 2
    if n < 1:
        raise InvalidInput("vector too short for any Moebius space")
    norm2 = float(np.dot(xv, xv))
    if norm2 == 0.0:
        raise InvalidInput("cannot project the zero vector")
    if abs(scalar_product(xv, xv)) > tol * norm2:
        raise InvalidInput("vector is not isotropic")
    last = xv[-1]
    if abs(last) < 1e-6 * math.sqrt(norm2):  # exact isotropy forces |x_last| = |x|/sqrt(2)
        raise InternalError("isotropic vector with vanishing last coordinate")
    xi = xv / last
    den = 1.0 - xi[n]
    if den <= pole_tol:
        return POINT_AT_INFINITY
    return ExtendedPoint.finite(xi[:n] / den)


def _sphere_from_unit_normal(vec: np.ndarray, rank_tol: float) -> Sphere:
    frame = MinkowskiFrame(vec.shape[0] - 2)
    scale = max(1.0, float(np.dot(vec, vec)))  # cancellation grows with the coordinate size
    if abs(scalar_product(vec, vec) - 1.0) > 1e-12 * scale:
        raise InternalError("hypersphere normal is not a unit spacelike vector")
    return sphere_from_subspace(complement(subspace(frame, [vec], rank_tol)))


def hypersphere_from_center_radius(center, radius: float,
                                   rank_tol: float = DEFAULT_RANK_TOL) -> Sphere:
    """Hypersphere of the euclidean model with the given center and radius."""
    z = as_vector(center)
    if not radius > 0:
        raise InvalidInput(f"radius must be positive, got {radius}")
    n = z.shape[0]
    zz = float(np.dot(z, z))
    vec = np.empty(n + 2)
    vec[:n] = 2.0 * z
    vec[n] = -1.0 - radius * radius + zz
    vec[n + 1] = 1.0 - radius * radius + zz
    vec /= 2.0 * radius
    return _sphere_from_unit_normal(vec, rank_tol)


def hypersphere_from_plane(normal, offset: float,
                           rank_tol: float = DEFAULT_RANK_TOL) -> Sphere:
    """Hyperplane <normal, x> = offset, viewed as a hypersphere through infinity."""
    b = as_vector(normal)
    nb = float(np.linalg.norm(b))
    if nb == 0.0:
        raise InvalidInput("plane normal must be nonzero")
    n = b.shape[0]
    vec = np.empty(n + 2)
    vec[:n] = b
    vec[n] = offset
    vec[n + 1] = offset
    vec /= nb
    return _sphere_from_unit_normal(vec, rank_tol)


def sphere_from_points(points, m: int, ambient_n: int | None = None,
                       rank_tol: float = DEFAULT_RANK_TOL) -> Sphere:
    """The m-sphere through m+2 points in general position.

    Raises PointsNotInGeneralPosition when the lifted points span fewer than
    m+2 dimensions, i.e. the points sit on a sphere of lower dimension.
    """
    pts = list(points)
    if len(pts) != m + 2:
        raise InvalidInput(f"an {m}-sphere needs exactly {m + 2} points, got {len(pts)}")
    n = ambient_n
    for p in pts:
        if not isinstance(p, ExtendedPoint):
            raise InvalidInput("points must be ExtendedPoint values")
        if not p.is_infinity:
            if n is None:
                n = len(p.coords)
            elif len(p.coords) != n:
                raise InvalidInput("points have inconsistent dimensions")
    if n is None:
        raise InvalidInput("cannot infer the ambient dimension from infinite points alone")
    lifts = np.array([lift(p, n) for p in pts])
    svals = np.linalg.svd(lifts, compute_uv=False)
    if svals[-1] <= rank_tol * svals[0]:
        raise PointsNotInGeneralPosition(
            f"the {m + 2} points lie on a sphere of dimension below {m}")
    space = subspace(MinkowskiFrame(n), lifts, rank_tol)
    if space.metric_type is not MetricType.PSEUDO_EUCLIDEAN:
        raise InternalError("span of distinct isotropic lifts is not of index 1")
    return sphere_from_subspace(space)


def hypersphere_unit_normal(sphere: Sphere, sign_tol: float = 1e-9) -> np.ndarray:
    """Representative unit normal of a hypersphere.

    The two unit vectors of the orthogonal line describe the same unoriented
    hypersphere; the sign is fixed by making the first coordinate that is
    nonzero (relative tolerance sign_tol) positive.
    """
    if sphere.m != sphere.ambient_n - 1:
        raise InvalidInput("only hyperspheres have a normal line")
    vec = complement(sphere.subspace).basis[0]
    s = scalar_product(vec, vec)
    if s <= 0:
        raise InternalError("hypersphere normal line is not spacelike")
    vec = vec / math.sqrt(s)
    scale = float(np.linalg.norm(vec))
    for c in vec:
        if abs(c) > sign_tol * scale:
            if c < 0:
                vec = -vec
            break
    return vec


def euclidean_data(sphere: Sphere, plane_tol: float = 1e-9):
    """Center/radius or normal/offset data of a hypersphere.

    Dispatch: the normal of a hypersphere through infinity has equal last two
    coordinates; below plane_tol of difference the sphere is reported as a
    plane, otherwise its center and radius are recovered.
    """
    vec = hypersphere_unit_normal(sphere)
    n = sphere.ambient_n
    c = vec[n + 1] - vec[n]
    if abs(c) <= plane_tol:
        return EuclideanPlane(normal=vec[:n].copy(), offset=float((vec[n] + vec[n + 1]) / 2.0))
    if c < 0:
        vec = -vec
        c = -c
    radius = 1.0 / c
    center = radius * vec[:n]
    return EuclideanSphere(center=center, radius=radius)


def contains(sphere: Sphere, point: ExtendedPoint, tol: float = DEFAULT_RANK_TOL) -> bool:
    """True when the point lies on the sphere."""
    x = lift(point, sphere.ambient_n)
    return member(x, sphere.subspace, tol)
