"""Complex 2x2 matrix algebra on the Riemann sphere.

Determinant-one matrices acting as linear fractional maps, identified up
to global sign. Includes trace classification, fixed points, isometric
circles for unit-circle preserving maps, and the spherical metric
normalized so that a full great circle has length 2*pi.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "MoebiusMap",
    "SpherePoint",
    "CirclePair",
    "MapClass",
    "identity",
    "compose",
    "inverse",
    "apply",
    "commutator_gamma",
    "classify",
    "fixed_points",
    "isometric_circles",
    "spherical_distance",
]

_DET_TOL = 1e-9
_CLASS_TOL = 1e-9


class MapClass(Enum):
    IDENTITY = "Identity"
    PARABOLIC = "Parabolic"
    ELLIPTIC = "Elliptic"
    LOXODROMIC = "Loxodromic"


@dataclass(frozen=True)
class SpherePoint:
    """A point of the Riemann sphere: a finite complex number or infinity.

    Infinity is an explicit marker so that fixed points of upper
    triangular maps come out exact rather than as large floats.
    """

    value: complex
    at_infinity: bool = False

    @classmethod
    def of(cls, z: complex) -> "SpherePoint":
        return cls(complex(z), False)

    @classmethod
    def infinity(cls) -> "SpherePoint":
        return cls(0j, True)

    @property
    def is_infinity(self) -> bool:
        return self.at_infinity

    def __repr__(self) -> str:
        return "SpherePoint(inf)" if self.at_infinity else f"SpherePoint({self.value!r})"


@dataclass(frozen=True)
class CirclePair:
    """The isometric circle of a map and of its inverse.

    Both circles share one radius; the map carries the first circle onto
    the second.
    """

    center_plus: complex
    center_minus: complex
    radius: float


@dataclass(frozen=True)
class MoebiusMap:
    """Matrix [[a, b], [c, d]] with ad - bc = 1, taken modulo sign.

    Construction validates finiteness of the entries and the determinant.
    The determinant tolerance is relative to the squared entry scale,
    since products of legitimate maps with large entries accumulate
    rounding in proportion to it.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            z = getattr(self, name)
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError(f"non-finite matrix entry {name}={z!r}")
        det = self.a * self.d - self.b * self.c
        scale = max(1.0, abs(self.a) ** 2, abs(self.b) ** 2, abs(self.c) ** 2, abs(self.d) ** 2)
        if abs(det - 1.0) > _DET_TOL * scale:
            raise ValueError(f"determinant {det!r} too far from 1")

    @property
    def trace(self) -> complex:
        return self.a + self.d

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def same_map(self, other: "MoebiusMap", tol: float = 1e-9) -> bool:
        """Equality in the sign-blind sense, entrywise within tol."""
        plus = max(
            abs(self.a - other.a), abs(self.b - other.b),
            abs(self.c - other.c), abs(self.d - other.d),
        )
        minus = max(
            abs(self.a + other.a), abs(self.b + other.b),
            abs(self.c + other.c), abs(self.d + other.d),
        )
        return min(plus, minus) <= tol


def identity() -> MoebiusMap:
    return MoebiusMap(1.0 + 0j, 0j, 0j, 1.0 + 0j)


def compose(m1: MoebiusMap, m2: MoebiusMap) -> MoebiusMap:
    """Matrix product m1 * m2, so the composite acts as m1 after m2."""
    return MoebiusMap(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def inverse(m: MoebiusMap) -> MoebiusMap:
    return MoebiusMap(m.d, -m.b, -m.c, m.a)


def apply(m: MoebiusMap, z: SpherePoint) -> SpherePoint:
    """Evaluate the linear fractional map at a sphere point.

    Infinity maps to a/c, the pole -d/c maps to infinity; both branches
    are exact when c is exactly zero.
    """
    if z.at_infinity:
        if m.c == 0:
            return SpherePoint.infinity()
        return SpherePoint.of(m.a / m.c)
    num = m.a * z.value + m.b
    den = m.c * z.value + m.d
    if den == 0:
        return SpherePoint.infinity()
    return SpherePoint.of(num / den)


def commutator_gamma(f: MoebiusMap, g: MoebiusMap) -> complex:
    """tr(f g f^-1 g^-1) - 2, computed through the trace identity.

    With tf = tr f, tg = tr g, tfg = tr(fg), the commutator trace equals
    tf^2 + tg^2 + tfg^2 - tf*tg*tfg - 2. Evaluating it this way avoids
    forming the commutator product, whose cancellation costs three extra
    digits for nearly commuting inputs. Independent of the sign choice
    of either argument.
    """
    tf = f.trace
    tg = g.trace
    tfg = (f.a * g.a + f.b * g.c) + (f.c * g.b + f.d * g.d)
    return tf * tf + tg * tg + tfg * tfg - tf * tg * tfg - 4.0


def _is_pm_identity(m: MoebiusMap, tol: float) -> bool:
    off = max(abs(m.b), abs(m.c))
    plus = max(abs(m.a - 1), abs(m.d - 1), off)
    minus = max(abs(m.a + 1), abs(m.d + 1), off)
    return min(plus, minus) <= tol


def classify(m: MoebiusMap) -> MapClass:
    """Conjugacy class from the squared trace.

    Parabolic when tr^2 = 4 within 1e-9 (and the map is not +-I),
    elliptic when tr^2 is real in [0, 4), loxodromic otherwise. The
    squared trace makes every branch sign-blind.
    """
    if _is_pm_identity(m, _CLASS_TOL):
        return MapClass.IDENTITY
    t2 = m.trace * m.trace
    if abs(t2 - 4.0) <= _CLASS_TOL:
        return MapClass.PARABOLIC
    if abs(t2.imag) <= _CLASS_TOL and -_CLASS_TOL <= t2.real < 4.0:
        return MapClass.ELLIPTIC
    return MapClass.LOXODROMIC


def fixed_points(m: MoebiusMap) -> tuple[SpherePoint, ...]:
    """Solutions of m(z) = z on the sphere.

    Returns one point for parabolics, two otherwise, ordered by real
    then imaginary part (infinity last) so the output is a canonical
    set. Raises for the identity, which fixes everything.
    """
    if _is_pm_identity(m, _CLASS_TOL):
        raise ValueError("identity map fixes every point")
    if m.c == 0:
        diff = m.d - m.a
        scale = max(1.0, abs(m.a), abs(m.d))
        if abs(diff) <= 1e-12 * scale:
            return (SpherePoint.infinity(),)
        return _ordered(SpherePoint.of(m.b / diff), SpherePoint.infinity())
    tr = m.trace
    disc = tr * tr - 4.0
    if abs(disc) <= _CLASS_TOL:
        return (SpherePoint.of((m.a - m.d) / (2.0 * m.c)),)
    root = cmath.sqrt(disc)
    z1 = (m.a - m.d + root) / (2.0 * m.c)
    z2 = (m.a - m.d - root) / (2.0 * m.c)
    return _ordered(SpherePoint.of(z1), SpherePoint.of(z2))


def _ordered(p: SpherePoint, q: SpherePoint) -> tuple[SpherePoint, SpherePoint]:
    if q.at_infinity:
        return (p, q)
    if p.at_infinity:
        return (q, p)
    kp = (p.value.real, p.value.imag)
    kq = (q.value.real, q.value.imag)
    return (p, q) if kp <= kq else (q, p)


def isometric_circles(m: MoebiusMap) -> CirclePair:
    """Isometric circles |cz + d| = 1 of the map and of its inverse.

    For unit-circle preserving maps [[a, c], [conj c, conj a]] these are
    the circles centered at -conj(a)/conj(c) and a/conj(c) with common
    radius 1/|c|; the formulas below are the general-matrix versions
    that reduce to those. Undefined when the map fixes infinity.
    """
    if abs(m.c) < 1e-12:
        raise ValueError("degenerate: map fixes infinity, no isometric circle")
    return CirclePair(
        center_plus=-m.d / m.c,
        center_minus=m.a / m.c,
        radius=1.0 / abs(m.c),
    )


def spherical_distance(z: SpherePoint, w: SpherePoint) -> float:
    """Great-circle distance for the metric with length element 2|dz|/(1+|z|^2).

    Normalized so the extended real line is a great circle of length
    2*pi; antipodal points are at distance pi. Closed form
    2*atan2(|z - w|, |1 + conj(z) w|), which every rotation of the
    sphere leaves invariant.
    """
    if z.at_infinity and w.at_infinity:
        return 0.0
    if z.at_infinity:
        return 2.0 * math.atan2(1.0, abs(w.value))
    if w.at_infinity:
        return 2.0 * math.atan2(1.0, abs(z.value))
    num = abs(z.value - w.value)
    den = abs(1.0 + z.value.conjugate() * w.value)
    return 2.0 * math.atan2(num, den)
