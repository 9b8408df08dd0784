"""Seeded samplers for the random matrix families under study.

Four geometric laws: unit-circle preserving maps with the arcsine-type
modulus law, their parabolic one-parameter family, order-two elliptics,
and parabolic maps fixing a random point of the sphere. Every sampler
draws from a counter-based stream keyed by (seed, stream_index), so
parallel runs that partition work by stream index reproduce bitwise.

Each sample_* op returns one draw. The *_block forms return numpy
arrays for the same law and consume the underlying stream in the same
trial-major order, so a block of n equals n single draws.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .moebius_core import MoebiusMap, SpherePoint

__all__ = [
    "RngStream",
    "FuchsianParabolicSpec",
    "Elliptic2Spec",
    "KleinianParabolicSpec",
    "sample_fuchsian",
    "sample_fuchsian_parabolic",
    "sample_elliptic2",
    "sample_kleinian_parabolic",
    "sample_sphere_uniform",
    "fuchsian_block",
    "fuchsian_parabolic_block",
    "elliptic2_block",
    "kleinian_parabolic_block",
    "sphere_uniform_block",
]

TWO_PI = 2.0 * math.pi


class RngStream:
    """One independently seeded draw sequence.

    Wraps a Philox counter-based generator keyed by
    SeedSequence(seed, spawn_key=(stream_index,)). The counter attribute
    records how many scalar uniforms have been consumed.
    """

    def __init__(self, seed: int, stream_index: int = 0):
        self.seed = int(seed)
        self.stream_index = int(stream_index)
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream_index,))
        self._gen = np.random.Generator(np.random.Philox(ss))
        self.counter = 0

    def uniform(self, lo: float = 0.0, hi: float = 1.0, size=None):
        if size is None:
            self.counter += 1
        else:
            self.counter += int(np.prod(size))
        return self._gen.uniform(lo, hi, size)


@dataclass(frozen=True)
class FuchsianParabolicSpec:
    """Parameters (theta, x) of a trace-2 unit-circle preserving map.

    The matrix is [[1+ix, x e^{i theta}], [x e^{-i theta}, 1-ix]]; x is
    the folded cotangent of a uniform angle, so it is always positive.
    """

    theta: float
    x: float

    def matrix(self) -> MoebiusMap:
        ph = complex(math.cos(self.theta), math.sin(self.theta))
        return MoebiusMap(
            complex(1.0, self.x),
            self.x * ph,
            self.x * ph.conjugate(),
            complex(1.0, -self.x),
        )


@dataclass(frozen=True)
class Elliptic2Spec:
    """Parameters of an order-two elliptic: modulus and argument of w.

    w_abs is the cosine of a uniform angle in [0, pi/2], kept strictly
    below 1 so the matrix normalization stays finite.
    """

    w_abs: float
    w_arg: float

    def matrix(self) -> MoebiusMap:
        s = 1.0 / math.sqrt(1.0 - self.w_abs * self.w_abs)
        w = self.w_abs * complex(math.cos(self.w_arg), math.sin(self.w_arg))
        return MoebiusMap(1j * s, 1j * w.conjugate() * s, -1j * w * s, -1j * s)


@dataclass(frozen=True)
class KleinianParabolicSpec:
    """Parabolic fixing z0 = t e^{i z0_arg}, with strength lam and twist theta.

    t is the tangent of a uniform angle (so the fixed point modulus
    follows the tangent law, not spherical area), lam the cotangent of
    an independent uniform angle.
    """

    t: float
    z0_arg: float
    lam: float
    theta: float

    def fixed_point(self) -> SpherePoint:
        eta = self.z0_arg
        return SpherePoint.of(self.t * complex(math.cos(eta), math.sin(eta)))

    def matrix(self) -> MoebiusMap:
        eta = complex(math.cos(self.z0_arg), math.sin(self.z0_arg))
        s = self.lam * complex(math.cos(self.theta), math.sin(self.theta)) / (self.t * self.t + 1.0)
        return MoebiusMap(
            1.0 - s * self.t,
            s * eta * self.t * self.t,
            -s / eta,
            1.0 + s * self.t,
        )


def _nonzero_uniform(rng: RngStream, lo: float, hi: float, size: int) -> np.ndarray:
    """Uniform block on [lo, hi) with exact-lo draws resampled.

    The left endpoint corresponds to a degenerate map (an infinite
    parameter after the cot or 1/sin transform), so it is redrawn rather
    than clamped.
    """
    out = rng.uniform(lo, hi, size)
    while True:
        bad = out == lo
        if not bad.any():
            return out
        out[bad] = rng.uniform(lo, hi, int(bad.sum()))


def fuchsian_block(rng: RngStream, n: int) -> tuple[np.ndarray, np.ndarray]:
    """n unit-circle preserving maps as paired entry arrays (a, c).

    |a| = 1/sin(v) for v uniform on (0, pi/2), giving the density
    (2/pi) / (x sqrt(x^2 - 1)) with median sqrt(2); both arguments are
    uniform on [0, 2 pi).
    """
    draws = rng.uniform(0.0, 1.0, (n, 3))
    v = _fold_away_zero(draws[:, 0] * (math.pi / 2.0), rng, math.pi / 2.0)
    abs_a = 1.0 / np.sin(v)
    abs_c = np.cos(v) / np.sin(v)
    a = abs_a * np.exp(1j * TWO_PI * draws[:, 1])
    c = abs_c * np.exp(1j * TWO_PI * draws[:, 2])
    return a, c


def _fold_away_zero(angles: np.ndarray, rng: RngStream, hi: float) -> np.ndarray:
    while True:
        bad = angles == 0.0
        if not bad.any():
            return angles
        angles[bad] = rng.uniform(0.0, 1.0, int(bad.sum())) * hi


def sample_fuchsian(rng: RngStream) -> MoebiusMap:
    """One random unit-circle preserving map [[a, c], [conj c, conj a]]."""
    a, c = fuchsian_block(rng, 1)
    a0, c0 = complex(a[0]), complex(c[0])
    return MoebiusMap(a0, c0, c0.conjugate(), a0.conjugate())


def fuchsian_parabolic_block(rng: RngStream, n: int) -> tuple[np.ndarray, np.ndarray]:
    """n draws of (theta, x): theta uniform, x = |cot(eta)| for eta uniform on (0, pi).

    Folding the cotangent keeps x positive; its density is
    (2/pi) / (1 + t^2) on t > 0 and P(x >= 1) = 1/2.
    """
    draws = rng.uniform(0.0, 1.0, (n, 2))
    theta = TWO_PI * draws[:, 0]
    eta = _fold_away_zero(draws[:, 1] * math.pi, rng, math.pi)
    x = np.abs(np.cos(eta) / np.sin(eta))
    while True:
        bad = x == 0.0
        if not bad.any():
            break
        eta_new = _fold_away_zero(rng.uniform(0.0, 1.0, int(bad.sum())) * math.pi, rng, math.pi)
        x[bad] = np.abs(np.cos(eta_new) / np.sin(eta_new))
    return theta, x


def sample_fuchsian_parabolic(rng: RngStream) -> FuchsianParabolicSpec:
    theta, x = fuchsian_parabolic_block(rng, 1)
    return FuchsianParabolicSpec(theta=float(theta[0]), x=float(x[0]))


def elliptic2_block(rng: RngStream, n: int) -> tuple[np.ndarray, np.ndarray]:
    """n draws of (w_abs, w_arg) with w_abs = cos of a uniform angle in (0, pi/2]."""
    draws = rng.uniform(0.0, 1.0, (n, 2))
    alpha = _fold_away_zero(draws[:, 0] * (math.pi / 2.0), rng, math.pi / 2.0)
    return np.cos(alpha), TWO_PI * draws[:, 1]


def sample_elliptic2(rng: RngStream) -> Elliptic2Spec:
    w_abs, w_arg = elliptic2_block(rng, 1)
    return Elliptic2Spec(w_abs=float(w_abs[0]), w_arg=float(w_arg[0]))


def kleinian_parabolic_block(
    rng: RngStream, n: int, spherical_fixed_point: bool = False
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """n draws of (t, z0_arg, lam, theta).

    Default mode sets t = tan(alpha) with alpha uniform on [0, pi/2),
    the rule the headline probabilities are tied to. The spherical mode
    instead places the fixed point by spherical area, t = tan(phi/2)
    with cos(phi) uniform; the two laws differ (area-uniform has
    alpha-density sin(2 alpha)).
    """
    draws = rng.uniform(0.0, 1.0, (n, 4))
    if spherical_fixed_point:
        cos_phi = 2.0 * draws[:, 0] - 1.0
        t = np.tan(np.arccos(np.clip(cos_phi, -1.0, 1.0)) / 2.0)
    else:
        t = np.tan(draws[:, 0] * (math.pi / 2.0))
    z0_arg = TWO_PI * draws[:, 1]
    beta = _fold_away_zero(draws[:, 2] * (math.pi / 2.0), rng, math.pi / 2.0)
    lam = np.cos(beta) / np.sin(beta)
    theta = TWO_PI * draws[:, 3]
    return t, z0_arg, lam, theta


def sample_kleinian_parabolic(
    rng: RngStream, spherical_fixed_point: bool = False
) -> KleinianParabolicSpec:
    t, z0_arg, lam, theta = kleinian_parabolic_block(rng, 1, spherical_fixed_point)
    return KleinianParabolicSpec(
        t=float(t[0]), z0_arg=float(z0_arg[0]), lam=float(lam[0]), theta=float(theta[0])
    )


def sphere_uniform_block(rng: RngStream, n: int) -> np.ndarray:
    """n points by normalized spherical area, as complex numbers.

    The modulus is tan(phi/2) with cos(phi) uniform on [-1, 1), the
    argument uniform; the hemisphere split P(|u| <= 1) = 1/2 and cap
    areas follow directly.
    """
    draws = rng.uniform(0.0, 1.0, (n, 2))
    cos_phi = 1.0 - 2.0 * draws[:, 0]
    r = np.tan(np.arccos(cos_phi) / 2.0)
    return r * np.exp(1j * TWO_PI * draws[:, 1])


def sample_sphere_uniform(rng: RngStream) -> SpherePoint:
    u = sphere_uniform_block(rng, 1)
    return SpherePoint.of(complex(u[0]))
