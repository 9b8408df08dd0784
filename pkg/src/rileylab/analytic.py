"""Closed-form densities and the special integrals behind the headline numbers.

The densities describe the commutator statistics of random trace-2 pairs:
the modulus law of the matrix entry a, the product of two independent
folded cotangents, the arcsine law of sin^2 of a uniform angle, and the
Mellin convolution of all three. Quadrature is a self-contained adaptive
Simpson rule with explicit substitutions at endpoint singularities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .samplers import RngStream

__all__ = [
    "QuadratureSpec",
    "Histogram",
    "QuadratureError",
    "pdf_abs_a",
    "pdf_xy",
    "pdf_sin2",
    "pdf_alpha",
    "prob_fuchsian_discrete",
    "prob_fuchsian_discrete_swapped",
    "integral_log_arctanh",
    "expected_f0_parabolic",
    "build_histogram",
    "arclength_extension_block",
]


@dataclass(frozen=True)
class QuadratureSpec:
    """Adaptive quadrature controls: stop when a panel meets abs_tol or
    rel_tol, give up below interval depth max_depth."""

    abs_tol: float = 1e-8
    rel_tol: float = 1e-8
    max_depth: int = 24

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")


class QuadratureError(RuntimeError):
    """Raised when adaptive refinement hits max_depth without converging."""


@dataclass(frozen=True)
class Histogram:
    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]
    total: int


def _adaptive_simpson(f, a: float, b: float, spec: QuadratureSpec) -> tuple[float, float]:
    """Integrate f on [a, b]; returns (value, error_estimate).

    Classic recursive Simpson with the 1/15 Richardson error rule. The
    returned error estimate is the sum of accepted panel estimates.
    """
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    value, err = _simpson_panel(f, a, b, fa, fm, fb, whole, spec, 0)
    return value, err

def _simpson_panel(f, a, b, fa, fm, fb, whole, spec, depth):
    m = 0.5 * (a + b)
    lm = f(0.5 * (a + m))
    rm = f(0.5 * (m + b))
    left = (m - a) / 6.0 * (fa + 4.0 * lm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * rm + fb)
    delta = left + right - whole
    tol = max(spec.abs_tol, spec.rel_tol * abs(whole))
    if abs(delta) <= 15.0 * tol or (b - a) < 1e-15:
        return left + right + delta / 15.0, abs(delta) / 15.0
    if depth >= spec.max_depth:
        raise QuadratureError(
            f"no convergence on [{a}, {b}] at depth {depth}: panel error {abs(delta) / 15.0:.3e}"
        )
    half = dataclass_replace(spec)
    lv, le = _simpson_panel(f, a, m, fa, lm, fm, left, half, depth + 1)
    rv, re_ = _simpson_panel(f, m, b, fm, rm, fb, right, half, depth + 1)
    return lv + rv, le + re_


def dataclass_replace(spec: QuadratureSpec) -> QuadratureSpec:
    # Each half inherits half the absolute budget so panel errors sum
    # to at most the requested total.
    return QuadratureSpec(spec.abs_tol / 2.0, spec.rel_tol, spec.max_depth)


def pdf_abs_a(x: float) -> float:
    """Density (2/pi) / (x sqrt(x^2 - 1)) of the entry modulus |a|, x > 1."""
    if x <= 1.0:
        raise ValueError(f"density of |a| lives on x > 1, got {x}")
    return (2.0 / math.pi) / (x * math.sqrt(x * x - 1.0))


def pdf_xy(s: float) -> float:
    """Density (4/pi^2) log(s)/(s^2 - 1) of a product of two folded cotangents.

    Continuous through s = 1 where the value is the limit 2/pi^2.
    """
    if s <= 0.0:
        raise ValueError(f"product density lives on s > 0, got {s}")
    t = s - 1.0
    if abs(t) < 0.5:
        # log(s)/(s^2-1) = (log1p(t)/t) / (s+1), stable through t = 0
        ratio = 1.0 if t == 0.0 else math.log1p(t) / t
        return (4.0 / math.pi**2) * ratio / (s + 1.0)
    return (4.0 / math.pi**2) * math.log(s) / (s * s - 1.0)


def pdf_sin2(t: float) -> float:
    """Arcsine density (1/pi) / sqrt(t(1-t)) of sin^2 of a uniform angle."""
    if not 0.0 < t < 1.0:
        raise ValueError(f"arcsine density lives on (0, 1), got {t}")
    return (1.0 / math.pi) / math.sqrt(t * (1.0 - t))


def _log_quotient(a: float, b: float) -> float:
    """log(a/b) / (a - b) for positive a, b, stable as a -> b."""
    d = a - b
    if abs(d) < 0.1 * b:
        r = d / b
        if r == 0.0:
            return 1.0 / a
        return math.log1p(r) / d
    return math.log(a / b) / d


def pdf_alpha(s: float, q: QuadratureSpec | None = None) -> float:
    """Density of the product (folded cot) * (folded cot) * sin^2(uniform).

    Computed as (4/pi^3) times the integral over u in [0, pi/2] of
    sin^2(u) * log(s^2 / sin^4 u) / (s^2 - sin^4 u), the t = sin^2 u
    substitution of the Mellin convolution, which removes the
    1/sqrt(t(1-t)) endpoint singularity.
    """
    if s <= 0.0:
        raise ValueError(f"density lives on s > 0, got {s}")
    q = q or QuadratureSpec()
    s2 = s * s

    def integrand(u: float) -> float:
        si = math.sin(u)
        si2 = si * si
        if si2 == 0.0:
            return 0.0
        return si2 * _log_quotient(s2, si2 * si2)

    value, _ = _adaptive_simpson(integrand, 0.0, math.pi / 2.0, q)
    return (4.0 / math.pi**3) * value


def prob_fuchsian_discrete(q: QuadratureSpec | None = None) -> float:
    """Mass of the commutator-product density above 1, by nested quadrature.

    The outer tail integral over s in [1, inf) runs through s = 1/v,
    v in (0, 1]; the integrand at v = 0 vanishes like v^2 log v.
    """
    q = q or QuadratureSpec()
    inner = QuadratureSpec(q.abs_tol * 1e-2, q.rel_tol * 1e-2, q.max_depth)
    outer = QuadratureSpec(max(q.abs_tol, 1e-7), max(q.rel_tol, 1e-7), q.max_depth)

    def tail_integrand(v: float) -> float:
        if v == 0.0:
            return 0.0
        return pdf_alpha(1.0 / v, inner) / (v * v)

    value, _ = _adaptive_simpson(tail_integrand, 0.0, 1.0, outer)
    return value


def prob_fuchsian_discrete_swapped(q: QuadratureSpec | None = None) -> float:
    """Same mass with the two integrals exchanged (Fubini cross-check).

    Outer over the angle u, inner over v = 1/s on (0, 1] with the
    v = r^2 substitution to tame the logarithmic endpoint.
    """
    q = q or QuadratureSpec()
    inner = QuadratureSpec(max(q.abs_tol * 1e-1, 1e-9), q.rel_tol, q.max_depth)
    outer = QuadratureSpec(max(q.abs_tol, 1e-7), max(q.rel_tol, 1e-7), q.max_depth)

    def outer_integrand(u: float) -> float:
        si = math.sin(u)
        b = (si * si) ** 2
        if b == 0.0:
            return 0.0

        def inner_integrand(r: float) -> float:
            if r == 0.0:
                return 0.0
            v = r * r
            return 2.0 * r * _log_quotient(1.0 / (v * v), b) / (v * v)

        value, _ = _adaptive_simpson(inner_integrand, 0.0, 1.0, inner)
        return si * si * value

    value, _ = _adaptive_simpson(outer_integrand, 0.0, math.pi / 2.0, outer)
    return (4.0 / math.pi**3) * value


def integral_log_arctanh(q: QuadratureSpec | None = None) -> float:
    """The constant integral of log(t) artanh(t) / sqrt(t(1-t)) over (0, 1).

    Split at t = 1/2 after substituting t = sin^2(u): the lower piece is
    smooth, the upper piece gets a further square-root change of
    variable to absorb the logarithmic blowup of artanh at 1.
    """
    q = q or QuadratureSpec()

    def lower(u: float) -> float:
        si2 = math.sin(u) ** 2
        if si2 == 0.0:
            return 0.0
        return 2.0 * math.log(si2) * math.atanh(si2)

    def upper(r: float) -> float:
        # u = pi/2 - r^2, t = cos^2(r^2)
        if r == 0.0:
            return 0.0
        c2 = math.cos(r * r) ** 2
        if c2 >= 1.0:
            return 0.0
        return 4.0 * r * math.log(c2) * math.atanh(c2)

    a, _ = _adaptive_simpson(lower, 0.0, math.pi / 4.0, q)
    b, _ = _adaptive_simpson(upper, 0.0, math.sqrt(math.pi / 4.0), q)
    return a + b


def expected_f0_parabolic() -> tuple[float, float]:
    """Mean and variance of |f(0)| for the parabolic family, closed form."""
    mean = 4.0 / (3.0 * math.pi)
    variance = 0.25 - 16.0 / (9.0 * math.pi**2)
    return mean, variance


def build_histogram(samples, bins: int, value_range: tuple[float, float]) -> Histogram:
    """Uniform-bin counts; samples outside the range only raise the total."""
    lo, hi = value_range
    if bins < 1:
        raise ValueError("need at least one bin")
    if not lo < hi:
        raise ValueError(f"empty range ({lo}, {hi})")
    arr = np.asarray(list(samples), dtype=float)
    counts, edges = np.histogram(arr, bins=bins, range=(lo, hi))
    return Histogram(
        bin_edges=tuple(float(e) for e in edges),
        counts=tuple(int(c) for c in counts),
        total=int(arr.size),
    )


def arclength_extension_block(rng: RngStream, n: int) -> np.ndarray:
    """Arc lengths cut on the unit circle by the conjugated parabolic family.

    Samples arccot( cot(eta) (1 + cos^2(alpha) - 2 cos(alpha)
    sin(alpha+theta)) / sin^2(alpha) ) with eta, alpha uniform on
    (0, pi/2) and theta uniform on [0, 2 pi). Values lie in (0, pi/2];
    the law visibly favors the lower half of that range.
    """
    draws = rng.uniform(0.0, 1.0, (n, 3))
    eta = draws[:, 0] * (math.pi / 2.0)
    alpha = draws[:, 1] * (math.pi / 2.0)
    while True:
        bad = (eta == 0.0) | (alpha == 0.0)
        if not bad.any():
            break
        k = int(bad.sum())
        eta[bad] = rng.uniform(0.0, 1.0, k) * (math.pi / 2.0)
        alpha[bad] = rng.uniform(0.0, 1.0, k) * (math.pi / 2.0)
    theta = 2.0 * math.pi * draws[:, 2]
    ca = np.cos(alpha)
    arg = (np.cos(eta) / np.sin(eta)) * (1.0 + ca * ca - 2.0 * ca * np.sin(alpha + theta)) / np.sin(alpha) ** 2
    return np.arctan2(1.0, arg)
