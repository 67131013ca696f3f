"""
Saddle-point asymptotics for block-word counts.

The generating function ``e^{-y} / H(x, y)`` with ``H = e^{-x} + e^{-y} - 1``
has its dominant singularity for direction ``(r, s)`` at the point of the
curve ``H = 0`` where ``x = f^{-1}(s/r)`` and ``y = f^{-1}(r/s)``. All
estimates are carried in natural-log scale because the counts overflow
doubles near n = 170.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "EPSILON_0", "LOG2", "DIAGONAL_CONSTANT", "DIAGONAL_GROWTH",
    "SaddlePoint", "LogEstimate",
    "f", "f_inverse", "in_sector", "saddle_point",
    "H", "H_partials", "q_general", "q_specialized", "p_positivity",
    "log_estimate_block", "diagonal_estimate", "strict_minimality_check",
    "log_of_count", "log_factorial",
]

LOG2 = math.log(2.0)
EPSILON_0 = (math.e - 1.0) * (1.0 - math.log(math.e - 1.0))
DIAGONAL_GROWTH = 1.0 / (2.0 * LOG2)
DIAGONAL_CONSTANT = 1.0 / (2.0 * LOG2 * math.sqrt(1.0 - LOG2))

_SMALL_T = 1e-6
_LARGE_T = 30.0


def f(t: float) -> float:
    """
    ``(1 - e^t) log(1 - e^{-t}) / t``, a decreasing bijection of the positive reals.

    Behaves like ``-log t`` as ``t -> 0+`` and like ``1/t`` as ``t -> inf``.
    """
    if not t > 0:
        raise ValueError(f"f is defined for t > 0, got {t}")
    if t < _SMALL_T:
        # log(1 - e^{-t}) = log t + log(1 - t/2 + t^2/6); (e^t - 1)/t = 1 + t/2 + t^2/6
        log_term = math.log(t) + math.log1p(-t / 2 + t * t / 6)
        return -(1.0 + t / 2 + t * t / 6) * log_term
    if t > _LARGE_T:
        # (e^t - 1) * -log(1 - e^{-t}) = 1 - sum_{m>=1} e^{-mt} / (m (m+1))
        q = math.exp(-t)
        return (1.0 - q / 2 - q * q / 6) / t
    if t > LOG2:
        log_term = math.log1p(-math.exp(-t))
    else:
        log_term = math.log(-math.expm1(-t))
    return -math.expm1(t) * log_term / t


def f_inverse(v: float) -> float:
    """
    Solve ``f(t) = v`` by bracketed bisection.

    The bracket starts from the two asymptotic branches and is widened
    geometrically. Roots below the smallest positive double (v above about
    745) raise OverflowError.
    """
    if not v > 0:
        raise ValueError(f"f_inverse is defined for v > 0, got {v}")
    lo = min(math.exp(-v), 0.5 / v)
    hi = max(2.0 / v, 5.0)
    while lo > 0.0 and f(lo) < v:
        lo /= 2.0
    while math.isfinite(hi) and f(hi) > v:
        hi *= 2.0
    if lo == 0.0 or not math.isfinite(hi):
        raise OverflowError(f"f_inverse({v}) is not representable as a double")
    while hi - lo > 1e-13 * hi:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if f(mid) > v:
            lo = mid
        else:
            hi = mid
    # take whichever end of the final bracket fits best
    return min((lo, hi, 0.5 * (lo + hi)), key=lambda t: abs(f(t) - v))


def in_sector(r: int, s: int) -> bool:
    if r < 1 or s < 1:
        raise ValueError("in_sector needs r, s >= 1")
    ratio = s / r
    return EPSILON_0 <= ratio <= 1.0 / EPSILON_0


@dataclass(frozen=True)
class SaddlePoint:
    x: float
    y: float
    r: int
    s: int
    variety_residual: float
    in_sector: bool

    @property
    def outside_sector(self) -> bool:
        return not self.in_sector

    def direction_residual(self) -> float:
        """Relative mismatch in ``r y e^{-y} = s x e^{-x}``."""
        lhs = self.r * self.y * math.exp(-self.y)
        rhs = self.s * self.x * math.exp(-self.x)
        return abs(lhs - rhs) / max(abs(lhs), abs(rhs))


def saddle_point(r: int, s: int) -> SaddlePoint:
    if r < 1 or s < 1:
        raise ValueError("saddle_point needs r, s >= 1")
    if r == s:
        x = y = LOG2
    else:
        x = f_inverse(s / r)
        y = f_inverse(r / s)
    return SaddlePoint(
        x=x, y=y, r=r, s=s,
        variety_residual=math.exp(-x) + math.exp(-y) - 1.0,
        in_sector=in_sector(r, s),
    )


def H(x, y):
    return np.exp(-x) + np.exp(-y) - 1.0


def H_partials(x: float, y: float) -> dict[str, float]:
    """First and second partials of ``H``; the mixed partial vanishes."""
    ex, ey = math.exp(-x), math.exp(-y)
    return {"x": -ex, "y": -ey, "xx": ex, "yy": ey, "xy": 0.0}


def q_general(x: float, y: float) -> float:
    d = H_partials(x, y)
    Hx, Hy, Hxx, Hyy, Hxy = d["x"], d["y"], d["xx"], d["yy"], d["xy"]
    return (
        -y * y * Hy * Hy * x * Hx
        - y * Hy * x * x * Hx * Hx
        - x * x * y * y * (Hy * Hy * Hxx + Hx * Hx * Hyy - 2.0 * Hx * Hy * Hxy)
    )


def q_specialized(x: float, y: float) -> float:
    """
    Closed form ``xy e^{-x-y} [y e^{-y} + x e^{-x} - xy (e^{-y} + e^{-x})]``.

    Expanding :func:`q_general` with the partials of ``H`` gives this
    expression identically, on or off the curve.
    """
    ex, ey = math.exp(-x), math.exp(-y)
    return x * y * ex * ey * (y * ey + x * ex - x * y * (ey + ex))


def p_positivity(x: float, y: float) -> float:
    """``y e^{-y} + x e^{-x} - x y``; positive on the real positive branch of the curve."""
    return y * math.exp(-y) + x * math.exp(-x) - x * y


def log_factorial(n: int) -> float:
    return math.lgamma(n + 1)


@dataclass(frozen=True)
class LogEstimate:
    log_factorials: float
    log_power_term: float
    log_prefactor: float
    leading_coefficient: float
    outside_sector: bool = False

    @property
    def log_value(self) -> float:
        return (
            self.log_factorials + self.log_power_term + self.log_prefactor
            + math.log(self.leading_coefficient)
        )

    def scientific(self, digits: int = 6) -> str:
        """Render ``exp(log_value)`` as ``m.mmmmmEk`` without overflowing."""
        log10 = self.log_value / math.log(10.0)
        exponent = math.floor(log10)
        mantissa = 10.0 ** (log10 - exponent)
        if round(mantissa, digits - 1) >= 10.0:
            mantissa, exponent = mantissa / 10.0, exponent + 1
        return f"{mantissa:.{digits - 1}f}e{exponent:+d}"


def log_estimate_block(r: int, s: int) -> LogEstimate:
    """
    Leading-order log estimate of the count of ``b^{r-1} a^s`` (ambient
    ``S_{r+s}``), dropping the ``O(s^{-1/2})`` correction.
    """
    sp = saddle_point(r, s)
    x, y = sp.x, sp.y
    q = q_specialized(x, y)
    return LogEstimate(
        log_factorials=log_factorial(r) + log_factorial(s),
        log_power_term=-r * math.log(x) - s * math.log(y),
        log_prefactor=-0.5 * math.log(2.0 * math.pi) + 0.5 * math.log(y * math.exp(-y) / (s * q)),
        leading_coefficient=math.exp(-y),
        outside_sector=sp.outside_sector,
    )


def diagonal_estimate(n: int) -> LogEstimate:
    """Log estimate of ``[b^{floor((n-1)/2)} a^{ceil((n-1)/2)}]``."""
    if n < 1:
        raise ValueError("diagonal_estimate needs n >= 1")
    # leading coefficient e^{-log 2} = 1/2 is split out of the constant
    return LogEstimate(
        log_factorials=log_factorial(n),
        log_power_term=n * math.log(DIAGONAL_GROWTH),
        log_prefactor=math.log(2.0 * DIAGONAL_CONSTANT),
        leading_coefficient=0.5,
    )


_EXCLUDE_RADIUS = 1e-3


def strict_minimality_check(a: float, b: float, samples: int = 10_000) -> bool:
    """
    Sample the torus ``|z| = a, |w| = b`` and confirm ``Re H(z, w) > 0`` away
    from ``(a, b)`` itself.

    Uses a deterministic ``k x k`` angle grid with ``k = ceil(sqrt(samples))``.
    """
    if samples < 100:
        raise ValueError("need at least 100 samples")
    if not (0 < a < 1 and 0 < b < 1):
        raise ValueError(f"({a}, {b}) is not in (0, 1)^2")
    if abs(math.exp(-a) + math.exp(-b) - 1.0) > 1e-10:
        raise ValueError(f"({a}, {b}) is not on the curve e^-x + e^-y = 1")
    k = math.isqrt(samples - 1) + 1
    theta = np.linspace(0.0, 2.0 * np.pi, k, endpoint=False)
    # include angles just outside the excluded disc, where Re H is smallest
    near = np.array([1.5 * _EXCLUDE_RADIUS, -1.5 * _EXCLUDE_RADIUS])
    theta = np.concatenate([theta, near % (2.0 * np.pi)])
    T, P = np.meshgrid(theta, theta, indexing="ij")
    wrapped = np.hypot(np.angle(np.exp(1j * T)), np.angle(np.exp(1j * P)))
    keep = wrapped >= _EXCLUDE_RADIUS
    z = a * np.exp(1j * T[keep])
    w = b * np.exp(1j * P[keep])
    re_h = np.exp(-z).real + np.exp(-w).real - 1.0
    return bool(np.all(re_h > 0.0))


def log_of_count(c: int) -> float:
    """Natural log of a positive integer of any size."""
    if c < 1:
        raise ValueError("log_of_count needs c >= 1")
    shift = max(0, c.bit_length() - 64)
    return math.log(c >> shift) + shift * LOG2
