"""Weighted Jensen gaps, quotient means of function pairs, and moment bounds.

The Jensen gap of h at a weighted sample is

    gap(h) = sum_i p_i h(x_i) - h(sum_i p_i x_i),

nonnegative for convex h and zero when all points coincide.  For a pair
(f, g) with g strictly convex, the quotient gap(f)/gap(g) is a mean of the
sample points -- it lands in [min x, max x] for every sample -- exactly when
f''(t) = t g''(t) on the working interval.  Given g, that relation pins f up
to an affine term: f(t) = t g(t) - 2 G(t) + c t + d with G an antiderivative
of g, and affine terms never change the quotient.

The one-parameter power family realized by :func:`power_generator` (curvature
t^(s-2)) generates the bivariate lambda family: for a two-point sample with
equal weights, the quotient of the order-(s+1) and order-s gaps is
lambda_s(x1, x2).  The order-s gap itself, :func:`power_gap`, is log-convex
in s, which makes the gap quotient monotone in the order.

The cubic special case (f = t**3/3, g = t**2, valid on all of R) yields the
third-moment bounds exposed by :func:`cubic_moment_bounds`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .errors import (
    DegenerateSampleError,
    DomainError,
    InvalidPairError,
    InvalidReportError,
    UsageError,
)

__all__ = [
    "ConvexPair",
    "CubicBounds",
    "MomentReport",
    "WeightedSample",
    "cubic_moment_bounds",
    "jensen_gap",
    "lambda_quotient",
    "log_convexity_holds",
    "mean_condition_residual",
    "pair_from_g",
    "power_gap",
    "power_gap_ratio",
    "power_generator",
    "power_generator_d1",
    "power_generator_d2",
    "power_pair",
]

Evaluator = Callable[[float], float]

# Relative spread below which a sample counts as degenerate for gap quotients.
_DEGENERATE_SPREAD = 1e-8


@dataclass(frozen=True)
class WeightedSample:
    """Sample points with positive weights, normalized to sum 1 on construction."""

    points: tuple[float, ...]
    weights: tuple[float, ...]

    def __init__(self, points: Sequence[float], weights: Sequence[float] | None = None):
        pts = tuple(float(x) for x in points)
        if len(pts) < 2:
            raise DomainError(f"a weighted sample needs at least 2 points, got {len(pts)}")
        if not all(math.isfinite(x) for x in pts):
            raise DomainError("sample points must be finite")
        if weights is None:
            wts = (1.0 / len(pts),) * len(pts)
        else:
            raw = tuple(float(w) for w in weights)
            if len(raw) != len(pts):
                raise DomainError(
                    f"got {len(pts)} points but {len(raw)} weights"
                )
            if not all(math.isfinite(w) and w > 0.0 for w in raw):
                raise DomainError("weights must be finite and strictly positive")
            total = math.fsum(raw)
            wts = tuple(w / total for w in raw)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", wts)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def mean(self) -> float:
        return math.fsum(p * x for p, x in zip(self.weights, self.points))

    @property
    def min_point(self) -> float:
        return min(self.points)

    @property
    def max_point(self) -> float:
        return max(self.points)

    @property
    def spread(self) -> float:
        return self.max_point - self.min_point

    def is_degenerate(self, rel: float = _DEGENERATE_SPREAD) -> bool:
        scale = max(abs(self.min_point), abs(self.max_point), 1e-300)
        return self.spread < rel * scale

    def require_positive(self) -> None:
        if self.min_point <= 0.0:
            raise DomainError("this operation needs strictly positive sample points")


def jensen_gap(h: Evaluator, sample: WeightedSample) -> float:
    """sum p_i h(x_i) - h(sum p_i x_i); >= 0 for convex h, 0 if all points equal."""
    center = sample.mean
    return math.fsum(p * h(x) for p, x in zip(sample.weights, sample.points)) - h(center)


def _fd_second(h: Evaluator, t: float) -> float:
    # Central second difference with one Richardson step.  The relative step
    # 1e-4 sits near the eps**(1/4) roundoff/truncation optimum for second
    # differences; smaller steps push the eps/h^2 noise floor above the 1e-6
    # certification tolerance.
    step = 1e-4 * max(1.0, abs(t))
    coarse = (h(t + step) - 2.0 * h(t) + h(t - step)) / (step * step)
    half = 0.5 * step
    fine = (h(t + half) - 2.0 * h(t) + h(t - half)) / (half * half)
    return (4.0 * fine - coarse) / 3.0


@dataclass(frozen=True)
class ConvexPair:
    """Evaluators for a pair (f, g) intended to satisfy f'' = t g''.

    Second derivatives are optional; when absent they are estimated by
    Richardson-extrapolated central differences.  `interval` is the open
    domain both functions are defined on; operations never evaluate outside
    it.
    """

    f: Evaluator
    g: Evaluator
    g_second: Evaluator | None = None
    f_second: Evaluator | None = None
    antiderivative: Evaluator | None = None
    interval: tuple[float, float] = (0.0, math.inf)

    def f_second_at(self, t: float) -> float:
        return self.f_second(t) if self.f_second is not None else _fd_second(self.f, t)

    def g_second_at(self, t: float) -> float:
        return self.g_second(t) if self.g_second is not None else _fd_second(self.g, t)

    def check_hull(self, lo: float, hi: float) -> None:
        if not (self.interval[0] < lo and hi < self.interval[1]):
            raise DomainError(
                f"sample hull [{lo}, {hi}] leaves the pair's interval {self.interval}"
            )


def lambda_quotient(pair: ConvexPair, sample: WeightedSample) -> float:
    """Quotient of Jensen gaps gap(f)/gap(g) at the sample.

    A mean of the points whenever the pair satisfies the curvature relation
    on the hull.  Degenerate samples are rejected (0/0), as are pairs whose
    g-gap fails to be strictly positive.
    """
    if sample.spread <= 1e-13 * max(abs(sample.min_point), abs(sample.max_point), 1e-300):
        raise DegenerateSampleError("all sample points coincide; the quotient is 0/0")
    pair.check_hull(sample.min_point, sample.max_point)
    gap_g = jensen_gap(pair.g, sample)
    if not gap_g > 0.0:
        raise InvalidPairError(
            f"g-gap must be strictly positive (g strictly convex); got {gap_g!r}"
        )
    return jensen_gap(pair.f, sample) / gap_g


def pair_from_g(
    g: Evaluator,
    g_second: Evaluator,
    antiderivative: Evaluator | None = None,
    interval: tuple[float, float] = (0.0, math.inf),
) -> ConvexPair:
    """Build the mean-generating partner f(t) = t g(t) - 2 G(t) of g.

    G is an antiderivative of g with G(1) = 0; when not supplied it falls
    back to adaptive quadrature from 1 (declared tolerance 1e-10).  The
    affine constants of the general solution are dropped -- they never
    affect a gap quotient.  f'' = t g'' then holds identically; the residual
    check recovers it by finite differences to ~1e-6.
    """
    if antiderivative is None:
        from scipy.integrate import quad

        def antiderivative(t: float, _g=g) -> float:
            value, _err = quad(_g, 1.0, t, epsabs=1e-12, epsrel=1e-12, limit=200)
            return value

    def f(t: float) -> float:
        return t * g(t) - 2.0 * antiderivative(t)

    return ConvexPair(
        f=f, g=g, g_second=g_second, f_second=None,
        antiderivative=antiderivative, interval=interval,
    )


def mean_condition_residual(pair: ConvexPair, grid: Sequence[float]) -> float:
    """max over the grid of |f''(t) - t g''(t)|.

    Uses supplied second derivatives when present, finite differences
    otherwise.  Zero (to tolerance) certifies that the quotient is a mean on
    the gridded interval; a clearly positive residual flags a non-mean pair.
    """
    worst = 0.0
    for t in grid:
        if not (pair.interval[0] < t < pair.interval[1]):
            raise DomainError(f"grid point {t!r} leaves the pair's interval")
        worst = max(worst, abs(pair.f_second_at(t) - t * pair.g_second_at(t)))
    return worst


# ---------------------------------------------------------------------------
# the power family
# ---------------------------------------------------------------------------


def power_generator(s: float, t: float) -> float:
    """Normalized convex power function of order s: curvature t^(s-2).

        (t^s - s t + s - 1) / (s (s - 1)),   limits t - log t - 1 at s = 0
                                             and t log t - t + 1 at s = 1.

    Vanishes with its first derivative at t = 1 for every order.  Evaluated
    through expm1 so that orders arbitrarily close to 0 and 1 lose no
    precision.
    """
    if not (math.isfinite(s) and math.isfinite(t)):
        raise DomainError(f"order and argument must be finite, got ({s!r}, {t!r})")
    if t <= 0.0:
        raise DomainError(f"the power family lives on t > 0, got {t!r}")
    if s == 0.0:
        return t - math.log(t) - 1.0
    if s == 1.0:
        return t * math.log(t) - t + 1.0
    log_t = math.log(t)
    if s > 0.5:
        # t^s - st + s - 1 = t (t^(s-1) - 1) + (1 - s)(t - 1)
        numerator = t * math.expm1((s - 1.0) * log_t) + (1.0 - s) * (t - 1.0)
    else:
        # t^s - st + s - 1 = (t^s - 1) + s (1 - t)
        numerator = math.expm1(s * log_t) + s * (1.0 - t)
    return numerator / (s * (s - 1.0))


def power_generator_d1(s: float, t: float) -> float:
    """First derivative of :func:`power_generator`: (t^(s-1) - 1)/(s - 1)."""
    if t <= 0.0:
        raise DomainError(f"the power family lives on t > 0, got {t!r}")
    if s == 0.0:
        return 1.0 - 1.0 / t
    if s == 1.0:
        return math.log(t)
    return math.expm1((s - 1.0) * math.log(t)) / (s - 1.0)


def power_generator_d2(s: float, t: float) -> float:
    """Second derivative of :func:`power_generator`: exactly t^(s-2)."""
    if t <= 0.0:
        raise DomainError(f"the power family lives on t > 0, got {t!r}")
    return t ** (s - 2.0)


def power_pair(s: float) -> ConvexPair:
    """The order-s mean-generating pair (orders s+1 over s) with exact derivatives."""
    if not math.isfinite(s):
        raise DomainError(f"order parameter must be finite, got {s!r}")
    return ConvexPair(
        f=lambda t: power_generator(s + 1.0, t),
        g=lambda t: power_generator(s, t),
        g_second=lambda t: t ** (s - 2.0),
        f_second=lambda t: t ** (s - 1.0),
        interval=(0.0, math.inf),
    )


def power_gap(s: float, sample: WeightedSample) -> float:
    """Weighted Jensen gap of the order-s power generator, in closed form.

        (sum p x^s - (sum p x)^s) / (s (s - 1)),
        log(sum p x) - sum p log x            at s = 0,
        sum p x log x - (sum p x) log(...)    at s = 1.

    Nonnegative always; zero exactly when the sample is (relatively)
    degenerate, mirroring the equal-argument branch of the mean family.
    """
    if not math.isfinite(s):
        raise DomainError(f"order parameter must be finite, got {s!r}")
    sample.require_positive()
    if sample.is_degenerate():
        return 0.0
    center = sample.mean
    if s == 0.0:
        return math.log(center) - math.fsum(
            p * math.log(x) for p, x in zip(sample.weights, sample.points)
        )
    if s == 1.0:
        return math.fsum(
            p * x * math.log(x) for p, x in zip(sample.weights, sample.points)
        ) - center * math.log(center)
    # Factor the center out of the power sum so orders near 0 and 1 stay exact:
    #   sum p x^s - c^s = c^s     * sum p expm1(s log(x/c))        (s <= 1/2)
    #                   = c^(s-1) * sum p x expm1((s-1) log(x/c))  (s > 1/2)
    if s > 0.5:
        gap = center ** (s - 1.0) * math.fsum(
            p * x * math.expm1((s - 1.0) * math.log(x / center))
            for p, x in zip(sample.weights, sample.points)
        )
    else:
        gap = center ** s * math.fsum(
            p * math.expm1(s * math.log(x / center))
            for p, x in zip(sample.weights, sample.points)
        )
    return gap / (s * (s - 1.0))


def power_gap_ratio(s: float, sample: WeightedSample) -> float:
    """Gap quotient of consecutive orders: power_gap(s+1)/power_gap(s).

    Monotone non-decreasing in s for a fixed sample; for a two-point sample
    with equal weights it equals the bivariate family value at the points.
    """
    if sample.is_degenerate():
        raise DegenerateSampleError("gap ratio is 0/0 on a degenerate sample")
    return power_gap(s + 1.0, sample) / power_gap(s, sample)


def log_convexity_holds(
    a: float, b: float, c: float, sample: WeightedSample, rel_slack: float = 1e-12
) -> bool:
    """Check gap(b)^(c-a) <= gap(a)^(c-b) * gap(c)^(b-a) in log space.

    Requires a < b < c.  A degenerate sample (all gaps zero) passes by the
    0 <= 0 convention.  The comparison allows `rel_slack` of relative slack,
    so exact equality cases are not rejected by rounding.
    """
    if not (a < b < c):
        raise UsageError(f"orders must be strictly increasing, got {a!r}, {b!r}, {c!r}")
    gap_a = power_gap(a, sample)
    gap_b = power_gap(b, sample)
    gap_c = power_gap(c, sample)
    if gap_a == 0.0 or gap_b == 0.0 or gap_c == 0.0:
        return True
    lhs = (c - a) * math.log(gap_b)
    rhs = (c - b) * math.log(gap_a) + (b - a) * math.log(gap_c)
    return lhs <= rhs + rel_slack * max(1.0, abs(lhs), abs(rhs))


# ---------------------------------------------------------------------------
# third-moment bounds
# ---------------------------------------------------------------------------


class CubicBounds(NamedTuple):
    lower: float
    upper: float
    holds: bool


@dataclass(frozen=True)
class MomentReport:
    """First three moments plus the support window of a distribution.

    `support_min`/`support_max` may be infinite; for genuinely unbounded
    support the cubic bounds below degenerate to the whole line.
    """

    mean: float
    second_moment: float
    third_moment: float
    variance: float
    support_min: float
    support_max: float

    def __post_init__(self) -> None:
        if self.variance < 0.0:
            raise InvalidReportError(f"variance must be nonnegative, got {self.variance!r}")
        slack = 1e-12 * max(1.0, abs(self.support_min), abs(self.support_max))
        if not (self.support_min - slack <= self.mean <= self.support_max + slack):
            raise InvalidReportError(
                f"mean {self.mean!r} outside support "
                f"[{self.support_min!r}, {self.support_max!r}]"
            )

    @classmethod
    def from_values(
        cls, values: Sequence[float], weights: Sequence[float] | None = None
    ) -> "MomentReport":
        """Empirical moments of a finite sample (equal weights by default)."""
        xs = [float(x) for x in values]
        if not xs:
            raise DomainError("cannot build a moment report from an empty sample")
        if weights is None:
            ws = [1.0 / len(xs)] * len(xs)
        else:
            ws = [float(w) for w in weights]
            if len(ws) != len(xs) or any(w <= 0.0 for w in ws):
                raise DomainError("weights must be positive and match the points")
            total = math.fsum(ws)
            ws = [w / total for w in ws]
        mean = math.fsum(w * x for w, x in zip(ws, xs))
        m2 = math.fsum(w * x * x for w, x in zip(ws, xs))
        m3 = math.fsum(w * x * x * x for w, x in zip(ws, xs))
        variance = max(0.0, math.fsum(w * (x - mean) ** 2 for w, x in zip(ws, xs)))
        return cls(mean, m2, m3, variance, min(xs), max(xs))


def cubic_moment_bounds(report: MomentReport) -> CubicBounds:
    """Two-sided bound on the third moment from mean, variance and support:

        (EX)^3 + 3 (min X) Var X  <=  EX^3  <=  (EX)^3 + 3 (max X) Var X.

    Holds for every law with the reported support window; the quotient-mean
    inequality behind it does not depend on the number of atoms.  Infinite
    support bounds yield infinite (vacuously true) bounds, except that a
    zero variance always collapses both sides to (EX)^3.
    """

    def side(bound: float) -> float:
        if report.variance == 0.0:
            return report.mean ** 3
        return report.mean ** 3 + 3.0 * bound * report.variance

    lower = side(report.support_min)
    upper = side(report.support_max)
    slack = 1e-12 * max(1.0, abs(lower), abs(upper), abs(report.third_moment))
    holds = (lower - slack <= report.third_moment <= upper + slack)
    return CubicBounds(lower, upper, holds)
