"""The one-parameter quotient-mean family lambda_s.

For a real order s the value lambda_s(a, b) is, generically,

    (s-1)/(s+1) * (a^(s+1) + b^(s+1) - 2 A^(s+1)) / (a^s + b^s - 2 A^s)

with A = (a+b)/2, extended by its limits at s in {-1, 0, 1}.  The family is
symmetric, homogeneous of order one, bounded by min(a, b) and max(a, b),
monotone increasing in s, and coincides with the arithmetic mean at s = 2.

Evaluation is fully normalized: with t = (b-a)/(b+a),

    lambda_s(a, b) = A * R(s, t),     R(s, t) = lambda_s(1+t, 1-t).

Writing q_sigma(t) = ((1+t)^sigma + (1-t)^sigma - 2) / (sigma (sigma - 1))
(with its limits -log(1-t^2) at sigma = 0 and (1+t)log(1+t)+(1-t)log(1-t) at
sigma = 1, both positive), the profile is the smooth positive quotient

    R(s, t) = q_{s+1}(t) / q_s(t),

which reproduces every branch of the case table at once.  Both q's vanish to
second order as t -> 0, so small t is routed through an even power series in
t whose coefficients are polynomials in the order; away from zero the gaps
are built from expm1 forms and switch to a scaled log-space evaluation when
(1-t)^sigma would overflow (very negative orders with t near 1).

Orders within ORDER_BRANCH_WIDTH of {-1, 0, 1} snap to the exact limit
branch; the branch classification depends on s alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import classical
from .classical import _nu, symmetric_coordinate
from .errors import DomainError, UsageError

__all__ = [
    "BRANCH_EQUAL",
    "BRANCH_GENERIC",
    "BRANCH_LIMIT_NEG1",
    "BRANCH_LIMIT_ZERO",
    "BRANCH_LIMIT_ONE",
    "BRANCH_SERIES",
    "LambdaValue",
    "ORDER_BRANCH_WIDTH",
    "T_SWITCH",
    "lambda_closed_form",
    "lambda_mean",
    "lambda_ratio",
    "small_t_series",
]

#: Coordinate below which the even-power series evaluates the profile.
T_SWITCH = 1e-3

#: Orders within this distance of {-1, 0, 1} use the exact limit branch.
ORDER_BRANCH_WIDTH = 1e-5

# Exponents above this use the scaled log-space form of the power gap.
_OVERFLOW_LOG = 600.0

BRANCH_GENERIC = "generic"
BRANCH_LIMIT_NEG1 = "limit-1"
BRANCH_LIMIT_ZERO = "limit0"
BRANCH_LIMIT_ONE = "limit1"
BRANCH_SERIES = "series-small-t"
BRANCH_EQUAL = "degenerate-equal"

_SNAP_TAGS = (
    (-1.0, BRANCH_LIMIT_NEG1),
    (0.0, BRANCH_LIMIT_ZERO),
    (1.0, BRANCH_LIMIT_ONE),
)


@dataclass(frozen=True)
class LambdaValue:
    """A family value together with the evaluation branch that produced it."""

    value: float
    branch: str

    def __float__(self) -> float:
        return self.value


def _check_order(s: float) -> float:
    if not math.isfinite(s):
        raise DomainError(f"order parameter must be a finite real, got {s!r}")
    return float(s)


def _snap_order(s: float) -> tuple[float, str]:
    # The hair of slack keeps orders built as pole +/- width (whose rounded
    # difference can exceed the width by an ulp) inside the branch.
    cushion = ORDER_BRANCH_WIDTH * (1.0 + 1e-9)
    for pole, tag in _SNAP_TAGS:
        if abs(s - pole) <= cushion:
            return pole, tag
    return s, BRANCH_GENERIC


def _gap_log(sigma: float, t: float) -> float:
    """log of q_sigma(t) for 0 < t < 1; sigma is exact at the 0/1 limits.

    The raw gap (1+t)^sigma + (1-t)^sigma - 2 vanishes linearly at sigma = 0
    and sigma = 1, so the expm1 decomposition is chosen to carry the
    vanishing factor inside each term: relative accuracy is then uniform in
    sigma (roughly eps/t) instead of degrading like 1/|sigma - k| near the
    poles of the normalizer.
    """
    if sigma == 0.0:
        # -log(1 - t^2), split so no accuracy is lost as t -> 1
        return math.log(-(math.log1p(t) + math.log1p(-t)))
    if sigma == 1.0:
        return math.log(t * t * _nu(t))
    log_u = math.log1p(t)
    log_v = math.log1p(-t)
    if sigma > 0.5:
        # u^s + v^s - 2 = u(u^(s-1) - 1) + v(v^(s-1) - 1)
        x = (sigma - 1.0) * log_u
        y = (sigma - 1.0) * log_v
        if x < _OVERFLOW_LOG and y < _OVERFLOW_LOG:
            gap = (1.0 + t) * math.expm1(x) + (1.0 - t) * math.expm1(y)
            return math.log(gap / (sigma * (sigma - 1.0)))
    else:
        # u^s + v^s - 2 = (u^s - 1) + (v^s - 1)
        x = sigma * log_u
        y = sigma * log_v
        if x < _OVERFLOW_LOG and y < _OVERFLOW_LOG:
            gap = math.expm1(x) + math.expm1(y)
            return math.log(gap / (sigma * (sigma - 1.0)))
    # One power is astronomically large; factor it out.  The -2 and the small
    # power are then negligible additions, never cancellations.
    x = sigma * log_u
    y = sigma * log_v
    m = max(x, y)
    rest = math.exp(x - m) + math.exp(y - m) - 2.0 * math.exp(-m)
    return m + math.log(rest) - math.log(sigma * (sigma - 1.0))


def _series_profile(sigma: float, t: float, terms: int | None) -> float:
    """sum_{k>=1} P_k(sigma) t^(2k-2) with P_k = binom(sigma, 2k)/(sigma(sigma-1)).

    The coefficients are polynomials in sigma (P_1 = 1/2), so the series is
    smooth across every order, including the limit orders.  `terms` fixes the
    truncation length; None keeps adding terms until they stop contributing.
    """
    t2 = t * t
    term = 0.5
    acc = term
    k = 1
    limit = terms if terms is not None else 512
    while k < limit:
        term *= (sigma - 2.0 * k) * (sigma - 2.0 * k - 1.0) * t2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0))
        acc += term
        k += 1
        if terms is None and abs(term) <= 1e-17 * abs(acc):
            break
    return acc


def _ratio_branches(s: float, t: float) -> tuple[float, str]:
    if t == 0.0:
        return 1.0, BRANCH_EQUAL
    if s == 2.0:
        # Identically the arithmetic mean; keep the identity bit-exact.
        return 1.0, BRANCH_GENERIC
    s, tag = _snap_order(s)
    if t < T_SWITCH:
        value = _series_profile(s + 1.0, t, None) / _series_profile(s, t, None)
        return value, BRANCH_SERIES
    value = math.exp(_gap_log(s + 1.0, t) - _gap_log(s, t))
    return value, tag


def lambda_ratio(s: float, t: float) -> float:
    """Profile lambda_s(1+t, 1-t) = lambda_s(a, b)/A(a, b) at t = (b-a)/(b+a).

    Continuous at t -> 0 with limit 1; t must lie in [0, 1).
    """
    s = _check_order(s)
    if not math.isfinite(t) or t < 0.0 or t >= 1.0:
        raise DomainError(f"symmetric coordinate must lie in [0, 1), got {t!r}")
    return _ratio_branches(s, t)[0]


def lambda_mean(s: float, a: float, b: float) -> LambdaValue:
    """lambda_s(a, b) with the branch that evaluated it.

    Symmetric and homogeneous of order one by construction (the pair is
    canonicalized and reduced to its profile coordinate), with
    min(a, b) <= value <= max(a, b).
    """
    s = _check_order(s)
    classical._check_positive(a, b)
    if a == b:
        return LambdaValue(float(a), BRANCH_EQUAL)
    lo, hi = (a, b) if a <= b else (b, a)
    t = symmetric_coordinate(lo, hi)
    value, branch = _ratio_branches(s, t)
    return LambdaValue((0.5 * lo + 0.5 * hi) * value, branch)


def small_t_series(s: float, t: float, terms: int = 8) -> float:
    """Profile via the even-power series, truncated to `terms` even powers.

    Only valid below T_SWITCH; the relative truncation error is bounded by
    the ratio of the first omitted term to the retained sum.  Exact in the
    order parameter (no branch snapping): at s = 2 the series telescopes to
    1 identically.
    """
    s = _check_order(s)
    if not isinstance(terms, int) or terms < 1:
        raise UsageError(f"terms must be a positive integer, got {terms!r}")
    if not math.isfinite(t) or t < 0.0 or t >= T_SWITCH:
        raise UsageError(
            f"small_t_series requires 0 <= t < {T_SWITCH}, got {t!r}; "
            "use lambda_ratio for the full coordinate range"
        )
    return _series_profile(s + 1.0, t, terms) / _series_profile(s, t, terms)


def lambda_closed_form(s: float, a: float, b: float) -> float:
    """The limit orders from classical means, as an independent cross-check.

        order -1:  2 G^2 log(A/G) / (A - H)
        order  0:  A log(S/A) / log(A/G)
        order  1:  (A - H) / (2 log(S/A))

    Requires a != b (each form is 0/0 at equal arguments).  Combined exactly
    as written from the classical mean values, so accuracy degrades as the
    arguments approach each other; intended as a verification route, not the
    evaluation path.
    """
    s = _check_order(s)
    if s not in (-1.0, 0.0, 1.0):
        raise UsageError(f"closed forms exist only for orders -1, 0, 1; got {s!r}")
    classical._check_positive(a, b)
    if a == b:
        raise DomainError("closed forms are 0/0 at a == b; use lambda_mean instead")
    mean_a = classical.arithmetic(a, b)
    mean_g = classical.geometric(a, b)
    mean_h = classical.harmonic(a, b)
    mean_s = classical.gini(a, b)
    if s == -1.0:
        return 2.0 * mean_g * mean_g * math.log(mean_a / mean_g) / (mean_a - mean_h)
    if s == 0.0:
        return mean_a * math.log(mean_s / mean_a) / math.log(mean_a / mean_g)
    return (mean_a - mean_h) / (2.0 * math.log(mean_s / mean_a))
