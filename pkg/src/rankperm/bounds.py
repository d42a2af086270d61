"""
Finite-n upper and lower bounds on ``A(n, d)``, the largest code in ``S_n``
with minimum Kendall distance ``d``.

Exact values are Python ints or :class:`fractions.Fraction`; only the rate
window is reported in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction

from .enumeration import binom, h_ball_volume, kendall_ball_volume

__all__ = [
    "BoundsReport", "singleton_upper", "singleton_trivial", "sphere_upper",
    "gilbert_lower", "l1_upper", "l1_lower", "l1_closed_forms", "plotkin_upper",
    "bch_existence_lower", "bch_existence_lower_integral", "bounds_report",
    "report_record",
]


def _max_distance(n: int) -> int:
    return n * (n - 1) // 2


def _check(n: int, d: int):
    N = _max_distance(n)
    if n < 2 or not 1 <= d <= N:
        raise ValueError(f"need n >= 2 and 1 <= d <= {N}, got n={n}, d={d}")


def _ceil(x) -> int:
    return -((-x.numerator) // x.denominator) if isinstance(x, Fraction) else int(x)


def _floor(x) -> int:
    return x.numerator // x.denominator if isinstance(x, Fraction) else int(x)


def singleton_trivial(n: int, d: int) -> bool:
    return d <= n - 1


def singleton_upper(n: int, d: int) -> int:
    """
    ``floor(3/2 + sqrt(n(n-1) - 2d + 1/4))!`` for ``d > n - 1``; below that
    range the estimate says nothing and ``n!`` is returned
    (see :func:`singleton_trivial`).
    """
    _check(n, d)
    if singleton_trivial(n, d):
        return math.factorial(n)
    # floor(3/2 + sqrt(X + 1/4)) == (3 + isqrt(4X + 1)) // 2 for integer X >= 0
    x = n * (n - 1) - 2 * d
    k = (3 + math.isqrt(4 * x + 1)) // 2
    return math.factorial(k)


def sphere_upper(n: int, d: int) -> int:
    """``floor(n! / |B_t|)`` with ``t = floor((d-1)/2)``."""
    _check(n, d)
    return math.factorial(n) // kendall_ball_volume(n, (d - 1) // 2)


def gilbert_lower(n: int, d: int) -> int:
    """``ceil(n! / |B_{d-1}|)``."""
    _check(n, d)
    vol = kendall_ball_volume(n, d - 1)
    return -(-math.factorial(n) // vol)


def l1_upper(n: int, d: int) -> int:
    """Packing bound in ``H_n``: ``floor(n^n / sum_{r<=t} Q(n, r))``."""
    _check(n, d)
    return n ** n // h_ball_volume(n, (d - 1) // 2)


def l1_lower(n: int, d: int) -> int:
    """Gilbert bound through ``H_n``: ``ceil(n! / (2^n sum_{r<=2d-1} Q(n, r)))``."""
    _check(n, d)
    den = 2 ** n * h_ball_volume(n, 2 * d - 1)
    return -(-math.factorial(n) // den)


def l1_closed_forms(n: int, d: int) -> tuple[Fraction, Fraction, bool]:
    """
    Binomial-only versions of the two ``H_n`` bounds.

    Returns ``(lower, upper, clamped)``; ``clamped`` is True when a term
    ``C(n+r-1, r) - n C(r-1, r-n)`` of the upper form went negative and was
    replaced by zero.
    """
    _check(n, d)
    lower = Fraction(math.factorial(n), 2 ** n * binom(n + 2 * d - 1, 2 * d - 1))
    t = (d - 1) // 2
    total = 0
    clamped = False
    for r in range(t + 1):
        term = binom(n + r - 1, r) - n * binom(r - 1, r - n)
        if term < 0:
            clamped = True
            term = 0
        total += term
    return lower, Fraction(n ** n, total), clamped


def plotkin_upper(n: int, d: int) -> Fraction | None:
    """``2d / (2d - N)`` when ``2d > N``, else None."""
    _check(n, d)
    N = _max_distance(n)
    if 2 * d <= N:
        return None
    return Fraction(2 * d, 2 * d - N)


def bch_existence_lower(n: int, t: int) -> Fraction:
    """Idealised size ``n! / (N+1)^t`` of a rank code from a t-error BCH coset."""
    if t < 0:
        raise ValueError("t must be >= 0")
    return Fraction(math.factorial(n), (_max_distance(n) + 1) ** t)


def bch_existence_lower_integral(n: int, t: int) -> Fraction:
    """
    Same existence bound with integral redundancy: a shortened BCH code of
    length ``N`` has at most ``t * ceil(log2(N+1))`` (and at most ``N``)
    check bits, so some coset holds ``n! / 2^{redundancy}`` permutations.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    N = _max_distance(n)
    redundancy = min(N, t * (N).bit_length())  # bit_length(N) == ceil(log2(N+1))
    return Fraction(math.factorial(n), 2 ** redundancy)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    d: int
    singleton_upper: int
    singleton_trivial: bool
    sphere_upper: int
    l1_upper: int
    l1_upper_closed: Fraction
    l1_upper_clamped: bool
    plotkin_upper: Fraction | None
    gilbert_lower: int
    gilbert_even_d: bool
    l1_lower: int
    l1_lower_closed: Fraction
    bch_t: int
    bch_lower_ideal: Fraction
    bch_lower: Fraction
    best_upper: int
    best_lower: int
    rate_lower: float
    rate_upper: float


def bounds_report(n: int, d: int) -> BoundsReport:
    """
    Every bound for one ``(n, d)``. Rational uppers are floored and rational
    lowers ceiled before combining; the BCH entry uses ``t = floor(d/2)`` so
    that its distance ``2t + 1`` reaches ``d``.
    """
    _check(n, d)
    single = singleton_upper(n, d)
    sphere = sphere_upper(n, d)
    l1u = l1_upper(n, d)
    closed_lo, closed_up, clamped = l1_closed_forms(n, d)
    plotkin = plotkin_upper(n, d)
    gil = gilbert_lower(n, d)
    l1l = l1_lower(n, d)
    bch_t = d // 2
    bch_ideal = bch_existence_lower(n, bch_t)
    bch = bch_existence_lower_integral(n, bch_t)

    uppers = [single, sphere, l1u, _floor(closed_up)]
    if plotkin is not None:
        uppers.append(_floor(plotkin))
    best_upper = max(1, min(uppers))
    best_lower = max(1, gil, l1l, _ceil(closed_lo), _ceil(bch))
    log_total = math.lgamma(n + 1)
    return BoundsReport(
        n=n, d=d,
        singleton_upper=single, singleton_trivial=singleton_trivial(n, d),
        sphere_upper=sphere, l1_upper=l1u, l1_upper_closed=closed_up,
        l1_upper_clamped=clamped, plotkin_upper=plotkin,
        gilbert_lower=gil, gilbert_even_d=(d % 2 == 0),
        l1_lower=l1l, l1_lower_closed=closed_lo,
        bch_t=bch_t, bch_lower_ideal=bch_ideal, bch_lower=bch,
        best_upper=best_upper, best_lower=best_lower,
        rate_lower=math.log(best_lower) / log_total,
        rate_upper=math.log(best_upper) / log_total,
    )


def _render(value):
    if value is None:
        return None
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def report_record(report: BoundsReport) -> dict[str, str | None]:
    """Flat key -> string record in field order (exact ints as decimals, rationals as ``p/q``)."""
    return {f.name: _render(getattr(report, f.name)) for f in fields(report)}
