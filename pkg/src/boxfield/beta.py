"""Generalized-metric structure induced by the field order.

Balls are order balls: y lies in the ball at x of radius r when |x - y| < r.
Halving a radius gives a swing value (a radius witnessing the third ball
axiom), iterated halvings give swing sequences, and level sets collect the
points reachable through every radius of some swing sequence; membership in
a level set only depends on growth classes, which is how it is decided here.
Partial-sum checks confirm that a series is the order-limit of its prefixes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IndeterminateComparison,
    IndeterminateSign,
    NonPositiveInput,
    NotExact,
)
from .groups import GroupElement, Ordering, group_cmp
from .levels import level_cmp
from .parsing import render_element, render_series
from .series import (
    Series,
    Sign,
    monomial,
    series_abs,
    series_add,
    series_cmp,
    series_neg,
    series_scale,
    series_sign,
)


def _require_positive(r: Series, what: str = "radius"):
    if series_sign(r) is not Sign.POSITIVE:
        raise NonPositiveInput(f"{what} must be positive")


@dataclass(frozen=True)
class BallSpec:
    center: Series
    radius: Series

    def __post_init__(self):
        _require_positive(self.radius)


@dataclass(frozen=True)
class SwingSequence:
    """Radii chain where each entry is a swing value for the previous one."""

    radii: tuple[Series, ...]


def ball_member(x: Series, r: Series, y: Series) -> bool:
    """Whether |x - y| < r."""
    _require_positive(r)
    try:
        distance = series_abs(series_add(x, series_neg(y)))
        return series_cmp(distance, r) is Ordering.LT
    except IndeterminateSign as exc:
        raise IndeterminateComparison(str(exc)) from exc


def swing_value(r: Series) -> Series:
    """Half the radius: if y is within r/2 of x, the r/2-ball around x sits
    inside the r-ball around y."""
    _require_positive(r)
    return series_scale(r, Fraction(1, 2))


def swing_sequence(r: Series, n: int) -> SwingSequence:
    """The halving chain r, r/2, ..., r/2^(n-1)."""
    _require_positive(r)
    if n < 1:
        raise NonPositiveInput("sequence length must be positive")
    return SwingSequence(tuple(series_scale(r, Fraction(1, 2 ** i)) for i in range(n)))


def level_set_member(x: Series, r: Series, y: Series, depth: int = 20) -> bool:
    """Whether y is infinitesimally close to x relative to r.

    True exactly when y = x or |x - y| has strictly smaller growth class
    than r.  ``depth`` mirrors the halving-sweep oracle's interface; the
    class rule needs no iteration.
    """
    _require_positive(r)
    try:
        distance = series_abs(series_add(x, series_neg(y)))
        if series_sign(distance) is Sign.ZERO:
            return True
        return level_cmp(distance, r) is Ordering.LT
    except IndeterminateSign as exc:
        raise IndeterminateComparison(str(exc)) from exc


def level_set_equiv(a: Series, b: Series, samples) -> bool:
    """Whether the radii a and b carve out the same level sets on the samples.

    Membership is compared around zero and around the first few samples; the
    result agrees with level equivalence of a and b.
    """
    _require_positive(a)
    _require_positive(b)
    samples = list(samples)
    from .series import zero as zero_series

    anchors = [zero_series(a.group)] + samples[:2]
    for x in anchors:
        for y in samples:
            if level_set_member(x, a, y) != level_set_member(x, b, y):
                return False
    return True


# ---------------------------------------------------------------------------
# axiom sweeps


@dataclass(frozen=True)
class CheckFailure:
    inputs: dict
    reason: str


@dataclass(frozen=True)
class AxiomReport:
    axiom: int
    samples_run: int
    failures: tuple[CheckFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


_OFFSETS = (Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(3, 4), Fraction(-3, 4))


def _default_inner_radius(x, r, y, s, z):
    """Half the smaller slack of z inside the two balls."""
    slack_x = series_add(r, series_neg(series_abs(series_add(x, series_neg(z)))))
    slack_y = series_add(s, series_neg(series_abs(series_add(y, series_neg(z)))))
    smaller = slack_x if series_cmp(slack_x, slack_y) is Ordering.LT else slack_y
    return series_scale(smaller, Fraction(1, 2))


def _render_tuple(x, r, y, s, z) -> dict:
    return {
        "x": render_series(x), "r": render_series(r),
        "y": render_series(y), "s": render_series(s),
        "z": render_series(z),
    }


def beta_axioms_check(config, pick_radius=None) -> tuple[AxiomReport, ...]:
    """Run the three ball axioms over a corpus of (x, r, y, s, z) tuples.

    Axiom 1: every center lies in its own ball.  Axiom 2: when z lies in
    both balls, the radius produced by ``pick_radius`` (by default half the
    smaller slack) keeps sampled points of its ball inside the intersection.
    Axiom 3: points sampled within the half radius stay mutually within the
    full radius.  Counterexamples are collected per axiom.
    """
    config = list(config)
    for x, r, y, s, z in config:
        _require_positive(r)
        _require_positive(s)
    pick_radius = pick_radius or _default_inner_radius

    failures1 = []
    failures2 = []
    failures3 = []
    for x, r, y, s, z in config:
        rendered = _render_tuple(x, r, y, s, z)
        if not ball_member(x, r, x):
            failures1.append(CheckFailure(rendered, "center not in its own ball (x, r)"))
        if not ball_member(y, s, y):
            failures1.append(CheckFailure(rendered, "center not in its own ball (y, s)"))

        if ball_member(x, r, z) and ball_member(y, s, z):
            t = pick_radius(x, r, y, s, z)
            if series_sign(t) is not Sign.POSITIVE:
                failures2.append(CheckFailure(rendered, "inner radius not positive"))
            else:
                for q in _OFFSETS:
                    w = series_add(z, series_scale(t, q))
                    if not (ball_member(x, r, w) and ball_member(y, s, w)):
                        failures2.append(CheckFailure(
                            rendered, f"point at offset {q} escapes the intersection"))
                        break

        half = swing_value(r)
        broke = False
        for qy in _OFFSETS:
            yy = series_add(x, series_scale(half, qy))
            for qw in _OFFSETS:
                w = series_add(x, series_scale(half, qw))
                if not ball_member(yy, r, w):
                    failures3.append(CheckFailure(
                        rendered, f"swing failure at offsets ({qy}, {qw})"))
                    broke = True
                    break
            if broke:
                break

    n = len(config)
    return (
        AxiomReport(1, n, tuple(failures1)),
        AxiomReport(2, n, tuple(failures2)),
        AxiomReport(3, n, tuple(failures3)),
    )


def axiom_report_to_json(report: AxiomReport) -> dict:
    return {
        "axiom": report.axiom,
        "samples_run": report.samples_run,
        "failures": [{"inputs": f.inputs, "reason": f.reason} for f in report.failures],
    }


# ---------------------------------------------------------------------------
# partial sums converge to the series in the order topology


@dataclass(frozen=True)
class TailSummary:
    prefix: int
    tail_exponent: GroupElement | None  # None: the tail is exactly zero
    radii_checked: int
    ok: bool


@dataclass(frozen=True)
class CauchyReport:
    tails: tuple[TailSummary, ...]
    levels_strictly_decreasing: bool
    passed: bool


def partial_sum_cauchy_check(s: Series, prefix_lengths) -> CauchyReport:
    """Check that prefixes of an exact series close in on it.

    For each prefix length m, the tail s - s_m must be smaller than every
    monomial radius x^e built from the prefix's own exponents (all of which
    exceed the tail's leading exponent), and tail levels must strictly
    decrease as m grows.
    """
    if s.bound is not None:
        raise NotExact("partial-sum checks need an exact series")
    if len(s.terms) < 2:
        raise ValueError("need at least two terms")
    summaries = []
    for m in sorted(set(int(m) for m in prefix_lengths)):
        if m < 0:
            raise ValueError("prefix lengths must be nonnegative")
        tail = Series(s.group, s.terms[m:], None)
        tail_exp = tail.terms[0][0] if tail.terms else None
        checked = 0
        ok = True
        tail_mag = series_abs(tail) if tail.terms else tail
        for e, _ in s.terms[:m]:
            checked += 1
            if series_cmp(tail_mag, monomial(s.group, e)) is not Ordering.LT:
                ok = False
        summaries.append(TailSummary(m, tail_exp, checked, ok))
    decreasing = True
    for prev, cur in zip(summaries, summaries[1:]):
        if prev.tail_exponent is None:
            if cur.tail_exponent is not None:
                decreasing = False
        elif cur.tail_exponent is not None:
            if group_cmp(cur.tail_exponent, prev.tail_exponent) is not Ordering.LT:
                decreasing = False
    passed = decreasing and all(t.ok for t in summaries)
    return CauchyReport(tuple(summaries), decreasing, passed)


def cauchy_report_to_json(report: CauchyReport) -> dict:
    return {
        "tails": [
            {
                "prefix": t.prefix,
                "tail_exponent": None if t.tail_exponent is None
                else render_element(t.tail_exponent),
                "radii_checked": t.radii_checked,
                "ok": t.ok,
            }
            for t in report.tails
        ],
        "levels_strictly_decreasing": report.levels_strictly_decreasing,
        "passed": report.passed,
    }
