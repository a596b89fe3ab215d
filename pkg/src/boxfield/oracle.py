"""Deliberately simple reference implementations used by property tests.

NaivePoly keeps an unsorted association list with duplicates and does
schoolbook arithmetic over it, sharing nothing with the canonical series
representation beyond group elements and rationals.  The searches at the
bottom probe order relations through the public comparison only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    GroupMismatch,
    IndeterminateComparison,
    IndeterminateSign,
    NonPositiveInput,
    ZeroLeading,
)
from .groups import (
    GroupDescriptor,
    GroupElement,
    Ordering,
    group_add,
    group_cmp,
    group_neg,
    scalar_mul,
)
from .series import (
    Series,
    Sign,
    series_abs,
    series_add,
    series_cmp,
    series_neg,
    series_scale,
    series_sign,
)


@dataclass
class NaivePoly:
    group: GroupDescriptor
    entries: list[tuple[GroupElement, Fraction]] = field(default_factory=list)


def naive_from_series(s: Series) -> NaivePoly:
    """Copy an exact, rational-coefficient series into the naive shape."""
    if s.bound is not None:
        raise ValueError("the naive oracle only handles exact data")
    entries = []
    for e, c in s.terms:
        if isinstance(c, Series):
            raise ValueError("the naive oracle only handles rational coefficients")
        entries.append((e, c))
    return NaivePoly(s.group, entries)


def _require_group(p: NaivePoly, q: NaivePoly):
    if p.group != q.group:
        raise GroupMismatch(f"{p.group} vs {q.group}")


def naive_add(p: NaivePoly, q: NaivePoly) -> NaivePoly:
    _require_group(p, q)
    return NaivePoly(p.group, p.entries + q.entries)


def naive_mul(p: NaivePoly, q: NaivePoly) -> NaivePoly:
    _require_group(p, q)
    return NaivePoly(p.group, [
        (group_add(e1, e2), c1 * c2)
        for e1, c1 in p.entries
        for e2, c2 in q.entries
    ])


def naive_collect(p: NaivePoly) -> dict[GroupElement, Fraction]:
    acc: dict[GroupElement, Fraction] = {}
    for e, c in p.entries:
        acc[e] = acc.get(e, Fraction(0)) + c
    return {e: c for e, c in acc.items() if c != 0}


def naive_to_pairs(p: NaivePoly) -> tuple[tuple[GroupElement, Fraction], ...]:
    """Collected entries sorted by decreasing exponent (for comparisons)."""
    items = list(naive_collect(p).items())
    items.sort(key=lambda item: item[0], reverse=True)
    return tuple(items)


def naive_cmp(p: NaivePoly, q: NaivePoly) -> Ordering:
    """Sign of p - q found by scanning for the largest net-nonzero exponent."""
    _require_group(p, q)
    net = naive_collect(naive_add(p, NaivePoly(q.group, [(e, -c) for e, c in q.entries])))
    best = None
    for e, c in net.items():
        if best is None or group_cmp(e, best[0]) is Ordering.GT:
            best = (e, c)
    if best is None:
        return Ordering.EQ
    return Ordering.GT if best[1] > 0 else Ordering.LT


def naive_inverse_solve(p: NaivePoly, depth: int) -> NaivePoly:
    """Inverse coefficients solved term by term from p * q = 1.

    Each step cancels the residual's current leading term, producing the
    true inverse's terms in decreasing-exponent order: depth extra terms
    beyond the leading one, fewer if the residual hits zero.
    """
    collected = naive_to_pairs(p)
    if not collected:
        raise ZeroLeading("cannot invert the zero polynomial")
    e0, c0 = collected[0]
    result = [(group_neg(e0), Fraction(1) / c0)]
    residual: dict[GroupElement, Fraction] = {}

    def subtract_product(term_exp: GroupElement, term_coeff: Fraction):
        for e, c in collected:
            key = group_add(e, term_exp)
            residual[key] = residual.get(key, Fraction(0)) - c * term_coeff
            if residual[key] == 0:
                del residual[key]

    zero_exp = group_add(e0, group_neg(e0))
    residual[zero_exp] = Fraction(1)
    subtract_product(result[0][0], result[0][1])
    for _ in range(depth):
        if not residual:
            break
        lead = None
        for e in residual:
            if lead is None or group_cmp(e, lead) is Ordering.GT:
                lead = e
        coeff = residual[lead] / c0
        exp = group_add(lead, group_neg(e0))
        result.append((exp, coeff))
        subtract_product(exp, coeff)
    return NaivePoly(p.group, result)


# ---------------------------------------------------------------------------
# bounded order searches over the public series interface


def _require_positive(s: Series, what: str):
    if series_sign(s) is not Sign.POSITIVE:
        raise NonPositiveInput(f"{what} must be positive")


def _least_multiplier(predicate, bound: int) -> int | None:
    """Smallest k in 1..bound with predicate(k); predicate must be monotone."""
    if not predicate(bound):
        return None
    lo, hi = 1, bound
    while lo < hi:
        mid = (lo + hi) // 2
        if predicate(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def bounded_mn_search(a: Series, b: Series, bound: int) -> tuple[int, int] | None:
    """Smallest (m, n), lexicographically, with m*a > b and a < n*b.

    Both conditions are monotone in their multiplier, so each side is found
    by bisection; the answers match a linear scan exactly.
    """
    _require_positive(a, "a")
    _require_positive(b, "b")
    m = _least_multiplier(
        lambda k: series_cmp(series_scale(a, k), b) is Ordering.GT, bound)
    if m is None:
        return None
    n = _least_multiplier(
        lambda k: series_cmp(a, series_scale(b, k)) is Ordering.LT, bound)
    if n is None:
        return None
    return (m, n)


def group_mn_search(a: GroupElement, b: GroupElement, bound: int) -> tuple[int, int] | None:
    """Group-level analogue of ``bounded_mn_search``."""
    zero = scalar_mul(a, 0)
    if group_cmp(a, zero) is not Ordering.GT or group_cmp(b, zero) is not Ordering.GT:
        raise NonPositiveInput("positive group elements required")
    m = _least_multiplier(
        lambda k: group_cmp(scalar_mul(a, k), b) is Ordering.GT, bound)
    if m is None:
        return None
    n = _least_multiplier(
        lambda k: group_cmp(a, scalar_mul(b, k)) is Ordering.LT, bound)
    if n is None:
        return None
    return (m, n)


def swing_sweep_member(x: Series, r: Series, y: Series, depth: int = 20) -> bool:
    """Membership in every ball of the halving chain r, r/2, ..., r/2^(depth-1)."""
    _require_positive(r, "radius")
    try:
        distance = series_abs(series_add(x, series_neg(y)))
        for i in range(depth):
            radius = series_scale(r, Fraction(1, 2 ** i))
            if series_cmp(distance, radius) is not Ordering.LT:
                return False
        return True
    except IndeterminateSign as exc:
        raise IndeterminateComparison(str(exc)) from exc
