"""Generalized power series with exponents in an ordered abelian group.

A series is a finite list of (exponent, coefficient) terms in strictly
decreasing exponent order.  Coefficients are exact rationals, or nested
series for iterated constructions.  The order is decided by the sign of the
leading (largest-exponent) coefficient, so terms with large exponents are
infinitely large and terms with negative exponents are infinitesimal.

Truncation is an explicit contract: an exact series is known everywhere,
while ``TruncatedBelow(e)`` (stored as ``bound=e``) asserts the stored terms
are complete and correct for every exponent above ``e`` and says nothing at
or below it.  Operations propagate the least informative applicable bound,
and questions the stored data cannot settle raise indeterminate errors
rather than guessing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    GroupMismatch,
    IndeterminateComparison,
    IndeterminateSign,
    NonInvertibleCoefficient,
    NotExact,
    NotLexSumGroup,
    NotSimple,
    UnknownLeading,
    ZeroOrUnknownLeading,
)
from .groups import (
    GroupDescriptor,
    GroupElement,
    GroupMorphism,
    Ordering,
    apply_morphism,
    group_add,
    group_cmp,
    group_neg,
    scalar_mul,
    zero_element,
)


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


@dataclass(frozen=True)
class Series:
    """Canonical series: strictly decreasing exponents, no known-zero terms.

    ``bound is None`` means exact; otherwise the series is asserted correct
    only for exponents strictly above ``bound``.
    """

    group: GroupDescriptor
    terms: tuple[tuple[GroupElement, "Coefficient"], ...] = ()
    bound: GroupElement | None = None

    def __add__(self, other: "Series") -> "Series":
        return series_add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return series_add(self, series_neg(other))

    def __neg__(self) -> "Series":
        return series_neg(self)

    def __mul__(self, other: "Series") -> "Series":
        return series_mul(self, other)

    @property
    def is_exact(self) -> bool:
        return self.bound is None


Coefficient = "Fraction | Series"


@dataclass(frozen=True)
class SimplePresentation:
    """Raw (exponents, coefficients) data before canonicalization.

    Exponents come in arbitrary order and coefficients may be zero; the
    injectivity of the exponent list is what ``validate_simple`` checks.
    """

    exponents: tuple[GroupElement, ...]
    coefficients: tuple["Fraction | Series", ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.coefficients):
            raise ValueError("exponents and coefficients must have equal length")


# ---------------------------------------------------------------------------
# coefficient arithmetic (rationals or nested series)


def coeff_known_zero(c) -> bool:
    if isinstance(c, Series):
        return c.bound is None and not c.terms
    return c == 0


def coeff_exact(c) -> bool:
    """True when the coefficient carries no truncation at any depth."""
    if isinstance(c, Series):
        return c.bound is None and all(coeff_exact(v) for _, v in c.terms)
    return True


def coeff_add(a, b):
    if isinstance(a, Series) and isinstance(b, Series):
        return series_add(a, b)
    if isinstance(a, Series):
        return series_add(a, constant(a.group, b))
    if isinstance(b, Series):
        return series_add(constant(b.group, a), b)
    return a + b


def coeff_neg(a):
    if isinstance(a, Series):
        return series_neg(a)
    return -a


def coeff_mul(a, b):
    if isinstance(a, Series) and isinstance(b, Series):
        return series_mul(a, b)
    if isinstance(a, Series):
        return series_scale(a, b)
    if isinstance(b, Series):
        return series_scale(b, a)
    return a * b


def coeff_sign(c) -> int:
    if isinstance(c, Series):
        return int(series_sign(c))
    return (c > 0) - (c < 0)


def coeff_inv(c, depth: int):
    if isinstance(c, Series):
        try:
            return series_inv(c, depth)
        except (ZeroOrUnknownLeading, NonInvertibleCoefficient) as exc:
            raise NonInvertibleCoefficient(f"nested coefficient not invertible: {exc}") from exc
    if c == 0:
        raise NonInvertibleCoefficient("zero rational coefficient")
    return Fraction(1) / c


# ---------------------------------------------------------------------------
# construction


def make_series(group: GroupDescriptor, pairs=(), bound: GroupElement | None = None) -> Series:
    """Canonicalize arbitrary (exponent, coefficient) pairs into a Series."""
    acc: dict[GroupElement, object] = {}
    for exp, coeff in pairs:
        if exp.group != group:
            raise GroupMismatch(f"exponent in {exp.group}, series over {group}")
        if not isinstance(coeff, Series):
            coeff = Fraction(coeff)
        if exp in acc:
            acc[exp] = coeff_add(acc[exp], coeff)
        else:
            acc[exp] = coeff
    if bound is not None and bound.group != group:
        raise GroupMismatch(f"bound in {bound.group}, series over {group}")
    items = [(e, c) for e, c in acc.items() if not coeff_known_zero(c)]
    if bound is not None:
        items = [(e, c) for e, c in items if group_cmp(e, bound) is Ordering.GT]
    items.sort(key=lambda item: item[0], reverse=True)
    return Series(group, tuple(items), bound)


def zero(group: GroupDescriptor) -> Series:
    return Series(group, (), None)


def constant(group: GroupDescriptor, value) -> Series:
    value = Fraction(value) if not isinstance(value, Series) else value
    return make_series(group, [(zero_element(group), value)])


def one(group: GroupDescriptor) -> Series:
    return constant(group, 1)


def monomial(group: GroupDescriptor, exponent: GroupElement, coefficient=1) -> Series:
    if not isinstance(coefficient, Series):
        coefficient = Fraction(coefficient)
    return make_series(group, [(exponent, coefficient)])


def validate_simple(exponents) -> bool:
    """True iff the exponent list has pairwise distinct entries.

    Finite lists are automatically right-well-ordered, so distinctness is
    the whole condition.
    """
    exponents = tuple(exponents)
    return len(set(exponents)) == len(exponents)


def index_of(pres: SimplePresentation) -> int:
    """Position of the largest exponent with a nonzero coefficient; 0 if none."""
    if not validate_simple(pres.exponents):
        raise NotSimple("repeated exponents")
    best = None
    for i, (e, c) in enumerate(zip(pres.exponents, pres.coefficients)):
        if coeff_known_zero(c):
            continue
        if best is None or group_cmp(e, pres.exponents[best]) is Ordering.GT:
            best = i
    return 0 if best is None else best


def from_presentation(pres: SimplePresentation, group: GroupDescriptor) -> Series:
    """Canonical exact series for a raw presentation."""
    if not validate_simple(pres.exponents):
        raise NotSimple("repeated exponents")
    for e in pres.exponents:
        if e.group != group:
            raise GroupMismatch(f"exponent in {e.group}, series over {group}")
    return make_series(group, zip(pres.exponents, pres.coefficients))


# ---------------------------------------------------------------------------
# structure queries


def leading(s: Series) -> tuple[GroupElement, object]:
    """The largest-exponent stored term."""
    if not s.terms:
        if s.bound is None:
            raise ZeroOrUnknownLeading("zero series has no leading term")
        raise ZeroOrUnknownLeading("truncated series with no stored terms")
    return s.terms[0]


def series_sign(s: Series) -> Sign:
    """Sign of the leading coefficient; Zero only for the exact zero."""
    if not s.terms:
        if s.bound is None:
            return Sign.ZERO
        raise IndeterminateSign("no stored terms above the truncation bound")
    return Sign(coeff_sign(s.terms[0][1]))


def series_cmp(s: Series, t: Series) -> Ordering:
    """Sign of s - t; EQ only when both are exact and cancel completely."""
    diff = series_add(s, series_neg(t))
    try:
        return Ordering(int(series_sign(diff)))
    except IndeterminateSign as exc:
        raise IndeterminateComparison(str(exc)) from exc


def series_abs(s: Series) -> Series:
    if series_sign(s) is Sign.NEGATIVE:
        return series_neg(s)
    return s


def is_canonical(s: Series) -> bool:
    """Check the representation invariants (used by property tests)."""
    for e, c in s.terms:
        if e.group != s.group or coeff_known_zero(c):
            return False
    for (e1, _), (e2, _) in zip(s.terms, s.terms[1:]):
        if group_cmp(e1, e2) is not Ordering.GT:
            return False
    if s.bound is not None:
        if s.bound.group != s.group:
            return False
        if any(group_cmp(e, s.bound) is not Ordering.GT for e, _ in s.terms):
            return False
    return True


def terms_above(s: Series, cutoff: GroupElement) -> tuple:
    """Stored terms with exponent strictly above the cutoff."""
    return tuple((e, c) for e, c in s.terms if group_cmp(e, cutoff) is Ordering.GT)


# ---------------------------------------------------------------------------
# ring operations


def _require_group(s: Series, t: Series):
    if s.group != t.group:
        raise GroupMismatch(f"{s.group} vs {t.group}")


def _max_bound(*bounds):
    """Least informative of the given bounds (None = exact, most informative)."""
    best = None
    for b in bounds:
        if b is None:
            continue
        if best is None or group_cmp(b, best) is Ordering.GT:
            best = b
    return best


def series_add(s: Series, t: Series) -> Series:
    _require_group(s, t)
    bound = _max_bound(s.bound, t.bound)
    return make_series(s.group, list(s.terms) + list(t.terms), bound)


def series_neg(s: Series) -> Series:
    return Series(s.group, tuple((e, coeff_neg(c)) for e, c in s.terms), s.bound)


def series_scale(s: Series, q) -> Series:
    """Multiply by an exact rational scalar."""
    q = Fraction(q)
    if q == 0:
        return zero(s.group)
    return Series(s.group, tuple((e, coeff_mul(c, q)) for e, c in s.terms), s.bound)


def series_mul(s: Series, t: Series) -> Series:
    _require_group(s, t)
    if (s.bound is None and not s.terms) or (t.bound is None and not t.terms):
        return zero(s.group)
    if not s.terms or not t.terms:
        raise UnknownLeading("truncated factor with no stored terms")
    candidates = []
    if s.bound is not None:
        candidates.append(group_add(s.bound, t.terms[0][0]))
    if t.bound is not None:
        candidates.append(group_add(t.bound, s.terms[0][0]))
    bound = _max_bound(*candidates)
    products = [
        (group_add(p, q), coeff_mul(a, b))
        for p, a in s.terms
        for q, b in t.terms
    ]
    return make_series(s.group, products, bound)


def series_pow(s: Series, n: int) -> Series:
    if n < 0:
        raise ValueError("negative power; use series_inv")
    out = one(s.group)
    for _ in range(n):
        out = series_mul(out, s)
    return out


def truncate(s: Series, bound: GroupElement) -> Series:
    """Forget everything at or below the bound; result is always truncated."""
    if bound.group != s.group:
        raise GroupMismatch(f"bound in {bound.group}, series over {s.group}")
    new_bound = _max_bound(bound, s.bound) or bound
    return make_series(s.group, s.terms, new_bound)


def series_inv(s: Series, depth: int = 8) -> Series:
    """Multiplicative inverse to the stated depth.

    Writing s = c*x^L*(1 + u) with u supported on negative exponents, the
    result is c^-1*x^-L times the alternating geometric sum of u up to
    u^depth, truncated below -L + (depth+1)*lead(u); it is exact when u = 0.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if not s.terms:
        raise ZeroOrUnknownLeading(
            "zero series" if s.bound is None else "truncated series with no stored terms")
    lead_exp, lead_coeff = s.terms[0]
    inv_coeff = coeff_inv(lead_coeff, depth)
    head = Series(s.group, ((group_neg(lead_exp), inv_coeff),), None)
    if len(s.terms) == 1 and s.bound is None:
        return head
    if isinstance(inv_coeff, Series) and not coeff_exact(inv_coeff):
        raise NonInvertibleCoefficient(
            "leading coefficient inverts only approximately; "
            "multi-term inversion over it is not representable")
    u = series_add(series_mul(s, head), series_neg(one(s.group)))
    if not u.terms:
        if u.bound is None:
            return head
        return truncate(head, group_add(group_neg(lead_exp), u.bound))
    neg_u = series_neg(u)
    total = one(s.group)
    power = one(s.group)
    for _ in range(depth):
        power = series_mul(power, neg_u)
        total = series_add(total, power)
    result = series_mul(head, total)
    cutoff = group_add(group_neg(lead_exp), scalar_mul(u.terms[0][0], depth + 1))
    return truncate(result, cutoff)


# ---------------------------------------------------------------------------
# functorial action on coefficients and exponents


@dataclass(frozen=True)
class CoefficientMap:
    """Order-preserving map applied to coefficients by ``box_map``."""

    kind: str  # "id" | "embed" | "compose"
    group: GroupDescriptor | None = None
    inner: "CoefficientMap | None" = None
    outer: "CoefficientMap | None" = None

    def __call__(self, c):
        if self.kind == "id":
            return c
        if self.kind == "embed":
            if isinstance(c, Series):
                raise GroupMismatch("constant embedding expects a rational coefficient")
            return constant(self.group, c)
        return self.outer(self.inner(c))


def identity_coefficients() -> CoefficientMap:
    return CoefficientMap("id")


def embed_constants(group: GroupDescriptor) -> CoefficientMap:
    """Send a rational c to the constant series c over the given group."""
    return CoefficientMap("embed", group=group)


def compose_coefficients(outer: CoefficientMap, inner: CoefficientMap) -> CoefficientMap:
    return CoefficientMap("compose", inner=inner, outer=outer)


def box_map(field_map: CoefficientMap, group_map: GroupMorphism, s: Series) -> Series:
    """Apply a coefficient map and an exponent-group map termwise."""
    if group_map.source != s.group:
        raise GroupMismatch(f"series over {s.group}, map from {group_map.source}")
    bound = None if s.bound is None else apply_morphism(group_map, s.bound)
    pairs = [(apply_morphism(group_map, e), field_map(c)) for e, c in s.terms]
    return make_series(group_map.target, pairs, bound)


# ---------------------------------------------------------------------------
# two-variable identification: x^(a,b) <-> y^a z^b


def flatten(s: Series) -> Series:
    """Regroup a series over lex(G, H) as a series over H with coefficients
    that are series over G (the dominant second coordinate becomes the outer
    exponent).  Requires an exact series; sign, sums, and products are
    preserved.
    """
    if s.group.kind != "lex" or s.group.arity != 2:
        raise NotLexSumGroup(f"flatten needs a two-component lex sum, got {s.group}")
    if s.bound is not None:
        raise NotExact("flatten of a truncated series is not representable")
    inner_group, outer_group = s.group.parts
    grouped: dict[GroupElement, list] = {}
    for e, c in s.terms:
        inner_exp, outer_exp = e.value
        grouped.setdefault(outer_exp, []).append((inner_exp, c))
    pairs = [
        (outer_exp, make_series(inner_group, inner_pairs))
        for outer_exp, inner_pairs in grouped.items()
    ]
    return make_series(outer_group, pairs)


def unflatten(t: Series, inner_group: GroupDescriptor | None = None) -> Series:
    """Inverse of ``flatten``.

    The inner exponent group is read off the nested coefficients; it must be
    supplied explicitly for the zero series, which carries no coefficients.
    """
    if t.bound is not None:
        raise NotExact("unflatten of a truncated series is not representable")
    for _, c in t.terms:
        if not isinstance(c, Series):
            raise GroupMismatch("unflatten needs nested series coefficients")
        if inner_group is None:
            inner_group = c.group
        elif c.group != inner_group:
            raise GroupMismatch(f"mixed inner groups {inner_group} and {c.group}")
        if c.bound is not None:
            raise NotExact("unflatten of truncated nested coefficients")
    if inner_group is None:
        raise GroupMismatch("inner exponent group unknown for the zero series")
    pair_group = GroupDescriptor("lex", (inner_group, t.group))
    pairs = []
    for outer_exp, inner_series in t.terms:
        for inner_exp, c in inner_series.terms:
            pairs.append((GroupElement(pair_group, (inner_exp, outer_exp)), c))
    return make_series(pair_group, pairs)
