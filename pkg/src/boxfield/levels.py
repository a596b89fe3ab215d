"""Archimedean level structure of series fields.

A field descriptor names the rational base together with a chain of exponent
groups for iterated series constructions.  Positive elements fall into
multiplicative growth classes ("levels") indexed by their leading exponents;
this module computes the level group, its Archimedean classes, the generator
groups above and below a class, the per-class quotients, and the full
decomposition report, all structurally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonPositiveInput, UnknownClass, UnsupportedGroup
from .groups import (
    ClassId,
    GroupDescriptor,
    GroupElement,
    Ordering,
    TRIVIAL,
    _leaf_values,
    box_sum,
    flatten_descriptor,
    group_add,
    group_cmp,
    group_classes,
    leaf_at,
    lex,
)
from .parsing import render_field_chain, render_group
from .series import (
    Series,
    Sign,
    constant,
    flatten,
    leading,
    make_series,
    series_add,
    series_mul,
    series_sign,
    unflatten,
)


@dataclass(frozen=True)
class FieldDescriptor:
    """Rational base field with a chain of exponent groups.

    An empty chain is the base field itself; each chain entry applies one
    more series construction, so elements of a chain [G1, ..., Gn] field are
    series over lex(G1, ..., Gn) in the flat view.
    """

    base: str = "Q"
    chain: tuple[GroupDescriptor, ...] = ()

    def __post_init__(self):
        if self.base != "Q":
            raise UnsupportedGroup("only the rational base field is supported")


def rational_field() -> FieldDescriptor:
    return FieldDescriptor()


def box_field(*chain: GroupDescriptor) -> FieldDescriptor:
    return FieldDescriptor("Q", tuple(chain))


def level_group(f: FieldDescriptor) -> GroupDescriptor:
    """Exponent group of the flat view; trivial for the base field."""
    if not f.chain:
        return TRIVIAL
    if len(f.chain) == 1:
        return f.chain[0]
    return lex(*f.chain)


# ---------------------------------------------------------------------------
# level classes of elements


@dataclass(frozen=True)
class LevelClass:
    """Growth class of a positive element, carried by its leading exponent."""

    group: GroupDescriptor
    exponent: GroupElement

    def __add__(self, other: "LevelClass") -> "LevelClass":
        return LevelClass(self.group, group_add(self.exponent, other.exponent))

    def __lt__(self, other):
        return group_cmp(self.exponent, other.exponent) is Ordering.LT

    def __le__(self, other):
        return group_cmp(self.exponent, other.exponent) is not Ordering.GT

    def __gt__(self, other):
        return group_cmp(self.exponent, other.exponent) is Ordering.GT

    def __ge__(self, other):
        return group_cmp(self.exponent, other.exponent) is not Ordering.LT


def _require_positive(s: Series):
    if series_sign(s) is not Sign.POSITIVE:
        raise NonPositiveInput("a positive series is required")


def level_class(x: Series) -> LevelClass:
    """Class of a positive series; additive under multiplication."""
    _require_positive(x)
    return LevelClass(x.group, leading(x)[0])


def level_cmp(a: Series, b: Series) -> Ordering:
    """Compare growth classes; EQ means the two are level-equivalent.

    Leading exponents decide; on a tie, nested leading coefficients are
    compared recursively, so the rule stays exact for iterated fields.
    """
    _require_positive(a)
    _require_positive(b)
    ea, ca = leading(a)
    eb, cb = leading(b)
    c = group_cmp(ea, eb)
    if c is not Ordering.EQ:
        return c
    if isinstance(ca, Series) or isinstance(cb, Series):
        if not isinstance(ca, Series):
            ca = constant(cb.group, ca)
        if not isinstance(cb, Series):
            cb = constant(ca.group, cb)
        return level_cmp(ca, cb)
    return Ordering.EQ


def level_equiv(a: Series, b: Series, bound: int = 1000) -> bool:
    """Whether some m, n <= bound give m*a > b and a < n*b.

    Decided exactly from leading exponents; ``bound`` mirrors the searching
    oracle's interface and is not consulted.
    """
    return level_cmp(a, b) is Ordering.EQ


# ---------------------------------------------------------------------------
# generator structure


def generator_set(f: FieldDescriptor) -> tuple[ClassId, ...]:
    return group_classes(level_group(f))


def degree(f: FieldDescriptor) -> int:
    return len(generator_set(f))


def _mask_descriptor(group: GroupDescriptor, keep) -> GroupDescriptor:
    """Copy of the descriptor with non-kept class slots made trivial."""
    counter = [0]

    def walk(node: GroupDescriptor) -> GroupDescriptor:
        if node.kind == "lex":
            return lex(*(walk(p) for p in node.parts))
        if node.kind == "1":
            return node
        position = counter[0]
        counter[0] += 1
        return node if keep(position) else TRIVIAL

    return walk(group)


@dataclass(frozen=True)
class SubgroupView:
    """A coordinate-span subgroup of a level group with a membership test."""

    ambient: GroupDescriptor
    descriptor: GroupDescriptor
    cut_position: int
    strict: bool  # True: coordinates at and above the cut must vanish

    def contains(self, x: GroupElement) -> bool:
        if x.group != self.ambient:
            raise UnsupportedGroup(f"element of {x.group}, subgroup of {self.ambient}")
        for position, (_, leaf) in enumerate(_leaf_values(x)):
            above = position >= self.cut_position if self.strict else position > self.cut_position
            if above and leaf.value != 0:
                return False
        return True


def _require_class(f: FieldDescriptor, c: ClassId):
    if c not in generator_set(f):
        raise UnknownClass(f"{c} is not a generator class of this field")


def upper_group(f: FieldDescriptor, c: ClassId) -> SubgroupView:
    """Subgroup spanned by coordinates at or below the class coordinate."""
    _require_class(f, c)
    g = level_group(f)
    return SubgroupView(g, _mask_descriptor(g, lambda p: p <= c.position),
                        c.position, strict=False)


def lower_group(f: FieldDescriptor, c: ClassId) -> SubgroupView:
    """Subgroup spanned by coordinates strictly below the class coordinate."""
    _require_class(f, c)
    g = level_group(f)
    return SubgroupView(g, _mask_descriptor(g, lambda p: p < c.position),
                        c.position, strict=True)


def class_group(f: FieldDescriptor, c: ClassId) -> GroupDescriptor:
    """Quotient of the upper by the lower generator group: the slot itself."""
    _require_class(f, c)
    return leaf_at(level_group(f), c.path)


def arch_subfield(f: FieldDescriptor) -> FieldDescriptor:
    """The constants: the maximal Archimedean subfield of a chain field."""
    return FieldDescriptor(f.base, ())


@dataclass(frozen=True)
class DecompositionReport:
    arch_subfield: FieldDescriptor
    generator_set: tuple[ClassId, ...]
    class_groups: tuple[GroupDescriptor, ...]
    degree: int
    level_group: GroupDescriptor


def decompose(f: FieldDescriptor) -> DecompositionReport:
    """Structural decomposition data: base, classes, per-class groups.

    The lex sum of the class groups is order-isomorphic to the level group;
    the canonical flattening of both sides is compared as a consistency
    check.
    """
    classes = generator_set(f)
    groups = tuple(class_group(f, c) for c in classes)
    g = level_group(f)
    if classes:
        assert flatten_descriptor(box_sum(groups)) == flatten_descriptor(g)
    else:
        assert flatten_descriptor(g) == TRIVIAL
    return DecompositionReport(
        arch_subfield=arch_subfield(f),
        generator_set=classes,
        class_groups=groups,
        degree=len(classes),
        level_group=g,
    )


def report_to_json(report: DecompositionReport) -> dict:
    """Stable JSON shape: {arch, degree, classes:[{id, class_group}], level_group}."""
    return {
        "arch": render_field_chain(report.arch_subfield.chain),
        "degree": report.degree,
        "classes": [
            {"id": c.position, "class_group": render_group(g)}
            for c, g in zip(report.generator_set, report.class_groups)
        ],
        "level_group": render_group(report.level_group),
    }


# ---------------------------------------------------------------------------
# chain view vs flat view


def to_chain_view(s: Series, chain) -> Series:
    """Iteratively regroup a flat series over lex(G1,...,Gn) into nested
    series: outermost exponents in Gn, innermost in G1."""
    chain = tuple(chain)
    if len(chain) <= 1:
        return s
    if len(chain) == 2:
        return flatten(s)
    prefix = lex(*chain[:-1])
    pair = lex(prefix, chain[-1])
    regrouped = make_series(pair, [
        (GroupElement(pair, (GroupElement(prefix, e.value[:-1]), e.value[-1])), c)
        for e, c in s.terms
    ])
    outer = flatten(regrouped)
    return make_series(chain[-1],
                       [(e, to_chain_view(c, chain[:-1])) for e, c in outer.terms])


def from_chain_view(t: Series, chain) -> Series:
    """Inverse of ``to_chain_view``."""
    chain = tuple(chain)
    if len(chain) <= 1:
        return t
    if len(chain) == 2:
        return unflatten(t, inner_group=chain[0])
    prefix = lex(*chain[:-1])
    lifted = make_series(chain[-1],
                         [(e, from_chain_view(c, chain[:-1])) for e, c in t.terms])
    paired = unflatten(lifted, inner_group=prefix)
    full = lex(*chain)
    return make_series(full, [
        (GroupElement(full, tuple(e.value[0].value) + (e.value[1],)), c)
        for e, c in paired.terms
    ])


def flatten_chain_check(f: FieldDescriptor, samples, chain_map=None) -> bool:
    """Verify that the flat and chain views agree as ordered rings.

    For every consecutive sample pair, the chain-view map must commute with
    addition and multiplication, preserve sign, and invert back to the flat
    sample.  ``chain_map`` may substitute the transform under test.
    """
    chain = tuple(f.chain)
    if len(chain) < 2:
        raise ValueError("flatten_chain_check needs a chain of length >= 2")
    samples = list(samples)
    to_chain = chain_map or (lambda series: to_chain_view(series, chain))
    for i, s in enumerate(samples):
        t = samples[(i + 1) % len(samples)]
        cs = to_chain(s)
        ct = to_chain(t)
        if from_chain_view(cs, chain) != s:
            return False
        if series_sign(s) != series_sign(cs):
            return False
        if to_chain(series_add(s, t)) != series_add(cs, ct):
            return False
        if to_chain(series_mul(s, t)) != series_mul(cs, ct):
            return False
    return True
