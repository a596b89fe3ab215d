"""Structured ordered abelian groups and strictly order-preserving maps.

Group values are built from four shapes: the integers ``Z``, the rationals
``Q``, the one-element group ``TRIVIAL``, and finite lexicographic sums of
other shapes (``lex``).  A lexicographic sum is ordered by its nonzero
coordinate of largest index, so later components dominate earlier ones.
All comparisons, sums, and Archimedean-class computations are exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ArityMismatch,
    DescriptorMismatch,
    EmptyList,
    NonPositiveInput,
    UnsupportedGroup,
)


class Ordering(enum.IntEnum):
    """Three-way comparison result; usable as an integer sign."""

    LT = -1
    EQ = 0
    GT = 1


class ArchEquivalence(enum.Enum):
    """Outcome of an Archimedean-equivalence query.

    ``UNKNOWN`` is part of the interface for bounded searches but is never
    produced for the structured group shapes, where the answer is exact.
    """

    EQUIVALENT = "equivalent"
    INEQUIVALENT = "inequivalent"
    UNKNOWN = "unknown"


# ---------------------------------------------------------------------------
# descriptors


@dataclass(frozen=True)
class GroupDescriptor:
    """Shape of a structured ordered abelian group."""

    kind: str  # "Z" | "Q" | "1" | "lex"
    parts: tuple["GroupDescriptor", ...] = ()

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "1", "lex"):
            raise UnsupportedGroup(f"unknown group kind {self.kind!r}")
        if self.kind == "lex" and not self.parts:
            raise EmptyList("lexicographic sum needs at least one component")
        if self.kind != "lex" and self.parts:
            raise UnsupportedGroup(f"{self.kind!r} takes no components")

    @property
    def arity(self) -> int:
        return len(self.parts)


Z = GroupDescriptor("Z")
Q = GroupDescriptor("Q")
TRIVIAL = GroupDescriptor("1")


def lex(*parts: GroupDescriptor) -> GroupDescriptor:
    return GroupDescriptor("lex", tuple(parts))


def box_sum(components) -> GroupDescriptor:
    """Lexicographic sum of the given groups, later components dominant."""
    components = tuple(components)
    if not components:
        raise EmptyList("box sum of an empty family")
    return lex(*components)


def leaf_paths(group: GroupDescriptor) -> list[tuple[tuple[int, ...], GroupDescriptor]]:
    """All leaves of a descriptor as (path, leaf) in coordinate order."""
    if group.kind == "lex":
        out = []
        for i, part in enumerate(group.parts):
            for path, leaf in leaf_paths(part):
                out.append(((i,) + path, leaf))
        return out
    return [((), group)]


def leaf_at(group: GroupDescriptor, path: tuple[int, ...]) -> GroupDescriptor:
    node = group
    for i in path:
        if node.kind != "lex" or i >= node.arity:
            raise UnsupportedGroup(f"no component at path {path}")
        node = node.parts[i]
    return node


def flatten_descriptor(group: GroupDescriptor) -> GroupDescriptor:
    """Canonical flat form: one lexicographic level, trivial slots dropped.

    The result is order-isomorphic to the input: Z, Q, or a flat lex sum of
    Z/Q slots; an all-trivial group collapses to TRIVIAL.
    """
    leaves = [leaf for _, leaf in leaf_paths(group) if leaf.kind != "1"]
    if not leaves:
        return TRIVIAL
    if len(leaves) == 1:
        return leaves[0]
    return lex(*leaves)


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class GroupElement:
    """A value of a structured group, stored in canonical form."""

    group: GroupDescriptor
    value: "int | Fraction | None | tuple[GroupElement, ...]"

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return group_add(self, other)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return group_add(self, group_neg(other))

    def __neg__(self) -> "GroupElement":
        return group_neg(self)

    def __rmul__(self, n: int) -> "GroupElement":
        return scalar_mul(self, n)

    def __lt__(self, other):
        return group_cmp(self, other) is Ordering.LT

    def __le__(self, other):
        return group_cmp(self, other) is not Ordering.GT

    def __gt__(self, other):
        return group_cmp(self, other) is Ordering.GT

    def __ge__(self, other):
        return group_cmp(self, other) is not Ordering.LT


def element(group: GroupDescriptor, raw) -> GroupElement:
    """Coerce a plain Python value into a canonical group element."""
    if isinstance(raw, GroupElement):
        if raw.group != group:
            raise DescriptorMismatch(f"element of {raw.group} used in {group}")
        return raw
    if group.kind == "Z":
        if isinstance(raw, Fraction):
            if raw.denominator != 1:
                raise DescriptorMismatch(f"{raw} is not an integer")
            return GroupElement(group, int(raw))
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise DescriptorMismatch(f"{raw!r} is not an integer")
        return GroupElement(group, raw)
    if group.kind == "Q":
        if not isinstance(raw, (int, Fraction)):
            raise DescriptorMismatch(f"{raw!r} is not a rational")
        return GroupElement(group, Fraction(raw))
    if group.kind == "1":
        if raw in (None, "e", 0):
            return GroupElement(group, None)
        raise DescriptorMismatch(f"{raw!r} is not the trivial element")
    # lex
    if not isinstance(raw, (tuple, list)):
        raise DescriptorMismatch(f"{raw!r} is not a coordinate tuple")
    if len(raw) != group.arity:
        raise ArityMismatch(f"expected {group.arity} coordinates, got {len(raw)}")
    coords = tuple(element(part, r) for part, r in zip(group.parts, raw))
    return GroupElement(group, coords)


def zero_element(group: GroupDescriptor) -> GroupElement:
    if group.kind == "Z":
        return GroupElement(group, 0)
    if group.kind == "Q":
        return GroupElement(group, Fraction(0))
    if group.kind == "1":
        return GroupElement(group, None)
    return GroupElement(group, tuple(zero_element(p) for p in group.parts))


def is_zero(x: GroupElement) -> bool:
    if x.group.kind == "1":
        return True
    if x.group.kind == "lex":
        return all(is_zero(c) for c in x.value)
    return x.value == 0


def _require_same(a: GroupElement, b: GroupElement):
    if a.group != b.group:
        raise DescriptorMismatch(f"{a.group} vs {b.group}")


def group_add(a: GroupElement, b: GroupElement) -> GroupElement:
    _require_same(a, b)
    kind = a.group.kind
    if kind == "1":
        return a
    if kind == "lex":
        return GroupElement(a.group, tuple(group_add(x, y) for x, y in zip(a.value, b.value)))
    return GroupElement(a.group, a.value + b.value)


def group_neg(x: GroupElement) -> GroupElement:
    kind = x.group.kind
    if kind == "1":
        return x
    if kind == "lex":
        return GroupElement(x.group, tuple(group_neg(c) for c in x.value))
    return GroupElement(x.group, -x.value)


def scalar_mul(x: GroupElement, n: int) -> GroupElement:
    """n-fold sum of x (n may be negative or zero)."""
    kind = x.group.kind
    if kind == "1":
        return x
    if kind == "lex":
        return GroupElement(x.group, tuple(scalar_mul(c, n) for c in x.value))
    return GroupElement(x.group, x.value * n)


def group_cmp(a: GroupElement, b: GroupElement) -> Ordering:
    """Total order; lex sums compare at the nonzero coordinate of largest index."""
    _require_same(a, b)
    kind = a.group.kind
    if kind == "1":
        return Ordering.EQ
    if kind == "lex":
        for x, y in zip(reversed(a.value), reversed(b.value)):
            c = group_cmp(x, y)
            if c is not Ordering.EQ:
                return c
        return Ordering.EQ
    if a.value < b.value:
        return Ordering.LT
    if a.value > b.value:
        return Ordering.GT
    return Ordering.EQ


def group_sign(x: GroupElement) -> Ordering:
    return group_cmp(x, zero_element(x.group))


def _leaf_values(x: GroupElement) -> list[tuple[tuple[int, ...], GroupElement]]:
    """Nontrivial leaf coordinates of x as (path, leaf element), in slot order."""
    if x.group.kind == "lex":
        out = []
        for i, coord in enumerate(x.value):
            for path, leaf in _leaf_values(coord):
                out.append(((i,) + path, leaf))
        return out
    if x.group.kind == "1":
        return []
    return [((), x)]


def flatten_element(x: GroupElement) -> GroupElement:
    """Image of x under the canonical isomorphism onto flatten_descriptor."""
    flat = flatten_descriptor(x.group)
    leaves = [leaf for _, leaf in _leaf_values(x)]
    if flat.kind != "lex":
        if not leaves:
            return zero_element(flat)
        return GroupElement(flat, leaves[0].value)
    return GroupElement(flat, tuple(leaves))


def dominant_slot(x: GroupElement) -> int | None:
    """Index (in flat slot order) of the largest-index nonzero coordinate."""
    best = None
    for idx, (_, leaf) in enumerate(_leaf_values(x)):
        if leaf.value != 0:
            best = idx
    return best


def group_archimedean_equiv(a: GroupElement, b: GroupElement,
                            bound: int = 1000) -> ArchEquivalence:
    """Whether some m, n give m*a > b and a < n*b.

    For the structured shapes the answer only depends on which coordinate
    dominates each element, so it is computed exactly and ``bound`` is never
    consulted; the parameter mirrors the bounded-search interface.
    """
    _require_same(a, b)
    if group_sign(a) is not Ordering.GT or group_sign(b) is not Ordering.GT:
        raise NonPositiveInput("archimedean equivalence needs positive elements")
    if dominant_slot(a) == dominant_slot(b):
        return ArchEquivalence.EQUIVALENT
    return ArchEquivalence.INEQUIVALENT


# ---------------------------------------------------------------------------
# archimedean classes of a group


@dataclass(frozen=True)
class ClassId:
    """One Archimedean class of a structured group's positive cone.

    ``position`` counts nontrivial slots from the least dominant upward;
    ``path`` locates the corresponding component in the descriptor.
    """

    position: int
    path: tuple[int, ...]


def group_classes(group: GroupDescriptor) -> tuple[ClassId, ...]:
    """Archimedean classes, least dominant first.

    Each Z or Q slot contributes exactly one class; trivial slots none.
    """
    out = []
    for path, leaf in leaf_paths(group):
        if leaf.kind != "1":
            out.append(ClassId(len(out), path))
    return tuple(out)


# ---------------------------------------------------------------------------
# morphisms

_RULES = ("id", "incl_zq", "scale", "tuple", "permute", "compose")


@dataclass(frozen=True)
class GroupMorphism:
    """A named structural, strictly order-preserving homomorphism."""

    source: GroupDescriptor
    target: GroupDescriptor
    rule: str
    factor: Fraction | None = None
    parts: tuple["GroupMorphism", ...] = ()
    perm: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rule not in _RULES:
            raise UnsupportedGroup(f"unknown morphism rule {self.rule!r}")

    def __call__(self, x: GroupElement) -> GroupElement:
        return apply_morphism(self, x)


def identity_map(group: GroupDescriptor) -> GroupMorphism:
    return GroupMorphism(group, group, "id")


def inclusion_z_to_q() -> GroupMorphism:
    return GroupMorphism(Z, Q, "incl_zq")


def scale_map(factor: Fraction) -> GroupMorphism:
    """Multiplication by a positive rational on Q."""
    factor = Fraction(factor)
    if factor <= 0:
        raise NonPositiveInput("scaling factor must be positive")
    return GroupMorphism(Q, Q, "scale", factor=factor)


def permutation_map(source: GroupDescriptor, perm: tuple[int, ...]) -> GroupMorphism:
    """Coordinate shuffle: target coordinate i takes source coordinate perm[i].

    Only order-compatible shuffles are strictly order-preserving (for lex
    sums this means dominance positions are preserved, e.g. moving trivial
    components around); compatibility is a sampled invariant, not checked
    here.
    """
    if source.kind != "lex":
        raise UnsupportedGroup("permutation needs a lex sum source")
    if sorted(perm) != list(range(source.arity)):
        raise ArityMismatch(f"{perm} is not a permutation of 0..{source.arity - 1}")
    target = lex(*(source.parts[p] for p in perm))
    return GroupMorphism(source, target, "permute", perm=tuple(perm))


def compose(outer: GroupMorphism, inner: GroupMorphism) -> GroupMorphism:
    """outer after inner."""
    if inner.target != outer.source:
        raise DescriptorMismatch(
            f"cannot compose: inner target {inner.target} != outer source {outer.source}")
    return GroupMorphism(inner.source, outer.target, "compose", parts=(outer, inner))


def box_sum_map(morphisms) -> GroupMorphism:
    """Componentwise map between lexicographic sums."""
    morphisms = tuple(morphisms)
    if not morphisms:
        raise EmptyList("box sum of no morphisms")
    source = box_sum(m.source for m in morphisms)
    target = box_sum(m.target for m in morphisms)
    return GroupMorphism(source, target, "tuple", parts=morphisms)


def apply_morphism(m: GroupMorphism, x: GroupElement) -> GroupElement:
    if x.group != m.source:
        raise DescriptorMismatch(f"element of {x.group} fed to map from {m.source}")
    if m.rule == "id":
        return x
    if m.rule == "incl_zq":
        return GroupElement(Q, Fraction(x.value))
    if m.rule == "scale":
        return GroupElement(Q, x.value * m.factor)
    if m.rule == "tuple":
        if len(x.value) != len(m.parts):
            raise ArityMismatch(f"expected {len(m.parts)} coordinates")
        return GroupElement(
            m.target, tuple(apply_morphism(f, c) for f, c in zip(m.parts, x.value)))
    if m.rule == "permute":
        return GroupElement(m.target, tuple(x.value[p] for p in m.perm))
    # compose: parts = (outer, inner)
    outer, inner = m.parts
    return apply_morphism(outer, apply_morphism(inner, x))
