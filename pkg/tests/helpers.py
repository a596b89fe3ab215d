"""Shared sample builders and hypothesis strategies for the test suite.

Magnitudes stay small so every bounded search (bound 1000) finds witnesses
that exist: leading-coefficient ratios never exceed a few hundred.
"""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

import boxfield as bf

FLAT_GROUPS = (bf.Z, bf.Q, bf.lex(bf.Z, bf.Z))
PAIR_GROUPS = (bf.lex(bf.Z, bf.Z), bf.lex(bf.Q, bf.Z))
DEEP_GROUPS = FLAT_GROUPS + (
    bf.lex(bf.Q, bf.Z),
    bf.lex(bf.Z, bf.TRIVIAL, bf.Q),
    bf.lex(bf.lex(bf.Z, bf.Z), bf.Q),
)


# ---------------------------------------------------------------------------
# hypothesis strategies


def st_rational(max_num: int = 12, max_den: int = 8, nonzero: bool = False):
    base = st.fractions(min_value=-max_num, max_value=max_num, max_denominator=max_den)
    if nonzero:
        return base.filter(lambda q: q != 0)
    return base


def st_element(group: bf.GroupDescriptor, magnitude: int = 9):
    if group.kind == "Z":
        return st.integers(-magnitude, magnitude).map(lambda v: bf.element(group, v))
    if group.kind == "Q":
        return st_rational(magnitude, 6).map(lambda v: bf.element(group, v))
    if group.kind == "1":
        return st.just(bf.zero_element(group))
    return st.tuples(*(st_element(p, magnitude) for p in group.parts)).map(
        lambda coords: bf.GroupElement(group, coords))


def st_series(group: bf.GroupDescriptor, max_terms: int = 6, min_terms: int = 0):
    pairs = st.lists(
        st.tuples(st_element(group), st_rational(nonzero=True)),
        min_size=min_terms, max_size=max_terms,
        unique_by=lambda pair: pair[0])
    return pairs.map(lambda items: bf.make_series(group, items))


def st_positive_series(group: bf.GroupDescriptor, max_terms: int = 6):
    return st_series(group, max_terms=max_terms, min_terms=1).map(_force_positive)


def _force_positive(s: bf.Series) -> bf.Series:
    lead_exp, lead_coeff = s.terms[0]
    if lead_coeff < 0:
        return bf.make_series(s.group, [(lead_exp, -lead_coeff)] + list(s.terms[1:]))
    return s


# ---------------------------------------------------------------------------
# seeded random morphisms (for functor-law sweeps)


def random_morphism(rng: random.Random, source: bf.GroupDescriptor) -> bf.GroupMorphism:
    if source.kind == "Z":
        return rng.choice((bf.identity_map(source), bf.inclusion_z_to_q()))
    if source.kind == "Q":
        if rng.random() < 0.5:
            return bf.identity_map(source)
        return bf.scale_map(Fraction(rng.randint(1, 5), rng.randint(1, 5)))
    if source.kind == "1":
        return bf.identity_map(source)
    return bf.box_sum_map([random_morphism(rng, p) for p in source.parts])


def random_morphism_pair(rng: random.Random, source: bf.GroupDescriptor):
    """(f, g) with g from source and f composable after g."""
    g = random_morphism(rng, source)
    f = random_morphism(rng, g.target)
    return f, g
