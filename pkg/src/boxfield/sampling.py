"""Seeded random generators for elements, series, and check corpora.

Magnitudes are kept small so that bounded searches (default bound 1000)
always find the witnesses that exist.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .groups import GroupDescriptor, GroupElement, element, zero_element
from .series import Series, make_series, series_add, series_scale


def random_rational(rng: random.Random, max_num: int = 12, max_den: int = 8,
                    nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        if value != 0 or not nonzero:
            return value


def random_element(rng: random.Random, group: GroupDescriptor,
                   magnitude: int = 9) -> GroupElement:
    if group.kind == "Z":
        return element(group, rng.randint(-magnitude, magnitude))
    if group.kind == "Q":
        return element(group, Fraction(rng.randint(-magnitude, magnitude),
                                       rng.randint(1, 6)))
    if group.kind == "1":
        return zero_element(group)
    return GroupElement(group, tuple(random_element(rng, p, magnitude)
                                     for p in group.parts))


def random_series(rng: random.Random, group: GroupDescriptor,
                  max_terms: int = 6, min_terms: int = 0,
                  magnitude: int = 9, coeff_num: int = 12,
                  coeff_den: int = 8) -> Series:
    n_terms = rng.randint(min_terms, max(max_terms, min_terms))
    exponents: set[GroupElement] = set()
    while len(exponents) < n_terms:
        exponents.add(random_element(rng, group, magnitude))
    pairs = [(e, random_rational(rng, coeff_num, coeff_den, nonzero=True))
             for e in exponents]
    return make_series(group, pairs)


def random_positive_series(rng: random.Random, group: GroupDescriptor,
                           max_terms: int = 6, magnitude: int = 9) -> Series:
    s = random_series(rng, group, max_terms=max_terms, min_terms=1,
                      magnitude=magnitude)
    lead_exp, lead_coeff = s.terms[0]
    if lead_coeff < 0:
        pairs = [(lead_exp, -lead_coeff)] + list(s.terms[1:])
        return make_series(group, pairs)
    return s


def random_nonzero_series(rng: random.Random, group: GroupDescriptor,
                          max_terms: int = 6, magnitude: int = 9) -> Series:
    return random_series(rng, group, max_terms=max_terms, min_terms=1,
                         magnitude=magnitude)


_SMALL_OFFSETS = tuple(Fraction(k, 8) for k in range(-6, 7))


def beta_corpus(rng: random.Random, group: GroupDescriptor,
                n: int) -> list[tuple[Series, Series, Series, Series, Series]]:
    """(x, r, y, s, z) tuples with z inside both balls by construction."""
    corpus = []
    for _ in range(n):
        x = random_series(rng, group, max_terms=3)
        r = random_positive_series(rng, group, max_terms=2)
        s = random_positive_series(rng, group, max_terms=2)
        z = series_add(x, series_scale(r, rng.choice(_SMALL_OFFSETS)))
        y = series_add(z, series_scale(s, rng.choice(_SMALL_OFFSETS)))
        corpus.append((x, r, y, s, z))
    return corpus
