#!/usr/bin/env python3
"""Derivative extraction through infinitesimal arithmetic.

Evaluating a polynomial at c + h, where h = x^-1 is the canonical
infinitesimal, puts f(c) in the constant term and f'(c) in the h-coefficient
exactly, with no roundoff.  This script sweeps random polynomials, reads the
derivative off the expansion, and cross-checks against the symbolic power
rule.
"""

import argparse
import random
from fractions import Fraction

import boxfield as bf


def expand_at(poly: bf.Series, at: Fraction) -> bf.Series:
    group = poly.group
    point = bf.make_series(group, [
        (bf.zero_element(group), at),
        (bf.element(group, -1), Fraction(1)),
    ])
    total = bf.zero(group)
    for e, c in poly.terms:
        total = bf.series_add(total, bf.series_scale(bf.series_pow(point, e.value), c))
    return total


def coefficient_at(s: bf.Series, exponent: int) -> Fraction:
    target = bf.element(s.group, exponent)
    for e, c in s.terms:
        if e == target:
            return c
    return Fraction(0)


def power_rule(poly: bf.Series, at: Fraction) -> Fraction:
    return sum((c * e.value * at ** (e.value - 1) for e, c in poly.terms
                if e.value >= 1), Fraction(0))


def random_polynomial(rng: random.Random) -> bf.Series:
    pairs = [(bf.element(bf.Z, k), Fraction(rng.randint(-9, 9)))
             for k in rng.sample(range(0, 7), rng.randint(1, 5))]
    return bf.make_series(bf.Z, pairs)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=200)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print(f"{'polynomial':<42} {'at':>6} {'extracted':>12} {'power rule':>12}")
    mismatches = 0
    for trial in range(args.trials):
        poly = random_polynomial(rng)
        at = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        extracted = coefficient_at(expand_at(poly, at), -1)
        symbolic = power_rule(poly, at)
        if extracted != symbolic:
            mismatches += 1
        if trial < 12:
            print(f"{bf.render_series(poly):<42} {str(at):>6} "
                  f"{str(extracted):>12} {str(symbolic):>12}")
    print(f"...\n{args.trials} trials, {mismatches} mismatches")
    return 0 if mismatches == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
