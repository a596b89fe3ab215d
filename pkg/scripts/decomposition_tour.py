#!/usr/bin/env python3
"""A tour of level structure across a few series fields.

For each field the script prints the decomposition report, rebuilds the
level group from the per-class groups, and spot-checks the two-variable
identification and partial-sum convergence on seeded samples.
"""

import argparse
import json
import random

import boxfield as bf
from boxfield.sampling import random_series

FIELDS = (
    bf.rational_field(),
    bf.box_field(bf.Q),            # one rational-valued growth scale
    bf.box_field(bf.Z, bf.Z),      # two nested integer scales
    bf.box_field(bf.Z, bf.Q, bf.Z),
    bf.box_field(bf.lex(bf.Z, bf.Z), bf.Q),
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    for field in FIELDS:
        name = bf.render_field_chain(field.chain)
        report = bf.decompose(field)
        print(f"== {name}")
        print(json.dumps(bf.report_to_json(report), indent=2))
        if report.degree:
            rebuilt = bf.box_sum(report.class_groups)
            same = bf.flatten_descriptor(rebuilt) == bf.flatten_descriptor(report.level_group)
            print(f"class groups rebuild the level group: {same}")
        if len(field.chain) >= 2:
            group = bf.level_group(field)
            samples = [random_series(rng, group, max_terms=4) for _ in range(50)]
            ok = bf.flatten_chain_check(field, samples)
            print(f"chain view vs flat view on 50 samples: {ok}")
        print()

    print("== partial sums close in on their series")
    s = random_series(rng, bf.Z, max_terms=6, min_terms=6)
    print(f"series: {bf.render_series(s)}")
    rep = bf.partial_sum_cauchy_check(s, [1, 2, 3, 4, 5])
    for tail in rep.tails:
        exp = "zero" if tail.tail_exponent is None else bf.render_element(tail.tail_exponent)
        print(f"  prefix {tail.prefix}: tail level {exp}, "
              f"{tail.radii_checked} radii checked, ok={tail.ok}")
    print(f"levels strictly decreasing: {rep.levels_strictly_decreasing}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
