"""Command-line front end.

Fields are written ``Q box G1 box ... box Gn`` (default ``Q box Z``) and
series in the usual text grammar, e.g. ``3*x^2 - 5*x^(1/2) + 1``.  Exit
codes: 0 success, 1 domain error (indeterminate sign, bad input value),
2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .beta import axiom_report_to_json, beta_axioms_check
from .errors import BoxFieldError, ParseError
from .groups import Ordering, element, group_cmp, zero_element
from .levels import (
    FieldDescriptor,
    decompose,
    degree,
    generator_set,
    class_group,
    level_class,
    level_equiv,
    level_group,
    report_to_json,
)
from .parsing import (
    parse_field_chain,
    parse_series,
    render_element,
    render_field_chain,
    render_group,
    render_series,
    series_to_json,
)
from .sampling import beta_corpus
from .series import (
    Series,
    flatten,
    make_series,
    series_add,
    series_cmp,
    series_inv,
    series_mul,
    series_pow,
    series_scale,
    series_sign,
)

_OPS = ("add", "sub", "mul", "div")


def _field(args) -> FieldDescriptor:
    return FieldDescriptor("Q", parse_field_chain(args.field))


def _parse(args, text: str) -> Series:
    return parse_series(text, level_group(_field(args)))


def _emit(args, text: str, payload) -> int:
    if args.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return 0


def _cmd_eval(args) -> int:
    values = [_parse(args, expr) for expr in args.exprs]
    if len(values) == 1:
        if args.op:
            raise ParseError("--op needs two expressions", 0)
        result = values[0]
    else:
        if not args.op:
            raise ParseError("two expressions need --op", 0)
        a, b = values
        if args.op == "add":
            result = series_add(a, b)
        elif args.op == "sub":
            result = series_add(a, -b)
        elif args.op == "mul":
            result = series_mul(a, b)
        else:
            result = series_mul(a, series_inv(b, args.depth))
    return _emit(args, render_series(result), series_to_json(result))


def _cmd_cmp(args) -> int:
    result = series_cmp(_parse(args, args.exprs[0]), _parse(args, args.exprs[1]))
    return _emit(args, result.name, {"result": result.name})


def _cmd_sign(args) -> int:
    result = series_sign(_parse(args, args.exprs[0]))
    name = result.name.capitalize()
    return _emit(args, name, {"result": name})


def _cmd_level(args) -> int:
    if len(args.exprs) == 1:
        cls = level_class(_parse(args, args.exprs[0]))
        text = render_element(cls.exponent)
        return _emit(args, text, {"level": text})
    a = _parse(args, args.exprs[0])
    b = _parse(args, args.exprs[1])
    equivalent = level_equiv(a, b, args.bound)
    text = "equivalent" if equivalent else "inequivalent"
    return _emit(args, text, {"equivalent": equivalent})


def _cmd_gen(args) -> int:
    f = _field(args)
    classes = generator_set(f)
    rows = [{"id": c.position, "class_group": render_group(class_group(f, c))}
            for c in classes]
    text = "\n".join(f"class{row['id']}: {row['class_group']}" for row in rows)
    return _emit(args, text if text else "(empty)", rows)


def _cmd_degree(args) -> int:
    n = degree(_field(args))
    return _emit(args, str(n), {"degree": n})


def _cmd_decompose(args) -> int:
    report = decompose(_field(args))
    payload = report_to_json(report)
    lines = [
        f"field: {render_field_chain(_field(args).chain)}",
        f"arch: {payload['arch']}",
        f"degree: {payload['degree']}",
        "classes: " + (", ".join(
            f"class{row['id']} -> {row['class_group']}"
            for row in payload["classes"]) or "(none)"),
        f"level_group: {payload['level_group']}",
    ]
    return _emit(args, "\n".join(lines), payload)


def _cmd_flatten(args) -> int:
    s = _parse(args, args.exprs[0])
    result = flatten(s)
    text = render_series(result, var="z", nested_vars=("y",))
    return _emit(args, text, series_to_json(result))


def _cmd_beta_check(args) -> int:
    f = _field(args)
    rng = random.Random(args.seed)
    corpus = beta_corpus(rng, level_group(f), args.samples)
    reports = beta_axioms_check(corpus)
    payload = [axiom_report_to_json(r) for r in reports]
    lines = [
        f"axiom {r.axiom}: {r.samples_run} samples, {len(r.failures)} failures"
        for r in reports
    ]
    if args.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return 0 if all(r.ok for r in reports) else 1


def _cmd_derive(args) -> int:
    f = _field(args)
    group = level_group(f)
    if group.kind != "Z":
        raise BoxFieldError("derive works over the field Q box Z")
    poly = _parse(args, args.exprs[0])
    zero_exp = zero_element(group)
    for e, _ in poly.terms:
        if group_cmp(e, zero_exp) is Ordering.LT:
            raise BoxFieldError("derive needs a polynomial (no negative exponents)")
    try:
        at = Fraction(args.at)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad --at value {args.at!r}", 0) from exc
    # evaluate at (c + h) where h is the canonical infinitesimal x^-1
    point = make_series(group, [
        (zero_exp, at),
        (element(group, -1), Fraction(1)),
    ])
    total = make_series(group)
    for e, c in poly.terms:
        total = series_add(total, series_scale(series_pow(point, e.value), c))
    derivative = Fraction(0)
    target = element(group, -1)
    for e, c in total.terms:
        if e == target:
            derivative = c
            break
    return _emit(args, str(derivative), {"derivative": str(derivative)})


_HANDLERS = {
    "eval": _cmd_eval,
    "cmp": _cmd_cmp,
    "sign": _cmd_sign,
    "level": _cmd_level,
    "gen": _cmd_gen,
    "degree": _cmd_degree,
    "decompose": _cmd_decompose,
    "flatten": _cmd_flatten,
    "beta-check": _cmd_beta_check,
    "derive": _cmd_derive,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q box Z",
                        help="field chain, e.g. 'Q box lex(Z,Z)' (default: %(default)s)")
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--depth", type=int, default=8,
                        help="inversion depth (default: %(default)s)")
    common.add_argument("--bound", type=int, default=1000,
                        help="search bound for level checks (default: %(default)s)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for sampled checks (default: %(default)s)")

    parser = argparse.ArgumentParser(
        prog="boxfield",
        description="Exact arithmetic for generalized power series fields.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", parents=[common], help="normalize or combine series")
    p.add_argument("exprs", nargs="+")
    p.add_argument("--op", choices=_OPS)

    p = sub.add_parser("cmp", parents=[common], help="compare two series")
    p.add_argument("exprs", nargs=2)

    p = sub.add_parser("sign", parents=[common], help="sign of a series")
    p.add_argument("exprs", nargs=1)

    p = sub.add_parser("level", parents=[common],
                       help="level class of one series, or level equivalence of two")
    p.add_argument("exprs", nargs="+")

    sub.add_parser("gen", parents=[common], help="generator classes of the field")
    sub.add_parser("degree", parents=[common], help="non-Archimedean degree")
    sub.add_parser("decompose", parents=[common], help="decomposition report")

    p = sub.add_parser("flatten", parents=[common],
                       help="regroup a two-variable series: x^(a,b) -> (y^a)*z^b")
    p.add_argument("exprs", nargs=1)

    p = sub.add_parser("beta-check", parents=[common], help="run the ball axioms")
    p.add_argument("--samples", type=int, default=100)

    p = sub.add_parser("derive", parents=[common],
                       help="derivative of a polynomial via an infinitesimal step")
    p.add_argument("exprs", nargs=1)
    p.add_argument("--at", required=True, help="evaluation point (rational)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "eval" and len(args.exprs) > 2:
        parser.error("eval takes one or two expressions")
    if args.verb == "level" and len(args.exprs) > 2:
        parser.error("level takes one or two expressions")
    try:
        return _HANDLERS[args.verb](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except BoxFieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint():
    sys.exit(main())
