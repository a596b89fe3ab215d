"""Command-line behaviors: outputs, exit codes, JSON stability."""

import json

from boxfield.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cmp_text(capsys):
    code, out, _ = run(capsys, "cmp", "3*x^2-5*x", "2*x^2+100")
    assert code == 0
    assert out == "GT\n"


def test_cmp_json(capsys):
    code, out, _ = run(capsys, "cmp", "--output", "json", "x", "x")
    assert code == 0
    assert json.loads(out) == {"result": "EQ"}


def test_cmp_indeterminate_is_domain_error(capsys):
    code, out, err = run(capsys, "cmp", "1 + O(x^-1)", "1 + O(x^-1)")
    assert code == 1
    assert out == ""
    assert "error" in err


def test_sign(capsys):
    code, out, _ = run(capsys, "sign", "-2*x^(1/2) + 100", "--field", "Q box Q")
    assert code == 0
    assert out == "Negative\n"


def test_eval_normalizes(capsys):
    code, out, _ = run(capsys, "eval", "x + x - 1 + 2")
    assert code == 0
    assert out == "2*x + 1\n"


def test_eval_mul(capsys):
    code, out, _ = run(capsys, "eval", "x + 1", "x - 1", "--op", "mul")
    assert code == 0
    assert out == "x^2 - 1\n"


def test_eval_div_uses_depth(capsys):
    code, out, _ = run(capsys, "eval", "1", "1 - x^-1", "--op", "div", "--depth", "3")
    assert code == 0
    assert out == "1 + x^-1 + x^-2 + x^-3 + O(x^-4)\n"


def test_eval_two_exprs_need_op(capsys):
    code, _, err = run(capsys, "eval", "x", "x")
    assert code == 2
    assert "op" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "eval", "1/0*x")
    assert code == 2
    assert "parse error" in err


def test_bad_field_exit_code(capsys):
    code, _, err = run(capsys, "degree", "--field", "R box Z")
    assert code == 2
    assert "parse error" in err


def test_level_single(capsys):
    code, out, _ = run(capsys, "level", "3*x^2")
    assert code == 0
    assert out == "2\n"


def test_level_pair(capsys):
    code, out, _ = run(capsys, "level", "x", "5*x")
    assert (code, out) == (0, "equivalent\n")
    code, out, _ = run(capsys, "level", "x^2", "x")
    assert (code, out) == (0, "inequivalent\n")


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--field", "Q box lex(Z,Z)")
    assert code == 0
    assert out == "class0: Z\nclass1: Z\n"


def test_degree(capsys):
    code, out, _ = run(capsys, "degree", "--field", "Q box Z box Z box Z")
    assert code == 0
    assert out == "3\n"


def test_decompose_text(capsys):
    code, out, _ = run(capsys, "decompose", "--field", "Q box lex(Z,Z)")
    assert code == 0
    assert out == (
        "field: Q box lex(Z,Z)\n"
        "arch: Q\n"
        "degree: 2\n"
        "classes: class0 -> Z, class1 -> Z\n"
        "level_group: lex(Z,Z)\n"
    )


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "--output", "json",
                       "--field", "Q box lex(Z,Z)")
    assert code == 0
    assert json.loads(out) == {
        "arch": "Q",
        "degree": 2,
        "classes": [
            {"id": 0, "class_group": "Z"},
            {"id": 1, "class_group": "Z"},
        ],
        "level_group": "lex(Z,Z)",
    }


def test_flatten(capsys):
    code, out, _ = run(capsys, "flatten", "x^(1,0)+x^(0,1)",
                       "--field", "Q box lex(Z,Z)")
    assert code == 0
    assert out == "(1)*z + (y)\n"


def test_flatten_needs_pair_group(capsys):
    code, _, err = run(capsys, "flatten", "x")
    assert code == 1
    assert "error" in err


def test_beta_check_passes(capsys):
    code, out, _ = run(capsys, "beta-check", "--field", "Q box Q",
                       "--samples", "30", "--seed", "7")
    assert code == 0
    assert out == (
        "axiom 1: 30 samples, 0 failures\n"
        "axiom 2: 30 samples, 0 failures\n"
        "axiom 3: 30 samples, 0 failures\n"
    )


def test_beta_check_json_is_seed_stable(capsys):
    args = ("beta-check", "--output", "json", "--samples", "25", "--seed", "11")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_derive(capsys):
    code, out, _ = run(capsys, "derive", "x^3", "--at", "2")
    assert code == 0
    assert out == "12\n"


def test_derive_rational_point(capsys):
    # d/dx (x^2 + 3x) at 1/2 is 4
    code, out, _ = run(capsys, "derive", "x^2 + 3*x", "--at", "1/2")
    assert code == 0
    assert out == "4\n"


def test_derive_rejects_negative_exponents(capsys):
    code, _, err = run(capsys, "derive", "x^-1", "--at", "2")
    assert code == 1
    assert "polynomial" in err


def test_eval_round_trip_through_cli(capsys):
    expr = "5*x^2 - 1/3*x + O(x^-2)"
    code, out, _ = run(capsys, "eval", expr)
    assert code == 0
    code2, out2, _ = run(capsys, "eval", out.strip())
    assert code2 == 0
    assert out2 == out
