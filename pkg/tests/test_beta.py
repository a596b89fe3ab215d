"""Order balls, swing sequences, level sets, and partial-sum convergence."""

from fractions import Fraction

import pytest

import boxfield as bf

def S(text, group=bf.Z):
    return bf.parse_series(text, group)


ZERO = bf.zero(bf.Z)
ONE = bf.one(bf.Z)
INF_SMALL = S("x^-1")  # negative exponents are the infinitesimals


# ---------------------------------------------------------------------------
# balls


def test_infinitesimal_in_unit_ball():
    assert bf.ball_member(ZERO, ONE, INF_SMALL)


def test_one_escapes_infinitesimal_ball():
    assert not bf.ball_member(ZERO, INF_SMALL, ONE)


def test_center_in_own_ball():
    for r in (ONE, INF_SMALL, S("3*x^2 + x")):
        assert bf.ball_member(S("x + 5"), r, S("x + 5"))


def test_ball_requires_positive_radius():
    with pytest.raises(bf.NonPositiveInput):
        bf.ball_member(ZERO, S("-1"), ZERO)


def test_ball_membership_indeterminate():
    fuzzy = bf.make_series(bf.Z, [], bf.element(bf.Z, -1))
    with pytest.raises(bf.IndeterminateComparison):
        bf.ball_member(ZERO, ONE, fuzzy)


def test_ball_spec_validates_radius():
    with pytest.raises(bf.NonPositiveInput):
        bf.BallSpec(ZERO, S("-2"))


# ---------------------------------------------------------------------------
# swing values and sequences


def test_swing_value_halves():
    assert bf.swing_value(ONE) == S("1/2")
    assert bf.swing_value(INF_SMALL) == S("1/2*x^-1")


def test_swing_property_sweep(rng):
    from boxfield.sampling import random_positive_series, random_series

    offsets = (Fraction(0), Fraction(1, 2), Fraction(-3, 4))
    for _ in range(50):
        x = random_series(rng, bf.Q, max_terms=3)
        r = random_positive_series(rng, bf.Q, max_terms=2)
        half = bf.swing_value(r)
        for qy in offsets:
            y = bf.series_add(x, bf.series_scale(half, qy))
            assert bf.ball_member(x, half, y)
            for qw in offsets:
                w = bf.series_add(x, bf.series_scale(half, qw))
                assert bf.ball_member(y, r, w)


def test_swing_sequence_halving_chain():
    seq = bf.swing_sequence(ONE, 3)
    assert seq.radii == (S("1"), S("1/2"), S("1/4"))
    seq = bf.swing_sequence(S("2*x^-1"), 2)
    assert seq.radii == (S("2*x^-1"), S("x^-1"))
    assert bf.swing_sequence(ONE, 1).radii == (ONE,)


def test_swing_sequence_rejects_bad_args():
    with pytest.raises(bf.NonPositiveInput):
        bf.swing_sequence(S("-1"), 3)
    with pytest.raises(bf.NonPositiveInput):
        bf.swing_sequence(ONE, 0)


# ---------------------------------------------------------------------------
# level sets


def test_level_set_admits_lower_level():
    assert bf.level_set_member(ZERO, ONE, INF_SMALL)


def test_level_set_rejects_same_level():
    # 1/2 has the same growth class as 1: halving eventually excludes it
    assert not bf.level_set_member(ZERO, ONE, S("1/2"))
    assert not bf.swing_sweep_member(ZERO, ONE, S("1/2"), depth=20)


def test_level_set_contains_center():
    x = S("x + 3")
    assert bf.level_set_member(x, ONE, x)


def test_level_set_matches_swing_sweep(rng):
    from boxfield.sampling import random_positive_series, random_series

    for group in (bf.Z, bf.Q):
        for _ in range(150):
            x = random_series(rng, group, max_terms=3)
            r = random_positive_series(rng, group, max_terms=2)
            y = random_series(rng, group, max_terms=3)
            assert bf.level_set_member(x, r, y, depth=20) == \
                bf.swing_sweep_member(x, r, y, depth=20)


def test_level_set_equiv_examples(rng):
    from boxfield.sampling import random_series

    samples = [random_series(rng, bf.Z, max_terms=3) for _ in range(100)]
    assert bf.level_set_equiv(S("1"), S("3"), samples)
    assert not bf.level_set_equiv(S("1"), S("x"), samples + [S("1/2")])
    assert bf.level_set_equiv(S("5*x"), S("5*x"), samples)


def test_level_set_equiv_matches_level_equiv(rng):
    from boxfield.sampling import random_positive_series, random_series

    samples = [random_series(rng, bf.Q, max_terms=3) for _ in range(40)]
    for _ in range(50):
        a = random_positive_series(rng, bf.Q, max_terms=2)
        b = random_positive_series(rng, bf.Q, max_terms=2)
        # the radii themselves are distinguishing witnesses when levels differ
        assert bf.level_set_equiv(a, b, samples + [a, b]) == bf.level_equiv(a, b)


# ---------------------------------------------------------------------------
# axiom sweeps


def test_axioms_pass_on_generated_corpus(rng):
    from boxfield.sampling import beta_corpus

    corpus = beta_corpus(rng, bf.Q, 60)
    reports = bf.beta_axioms_check(corpus)
    assert [r.axiom for r in reports] == [1, 2, 3]
    for r in reports:
        assert r.samples_run == 60
        assert r.ok, r.failures[0]


def test_axioms_reject_nonpositive_radius():
    corpus = [(ZERO, S("-1"), ZERO, ONE, ZERO)]
    with pytest.raises(bf.NonPositiveInput):
        bf.beta_axioms_check(corpus)


def test_axioms_report_broken_inner_radius_rule(rng):
    from boxfield.sampling import beta_corpus

    corpus = beta_corpus(rng, bf.Q, 40)
    oversized = lambda x, r, y, s, z: bf.series_add(r, s)  # noqa: E731
    reports = bf.beta_axioms_check(corpus, pick_radius=oversized)
    assert reports[0].ok and reports[2].ok
    assert not reports[1].ok
    assert any("escapes" in f.reason for f in reports[1].failures)


def test_axiom_report_json_shape(rng):
    from boxfield.sampling import beta_corpus

    reports = bf.beta_axioms_check(beta_corpus(rng, bf.Z, 5))
    payload = bf.axiom_report_to_json(reports[0])
    assert payload == {"axiom": 1, "samples_run": 5, "failures": []}


# ---------------------------------------------------------------------------
# partial sums


def test_partial_sum_tail_levels():
    s = S("x^2 + 1 + x^-1")
    report = bf.partial_sum_cauchy_check(s, [1, 2])
    assert report.passed
    assert report.levels_strictly_decreasing
    first, second = report.tails
    assert first.prefix == 1
    assert first.tail_exponent == bf.element(bf.Z, 0)
    assert second.prefix == 2
    assert second.tail_exponent == bf.element(bf.Z, -1)


def test_partial_sum_full_prefix_gives_zero_tail():
    s = S("x^2 + 1 + x^-1")
    report = bf.partial_sum_cauchy_check(s, [3])
    assert report.passed
    assert report.tails[0].tail_exponent is None


def test_partial_sum_geometric_tails_strictly_decrease():
    s = S("1 + x^-1 + x^-2 + x^-3 + x^-4 + x^-5")
    report = bf.partial_sum_cauchy_check(s, [1, 2, 3, 4, 5])
    assert report.passed
    exps = [t.tail_exponent.value for t in report.tails]
    assert exps == [-1, -2, -3, -4, -5]


def test_partial_sum_requires_exact():
    s = bf.make_series(bf.Z, S("x + 1").terms, bf.element(bf.Z, -1))
    with pytest.raises(bf.NotExact):
        bf.partial_sum_cauchy_check(s, [1])


def test_partial_sum_needs_two_terms():
    with pytest.raises(ValueError):
        bf.partial_sum_cauchy_check(S("x"), [1])


def test_cauchy_report_json_shape():
    report = bf.partial_sum_cauchy_check(S("x^2 + 1 + x^-1"), [1, 2])
    payload = bf.cauchy_report_to_json(report)
    assert payload["passed"] is True
    assert payload["levels_strictly_decreasing"] is True
    assert payload["tails"][0] == {
        "prefix": 1, "tail_exponent": "0", "radii_checked": 1, "ok": True}
