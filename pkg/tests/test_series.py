import random
from fractions import Fraction as F

import pytest

from ordsemi.products import fiber
from ordsemi.semigroups import AdditiveRationals, InstanceError, IntegersGroup, RationalsGroup
from ordsemi.series import (
    HahnSeries,
    SeriesError,
    convolution_pairs,
    format_series,
    geometric_inverse,
    parse_series,
)
from ordsemi.wosets import make_finite

Q = RationalsGroup()
RAT = AdditiveRationals()


def S(text):
    return parse_series(text, Q)


def naive_convolve(a, b):
    """Independent oracle: plain dict convolution over Fractions."""
    out = {}
    for u, cu in a.items():
        for v, cv in b.items():
            out[u + v] = out.get(u + v, F(0)) + cu * cv
    return {k: v for k, v in out.items() if v != 0}


def naive_geometric_sum(g, bound, rounds):
    """Independent oracle: sum of powers of g, kept below the bound."""
    total = {F(0): F(1)}
    power = {F(0): F(1)}
    for _ in range(rounds):
        power = {k: v for k, v in naive_convolve(power, g).items() if k <= bound}
        for k, v in power.items():
            total[k] = total.get(k, F(0)) + v
    return {k: v for k, v in total.items() if v != 0}


def random_positive_series(rng, max_terms=5):
    # exponents on the grid [1/2, 6] so inverse supports stay desk-sized
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = F(rng.randint(1, 12), 2)
        terms[e] = F(rng.randint(-4, 4), rng.randint(1, 3))
    return HahnSeries.from_terms(Q, terms)


class TestConstruction:
    def test_like_terms_combine(self):
        f = HahnSeries.from_terms(Q, [(F(1, 2), 1), (F(1, 2), 1)])
        assert f.terms == ((F(1, 2), F(2)),)

    def test_zeros_dropped(self):
        f = HahnSeries.from_terms(Q, [(F(1), 1), (F(1), -1), (F(0), 3)])
        assert f.terms == ((F(0), F(3)),)

    def test_float_coefficient_rejected(self):
        with pytest.raises(SeriesError):
            HahnSeries.from_terms(Q, [(F(1), 0.5)])

    def test_truncation_drops_high_terms(self):
        f = HahnSeries.from_terms(Q, [(F(1), 1), (F(5), 1)], truncation=F(3))
        assert f.terms == ((F(1), F(1)),)
        assert f.truncation == F(3)


class TestAdd:
    def test_cancellation(self):
        assert S("1 + x") + S("2 - x") == S("3")

    def test_zero_identity(self):
        f = S("3 + 2*x^(1/2) - x^(7/6)")
        assert f + HahnSeries.zero(Q) == f

    def test_like_terms(self):
        f = S("x^(1/2)") + S("x^(1/2)")
        assert f == S("2*x^(1/2)")

    def test_truncations_meet_at_min(self):
        f = S("1 + x").truncate(F(2))
        g = S("x^3")
        assert (f + g).truncation == F(2)
        assert (f + g).terms == ((F(0), F(1)), (F(1), F(1)))

    def test_mixed_groups_rejected(self):
        with pytest.raises(InstanceError):
            S("x") + HahnSeries.monomial(IntegersGroup(), 1)


class TestMul:
    def test_telescoping_below_bound(self):
        got = S("1 - x").mul(S("1 + x + x^2 + x^3"), bound=F(3))
        assert got.terms == ((F(0), F(1)),)
        assert got.truncation == F(3)

    def test_telescoping_exact(self):
        assert S("1 - x") * S("1 + x + x^2 + x^3") == S("1 - x^4")

    def test_square_coefficient_counts_both_orders(self):
        f = S("x^(1/2) + x^(2/3)")
        assert (f * f).coefficient(F(7, 6)) == 2

    def test_annihilator(self):
        f = S("3 + 2*x^(1/2) - x^(7/6)")
        assert f * HahnSeries.zero(Q) == HahnSeries.zero(Q)

    def test_matches_naive_convolution(self):
        rng = random.Random(67)
        for _ in range(50):
            f, g = random_positive_series(rng), random_positive_series(rng)
            expected = naive_convolve(dict(f.terms), dict(g.terms))
            got = f * g
            assert {e: c for e, c in got.terms} == expected

    def test_truncation_propagates_past_known_coefficients(self):
        # f known only up to 2; multiplying by x shifts certainty up to 3.
        f = S("1 + x").truncate(F(2))
        got = f * S("x")
        assert got.truncation == F(3)
        got_low = f * S("1 + x^(-1)")
        assert got_low.truncation == F(1)

    def test_min_support_adds(self):
        rng = random.Random(71)
        for _ in range(30):
            f, g = random_positive_series(rng), random_positive_series(rng)
            if f.is_zero or g.is_zero:
                continue
            assert (f * g).min_exponent == f.min_exponent + g.min_exponent


class TestRingLaws:
    def test_exact_laws(self):
        rng = random.Random(73)
        for _ in range(40):
            f, g, h = (random_positive_series(rng) for _ in range(3))
            assert f * g == g * f
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == (f * g) + (f * h)

    def test_laws_below_bound(self):
        rng = random.Random(79)
        bound = F(3)
        for _ in range(40):
            f, g, h = (random_positive_series(rng) for _ in range(3))
            assert f.mul(g, bound) == g.mul(f, bound)
            assert f.mul(g, bound).mul(h, bound) == f.mul(g.mul(h, bound), bound)


class TestSupport:
    def test_two_terms(self):
        assert S("1 - x").support().elements == (F(0), F(1))

    def test_zero_series(self):
        assert HahnSeries.zero(Q).support().elements == ()

    def test_fractional_exponents(self):
        f = S("x^(1/2) + x^(2/3)")
        assert f.support().elements == (F(1, 2), F(2, 3))


class TestGeometricInverse:
    def test_geometric_identity(self):
        got = geometric_inverse(S("x"), F(3))
        assert got.terms == S("1 + x + x^2 + x^3").terms
        assert got.truncation == F(3)

    def test_two_term_series_against_oracle(self):
        g = S("x^(1/2) + x^(2/3)")
        got = geometric_inverse(g, F(4, 3))
        expected = naive_geometric_sum(dict(g.terms), F(4, 3), rounds=4)
        assert {e: c for e, c in got.terms} == expected
        assert got == S("1 + x^(1/2) + x^(2/3) + x + 2*x^(7/6) + x^(4/3)").truncate(F(4, 3))

    def test_zero_series(self):
        assert geometric_inverse(HahnSeries.zero(Q), F(3)) == HahnSeries.one(Q)

    def test_nonpositive_support_rejected(self):
        with pytest.raises(SeriesError):
            geometric_inverse(S("1 + x"), F(2))
        with pytest.raises(SeriesError):
            geometric_inverse(S("x^(-1)"), F(2))

    def test_truncated_input_rejected(self):
        with pytest.raises(SeriesError):
            geometric_inverse(S("x").truncate(F(1)), F(2))

    def test_inverse_law_on_random_series(self):
        rng = random.Random(83)
        checked = 0
        while checked < 40:
            g = random_positive_series(rng)
            if g.is_zero:
                continue
            checked += 1
            bound = F(rng.randint(1, 4))
            h = geometric_inverse(g, bound)
            product = (HahnSeries.one(Q) - g).mul(h, bound)
            assert product.terms == ((F(0), F(1)),)

    def test_oracle_agreement_on_random_series(self):
        rng = random.Random(89)
        for _ in range(25):
            g = random_positive_series(rng)
            if g.is_zero:
                continue
            bound = F(rng.randint(1, 3))
            rounds = Q.reach(g.min_exponent, bound) + 1
            expected = naive_geometric_sum(dict(g.terms), bound, rounds)
            got = geometric_inverse(g, bound)
            assert {e: c for e, c in got.terms} == expected


class TestConvolutionFibers:
    def test_pair_count_matches_two_factor_fiber(self):
        rng = random.Random(97)
        grid = [F(1), F(3, 2), F(2), F(5, 2), F(3)]
        for _ in range(30):
            support = sorted(rng.sample(grid, rng.randint(1, 4)))
            f = HahnSeries.from_terms(Q, {e: F(rng.randint(1, 3)) for e in support})
            A = make_finite(RAT, support)
            square = f * f
            for t, _ in square.terms:
                if t > 4:  # keep the fiber search tree small
                    continue
                pairs = convolution_pairs(f, f, t)
                two_factor = [w for w in fiber(A, t).witnesses if len(w) == 2]
                assert len(pairs) == len(two_factor)


class TestLiterals:
    def test_worked_literal(self):
        f = S("3 + 2*x^(1/2) - x^(7/6)")
        assert f.terms == ((F(0), F(3)), (F(1, 2), F(2)), (F(7, 6), F(-1)))

    def test_leading_minus_and_bare_x(self):
        assert S("-x + 1/2").terms == ((F(0), F(1, 2)), (F(1), F(-1)))

    def test_negative_exponent(self):
        assert S("x^(-1)").terms == ((F(-1), F(1)),)

    def test_zero_literal(self):
        assert S("0") == HahnSeries.zero(Q)

    def test_format_round_trip(self):
        rng = random.Random(101)
        for _ in range(60):
            f = random_positive_series(rng) + S(str(rng.randint(-3, 3)))
            assert parse_series(format_series(f), Q) == HahnSeries(Q, f.terms)

    def test_garbage_rejected(self):
        for bad in ["", "x^", "x2", "* x", "1 + + x"]:
            with pytest.raises((SeriesError, ValueError)):
                parse_series(bad, Q)
