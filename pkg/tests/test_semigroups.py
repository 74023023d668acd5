import json
import random
from fractions import Fraction as F

import pytest

from ordsemi.semigroups import (
    AdditiveNaturals,
    AdditiveRationals,
    BrokenMaxNaturals,
    InstanceError,
    IntegersGroup,
    LexVectors,
    LexVectorsGroup,
    RationalsGroup,
    ShortlexWords,
    check_axioms,
    instance_from_descriptor,
)

RAT = AdditiveRationals()
NAT = AdditiveNaturals()
LEX = LexVectors(2)
SLX = ShortlexWords("ab")

ALL_INSTANCES = [RAT, NAT, LEX, SLX]


def reach_by_scan(inst, a, b, limit=100):
    """Independent oracle: least n <= limit with pow(a, n) >= b, else None."""
    for n in range(1, limit + 1):
        if inst.cmp(inst.pow(a, n), b) >= 0:
            return n
    return None


class TestMul:
    def test_rationals_addition(self):
        assert RAT.mul(F(1, 2), F(2, 3)) == F(7, 6)

    def test_shortlex_concatenation(self):
        assert SLX.mul("ab", "ba") == "abba"

    def test_unit_neutral_everywhere(self):
        for inst in ALL_INSTANCES:
            a = inst.sample_above_unit(random.Random(1))
            assert inst.mul(inst.unit, a) == a
            assert inst.mul(a, inst.unit) == a

    def test_mixing_rejected(self):
        with pytest.raises(InstanceError):
            RAT.mul(F(1, 2), 3)
        with pytest.raises(InstanceError):
            NAT.mul(2, F(1, 2))
        with pytest.raises(InstanceError):
            SLX.mul("ab", "cd")
        with pytest.raises(InstanceError):
            LEX.mul((1, 0), (1, 0, 0))


class TestCmp:
    def test_shortlex_length_first(self):
        assert SLX.cmp("b", "aa") == -1

    def test_lex_vectors(self):
        assert LEX.cmp((0, 5), (1, 0)) == -1

    def test_reflexive_equality(self):
        assert RAT.cmp(F(2, 3), F(2, 3)) == 0

    def test_sort_key_matches_cmp(self):
        rng = random.Random(7)
        for inst in ALL_INSTANCES:
            for _ in range(300):
                a, b = inst.sample(rng), inst.sample(rng)
                c = inst.cmp(a, b)
                ka, kb = inst.sort_key(a), inst.sort_key(b)
                assert c == (ka > kb) - (ka < kb)


class TestPow:
    def test_rationals(self):
        assert RAT.pow(F(1, 2), 4) == F(2)

    def test_shortlex(self):
        assert SLX.pow("ab", 2) == "abab"

    def test_unit_power(self):
        for inst in ALL_INSTANCES:
            assert inst.pow(inst.unit, 7) == inst.unit

    def test_zero_exponent_rejected(self):
        for inst in ALL_INSTANCES:
            with pytest.raises(ValueError):
                inst.pow(inst.unit, 0)

    def test_additivity_of_exponents(self):
        rng = random.Random(3)
        for inst in ALL_INSTANCES:
            for _ in range(50):
                a = inst.sample(rng)
                m, n = rng.randint(1, 6), rng.randint(1, 6)
                assert inst.pow(a, m + n) == inst.mul(inst.pow(a, m), inst.pow(a, n))


class TestReach:
    def test_rationals_closed_form(self):
        assert RAT.reach(F(1, 2), F(10)) == 20

    def test_lex_absent(self):
        # (0, n) < (1, 0) for every n: verified by scan, decided by closed form.
        assert LEX.reach((0, 1), (1, 0)) is None
        assert reach_by_scan(LEX, (0, 1), (1, 0), limit=200) is None

    def test_shortlex_scan(self):
        # "aa" < "bb" but "aaa" > "bb" in shortlex.
        assert SLX.reach("a", "bb") == 3
        assert reach_by_scan(SLX, "a", "bb") == 3

    def test_unit_conventions(self):
        for inst in ALL_INSTANCES:
            b = inst.sample_above_unit(random.Random(2))
            assert inst.reach(inst.unit, b) is None
            assert inst.reach(inst.unit, inst.unit) == 1

    def test_matches_scan_oracle(self):
        rng = random.Random(11)
        for inst in ALL_INSTANCES:
            for _ in range(200):
                a = inst.sample_above_unit(rng)
                b = inst.sample(rng)
                got = inst.reach(a, b)
                expected = reach_by_scan(inst, a, b, limit=60)
                if expected is not None:
                    assert got == expected
                else:
                    assert got is None or got > 60

    def test_minimality(self):
        rng = random.Random(13)
        for inst in ALL_INSTANCES:
            for _ in range(200):
                a = inst.sample_above_unit(rng)
                b = inst.sample(rng)
                n = inst.reach(a, b)
                if n is None:
                    continue
                assert inst.cmp(inst.pow(a, n), b) >= 0
                if n > 1:
                    assert inst.cmp(inst.pow(a, n - 1), b) < 0


class TestSerialization:
    def test_round_trips(self):
        cases = [
            (RAT, F(7, 6), "7/6"),
            (NAT, 12, "12"),
            (LEX, (0, 3), "(0,3)"),
            (SLX, "abba", "abba"),
        ]
        for inst, value, text in cases:
            assert inst.format(value) == text
            assert inst.parse(text) == value

    def test_descriptor_round_trip(self):
        for descriptor in [
            {"instance": "additive_rationals"},
            {"instance": "additive_naturals"},
            {"instance": "lex_vectors", "k": 3},
            {"instance": "shortlex", "alphabet": "abc"},
        ]:
            inst = instance_from_descriptor(json.dumps(descriptor))
            inst2 = instance_from_descriptor(descriptor)
            assert inst.name == inst2.name

    def test_bare_name(self):
        assert instance_from_descriptor("additive_naturals").name == "additive_naturals"

    def test_unknown_rejected(self):
        with pytest.raises(ValueError):
            instance_from_descriptor({"instance": "octonions"})


class TestGroups:
    def test_negation(self):
        G = RationalsGroup()
        assert G.neg(F(1, 2)) == F(-1, 2)
        assert G.sub(F(1, 2), F(2)) == F(-3, 2)
        assert G.mul(F(1, 2), G.neg(F(1, 2))) == G.unit

    def test_group_extensions(self):
        assert isinstance(RAT.group_extension(), RationalsGroup)
        assert isinstance(NAT.group_extension(), IntegersGroup)
        assert isinstance(LEX.group_extension(), LexVectorsGroup)
        assert SLX.group_extension() is None

    def test_reversed_flips_comparisons(self):
        G = RationalsGroup()
        R = G.reversed()
        assert R.cmp(F(1), F(2)) == 1
        assert R.cmp(F(2), F(1)) == -1
        assert R.reversed() is G

    def test_reversed_reach(self):
        # In the dual order, -1/2 is "positive" and accumulates toward -10.
        R = RationalsGroup().reversed()
        assert R.reach(F(-1, 2), F(-10)) == 20
        assert reach_by_scan(R, F(-1, 2), F(-10)) == 20

    def test_reversed_sort_key_matches_cmp(self):
        rng = random.Random(5)
        for G in [RationalsGroup().reversed(), LexVectorsGroup(2).reversed()]:
            for _ in range(200):
                a, b = G.sample(rng), G.sample(rng)
                c = G.cmp(a, b)
                ka, kb = G.sort_key(a), G.sort_key(b)
                assert c == (ka > kb) - (ka < kb)

    def test_group_reach_matches_scan(self):
        rng = random.Random(17)
        for G in [RationalsGroup(), IntegersGroup(), LexVectorsGroup(2)]:
            for _ in range(300):
                a = G.sample_above_unit(rng)
                b = G.sample(rng)
                got = G.reach(a, b)
                expected = reach_by_scan(G, a, b, limit=60)
                if expected is not None:
                    assert got == expected
                else:
                    assert got is None or got > 60


class TestAxiomChecker:
    def test_rationals_pass(self):
        report = check_axioms(RAT, [F(0), F(1, 2), F(2, 3), F(5)], seed=0)
        assert report.all_passed, str(report)

    def test_shortlex_pass(self):
        rng = random.Random(4)
        words = [SLX.sample(rng) for _ in range(20)]
        report = check_axioms(SLX, words, seed=4)
        assert report.all_passed, str(report)

    def test_broken_instance_cancellation_fails(self):
        broken = BrokenMaxNaturals()
        report = check_axioms(broken, [0, 1, 2, 3], seed=0)
        failed = {c.name for c in report.failures()}
        assert "cancellation" in failed

    def test_broken_counterexample_replays(self):
        broken = BrokenMaxNaturals()
        report = check_axioms(broken, [0, 1, 2, 3], seed=0)
        (witness,) = [c.counterexample for c in report.failures() if c.name == "cancellation"]
        w = {k: broken.parse(v) for k, v in json.loads(witness).items()}
        assert w["a"] != w["b"]
        assert broken.mul(w["a"], w["c"]) == broken.mul(w["b"], w["c"]) or broken.mul(
            w["c"], w["a"]
        ) == broken.mul(w["c"], w["b"])

    def test_deterministic_per_seed(self):
        rng = random.Random(9)
        sample = [RAT.sample(rng) for _ in range(40)]
        r1 = check_axioms(RAT, sample, seed=123, trials=500)
        r2 = check_axioms(RAT, sample, seed=123, trials=500)
        assert r1 == r2

    def test_all_shipped_instances_pass(self):
        rng = random.Random(21)
        for inst in ALL_INSTANCES:
            sample = [inst.unit] + [inst.sample(rng) for _ in range(25)]
            report = check_axioms(inst, sample, seed=21, trials=4000)
            assert report.all_passed, str(report)
