import json
import random

import pytest

import ordsemi.verify as verify_mod
from ordsemi.oracle import SizeCapExceeded, brute_force_fiber, brute_force_products, iter_strings, string_count
from ordsemi.products import Enumeration, eval_string, k_smallest_products
from ordsemi.semigroups import AdditiveNaturals, BrokenMaxNaturals, ShortlexWords
from ordsemi.verify import check_strict_ascent, verify_lemma_suite
from ordsemi.wosets import make_finite

NAT = AdditiveNaturals()
SLX = ShortlexWords("ab")


class TestBruteForceOracles:
    def test_products_two_generators(self):
        A = make_finite(NAT, [2, 3])
        assert brute_force_products(A, 3) == [2, 3, 4, 5, 6, 7, 8, 9]

    def test_products_single_generator_shortlex(self):
        A = make_finite(SLX, ["a"])
        assert brute_force_products(A, 2) == ["a", "aa"]

    def test_products_length_one_is_the_generators(self):
        A = make_finite(NAT, [2, 5, 9])
        assert brute_force_products(A, 1) == [2, 5, 9]

    def test_fiber_examples(self):
        A = make_finite(NAT, [2, 3])
        assert brute_force_fiber(A, 3, 7) == [(2, 2, 3), (2, 3, 2), (3, 2, 2)]
        assert brute_force_fiber(A, 3, 6) == [(2, 2, 2), (3, 3)]
        assert brute_force_fiber(A, 3, 1) == []

    def test_size_cap_refusal(self):
        A = make_finite(NAT, [2, 3, 4, 5])
        with pytest.raises(SizeCapExceeded):
            brute_force_products(A, 12, size_cap=1000)

    def test_fiber_sizes_partition_the_string_count(self):
        A = make_finite(NAT, [2, 3, 5])
        L = 4
        values = brute_force_products(A, L)
        total = sum(len(brute_force_fiber(A, L, t)) for t in values)
        assert total == string_count(3, L) == sum(1 for _ in iter_strings(A, L))


class TestVerifySuite:
    def test_naturals_all_pass(self):
        report = verify_lemma_suite(
            NAT, make_finite(NAT, [2, 3]), k=20, max_len=6, trials=800, seed=0
        )
        assert report.all_passed, report.to_text()

    def test_shortlex_all_pass(self):
        report = verify_lemma_suite(
            SLX, make_finite(SLX, ["a", "b"]), k=15, max_len=4, trials=800, seed=1
        )
        assert report.all_passed, report.to_text()

    def test_deterministic_fingerprint(self):
        A = make_finite(NAT, [2, 5])
        r1 = verify_lemma_suite(NAT, A, k=12, max_len=4, trials=400, seed=7)
        r2 = verify_lemma_suite(NAT, make_finite(NAT, [2, 5]), k=12, max_len=4, trials=400, seed=7)
        assert r1.fingerprint() == r2.fingerprint()

    def test_checks_sorted_by_name(self):
        report = verify_lemma_suite(NAT, make_finite(NAT, [2, 3]), k=8, max_len=3, trials=200)
        names = [c.name for c in report.checks]
        assert names == sorted(names)

    def test_broken_instance_fails_with_report_not_crash(self):
        broken = BrokenMaxNaturals()
        report = verify_lemma_suite(broken, make_finite(broken, [1, 2]), k=6, max_len=3, trials=300)
        assert not report.all_passed
        failed = {c.name for c in report.failures()}
        assert "axiom:cancellation" in failed

    def test_json_and_text_render(self):
        report = verify_lemma_suite(NAT, make_finite(NAT, [2, 3]), k=6, max_len=3, trials=200)
        parsed = json.loads(report.to_json())
        assert parsed["all_passed"] is True
        assert "PASS" in report.to_text()


class TestFaultInjection:
    def test_duplicate_emission_is_caught_directly(self):
        A = make_finite(NAT, [2, 3])
        real = k_smallest_products(A, 5)
        sabotaged = (real.pairs[0], real.pairs[0]) + real.pairs[1:]
        result = check_strict_ascent(NAT, sabotaged)
        assert not result.passed
        witness = json.loads(result.counterexample)
        assert witness["value"] == witness["next_value"] == "2"

    def test_sabotaged_enumerator_fails_the_suite(self, monkeypatch):
        def skip_dedup(A, k, budget=None, validate=True):
            real = k_smallest_products(A, k, budget)
            pairs = (real.pairs[0], real.pairs[0]) + real.pairs[1:]
            return Enumeration(pairs[:k], real.truncated)

        monkeypatch.setattr(verify_mod, "k_smallest_products", skip_dedup)
        report = verify_lemma_suite(NAT, make_finite(NAT, [2, 3]), k=6, max_len=3, trials=200)
        failed = {c.name for c in report.failures()}
        assert "enumeration_strict_ascent" in failed

    def test_counterexample_replays(self):
        A = make_finite(NAT, [2, 3])
        real = k_smallest_products(A, 5)
        sabotaged = (real.pairs[0], real.pairs[0]) + real.pairs[1:]
        result = check_strict_ascent(NAT, sabotaged)
        witness = json.loads(result.counterexample)
        first = tuple(NAT.parse(x) for x in witness["witness"])
        second = tuple(NAT.parse(x) for x in witness["next_witness"])
        assert eval_string(NAT, first) == NAT.parse(witness["value"])
        assert eval_string(NAT, second) == NAT.parse(witness["next_value"])
