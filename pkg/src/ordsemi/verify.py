"""Lemma verification suites: oracle comparisons packaged as reports.

Each suite run pits the ascending enumerator and the fiber search against
the exhaustive brute-force oracles on a certified region, re-checks the
instance axioms, the max-factor class remark, and the greedy subsequence
contract, and returns a deterministic report.  Failures are report entries
with replayable counterexamples, never crashes.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from typing import Optional

from ordsemi.archimedean import max_factor, same_class
from ordsemi.oracle import brute_force_fiber, brute_force_products, string_count
from ordsemi.products import (
    Budget,
    Enumeration,
    eval_string,
    fiber,
    k_smallest_products,
    length_bound,
)
from ordsemi.semigroups import Element, SemigroupInstance, check_axioms
from ordsemi.wosets import FiniteSorted, WoSet, extract_increasing_subsequence


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: Optional[str] = None
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    instance: str
    generators: str
    params: dict
    seed: int
    checks: tuple[CheckResult, ...]
    elapsed_s: float

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def fingerprint(self) -> dict:
        """Everything except wall-clock time; identical runs match exactly."""
        return {
            "instance": self.instance,
            "generators": self.generators,
            "params": self.params,
            "seed": self.seed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "counterexample": c.counterexample,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }

    def to_dict(self) -> dict:
        out = self.fingerprint()
        out["elapsed_s"] = self.elapsed_s
        out["all_passed"] = self.all_passed
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"verification report  instance={self.instance}  generators={self.generators}",
            f"params={self.params}  seed={self.seed}",
        ]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.name}"
            if c.detail:
                line += f"  ({c.detail})"
            if c.counterexample:
                line += f"  counterexample: {c.counterexample}"
            lines.append(line)
        failed = len(self.failures())
        verdict = "all checks passed" if failed == 0 else f"{failed} of {len(self.checks)} checks FAILED"
        lines.append(f"{verdict} in {self.elapsed_s:.2f}s")
        return "\n".join(lines)


def _format_string(instance: SemigroupInstance, factors) -> list[str]:
    return [instance.format(x) for x in factors]


def check_strict_ascent(instance: SemigroupInstance, pairs) -> CheckResult:
    """Consecutive emitted values must strictly increase; duplicates are a bug."""
    for (v1, w1), (v2, w2) in zip(pairs, pairs[1:]):
        if instance.cmp(v1, v2) >= 0:
            ce = json.dumps(
                {
                    "value": instance.format(v1),
                    "next_value": instance.format(v2),
                    "witness": _format_string(instance, w1),
                    "next_witness": _format_string(instance, w2),
                },
                sort_keys=True,
            )
            return CheckResult("enumeration_strict_ascent", False, ce)
    return CheckResult("enumeration_strict_ascent", True, detail=f"{len(pairs)} values")


def check_witness_soundness(instance: SemigroupInstance, pairs) -> CheckResult:
    for value, witness in pairs:
        if instance.cmp(eval_string(instance, witness), value) != 0:
            ce = json.dumps(
                {"value": instance.format(value), "witness": _format_string(instance, witness)},
                sort_keys=True,
            )
            return CheckResult("enumeration_witness_sound", False, ce)
    return CheckResult("enumeration_witness_sound", True, detail=f"{len(pairs)} witnesses")


def certified_region(A: FiniteSorted, max_len: int, size_cap: int = 10**6):
    """Brute-force values up to the largest target certified by length_bound.

    Returns (max_len actually used, t_max, the expected ascending value list).
    Every string with product <= t_max has length <= max_len, so on this
    region the oracle list is complete and comparable.
    """
    inst = A.instance
    while max_len > 1 and string_count(len(A.elements), max_len) > size_cap:
        max_len -= 1
    brute = brute_force_products(A, max_len, size_cap)
    certified = [
        v for v in brute if (lb := length_bound(A, v)) is not None and lb <= max_len
    ]
    t_max = certified[-1]
    expected = [v for v in brute if inst.cmp(v, t_max) <= 0]
    return max_len, t_max, expected


def _run_guarded(name: str, fn) -> list[CheckResult]:
    try:
        results = fn()
        return results if isinstance(results, list) else [results]
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        return [CheckResult(name, False, counterexample=f"{type(exc).__name__}: {exc}")]


def _sample_pool(instance: SemigroupInstance, gens: WoSet, rng: random.Random) -> list[Element]:
    base = list(itertools.islice(gens.restart_iter(), 6))
    pool = [instance.unit] + base
    pool += [instance.sample(rng) for _ in range(12)]
    pool += [instance.mul(rng.choice(base), rng.choice(base)) for _ in range(6)]
    return pool


def _check_oracle_equivalence(A: FiniteSorted, max_len: int, size_cap: int) -> list[CheckResult]:
    inst = A.instance
    max_len, t_max, expected = certified_region(A, max_len, size_cap)
    enum = k_smallest_products(A, len(expected))
    results = []
    if enum.truncated or [inst.sort_key(v) for v in enum.values] != [
        inst.sort_key(v) for v in expected
    ]:
        ce = json.dumps(
            {
                "expected": [inst.format(v) for v in expected],
                "got": [inst.format(v) for v in enum.values],
                "truncated": enum.truncated,
            },
            sort_keys=True,
        )
        results.append(CheckResult("enumeration_matches_oracle", False, ce))
    else:
        results.append(
            CheckResult(
                "enumeration_matches_oracle",
                True,
                detail=f"{len(expected)} values up to {inst.format(t_max)} (L={max_len})",
            )
        )

    fiber_fail = None
    empty_fail = None
    total_witnesses = 0
    for t in expected:
        got = list(fiber(A, t).witnesses)
        want = brute_force_fiber(A, max_len, t, size_cap)
        total_witnesses += len(want)
        if got != want and fiber_fail is None:
            fiber_fail = json.dumps(
                {
                    "target": inst.format(t),
                    "expected": [_format_string(inst, w) for w in want],
                    "got": [_format_string(inst, w) for w in got],
                },
                sort_keys=True,
            )
        if not got and empty_fail is None:
            empty_fail = json.dumps({"target": inst.format(t)}, sort_keys=True)
    results.append(
        CheckResult(
            "fibers_match_oracle",
            fiber_fail is None,
            fiber_fail,
            detail=f"{total_witnesses} witnesses over {len(expected)} targets",
        )
    )
    results.append(CheckResult("fibers_nonempty", empty_fail is None, empty_fail))
    return results


def _check_max_factor(
    instance: SemigroupInstance, gens: WoSet, rng: random.Random, trials: int
) -> list[CheckResult]:
    base = list(itertools.islice(gens.restart_iter(), 6))
    class_fail = None
    bound_fail = None
    for _ in range(trials):
        s = tuple(rng.choice(base) for _ in range(rng.randint(1, 6)))
        p = eval_string(instance, s)
        c = max_factor(instance, s)
        witness = json.dumps(
            {"string": _format_string(instance, s), "product": instance.format(p)},
            sort_keys=True,
        )
        if not same_class(instance, p, c) and class_fail is None:
            class_fail = witness
        in_bounds = (
            instance.cmp(c, p) <= 0 and instance.cmp(p, instance.pow(c, len(s))) <= 0
        )
        if not in_bounds and bound_fail is None:
            bound_fail = witness
    return [
        CheckResult("max_factor_class", class_fail is None, class_fail, detail=f"{trials} strings"),
        CheckResult("max_factor_bounds", bound_fail is None, bound_fail),
    ]


def _check_greedy_extractor(
    instance: SemigroupInstance, rng: random.Random, trials: int
) -> CheckResult:
    for _ in range(trials):
        xs = [instance.sample(rng) for _ in range(rng.randint(1, 12))]
        out = extract_increasing_subsequence(instance, xs)
        idx = out.indices
        witness = json.dumps(
            {"sequence": _format_string(instance, xs), "indices": list(idx)}, sort_keys=True
        )
        if not idx or any(i >= j for i, j in zip(idx, idx[1:])):
            return CheckResult("greedy_extractor", False, witness)
        values = [xs[i] for i in idx]
        if any(instance.cmp(u, v) > 0 for u, v in zip(values, values[1:])):
            return CheckResult("greedy_extractor", False, witness)
        keys = [instance.sort_key(x) for x in xs]
        if keys == sorted(keys) and idx != tuple(range(len(xs))):
            return CheckResult("greedy_extractor", False, witness)
        if len(set(keys)) == len(keys) and keys == sorted(keys, reverse=True) and len(keys) > 1:
            if idx != (len(xs) - 1,):
                return CheckResult("greedy_extractor", False, witness)
    return CheckResult("greedy_extractor", True, detail=f"{trials} sequences")


def verify_lemma_suite(
    instance: SemigroupInstance,
    gens: WoSet,
    k: int = 25,
    max_len: int = 5,
    trials: int = 2000,
    seed: int = 0,
    size_cap: int = 10**6,
    generators_label: str = "",
) -> VerificationReport:
    """Run every check against one instance and generator set; deterministic per seed."""
    start = time.perf_counter()
    rng = random.Random(seed)
    checks: list[CheckResult] = []

    def axioms():
        pool = _sample_pool(instance, gens, rng)
        report = check_axioms(instance, pool, seed=seed, trials=trials)
        return [
            CheckResult(f"axiom:{c.name}", c.passed, c.counterexample) for c in report.checks
        ]

    checks += _run_guarded("axiom:suite", axioms)

    if isinstance(gens, FiniteSorted):
        checks += _run_guarded(
            "enumeration_matches_oracle",
            lambda: _check_oracle_equivalence(gens, max_len, size_cap),
        )

    def ascent():
        enum = k_smallest_products(gens, k, Budget())
        return [
            check_strict_ascent(instance, enum.pairs),
            check_witness_soundness(instance, enum.pairs),
        ]

    checks += _run_guarded("enumeration_strict_ascent", ascent)
    checks += _run_guarded(
        "max_factor_class", lambda: _check_max_factor(instance, gens, rng, max(1, trials // 4))
    )
    checks += _run_guarded(
        "greedy_extractor", lambda: _check_greedy_extractor(instance, rng, max(1, trials // 4))
    )

    checks.sort(key=lambda c: c.name)
    return VerificationReport(
        instance=instance.name,
        generators=generators_label,
        params={"k": k, "max_len": max_len, "trials": trials},
        seed=seed,
        checks=tuple(checks),
        elapsed_s=time.perf_counter() - start,
    )
