"""Brute-force oracles over finite generator sets.

These enumerate every string up to a length exhaustively, with no pruning,
no priority queue, and no length-bound reasoning, so they stay independent
of the engine whose results they certify.
"""

from __future__ import annotations

from typing import Iterator, Optional

from ordsemi.semigroups import Element
from ordsemi.products import ProductString
from ordsemi.wosets import FiniteSorted, WoSet


class SizeCapExceeded(ValueError):
    """The exhaustive tuple space is larger than the configured cap."""


def string_count(n_generators: int, max_len: int) -> int:
    """Number of nonempty strings of length <= max_len over n generators."""
    return sum(n_generators**q for q in range(1, max_len + 1))


def _require_finite(A: WoSet) -> FiniteSorted:
    if not isinstance(A, FiniteSorted):
        raise ValueError("brute-force oracles need an explicit finite generator set")
    return A


def _check_cap(A: FiniteSorted, max_len: int, size_cap: int) -> None:
    if max_len < 1:
        raise ValueError(f"max_len must be >= 1, got {max_len}")
    total = string_count(len(A.elements), max_len)
    if total > size_cap:
        raise SizeCapExceeded(
            f"{total} strings of length <= {max_len} over {len(A.elements)} "
            f"generators exceeds the cap of {size_cap}"
        )


def iter_strings(A: FiniteSorted, max_len: int) -> Iterator[tuple[ProductString, Element]]:
    """Every string of length <= max_len with its product, in factor-lex order."""
    inst = A.instance

    def walk(factors, value):
        yield factors, value
        if len(factors) < max_len:
            for a in A.elements:
                yield from walk(factors + (a,), inst.mul(value, a))

    for a in A.elements:
        yield from walk((a,), a)


def brute_force_products(A: WoSet, max_len: int, size_cap: int = 10**6) -> list[Element]:
    """All distinct products of strings of length <= max_len, ascending."""
    A = _require_finite(A)
    _check_cap(A, max_len, size_cap)
    inst = A.instance
    seen = {}
    for _, value in iter_strings(A, max_len):
        seen.setdefault(inst.sort_key(value), value)
    return [seen[k] for k in sorted(seen)]


def brute_force_fiber(
    A: WoSet, max_len: int, t: Element, size_cap: int = 10**6
) -> list[ProductString]:
    """All strings of length <= max_len whose product is t, factor-lex sorted."""
    A = _require_finite(A)
    _check_cap(A, max_len, size_cap)
    inst = A.instance
    t = inst.check(t)
    hits = [factors for factors, value in iter_strings(A, max_len) if inst.cmp(value, t) == 0]
    hits.sort(key=lambda fs: tuple(inst.sort_key(x) for x in fs))
    return hits
