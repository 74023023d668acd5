"""Strings over a generator set, ascending product enumeration, and fibers.

A string is a nonempty tuple of generators; its product is the left-to-right
fold of the semigroup operation.  Factor order matters: the semigroup need
not be commutative.

The ascending enumerator is a best-first search over a tree that contains
every string exactly once: the children of a string are (i) the string with
the least generator appended and (ii) the string with its last factor bumped
to the next generator.  Both moves strictly increase the product, so popping
a value-ordered frontier emits the product set in ascending order with no
value ever skipped, and merging equal-valued pops removes duplicates.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from ordsemi.semigroups import (
    Element,
    InstanceError,
    OrderedGroupInstance,
    SemigroupInstance,
)
from ordsemi.wosets import FiniteSorted, PullBudgetExceeded, WoSet, make_finite

ProductString = tuple  # nonempty tuple of Elements, all strictly above the unit


class UnboundedLengthError(ValueError):
    """No finite length bound exists and no cap was supplied."""


class UnsupportedPresentationError(ValueError):
    """The operation needs a finite presentation (or an explicit hook)."""


@dataclass
class Budget:
    """Work limits that make every enumeration terminate.

    ``max_pulls`` caps raw pulls from stream presentations; ``max_expansions``
    caps frontier pops.  Exhaustion never raises out of the engine: the
    result is returned with its ``truncated`` flag set.
    """

    max_pulls: int = 10_000
    max_expansions: int = 200_000
    pulls_used: int = 0
    expansions_used: int = 0

    @property
    def remaining_pulls(self) -> int:
        return max(0, self.max_pulls - self.pulls_used)


@dataclass(frozen=True)
class Enumeration:
    """Ascending distinct product values, each with its least witness string.

    ``truncated`` means a budget ran out: the listed values are genuine
    members of the product set, but completeness beyond the last pre-failure
    emission is not certified.
    """

    pairs: tuple[tuple[Element, ProductString], ...]
    truncated: bool

    @property
    def values(self) -> list[Element]:
        return [v for v, _ in self.pairs]

    @property
    def witnesses(self) -> list[ProductString]:
        return [w for _, w in self.pairs]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Fiber:
    """All string representatives of a target product, sorted by factors."""

    target: Element
    witnesses: tuple[ProductString, ...]

    @property
    def size(self) -> int:
        return len(self.witnesses)


def eval_string(instance: SemigroupInstance, factors: Sequence[Element]) -> Element:
    """Product of a string, folded left to right."""
    if not factors:
        raise ValueError("a string has at least one factor")
    value = instance.check(factors[0])
    for a in factors[1:]:
        value = instance.mul(value, a)
    return value


def length_bound(A: WoSet, t: Element) -> Optional[int]:
    """Greatest possible length of a string with product <= t, or None.

    Every factor is at least the least generator m, so a string of length q
    has product >= m^q; the bound is the last q with m^q <= t.  None signals
    that m never reaches t by repetition (non-archimedean gap), in which case
    string lengths below t are unbounded.
    """
    inst = A.instance
    m = A.min()
    if inst.cmp(m, inst.unit) <= 0:
        raise InstanceError("generator set must lie strictly above the unit")
    t = inst.check(t)
    n = inst.reach(m, t)
    if n is None:
        return None
    return n if inst.cmp(inst.pow(m, n), t) == 0 else n - 1


def _tracked_pulls(A: WoSet, budget: Budget, call: Callable):
    before = A.pulls_made
    try:
        return call()
    finally:
        budget.pulls_used += A.pulls_made - before


class ProductStream:
    """Stateful ascending enumeration of distinct products with witnesses.

    Single consumer; each pull returns the next strictly larger product value
    paired with its lexicographically least witness string.  The stream ends
    (StopIteration) when the frontier is exhausted under ``up_to`` pruning or
    a budget runs out; ``truncated`` tells the two endings apart.
    """

    def __init__(
        self,
        A: WoSet,
        budget: Optional[Budget] = None,
        up_to: Optional[Element] = None,
        validate: bool = True,
    ):
        self.A = A
        self.instance = A.instance
        self.budget = budget or Budget()
        self.validate = validate
        self.truncated = False
        inst = self.instance

        m = _tracked_pulls(A, self.budget, A.min)
        if inst.cmp(m, inst.unit) <= 0:
            raise InstanceError("generator set must lie strictly above the unit")
        self._min = m
        self._up_to = inst.check(up_to) if up_to is not None else None
        self._key = inst.sort_key
        self._last_vkey = None
        self._counter = 0
        # heap entries: (value key, factors key, tiebreak, value, factors, prefix product)
        self._heap: list = []
        if self._up_to is None or inst.cmp(m, self._up_to) <= 0:
            self._heap.append((self._key(m), (self._key(m),), 0, m, (m,), inst.unit))
            self._counter = 1

    def __iter__(self):
        return self

    def _push(self, value, factors, prefix, parent_value):
        inst = self.instance
        if self.validate and inst.cmp(value, parent_value) <= 0:
            raise RuntimeError(
                "monotonicity violation: child product does not exceed its parent "
                f"({inst.format(value)} vs {inst.format(parent_value)})"
            )
        if self._up_to is not None and inst.cmp(value, self._up_to) > 0:
            return
        heapq.heappush(
            self._heap,
            (self._key(value), tuple(self._key(f) for f in factors), self._counter, value, factors, prefix),
        )
        self._counter += 1

    def __next__(self) -> tuple[Element, ProductString]:
        inst = self.instance
        budget = self.budget
        while self._heap:
            if budget.expansions_used >= budget.max_expansions:
                self.truncated = True
                raise StopIteration
            budget.expansions_used += 1
            vkey, _, _, value, factors, prefix = heapq.heappop(self._heap)

            # child (i): append the least generator
            self._push(inst.mul(value, self._min), factors + (self._min,), value, value)

            # child (ii): bump the last factor to its successor in A
            try:
                nxt = _tracked_pulls(
                    self.A,
                    budget,
                    lambda: self.A.next_above(factors[-1], max_pulls=budget.remaining_pulls),
                )
            except PullBudgetExceeded:
                self.truncated = True
                nxt = None
            if nxt is not None:
                self._push(inst.mul(prefix, nxt), factors[:-1] + (nxt,), prefix, value)

            if self._last_vkey is None or vkey > self._last_vkey:
                self._last_vkey = vkey
                return value, factors
        raise StopIteration


def k_smallest_products(
    A: WoSet, k: int, budget: Optional[Budget] = None, validate: bool = True
) -> Enumeration:
    """The k smallest distinct products over A, ascending, with least witnesses."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    stream = ProductStream(A, budget, validate=validate)
    pairs = []
    for pair in stream:
        pairs.append(pair)
        if len(pairs) >= k:
            break
    return Enumeration(tuple(pairs), stream.truncated)


def products_up_to(
    A: WoSet, t: Element, budget: Optional[Budget] = None, validate: bool = True
) -> Enumeration:
    """All products <= t in ascending order, when they fit within budget.

    The result may be a flagged ascending prefix: over stream generator sets
    the region below t can be infinite.
    """
    stream = ProductStream(A, budget, up_to=t, validate=validate)
    return Enumeration(tuple(stream), stream.truncated)


def fiber(
    A: WoSet,
    t: Element,
    length_cap: Optional[int] = None,
    stream_candidates: Optional[Callable[[WoSet, Element], Sequence[Element]]] = None,
) -> Fiber:
    """Exactly the strings with product t, sorted lexicographically by factors.

    Finiteness is inherent: factors exceed the unit, so products strictly grow
    with length and depth is capped by ``length_bound`` (or by ``length_cap``
    when no finite bound exists).  Stream presentations need
    ``stream_candidates``, a hook naming the finitely many generators that can
    appear in a representative of t; no such bound is derivable from the
    presentation alone.
    """
    inst = A.instance
    t = inst.check(t)
    m = A.min()
    if inst.cmp(m, inst.unit) <= 0:
        raise InstanceError("generator set must lie strictly above the unit")
    if inst.cmp(t, m) < 0:
        return Fiber(t, ())

    if isinstance(A, FiniteSorted):
        candidates = [a for a in A.elements if inst.cmp(a, t) <= 0]
    elif stream_candidates is not None:
        pool = sorted((inst.check(a) for a in stream_candidates(A, t)), key=inst.sort_key)
        candidates = [a for i, a in enumerate(pool) if i == 0 or inst.cmp(a, pool[i - 1]) != 0]
        candidates = [a for a in candidates if inst.cmp(a, t) <= 0]
    else:
        raise UnsupportedPresentationError(
            "fiber over a stream presentation needs a stream_candidates hook"
        )

    depth = length_bound(A, t)
    if depth is None:
        if length_cap is None:
            raise UnboundedLengthError(
                "no finite length bound below the target; pass length_cap"
            )
        depth = length_cap

    found: list[ProductString] = []

    def extend(factors: ProductString, value: Element) -> None:
        if inst.cmp(value, t) == 0:
            found.append(factors)
            return  # any extension strictly exceeds t
        if len(factors) >= depth:
            return
        for a in candidates:
            v = inst.mul(value, a)
            if inst.cmp(v, t) <= 0:
                extend(factors + (a,), v)

    for a in candidates:
        extend((a,), a)

    found.sort(key=lambda fs: tuple(inst.sort_key(x) for x in fs))
    return Fiber(t, tuple(found))


def k_largest_sums(
    group: OrderedGroupInstance,
    elements: Sequence[Element],
    k: int,
    budget: Optional[Budget] = None,
) -> Enumeration:
    """Descending enumeration for generator sets well-ordered under >=.

    Runs the ascending engine on the order-dual group, so the generators must
    be strictly positive for the reversed relation, i.e. strictly below the
    unit in ``group``'s own order.  Emitted values descend in that order;
    negating generators and results recovers the ascending reading.
    """
    if not isinstance(group, OrderedGroupInstance):
        raise InstanceError("descending enumeration requires a group instance with negation")
    rev = group.reversed()
    A = make_finite(rev, elements, excludes_unit=True)
    return k_smallest_products(A, k, budget)
