"""Well-ordered subset presentations of a semigroup carrier.

Two presentations are supported, both well-ordered by construction: explicit
finite sorted sets, and strictly increasing (possibly unbounded) streams.
Stream queries carry an explicit pull budget so that every operation
terminates; running out of budget is a first-class signal, never a hang.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from ordsemi.semigroups import Element, InstanceError, SemigroupInstance


class PullBudgetExceeded(Exception):
    """A stream scan hit its pull budget before answering."""


class StreamOrderError(InstanceError):
    """A stream produced elements out of order, or a forbidden unit."""


class WoSet:
    """Common surface of the two presentations."""

    instance: SemigroupInstance
    excludes_unit: bool

    def min(self) -> Element:
        raise NotImplementedError

    def next_above(self, x: Element, max_pulls: Optional[int] = None) -> Optional[Element]:
        """Least element strictly above ``x``, or None when none is presented.

        ``max_pulls`` caps raw pulls from an underlying stream; exceeding it
        raises PullBudgetExceeded (distinct from None).
        """
        raise NotImplementedError

    def restart_iter(self) -> Iterator[Element]:
        """Iterate the presentation from its least element upward."""
        raise NotImplementedError

    @property
    def pulls_made(self) -> int:
        """Total raw pulls consumed from the underlying stream so far."""
        return 0


class FiniteSorted(WoSet):
    """Explicit finite presentation; strictly increasing, duplicate free."""

    def __init__(self, instance: SemigroupInstance, elements: tuple, excludes_unit: bool):
        self.instance = instance
        self.elements = elements
        self.excludes_unit = excludes_unit
        self._keys = [instance.sort_key(a) for a in elements]

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        shown = ", ".join(self.instance.format(a) for a in self.elements[:8])
        more = ", ..." if len(self.elements) > 8 else ""
        return f"FiniteSorted[{shown}{more}]"

    def min(self) -> Element:
        return self.elements[0]

    def next_above(self, x, max_pulls=None):
        i = bisect_right(self._keys, self.instance.sort_key(x))
        return self.elements[i] if i < len(self.elements) else None

    def restart_iter(self):
        return iter(self.elements)


class AscStream(WoSet):
    """Strictly increasing stream presentation, restartable from the start.

    The produced prefix is cached, so restarts replay without re-pulling and
    every pulled element is validated: strictly above its predecessor, and
    never the unit when the set is used as a generator set.
    """

    def __init__(
        self,
        instance: SemigroupInstance,
        factory: Callable[[], Iterator[Element]],
        excludes_unit: bool = True,
        name: str = "stream",
    ):
        self.instance = instance
        self.factory = factory
        self.excludes_unit = excludes_unit
        self.name = name
        self._cache: list = []
        self._keys: list = []
        self._iter: Optional[Iterator[Element]] = None
        self._exhausted = False
        self._pulls = 0

    def __repr__(self) -> str:
        return f"AscStream({self.name}, cached={len(self._cache)})"

    @property
    def pulls_made(self) -> int:
        return self._pulls

    def _pull(self) -> bool:
        if self._exhausted:
            return False
        if self._iter is None:
            self._iter = self.factory()
        try:
            x = next(self._iter)
        except StopIteration:
            self._exhausted = True
            return False
        self._pulls += 1
        x = self.instance.check(x)
        if self.excludes_unit and self.instance.cmp(x, self.instance.unit) == 0:
            raise StreamOrderError(f"{self.name}: stream produced the unit, but 1 is excluded")
        if self._cache and self.instance.cmp(x, self._cache[-1]) <= 0:
            raise StreamOrderError(
                f"{self.name}: stream not strictly increasing "
                f"({self.instance.format(x)} after {self.instance.format(self._cache[-1])})"
            )
        self._cache.append(x)
        self._keys.append(self.instance.sort_key(x))
        return True

    def min(self) -> Element:
        if not self._cache and not self._pull():
            raise ValueError(f"{self.name}: empty stream has no minimum")
        return self._cache[0]

    def next_above(self, x, max_pulls=None):
        key = self.instance.sort_key(self.instance.check(x))
        i = bisect_right(self._keys, key)
        if i < len(self._keys):
            return self._cache[i]
        pulled = 0
        while True:
            if max_pulls is not None and pulled >= max_pulls:
                raise PullBudgetExceeded(
                    f"{self.name}: no element above {self.instance.format(x)} "
                    f"within {max_pulls} pulls"
                )
            if not self._pull():
                return None
            pulled += 1
            if self._keys[-1] > key:
                return self._cache[-1]

    def restart_iter(self):
        i = 0
        while True:
            while i >= len(self._cache):
                if not self._pull():
                    return
            yield self._cache[i]
            i += 1


def make_finite(
    instance: SemigroupInstance,
    elements: Iterable[Element],
    excludes_unit: bool = True,
) -> FiniteSorted:
    """Sort, deduplicate, and validate an explicit generator set."""
    checked = [instance.check(a) for a in elements]
    if not checked:
        raise ValueError("a finite well-ordered set needs at least one element")
    if excludes_unit:
        for a in checked:
            if instance.cmp(a, instance.unit) == 0:
                raise InstanceError(
                    f"unit element {instance.format(a)} is not allowed in a generator set"
                )
    checked.sort(key=instance.sort_key)
    deduped = [checked[0]]
    for a in checked[1:]:
        if instance.cmp(a, deduped[-1]) != 0:
            deduped.append(a)
    return FiniteSorted(instance, tuple(deduped), excludes_unit)


def merge(a: WoSet, b: WoSet) -> WoSet:
    """Sorted deduplicated union; lazy when either side is a stream."""
    if a.instance.name != b.instance.name:
        raise InstanceError(f"cannot merge sets over {a.instance.name} and {b.instance.name}")
    inst = a.instance
    excludes = a.excludes_unit and b.excludes_unit
    if isinstance(a, FiniteSorted) and isinstance(b, FiniteSorted):
        return make_finite(inst, a.elements + b.elements, excludes)

    def factory():
        ita, itb = a.restart_iter(), b.restart_iter()
        x = next(ita, None)
        y = next(itb, None)
        while x is not None or y is not None:
            if y is None:
                yield x
                x = next(ita, None)
            elif x is None:
                yield y
                y = next(itb, None)
            else:
                c = inst.cmp(x, y)
                if c <= 0:
                    yield x
                    if c == 0:
                        y = next(itb, None)
                    x = next(ita, None)
                else:
                    yield y
                    y = next(itb, None)

    return AscStream(inst, factory, excludes_unit=excludes, name="merge")


# ---------------------------------------------------------------------------
# increasing subsequences (finite form of the well-ordering characterization)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndexSubsequence:
    """Strictly increasing 0-based positions into a source sequence."""

    indices: tuple[int, ...]


def extract_increasing_subsequence(
    instance: SemigroupInstance, xs: Sequence[Element]
) -> IndexSubsequence:
    """Greedy nondecreasing subsequence: repeatedly take the smallest
    remaining value with the smallest index among positions after the last pick.
    """
    if not xs:
        raise ValueError("sequence must be nonempty")
    keys = [instance.sort_key(instance.check(x)) for x in xs]
    picks = []
    start = 0
    while start < len(keys):
        best = min(range(start, len(keys)), key=lambda i: (keys[i], i))
        picks.append(best)
        start = best + 1
    return IndexSubsequence(tuple(picks))


# ---------------------------------------------------------------------------
# JSON descriptors
# ---------------------------------------------------------------------------


def _stream_n_over_n_plus_1(instance, params):
    def gen():
        n = 1
        while True:
            yield Fraction(n, n + 1)
            n += 1

    return AscStream(instance, gen, name="n_over_n_plus_1")


def _stream_geometric(instance, params):
    scale = Fraction(str(params.get("scale", "1/2")))
    ratio = Fraction(str(params.get("ratio", "3/2")))
    if scale <= 0 or ratio <= 1:
        raise ValueError("geometric stream needs scale > 0 and ratio > 1")

    def gen():
        value = scale
        while True:
            yield value
            value *= ratio

    return AscStream(instance, gen, name=f"geometric({scale},{ratio})")


STREAM_FAMILIES: dict[str, Callable] = {
    "n_over_n_plus_1": _stream_n_over_n_plus_1,
    "geometric": _stream_geometric,
}


def woset_from_descriptor(instance: SemigroupInstance, descriptor: dict) -> WoSet:
    """Build a generator set from its JSON descriptor.

    {"kind": "finite", "elements": ["1/2", "2/3"]} or
    {"kind": "stream", "family": "n_over_n_plus_1", "params": {}}.
    """
    kind = descriptor.get("kind")
    excludes = bool(descriptor.get("excludes_unit", True))
    if kind == "finite":
        elements = [instance.parse(text) for text in descriptor["elements"]]
        return make_finite(instance, elements, excludes_unit=excludes)
    if kind == "stream":
        family = descriptor.get("family")
        if family not in STREAM_FAMILIES:
            raise ValueError(f"unknown stream family: {family!r}")
        return STREAM_FAMILIES[family](instance, descriptor.get("params", {}))
    raise ValueError(f"unknown generator-set kind: {kind!r}")
