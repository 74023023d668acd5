"""Archimedean equivalence, class handles, and the total order on classes.

Two elements above the unit are equivalent when each reaches the other by
repetition; the unit forms its own distinguished minimum class.  Classes are
never materialized (they are generally infinite intervals): a handle wraps a
representative and compares through the instance's reach closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from typing import Sequence

from ordsemi.semigroups import Element, SemigroupInstance


def same_class(instance: SemigroupInstance, a: Element, b: Element) -> bool:
    """True iff some power of each element dominates the other.

    The unit is equivalent only to itself.
    """
    a_unit = instance.cmp(a, instance.unit) == 0
    b_unit = instance.cmp(b, instance.unit) == 0
    if a_unit or b_unit:
        return a_unit and b_unit
    return instance.reach(a, b) is not None and instance.reach(b, a) is not None


def class_cmp(instance: SemigroupInstance, a: Element, b: Element) -> int:
    """Three-way comparison of Archimedean classes: -1, 0, or 1.

    The class of ``a`` is below the class of ``b`` exactly when no power of
    ``a`` reaches ``b``.
    """
    a_unit = instance.cmp(a, instance.unit) == 0
    b_unit = instance.cmp(b, instance.unit) == 0
    if a_unit or b_unit:
        return (not a_unit) - (not b_unit)
    if instance.reach(a, b) is None:
        return -1
    if instance.reach(b, a) is None:
        return 1
    return 0


def max_factor(instance: SemigroupInstance, factors: Sequence[Element]) -> Element:
    """The largest factor of a string; determines the class of the product."""
    if not factors:
        raise ValueError("a string has at least one factor")
    return instance.max_of(factors)


@total_ordering
@dataclass(frozen=True, eq=False)
class ArchClassHandle:
    """Handle for the Archimedean class of ``representative``.

    Handles compare equal exactly when their representatives are equivalent,
    so distinct handles may be equal; they are deliberately unhashable.
    """

    instance: SemigroupInstance = field(repr=False)
    representative: Element

    def __eq__(self, other):
        if not isinstance(other, ArchClassHandle):
            return NotImplemented
        return class_cmp(self.instance, self.representative, other.representative) == 0

    def __lt__(self, other):
        if not isinstance(other, ArchClassHandle):
            return NotImplemented
        return class_cmp(self.instance, self.representative, other.representative) < 0

    __hash__ = None


def class_of(instance: SemigroupInstance, a: Element) -> ArchClassHandle:
    return ArchClassHandle(instance, instance.check(a))
