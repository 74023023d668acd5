"""Generalized power series with exponents in an ordered commutative group.

A series is a finite exact map from exponents to nonzero rational
coefficients, optionally truncated: ``truncation`` marks the exponent above
which coefficients are unknown.  Multiplication is a convolution; each output
coefficient is a finite sum because a target exponent has only finitely many
two-factor decompositions over the supports.  Truncation bounds propagate
through arithmetic so a result never claims coefficients it cannot know.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from ordsemi.semigroups import Element, InstanceError, OrderedGroupInstance, RationalsGroup
from ordsemi.wosets import FiniteSorted


class SeriesError(ValueError):
    """A series precondition failed."""


Coefficient = Union[Fraction, int, str]


def _as_coefficient(c: Coefficient) -> Fraction:
    if isinstance(c, float):
        raise SeriesError(f"float coefficient {c!r} rejected; use Fraction or a string")
    return Fraction(c)


@dataclass(frozen=True, eq=False)
class HahnSeries:
    group: OrderedGroupInstance = field(repr=False)
    terms: tuple[tuple[Element, Fraction], ...]
    truncation: Optional[Element] = None

    @staticmethod
    def from_terms(
        group: OrderedGroupInstance,
        terms: Union[Mapping[Element, Coefficient], Iterable[tuple[Element, Coefficient]]],
        truncation: Optional[Element] = None,
    ) -> "HahnSeries":
        """Normalize terms: combine like exponents, drop zeros, sort, truncate."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        by_key: dict = {}
        for exponent, coeff in items:
            exponent = group.check(exponent)
            key = group.sort_key(exponent)
            acc[key] = acc.get(key, Fraction(0)) + _as_coefficient(coeff)
            by_key[key] = exponent
        if truncation is not None:
            truncation = group.check(truncation)
            tkey = group.sort_key(truncation)
            acc = {k: c for k, c in acc.items() if k <= tkey}
        cleaned = tuple(
            (by_key[k], acc[k]) for k in sorted(acc) if acc[k] != 0
        )
        return HahnSeries(group, cleaned, truncation)

    @staticmethod
    def zero(group: OrderedGroupInstance) -> "HahnSeries":
        return HahnSeries(group, ())

    @staticmethod
    def one(group: OrderedGroupInstance) -> "HahnSeries":
        return HahnSeries(group, ((group.unit, Fraction(1)),))

    @staticmethod
    def monomial(
        group: OrderedGroupInstance, exponent: Element, coeff: Coefficient = 1
    ) -> "HahnSeries":
        return HahnSeries.from_terms(group, [(exponent, coeff)])

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exponent(self) -> Element:
        if not self.terms:
            raise SeriesError("the zero series has no least exponent")
        return self.terms[0][0]

    def coefficient(self, exponent: Element) -> Fraction:
        key = self.group.sort_key(self.group.check(exponent))
        for e, c in self.terms:
            if self.group.sort_key(e) == key:
                return c
        return Fraction(0)

    def support(self) -> FiniteSorted:
        """The exponent support as an explicit well-ordered set (may be empty)."""
        return FiniteSorted(self.group, tuple(e for e, _ in self.terms), excludes_unit=False)

    def truncate(self, bound: Element) -> "HahnSeries":
        bound = self.group.check(bound)
        if self.truncation is not None and self.group.cmp(self.truncation, bound) <= 0:
            bound = self.truncation
        return HahnSeries.from_terms(self.group, self.terms, truncation=bound)

    # -- ring operations -------------------------------------------------------

    def _require_same_group(self, other: "HahnSeries") -> None:
        if self.group.name != other.group.name:
            raise InstanceError(
                f"cannot combine series over {self.group.name} and {other.group.name}"
            )

    def add(self, other: "HahnSeries") -> "HahnSeries":
        self._require_same_group(other)
        truncation = _min_bound(self.group, [self.truncation, other.truncation])
        return HahnSeries.from_terms(
            self.group, list(self.terms) + list(other.terms), truncation=truncation
        )

    def neg(self) -> "HahnSeries":
        return HahnSeries(self.group, tuple((e, -c) for e, c in self.terms), self.truncation)

    def sub(self, other: "HahnSeries") -> "HahnSeries":
        return self.add(other.neg())

    def mul(self, other: "HahnSeries", bound: Optional[Element] = None) -> "HahnSeries":
        """Convolution product, truncated at ``bound`` when one is supplied.

        Truncations propagate: an output exponent is kept only when no
        unknown term of either operand could have contributed to it.
        """
        self._require_same_group(other)
        group = self.group
        if self.is_zero and self.truncation is None:
            return HahnSeries.zero(group)
        if other.is_zero and other.truncation is None:
            return HahnSeries.zero(group)

        limits = [group.check(bound)] if bound is not None else []
        for known, trunc in ((other, self.truncation), (self, other.truncation)):
            if trunc is not None:
                floor = known.min_exponent if known.terms else known.truncation
                limits.append(group.mul(trunc, floor))

        conv: dict = {}
        exps: dict = {}
        for u, cu in self.terms:
            for v, cv in other.terms:
                e = group.mul(u, v)
                key = group.sort_key(e)
                conv[key] = conv.get(key, Fraction(0)) + cu * cv
                exps[key] = e
        return HahnSeries.from_terms(
            group,
            [(exps[k], c) for k, c in conv.items()],
            truncation=_min_bound(group, limits),
        )

    # -- operators ---------------------------------------------------------------

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __neg__(self):
        return self.neg()

    def __mul__(self, other):
        return self.mul(other)

    def __eq__(self, other):
        if not isinstance(other, HahnSeries):
            return NotImplemented
        return (
            self.group.name == other.group.name
            and self.terms == other.terms
            and self.truncation == other.truncation
        )

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        trunc = f", truncated above {self.group.format(self.truncation)}" if self.truncation is not None else ""
        return f"HahnSeries({format_series(self)}{trunc})"


def _min_bound(group: OrderedGroupInstance, bounds: Iterable[Optional[Element]]) -> Optional[Element]:
    present = [b for b in bounds if b is not None]
    if not present:
        return None
    best = present[0]
    for b in present[1:]:
        if group.cmp(b, best) < 0:
            best = b
    return best


def geometric_inverse(g: HahnSeries, bound: Element) -> HahnSeries:
    """The series h with (1 - g) * h = 1 for all exponents up to ``bound``.

    Requires an exact g with strictly positive support.  h is the geometric
    sum of the powers of g; it is computed by iterating h <- 1 + g*h under
    truncation, which reaches a fixpoint once the least support exponent has
    accumulated past the bound.  When it never does (non-archimedean gap),
    the support below the bound is not finite and the call is rejected.
    """
    group = g.group
    bound = group.check(bound)
    if g.truncation is not None:
        raise SeriesError("geometric_inverse needs an exact (untruncated) series")
    if g.is_zero:
        return HahnSeries.one(group)
    e0 = g.min_exponent
    if group.cmp(e0, group.unit) <= 0:
        raise SeriesError(
            f"support must be strictly positive; found exponent {group.format(e0)}"
        )
    steps = group.reach(e0, bound)
    if steps is None:
        raise SeriesError(
            f"least exponent {group.format(e0)} never accumulates past "
            f"{group.format(bound)}; the inverse has infinitely many terms below the bound"
        )
    one = HahnSeries.one(group)
    h = one
    for _ in range(steps + 2):
        nxt = one.add(g.mul(h, bound=bound))
        if nxt == h:
            return h
        h = nxt
    raise RuntimeError("geometric inverse failed to reach its fixpoint")


def convolution_pairs(
    f: HahnSeries, g: HahnSeries, t: Element
) -> list[tuple[Element, Element]]:
    """All (u, v) with u in supp f, v in supp g, and u + v = t."""
    group = f.group
    t = group.check(t)
    return [
        (u, v)
        for u, _ in f.terms
        for v, _ in g.terms
        if group.cmp(group.mul(u, v), t) == 0
    ]


# ---------------------------------------------------------------------------
# series literals ("3 + 2*x^(1/2) - x^(7/6)")
# ---------------------------------------------------------------------------


def parse_series(text: str, group: Optional[OrderedGroupInstance] = None) -> HahnSeries:
    """Parse a series literal with exact rational coefficients.

    Terms look like ``3``, ``x``, ``2*x``, ``x^2``, ``-x^(7/6)``; exponents
    go through the group's parser, so scalar exponent groups (rationals,
    integers) are supported.
    """
    group = group or RationalsGroup()
    terms = []
    for sign, body in _split_terms(text):
        exponent, coeff = _parse_term(body, group)
        terms.append((exponent, sign * coeff))
    return HahnSeries.from_terms(group, terms)


def _split_terms(text: str) -> list[tuple[int, str]]:
    text = text.strip()
    if not text:
        raise SeriesError("empty series literal")
    if text == "0":
        return []
    out = []
    sign, start, depth = 1, 0, 0
    i = 0
    while i <= len(text):
        ch = text[i] if i < len(text) else None
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif (ch in ("+", "-") and depth == 0 and i > start) or ch is None:
            body = text[start:i].strip()
            if not body:
                raise SeriesError(f"cannot parse series literal {text!r}")
            out.append((sign, body))
            if ch is not None:
                sign = 1 if ch == "+" else -1
                start = i + 1
        elif ch in ("+", "-") and depth == 0:
            # leading sign of the very first term
            sign = 1 if ch == "+" else -1
            start = i + 1
        i += 1
    return out


def _parse_term(body: str, group: OrderedGroupInstance) -> tuple[Element, Fraction]:
    if "x" not in body:
        return group.unit, Fraction(body)
    head, _, tail = body.partition("x")
    head = head.strip()
    if head.endswith("*"):
        head = head[:-1].strip()
        if not head:
            raise SeriesError(f"cannot parse term {body!r}")
    coeff = Fraction(head) if head else Fraction(1)
    tail = tail.strip()
    if not tail:
        exponent_text = "1"
    elif tail.startswith("^"):
        exponent_text = tail[1:].strip()
        if exponent_text.startswith("(") and exponent_text.endswith(")"):
            exponent_text = exponent_text[1:-1].strip()
    else:
        raise SeriesError(f"cannot parse term {body!r}")
    return group.parse(exponent_text), coeff


def format_series(f: HahnSeries) -> str:
    if not f.terms:
        return "0"
    group = f.group
    parts = []
    for i, (exponent, coeff) in enumerate(f.terms):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if group.cmp(exponent, group.unit) == 0:
            body = str(mag)
        else:
            exp_text = group.format(exponent)
            power = "" if exp_text == "1" else (
                f"^{exp_text}" if "/" not in exp_text and "-" not in exp_text and "(" not in exp_text
                else f"^({exp_text})"
            )
            body = f"x{power}" if mag == 1 else f"{mag}*x{power}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)
