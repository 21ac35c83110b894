"""The Drinfeld double built on the upper and lower Borel parts.

An element of the double is a combination of pairs ``(b, b')`` standing for
``b (x) b'`` with ``b`` in the upper Borel part and ``b'`` in the lower one.
The product mixes the two halves only through the pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .algebra import (
    E, F, W, WP, DEFAULT_DEGREE_CAP, Element, Letter, Word, format_coefficient,
    format_word, normal_order, reduce_mod_ideal,
)
from .hopf import antipode, iterated_coproduct
from .pairing import _check_lower, _check_upper, pair
from .rootdata import RootDatum, presented_conjugation
from .scalars import ONE, ZERO, Scalar, monomial

__all__ = [
    "DoubleElement",
    "double_multiply",
    "embed_upper",
    "embed_lower",
    "to_algebra",
    "CrossRelation",
    "derive_cross_relations",
    "double_associativity",
]


class DoubleElement:
    """Linear combination of ``(upper word, lower word)`` pairs."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[Word, Word], Scalar] | None = None):
        out: dict = {}
        for (a, b), c in (terms or {}).items():
            _check_upper(a)
            _check_lower(b)
            v = out.get((a, b), ZERO) + c
            if v.is_zero():
                out.pop((a, b), None)
            else:
                out[(a, b)] = v
        self.terms = out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DoubleElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "DoubleElement") -> "DoubleElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return DoubleElement(out)

    def __neg__(self) -> "DoubleElement":
        return DoubleElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "DoubleElement") -> "DoubleElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "DoubleElement":
        return DoubleElement({k: c * v for k, v in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][1]), kv[0]))

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(
            f"{format_coefficient(c)} * {format_word(a)} (x) {format_word(b)}"
            for (a, b), c in self.sorted_terms()
        )

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"DoubleElement({len(self.terms)} terms)"


def embed_upper(x: Element) -> DoubleElement:
    return DoubleElement({(wd, ()): c for wd, c in x.terms.items()})


def embed_lower(x: Element) -> DoubleElement:
    return DoubleElement({((), wd): c for wd, c in x.terms.items()})


def _canonical(x: DoubleElement, d: RootDatum, cap: int) -> DoubleElement:
    """Reduce each half to its canonical form in the Borel parts."""
    out: dict = {}
    for (a, b), c in x.terms.items():
        ra = reduce_mod_ideal(Element({a: ONE}, _clean=True), d, cap)
        rb = reduce_mod_ideal(Element({b: ONE}, _clean=True), d, cap)
        for wa, ca in ra.terms.items():
            for wb, cb in rb.terms.items():
                out[(wa, wb)] = out.get((wa, wb), ZERO) + c * ca * cb
    return DoubleElement(out)


def _cross(d: RootDatum, lower: Word, upper: Word) -> dict:
    """``(1 (x) lower)(upper (x) 1)`` as a dict of pairs."""
    fl = iterated_coproduct(Element({lower: ONE}, _clean=True), 2)
    au = iterated_coproduct(Element({upper: ONE}, _clean=True), 2)
    out: dict = {}
    anti: dict = {}
    for (f1, f2, f3), cf in fl.terms.items():
        if f1 not in anti:
            anti[f1] = antipode(Element({f1: ONE}, _clean=True), d)
        s1 = anti[f1]
        for (a1, a2, a3), ca in au.terms.items():
            right = pair(Element({f3: ONE}, _clean=True), Element({a3: ONE}, _clean=True), d)
            if right.is_zero():
                continue
            left = pair(s1, Element({a1: ONE}, _clean=True), d)
            if left.is_zero():
                continue
            key = (a2, f2)
            out[key] = out.get(key, ZERO) + cf * ca * left * right
    return out


def double_multiply(x: DoubleElement, y: DoubleElement, d: RootDatum, *,
                    cap: int = DEFAULT_DEGREE_CAP) -> DoubleElement:
    """``(a (x) f)(a' (x) f') = sum <S(f_(1)), a'_(1)> <f_(3), a'_(3)> a a'_(2) (x) f_(2) f'``.

    Both halves of the result are reduced to canonical form.
    """
    out: dict = {}
    for (a, fl), c1 in x.terms.items():
        for (a2, fl2), c2 in y.terms.items():
            for (mid_a, mid_f), c in _cross(d, fl, a2).items():
                key = (a + mid_a, mid_f + fl2)
                out[key] = out.get(key, ZERO) + c1 * c2 * c
    return _canonical(DoubleElement(out), d, cap)


def to_algebra(x: DoubleElement, d: RootDatum) -> Element:
    """Image in U: ``b (x) b'`` goes to ``b b'``, normal ordered."""
    out = Element()
    for (a, b), c in x.terms.items():
        out = out + Element({a + b: c})
    return normal_order(out, d)


@dataclass(frozen=True)
class CrossRelation:
    """``lower * upper`` rewritten in the double and as presented."""

    lower: Element
    upper: Element
    derived: DoubleElement
    presented: DoubleElement

    @property
    def matches(self) -> bool:
        return self.derived == self.presented

    def describe(self) -> str:
        lhs = f"({format_word(next(iter(self.lower.terms)))}) * ({format_word(next(iter(self.upper.terms)))})"
        verdict = "MATCH" if self.matches else "FAIL"
        derived = self.derived.to_str().replace("\n", " ; ")
        presented = self.presented.to_str().replace("\n", " ; ")
        return f"{lhs}\n  derived:   {derived}\n  presented: {presented}\n  {verdict}"


def _single(a: Word, b: Word, c: Scalar = ONE) -> DoubleElement:
    return DoubleElement({(a, b): c})


def _presented(d: RootDatum, lower: Letter, upper: Letter) -> DoubleElement:
    """Rewrite ``lower * upper`` as ``upper * lower`` using the defining relations."""
    j, i = lower.index, upper.index
    swapped = ((upper,), (lower,))
    if lower.kind == WP and upper.kind == W:
        return _single(*swapped)
    if lower.kind == WP and upper.kind == E:
        # w'_j e_i w'_j^-1 = r^a s^b e_i
        a, b = presented_conjugation(d, j, i, primed=True)
        z = lower.exp
        return _single(*swapped, monomial(a * z, b * z))
    if lower.kind == F and upper.kind == W:
        # w_i f_j w_i^-1 = r^-a s^-b f_j, so f_j w_i = r^a s^b w_i f_j
        a, b = presented_conjugation(d, i, j, primed=False)
        z = upper.exp
        return _single(*swapped, monomial(a * z, b * z))
    # f_j e_i = e_i f_j - delta_ij (w_i - w'_i) / (r_i - s_i)
    out = _single(*swapped)
    if i == j:
        h = (d.r_i(i) - d.s_i(i)).inverse()
        out = out - _single((Letter(W, i),), (), h) + _single((), (Letter(WP, i),), h)
    return out


def derive_cross_relations(d: RootDatum) -> list[CrossRelation]:
    """One relation per (lower generator, upper generator), including torus inverses."""
    lowers = []
    uppers = []
    for i in d.indices():
        lowers += [Letter(F, i), Letter(WP, i, 1), Letter(WP, i, -1)]
        uppers += [Letter(E, i), Letter(W, i, 1), Letter(W, i, -1)]
    out = []
    for lo in lowers:
        for up in uppers:
            derived = DoubleElement(_cross(d, (lo,), (up,)))
            out.append(CrossRelation(
                lower=Element({(lo,): ONE}, _clean=True),
                upper=Element({(up,): ONE}, _clean=True),
                derived=derived,
                presented=_presented(d, lo, up),
            ))
    return out


def double_associativity(x: DoubleElement, y: DoubleElement, z: DoubleElement, d: RootDatum) -> bool:
    left = double_multiply(double_multiply(x, y, d), z, d)
    right = double_multiply(x, double_multiply(y, z, d), d)
    return left == right
