"""Coproduct, counit and antipode on words, plus tensor bookkeeping.

Slots of a :class:`TensorElement` are plain words; products inside a slot are
concatenations (torus runs merged) and are never normal ordered here.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .algebra import (
    E, F, W, WP, Element, Letter, Word, canonical_word, format_coefficient,
    format_word, normal_order,
)
from .rootdata import RootDatum
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "TensorElement",
    "coproduct",
    "iterated_coproduct",
    "opposite",
    "counit",
    "antipode",
    "antipode_word",
    "relevant_terms",
    "tensor_multiply",
    "coproduct_on_slot",
    "counit_on_slot",
    "multiply_slots",
]


class TensorElement:
    """Linear combination of k-tuples of words."""

    __slots__ = ("slots", "terms")

    def __init__(self, slots: int, terms: Mapping[tuple, Scalar] | None = None):
        self.slots = slots
        out: dict = {}
        for key, c in (terms or {}).items():
            if len(key) != slots:
                raise ValueError(f"expected {slots} slots, got {len(key)}")
            key = tuple(canonical_word(x) for x in key)
            v = out.get(key, ZERO) + c
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
        self.terms = out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.slots == other.slots and self.terms == other.terms

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self.slots != other.slots:
            raise ValueError("slot count mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return TensorElement(self.slots, out)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.slots, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: tuple((len(x), x) for x in kv[0]))

    def to_str(self, scalar_fmt=None) -> str:
        if not self.terms:
            return "0"
        lines = []
        for key, c in self.sorted_terms():
            slots = " (x) ".join(format_word(x) for x in key)
            lines.append(f"{format_coefficient(c, scalar_fmt)} * {slots}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"TensorElement({self.slots}, {len(self.terms)} terms)"


def _letter_coproduct(let: Letter, k: int) -> list[tuple[tuple, int]]:
    """Iterated coproduct of one letter into ``k + 1`` slots (coefficients are all 1)."""
    slots = k + 1
    if let.kind in (W, WP):
        return [(tuple((let,) for _ in range(slots)), 1)]
    out = []
    for p in range(slots):
        if let.kind == E:
            # w_i in the slots before, e_i at p, 1 after
            key = tuple((Letter(W, let.index),) if q < p else (let,) if q == p else () for q in range(slots))
        else:
            # 1 before, f_i at p, w'_i after
            key = tuple(() if q < p else (let,) if q == p else (Letter(WP, let.index),) for q in range(slots))
        out.append((key, 1))
    return out


def _word_coproduct(word: Word, k: int) -> dict:
    slots = k + 1
    acc: dict = {tuple(() for _ in range(slots)): 1}
    for let in word:
        pieces = _letter_coproduct(let, k)
        nxt: dict = {}
        for key, c in acc.items():
            for piece, _ in pieces:
                nk = tuple(a + b for a, b in zip(key, piece))
                nxt[nk] = nxt.get(nk, 0) + c
        acc = nxt
    return acc


def iterated_coproduct(x: Element, k: int) -> TensorElement:
    """``Delta^(k)``: ``k`` applications of the coproduct, ``k + 1`` slots."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out: dict = {}
    for wd, c in x.terms.items():
        for key, mult in _word_coproduct(wd, k).items():
            ck = tuple(canonical_word(s) for s in key)
            v = out.get(ck, ZERO) + c * mult
            if v.is_zero():
                out.pop(ck, None)
            else:
                out[ck] = v
    t = TensorElement(k + 1)
    t.terms = out
    return t


def coproduct(x: Element) -> TensorElement:
    return iterated_coproduct(x, 1)


def opposite(t: TensorElement) -> TensorElement:
    """Reverse the slot order."""
    return TensorElement(t.slots, {key[::-1]: c for key, c in t.terms.items()})


def counit_word(word: Word) -> int:
    return 0 if any(x.kind in (E, F) for x in word) else 1


def counit(x: Element) -> Scalar:
    total = ZERO
    for wd, c in x.terms.items():
        if counit_word(wd):
            total = total + c
    return total


def antipode_word(word: Word) -> Element:
    """Antipode of a word as an unreduced element."""
    out = Element({(): ONE}, _clean=True)
    for let in reversed(word):
        if let.kind == E:
            img = Element({(Letter(W, let.index, -1), let): -ONE}, _clean=True)
        elif let.kind == F:
            img = Element({(let, Letter(WP, let.index, -1)): -ONE}, _clean=True)
        else:
            img = Element({(Letter(let.kind, let.index, -let.exp),): ONE}, _clean=True)
        out = out * img
    return out


def antipode(x: Element, d: RootDatum | None = None) -> Element:
    """Anti-multiplicative antipode; normal ordered when a datum is supplied."""
    out = Element()
    for wd, c in x.terms.items():
        out = out + antipode_word(wd).scale(c)
    return normal_order(out, d) if d is not None else out


def relevant_terms(t: TensorElement, pattern: Sequence[int | None], kind: int = F) -> TensorElement:
    """Keep terms whose slot ``j`` holds exactly one ``kind`` letter of index ``pattern[j]``.

    ``None`` in the pattern asks for a slot made only of torus letters.
    """
    if len(pattern) != t.slots:
        raise ValueError("pattern length must equal the number of slots")
    keep = {}
    for key, c in t.terms.items():
        ok = True
        for slot, want in zip(key, pattern):
            gens = [x for x in slot if x.kind in (E, F)]
            if want is None:
                ok = not gens
            else:
                ok = len(gens) == 1 and gens[0].kind == kind and gens[0].index == want
            if not ok:
                break
        if ok:
            keep[key] = c
    out = TensorElement(t.slots)
    out.terms = keep
    return out


def tensor_multiply(a: TensorElement, b: TensorElement) -> TensorElement:
    """Slotwise product."""
    if a.slots != b.slots:
        raise ValueError("slot count mismatch")
    out: dict = {}
    for k1, c1 in a.terms.items():
        for k2, c2 in b.terms.items():
            key = tuple(x + y for x, y in zip(k1, k2))
            out[key] = out.get(key, ZERO) + c1 * c2
    return TensorElement(a.slots, out)


def _splice(key: tuple, slot: int, pieces: tuple) -> tuple:
    return key[:slot] + pieces + key[slot + 1:]


def coproduct_on_slot(t: TensorElement, slot: int) -> TensorElement:
    """Apply the coproduct to one slot, giving ``slots + 1`` slots."""
    out: dict = {}
    for key, c in t.terms.items():
        for pieces, m in _word_coproduct(key[slot], 1).items():
            nk = _splice(key, slot, pieces)
            out[nk] = out.get(nk, ZERO) + c * m
    return TensorElement(t.slots + 1, out)


def counit_on_slot(t: TensorElement, slot: int) -> TensorElement:
    out: dict = {}
    for key, c in t.terms.items():
        if counit_word(key[slot]):
            nk = key[:slot] + key[slot + 1:]
            out[nk] = out.get(nk, ZERO) + c
    return TensorElement(t.slots - 1, out)


def multiply_slots(t: TensorElement, maps: Iterable[Callable[[Element], Element]] | None = None) -> Element:
    """Multiply the slots together after applying one map per slot."""
    maps = list(maps) if maps is not None else [lambda x: x] * t.slots
    out = Element()
    for key, c in t.terms.items():
        prod = Element({(): c}, _clean=True)
        for slot, fn in zip(key, maps):
            prod = prod * fn(Element({slot: ONE}, _clean=True))
        out = out + prod
    return out
