"""Verification suites shared by the command line and the test-suite.

Each suite returns a :class:`Report`: a list of named checks in a fixed order,
so the printed text is identical from run to run.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from itertools import permutations
from typing import Iterable, Iterator

from .algebra import (
    DEFAULT_DEGREE_CAP, E, F, W, WP, Element, Letter, canonical_word, format_word,
    reduce_mod_ideal, serre_relations,
)
from .double import derive_cross_relations
from .hopf import (
    TensorElement, antipode, coproduct, coproduct_on_slot, counit, counit_on_slot,
    iterated_coproduct, multiply_slots, opposite, relevant_terms, tensor_multiply,
)
from .lusztig import c2_identities, rank3_obstruction, verify_rank2_lemmas
from .pairing import antipode_compatibility, pair, pair_words
from .rootdata import RootDatum, verify_torus_identities
from .scalars import ONE, R, ZERO, scalar_substitute

__all__ = [
    "Check",
    "Report",
    "SuiteUnavailable",
    "SUITES",
    "decorated_words",
    "pairing_vanishing",
    "pairing_suite",
    "double_suite",
    "hopf_axioms",
    "hopf_suite",
    "appendix_lists",
    "appendix_terms",
    "appendix_suite",
    "lusztig_suite",
    "obstruction_suite",
    "random_word",
    "run_suite",
]


class SuiteUnavailable(ValueError):
    """The requested suite does not apply to the chosen type and rank."""


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def lines(self) -> list[str]:
        out = [f"== {self.suite}"]
        out.extend(self.notes)
        for c in self.checks:
            out.append(f"{'PASS' if c.passed else 'FAIL'} {c.name}")
            if c.detail:
                out.extend("    " + ln for ln in c.detail.splitlines())
        failed = sum(not c.passed for c in self.checks)
        verdict = "PASS" if self.passed else "FAIL"
        out.append(f"{self.suite}: {verdict} ({len(self.checks) - failed}/{len(self.checks)} checks)")
        return out

    def text(self) -> str:
        return "\n".join(self.lines())


# ---------------------------------------------------------------------------
# pairing
# ---------------------------------------------------------------------------

def _torus_letters(d: RootDatum) -> list[Letter]:
    return [Letter(WP, m, z) for m in d.indices() for z in (1, -1)]


def decorated_words(base: tuple, d: RootDatum, decorations: int) -> Iterator[tuple]:
    """``base`` with up to ``decorations`` primed torus letters inserted anywhere."""
    seen = set()
    frontier = {tuple(base)}
    for _ in range(decorations + 1):
        nxt = set()
        for wd in frontier:
            cw = canonical_word(wd)
            if cw not in seen:
                seen.add(cw)
                yield cw
            for pos in range(len(wd) + 1):
                for t in _torus_letters(d):
                    nxt.add(wd[:pos] + (t,) + wd[pos:])
        frontier = nxt


def pairing_vanishing(d: RootDatum, decorations: int = 1) -> tuple[int, list[str]]:
    """Pair every Serre relation against every content-matching decorated f-word.

    Returns the number of pairings evaluated and a description of each nonzero one.
    """
    count = 0
    bad: list[str] = []
    for rel in serre_relations(d, "E"):
        indices = [l.index for l in next(iter(rel.terms))]
        for perm in sorted(set(permutations(indices))):
            base = tuple(Letter(F, i) for i in perm)
            for x in decorated_words(base, d, decorations):
                count += 1
                v = pair(Element({x: ONE}, _clean=True), rel, d)
                if not v.is_zero():
                    bad.append(f"<{format_word(x)}, {rel.to_str().replace(chr(10), ' + ')}> = {v}")
    return count, bad


def pairing_suite(d: RootDatum, *, decorations: int = 1, samples: int = 30, seed: int = 0) -> Report:
    rep = Report(f"pairing {d.label()}")
    rep.add("torus table obeys the eps/alpha identities", verify_torus_identities(d))
    for i in d.indices():
        for j in d.indices():
            v = pair_words(d, (Letter(F, i),), (Letter(E, j),))
            want = (d.s_i(i) - d.r_i(i)).inverse() if i == j else ZERO
            rep.add(f"<f{i}, e{j}>", v == want)
    count, bad = pairing_vanishing(d, decorations)
    rep.add(f"Serre relations pair to zero ({count} decorated words)", not bad, "\n".join(bad[:5]))
    rng = random.Random(seed)
    ok = True
    for _ in range(samples):
        x = random_word(rng, d, 3, (F, WP))
        y = random_word(rng, d, 3, (E, W))
        ok &= antipode_compatibility(Element({x: ONE}), Element({y: ONE}), d)
    rep.add(f"<S(x), S(y)> = <x, y> on {samples} random word pairs", ok)
    return rep


# ---------------------------------------------------------------------------
# double
# ---------------------------------------------------------------------------

def double_suite(d: RootDatum) -> Report:
    rep = Report(f"double {d.label()}")
    for rel in derive_cross_relations(d):
        lo = format_word(next(iter(rel.lower.terms)))
        up = format_word(next(iter(rel.upper.terms)))
        derived = rel.derived.to_str().replace("\n", " ; ")
        presented = rel.presented.to_str().replace("\n", " ; ")
        rep.add(f"({lo}) * ({up})", rel.matches, f"derived:   {derived}\npresented: {presented}")
    return rep


# ---------------------------------------------------------------------------
# Hopf axioms
# ---------------------------------------------------------------------------

def _letters(d: RootDatum, kinds: Iterable[int]) -> list[Letter]:
    out = []
    for kind in kinds:
        for i in d.indices():
            if kind in (W, WP):
                out += [Letter(kind, i, 1), Letter(kind, i, -1)]
            else:
                out.append(Letter(kind, i))
    return out


def random_word(rng: random.Random, d: RootDatum, max_len: int, kinds: Iterable[int] = (F, WP, W, E)) -> tuple:
    pool = _letters(d, kinds)
    return canonical_word(rng.choice(pool) for _ in range(rng.randint(0, max_len)))


def _as_tensor1(x: Element) -> TensorElement:
    return TensorElement(1, {(wd,): c for wd, c in x.terms.items()})


def hopf_axioms(x: Element, d: RootDatum, cap: int = DEFAULT_DEGREE_CAP) -> dict[str, bool]:
    dx = coproduct(x)
    one = Element({(): counit(x)}) if not counit(x).is_zero() else Element()
    left = multiply_slots(dx, [lambda u: antipode(u, d), lambda u: u])
    right = multiply_slots(dx, [lambda u: u, lambda u: antipode(u, d)])
    return {
        "coassociativity": coproduct_on_slot(dx, 0) == coproduct_on_slot(dx, 1),
        "counit": counit_on_slot(dx, 0) == _as_tensor1(x) == counit_on_slot(dx, 1),
        "antipode": (reduce_mod_ideal(left - one, d, cap).is_zero()
                     and reduce_mod_ideal(right - one, d, cap).is_zero()),
    }


def hopf_suite(d: RootDatum, *, samples: int = 100, seed: int = 0, cap: int = DEFAULT_DEGREE_CAP) -> Report:
    rep = Report(f"hopf {d.label()}")
    rng = random.Random(seed)
    elements = [Element({(l,): ONE}) for l in _letters(d, (F, WP, W, E))]
    elements += [Element({random_word(rng, d, 3): ONE}) for _ in range(samples)]
    totals = Counter()
    fails: dict[str, list[str]] = {}
    for x in elements:
        for name, ok in hopf_axioms(x, d, cap).items():
            totals[name] += 1
            if not ok:
                fails.setdefault(name, []).append(x.to_str())
    for name in ("coassociativity", "counit", "antipode"):
        bad = fails.get(name, [])
        rep.add(f"{name} on {totals[name]} elements", not bad, "\n".join(bad[:3]))
    ok = True
    for _ in range(samples // 2):
        x = Element({random_word(rng, d, 2): ONE})
        y = Element({random_word(rng, d, 2): ONE})
        ok &= coproduct(x * y) == tensor_multiply(coproduct(x), coproduct(y))
    rep.add(f"coproduct is multiplicative on {samples // 2} pairs", ok)
    return rep


# ---------------------------------------------------------------------------
# appendix lists
# ---------------------------------------------------------------------------

APPENDIX_CASES = {
    "delta3_f1f1f1f2": (1, 1, 1, 2),
    "delta3_f2f1f1f1": (2, 1, 1, 1),
    "delta3_f1f1f2f1": (1, 1, 2, 1),
    "delta3_f1f2f1f1": (1, 2, 1, 1),
    "delta2_f2f2f1": (2, 2, 1),
    "delta2_f2f1f2": (2, 1, 2),
}


def _parse_slot(text: str) -> tuple:
    letters = []
    for tok in text.split():
        kind = tok[0]
        if kind == "f":
            letters.append(Letter(F, int(tok[1:])))
            continue
        base, _, exp = tok.partition("^")
        primed = base.endswith("'")
        idx = int(base[1:-1] if primed else base[1:])
        letters.append(Letter(WP if primed else W, idx, int(exp) if exp else 1))
    return canonical_word(letters)


def appendix_lists() -> dict[str, Counter]:
    """The transcribed relevant-term lists, as multisets of slot tuples."""
    out = {}
    pkg = resources.files("rsquantum") / "data"
    for name in APPENDIX_CASES:
        text = (pkg / f"{name}.txt").read_text()
        out[name] = Counter(
            tuple(_parse_slot(s) for s in line.split(" (x) "))
            for line in text.splitlines() if line.strip()
        )
    return out


def appendix_terms(indices: tuple) -> Counter:
    """Relevant terms of the iterated coproduct of ``f_indices``, slot order as in the pairing.

    The pairing expands the lower side with the opposite coproduct, so slots
    are reversed; a slot is relevant when it holds exactly one f-letter.
    """
    x = Element({tuple(Letter(F, i) for i in indices): ONE}, _clean=True)
    t = opposite(iterated_coproduct(x, len(indices) - 1))
    out: Counter = Counter()
    for pattern in sorted(set(permutations(indices))):
        for key, c in relevant_terms(t, pattern).terms.items():
            if c != ONE:
                raise ArithmeticError(f"unexpected multiplicity {c} in {key}")
            out[key] += 1
    return out


def appendix_suite(d: RootDatum) -> Report:
    if (d.lie_type, d.rank) != ("C", 2):
        raise SuiteUnavailable("the appendix lists are computed in type C rank 2")
    rep = Report("appendix C2")
    golden = appendix_lists()
    for name, idx in APPENDIX_CASES.items():
        got = appendix_terms(idx)
        want = golden[name]
        k = len(idx) - 1
        word = "".join(f"f{i}" for i in idx)
        detail = "" if got == want else (
            "missing: " + "; ".join(" (x) ".join(format_word(s) for s in key) for key in (want - got)) + "\n"
            + "extra: " + "; ".join(" (x) ".join(format_word(s) for s in key) for key in (got - want))
        )
        rep.add(f"relevant terms of delta^{k}({word}): {sum(got.values())} terms", got == want, detail)
    return rep


# ---------------------------------------------------------------------------
# symmetries
# ---------------------------------------------------------------------------

def lusztig_suite(d: RootDatum, cap: int = DEFAULT_DEGREE_CAP) -> Report:
    if d.rank != 2 or d.lie_type not in "ABC":
        raise SuiteUnavailable("the symmetry suites cover rank 2 of types A, B and C; "
                               "use `verify obstruction` in rank 3")
    rep = Report(f"lusztig {d.label()}")
    for i in d.indices():
        for chk in verify_rank2_lemmas(d.lie_type, i, cap=cap):
            rep.add(f"T{i}: {chk.name}", chk.passed)
    if d.lie_type == "C":
        first, second = c2_identities()
        rep.add("T1(e2) T1'(e2) = r^2 T1'(e2) T1(e2)", reduce_mod_ideal(first, d, cap).is_zero())
        rep.add("e1 T2(e1)^2 - s(r+s) T2(e1) e1 T2(e1) + r s^3 T2(e1)^2 e1 = 0",
                reduce_mod_ideal(second, d, cap).is_zero())
        control, _ = c2_identities(r_squared_factor=False)
        rep.add("control without r^2 is nonzero", not reduce_mod_ideal(control, d, cap).is_zero())
    return rep


def obstruction_suite(d: RootDatum) -> Report:
    if d.rank != 3 or d.lie_type not in "ABC":
        raise SuiteUnavailable("the obstruction witness is defined for rank 3 of types A, B and C")
    rep = Report(f"obstruction {d.label()}")
    value = rank3_obstruction(d.lie_type)
    rep.notes.append(f"obstruction = {value}")
    rep.add("differs from 1 for generic r, s", value != ONE)
    special = scalar_substitute(value, R, R.inverse())
    rep.add("equals 1 at r = q, s = q^-1", special == ONE)
    return rep


SUITES = ("pairing", "double", "lusztig", "hopf", "appendix", "obstruction")


def run_suite(name: str, d: RootDatum, cap: int = DEFAULT_DEGREE_CAP) -> list[Report]:
    """Run one suite, or every applicable one for ``name == "all"``."""
    runners = {
        "pairing": lambda: pairing_suite(d),
        "double": lambda: double_suite(d),
        "lusztig": lambda: lusztig_suite(d, cap),
        "hopf": lambda: hopf_suite(d, cap=cap),
        "appendix": lambda: appendix_suite(d),
        "obstruction": lambda: obstruction_suite(d),
    }
    if name != "all":
        if name not in runners:
            raise SuiteUnavailable(f"unknown suite {name!r}")
        return [runners[name]()]
    out = []
    for key in SUITES:
        try:
            out.append(runners[key]())
        except SuiteUnavailable:
            continue
    return out
