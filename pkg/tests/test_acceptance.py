"""Acceptance criteria, exact arithmetic throughout.

Each test prints one ``PASS``/``FAIL`` line; the lines are repeated in the
terminal summary.  Run ``python tests/test_acceptance.py`` for the lines alone.
"""

import random
import time
from itertools import product

from rsquantum.algebra import (
    E, F, W, WP, Element, Letter, ad_left, ad_right, e, f, is_zero_mod_ideal, normal_order, w, wp,
)
from rsquantum.double import derive_cross_relations
from rsquantum.hopf import antipode
from rsquantum.lusztig import c2_identities, rank3_obstruction, verify_rank2_lemmas
from rsquantum.pairing import antipode_compatibility, pair, rosso_ad_invariance, rosso_form
from rsquantum.rootdata import build_root_datum
from rsquantum.scalars import ONE, R, S, scalar_substitute
from rsquantum.suites import (
    APPENDIX_CASES, appendix_lists, appendix_terms, hopf_suite, pairing_vanishing, random_word,
)

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, started: float, budget: float, detail: str = "") -> None:
    elapsed = time.perf_counter() - started
    passed = ok and elapsed < budget
    line = f"{'PASS' if passed else 'FAIL'} [{number:2d}] {title} ({elapsed:.2f}s, budget {budget:.0f}s)"
    if detail:
        line += f": {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert elapsed < budget, line


def test_01_appendix_lists():
    t0 = time.perf_counter()
    golden = appendix_lists()
    sizes = []
    ok = True
    for name, idx in APPENDIX_CASES.items():
        got = appendix_terms(idx)
        sizes.append(sum(got.values()))
        ok &= got == golden[name]
    ok &= sizes == [24, 24, 24, 24, 6, 6]
    record(1, "appendix relevant-term lists", ok, t0, 5, "terms " + ", ".join(map(str, sizes)))


def test_02_serre_relations_pair_to_zero():
    t0 = time.perf_counter()
    total, bad = 0, []
    for t in "BC":
        count, failures = pairing_vanishing(build_root_datum(t, 2), decorations=2)
        total += count
        bad += failures
    d4 = build_root_datum("D", 4)
    rel = Element({(Letter(E, 3), Letter(E, 4)): ONE, (Letter(E, 4), Letter(E, 3)): -(R * S)})
    for x in ((Letter(F, 3), Letter(F, 4)), (Letter(F, 4), Letter(F, 3))):
        total += 1
        if not pair(Element({x: ONE}), rel, d4).is_zero():
            bad.append(str(x))
    record(2, "Serre relations pair to zero (B2, C2, D4 pair)", not bad, t0, 60,
           f"{total} pairings, {len(bad)} nonzero")


def test_03_cross_relations():
    t0 = time.perf_counter()
    data = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4)]
    count = mismatched = 0
    for t, n in data:
        for rel in derive_cross_relations(build_root_datum(t, n)):
            count += 1
            mismatched += not rel.matches
    record(3, "double cross relations match the presentation", mismatched == 0, t0, 30,
           f"{count} relations, {mismatched} mismatched")


def test_04_hopf_axioms():
    t0 = time.perf_counter()
    reports = [hopf_suite(build_root_datum(t, 2), samples=100, seed=2024) for t in "ABC"]
    checks = sum(len(r.checks) for r in reports)
    record(4, "Hopf axioms on generators and 100 random words", all(r.passed for r in reports), t0, 30,
           f"{checks} checks over A2, B2, C2")


def test_05_c2_commutator_ladder():
    t0 = time.perf_counter()
    d = build_root_datum("C", 2)
    E12, F12 = ad_left(e(1), e(2), d), ad_right(f(1), f(2), d)
    E112, F112 = ad_left(e(1), E12, d), ad_right(f(1), F12, d)
    first = normal_order(E12 * F12 - F12 * E12, d)
    second = normal_order(E112 * F112 - F112 * E112, d)
    ok = first == (w(1) * w(2) - wp(1) * wp(2)).scale((R - S).inverse())
    ok &= second == (w(1, 2) * w(2) - wp(1, 2) * wp(2)).scale((R + S) ** 2 / (R * R - S * S))
    record(5, "C2 root-vector commutators", ok, t0, 5)


def test_06_c2_identities():
    t0 = time.perf_counter()
    d = build_root_datum("C", 2)
    first, second = c2_identities()
    control, _ = c2_identities(r_squared_factor=False)
    ok = is_zero_mod_ideal(first, d) and is_zero_mod_ideal(second, d) and not is_zero_mod_ideal(control, d)
    record(6, "C2 degree-(3,2) identities, control nonzero", ok, t0, 10)


def test_07_rank2_symmetries():
    t0 = time.perf_counter()
    count = failed = 0
    for t in "ABC":
        for i in (1, 2):
            for chk in verify_rank2_lemmas(t, i):
                count += 1
                failed += not chk.passed
    record(7, "rank-2 symmetries preserve every defining relation", failed == 0, t0, 120,
           f"{count} relation images, {failed} nonzero")


def test_08_rank3_obstruction():
    t0 = time.perf_counter()
    values = {t: rank3_obstruction(t) for t in "ACB"}
    ok = values["A"] == values["C"] == R * S
    for v in values.values():
        ok &= v != ONE and scalar_substitute(v, R, R.inverse()) == ONE
    record(8, "rank-3 obstruction", ok, t0, 10, ", ".join(f"{t}3: {v}" for t, v in values.items()))


def test_09_rosso_ad_invariance():
    t0 = time.perf_counter()
    a2 = build_root_datum("A", 2)
    gens = [e(1), e(2), f(1), f(2), w(1), w(2), wp(1), wp(2)]
    ok = all(rosso_ad_invariance(a, b, c, a2) for a, b, c in product(gens, repeat=3))
    c2 = build_root_datum("C", 2)
    rng = random.Random(29)
    tested = 0
    while tested < 50:
        a, b, c = (Element({random_word(rng, c2, 2): ONE}) for _ in range(3))
        lhs = rosso_form(ad_left(a, b, c2), c, c2)
        rhs = rosso_form(b, ad_left(antipode(a, c2), c, c2), c2)
        if lhs.is_zero() and rhs.is_zero():
            continue
        tested += 1
        ok &= lhs == rhs
    record(9, "Rosso form ad-invariance", ok, t0, 120, "512 A2 generator triples, 50 nonzero C2 triples")


def test_10_antipode_compatibility():
    t0 = time.perf_counter()
    ok = True
    for t in "ABC":
        d = build_root_datum(t, 2)
        lower = [Element({(Letter(k, i, z),): ONE}) for k, zs in ((F, (1,)), (WP, (1, -1)))
                 for i in d.indices() for z in zs]
        upper = [Element({(Letter(k, i, z),): ONE}) for k, zs in ((E, (1,)), (W, (1, -1)))
                 for i in d.indices() for z in zs]
        ok &= all(antipode_compatibility(x, y, d) for x in lower for y in upper)
        rng = random.Random(10)
        for _ in range(100):
            x = Element({random_word(rng, d, 3, (F, WP)): ONE})
            y = Element({random_word(rng, d, 3, (E, W)): ONE})
            ok &= antipode_compatibility(x, y, d)
    record(10, "pairing is antipode compatible", ok, t0, 30, "A2, B2, C2: generators and 100 random pairs each")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
