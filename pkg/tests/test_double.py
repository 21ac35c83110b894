import random

import pytest

from rsquantum.algebra import E, F, W, WP, Element, equal_in_algebra, e, f, normal_order, w, wp
from rsquantum.double import (
    DoubleElement, derive_cross_relations, double_associativity, double_multiply,
    embed_lower, embed_upper, to_algebra,
)
from rsquantum.pairing import WrongSubalgebra
from rsquantum.rootdata import build_root_datum
from rsquantum.scalars import ONE
from rsquantum.suites import random_word

C2 = build_root_datum("C", 2)


def single(upper, lower, c=ONE):
    a = next(iter(upper.terms)) if upper is not None else ()
    b = next(iter(lower.terms)) if lower is not None else ()
    return DoubleElement({(a, b): c})


def test_grouplikes_commute():
    got = double_multiply(embed_lower(wp(1)), embed_upper(w(1)), C2)
    assert got == single(w(1), wp(1))


def test_f_past_e_produces_torus_terms():
    for i in (1, 2):
        got = double_multiply(embed_lower(f(i)), embed_upper(e(i)), C2)
        h = (C2.r_i(i) - C2.s_i(i)).inverse()
        want = single(e(i), f(i)) - single(w(i), None, h) + single(None, wp(i), h)
        assert got == want
    assert double_multiply(embed_lower(f(1)), embed_upper(e(2)), C2) == single(e(2), f(1))


def test_primed_torus_past_e():
    for i in (1, 2):
        for j in (1, 2):
            got = double_multiply(embed_lower(wp(j)), embed_upper(e(i)), C2)
            assert got == single(e(i), wp(j), C2.pairing(j, i).inverse())


def test_f_past_plain_torus():
    for i in (1, 2):
        for j in (1, 2):
            got = double_multiply(embed_lower(f(i)), embed_upper(w(j)), C2)
            assert got == single(w(j), f(i), C2.pairing(i, j))


def test_upper_times_lower_is_juxtaposition():
    assert double_multiply(embed_upper(e(1)), embed_lower(f(2)), C2) == single(e(1), f(2))


@pytest.mark.parametrize("t, n", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4)])
def test_cross_relations_match_presentation(t, n):
    rels = derive_cross_relations(build_root_datum(t, n))
    assert len(rels) == (3 * n) ** 2
    assert all(r.matches for r in rels), [r.describe() for r in rels if not r.matches]


def test_describe_reports_verdict():
    text = derive_cross_relations(C2)[0].describe()
    assert text.startswith("(f1) * (e1)")
    assert text.rstrip().endswith("MATCH")


def test_wrong_halves_rejected():
    with pytest.raises(WrongSubalgebra):
        DoubleElement({((next(iter(f(1).terms))), ()): ONE})


GENS = [embed_upper(x) for x in (e(1), e(2), w(1), w(2, -1))] + \
       [embed_lower(x) for x in (f(1), f(2), wp(1), wp(2, -1))]


def test_associativity_on_generator_triples():
    rng = random.Random(7)
    for _ in range(25):
        x, y, z = (rng.choice(GENS) for _ in range(3))
        assert double_associativity(x, y, z, C2)


def test_map_to_algebra_is_multiplicative():
    rng = random.Random(11)
    for _ in range(25):
        a = Element({random_word(rng, C2, 2, (E, W)): ONE})
        b = Element({random_word(rng, C2, 2, (F, WP)): ONE})
        prod = double_multiply(embed_lower(b), embed_upper(a), C2)
        assert equal_in_algebra(to_algebra(prod, C2), normal_order(b * a, C2), C2)


def test_str_format():
    text = str(double_multiply(embed_lower(f(1)), embed_upper(e(1)), C2))
    assert "1 * e1 (x) f1" in text.splitlines()
