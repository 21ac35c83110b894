"""Lusztig-type symmetries with the parameter twist r -> s^-1, s -> r^-1.

A symmetry is Q-linear: coefficients are twisted, words are sent to products
of generator images.  Images are compared inside U_{r,s}(g) itself, the same
ring the hand computations in rank two use; the twisted algebra
U_{s^-1,r^-1}(g) only enters through the twisted coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    DEFAULT_DEGREE_CAP, E, F, W, WP, Element, Letter, ad_left, e, is_zero_mod_ideal,
    normal_order, one, serre_relations, w, wp,
)
from .rootdata import RootDatum, build_root_datum, presented_conjugation
from .scalars import ONE, R, S, ZERO, Scalar, monomial, scalar_substitute

__all__ = [
    "bracket",
    "bracket_factorial",
    "twist",
    "SymmetryMap",
    "symmetry",
    "lusztig_image",
    "apply_symmetry",
    "divided_power",
    "defining_relations",
    "RelationCheck",
    "verify_rank2_lemmas",
    "check_c2_identities",
    "check_lemma_3_6",
    "c2_identities",
    "rank3_obstruction",
    "DEFAULT_WITNESS",
]


def twist(x: Scalar) -> Scalar:
    """``r -> s^-1``, ``s -> r^-1``."""
    return scalar_substitute(x, S.inverse(), R.inverse())


def _index_params(d: RootDatum | None, index: int | None) -> tuple[Scalar, Scalar]:
    if index is None or d is None:
        return R, S
    return d.r_i(index), d.s_i(index)


def bracket(k: int, flavor: str = "square", index: int | None = None, d: RootDatum | None = None) -> Scalar:
    """``[k] = (r^k - s^k)/(r - s)`` or ``<k> = (s^-k - r^-k)/(s^-1 - r^-1)``.

    With ``index`` and ``d`` the per-index parameters ``r_i, s_i`` are used.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    r, s = _index_params(d, index)
    if flavor == "square":
        return (r ** k - s ** k) / (r - s)
    if flavor == "angle":
        ri, si = r.inverse(), s.inverse()
        return (si ** k - ri ** k) / (si - ri)
    raise ValueError(f"unknown bracket flavor {flavor!r}")


def bracket_factorial(k: int, flavor: str = "square", index: int | None = None, d: RootDatum | None = None) -> Scalar:
    out = ONE
    for m in range(1, k + 1):
        out = out * bracket(m, flavor, index, d)
    return out


def divided_power(x: Element, k: int, flavor: str = "angle", index: int | None = None,
                  d: RootDatum | None = None) -> Element:
    """``x^k / <k>!`` (or ``/[k]!`` for the square flavor)."""
    return (x ** k) / bracket_factorial(k, flavor, index, d)


def _half_monomial(a2: int, b2: int) -> Scalar:
    if a2 % 2 or b2 % 2:
        raise ArithmeticError("half-integer exponent survived in a symmetry coefficient")
    return monomial(a2 // 2, b2 // 2)


def _pexp(d: RootDatum, i: int, j: int) -> tuple[int, int]:
    return d.pairing_exp[i - 1][j - 1]


@dataclass(frozen=True)
class SymmetryMap:
    """The symmetry attached to ``index``; source and target share type and rank."""

    index: int
    source: RootDatum

    @property
    def target(self) -> RootDatum:
        return self.source

    def _e_image(self, j: int) -> Element:
        d, i = self.source, self.index
        if j == i:
            return Element({(Letter(WP, i, -1), Letter(F, i)): -ONE}, _clean=True)
        m = -d.a(i, j)
        ei = e(i)
        out = Element()
        for nu in range(m + 1):
            # doubled exponents so that the half-integer pieces can be combined exactly
            a2 = b2 = nu * (m - nu)
            pj_a, pj_b = _pexp(d, j, i)
            pi_a, pi_b = _pexp(d, i, i)
            half = nu * (1 - m)
            if d.lie_type == "B":
                a2 += 2 * nu * pj_a - half * pi_a
                b2 += 2 * nu * pj_b - half * pi_b
                word = divided_power(ei, m - nu, index=i, d=d) * e(j) * divided_power(ei, nu, index=i, d=d)
            else:
                a2 += -2 * nu * pj_a + half * pi_a
                b2 += -2 * nu * pj_b + half * pi_b
                word = divided_power(ei, nu, index=i, d=d) * e(j) * divided_power(ei, m - nu, index=i, d=d)
            sign = -ONE if nu % 2 else ONE
            out = out + word.scale(sign * _half_monomial(a2, b2))
        return out

    def _f_image(self, j: int) -> Element:
        d, i = self.source, self.index
        if j == i:
            return Element({(Letter(E, i), Letter(W, i, -1)): -(d.r_i(i) * d.s_i(i))}, _clean=True)
        m = -d.a(i, j)
        fi = Element({(Letter(F, i),): ONE}, _clean=True)
        fj = Element({(Letter(F, j),): ONE}, _clean=True)
        out = Element()
        for nu in range(m + 1):
            a2 = b2 = nu * (m - nu)
            pj_a, pj_b = _pexp(d, i, j)
            pi_a, pi_b = _pexp(d, i, i)
            half = nu * (1 - m)
            if d.lie_type == "B":
                a2 += -2 * nu * pj_a + half * pi_a
                b2 += -2 * nu * pj_b + half * pi_b
                word = divided_power(fi, nu, index=i, d=d) * fj * divided_power(fi, m - nu, index=i, d=d)
            else:
                a2 += 2 * nu * pj_a - half * pi_a
                b2 += 2 * nu * pj_b - half * pi_b
                word = divided_power(fi, m - nu, index=i, d=d) * fj * divided_power(fi, nu, index=i, d=d)
            sign = -ONE if nu % 2 else ONE
            out = out + word.scale(sign * _half_monomial(a2, b2))
        if d.a(i, j) != 0:
            if d.lie_type == "B":
                power = 2 if i > j else 1
            else:
                power = 2 if i < j else 1
        else:
            power = 1
        return out.scale((d.r_i(j) * d.s_i(j)) ** power)

    def image(self, letter: Letter) -> Element:
        """Image of one letter (torus letters may carry any exponent)."""
        d, i = self.source, self.index
        if letter.kind in (W, WP):
            j, z = letter.index, letter.exp
            make = w if letter.kind == W else wp
            return make(j, z) * make(i, -d.a(i, j) * z)
        return _cached_image(self, letter.kind, letter.index)

    def __call__(self, x: Element) -> Element:
        return apply_symmetry(self, x)


@lru_cache(maxsize=None)
def _cached_image(t: SymmetryMap, kind: int, j: int) -> Element:
    return t._e_image(j) if kind == E else t._f_image(j)


def symmetry(d: RootDatum, i: int) -> SymmetryMap:
    if i not in d.indices():
        raise ValueError(f"index {i} out of range for {d.label()}")
    return SymmetryMap(i, d)


def lusztig_image(t: SymmetryMap, letter: Letter) -> Element:
    return t.image(letter)


def apply_symmetry(t: SymmetryMap, x: Element) -> Element:
    """Twist the coefficients, replace letters by their images, normal order."""
    d = t.source
    out: dict = {}
    for word, c in x.terms.items():
        acc = Element({(): twist(c)}, _clean=True)
        for letter in word:
            acc = normal_order(acc * t.image(letter), d)
        for wd, v in acc.terms.items():
            out[wd] = out.get(wd, ZERO) + v
    return Element({k: v for k, v in out.items() if not v.is_zero()}, _clean=True)


# ---------------------------------------------------------------------------
# defining relations and the rank-two suites
# ---------------------------------------------------------------------------

def defining_relations(d: RootDatum) -> list[tuple[str, Element]]:
    """Every defining relation as a named element that vanishes in U."""
    rels: list[tuple[str, Element]] = []
    idx = list(d.indices())
    for i in idx:
        rels.append((f"w{i} w{i}^-1 - 1", w(i) * w(i, -1) - one()))
        rels.append((f"w{i}' w{i}'^-1 - 1", wp(i) * wp(i, -1) - one()))
        for j in idx:
            rels.append((f"w{i} w{j}' - w{j}' w{i}", Element({(Letter(W, i), Letter(WP, j)): ONE}) - Element({(Letter(WP, j), Letter(W, i)): ONE})))
    for j in idx:
        for i in idx:
            a, b = presented_conjugation(d, j, i, primed=False)
            c = monomial(a, b)
            rels.append((f"w{j} e{i} w{j}^-1", w(j) * e(i) * w(j, -1) - e(i).scale(c)))
            fi = Element({(Letter(F, i),): ONE}, _clean=True)
            rels.append((f"w{j} f{i} w{j}^-1", w(j) * fi * w(j, -1) - fi.scale(c.inverse())))
            a, b = presented_conjugation(d, j, i, primed=True)
            c = monomial(a, b)
            rels.append((f"w{j}' e{i} w{j}'^-1", wp(j) * e(i) * wp(j, -1) - e(i).scale(c)))
            rels.append((f"w{j}' f{i} w{j}'^-1", wp(j) * fi * wp(j, -1) - fi.scale(c.inverse())))
    for i in idx:
        for j in idx:
            fj = Element({(Letter(F, j),): ONE}, _clean=True)
            rel = e(i) * fj - fj * e(i)
            if i == j:
                rel = rel - (w(i) - wp(i)) / (d.r_i(i) - d.s_i(i))
            rels.append((f"[e{i}, f{j}]", rel))
    for side in ("E", "F"):
        for k, rel in enumerate(serre_relations(d, side), start=1):
            rels.append((f"serre {side.lower()}#{k}", rel))
    return rels


@dataclass(frozen=True)
class RelationCheck:
    name: str
    passed: bool


def verify_rank2_lemmas(lie_type: str, i: int, *, rank: int = 2,
                        cap: int = DEFAULT_DEGREE_CAP) -> list[RelationCheck]:
    """Send every defining relation through the symmetry and test for zero."""
    d = build_root_datum(lie_type, rank)
    t = symmetry(d, i)
    out = []
    for name, rel in defining_relations(d):
        out.append(RelationCheck(name, is_zero_mod_ideal(apply_symmetry(t, rel), d, cap)))
    return out


def _c2_pieces() -> tuple[RootDatum, Element, Element, Element]:
    d = build_root_datum("C", 2)
    t1_e2 = symmetry(d, 1).image(Letter(E, 2))
    t1p_e2 = ad_left(e(1), e(2), d)
    t2_e1 = symmetry(d, 2).image(Letter(E, 1))
    return d, t1_e2, t1p_e2, t2_e1


def c2_identities(r_squared_factor: bool = True) -> tuple[Element, Element]:
    """The two degree-(3, 2) expressions of the type C2 identities, unreduced.

    ``r_squared_factor=False`` drops the ``r^2`` of the first one (a control).
    """
    d, a, b, c = _c2_pieces()
    k = R * R if r_squared_factor else ONE
    first = a * b - (b * a).scale(k)
    second = e(1) * c * c - (c * e(1) * c).scale(S * (R + S)) + (c * c * e(1)).scale(R * S ** 3)
    return first, second


def check_c2_identities() -> bool:
    d = build_root_datum("C", 2)
    first, second = c2_identities()
    return is_zero_mod_ideal(first, d) and is_zero_mod_ideal(second, d)


check_lemma_3_6 = check_c2_identities


DEFAULT_WITNESS = {
    # (symmetry index, conjugating torus index, e index)
    "A": (3, 1, 2),
    "C": (3, 1, 2),
    "B": (1, 3, 2),
}


def rank3_obstruction(lie_type: str, witness: tuple[int, int, int] | None = None, *,
                      rank: int = 3) -> Scalar:
    """Ratio of the two ways of transporting ``w_j e_i w_j^-1 = c e_i`` through ``T_k``.

    Conjugating the image gives ``c_left * T_k(e_i)``; transporting the right
    side gives ``twist(c) * T_k(e_i)``.  The ratio ``c_left / twist(c)`` is
    returned and equals 1 exactly when the relation survives.
    """
    lie_type = lie_type.upper()
    if witness is None:
        if lie_type not in DEFAULT_WITNESS:
            raise ValueError(f"no default witness for type {lie_type}")
        witness = DEFAULT_WITNESS[lie_type]
    k, j, i = witness
    d = build_root_datum(lie_type, rank)
    t = symmetry(d, k)
    img = normal_order(t.image(Letter(E, i)), d)
    conj = normal_order(t.image(Letter(W, j, 1)) * img * t.image(Letter(W, j, -1)), d)
    if img.is_zero():
        raise ArithmeticError("the witness image vanishes")
    word, c0 = next(iter(img.terms.items()))
    left = conj.terms.get(word, ZERO) / c0
    if not (conj - img.scale(left)).is_zero():
        raise ArithmeticError("conjugated image is not proportional to the image")
    a, b = presented_conjugation(d, j, i, primed=False)
    return left / twist(monomial(a, b))
