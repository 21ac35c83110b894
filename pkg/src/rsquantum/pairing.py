"""The skew-dual pairing between the lower and upper Borel parts, and the Rosso form.

``pair(x, y)`` takes ``x`` in the lower Borel part (letters ``f_i`` and
``w'_i``) and ``y`` in the upper Borel part (letters ``e_i`` and ``w_i``).
It is evaluated by peeling the first letter off ``y``: the lower side is
expanded with the opposite coproduct, so the slot paired with that first
letter is the *second* tensor factor of ``Delta(x)``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .algebra import (
    E, F, W, WP, Element, Letter, Word, nf_terms, ad_left,
    word_to_nf_key,
)
from .hopf import antipode
from .rootdata import RootDatum
from .scalars import ONE, ZERO, Scalar, monomial

__all__ = [
    "WrongSubalgebra",
    "NonTriangularInput",
    "pair",
    "pair_words",
    "torus_prefactor",
    "pair_with_torus_prefactor_law",
    "antipode_compatibility",
    "pair0",
    "rosso_form",
    "rosso_form_uncorrected",
    "rosso_form_via_pair0",
    "rosso_form_split",
    "rosso_ad_invariance",
]


class WrongSubalgebra(ValueError):
    pass


class NonTriangularInput(ValueError):
    pass


def _check_lower(word: Word) -> None:
    for x in word:
        if x.kind not in (F, WP):
            raise WrongSubalgebra(f"letter {x} is not in the lower Borel part")


def _check_upper(word: Word) -> None:
    for x in word:
        if x.kind not in (E, W):
            raise WrongSubalgebra(f"letter {x} is not in the upper Borel part")


def _grouplike_pairing(d: RootDatum, word: Sequence[Letter], j: int, b: int) -> tuple[int, int]:
    """Exponents of ``<g, w_j^b>`` where ``g`` is ``word`` with every ``f_i`` read as ``w'_i``."""
    P = d.pairing_exp
    a = s = 0
    for x in word:
        z = 1 if x.kind == F else x.exp
        u, v = P[x.index - 1][j - 1]
        a += u * z * b
        s += v * z * b
    return a, s


def _f_counts(word: Word, kind: int, n: int) -> tuple:
    v = [0] * n
    for x in word:
        if x.kind == kind:
            v[x.index - 1] += 1
    return tuple(v)


@lru_cache(maxsize=500000)
def _pair_words(d: RootDatum, x: Word, y: Word) -> Scalar:
    if not y:
        return ZERO if any(l.kind == F for l in x) else ONE
    head, rest = y[0], y[1:]
    if head.kind == W:
        a, b = _grouplike_pairing(d, x, head.index, head.exp)
        inner = _pair_words(d, x, rest)
        return inner * monomial(a, b) if not inner.is_zero() else ZERO
    j = head.index
    total = ZERO
    base = (d.s_i(j) - d.r_i(j)).inverse()
    for k, let in enumerate(x):
        if let.kind != F or let.index != j:
            continue
        inner = _pair_words(d, x[:k] + x[k + 1:], rest)
        if inner.is_zero():
            continue
        a, b = _grouplike_pairing(d, x[:k], j, 1)
        total = total + inner * base * monomial(a, b)
    return total


def pair_words(d: RootDatum, x: Word, y: Word) -> Scalar:
    _check_lower(x)
    _check_upper(y)
    if _f_counts(x, F, d.rank) != _f_counts(y, E, d.rank):
        return ZERO
    return _pair_words(d, tuple(x), tuple(y))


def pair(x: Element, y: Element, d: RootDatum) -> Scalar:
    """Bilinear extension of the pairing to elements."""
    total = ZERO
    for wx, cx in x.terms.items():
        _check_lower(wx)
        for wy, cy in y.terms.items():
            v = pair_words(d, wx, wy)
            if not v.is_zero():
                total = total + cx * cy * v
    return total


def torus_prefactor(d: RootDatum, x: Word) -> tuple[Scalar, Word]:
    """Split off the torus letters of a lower word.

    Returns ``(c, u)`` with ``x = c * u * (torus)`` in the lower Borel part,
    where ``u`` keeps only the ``f`` letters.  Moving ``w'_m^z`` to the right
    across ``f``-letters of total weight ``beta`` costs ``<w'_m, w_beta>^z``.
    """
    _check_lower(x)
    a = b = 0
    P = d.pairing_exp
    for k, let in enumerate(x):
        if let.kind != WP:
            continue
        for later in x[k + 1:]:
            if later.kind == F:
                u, v = P[let.index - 1][later.index - 1]
                a += u * let.exp
                b += v * let.exp
    return monomial(a, b), tuple(l for l in x if l.kind == F)


def pair_with_torus_prefactor_law(x: Element, y: Element, d: RootDatum) -> Scalar:
    """Evaluate ``<x, y>`` for an e-only ``y`` through the torus prefactor law.

    Each word of ``x`` is replaced by its prefactor times its bare f-word; the
    trailing torus part pairs trivially with a pure e-word.
    """
    for wy in y.terms:
        if any(l.kind != E for l in wy):
            raise WrongSubalgebra("the prefactor law needs a pure e-word combination")
    total = ZERO
    for wx, cx in x.terms.items():
        c, bare = torus_prefactor(d, wx)
        total = total + cx * c * pair(Element({bare: ONE}, _clean=True), y, d)
    return total


def antipode_compatibility(x: Element, y: Element, d: RootDatum) -> bool:
    return pair(antipode(x, d), antipode(y, d), d) == pair(x, y, d)


def pair0(b: Element, bp: Element, d: RootDatum) -> Scalar:
    """``<b | b'>_0 = <S(b'), b>``."""
    return pair(antipode(bp, d), b, d)


# ---------------------------------------------------------------------------
# Rosso form
# ---------------------------------------------------------------------------

def _torus_cross(d: RootDatum, primed: Sequence[int], plain: Sequence[int]) -> tuple[int, int]:
    """Exponents of ``<w'_primed, w_plain>`` for exponent vectors."""
    P = d.pairing_exp
    a = b = 0
    for m, x in enumerate(primed):
        if not x:
            continue
        for l, y in enumerate(plain):
            if y:
                u, v = P[m][l]
                a += u * x * y
                b += v * x * y
    return a, b


def _triangular_terms(u: Element, d: RootDatum, reduce: bool) -> dict:
    if reduce:
        return nf_terms(u, d)
    out = {}
    for wd, c in u.terms.items():
        key = word_to_nf_key(wd, d.rank)
        if key is None:
            raise NonTriangularInput(f"word {wd} is not of the shape F (torus) E")
        out[key] = out.get(key, ZERO) + c
    return out


def _s_squared_f(d: RootDatum, fs: tuple) -> Element:
    word = tuple(Letter(F, i) for i in fs)
    return antipode(antipode(Element({word: ONE}, _clean=True), d), d)


def _rosso_terms(d: RootDatum, k1, k2, weight_factors: bool = True) -> Scalar:
    n = d.rank
    fa, tau1, eb = k1
    ft, tau2, eg = k2
    # graded vanishing first
    if sorted(ft) != sorted(eb) or sorted(fa) != sorted(eg):
        return ZERO
    mu, nu = tau1[:n], tau1[n:]
    sigma, delta = tau2[:n], tau2[n:]
    if weight_factors:
        # f-letters next to a primed torus part also pair with the plain one
        sigma = tuple(x + ft.count(m + 1) for m, x in enumerate(sigma))
        mu = tuple(x + fa.count(m + 1) for m, x in enumerate(mu))
    a1, b1 = _torus_cross(d, sigma, nu)
    a2, b2 = _torus_cross(d, mu, delta)
    first = pair_words(d, tuple(Letter(F, i) for i in ft), tuple(Letter(E, i) for i in eb))
    if first.is_zero():
        return ZERO
    second = pair(_s_squared_f(d, fa), Element({tuple(Letter(E, i) for i in eg): ONE}, _clean=True), d)
    return monomial(a1 + a2, b1 + b2) * first * second


def _bilinear(u1: Element, u2: Element, d: RootDatum, reduce: bool, value) -> Scalar:
    t1 = _triangular_terms(u1, d, reduce)
    t2 = _triangular_terms(u2, d, reduce)
    total = ZERO
    for k1, c1 in t1.items():
        for k2, c2 in t2.items():
            v = value(k1, k2)
            if not v.is_zero():
                total = total + c1 * c2 * v
    return total


def rosso_form(u1: Element, u2: Element, d: RootDatum, *, reduce: bool = True) -> Scalar:
    """``<F_a w'_mu w_nu E_b, F_t w'_sigma w_delta E_g>_U`` in closed form, extended bilinearly.

    The value is ``<w'_(sigma+t), w_nu> <w'_(mu+a), w_delta> <F_t, E_b> <S^2(F_a), E_g>``.
    ``reduce=False`` insists that both inputs are already triangular.
    """
    return _bilinear(u1, u2, d, reduce, lambda k1, k2: _rosso_terms(d, k1, k2))


def rosso_form_uncorrected(u1: Element, u2: Element, d: RootDatum, *, reduce: bool = True) -> Scalar:
    """The closed form without the ``<w'_t, w_nu> <w'_a, w_delta>`` factors.

    Kept for comparison: it is not ad-invariant.
    """
    return _bilinear(u1, u2, d, reduce, lambda k1, k2: _rosso_terms(d, k1, k2, weight_factors=False))


def _pieces(key, n: int) -> tuple[Element, Element, Element, Element]:
    """``(F, w'_mu, w_nu, E)`` of a triangular key as elements."""
    fs, tau, es = key

    def word(kind, letters):
        return Element({tuple(letters): ONE}, _clean=True)

    return (
        word(F, (Letter(F, i) for i in fs)),
        word(WP, (Letter(WP, m + 1, z) for m, z in enumerate(tau[:n]) if z)),
        word(W, (Letter(W, m + 1, z) for m, z in enumerate(tau[n:]) if z)),
        word(E, (Letter(E, i) for i in es)),
    )


def rosso_form_via_pair0(u1: Element, u2: Element, d: RootDatum) -> Scalar:
    """``<S(w_nu E_b) | F_t w'_sigma>_0 <w_delta E_g | S(F_a w'_mu)>_0``."""
    n = d.rank

    def value(k1, k2):
        fa, wmu, wnu, eb = _pieces(k1, n)
        ft, wsigma, wdelta, eg = _pieces(k2, n)
        return (
            pair0(antipode(wnu * eb, d), ft * wsigma, d)
            * pair0(wdelta * eg, antipode(fa * wmu, d), d)
        )

    return _bilinear(u1, u2, d, True, value)


def rosso_form_split(u1: Element, u2: Element, d: RootDatum) -> Scalar:
    """The torus and nilpotent parts fed separately to ``<.|.>_0``.

    ``<w_nu | w'_sigma>_0^-1 <w_delta | w'_mu>_0^-1 <S(E_b) | F_t>_0 <E_g | S(F_a)>_0``;
    this agrees with :func:`rosso_form_uncorrected`, not with :func:`rosso_form`.
    """
    n = d.rank

    def value(k1, k2):
        fa, wmu, wnu, eb = _pieces(k1, n)
        ft, wsigma, wdelta, eg = _pieces(k2, n)
        return (
            pair0(wnu, wsigma, d).inverse()
            * pair0(wdelta, wmu, d).inverse()
            * pair0(antipode(eb, d), ft, d)
            * pair0(eg, antipode(fa, d), d)
        )

    return _bilinear(u1, u2, d, True, value)


def rosso_ad_invariance(a: Element, b: Element, c: Element, d: RootDatum) -> bool:
    """``<ad_l(a) b, c>_U == <b, ad_l(S a) c>_U``."""
    lhs = rosso_form(ad_left(a, b, d), c, d)
    rhs = rosso_form(b, ad_left(antipode(a, d), c, d), d)
    return lhs == rhs
