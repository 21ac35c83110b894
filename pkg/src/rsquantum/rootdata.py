"""Root data for types A, B, C, D and the torus pairing table.

Simple roots are written in an orthonormal basis eps_1, eps_2, ...:

* A_n : alpha_i = eps_i - eps_{i+1} inside R^{n+1}
* B_n : alpha_i = eps_i - eps_{i+1} (i < n), alpha_n = eps_n
* C_n : alpha_i = eps_i - eps_{i+1} (i < n), alpha_n = 2 eps_n
* D_n : alpha_i = eps_i - eps_{i+1} (i < n), alpha_n = eps_{n-1} + eps_n

All indices in the public API are 1-based to match the usual notation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .scalars import Scalar, monomial

__all__ = [
    "InvalidRank",
    "RootDatum",
    "RootVector",
    "build_root_datum",
    "pairing_of_torus",
    "torus_pairing_vector",
    "verify_torus_identities",
    "verify_lemma_1_2",
    "presented_conjugation",
    "dump_tables",
]

LIE_TYPES = ("A", "B", "C", "D")


class InvalidRank(ValueError):
    pass


class RootVector(tuple):
    """Integer coordinates with respect to the simple roots."""

    def __new__(cls, coords: Sequence[int]):
        return super().__new__(cls, (int(c) for c in coords))

    @classmethod
    def zero(cls, n: int) -> "RootVector":
        return cls([0] * n)

    @classmethod
    def simple(cls, n: int, i: int) -> "RootVector":
        v = [0] * n
        v[i - 1] = 1
        return cls(v)

    def __add__(self, other):  # type: ignore[override]
        return RootVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return RootVector(a - b for a, b in zip(self, other))

    def __neg__(self):
        return RootVector(-a for a in self)

    def scale(self, k: int) -> "RootVector":
        return RootVector(k * a for a in self)

    def is_zero(self) -> bool:
        return not any(self)

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self, start=1):
            if not c:
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            sign = "-" if c < 0 else "+"
            parts.append((sign, f"{mag}a{i}"))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"RootVector({list(self)})"


def _inner(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _simple_roots(lie_type: str, n: int) -> list[list[int]]:
    dim = n + 1 if lie_type == "A" else n
    roots = []
    for i in range(n - 1 if lie_type != "A" else n):
        v = [0] * dim
        v[i], v[i + 1] = 1, -1
        roots.append(v)
    if lie_type == "A":
        return roots
    v = [0] * dim
    if lie_type == "B":
        v[n - 1] = 1
    elif lie_type == "C":
        v[n - 1] = 2
    else:
        v[n - 2] = v[n - 1] = 1
    roots.append(v)
    return roots


@dataclass(frozen=True)
class RootDatum:
    """Type, rank and every table derived from them.

    ``eps_alpha[k][j]`` is ``(eps_{k+1}, alpha_{j+1})``; for type A there are
    ``rank + 1`` rows.  ``pairing_exp[i][j] = (a, b)`` encodes
    ``<w'_{i+1}, w_{j+1}> = r^a s^b``.
    """

    lie_type: str
    rank: int
    simple_roots: tuple = field(repr=False)
    eps_alpha: tuple = field(repr=False)
    cartan: tuple = field(repr=False)
    ri_exp: tuple = field(repr=False)
    si_exp: tuple = field(repr=False)
    pairing_exp: tuple = field(repr=False)

    @property
    def n(self) -> int:
        return self.rank

    def indices(self) -> range:
        return range(1, self.rank + 1)

    def eps(self, k: int, j: int) -> int:
        """``(eps_k, alpha_j)`` with 1-based indices."""
        return self.eps_alpha[k - 1][j - 1]

    def a(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1]

    def r_i(self, i: int) -> Scalar:
        return monomial(self.ri_exp[i - 1], 0)

    def s_i(self, i: int) -> Scalar:
        return monomial(0, self.si_exp[i - 1])

    def pairing(self, i: int, j: int) -> Scalar:
        """``<w'_i, w_j>``."""
        a, b = self.pairing_exp[i - 1][j - 1]
        return monomial(a, b)

    def label(self) -> str:
        return f"{self.lie_type}{self.rank}"


def _pairing_exponents(t: str, n: int, eps) -> tuple:
    def e(k: int, j: int) -> int:
        return eps[k - 1][j - 1]

    table = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if t == "A" or j < n:
                a, b = e(j, i), e(j + 1, i)
                if t == "B":
                    a, b = 2 * a, 2 * b
            elif t in ("B", "C"):
                if i < n:
                    a, b = 2 * e(n, i), 0
                else:
                    a, b = e(n, n), -e(n, n)
            else:  # D, j = n
                if i != n - 1:
                    a, b = e(n - 1, i), -e(n, i)
                else:
                    a, b = e(n, n - 1), -e(n - 1, n - 1)
            row.append((a, b))
        table.append(tuple(row))
    return tuple(table)


@lru_cache(maxsize=None)
def build_root_datum(lie_type: str, rank: int) -> RootDatum:
    lie_type = lie_type.upper()
    if lie_type not in LIE_TYPES:
        raise ValueError(f"unknown Lie type {lie_type!r}")
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}[lie_type]
    if not isinstance(rank, int) or rank < minimum:
        raise InvalidRank(f"type {lie_type} needs rank >= {minimum}, got {rank}")
    n = rank
    roots = _simple_roots(lie_type, n)
    dim = len(roots[0])
    eps = tuple(tuple(roots[j][k] for j in range(n)) for k in range(dim))
    cartan = tuple(
        tuple(2 * _inner(roots[i], roots[j]) // _inner(roots[i], roots[i]) for j in range(n))
        for i in range(n)
    )
    if lie_type == "B":
        ri = tuple([2] * (n - 1) + [1])
    elif lie_type == "C":
        ri = tuple([1] * (n - 1) + [2])
    else:
        ri = tuple([1] * n)
    return RootDatum(
        lie_type=lie_type,
        rank=n,
        simple_roots=tuple(tuple(v) for v in roots),
        eps_alpha=eps,
        cartan=cartan,
        ri_exp=ri,
        si_exp=ri,
        pairing_exp=_pairing_exponents(lie_type, n, eps),
    )


def pairing_of_torus(d: RootDatum, i: int, j: int, a: int = 1, b: int = 1) -> Scalar:
    """``<w'_i^a, w_j^b> = <w'_i, w_j>^(a*b)``."""
    x, y = d.pairing_exp[i - 1][j - 1]
    k = a * b
    return monomial(x * k, y * k)


def torus_pairing_vector(d: RootDatum, zeta: Sequence[int], i: int, *, primed_side: bool = False) -> Scalar:
    """``<w'_i, w_zeta>``, or ``<w'_zeta, w_i>`` when ``primed_side`` is set."""
    a = b = 0
    for j, z in enumerate(zeta, start=1):
        if not z:
            continue
        x, y = d.pairing_exp[j - 1][i - 1] if primed_side else d.pairing_exp[i - 1][j - 1]
        a += x * z
        b += y * z
    return monomial(a, b)


def verify_torus_identities(d: RootDatum, eps_alpha: Sequence[Sequence[int]] | None = None) -> bool:
    """Check the inner-product identities between eps-coordinates and simple roots.

    ``eps_alpha`` overrides the stored table (used to feed in corrupted data).
    """
    table = d.eps_alpha if eps_alpha is None else eps_alpha
    n, t = d.rank, d.lie_type

    def e(k: int, j: int) -> int:
        return table[k - 1][j - 1]

    bound = n + 1 if t == "A" else n
    for i in range(1, bound):
        for j in range(1, bound):
            if e(j + 1, i) != -e(i, j):
                return False
    if t == "B":
        return all(e(j + 1, n) == -e(n, j) for j in range(1, n))
    if t == "C":
        return all(e(j + 1, n) == -2 * e(n, j) for j in range(1, n))
    if t == "D":
        for j in range(2, n + 1):
            if j == n - 1:
                if e(n - 1, n) != e(n - 1, n - 1):
                    return False
            elif e(j, n) != -e(n, j - 1):
                return False
    return True


verify_lemma_1_2 = verify_torus_identities


def presented_conjugation(d: RootDatum, j: int, i: int, primed: bool) -> tuple[int, int]:
    """Exponents ``(a, b)`` with ``w_j e_i w_j^-1 = r^a s^b e_i`` as written in the relations.

    With ``primed`` the conjugating letter is ``w'_j``.  The ``f_i`` version is
    the inverse.  This reads the defining relations directly from the
    eps-coordinates and does not consult the pairing table.
    """
    n, t = d.rank, d.lie_type

    def e(k: int, m: int) -> int:
        return d.eps(k, m)

    if t == "A" or j < n:
        a, b = e(j, i), e(j + 1, i)
        if t == "B":
            a, b = 2 * a, 2 * b
    elif t in ("B", "C"):
        if i < n:
            a, b = 2 * e(n, i), 0
        else:
            a, b = e(n, n), -e(n, n)
    else:
        if i != n - 1:
            a, b = e(n - 1, i), -e(n, i)
        else:
            a, b = e(n, n - 1), -e(n - 1, n - 1)
    # the primed relations are the unprimed ones with r and s exchanged
    return (b, a) if primed else (a, b)


def dump_tables(d: RootDatum, fmt=str) -> str:
    lines = [f"type {d.lie_type} rank {d.rank}"]
    lines.append("cartan:")
    lines.extend("  " + " ".join(f"{x:3d}" for x in row) for row in d.cartan)
    lines.append("eps_alpha (row k = eps_k, column j = alpha_j):")
    lines.extend("  " + " ".join(f"{x:3d}" for x in row) for row in d.eps_alpha)
    lines.append("r_i: " + ", ".join(fmt(d.r_i(i)) for i in d.indices()))
    lines.append("s_i: " + ", ".join(fmt(d.s_i(i)) for i in d.indices()))
    lines.append("pairing <w'_i, w_j>:")
    for i in d.indices():
        lines.append("  " + "  ".join(f"<w{i}',w{j}> = {fmt(d.pairing(i, j))}" for j in d.indices()))
    return "\n".join(lines)
