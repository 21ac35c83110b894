"""Exact arithmetic in the coefficient field Q(r, s).

A :class:`Scalar` is stored as ``r^a s^b * num / den`` where ``num`` and
``den`` are integer polynomials with no monomial factor, ``gcd(num, den)`` is
a unit and the leading coefficient of ``den`` is positive.  With this
convention two scalars are equal exactly when their stored triples agree.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd as igcd
from typing import Iterable, Mapping, Union

__all__ = [
    "IntPoly",
    "Scalar",
    "DivisionByZero",
    "InvalidSubstitution",
    "poly_gcd",
    "ZERO",
    "ONE",
    "R",
    "S",
    "scalar_add",
    "scalar_mul",
    "scalar_inv",
    "scalar_neg",
    "scalar_substitute",
    "scalar_is_zero",
    "monomial",
]


class DivisionByZero(ZeroDivisionError):
    pass


class InvalidSubstitution(ValueError):
    pass


# ---------------------------------------------------------------------------
# univariate helpers: dense coefficient lists over Z, low degree first
# ---------------------------------------------------------------------------

def _u_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _u_content(p: list[int]) -> int:
    c = 0
    for x in p:
        c = igcd(c, x)
        if c == 1:
            break
    return c


def _u_sub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] -= x
    return _u_trim(out)


def _u_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _u_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of ``a`` by ``b`` (``b`` nonzero)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for i, y in enumerate(b):
            a[i + shift] -= la * y
        _u_trim(a)
    return a


def _u_divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient ``a / b`` in Z[x]; raises ArithmeticError otherwise."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) < len(b):
        if a:
            raise ArithmeticError("inexact univariate division")
        return []
    q = [0] * (len(a) - db)
    while a and len(a) - 1 >= db:
        la = a[-1]
        if la % lb:
            raise ArithmeticError("inexact univariate division")
        c = la // lb
        shift = len(a) - 1 - db
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        _u_trim(a)
    if a:
        raise ArithmeticError("inexact univariate division")
    return q


def _u_primitive(p: list[int]) -> list[int]:
    c = _u_content(p)
    if c in (0, 1):
        return p
    return [x // c for x in p]


def _u_gcd(a: list[int], b: list[int]) -> list[int]:
    if not a:
        return _u_normal(b)
    if not b:
        return _u_normal(a)
    if len(a) == 1 or len(b) == 1:
        return [igcd(_u_content(a), _u_content(b))]
    c = igcd(_u_content(a), _u_content(b))
    a, b = _u_primitive(a), _u_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        rem = _u_prem(a, b)
        a, b = b, _u_primitive(rem)
    g = _u_normal(_u_primitive(a))
    return [c * x for x in g]


def _u_normal(p: list[int]) -> list[int]:
    if p and p[-1] < 0:
        return [-x for x in p]
    return list(p)


# ---------------------------------------------------------------------------
# IntPoly
# ---------------------------------------------------------------------------

Key = tuple  # (exponent of r, exponent of s)


class IntPoly:
    """Integer polynomial in ``r`` and ``s``; terms map ``(a, b)`` to a nonzero int."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Key, int] | None = None, *, _clean: bool = False):
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms  # type: ignore[assignment]
        else:
            self.terms = {k: v for k, v in terms.items() if v}
        self._hash = None

    @staticmethod
    def const(c: int) -> "IntPoly":
        return IntPoly({(0, 0): c} if c else {}, _clean=True)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((0, 0)) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def leading(self) -> tuple[Key, int]:
        k = max(self.terms)
        return k, self.terms[k]

    def sorted_terms(self) -> list[tuple[Key, int]]:
        return sorted(self.terms.items(), reverse=True)

    def min_exponents(self) -> Key:
        return (min(a for a, _ in self.terms), min(b for _, b in self.terms))

    def shift(self, da: int, db: int) -> "IntPoly":
        return IntPoly({(a + da, b + db): c for (a, b), c in self.terms.items()}, _clean=True)

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = igcd(g, c)
            if g == 1:
                break
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self) -> "IntPoly":
        return IntPoly({k: -v for k, v in self.terms.items()}, _clean=True)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return IntPoly(out, _clean=True)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self.terms or not other.terms:
            return IntPoly()
        if len(other.terms) == 1:
            ((ka, kb), c), = other.terms.items()
            return IntPoly({(a + ka, b + kb): v * c for (a, b), v in self.terms.items()}, _clean=True)
        out: dict[Key, int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return IntPoly(out)

    def scale(self, c: int) -> "IntPoly":
        if c == 1:
            return self
        if c == 0:
            return IntPoly()
        return IntPoly({k: v * c for k, v in self.terms.items()}, _clean=True)

    def div_int(self, c: int) -> "IntPoly":
        return IntPoly({k: v // c for k, v in self.terms.items()}, _clean=True)

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = IntPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divexact(self, other: "IntPoly") -> "IntPoly":
        """Exact quotient; raises ArithmeticError if ``other`` does not divide."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if len(other.terms) == 1:
            ((ka, kb), c), = other.terms.items()
            out = {}
            for (a, b), v in self.terms.items():
                if v % c or a < ka or b < kb:
                    raise ArithmeticError("inexact division")
                out[(a - ka, b - kb)] = v // c
            return IntPoly(out, _clean=True)
        rem = dict(self.terms)
        lk, lc = other.leading()
        quot: dict[Key, int] = {}
        oterms = list(other.terms.items())
        while rem:
            k = max(rem)
            v = rem[k]
            da, db = k[0] - lk[0], k[1] - lk[1]
            if da < 0 or db < 0 or v % lc:
                raise ArithmeticError("inexact division")
            q = v // lc
            quot[(da, db)] = q
            for (a, b), c in oterms:
                kk = (a + da, b + db)
                w = rem.get(kk, 0) - q * c
                if w:
                    rem[kk] = w
                else:
                    rem.pop(kk, None)
        return IntPoly(quot, _clean=True)

    def evaluate(self, r_val, s_val):
        """Evaluate at arbitrary ring elements supporting ``+``, ``*`` and ``**``."""
        total = None
        rp: dict[int, object] = {}
        sp: dict[int, object] = {}
        for (a, b), c in self.terms.items():
            if a not in rp:
                rp[a] = r_val ** a
            if b not in sp:
                sp[b] = s_val ** b
            t = rp[a] * sp[b] * c
            total = t if total is None else total + t
        return total

    def to_str(self, da: int = 0, db: int = 0) -> str:
        return _format_terms([((a + da, b + db), c) for (a, b), c in self.sorted_terms()])

    def __repr__(self) -> str:
        return f"IntPoly({self.to_str()!r})"


def _format_monomial(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("r" if a == 1 else f"r^{a}")
    if b:
        parts.append("s" if b == 1 else f"s^{b}")
    return "*".join(parts)


def _format_terms(terms: list[tuple[Key, int]]) -> str:
    if not terms:
        return "0"
    out = []
    for idx, ((a, b), c) in enumerate(terms):
        mono = _format_monomial(a, b)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# bivariate gcd by content / primitive-part recursion
# ---------------------------------------------------------------------------

def _to_recursive(p: IntPoly) -> list[list[int]]:
    """View ``p`` as a polynomial in ``s`` whose coefficients lie in Z[r]."""
    ds = max(b for _, b in p.terms)
    out: list[list[int]] = [[] for _ in range(ds + 1)]
    for (a, b), c in p.terms.items():
        row = out[b]
        if len(row) <= a:
            row.extend([0] * (a + 1 - len(row)))
        row[a] = c
    return [_u_trim(row) for row in out]


def _from_recursive(rows: list[list[int]]) -> IntPoly:
    return IntPoly({(a, b): c for b, row in enumerate(rows) for a, c in enumerate(row) if c}, _clean=True)


def _r_content(rows: list[list[int]]) -> list[int]:
    g: list[int] = []
    for row in rows:
        if row:
            g = _u_gcd(g, row) if g else _u_normal(row)
            if len(g) == 1 and abs(g[0]) == 1:
                return [1]
    return g


def _r_divide(rows: list[list[int]], c: list[int]) -> list[list[int]]:
    if c == [1]:
        return rows
    return [_u_divexact(row, c) if row else [] for row in rows]


def _r_prem(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    a = [list(x) for x in a]
    db = len(b) - 1
    lb = b[-1]
    while a and len(a) - 1 >= db:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [_u_mul(x, lb) for x in a]
        for i, y in enumerate(b):
            a[i + shift] = _u_sub(a[i + shift], _u_mul(la, y))
        while a and not a[-1]:
            a.pop()
    return a


def _r_primitive(rows: list[list[int]]) -> list[list[int]]:
    return _r_divide(rows, _r_content(rows))


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Greatest common divisor in Z[r, s], normalised to a positive leading coefficient."""
    if p.is_zero():
        return _positive(q)
    if q.is_zero():
        return _positive(p)
    if p == q or p == -q:
        return _positive(p)
    ma, mb = p.min_exponents()
    na, nb = q.min_exponents()
    mono = (min(ma, na), min(mb, nb))
    if (ma, mb) != (0, 0):
        p = p.shift(-ma, -mb)
    if (na, nb) != (0, 0):
        q = q.shift(-na, -nb)
    if p.is_constant() or q.is_constant():
        g = IntPoly.const(igcd(p.content(), q.content()))
    else:
        g = _gcd_recursive(p, q)
    if mono != (0, 0):
        g = g.shift(*mono)
    return g


@lru_cache(maxsize=65536)
def _gcd_recursive(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = _to_recursive(p), _to_recursive(q)
    ca, cb = _r_content(a), _r_content(b)
    cg = _u_gcd(ca, cb)
    a, b = _r_divide(a, ca), _r_divide(b, cb)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        rem = _r_prem(a, b)
        if not rem:
            a, b = b, []
            break
        a, b = b, _r_primitive(rem)
    if b:
        # remainder of degree zero in s: primitive gcd is 1
        g_rows: list[list[int]] = [[1]]
    else:
        g_rows = _r_primitive(a)
    g = _from_recursive([_u_mul(row, cg) for row in g_rows])
    return _positive(g)


def _positive(p: IntPoly) -> IntPoly:
    if p.terms and p.leading()[1] < 0:
        return -p
    return p


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------

_P_ONE = IntPoly.const(1)


class Scalar:
    """An element of Q(r, s) in canonical form ``r^a s^b * num / den``."""

    __slots__ = ("num", "den", "shift", "_hash")

    def __init__(self, num: IntPoly, den: IntPoly = _P_ONE, shift: tuple[int, int] = (0, 0),
                 *, _canonical: bool = False):
        if _canonical:
            self.num, self.den, self.shift = num, den, shift
            self._hash = None
            return
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        self.num, self.den, self.shift = _normalize(num, den, shift)
        self._hash = None

    # -- constructors -----------------------------------------------------
    @staticmethod
    def coerce(x: Union["Scalar", int]) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return Scalar.from_int(x)
        try:
            from fractions import Fraction
            if isinstance(x, Fraction):
                return Scalar.from_int(x.numerator) / Scalar.from_int(x.denominator)
        except ImportError:  # pragma: no cover
            pass
        raise TypeError(f"cannot coerce {x!r} to Scalar")

    @staticmethod
    def from_int(c: int) -> "Scalar":
        if c == 0:
            return ZERO
        return Scalar(IntPoly.const(c), _P_ONE, (0, 0), _canonical=True)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num.terms

    def is_one(self) -> bool:
        return self.shift == (0, 0) and self.den.is_one() and self.num.is_one()

    def is_monomial(self) -> bool:
        """True for ``c * r^a s^b`` with an integer ``c``."""
        return self.den.is_one() and self.num.is_constant() and bool(self.num.terms)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = Scalar.coerce(other)
        if not self.num.terms:
            return other
        if not other.num.terms:
            return self
        (a1, b1), (a2, b2) = self.shift, other.shift
        ma, mb = min(a1, a2), min(b1, b2)
        n1 = self.num.shift(a1 - ma, b1 - mb) if (a1, b1) != (ma, mb) else self.num
        n2 = other.num.shift(a2 - ma, b2 - mb) if (a2, b2) != (ma, mb) else other.num
        if self.den == other.den:
            num = n1 + n2
            if num.is_zero():
                return ZERO
            if self.den.is_one():
                return _from_poly(num, (ma, mb))
            return Scalar(num, self.den, (ma, mb))
        num = n1 * other.den + n2 * self.den
        if num.is_zero():
            return ZERO
        return Scalar(num, self.den * other.den, (ma, mb))

    __radd__ = __add__

    def __neg__(self):
        if not self.num.terms:
            return self
        return Scalar(-self.num, self.den, self.shift, _canonical=True)

    def __sub__(self, other):
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) + (-self)

    def __mul__(self, other):
        other = Scalar.coerce(other)
        if not self.num.terms or not other.num.terms:
            return ZERO
        shift = (self.shift[0] + other.shift[0], self.shift[1] + other.shift[1])
        if other.is_monomial():
            return self._scale_monomial(other.num.terms[(0, 0)], shift)
        if self.is_monomial():
            return other._scale_monomial(self.num.terms[(0, 0)], shift)
        d1, d2 = self.den, other.den
        if d1.is_one() and d2.is_one():
            return Scalar(self.num * other.num, _P_ONE, shift, _canonical=True)
        n1, n2 = self.num, other.num
        g1 = poly_gcd(n1, d2)
        if not g1.is_one():
            n1, d2 = n1.divexact(g1), d2.divexact(g1)
        g2 = poly_gcd(n2, d1)
        if not g2.is_one():
            n2, d1 = n2.divexact(g2), d1.divexact(g2)
        num, den = n1 * n2, d1 * d2
        if den.leading()[1] < 0:
            num, den = -num, -den
        return Scalar(num, den, shift, _canonical=True)

    __rmul__ = __mul__

    def _scale_monomial(self, c: int, shift: tuple[int, int]) -> "Scalar":
        num, den = self.num, self.den
        if not den.is_one():
            g = igcd(c, den.content())
            if g != 1:
                c //= g
                den = den.div_int(g)
        return Scalar(num.scale(c), den, shift, _canonical=True)

    def inverse(self) -> "Scalar":
        if not self.num.terms:
            raise DivisionByZero("inverse of zero")
        num, den = self.den, self.num
        if den.leading()[1] < 0:
            num, den = -num, -den
        return Scalar(num, den, (-self.shift[0], -self.shift[1]), _canonical=True)

    def __truediv__(self, other):
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return ONE
        return Scalar(self.num ** k, self.den ** k, (self.shift[0] * k, self.shift[1] * k), _canonical=True)

    def substitute(self, image_r: "Scalar", image_s: "Scalar") -> "Scalar":
        return scalar_substitute(self, image_r, image_s)

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Scalar.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.shift == other.shift and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den, self.shift))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    # -- printing ---------------------------------------------------------
    def to_str(self, r_name: str = "r", s_name: str = "s") -> str:
        """Canonical text form, parseable by the scalar grammar of the CLI."""
        text = self._raw_str()
        if (r_name, s_name) != ("r", "s"):
            text = text.replace("r", "\0").replace("s", s_name).replace("\0", r_name)
        return text

    def _raw_str(self) -> str:
        num = self.num.to_str(*self.shift)
        if self.den.is_one():
            return num
        den = self.den.to_str()
        if len(self.num.terms) > 1:
            num = f"({num})"
        if len(self.den.terms) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def is_atomic_str(self) -> bool:
        """Whether the printed form needs no parentheses inside a product."""
        return self.den.is_one() and len(self.num.terms) == 1

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Scalar({self.to_str()!r})"


def _from_poly(num: IntPoly, shift: tuple[int, int]) -> Scalar:
    ma, mb = num.min_exponents()
    if (ma, mb) != (0, 0):
        num = num.shift(-ma, -mb)
    return Scalar(num, _P_ONE, (shift[0] + ma, shift[1] + mb), _canonical=True)


def _normalize(num: IntPoly, den: IntPoly, shift: tuple[int, int]):
    if num.is_zero():
        return IntPoly(), _P_ONE, (0, 0)
    ma, mb = num.min_exponents()
    da, db = den.min_exponents()
    if (ma, mb) != (0, 0):
        num = num.shift(-ma, -mb)
    if (da, db) != (0, 0):
        den = den.shift(-da, -db)
    shift = (shift[0] + ma - da, shift[1] + mb - db)
    g = poly_gcd(num, den)
    if not g.is_one():
        num, den = num.divexact(g), den.divexact(g)
    if den.leading()[1] < 0:
        num, den = -num, -den
    return num, den, shift


def monomial(a: int, b: int, c: int = 1) -> Scalar:
    """``c * r^a * s^b``."""
    if c == 0:
        return ZERO
    return Scalar(IntPoly.const(c), _P_ONE, (a, b), _canonical=True)


ZERO = Scalar(IntPoly(), _P_ONE, (0, 0), _canonical=True)
ONE = monomial(0, 0)
R = monomial(1, 0)
S = monomial(0, 1)


def scalar_add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def scalar_mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def scalar_inv(x: Scalar) -> Scalar:
    return x.inverse()


def scalar_neg(x: Scalar) -> Scalar:
    return -x


def scalar_is_zero(x: Scalar) -> bool:
    return x.is_zero()


def _sub_poly(p: IntPoly, powers_r, powers_s) -> Scalar:
    total = ZERO
    for (a, b), c in p.sorted_terms():
        total = total + powers_r(a) * powers_s(b) * c
    return total


def scalar_substitute(x: Scalar, image_r: Scalar, image_s: Scalar) -> Scalar:
    """Ring homomorphism Q(r,s) -> Q(r,s) determined by the images of ``r`` and ``s``."""
    image_r, image_s = Scalar.coerce(image_r), Scalar.coerce(image_s)
    if image_r.is_zero() or image_s.is_zero():
        raise InvalidSubstitution("substitution images must be nonzero")
    if x.is_zero():
        return ZERO
    cache_r: dict[int, Scalar] = {}
    cache_s: dict[int, Scalar] = {}

    def pr(k: int) -> Scalar:
        if k not in cache_r:
            cache_r[k] = image_r ** k
        return cache_r[k]

    def ps(k: int) -> Scalar:
        if k not in cache_s:
            cache_s[k] = image_s ** k
        return cache_s[k]

    num = _sub_poly(x.num, pr, ps)
    den = _sub_poly(x.den, pr, ps)
    if den.is_zero():
        raise DivisionByZero("denominator vanishes under substitution")
    return num / den * pr(x.shift[0]) * ps(x.shift[1])


def from_terms(terms: Iterable[tuple[int, int, int]]) -> Scalar:
    """Build a Laurent polynomial from ``(a, b, coeff)`` triples (negative exponents allowed)."""
    total = ZERO
    for a, b, c in terms:
        total = total + monomial(a, b, c)
    return total
