"""Exact arithmetic and factorization-structure queries for polynomials over GF(2).

A polynomial b_n X^n + ... + b_1 X + b_0 over the two-element field is
stored as the nonnegative integer b_n 2^n + ... + b_1 2 + b_0, so bit i of
the integer is the coefficient of X^i.  Python integers are arbitrary
precision and XOR/shift on them operate a machine word at a time, which
makes this the packed-bitvector representation: addition is ^, and
multiplication/remainder reduce to shifts and XORs.

The public surface works with :class:`BitPoly`, a thin immutable wrapper
around the bit integer.  The module-level underscore helpers operate on raw
integers and carry the performance-sensitive inner loops; the hot paths
(modular squaring chains for irreducibility testing and distinct-degree
factor counting) exploit sparse moduli such as X^n + X^(n-s) + X^(n-2s) +
X^(n-3s) + 1, for which reduction costs a handful of shifted XORs per
degree-gap step instead of one per quotient bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "BitPoly",
    "FactorCount",
    "PentShape",
    "ShapeError",
    "derivative",
    "factor_count",
    "gcd",
    "has_factor_of_degree_le",
    "is_irreducible",
    "is_squarefree",
    "mul",
    "pent_poly",
    "pow_frobenius",
    "reciprocal",
    "rem",
    "squarefree_parts",
]


class ShapeError(ValueError):
    """Raised for (n, s) pairs outside the valid pentanomial family."""


# ---------------------------------------------------------------------------
# raw integer kernels
# ---------------------------------------------------------------------------

def _degree(a: int) -> int:
    return a.bit_length() - 1


def _mul(a: int, b: int) -> int:
    if a.bit_count() > b.bit_count():
        a, b = b, a
    c = 0
    while a:
        low = a & -a
        c ^= b << (low.bit_length() - 1)
        a ^= low
    return c


def _divmod(a: int, m: int) -> tuple[int, int]:
    if m == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dm = m.bit_length() - 1
    q = 0
    da = a.bit_length() - 1
    while da >= dm:
        q ^= 1 << (da - dm)
        a ^= m << (da - dm)
        da = a.bit_length() - 1
    return q, a


def _rem(a: int, m: int) -> int:
    if m == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dm = m.bit_length() - 1
    da = a.bit_length() - 1
    while da >= dm:
        a ^= m << (da - dm)
        da = a.bit_length() - 1
    return a


def _gcd(a: int, b: int) -> int:
    while b:
        d = a.bit_length() - b.bit_length()
        if d < 0:
            a, b = b, a
            d = -d
        a ^= b << d
    return a


def _deriv(a: int) -> int:
    # d/dX of sum X^e keeps odd e only; shifting right then masking the even
    # bit positions implements "drop even exponents, lower the rest by one".
    a >>= 1
    k = (a.bit_length() | 1) + 1
    return a & (((1 << k) - 1) // 3)


def _spread_nibble(n: int) -> int:
    r = 0
    for i in range(4):
        if (n >> i) & 1:
            r |= 1 << (2 * i)
    return r


# byte -> two little-endian bytes with the bits spread apart, so squaring a
# polynomial (p(X)^2 = p(X^2) in characteristic 2) is a bytewise table map.
_SPREAD = tuple(
    bytes((_spread_nibble(b & 15), _spread_nibble(b >> 4))) for b in range(256)
)


def _sqr(a: int) -> int:
    nb = (a.bit_length() + 7) >> 3
    return int.from_bytes(
        b"".join(map(_SPREAD.__getitem__, a.to_bytes(nb, "little"))), "little"
    )


def _sqrt(a: int) -> int:
    # inverse of _sqr for perfect squares: keep the even bit positions
    if a == 0:
        return 0
    return int(format(a, "b")[::-2][::-1], 2)


class _ReduceCtx:
    """Reduction strategy for a fixed modulus, reused across a squaring chain.

    For a sparse modulus the quotient is applied one top-gap step at a time,
    which costs (terms - 1) shifted XORs per step.  Class 2 pentanomials and
    trinomials with constant term 1 are first widened by a small cofactor to
    enlarge the top gap (values stay congruent modulo the true modulus since
    it divides the widened one); the final canonical remainder is obtained
    with :func:`_rem`.
    """

    __slots__ = ("m", "w", "dw", "mask", "shifts", "sparse")

    def __init__(self, m: int):
        self.m = m
        exps = _exponents(m)
        w = m
        if len(exps) == 5 and exps[4] == 0:
            n, a, b, c = exps[0], exps[1], exps[2], exps[3]
            if n - a == a - b == b - c:
                # equally gapped pentanomial: (X^s + 1) * m telescopes to
                # X^(n+s) + X^(n-3s) + X^s + 1, a gap of 4s at the top
                s = n - a
                w = _mul(m, (1 << s) | 1)
        elif len(exps) == 3 and exps[2] == 0:
            # trinomial X^n + X^k + 1: (X^(n-k) + 1) * m has top gap n
            n, k = exps[0], exps[1]
            w = _mul(m, (1 << (n - k)) | 1)
        wexps = _exponents(w)
        self.dw = wexps[0]
        gap = self.dw - wexps[1] if len(wexps) > 1 else self.dw
        # sparse stepping beats bitwise division when each step retires more
        # quotient bits than it spends XORs
        self.sparse = len(wexps) <= 8 and gap * 2 > len(wexps)
        self.w = w
        self.mask = (1 << self.dw) - 1
        self.shifts = tuple(wexps[1:])  # may include 0; h << 0 is h

    def reduce(self, a: int) -> int:
        if self.sparse:
            dw, mask, shifts = self.dw, self.mask, self.shifts
            h = a >> dw
            while h:
                a &= mask
                for e in shifts:
                    a ^= h << e
                h = a >> dw
            return a
        return _rem(a, self.w)

    def sqr_mod(self, a: int) -> int:
        return self.reduce(_sqr(a))

    def canonical(self, a: int) -> int:
        return _rem(a, self.m)


def _exponents(a: int) -> list[int]:
    out = []
    while a:
        d = a.bit_length() - 1
        out.append(d)
        a ^= 1 << d
    return out


def _squarefree_parts(f: int) -> list[tuple[int, int]]:
    """Squarefree decomposition f = prod g_i^e_i with the g_i squarefree
    and pairwise coprime; returns [(g_i, e_i), ...] skipping trivial g_i."""
    parts: list[tuple[int, int]] = []
    stack = [(f, 1)]
    while stack:
        f, e = stack.pop()
        if _degree(f) < 1:
            continue
        fp = _deriv(f)
        if fp == 0:
            # all exponents even: f is a perfect square
            stack.append((_sqrt(f), 2 * e))
            continue
        c = _gcd(f, fp)
        w = _divmod(f, c)[0]
        i = 1
        while w != 1:
            y = _gcd(w, c)
            fac = _divmod(w, y)[0]
            if fac != 1:
                parts.append((fac, e * i))
            w = y
            c = _divmod(c, y)[0]
            i += 1
        if c != 1:
            stack.append((_sqrt(c), 2 * e))
    return parts


def _count_factors_squarefree(g: int) -> int:
    """Number of irreducible factors of squarefree g, by distinct-degree
    splitting: at step d, gcd(X^(2^d) - X, remaining) collects the product
    of all irreducible factors of degree exactly d."""
    count = 0
    remaining = g
    ctx = _ReduceCtx(g)
    h = 2
    d = 0
    while _degree(remaining) > 0:
        if 2 * (d + 1) > _degree(remaining):
            count += 1
            break
        d += 1
        h = ctx.sqr_mod(h)
        part = _gcd(h ^ 2, remaining)
        if part != 1:
            count += _degree(part) // d
            remaining = _divmod(remaining, part)[0]
    return count


def _smallest_factor_degree_le(p: int, d_max: int) -> int | None:
    """Smallest d <= d_max such that p has an irreducible factor of degree d,
    or None.  One modular squaring and one gcd per candidate degree."""
    ctx = _ReduceCtx(p)
    h = 2
    for d in range(1, d_max + 1):
        h = ctx.sqr_mod(h)
        if _gcd(h ^ 2, p) != 1:
            return d
    return None


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


_IRRED_PREFILTER_DEPTH = 13


def _is_irreducible(p: int) -> bool:
    n = _degree(p)
    if n == 1:
        return True
    if not p & 1:
        return False  # X divides
    if not p.bit_count() & 1:
        return False  # X + 1 divides
    fp = _deriv(p)
    if fp == 0 or _gcd(p, fp) != 1:
        return False  # not squarefree
    # Rabin: irreducible iff X^(2^n) = X (mod p) and X^(2^(n/q)) - X is
    # coprime to p for every prime q | n.  The same gcd test at small d
    # doubles as a cheap factor prefilter (an irreducible p of degree n
    # passes it for every d < n).
    checks = {n // q for q in _prime_factors(n)}
    checks.update(range(1, min(_IRRED_PREFILTER_DEPTH, n - 1) + 1))
    ctx = _ReduceCtx(p)
    h = 2
    for k in range(1, n + 1):
        h = ctx.sqr_mod(h)
        if k < n and k in checks and _gcd(h ^ 2, p) != 1:
            return False
    return ctx.canonical(h) == 2


# ---------------------------------------------------------------------------
# public polynomial type
# ---------------------------------------------------------------------------

class BitPoly:
    """Immutable dense polynomial over GF(2), packed as an int bitvector."""

    __slots__ = ("bits",)

    def __init__(self, bits: int):
        if bits < 0:
            raise ValueError("coefficient bitvector must be nonnegative")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("BitPoly is immutable")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "BitPoly":
        bits = 0
        for e in exponents:
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def from_hex(cls, text: str) -> "BitPoly":
        """Parse the CLI text form: lowercase hex, first character holding
        coefficients of X^0..X^3 (little-endian nibble order)."""
        if not text or any(c not in "0123456789abcdef" for c in text):
            raise ValueError(f"not a lowercase hex polynomial: {text!r}")
        return cls(int(text[::-1], 16))

    def to_hex(self) -> str:
        return format(self.bits, "x")[::-1]

    @property
    def degree(self) -> int | float:
        """Index of the highest set coefficient; -inf for the zero polynomial."""
        return self.bits.bit_length() - 1 if self.bits else float("-inf")

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def coeff(self, i: int) -> int:
        return (self.bits >> i) & 1

    def exponents(self) -> list[int]:
        """Exponents with coefficient 1, in decreasing order."""
        return _exponents(self.bits)

    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: "BitPoly") -> "BitPoly":
        return BitPoly(self.bits ^ other.bits)

    __add__ = __xor__
    __sub__ = __xor__

    def __mul__(self, other: "BitPoly") -> "BitPoly":
        return BitPoly(_mul(self.bits, other.bits))

    def __mod__(self, other: "BitPoly") -> "BitPoly":
        return BitPoly(_rem(self.bits, other.bits))

    def __divmod__(self, other: "BitPoly") -> tuple["BitPoly", "BitPoly"]:
        q, r = _divmod(self.bits, other.bits)
        return BitPoly(q), BitPoly(r)

    def __floordiv__(self, other: "BitPoly") -> "BitPoly":
        return BitPoly(_divmod(self.bits, other.bits)[0])

    def __eq__(self, other) -> bool:
        return isinstance(other, BitPoly) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((BitPoly, self.bits))

    def __bool__(self) -> bool:
        return bool(self.bits)

    def __repr__(self) -> str:
        if self.bits == 0:
            return "BitPoly(0)"
        exps = self.exponents()
        if len(exps) > 12:
            return f"BitPoly(degree={exps[0]}, weight={len(exps)})"
        terms = "+".join("1" if e == 0 else "X" if e == 1 else f"X^{e}" for e in exps)
        return f"BitPoly({terms})"


ZERO = BitPoly(0)
ONE = BitPoly(1)
X = BitPoly(2)


class FactorCount(NamedTuple):
    """Irreducible-factor count (with multiplicity) and its parity."""

    total: int
    parity: str  # "even" | "odd"


@dataclass(frozen=True)
class PentShape:
    """Degree/gap pair (n, s) of the pentanomial X^n + X^(n-s) + X^(n-2s)
    + X^(n-3s) + 1.  Valid whenever n >= 7, s >= 1 and n > 3s, which keeps
    the five exponents distinct."""

    n: int
    s: int

    def __post_init__(self):
        if self.n < 7:
            raise ShapeError(f"n must be at least 7, got n={self.n}")
        if self.s < 1:
            raise ShapeError(f"s must be positive, got s={self.s}")
        if self.n <= 3 * self.s:
            raise ShapeError(
                f"need n > 3s for distinct exponents, got n={self.n}, s={self.s}"
            )

    @property
    def exponents(self) -> tuple[int, int, int, int, int]:
        n, s = self.n, self.s
        return (n, n - s, n - 2 * s, n - 3 * s, 0)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def pent_poly(shape: PentShape) -> BitPoly:
    """The five-term polynomial X^n + X^(n-s) + X^(n-2s) + X^(n-3s) + 1."""
    return BitPoly.from_exponents(shape.exponents)


def reciprocal(p: BitPoly) -> BitPoly:
    """X^deg(p) * p(1/X), the bit-reversal of p.  Requires p(0) = 1 so the
    degree is preserved (and the map is an involution)."""
    if not p.bits & 1:
        raise ValueError("reciprocal requires a nonzero constant term")
    return BitPoly(int(format(p.bits, "b")[::-1], 2))


def mul(a: BitPoly, b: BitPoly) -> BitPoly:
    """Product in GF(2)[X]."""
    return BitPoly(_mul(a.bits, b.bits))


def rem(a: BitPoly, m: BitPoly) -> BitPoly:
    """Remainder of a modulo m, for nonzero m."""
    return BitPoly(_rem(a.bits, m.bits))


def gcd(a: BitPoly, b: BitPoly) -> BitPoly:
    """Greatest common divisor; monic automatically over GF(2)."""
    if not a.bits and not b.bits:
        raise ValueError("gcd(0, 0) is undefined")
    return BitPoly(_gcd(a.bits, b.bits))


def derivative(p: BitPoly) -> BitPoly:
    """Formal derivative; terms of even exponent vanish in characteristic 2."""
    return BitPoly(_deriv(p.bits))


def is_squarefree(p: BitPoly) -> bool:
    """True iff gcd(p, p') = 1, for nonzero p."""
    if not p.bits:
        raise ValueError("squarefreeness of the zero polynomial is undefined")
    return _gcd(p.bits, _deriv(p.bits)) == 1


def squarefree_parts(p: BitPoly) -> list[tuple[BitPoly, int]]:
    """Decompose nonzero p as a product of squarefree, pairwise-coprime
    parts with multiplicities."""
    if not p.bits:
        raise ValueError("cannot decompose the zero polynomial")
    return [(BitPoly(g), e) for g, e in _squarefree_parts(p.bits)]


def pow_frobenius(m: BitPoly, k: int) -> BitPoly:
    """X^(2^k) reduced mod m, by k modular squarings."""
    if _degree(m.bits) < 1:
        raise ValueError("modulus must have degree at least 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    ctx = _ReduceCtx(m.bits)
    h = _rem(2, m.bits)
    for _ in range(k):
        h = ctx.sqr_mod(h)
    return BitPoly(ctx.canonical(h))


def is_irreducible(p: BitPoly) -> bool:
    """Rabin's criterion: p of degree n is irreducible over GF(2) iff
    X^(2^n) = X (mod p) and gcd(X^(2^(n/q)) - X, p) = 1 for every prime
    q dividing n."""
    if _degree(p.bits) < 1:
        raise ValueError("irreducibility needs degree at least 1")
    return _is_irreducible(p.bits)


def factor_count(p: BitPoly) -> FactorCount:
    """Count irreducible factors with multiplicity.

    Squarefree decomposition first, then distinct-degree splitting of each
    part; a degree d*k component of degree-d irreducibles contributes k.
    For squarefree p this is the plain number of irreducible factors.  The
    total weighted by degrees always equals deg(p).
    """
    if _degree(p.bits) < 1:
        raise ValueError("factor counting needs degree at least 1")
    total = sum(e * _count_factors_squarefree(g) for g, e in _squarefree_parts(p.bits))
    return FactorCount(total, "odd" if total & 1 else "even")


def has_factor_of_degree_le(p: BitPoly, d_max: int) -> bool:
    """True iff p has an irreducible factor of degree at most d_max.

    Checks gcd(X^(2^d) - X, p) for d = 1..d_max: d_max modular squarings
    plus d_max gcds.  Requires deg(p) > d_max >= 1.
    """
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    if _degree(p.bits) <= d_max:
        raise ValueError("require deg(p) > d_max")
    return _smallest_factor_degree_le(p.bits, d_max) is not None
