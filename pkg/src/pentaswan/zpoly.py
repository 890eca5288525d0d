"""Exact integer-polynomial machinery behind the mod-8 discriminant analysis.

Everything here is arbitrary-precision and exact: power sums of the roots
via Newton's identities (optionally reduced mod 2^k), negative-index power
sums via a truncated formal power series, resultants via the fraction-free
subresultant remainder sequence, and the polynomial discriminant reduced
mod 8 only after it has been computed exactly in Z.

An :class:`IntPoly` is a sparse list of (exponent, coefficient) pairs; the
polynomials of interest here have a handful of terms at desk-scale degrees,
and the sparse form keeps Newton's recurrence at a few multiplications per
power sum regardless of the degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .gf2poly import BitPoly

__all__ = [
    "ConsistencyError",
    "IntPoly",
    "PowerSumTable",
    "discriminant",
    "discriminant_mod8",
    "discriminant_mod8_via_derivative",
    "h_poly",
    "lift",
    "neg_power_sums",
    "power_sums",
    "resultant",
    "second_power_sums",
]


class ConsistencyError(RuntimeError):
    """An identity that must hold mathematically failed: implementation bug."""


class IntPoly:
    """Sparse polynomial over Z: (exponent, coefficient) pairs, exponents
    strictly decreasing, coefficients nonzero."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[int, int]] | Mapping[int, int]):
        if isinstance(terms, Mapping):
            terms = terms.items()
        merged: dict[int, int] = {}
        for e, c in terms:
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            merged[e] = merged.get(e, 0) + c
        self.terms: tuple[tuple[int, int], ...] = tuple(
            sorted(((e, c) for e, c in merged.items() if c), reverse=True)
        )

    @classmethod
    def from_dense(cls, coeffs: Iterable[int]) -> "IntPoly":
        """Build from a low-to-high dense coefficient list."""
        return cls((e, c) for e, c in enumerate(coeffs))

    @property
    def degree(self) -> int | float:
        return self.terms[0][0] if self.terms else float("-inf")

    @property
    def is_monic(self) -> bool:
        return bool(self.terms) and self.terms[0][1] == 1

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, e: int) -> int:
        for ee, c in self.terms:
            if ee == e:
                return c
            if ee < e:
                break
        return 0

    def constant_term(self) -> int:
        return self.terms[-1][1] if self.terms and self.terms[-1][0] == 0 else 0

    def evaluate(self, x: int) -> int:
        return sum(c * x**e for e, c in self.terms)

    def derivative(self) -> "IntPoly":
        return IntPoly((e - 1, e * c) for e, c in self.terms if e)

    def reciprocal(self) -> "IntPoly":
        """X^deg * p(1/X); needs a nonzero constant term to preserve degree."""
        if not self.constant_term():
            raise ValueError("reciprocal requires a nonzero constant term")
        n = self.terms[0][0]
        return IntPoly((n - e, c) for e, c in self.terms)

    def to_dense(self) -> list[int]:
        """Low-to-high coefficient list; [] for the zero polynomial."""
        if not self.terms:
            return []
        out = [0] * (self.terms[0][0] + 1)
        for e, c in self.terms:
            out[e] = c
        return out

    def mod2(self) -> BitPoly:
        bits = 0
        for e, c in self.terms:
            if c & 1:
                bits |= 1 << e
        return BitPoly(bits)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return IntPoly(acc)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(list(self.terms) + list(other.terms))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(list(self.terms) + [(e, -c) for e, c in other.terms])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((IntPoly, self.terms))

    def __repr__(self) -> str:
        if not self.terms:
            return "IntPoly(0)"
        if len(self.terms) > 10:
            return f"IntPoly(degree={self.terms[0][0]}, terms={len(self.terms)})"
        bits = []
        for e, c in self.terms:
            mono = "1" if e == 0 else "X" if e == 1 else f"X^{e}"
            bits.append(mono if c == 1 and e else f"{c}" if e == 0 else f"{c}*{mono}")
        return "IntPoly(" + " + ".join(bits) + ")"


def lift(p: BitPoly) -> IntPoly:
    """The 0/1-coefficient integer lift of a binary polynomial."""
    if p.is_zero():
        raise ValueError("cannot lift the zero polynomial")
    return IntPoly((e, 1) for e in p.exponents())


def h_poly(F: IntPoly) -> IntPoly:
    """n*F(X) - X*F'(X) for monic F of degree n.

    Each term c*X^e maps to c*(n-e)*X^e, so the leading term drops out; for
    the lift of an equally gapped pentanomial the result is s*X^(n-s) +
    2s*X^(n-2s) + 3s*X^(n-3s) + n.
    """
    if not F.is_monic or F.degree < 1:
        raise ValueError("h_poly requires a monic polynomial of degree >= 1")
    n = F.terms[0][0]
    return IntPoly((e, c * (n - e)) for e, c in F.terms if e != n)


@dataclass
class PowerSumTable:
    """Power sums S_m = sum of m-th powers of the roots, for m = 0..upto.

    ``modulus`` is None for exact values, else the power of two the entries
    are reduced by.
    """

    values: dict[int, int]
    modulus: int | None = None
    degree: int = field(default=0)

    def __getitem__(self, m: int) -> int:
        return self.values[m]

    def __contains__(self, m: int) -> bool:
        return m in self.values


def power_sums(F: IntPoly, upto: int, modulus: int | None = None) -> PowerSumTable:
    """Power sums of the roots of monic F via Newton's identities.

    With F = X^n + F_{n-1} X^(n-1) + ... + F_0 and S_m the sum of the m-th
    powers of the roots (with multiplicity):

        S_m = -m*F_{n-m} - sum_{i=1}^{m-1} F_{n-i} * S_{m-i}     (m <= n)
        S_m = -sum_{i=1}^{n} F_{n-i} * S_{m-i}                   (m > n)

    and S_0 = n.  Integer arithmetic throughout; when ``modulus`` is given
    (a power of two), every entry is kept reduced.
    """
    if not F.is_monic or F.degree < 1:
        raise ValueError("power sums require a monic polynomial of degree >= 1")
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    if modulus is not None and (modulus < 2 or modulus & (modulus - 1)):
        raise ValueError("modulus must be a power of two (or None for exact)")
    n = F.terms[0][0]
    # nonzero F_{n-i} as (offset i, coefficient); terms are exponent-descending,
    # so the offsets come out increasing
    offs = [(n - e, c) for e, c in F.terms if e != n]
    S = {0: n if modulus is None else n % modulus}
    for m in range(1, upto + 1):
        acc = 0
        for i, c in offs:
            if i < m:
                acc += c * S[m - i]
            elif i == m:
                acc += m * c
            else:
                break
        S[m] = -acc if modulus is None else (-acc) % modulus
    return PowerSumTable(S, modulus, n)


def second_power_sums(table: PowerSumTable, k: int) -> int:
    """T_k = sum over root pairs i < j of (a_i * a_j)^k, from the identity
    T_k = (S_k^2 - S_{2k}) / 2 on an exact table."""
    if table.modulus is not None:
        raise ValueError("pair power sums need an exact table")
    if k not in table or 2 * k not in table:
        raise ValueError(f"table must contain S_{k} and S_{2*k}")
    num = table[k] ** 2 - table[2 * k]
    if num & 1:
        raise ConsistencyError(f"S_{k}^2 - S_{2*k} is odd; power sums corrupted")
    return num // 2


def _trunc_mul(dense: list[int], terms: tuple[tuple[int, int], ...], bound: int) -> list[int]:
    # dense * sparse, truncated to degree <= bound
    out = [0] * (bound + 1)
    for e, c in terms:
        if e > bound:
            continue
        for i in range(bound + 1 - e):
            d = dense[i]
            if d:
                out[i + e] += c * d
    return out


def neg_power_sums(F: IntPoly, count: int) -> list[int]:
    """Negative-index power sums [S_-1, ..., S_-count] of the roots of F.

    Uses the power-series identity

        X*F'(X) * sum_{i>=0} (-1)^(i+1) * (F(X) - 1)^i  =  sum_{i>=1} S_-i X^i,

    valid for monic F with F(0) = 1 (all roots nonzero).  Since F - 1 has
    X-adic order >= 1, only finitely many i contribute up to degree
    ``count`` and plain truncated integer arithmetic suffices.
    """
    if not F.is_monic or F.degree < 1:
        raise ValueError("negative power sums require a monic polynomial")
    if F.constant_term() != 1:
        raise ValueError("requires constant term 1")
    if count < 1:
        raise ValueError("count must be at least 1")
    g = tuple((e, c) for e, c in F.terms if 0 < e <= count)
    order = min((e for e, _ in g), default=count + 1)
    # series = sum_{i>=0} (-1)^(i+1) g^i, truncated at degree count
    series = [0] * (count + 1)
    series[0] = -1
    power = [0] * (count + 1)
    power[0] = 1
    i = 0
    sign = 1
    while (i + 1) * order <= count:
        i += 1
        power = _trunc_mul(power, g, count)
        for j in range(i * order, count + 1):
            if power[j]:
                series[j] += sign * power[j]
        sign = -sign
    xfprime = tuple((e, e * c) for e, c in F.terms if e)
    out = _trunc_mul(series, xfprime, count)
    return out[1 : count + 1]


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------

def _content(coeffs: list[int]) -> int:
    from math import gcd as igcd

    g = 0
    for c in coeffs:
        g = igcd(g, c)
        if g == 1:
            break
    return g or 1


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # lc(b)^(deg a - deg b + 1) * a modulo b, dense low-to-high lists
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    for top in range(da, db - 1, -1):
        lead = r[top]
        for i in range(top):
            r[i] *= lb
        if lead:
            off = top - db
            for i in range(db):
                r[off + i] -= lead * b[i]
        r[top] = 0
    while r and r[-1] == 0:
        r.pop()
    return r


def _exact_div(coeffs: list[int], d: int) -> list[int]:
    out = []
    for c in coeffs:
        q, rr = divmod(c, d)
        if rr:
            raise ConsistencyError("subresultant division was not exact")
        out.append(q)
    return out


def resultant(A: IntPoly, B: IntPoly) -> int:
    """Exact resultant of A and B over Z, by the fraction-free subresultant
    pseudo-remainder sequence.

    For monic A with roots a_1..a_n (with multiplicity), this equals the
    product of B(a_i), which is what makes it an independent check on
    root-product identities.  Requires monic A of degree >= 1 and nonzero B.
    """
    if not A.is_monic or A.degree < 1:
        raise ValueError("resultant requires a monic first argument of degree >= 1")
    if B.is_zero():
        raise ValueError("resultant of the zero polynomial is not supported")
    a = A.to_dense()
    b = B.to_dense()
    sign = 1
    if len(a) < len(b):
        if ((len(a) - 1) * (len(b) - 1)) & 1:
            sign = -sign
        a, b = b, a
    if len(b) == 1:
        return sign * b[0] ** (len(a) - 1)
    # contents: res(A, B) = cont(A)^deg B * cont(B)^deg A * res(prim A, prim B)
    ca, cb = _content(a), _content(b)
    t = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    if ca != 1:
        a = [c // ca for c in a]
    if cb != 1:
        b = [c // cb for c in b]
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da & 1 and db & 1:
            sign = -sign
        r = _pseudo_rem(a, b)
        if not r:
            return 0  # nontrivial common factor
        a, b = b, _exact_div(r, g * h**delta)
        g = a[-1]
        if delta:
            num = g**delta
            h = num if h == 1 else _exact_div([num], h ** (delta - 1))[0]
        if len(b) == 1:
            break
    da = len(a) - 1
    num = b[0] ** da
    res = num if h == 1 else _exact_div([num], h ** (da - 1))[0]
    return sign * t * res


def _disc_sign(n: int) -> int:
    return -1 if (n * (n - 1) // 2) & 1 else 1


def discriminant(F: IntPoly) -> int:
    """Exact discriminant of monic F: (-1)^(n(n-1)/2) * Res(F, F')."""
    if not F.is_monic or F.degree < 2:
        raise ValueError("discriminant requires a monic polynomial of degree >= 2")
    n = F.terms[0][0]
    return _disc_sign(n) * resultant(F, F.derivative())


def discriminant_mod8(F: IntPoly) -> int:
    """Discriminant of monic F with F(0) = 1, reduced mod 8.

    Computed exactly as (-1)^(n(n-1)/2) * Res(F, n*F - X*F') and reduced at
    the end; Z/8 is not an integral domain, so no intermediate reduction is
    attempted.  The constant-term-1 hypothesis is what makes the product of
    H over the roots equal the discriminant up to that sign.
    """
    if F.constant_term() != 1:
        raise ValueError("requires constant term 1")
    if not F.is_monic or F.degree < 2:
        raise ValueError("requires a monic polynomial of degree >= 2")
    n = F.terms[0][0]
    return _disc_sign(n) * resultant(F, h_poly(F)) % 8


def discriminant_mod8_via_derivative(F: IntPoly) -> int:
    """Cross-check path: the classical Res(F, F') discriminant, mod 8."""
    return discriminant(F) % 8
