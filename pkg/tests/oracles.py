"""Independent reference implementations used only to check the library.

These deliberately take the dumbest correct route -- trial division,
dense matrix powers, Sylvester determinants, high-precision root finding --
so they share no code path with the algorithms under test.
"""

from __future__ import annotations


def poly_divmod_bits(a: int, m: int) -> tuple[int, int]:
    dm = m.bit_length() - 1
    q = 0
    da = a.bit_length() - 1
    while da >= dm:
        q ^= 1 << (da - dm)
        a ^= m << (da - dm)
        da = a.bit_length() - 1
    return q, a


def naive_factors(p: int) -> list[int]:
    """Complete factorization over GF(2) by trial division, smallest
    divisor first (which makes each found divisor irreducible).  Only
    sensible for small degrees."""
    out = []
    while p.bit_length() - 1 >= 1:
        dp = p.bit_length() - 1
        divisor = None
        d = 2
        while (d.bit_length() - 1) * 2 <= dp:
            q, r = poly_divmod_bits(p, d)
            if r == 0:
                divisor = d
                p = q
                break
            d += 1
        if divisor is None:
            out.append(p)
            break
        out.append(divisor)
    return out


def naive_has_factor_le(p: int, d_max: int) -> bool:
    """Trial division by every polynomial of degree 1..d_max."""
    for d in range(2, 1 << (d_max + 1)):
        if poly_divmod_bits(p, d)[1] == 0:
            return True
    return False


def sylvester_resultant(a: list[int], b: list[int]) -> int:
    """Resultant as the determinant of the Sylvester matrix, evaluated by
    fraction-free (Bareiss) elimination over Z.  Dense low-to-high input."""
    da, db = len(a) - 1, len(b) - 1
    if da < 0 or db < 0:
        raise ValueError("zero polynomial")
    n = da + db
    if n == 0:
        return 1
    m = [[0] * n for _ in range(n)]
    for i in range(db):
        for j, c in enumerate(reversed(a)):
            m[i][i + j] = c
    for i in range(da):
        for j, c in enumerate(reversed(b)):
            m[db + i][i + j] = c
    # Bareiss
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def companion_power_traces(coeffs: list[int], m_max: int) -> list[int]:
    """Traces of C^m for m = 0..m_max, C the companion matrix of the monic
    polynomial with dense low-to-high coefficients ``coeffs``.  The trace
    of C^m is exactly the m-th power sum of the roots."""
    assert coeffs[-1] == 1
    n = len(coeffs) - 1
    c = [[0] * n for _ in range(n)]
    for i in range(1, n):
        c[i][i - 1] = 1
    for i in range(n):
        c[i][n - 1] = -coeffs[i]
    power = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    traces = []
    for _ in range(m_max + 1):
        traces.append(sum(power[i][i] for i in range(n)))
        power = [
            [sum(power[i][k] * c[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return traces


def pair_power_sum_numeric(coeffs: list[int], k: int) -> int:
    """T_k = sum over root pairs i < j of (a_i * a_j)^k, by expanding over
    high-precision numerical roots and rounding the (provably integer)
    result.  Raises if the numerics are not clearly integral."""
    import mpmath

    mpmath.mp.dps = 80
    roots = mpmath.polyroots([mpmath.mpf(c) for c in reversed(coeffs)], maxsteps=200)
    total = mpmath.mpf(0)
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            total += (roots[i] * roots[j]) ** k
    value = mpmath.nint(mpmath.re(total))
    if abs(total - value) > mpmath.mpf("1e-20"):
        raise AssertionError(f"pair power sum not integral: {total}")
    return int(value)
