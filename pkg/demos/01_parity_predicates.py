"""Closed-form verdicts for the equally gapped pentanomial family.

X^n + X^(n-s) + X^(n-2s) + X^(n-3s) + 1 over GF(2), with s even: the
discriminant of the integer lift is 1 mod 8 when n = +-1 (mod 8) and 5
otherwise, so the parity of the irreducible-factor count is decided by
n mod 8 alone -- no polynomial arithmetic at all.
"""

from pentaswan import PentShape, pent_parity, pent_poly, thm1_reducible, factor_count

print(f"{'n':>4} {'s':>3} {'n mod 8':>8} {'parity':>7} {'certified reducible':>20}")
for n, s in [(7, 2), (9, 2), (11, 2), (13, 2), (17, 4), (25, 6), (31, 8), (101, 2)]:
    shape = PentShape(n, s)
    verdict = pent_parity(shape)
    print(f"{n:>4} {s:>3} {n % 8:>8} {verdict.parity:>7} {str(thm1_reducible(shape)):>20}")

print()
print("Even parity certifies reducibility. Odd parity certifies nothing:")
for n, s in [(7, 2), (9, 2)]:
    total, parity = factor_count(pent_poly(PentShape(n, s)))
    print(f"  (n={n}, s={s}): parity {parity} -> actually {total} factor(s)")

print()
print("So roughly half of all residues (n = +-3 mod 8, plus every even n)")
print("are reducible before any factoring is attempted.")
