"""How many square roots does n have modulo m?

The count A(m, n) = #{x mod m : x^2 = n (mod m)} is the arithmetic atom of
everything else in this package.  This script shows its local structure:
multiplicativity over prime powers, Hensel stabilization at odd primes, the
case table at 2, and the exact agreement with a brute-force residue scan.
"""

import numpy as np

from quadmds.arith import (
    count_sqrt_mod,
    count_sqrt_mod_bruteforce,
    factorize,
    sqrt_count,
)

print("A small table of A(m, n):")
header = "m\\n " + "".join(f"{n:4d}" for n in range(10))
print(header)
for m in (1, 2, 3, 4, 5, 8, 9, 12, 16):
    row = "".join(f"{sqrt_count(m, n):4d}" for n in range(10))
    print(f"{m:3d} {row}")

print()
print("Multiplicativity: A(m1 m2, n) = A(m1, n) A(m2, n) for coprime moduli.")
m1, m2, n = 8, 9, 1
print(f"  A({m1 * m2}, {n}) = {sqrt_count(m1 * m2, n)}"
      f" = A({m1}, {n}) * A({m2}, {n}) = {sqrt_count(m1, n)} * {sqrt_count(m2, n)}")

print()
print("Hensel stabilization at an odd prime p with p not dividing n:")
p, n = 7, 2
for e in range(1, 6):
    print(f"  A({p}^{e}, {n}) = {sqrt_count(p**e, n)}")
print("  (constant in the exponent, as lifting predicts)")

print()
print("The prime 2 is different; squares mod 8 are only {0, 1, 4}:")
for n in range(8):
    print(f"  A(8, {n}) = {sqrt_count(8, n)}")

print()
print("Residues 2, 3 mod 4 never carry solutions modulo 4m:")
print("  A(4m, D) for D = 2, 3 and m <= 6:",
      [(sqrt_count(4 * m, 2), sqrt_count(4 * m, 3)) for m in range(1, 7)])

print()
print("Exact agreement with the brute-force scan on a random sample:")
rng = np.random.default_rng(7)
bad = 0
for _ in range(500):
    m = int(rng.integers(1, 3000))
    n = int(rng.integers(-10**6, 10**6))
    fast = count_sqrt_mod(m, n).count
    slow = count_sqrt_mod_bruteforce(m, n).count
    bad += fast != slow
print(f"  500 random (m, n): {500 - bad} exact matches, {bad} mismatches")

print()
big = 2**61 - 1
print(f"Large inputs stay exact: factorize({big}) = {list(factorize(big))}")
print(f"A({big}, 4) = {sqrt_count(big, 4)}  (2^61 - 1 is prime, 4 is a square)")
