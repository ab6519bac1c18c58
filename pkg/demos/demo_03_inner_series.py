"""The inner series B(E, s) = sum_m A(4m, E) m^(-s) and its continuation.

Multiplicativity of the counts gives an Euler product; away from 2E the
local factor is (1 + chi(p) p^(-s)) / (1 - p^(-s)), so globally

    B(E, s) = zeta(s) L(s, chi_E0) / zeta(2s) * (corrections at p | 2f),

with E = E0 f^2 and exact rational-function corrections fitted from the
local counts.  The closed form is only trusted because truncated direct
summation reproduces it; this script shows both sides, then walks the
continuation into the critical strip where the direct sum no longer exists.
"""

from quadmds.lseries import (
    dirichlet_L,
    inner_value_direct,
    inner_value_euler,
    local_euler_fit,
)

print("Exact local factors at p = 3 (formal variable X = 3^(-s)):")
for E in (1, 21, 12, 45):
    fit = local_euler_fit(3, E, variant="m")
    print(f"  E={E:3d}: numerator {fit.numer}, denominator {fit.denom}")

print()
print("Euler closed form vs truncated direct sum (4 * 10^5 terms):")
print(f"{'E':>5} {'s':>10} {'euler':>22} {'direct':>22} {'rel gap':>10}")
for E in (1, 5, -4, 12, -20):
    for s in (3.0, 2.5 + 1.0j):
        eu = inner_value_euler(E, s)
        di, _ = inner_value_direct(E, s, max_terms=400_000)
        rel = abs(eu - di) / abs(di)
        print(f"{E:5d} {str(s):>10} {eu.real:22.15f} {di.real:22.15f} {rel:10.2e}")

print()
print("L-values behind the closed form:")
print(f"  L(2, chi_1)  = {dirichlet_L(2, 1).real:.15f}  (= pi^2/6)")
print(f"  L(1, chi_-4) = {dirichlet_L(1, -4).real:.15f}  (= pi/4)")
print(f"  L(2, chi_-4) = {dirichlet_L(2, -4).real:.15f}  (Catalan)")

print()
print("Continuation: B(5, s) along Re(s) from 2.0 down to 0.6 (Im s = 0.3):")
for k in range(8):
    sr = 2.0 - 1.4 * k / 7
    val = inner_value_euler(5, complex(sr, 0.3))
    print(f"  Re(s) = {sr:4.2f}: B = {val.real:+.10f} {val.imag:+.10f}i")
print("The direct sum only exists for Re(s) > 1; the closed form carries on.")
