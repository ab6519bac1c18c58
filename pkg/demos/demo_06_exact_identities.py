"""The exact linear-algebra layer and the theta-integral identities.

Everything here is either exact rational arithmetic (Gram matrices, the
orthogonal-similitude embedding, unipotent blocks, invariant covariance,
block factorizations) or quadrature checked against Legendre closed forms.
"""

import math
from fractions import Fraction

from quadmds.quadspace import (
    BPlusElement,
    QuadricPoint,
    act,
    basis_change_check,
    gram_matrix,
    iota_embed,
    lemma_factorization_check,
    rho_bqf_check,
    similitude_check,
    similitude_norm,
    unipotent_check,
    unipotent_u,
    verify_all,
)
from quadmds.specialfn import (
    ThetaIntegralSpec,
    theta_integral,
    theta_minus_closed_form,
    theta_plus_closed_form,
)

J = gram_matrix("ambient")
print("Ambient Gram matrix (6 x 6):")
for row in J.rows:
    print("  [" + " ".join(f"{str(x):>5}" for x in row) + "]")
print(f"det = {J.det()}  (hyperbolic form J3 has det {gram_matrix(3).det()})")

print()
print(f"Basis change to three hyperbolic planes: "
      f"{'exact' if basis_change_check().passed else 'FAILED'}")

h = BPlusElement.make(Fraction(3, 2), 2, Fraction(1, 3), Fraction(1, 2), -1)
m = iota_embed(h)
print()
print(f"A group element with (mu, t, s, u, v) = (3/2, 2, 1/3, 1/2, -1):")
print(f"  similitude norm lambda = {similitude_norm(m)} = mu^4 = {h.chi()}")
print(f"  characters: chi1 = {h.chi1()}, chi2 = {h.chi2()}, chi = {h.chi()}")

v = QuadricPoint.make(1, 0, -1, 2, 1, Fraction(-3, 2))
hv = act(h, v)
print(f"  on-quadric point with P1 = {v.p1()}, P2 = {v.p2()}, P = {v.p()}")
print(f"  after acting: P1 = {hv.p1()}, P2 = {hv.p2()}, P = {hv.p()}")
print(f"  covariance: chi1*P1 = {h.chi1() * v.p1()}, chi2*P2 = {h.chi2() * v.p2()}, "
      f"chi*P = {h.chi() * v.p()}")

print()
u = unipotent_u(1, [Fraction(2, 3), Fraction(-1, 5)])
print("A unipotent block element preserves the extended hyperbolic form:")
J2 = gram_matrix(2)
print(f"  u^T J2 u == J2: {u.T @ J2 @ u == J2}")

print()
print("Seeded identity checks (100 trials each):")
for rep in verify_all(trials=100, seed=0):
    print(f"  [{'PASS' if rep.passed else 'FAIL'}] {rep.name}")

print()
print("Theta integrals against their Legendre closed forms:")
for (sign, u_val, t_val, s_val) in ((1, 0.3, 1.0, 1.4), (-1, 0.7, 1.0, 1.4)):
    spec = ThetaIntegralSpec(sign, u_val, t_val, s_val)
    got = theta_integral(spec)
    closed = (
        theta_plus_closed_form(u_val, t_val, s_val)
        if sign == 1
        else theta_minus_closed_form(u_val, t_val, s_val)
    )
    tag = "+" if sign == 1 else "-"
    print(f"  {tag} case (u={u_val}, t={t_val}, s={s_val}): quadrature {got.real:.12f}, "
          f"closed form {closed.real:.12f}, gap {abs(got - closed):.1e}")

spec = ThetaIntegralSpec(1, 0.4, 1.7, 1.0)
print(f"  s = 1 collapses to the interval length: {theta_integral(spec).real:.15f} "
      f"(pi = {math.pi:.15f})")
