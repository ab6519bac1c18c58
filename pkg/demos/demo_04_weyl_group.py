"""The group of functional-equation transformations.

Three involutions act on (s1, s2, w):

    sigma1: (s1, s2, w) -> (1 - s1, s2, s1 + w - 1/2)
    sigma2: (s1, s2, w) -> (s1, 1 - s2, s2 + w - 1/2)
    sigma3: (s1, s2, w) -> (s1 + w - 1/2, s2 + w - 1/2, 1 - w)

Their closure under composition is computed in exact rational arithmetic:
24 elements, the order profile of the symmetric group on four letters, and
pairwise generator orders matching a path-shaped Coxeter diagram.
"""

from fractions import Fraction

from quadmds.weyl import (
    SpectralPoint,
    completed_zeta_argument,
    compose_word,
    find_word,
    generators,
    group_closure,
    order_profile,
    s_swap,
    w_reflection,
    w_reflection_realization,
)

s1, s2, s3 = generators()
half = Fraction(1, 2)

print("Generators on the rational point (1, 1, 1):")
p = SpectralPoint(Fraction(1), Fraction(1), Fraction(1))
for name, g in (("sigma1", s1), ("sigma2", s2), ("sigma3", s3)):
    print(f"  {name}: {tuple(str(x) for x in g(p).as_tuple())}")

print()
closure = group_closure()
print(f"Closure size: {len(closure)}")
print(f"Element order profile: {order_profile()}  (1 + 9 + 8 + 6 = 24, as in S4)")
print(f"Pairwise orders: (s1 s2) -> {s1.compose(s2).order()}, "
      f"(s1 s3) -> {s1.compose(s3).order()}, (s2 s3) -> {s2.compose(s3).order()}")

center = SpectralPoint(half, half, half)
print(f"All 24 elements fix (1/2, 1/2, 1/2): "
      f"{all(g(center) == center for g in closure)}")

print()
print("The w-reflection functional equation:")
tau = w_reflection()
print(f"  literal map (s1, s2, w) -> (s1, s2, 2 - s1 - s2 - w) in the group? "
      f"{find_word(tau) is not None}")
word, g = w_reflection_realization()
print(f"  group element with that w-action: word {word}"
      f" = sigma{word[0]} o sigma{word[1]} o sigma{word[2]} o sigma{word[3]}")
probe = SpectralPoint(Fraction(3, 7), Fraction(-2, 5), Fraction(11, 3))
out = g(probe)
print(f"  it sends (3/7, -2/5, 11/3) to {tuple(str(x) for x in out.as_tuple())}")
print("  i.e. it also swaps s1 and s2; composed with the coefficient symmetry")
print(f"  swap o word == literal map exactly: {s_swap().compose(g) == tau}")
print(f"  word composes exactly: {compose_word(word) == g}")

print()
print("The zeta-prefactor argument 2w + s1 + s2 - 1 is exactly invariant")
print("under sigma1 and sigma2 (so the factored evaluation is consistent):")
val = completed_zeta_argument(probe)
print(f"  at the probe point: {val}, after sigma1: "
      f"{completed_zeta_argument(s1(probe))}, after sigma2: "
      f"{completed_zeta_argument(s2(probe))}")
