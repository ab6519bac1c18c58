"""The finite group of affine transformations of (s1, s2, w)-space generated
by the three functional-equation involutions

    sigma1: (s1, s2, w) -> (1 - s1, s2, s1 + w - 1/2)
    sigma2: (s1, s2, w) -> (s1, 1 - s2, s2 + w - 1/2)
    sigma3: (s1, s2, w) -> (s1 + w - 1/2, s2 + w - 1/2, 1 - w)

All group computation is exact over the rationals; complex arithmetic enters
only when a map is applied to a numeric point.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, InconsistencyError

Rat = Fraction
_HALF = Fraction(1, 2)

WORD_SEARCH_CAP = 12
CLOSURE_CAP = 10_000


@dataclass(frozen=True)
class SpectralPoint:
    """A point (s1, s2, w); components may be complex or exact Fractions."""

    s1: complex | Fraction
    s2: complex | Fraction
    w: complex | Fraction

    def as_tuple(self):
        return (self.s1, self.s2, self.w)


@dataclass(frozen=True)
class AffineMap3:
    """x -> linear @ x + shift with exact rational entries."""

    linear: tuple[tuple[Fraction, ...], ...]
    shift: tuple[Fraction, ...]

    @staticmethod
    def identity() -> "AffineMap3":
        one, zero = Fraction(1), Fraction(0)
        rows = tuple(
            tuple(one if i == j else zero for j in range(3)) for i in range(3)
        )
        return AffineMap3(rows, (zero, zero, zero))

    @staticmethod
    def from_rows(rows, shift) -> "AffineMap3":
        lin = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if len(lin) != 3 or any(len(r) != 3 for r in lin):
            raise DomainError("linear part must be 3x3")
        sh = tuple(Fraction(x) for x in shift)
        if len(sh) != 3:
            raise DomainError("shift must have 3 components")
        return AffineMap3(lin, sh)

    def compose(self, other: "AffineMap3") -> "AffineMap3":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        a, b = self.linear, other.linear
        lin = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
            for i in range(3)
        )
        sh = tuple(
            sum(a[i][k] * other.shift[k] for k in range(3)) + self.shift[i]
            for i in range(3)
        )
        return AffineMap3(lin, sh)

    def __call__(self, p: SpectralPoint) -> SpectralPoint:
        return apply(self, p)

    def order(self) -> int:
        acc = self
        ident = AffineMap3.identity()
        for k in range(1, 64):
            if acc == ident:
                return k
            acc = acc.compose(self)
        raise InconsistencyError("element order exceeds 63; not in a small group")


def generators() -> tuple[AffineMap3, AffineMap3, AffineMap3]:
    """The three involutions (sigma1, sigma2, sigma3)."""
    s1 = AffineMap3.from_rows(
        [[-1, 0, 0], [0, 1, 0], [1, 0, 1]], [1, 0, -_HALF]
    )
    s2 = AffineMap3.from_rows(
        [[1, 0, 0], [0, -1, 0], [0, 1, 1]], [0, 1, -_HALF]
    )
    s3 = AffineMap3.from_rows(
        [[1, 0, 1], [0, 1, 1], [0, 0, -1]], [-_HALF, -_HALF, 1]
    )
    return (s1, s2, s3)


def w_reflection() -> AffineMap3:
    """The map (s1, s2, w) -> (s1, s2, 2 - s1 - s2 - w)."""
    return AffineMap3.from_rows(
        [[1, 0, 0], [0, 1, 0], [-1, -1, -1]], [0, 0, 2]
    )


def s_swap() -> AffineMap3:
    """The coefficient symmetry (s1, s2, w) -> (s2, s1, w).

    Not an element of the generated group; it is a symmetry of the series
    because the coefficients are symmetric under m <-> n.
    """
    return AffineMap3.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]], [0, 0, 0])


def w_reflection_realization() -> tuple[tuple[int, ...], AffineMap3]:
    """The group element realizing the w-reflection functional equation.

    The literal map w_reflection() fixes s1 and s2 and lies outside the
    24-element group (exact exhaustive check).  The closure does contain
    g: (s1, s2, w) -> (s2, s1, 2 - s1 - s2 - w), and s_swap() o g equals
    w_reflection() exactly; combined with the m <-> n symmetry of the
    coefficients this is the w-reflection equation of the series.
    Returns (word, g).
    """
    target = s_swap().compose(w_reflection())
    word = find_word(target)
    if word is None:
        raise InconsistencyError("w-reflection realization missing from closure")
    return word, target


def apply(map3: AffineMap3, p: SpectralPoint) -> SpectralPoint:
    """linear @ p + shift, preserving exact arithmetic on Fraction inputs."""
    vec = p.as_tuple()
    exact = all(isinstance(x, Fraction) for x in vec)
    out = []
    for i in range(3):
        acc = Fraction(0) if exact else 0j
        for j in range(3):
            coef = map3.linear[i][j]
            acc += coef * vec[j] if exact else float(coef) * complex(vec[j])
        acc += map3.shift[i] if exact else complex(float(map3.shift[i]))
        out.append(acc)
    return SpectralPoint(out[0], out[1], out[2])


@lru_cache(maxsize=1)
def group_closure() -> tuple[AffineMap3, ...]:
    """Breadth-first closure of the three generators under composition."""
    gens = generators()
    ident = AffineMap3.identity()
    seen = {ident: ()}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for idx, s in enumerate(gens, start=1):
            h = s.compose(g)
            if h not in seen:
                if len(seen) >= CLOSURE_CAP:
                    raise InconsistencyError("closure exceeded the element cap")
                seen[h] = (idx,) + seen[g]
                queue.append(h)
    # stable order: by word length, then by generator word
    items = sorted(seen.items(), key=lambda kv: (len(kv[1]), kv[1]))
    return tuple(g for g, _ in items)


@lru_cache(maxsize=1)
def _closure_words() -> dict[AffineMap3, tuple[int, ...]]:
    gens = generators()
    ident = AffineMap3.identity()
    seen = {ident: ()}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        word = seen[g]
        if len(word) >= WORD_SEARCH_CAP:
            continue
        for idx, s in enumerate(gens, start=1):
            h = s.compose(g)
            if h not in seen:
                seen[h] = (idx,) + word
                queue.append(h)
    return seen


def find_word(target: AffineMap3) -> tuple[int, ...] | None:
    """Shortest generator word (i1, ..., ik) with sigma_{i1} o ... o sigma_{ik}
    equal to target, or None if the target is outside the group."""
    return _closure_words().get(target)


def compose_word(word) -> AffineMap3:
    """Compose a generator word left to right: (i, j) is sigma_i o sigma_j."""
    gens = generators()
    acc = AffineMap3.identity()
    for idx in word:
        if idx not in (1, 2, 3):
            raise DomainError(f"generator index must be 1..3, got {idx}")
        acc = acc.compose(gens[idx - 1])
    return acc


def order_profile() -> dict[int, int]:
    """Histogram of element orders over the closure."""
    prof: dict[int, int] = {}
    for g in group_closure():
        k = g.order()
        prof[k] = prof.get(k, 0) + 1
    return dict(sorted(prof.items()))


def completed_zeta_argument(p: SpectralPoint):
    """The linear quantity 2w + s1 + s2 - 1 (exact on Fraction inputs)."""
    return 2 * p.w + p.s1 + p.s2 - 1
