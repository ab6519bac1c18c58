"""Exact rational-arithmetic verification of the linear-algebra layer: Gram
matrices of the six-dimensional quadratic space of pairs of binary quadratic
forms, hyperbolic basis changes, the embedding of the Iwasawa-parametrized
group into the orthogonal similitude group, unipotent block matrices, the
invariant/character covariance, and the block factorization identities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

F = Fraction
_HALF = F(1, 2)


# ---------------------------------------------------------------------------
# exact matrices


class RationalMatrix:
    """Immutable square matrix over the rationals."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(F(x) for x in row) for row in rows)
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise DomainError("matrix must be square and nonempty")

    @property
    def n(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        return RationalMatrix(
            [[F(int(i == j)) for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def diagonal(entries) -> "RationalMatrix":
        entries = [F(x) for x in entries]
        n = len(entries)
        return RationalMatrix(
            [[entries[i] if i == j else F(0) for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def block_diag(*blocks: "RationalMatrix") -> "RationalMatrix":
        n = sum(b.n for b in blocks)
        rows = [[F(0)] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.n):
                for j in range(b.n):
                    rows[off + i][off + j] = b.rows[i][j]
            off += b.n
        return RationalMatrix(rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.n != other.n:
            raise DomainError("dimension mismatch")
        n = self.n
        ocols = list(zip(*other.rows))
        return RationalMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in ocols]
                for row in self.rows
            ]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in r] for r in self.rows]})"

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.rows)))

    def scale(self, c) -> "RationalMatrix":
        c = F(c)
        return RationalMatrix([[c * x for x in row] for row in self.rows])

    def apply(self, vec):
        if len(vec) != self.n:
            raise DomainError("dimension mismatch")
        vec = [F(x) for x in vec]
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def det(self) -> Fraction:
        m = [list(r) for r in self.rows]
        n = self.n
        out = F(1)
        for i in range(n):
            piv = next((k for k in range(i, n) if m[k][i] != 0), None)
            if piv is None:
                return F(0)
            if piv != i:
                m[i], m[piv] = m[piv], m[i]
                out = -out
            out *= m[i][i]
            inv = 1 / m[i][i]
            for k in range(i + 1, n):
                if m[k][i]:
                    factor = m[k][i] * inv
                    for j in range(i, n):
                        m[k][j] -= factor * m[i][j]
        return out

    def inverse(self) -> "RationalMatrix":
        n = self.n
        m = [list(r) + [F(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        for i in range(n):
            piv = next((k for k in range(i, n) if m[k][i] != 0), None)
            if piv is None:
                raise DomainError("matrix is singular")
            m[i], m[piv] = m[piv], m[i]
            inv = 1 / m[i][i]
            m[i] = [x * inv for x in m[i]]
            for k in range(n):
                if k != i and m[k][i]:
                    factor = m[k][i]
                    m[k] = [a - factor * b for a, b in zip(m[k], m[i])]
        return RationalMatrix([row[n:] for row in m])


HYPERBOLIC_BLOCK = RationalMatrix([[0, 1], [1, 0]])


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    detail: str = ""


# ---------------------------------------------------------------------------
# Gram matrices and the hyperbolic basis change


def gram_matrix(which) -> RationalMatrix:
    """The ambient 6x6 Gram matrix, or the hyperbolic block form J_i."""
    if which == "ambient":
        return RationalMatrix(
            [
                [0, 0, 1, 0, 0, 0],
                [0, -_HALF, 0, 0, 0, 0],
                [1, 0, 0, 0, 0, 0],
                [0, 0, 0, 0, 0, -1],
                [0, 0, 0, 0, _HALF, 0],
                [0, 0, 0, -1, 0, 0],
            ]
        )
    if which in (1, 2, 3, 4):
        return RationalMatrix.block_diag(*([HYPERBOLIC_BLOCK] * which))
    raise DomainError("gram_matrix expects 1..4 or 'ambient'")


def ambient_quadratic_form(x) -> Fraction:
    """Q(x) = x^t J x / 2 in the ambient coordinates."""
    J = gram_matrix("ambient")
    x = [F(v) for v in x]
    return sum(a * b for a, b in zip(x, J.apply(x))) / 2


def basis_change_matrix() -> RationalMatrix:
    """Ambient coordinates from hyperbolic ones, coordinate order
    (x1, x3), (x2, x5), (x4, x6) with (x2, x5) = (u - v, u + v) and
    (x4, x6) = (u, -v)."""
    return RationalMatrix(
        [
            # columns: z1..z6 = x1, x3, u, v, u', v'
            [1, 0, 0, 0, 0, 0],  # x1 = z1
            [0, 0, 1, -1, 0, 0],  # x2 = u - v
            [0, 1, 0, 0, 0, 0],  # x3 = z2
            [0, 0, 0, 0, 1, 0],  # x4 = u'
            [0, 0, 1, 1, 0, 0],  # x5 = u + v
            [0, 0, 0, 0, 0, -1],  # x6 = -v'
        ]
    )


def basis_change_check(trials: int = 20, seed: int = 0) -> CheckReport:
    """C^t J C = diag(J1, J1, J1) exactly, plus quadratic-form spot checks."""
    J = gram_matrix("ambient")
    C = basis_change_matrix()
    target = gram_matrix(3)
    got = C.T @ J @ C
    if got != target:
        diff = next(
            (i, j)
            for i in range(6)
            for j in range(6)
            if got.rows[i][j] != target.rows[i][j]
        )
        return CheckReport("basis_change", False, f"mismatch at entry {diff}")
    rng = random.Random(seed)
    for _ in range(trials):
        x = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(6)]
        q = ambient_quadratic_form(x)
        expect = x[0] * x[2] - x[1] ** 2 / 4 + x[4] ** 2 / 4 - x[3] * x[5]
        if q != expect:
            return CheckReport("basis_change", False, f"Q mismatch at {x}")
    if C.det() ** 2 * J.det() != target.det():
        return CheckReport("basis_change", False, "determinant identity failed")
    return CheckReport("basis_change", True)


# ---------------------------------------------------------------------------
# the Iwasawa-parametrized group and its orthogonal embedding


@dataclass(frozen=True)
class BPlusElement:
    """Iwasawa coordinates (mu, t, s, u, v): diagonal scalar, two diagonal
    parameters, two unipotent parameters; the diagonal data must be positive.
    """

    mu: Fraction
    t_left: Fraction
    t_right: Fraction
    u_left: Fraction
    u_right: Fraction

    def __post_init__(self):
        for name in ("mu", "t_left", "t_right"):
            val = getattr(self, name)
            if not val > 0:
                raise DomainError(f"{name} must be positive")

    @staticmethod
    def make(mu, t, s, u, v) -> "BPlusElement":
        return BPlusElement(F(mu), F(t), F(s), F(u), F(v))

    @staticmethod
    def identity() -> "BPlusElement":
        return BPlusElement.make(1, 1, 1, 0, 0)

    def chi1(self) -> Fraction:
        return self.mu**2 * self.t_left**2

    def chi2(self) -> Fraction:
        return self.mu**2 * self.t_right**2

    def chi(self) -> Fraction:
        return self.mu**4

    def compose(self, other: "BPlusElement") -> "BPlusElement":
        """Group product in d*a*n order: the unipotent parameter of the left
        factor is conjugated through the right diagonal part."""
        return BPlusElement(
            self.mu * other.mu,
            self.t_left * other.t_left,
            self.t_right * other.t_right,
            other.t_left**2 * self.u_left + other.u_left,
            other.t_right**2 * self.u_right + other.u_right,
        )


def iota_diagonal_scalar(mu) -> RationalMatrix:
    return RationalMatrix.identity(6).scale(F(mu) ** 2)


def iota_diagonal(t, s) -> RationalMatrix:
    t, s = F(t), F(s)
    return RationalMatrix.diagonal([1, 1, t**2, t**-2, s**2, s**-2])


def iota_unipotent(u, v) -> RationalMatrix:
    u, v = F(u), F(v)
    return RationalMatrix(
        [
            [1, 0, u, 0, v, 0],
            [0, 1, -u, 0, v, 0],
            [0, 0, 1, 0, 0, 0],
            [u, -u, u * u, 1, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [-v, -v, 0, 0, -v * v, 1],
        ]
    )


def iota_embed(h: BPlusElement) -> RationalMatrix:
    """The 6x6 image of h, assembled as scalar * diagonal * unipotent."""
    return (
        iota_diagonal_scalar(h.mu)
        @ iota_diagonal(h.t_left, h.t_right)
        @ iota_unipotent(h.u_left, h.u_right)
    )


def similitude_norm(mat: RationalMatrix) -> Fraction:
    """lambda with mat^t J3 mat = lambda J3; raises if mat is no similitude."""
    J = gram_matrix(3)
    got = mat.T @ J @ mat
    lam = None
    for i in range(6):
        for j in range(6):
            if J.rows[i][j] != 0:
                cand = got.rows[i][j] / J.rows[i][j]
                if lam is None:
                    lam = cand
                elif lam != cand:
                    raise DomainError("not a similitude of J3")
            elif got.rows[i][j] != 0:
                raise DomainError("not a similitude of J3")
    return lam


def _random_element(rng: random.Random) -> BPlusElement:
    def pos():
        return F(rng.randint(1, 10), rng.randint(1, 10))

    def rat():
        return F(rng.randint(-10, 10), rng.randint(1, 10))

    return BPlusElement(pos(), pos(), pos(), rat(), rat())


def similitude_check(trials: int = 100, seed: int = 0) -> CheckReport:
    """iota(h)^t J3 iota(h) = mu^4 J3 and iota(h1 h2) = iota(h1) iota(h2)."""
    J = gram_matrix(3)
    rng = random.Random(seed)
    ident = BPlusElement.identity()
    if iota_embed(ident) != RationalMatrix.identity(6):
        return CheckReport("similitude", False, "identity does not embed to I")
    for k in range(trials):
        h = _random_element(rng)
        m = iota_embed(h)
        if m.T @ J @ m != J.scale(h.chi()):
            return CheckReport("similitude", False, f"similitude failed at trial {k}")
        if similitude_norm(m) != h.chi():
            return CheckReport("similitude", False, f"norm mismatch at trial {k}")
        h2 = _random_element(rng)
        if iota_embed(h.compose(h2)) != m @ iota_embed(h2):
            return CheckReport("similitude", False, f"homomorphism failed at trial {k}")
    return CheckReport("similitude", True)


# ---------------------------------------------------------------------------
# unipotent block matrices


def hyperbolic_quadratic_form(x) -> Fraction:
    """Q_i(x) = x^t J_i x / 2 on the hyperbolic block coordinates."""
    x = [F(v) for v in x]
    if len(x) % 2:
        raise DomainError("hyperbolic coordinates come in pairs")
    return sum(x[2 * k] * x[2 * k + 1] for k in range(len(x) // 2))


def unipotent_u(i: int, x) -> RationalMatrix:
    """The (2i+2)-square block matrix [[I, J_i x, 0], [0, 1, 0],
    [-x^t, -Q_i(x), 1]] over the hyperbolic basis."""
    if i not in (1, 2, 3):
        raise DomainError("i must be 1..3")
    x = [F(v) for v in x]
    if len(x) != 2 * i:
        raise DomainError(f"x must have dimension {2 * i}")
    J = gram_matrix(i)
    jx = J.apply(x)
    n = 2 * i + 2
    rows = [[F(0)] * n for _ in range(n)]
    for k in range(2 * i):
        rows[k][k] = F(1)
        rows[k][2 * i] = jx[k]
        rows[2 * i + 1][k] = -x[k]
    rows[2 * i][2 * i] = F(1)
    rows[2 * i + 1][2 * i] = -hyperbolic_quadratic_form(x)
    rows[2 * i + 1][2 * i + 1] = F(1)
    return RationalMatrix(rows)


def unipotent_check(trials: int = 100, seed: int = 0) -> CheckReport:
    """Group law u(x) u(y) = u(x+y) and preservation of J_{i+1}."""
    rng = random.Random(seed)
    for k in range(trials):
        i = rng.choice((1, 2, 3))
        x = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(2 * i)]
        y = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(2 * i)]
        ux, uy = unipotent_u(i, x), unipotent_u(i, y)
        if ux @ uy != unipotent_u(i, [a + b for a, b in zip(x, y)]):
            return CheckReport("unipotent", False, f"group law failed at trial {k}")
        J_next = gram_matrix(i + 1)
        if ux.T @ J_next @ ux != J_next:
            return CheckReport("unipotent", False, f"J preservation failed at trial {k}")
        if unipotent_u(i, [F(0)] * (2 * i)) != RationalMatrix.identity(2 * i + 2):
            return CheckReport("unipotent", False, "u(0) is not the identity")
    return CheckReport("unipotent", True)


# ---------------------------------------------------------------------------
# quadric points and invariant covariance


@dataclass(frozen=True)
class QuadricPoint:
    """A pair of binary quadratic forms in symmetric-matrix entries
    (x1, x2; x2, x3) and (y1, y2; y2, y3)."""

    x1: Fraction
    x2: Fraction
    x3: Fraction
    y1: Fraction
    y2: Fraction
    y3: Fraction

    @staticmethod
    def make(x1, x2, x3, y1, y2, y3) -> "QuadricPoint":
        return QuadricPoint(F(x1), F(x2), F(x3), F(y1), F(y2), F(y3))

    def p1(self) -> Fraction:
        return self.x1

    def p2(self) -> Fraction:
        return self.y1

    def p(self) -> Fraction:
        return 4 * (self.x2**2 - self.x1 * self.x3)

    def on_quadric(self) -> bool:
        return self.x2**2 - self.x1 * self.x3 == self.y2**2 - self.y1 * self.y3

    def is_singular(self) -> bool:
        return self.p1() == 0 or self.p2() == 0 or self.p() == 0

    def ambient(self):
        """Coefficient coordinates (x1, 2*x2, x3, y1, 2*y2, y3)."""
        return (
            self.x1,
            2 * self.x2,
            self.x3,
            self.y1,
            2 * self.y2,
            self.y3,
        )

    @staticmethod
    def from_ambient(vec) -> "QuadricPoint":
        v = [F(x) for x in vec]
        return QuadricPoint(v[0], v[1] / 2, v[2], v[3], v[4] / 2, v[5])


def _ambient_to_filtration() -> RationalMatrix:
    # filtration order: hyperbolic pair from (x2, x5), then (x1, x3),
    # then (x4, -x6); this is the basis of the displayed embedding images
    return RationalMatrix(
        [
            [0, _HALF, 0, 0, _HALF, 0],  # (x2 + x5)/2
            [0, -_HALF, 0, 0, _HALF, 0],  # (x5 - x2)/2
            [1, 0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, -1],
        ]
    )


_TO_FILT = _ambient_to_filtration()
_FROM_FILT = _TO_FILT.inverse()


def act(h: BPlusElement, v: QuadricPoint) -> QuadricPoint:
    """Apply the embedded group element to a quadric point."""
    w = _TO_FILT.apply(v.ambient())
    w = iota_embed(h).apply(w)
    return QuadricPoint.from_ambient(_FROM_FILT.apply(w))


def random_quadric_point(rng: random.Random) -> QuadricPoint:
    """A random rational point with equal discriminants and y1 != 0."""
    while True:
        x1, x2, x3, y1, y2 = (
            F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(5)
        )
        if x1 == 0 or y1 == 0:
            continue
        disc = x2**2 - x1 * x3
        y3 = (y2**2 - disc) / y1
        pt = QuadricPoint(x1, x2, x3, y1, y2, y3)
        if not pt.is_singular():
            return pt


def invariant_character_check(trials: int = 100, seed: int = 0) -> CheckReport:
    """P1, P2, P transform by chi1, chi2, chi; the quadric is preserved."""
    rng = random.Random(seed)
    ident = BPlusElement.identity()
    probe = QuadricPoint.make(1, 0, -1, 1, 0, -1)
    moved = act(ident, probe)
    if moved != probe:
        return CheckReport("invariant_character", False, "identity moved a point")
    for k in range(trials):
        h = _random_element(rng)
        v = random_quadric_point(rng)
        hv = act(h, v)
        if not hv.on_quadric():
            return CheckReport(
                "invariant_character", False, f"quadric not preserved at trial {k}"
            )
        if hv.p1() != h.chi1() * v.p1():
            return CheckReport("invariant_character", False, f"P1 failed at trial {k}")
        if hv.p2() != h.chi2() * v.p2():
            return CheckReport("invariant_character", False, f"P2 failed at trial {k}")
        if hv.p() != h.chi() * v.p():
            return CheckReport("invariant_character", False, f"P failed at trial {k}")
    return CheckReport("invariant_character", True)


def singular_set_invariance_check(trials: int = 100, seed: int = 0) -> CheckReport:
    rng = random.Random(seed)
    for k in range(trials):
        h = _random_element(rng)
        v = random_quadric_point(rng)
        if act(h, v).is_singular() != v.is_singular():
            return CheckReport("singular_set", False, f"failed at trial {k}")
        # a singular representative: first invariant vanishes
        w = QuadricPoint.make(0, 1, rng.randint(-5, 5), 1, 1, 1 - rng.randint(-3, 3))
        w = QuadricPoint.make(0, w.x2, w.x3, w.y1, w.y2, (w.y2**2 - w.x2**2) / w.y1)
        if not act(h, w).is_singular():
            return CheckReport("singular_set", False, f"singular image lost at trial {k}")
    return CheckReport("singular_set", True)


# ---------------------------------------------------------------------------
# the binary-quadratic-form representation of 2x2 matrices


def rho_bqf(g) -> RationalMatrix:
    """The 3x3 matrix of the substitution action on coefficient vectors of
    binary quadratic forms, for g = [[a, b], [c, d]]."""
    (a, b), (c, d) = ((F(x) for x in row) for row in g)
    return RationalMatrix(
        [
            [a * a, a * b, b * b],
            [2 * a * c, a * d + b * c, 2 * b * d],
            [c * c, c * d, d * d],
        ]
    )


def bqf_discriminant(x) -> Fraction:
    x = [F(v) for v in x]
    return x[1] ** 2 - 4 * x[0] * x[2]


def rho_bqf_check(trials: int = 50, seed: int = 0) -> CheckReport:
    """Identity, diagonal specialization, multiplicativity and discriminant
    covariance of the representation."""
    if rho_bqf(((1, 0), (0, 1))) != RationalMatrix.identity(3):
        return CheckReport("rho_bqf", False, "identity fails")
    rng = random.Random(seed)
    for k in range(trials):
        a, d = (F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(2))
        if rho_bqf(((a, 0), (0, d))) != RationalMatrix.diagonal([a * a, a * d, d * d]):
            return CheckReport("rho_bqf", False, f"diagonal form fails at trial {k}")

        def rmat():
            return (
                (F(rng.randint(-5, 5), rng.randint(1, 5)), F(rng.randint(-5, 5), rng.randint(1, 5))),
                (F(rng.randint(-5, 5), rng.randint(1, 5)), F(rng.randint(-5, 5), rng.randint(1, 5))),
            )

        g1, g2 = rmat(), rmat()
        prod = (
            (
                g1[0][0] * g2[0][0] + g1[0][1] * g2[1][0],
                g1[0][0] * g2[0][1] + g1[0][1] * g2[1][1],
            ),
            (
                g1[1][0] * g2[0][0] + g1[1][1] * g2[1][0],
                g1[1][0] * g2[0][1] + g1[1][1] * g2[1][1],
            ),
        )
        if rho_bqf(prod) != rho_bqf(g1) @ rho_bqf(g2):
            return CheckReport("rho_bqf", False, f"multiplicativity fails at trial {k}")
        x = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)]
        detg = g1[0][0] * g1[1][1] - g1[0][1] * g1[1][0]
        if bqf_discriminant(rho_bqf(g1).apply(x)) != detg**2 * bqf_discriminant(x):
            return CheckReport("rho_bqf", False, f"disc covariance fails at trial {k}")
    return CheckReport("rho_bqf", True)


# ---------------------------------------------------------------------------
# block factorization identities


def _corner_swap(n_inner: int) -> RationalMatrix:
    """diag(I_{n_inner}, antidiag swap of the last two coordinates)."""
    return RationalMatrix.block_diag(
        RationalMatrix.identity(n_inner), HYPERBOLIC_BLOCK
    )


def _extend(h: RationalMatrix, top, bottom) -> RationalMatrix:
    return RationalMatrix.block_diag(
        h, RationalMatrix.diagonal([top]), RationalMatrix.diagonal([bottom])
    )


def lemma_factorization_check(trials: int = 100, seed: int = 0) -> CheckReport:
    """The three block identities used to commute the symplectic swap past
    similitude, diagonal and central elements; exact on random data."""
    rng = random.Random(seed)
    for k in range(trials):
        # similitude element with known norm
        h = iota_embed(_random_element(rng))
        lam = similitude_norm(h)
        n = h.n
        swap = _corner_swap(n)
        lhs = _extend(h, lam, F(1)) @ swap
        rhs = (swap @ _extend(h.scale(1 / lam), 1 / lam, F(1))).scale(lam)
        if lhs != rhs:
            return CheckReport("lemma_factorization", False, f"swap identity, trial {k}")

        t = F(rng.randint(1, 9), rng.randint(1, 9))
        for i in (1, 2, 3):
            m = 2 * i
            ident = RationalMatrix.identity(m)
            # central element factorization
            center = RationalMatrix.identity(m + 2).scale(t)
            first = _extend(ident, 1 / t, t)
            second = _extend(ident.scale(t), t * t, F(1))
            if first @ second != center:
                return CheckReport(
                    "lemma_factorization", False, f"central identity, i={i}, trial {k}"
                )
            # diagonal-through-swap factorization
            swp = _corner_swap(m)
            lhs2 = swp @ _extend(ident, t, 1 / t)
            rhs2 = _extend(ident.scale(1 / t), t**-2, F(1)).scale(t) @ swp
            if lhs2 != rhs2:
                return CheckReport(
                    "lemma_factorization", False, f"diagonal identity, i={i}, trial {k}"
                )
        if t == 1 and k == 0:
            pass  # degenerate case collapses to identity = identity
    return CheckReport("lemma_factorization", True)


def verify_all(trials: int = 100, seed: int = 0) -> list[CheckReport]:
    """Run every exact identity check with a shared seed."""
    return [
        basis_change_check(min(trials, 20), seed),
        similitude_check(trials, seed),
        unipotent_check(trials, seed),
        invariant_character_check(trials, seed),
        singular_set_invariance_check(trials, seed),
        rho_bqf_check(min(trials, 50), seed),
        lemma_factorization_check(trials, seed),
    ]
