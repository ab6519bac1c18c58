import random
from fractions import Fraction

import pytest

from quadmds.errors import DomainError
from quadmds.quadspace import (
    BPlusElement,
    QuadricPoint,
    RationalMatrix,
    act,
    ambient_quadratic_form,
    basis_change_check,
    basis_change_matrix,
    bqf_discriminant,
    gram_matrix,
    invariant_character_check,
    iota_diagonal,
    iota_diagonal_scalar,
    iota_embed,
    iota_unipotent,
    lemma_factorization_check,
    random_quadric_point,
    rho_bqf,
    rho_bqf_check,
    similitude_check,
    similitude_norm,
    singular_set_invariance_check,
    unipotent_check,
    unipotent_u,
    verify_all,
)

F = Fraction


class TestRationalMatrix:
    def test_matmul_associative(self):
        rng = random.Random(1)

        def rand():
            return RationalMatrix(
                [[F(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(3)] for _ in range(3)]
            )

        for _ in range(20):
            a, b, c = rand(), rand(), rand()
            assert (a @ b) @ c == a @ (b @ c)

    def test_inverse(self):
        m = RationalMatrix([[1, 2], [3, 5]])
        assert m @ m.inverse() == RationalMatrix.identity(2)

    def test_det(self):
        assert RationalMatrix([[2, 0], [0, 3]]).det() == 6
        assert RationalMatrix([[1, 2], [2, 4]]).det() == 0


class TestGramMatrices:
    def test_ambient_entries(self):
        J = gram_matrix("ambient")
        entries = {x for row in J.rows for x in row if x != 0}
        assert entries == {F(1), F(-1), F(1, 2), F(-1, 2)}

    def test_hyperbolic_block(self):
        assert gram_matrix(1) == RationalMatrix([[0, 1], [1, 0]])
        assert gram_matrix(3).n == 6

    def test_determinants(self):
        assert gram_matrix("ambient").det() == F(-1, 4)
        assert gram_matrix(3).det() == -1

    def test_quadratic_form(self):
        x = [F(1), F(2), F(3), F(4), F(5), F(6)]
        assert ambient_quadratic_form(x) == x[0] * x[2] - x[1] ** 2 / 4 + x[4] ** 2 / 4 - x[3] * x[5]


class TestBasisChange:
    def test_full_check(self):
        rep = basis_change_check()
        assert rep.passed, rep.detail

    def test_change_matrix_determinant(self):
        C = basis_change_matrix()
        assert C.det() ** 2 * gram_matrix("ambient").det() == gram_matrix(3).det()


class TestIota:
    def test_scalar_part(self):
        assert iota_diagonal_scalar(2) == RationalMatrix.identity(6).scale(4)

    def test_diagonal_part(self):
        expect = RationalMatrix.diagonal([1, 1, 4, F(1, 4), 9, F(1, 9)])
        assert iota_diagonal(2, 3) == expect

    def test_unipotent_part_pattern(self):
        m = iota_unipotent(1, 0)
        assert m.rows[0] == (1, 0, 1, 0, 0, 0)
        assert m.rows[3] == (1, -1, 1, 1, 0, 0)
        assert m.rows[5] == (0, 0, 0, 0, 0, 1)

    def test_identity_embeds_to_identity(self):
        assert iota_embed(BPlusElement.identity()) == RationalMatrix.identity(6)

    def test_similitude_and_homomorphism(self):
        rep = similitude_check(trials=100, seed=0)
        assert rep.passed, rep.detail

    def test_similitude_norm_equals_chi(self):
        rng = random.Random(9)
        for _ in range(20):
            h = BPlusElement.make(
                F(rng.randint(1, 9), rng.randint(1, 9)),
                F(rng.randint(1, 9), rng.randint(1, 9)),
                F(rng.randint(1, 9), rng.randint(1, 9)),
                F(rng.randint(-9, 9), rng.randint(1, 9)),
                F(rng.randint(-9, 9), rng.randint(1, 9)),
            )
            assert similitude_norm(iota_embed(h)) == h.chi() == h.mu**4

    def test_determinants_of_parts(self):
        assert iota_diagonal(F(3, 2), F(7, 5)).det() == 1
        assert iota_unipotent(F(2, 3), F(-1, 4)).det() == 1

    def test_positivity_enforced(self):
        with pytest.raises(DomainError):
            BPlusElement.make(-1, 1, 1, 0, 0)


class TestUnipotent:
    def test_zero_is_identity(self):
        for i in (1, 2, 3):
            assert unipotent_u(i, [0] * (2 * i)) == RationalMatrix.identity(2 * i + 2)

    def test_group_law_and_preservation(self):
        rep = unipotent_check(trials=100, seed=0)
        assert rep.passed, rep.detail

    def test_matches_displayed_embeddings(self):
        # iota_1(n_u) is u((-u, u)) and iota_2(1, n_v) is u((v, v, 0, 0))
        u = F(5, 3)
        expect4 = RationalMatrix(
            [[1, 0, u, 0], [0, 1, -u, 0], [0, 0, 1, 0], [u, -u, u * u, 1]]
        )
        assert unipotent_u(1, [-u, u]) == expect4
        v = F(-2, 7)
        m = unipotent_u(2, [v, v, 0, 0])
        assert m.rows[0] == (1, 0, 0, 0, v, 0)
        assert m.rows[5] == (-v, -v, 0, 0, -v * v, 1)


class TestInvariants:
    def test_characters(self):
        h = BPlusElement.make(2, 3, 5, F(1, 2), F(-1, 3))
        assert h.chi1() == 36 and h.chi2() == 100 and h.chi() == 16

    def test_pure_diagonal_scales_p1_by_four(self):
        h = BPlusElement.make(1, 2, 1, 0, 0)
        v = QuadricPoint.make(1, 0, -1, 1, 0, -1)
        assert act(h, v).p1() == 4 * v.p1()

    def test_covariance_100_trials(self):
        rep = invariant_character_check(trials=100, seed=0)
        assert rep.passed, rep.detail

    def test_singular_set_invariance(self):
        rep = singular_set_invariance_check(trials=100, seed=0)
        assert rep.passed, rep.detail

    def test_random_points_on_quadric(self):
        rng = random.Random(4)
        for _ in range(50):
            v = random_quadric_point(rng)
            assert v.on_quadric() and not v.is_singular()


class TestRho:
    def test_identity(self):
        assert rho_bqf(((1, 0), (0, 1))) == RationalMatrix.identity(3)

    def test_diagonal(self):
        a, d = F(2), F(3)
        assert rho_bqf(((a, 0), (0, d))) == RationalMatrix.diagonal([4, 6, 9])

    def test_substitution_semantics(self):
        # rho(g) x must be the coefficient vector of x(au + cv, bu + dv)
        g = ((F(1), F(2)), (F(3), F(4)))
        x = [F(1), F(1), F(1)]  # u^2 + uv + v^2
        a, b, c, d = F(1), F(2), F(3), F(4)
        new = rho_bqf(g).apply(x)
        # expand (au+cv)^2 + (au+cv)(bu+dv) + (bu+dv)^2
        uu = a * a + a * b + b * b
        uv = 2 * a * c + a * d + b * c + 2 * b * d
        vv = c * c + c * d + d * d
        assert new == (uu, uv, vv)

    def test_full_check(self):
        rep = rho_bqf_check(trials=50, seed=0)
        assert rep.passed, rep.detail

    def test_disc_covariance_spot(self):
        g = ((F(2), F(1)), (F(1), F(1)))
        x = [F(3), F(-1), F(2)]
        assert bqf_discriminant(rho_bqf(g).apply(x)) == bqf_discriminant(x)


class TestLemmaFactorizations:
    def test_exact_on_100_trials(self):
        rep = lemma_factorization_check(trials=100, seed=0)
        assert rep.passed, rep.detail

    def test_verify_all_passes(self):
        reports = verify_all(trials=100, seed=0)
        assert all(r.passed for r in reports), [r for r in reports if not r.passed]
        assert len(reports) == 7
