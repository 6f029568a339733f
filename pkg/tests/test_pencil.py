import pytest
from hypothesis import given, strategies as st

from pencil_lab.errors import (
    InvalidInput, NonRationalEigenvalue, NotJordan, NotSingleEigenvalue, NotSkewSymmetric, SizeMismatch,
)
from pencil_lab.exact import GF, Mat, Subspace, is_isotropic, perp, unit
from pencil_lab.pencil import (
    INF, ZERO, Eigenvalue, JKInvariants, JordanContext, check_standard_basis, core_mantle,
    decompose_by_eigenvalue, jk_invariants, kronecker_indices, make_pencil, normalize_to_nilpotent,
    pencil_rank, regular_samples, scramble, standard_basis, standard_basis_nilpotent, synthesize,
)

from .strategies import jk_invariants as inv_strategy

OMEGA = [[0, 1], [-1, 0]]


def inv(s):
    return JKInvariants.parse(s)


class TestConstruction:
    def test_make_pencil(self):
        assert make_pencil(Mat.zeros(2), Mat(OMEGA)).dim == 2
        with pytest.raises(NotSkewSymmetric):
            make_pencil(Mat([[0, 1], [1, 0]]), Mat(OMEGA))
        with pytest.raises(SizeMismatch):
            make_pencil(Mat([[0, 1, 0], [0, 0, 0]]), Mat(OMEGA))
        with pytest.raises(SizeMismatch):
            make_pencil(Mat.zeros(3), Mat(OMEGA))

    def test_synthesize_examples(self):
        p = synthesize(inv("J0:1"))
        assert p.A == Mat.zeros(2) and p.B == Mat(OMEGA)
        p = synthesize(inv("J2:1"))
        assert p.A == Mat([[0, 2], [-2, 0]]) and p.B == Mat(OMEGA)
        # basis e1, f0, f1: A pairs e1 with f0, B pairs e1 with f1
        p = synthesize(inv("K:1"))
        assert p.A == Mat([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
        assert p.B == Mat([[0, 0, 1], [0, 0, 0], [-1, 0, 0]])

    def test_jordan_block_recursion_operator(self):
        # e_i -> e_{i+1}, f_j -> f_{j-1}
        P = JordanContext.of(synthesize(inv("J0:3"))).P
        assert P @ unit(6, 0) == unit(6, 1) and P @ unit(6, 1) == unit(6, 2) and not any(P @ unit(6, 2))
        assert P @ unit(6, 5) == unit(6, 4) and not any(P @ unit(6, 3))

    def test_invariant_parsing(self):
        i = inv("J0:3,J0:1;K:1")
        assert i.half_sizes == (3, 1) and i.kronecker == (1,) and i.dim == 11
        assert i.describe() == "{Jordan(0,3)×1; Jordan(0,1)×1; Kronecker 1}"
        assert inv("Jinf:2,J1/2:1").eigenvalues() == [Eigenvalue("1/2"), INF]
        for bad in ["X:1", "J0", "J0:0", "K:-1", "Jz:1"]:
            with pytest.raises(InvalidInput):
                inv(bad)

    def test_scramble_deterministic(self):
        p = synthesize(inv("J0:2;K:1"))
        assert scramble(p, 5) == scramble(p, 5)
        assert p.congruent(Mat.identity(p.dim)) == p
        q, S = scramble(p, 5)
        assert q == p.congruent(S) and S.det() != 0
        assert all(-3 <= x <= 3 for r in S.rows for x in r)


class TestRankAndCore:
    @pytest.mark.parametrize("spec,rank", [("J0:1", 2), ("K:1", 2), ("K:0", 0), ("J0:2;K:1,K:0", 6)])
    def test_rank(self, spec, rank):
        assert pencil_rank(synthesize(inv(spec))) == rank

    @given(inv_strategy(8), st.integers(0, 1000))
    def test_rank_congruence_invariant(self, i, seed):
        p = synthesize(i)
        assert pencil_rank(scramble(p, seed)[0]) == pencil_rank(p) == i.rank

    def test_core_examples(self):
        K, M = core_mantle(synthesize(inv("K:1")))
        assert K == Subspace.span([unit(3, 1), unit(3, 2)]) and M == K
        K, M = core_mantle(synthesize(inv("J0:2")))
        assert K.dim == 0 and M.dim == 4
        K, M = core_mantle(synthesize(inv("J0:1;K:0")))
        assert K == Subspace.span([unit(3, 2)]) and M.dim == 3

    @given(inv_strategy(9), st.integers(0, 1000))
    def test_core_mantle_properties(self, i, seed):
        p = scramble(synthesize(i), seed)[0]
        K, M = core_mantle(p)
        assert K <= M
        assert is_isotropic(K, p.A) and is_isotropic(K, p.B)
        assert K.dim == sum(k + 1 for k in i.kronecker)
        for lam in regular_samples(p, 3):
            assert perp(K, p.form(lam)) == M

    @given(inv_strategy(9, eigenvalues=[ZERO]), st.integers(0, 100))
    def test_kronecker_indices(self, i, seed):
        assert kronecker_indices(scramble(synthesize(i), seed)[0]) == i.kronecker


class TestInvariants:
    def test_spec_example(self):
        p, _ = scramble(synthesize(inv("J0:2;K:1")), 7)
        assert jk_invariants(p) == inv("J0:2;K:1")
        assert jk_invariants(p).describe() == "{Jordan(0,2)×1; Kronecker 1}"

    @given(inv_strategy(10), st.integers(0, 10**6))
    def test_round_trip(self, i, seed):
        assert jk_invariants(scramble(synthesize(i), seed)[0]) == i

    def test_single_block_eigenvalue(self):
        assert jk_invariants(synthesize(inv("J2:1"))) == JKInvariants([(Eigenvalue(2), 1)])

    def test_irrational_spectrum(self):
        # P = B^-1 A acts on each Lagrangian half by a rotation: char poly (x^2+1)^2
        A = Mat([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
        B = Mat([[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]])
        with pytest.raises(NonRationalEigenvalue):
            jk_invariants(make_pencil(A, B))

    def test_over_prime_field(self):
        p = synthesize(inv("J0:2,J0:1"), GF(3))
        assert jk_invariants(scramble(p, 2)[0]) == inv("J0:2,J0:1")


class TestNormalization:
    def test_shifted_generator_vanishes(self):
        q = normalize_to_nilpotent(synthesize(inv("J2:1")), Eigenvalue(2))
        assert q.A == Mat.zeros(2)

    def test_infinity_swaps(self):
        p = synthesize(inv("Jinf:2"))
        q = normalize_to_nilpotent(p, INF)
        assert (q.A, q.B) == (p.B, p.A)
        assert jk_invariants(q) == inv("J0:2")

    def test_nilpotent_unchanged(self):
        p = synthesize(inv("J0:2"))
        assert normalize_to_nilpotent(p, ZERO) == p

    def test_two_eigenvalues_rejected(self):
        with pytest.raises(NotSingleEigenvalue):
            normalize_to_nilpotent(synthesize(inv("J0:1,J1:1")), ZERO)

    def test_decompose_by_eigenvalue(self):
        p = scramble(synthesize(inv("J0:1,J1:1")), 3)[0]
        parts = decompose_by_eigenvalue(p)
        assert [ev for ev, _, _ in parts] == [ZERO, Eigenvalue(1)]
        assert sum(E.ncols for _, _, E in parts) == p.dim
        (_, _, E0), (_, _, E1) = parts
        assert (E0.T @ p.A @ E1).is_zero() and (E0.T @ p.B @ E1).is_zero()

    def test_single_eigenvalue_is_one_factor(self):
        p = synthesize(inv("J3:2"))
        (ev, q, E), = decompose_by_eigenvalue(p)
        assert ev == Eigenvalue(3) and E.ncols == 4


class TestStandardBasis:
    def test_nilpotent_round_trip(self):
        p = scramble(synthesize(inv("J0:2,J0:1")), 11)[0]
        sb = standard_basis_nilpotent(JordanContext.of(p))
        assert [b.size for b in sb.layout] == [2, 1]
        assert check_standard_basis(p, sb)

    def test_standard_form_input(self):
        p = synthesize(inv("J0:2"))
        assert check_standard_basis(p, standard_basis(p))

    @given(inv_strategy(10, kronecker=False), st.integers(0, 1000))
    def test_congruence_identities(self, i, seed):
        p = scramble(synthesize(i), seed)[0]
        sb = standard_basis(p)
        assert check_standard_basis(p, sb)

    @given(st.integers(0, 1000))
    def test_chain_orthogonality(self, seed):
        p = scramble(synthesize(inv("J0:3")), seed)[0]
        ctx = JordanContext.of(p)
        v = standard_basis_nilpotent(ctx).e_vectors()[0]
        chain = [ctx.power(a) @ v for a in range(3)]
        for x in chain:
            for y in chain:
                assert sum(a * b for a, b in zip(x, ctx.B0 @ y)) == 0

    def test_kronecker_rejected(self):
        with pytest.raises(NotJordan):
            standard_basis(synthesize(inv("J0:1;K:1")))

    def test_prime_field(self):
        p = scramble(synthesize(inv("J0:2,J0:1"), GF(5)), 1)[0]
        assert check_standard_basis(p, standard_basis(p))
