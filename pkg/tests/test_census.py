import itertools

import pytest
from hypothesis import given, strategies as st

from pencil_lab.aut import aut_algebra, random_automorphism
from pencil_lab.census import (
    build_invariant_subspace, core_of_standard, ff_enumerate_bilagrangians, ff_orbit_histogram,
    invariant_bilagrangian, invariant_subspaces,
)
from pencil_lab.errors import InvalidInput, NotSingleEigenvalueJordan, TooLarge
from pencil_lab.exact import GF, Subspace, is_isotropic, unit
from pencil_lab.pencil import JKInvariants, synthesize
from pencil_lab.subspace import is_bilagrangian

from .strategies import half_size_tuples


def inv(s):
    return JKInvariants.parse(s)


def naive_census(i, p):
    """Every RREF matrix of the right shape, kept if isotropic for both forms."""
    F = GF(p)
    pf = synthesize(i, F)
    n, k = i.dim, i.dim - i.rank // 2
    A = [[int(x) for x in r] for r in pf.A.rows]
    B = [[int(x) for x in r] for r in pf.B.rows]
    core = core_of_standard(i, F)

    def form(M, u, v):
        return sum(u[a] * M[a][b] * v[b] for a in range(n) for b in range(n)) % p

    count = 0
    for piv in itertools.combinations(range(n), k):
        slots = [(r, c) for r, pc in enumerate(piv) for c in range(pc + 1, n) if c not in piv]
        for vals in itertools.product(range(p), repeat=len(slots)):
            rows = [[0] * n for _ in piv]
            for r, pc in enumerate(piv):
                rows[r][pc] = 1
            for (r, c), x in zip(slots, vals):
                rows[r][c] = x
            if all(form(M, u, v) == 0 for M in (A, B) for u, v in itertools.combinations(rows, 2)):
                if core <= Subspace.span(rows, n, F):
                    count += 1
    return count


def invariant_lattice_size(i, p):
    """Subspaces of GF(p)^n closed under the automorphism algebra, via cyclic closures and their sums."""
    F = GF(p)
    n = i.dim
    gens = aut_algebra(synthesize(i, F)).basis

    def close(S):
        while True:
            T = Subspace.span(list(S.rows) + [C @ v for C in gens for v in S.rows], n, F)
            if T == S:
                return S
            S = T

    cyclic = {}
    for v in itertools.product(range(p), repeat=n):
        if any(v):
            S = close(Subspace.span([list(v)], n, F))
            cyclic[S.rows] = S
    found = dict(cyclic)
    frontier = list(cyclic.values())
    while frontier:
        nxt = []
        for X in frontier:
            for Y in cyclic.values():
                Z = Subspace.span(list(X.rows) + list(Y.rows), n, F)
                if Z.rows not in found:
                    found[Z.rows] = Z
                    nxt.append(Z)
        frontier = nxt
    return len(found) + 1


class TestInvariantLattice:
    def test_counts(self):
        assert len(invariant_subspaces(inv("J0:3,J0:2"))) == 6
        assert [len(invariant_subspaces(inv("J0:%d" % n))) for n in range(1, 6)] == [2, 3, 4, 5, 6]
        assert [len(invariant_subspaces(inv("J0:%d,J0:%d" % (n, n)))) for n in range(1, 5)] == [2, 3, 4, 5]

    @pytest.mark.parametrize("s", ["J0:2,J0:1", "J0:3", "J0:2,J0:2"])
    def test_against_closure_oracle(self, s):
        assert invariant_lattice_size(inv(s), 3) == len(invariant_subspaces(inv(s)))

    def test_rejects_non_jordan(self):
        with pytest.raises(NotSingleEigenvalueJordan):
            invariant_subspaces(inv("J0:1;K:1"))
        with pytest.raises(NotSingleEigenvalueJordan):
            invariant_subspaces(inv("J0:1,J1:1"))

    @pytest.mark.parametrize("sizes", [(3, 2), (3, 1), (2, 2, 1), (4, 2, 1)])
    def test_automorphism_invariant(self, sizes):
        i = JKInvariants.nilpotent(sizes)
        p = synthesize(i)
        G = random_automorphism(aut_algebra(p), 11)
        descs = invariant_subspaces(i)
        spaces = [build_invariant_subspace(i, d) for d in descs]
        assert len(set(s.rows for s in spaces)) == len(spaces)
        for U in spaces:
            assert U.image(G) == U

    @pytest.mark.parametrize("sizes", [s for s in half_size_tuples(6)])
    def test_bi_isotropic_exactly_at_half_heights(self, sizes):
        i = JKInvariants.nilpotent(sizes)
        p = synthesize(i)
        for d in invariant_subspaces(i):
            U = build_invariant_subspace(i, d)
            expect = all(2 * h <= n for n, h in zip(d.sizes, d.heights))
            assert (is_isotropic(U, p.A) and is_isotropic(U, p.B)) == expect


class TestInvariantBilagrangian:
    def test_one_block(self):
        L = invariant_bilagrangian(inv("J0:2"))
        assert L == Subspace.span([unit(4, 1), unit(4, 2)])

    def test_absent_for_odd_sizes(self):
        assert invariant_bilagrangian(inv("J0:3")) is None
        assert invariant_bilagrangian(inv("J0:4,J0:1")) is None

    def test_two_blocks(self):
        i = inv("J0:4,J0:2")
        L = invariant_bilagrangian(i)
        assert is_bilagrangian(synthesize(i), L)
        assert L == Subspace.span([unit(12, k) for k in (2, 3, 4, 5, 9, 10)])

    def test_with_core(self):
        i = inv("J0:2;K:1")
        L = invariant_bilagrangian(i)
        assert is_bilagrangian(synthesize(i), L) and core_of_standard(i) <= L

    @given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.integers(0, 10**6))
    def test_fixed_by_automorphisms(self, halves, seed):
        i = JKInvariants.nilpotent(sorted((2 * m for m in halves), reverse=True))
        p = synthesize(i)
        L = invariant_bilagrangian(i)
        assert L.image(random_automorphism(aut_algebra(p), seed)) == L


class TestFiniteFieldCensus:
    @pytest.mark.parametrize("s,p", [
        ("J0:2", 2), ("J0:2", 3), ("J0:1,J0:1", 2), ("J0:2,J0:1", 2), ("J0:3", 2), ("J0:1;K:1", 3), ("K:2", 2),
    ])
    def test_against_naive_enumeration(self, s, p):
        assert len(ff_enumerate_bilagrangians(inv(s), p)) == naive_census(inv(s), p)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_lagrangian_counts(self, p):
        # a single J_{0,2} block has B symplectic and A = 0
        assert ff_orbit_histogram(inv("J0:1"), p) == {"semisimple {(1,1)}": p + 1}
        assert sum(ff_orbit_histogram(inv("J0:1,J0:1"), p).values()) == (p + 1) * (p * p + 1)

    def test_kronecker_core_is_unique(self):
        assert ff_orbit_histogram(inv("K:1"), 2) == {"core": 1}
        assert ff_orbit_histogram(inv("K:1,K:2"), 3) == {"core": 1}

    def test_core_is_quotiented(self):
        assert ff_orbit_histogram(inv("J0:1;K:1"), 2) == {"semisimple {(1,1)}": 3}

    @pytest.mark.parametrize("p", [2, 3])
    def test_one_block_orbits(self, p):
        # the lower orbit is the set of L containing Ker P = span{e3, f1}
        F = GF(p)
        kerP = Subspace.span([unit(6, 2, F), unit(6, 3, F)], 6, F)
        subs = ff_enumerate_bilagrangians(inv("J0:3"), p)
        low = sum(1 for L in subs if kerP <= L)
        assert low == p + 1
        assert ff_orbit_histogram(inv("J0:3"), p) == {"semisimple {(2,3)}": low, "semisimple {(3,3)}": len(subs) - low}

    def test_limits(self):
        with pytest.raises(TooLarge):
            ff_enumerate_bilagrangians(inv("J0:7"), 2)
        with pytest.raises(TooLarge):
            ff_enumerate_bilagrangians(inv("J0:5"), 3)
        with pytest.raises(TooLarge):
            ff_enumerate_bilagrangians(inv("J0:1"), 17)
        with pytest.raises(InvalidInput):
            ff_enumerate_bilagrangians(inv("J0:1"), 4)

    def test_members_are_distinct_and_bilagrangian(self):
        i = inv("J0:2,J0:1")
        subs = ff_enumerate_bilagrangians(i, 3)
        pf = synthesize(i, GF(3))
        assert len({S.rows for S in subs}) == len(subs)
        assert all(is_bilagrangian(pf, S) for S in subs)
