"""Acceptance criteria, one test each; run directly for the pass/fail table."""

import math
import random
import sys

import pytest

from pencil_lab.aut import aut_algebra, orbit_tangent_dim
from pencil_lab.census import (
    build_invariant_subspace, core_of_standard, ff_enumerate_bilagrangians, ff_enumerate_pencil,
    ff_orbit_histogram, invariant_subspaces,
)
from pencil_lab.errors import PencilLabError
from pencil_lab.exact import GF, Subspace, unit
from pencil_lab.orbits import (
    OrbitDescriptor, canonical_representative, classify_two_blocks, enumerate_semisimple_types,
    enumerate_two_block_descriptors, formulas, is_generic, same_orbit, semisimple_type, type2s_descriptor,
    type2s_parameters,
)
from pencil_lab.pencil import INF, Eigenvalue, JKInvariants, JordanContext, jk_invariants, scramble, synthesize
from pencil_lab.subspace import (
    canonical_bilagrangian, complementary, extend_to_bilagrangian, is_bilagrangian, push_subspace,
    random_bilagrangian, reduce,
)

from .strategies import half_size_tuples, random_admissible

EIGENVALUES = [Eigenvalue(v) for v in range(-2, 4)] + [INF]


def nil(*sizes):
    return JKInvariants.nilpotent(sizes)


def random_invariants(rng, max_dim=12):
    while True:
        jordan = [(rng.choice(EIGENVALUES), rng.randint(1, 3)) for _ in range(rng.randint(0, 4))]
        kron = [rng.randint(0, 2) for _ in range(rng.randint(0, 2))]
        inv = JKInvariants(jordan, kron)
        if 0 < inv.dim <= max_dim:
            return inv


def test_criterion_01_jk_round_trip():
    rng = random.Random(2024)
    for seed in range(60):
        inv = random_invariants(rng)
        p, _ = scramble(synthesize(inv), seed)
        assert jk_invariants(p) == inv, (seed, str(inv))


def test_criterion_02_automorphism_dimension():
    for sizes in half_size_tuples(6):
        expect = sum((4 * j - 1) * n for j, n in enumerate(sizes, 1))
        assert aut_algebra(synthesize(nil(*sizes))).dim == expect, sizes
    assert aut_algebra(synthesize(nil(3, 1))).dim == 16


def test_criterion_03_blg_dimension():
    for sizes in half_size_tuples(6):
        p = synthesize(nil(*sizes))
        expect = sum(j * n for j, n in enumerate(sizes, 1))
        assert orbit_tangent_dim(aut_algebra(p), canonical_bilagrangian(p)) == expect, sizes
    p = synthesize(nil(3, 1))
    assert orbit_tangent_dim(aut_algebra(p), canonical_bilagrangian(p)) == 5


def test_criterion_04_semisimple_orbit_dimensions():
    for sizes in half_size_tuples(6):
        i = nil(*sizes)
        a = aut_algebra(synthesize(i))
        for t in enumerate_semisimple_types(sizes):
            L = canonical_representative(i, OrbitDescriptor.semisimple(t))
            assert orbit_tangent_dim(a, L) == formulas(i, "semisimple_orbit_dim", type=t), (sizes, str(t))
    i = nil(3, 1)
    a = aut_algebra(synthesize(i))
    generic = canonical_representative(i, OrbitDescriptor.semisimple([(3, 3), (1, 1)]))
    small = canonical_representative(i, OrbitDescriptor.semisimple([(2, 3), (1, 1)]))
    assert (orbit_tangent_dim(a, generic), orbit_tangent_dim(a, small)) == (5, 2)


def test_criterion_05_indecomposable_dimensions():
    # span{e3, f1, e2 + ê1, f2 - f̂1} in J_{0,6} ⊕ J_{0,2}
    L = Subspace.span([unit(8, 2), unit(8, 3), [0, 1, 0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 1, 0, 0, -1]])
    p = synthesize(nil(3, 1))
    assert is_bilagrangian(p, L)
    assert orbit_tangent_dim(aut_algebra(p), L) == 3
    for n1, n2 in [(3, 1), (5, 3)]:
        i = nil(n1, n2)
        a = aut_algebra(synthesize(i))
        rs = type2s_parameters(n1, n2)
        assert rs
        for r in rs:
            assert orbit_tangent_dim(a, canonical_representative(i, type2s_descriptor(n1, n2, r))) == 3 * r


def test_criterion_06_orbit_counts():
    def keys(spec, p):
        hist = ff_orbit_histogram(JKInvariants.parse(spec), p)
        assert not [k for k in hist if k.startswith("anomaly")], hist
        return len(hist)

    for p in (2, 3):
        for n in range(1, 5):
            assert keys("J0:%d" % n, p) == n // 2 + 1, (n, p)
        assert keys("J0:2,J0:2", p) == math.comb(1 + 2, 2)
    assert keys("J0:3,J0:3", 2) == math.comb(1 + 2, 2)
    assert keys("J0:3,J0:1", 2) == 3


def test_criterion_07_invariant_subspace_lattice():
    for sizes in half_size_tuples(7):
        i = nil(*sizes)
        descs = invariant_subspaces(i)
        padded = list(sizes) + [0]
        assert len(descs) == math.prod(padded[k] - padded[k + 1] + 1 for k in range(len(sizes))), sizes
        basis = aut_algebra(synthesize(i)).basis
        for d in descs:
            U = build_invariant_subspace(i, d)
            assert all(U.contains(C @ u) for C in basis for u in U.rows), (sizes, d)


def test_criterion_08_kronecker_uniqueness():
    for spec in ("K:1", "K:1,K:0"):
        inv = JKInvariants.parse(spec)
        for p in (2, 3):
            F = GF(p)
            # no core filter: every bi-isotropic subspace of half-rank codimension
            subs = ff_enumerate_pencil(synthesize(inv, F), inv.dim - inv.rank // 2)
            assert subs == [core_of_standard(inv, F)], (spec, p)


def test_criterion_09_one_block_canonical_form():
    for seed in range(100):
        n = seed % 4 + 1
        i = nil(n)
        p = synthesize(i)
        L = random_bilagrangian(p, seed, generic=seed % 3 == 0)
        t = semisimple_type(JordanContext.of(p), L)
        assert len(t.pairs) == 1
        h, size = t.pairs[0]
        assert size == n and math.ceil(n / 2) <= h <= n
        assert same_orbit(p, L, canonical_representative(i, OrbitDescriptor.semisimple(t))), seed


def test_criterion_10_two_block_round_trip():
    for n1, n2 in [(2, 1), (3, 1), (3, 2), (4, 2), (5, 2)]:
        i = nil(n1, n2)
        ctx = JordanContext.of(synthesize(i))
        descs = enumerate_two_block_descriptors(n1, n2)
        for d in descs:
            assert classify_two_blocks(ctx, canonical_representative(i, d)) == d, (n1, n2, str(d))
        if i.dim <= 10:
            # every orbit met by the GF(2) census is in the catalogue and vice versa
            assert set(ff_orbit_histogram(i, 2)) == {str(d) for d in descs}, (n1, n2)
    assert any(d.variant == "type1" for d in enumerate_two_block_descriptors(5, 2))


AMBIENTS = ["J0:3,J0:1", "J0:2,J0:2", "J0:2,J1:1;K:1", "J0:3;K:0", "J2:2,J2:1", "Jinf:2,J0:1"]


def test_criterion_11_reduction_soundness():
    for seed in range(100):
        p, _ = scramble(synthesize(JKInvariants.parse(AMBIENTS[seed % len(AMBIENTS)])), seed)
        U = random_admissible(p, seed)
        r = reduce(p, U)
        L = random_bilagrangian(p, seed)
        assert is_bilagrangian(r.quotient, push_subspace(r, L)), seed

    F = GF(2)
    i = nil(3)
    pf = synthesize(i, F)
    U = Subspace.span([unit(6, 2, F), unit(6, 3, F)], 6, F)  # Im P^2 = span{e3, f1}
    r = reduce(pf, U)
    above = [L for L in ff_enumerate_bilagrangians(i, 2) if U <= L]
    pushed = {push_subspace(r, L).rows for L in above}
    quotient = {S.rows for S in ff_enumerate_pencil(r.quotient, r.quotient.dim // 2)}
    assert len(pushed) == len(above) and pushed == quotient


def test_criterion_12_extension_and_complement():
    for seed in range(50):
        p, _ = scramble(synthesize(JKInvariants.parse(AMBIENTS[seed % len(AMBIENTS)])), seed)
        U = random_admissible(p, seed)
        L = extend_to_bilagrangian(p, U)
        assert is_bilagrangian(p, L) and U <= L, seed

    for spec in ("J0:3,J0:1", "J0:2,J0:2", "J0:2,J0:1,J0:1"):
        p, _ = scramble(synthesize(JKInvariants.parse(spec)), 7)
        ctx = JordanContext.of(p)
        seen = set()
        for seed in range(50):
            L = random_bilagrangian(p, seed, generic=seed % 2 == 0)
            try:
                C = complementary(ctx, L)
                ok = is_bilagrangian(p, C) and (L & C).dim == 0
            except PencilLabError:
                ok = False
            gen = is_generic(ctx, L)
            seen.add(gen)
            assert ok == gen, (spec, seed)
        assert seen == {True, False}, spec


def test_criterion_13_finite_field_point_counts():
    for p in (2, 3, 5):
        assert len(ff_enumerate_bilagrangians(nil(1), p)) == p + 1
    hist = ff_orbit_histogram(nil(2), 2)
    assert sum(hist.values()) == 7
    # O_2 ∪ O_1: the generic orbit has p^2 + p points, the other a single point
    assert hist == {"semisimple {(2,2)}": 2 * 2 + 2, "semisimple {(1,2)}": 1}


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider", "-W", "ignore::pytest.PytestAssertRewriteWarning"]))
