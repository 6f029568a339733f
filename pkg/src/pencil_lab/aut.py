"""The Lie algebra of infinitesimal automorphisms of a pencil.

An operator C is an infinitesimal automorphism when both forms are killed in
the derivation sense: C^T A + A C = 0 and C^T B + B C = 0.  Orbit
dimensions are ranks of the tangent map C -> (x -> C x mod L).
"""

import random
from dataclasses import dataclass

from .errors import NotInvariantU
from .exact import Mat, kernel, sparse_kernel_basis


@dataclass(frozen=True)
class AutAlgebra:
    pencil: object
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    def element(self, coeffs):
        F = self.pencil.field
        n = self.pencil.dim
        out = Mat.zeros(n, n, F)
        for c, C in zip(coeffs, self.basis):
            if c:
                out = out + C.scale(c)
        return out


def _derivation_rows(M, n):
    """Sparse equations (C^T M + M C)_{kl} = 0 for k < l in the unknowns C_{ij} -> i*n + j."""
    rows = []
    cols = [[(i, M.rows[i][l]) for i in range(n) if M.rows[i][l]] for l in range(n)]
    for k in range(n):
        for l in range(k + 1, n):
            r = {}
            for i, a in cols[l]:
                idx = i * n + k
                r[idx] = r.get(idx, 0) + a
            for j, a in cols[k]:
                # M_{kj} = -M_{jk}
                idx = j * n + l
                r[idx] = r.get(idx, 0) - a
            r = {c: v for c, v in r.items() if v}
            if r:
                rows.append(r)
    return rows


def aut_algebra(p):
    n = p.dim
    F = p.field
    rows = _derivation_rows(p.A, n) + _derivation_rows(p.B, n)
    rows = [{c: F(v) if isinstance(v, int) else v for c, v in r.items()} for r in rows]
    z = F.zero
    basis = []
    for x in sparse_kernel_basis(rows, n * n, F):
        basis.append(Mat._raw([tuple(x.get(i * n + j, z) for j in range(n)) for i in range(n)], n, F))
    return AutAlgebra(p, tuple(basis))


def is_derivation(p, C):
    return (C.T @ p.A + p.A @ C).is_zero() and (C.T @ p.B + p.B @ C).is_zero()


def cayley(C):
    """(I + C/2)(I - C/2)^-1; preserves every form C is a derivation of."""
    n = C.nrows
    F = C.field
    ident = Mat.identity(n, F)
    half = C.scale(F.one / 2)
    return (ident + half) @ (ident - half).inverse()


def random_automorphism(a, seed, factors=2, spread=2):
    """Seeded product of Cayley transforms of random algebra elements."""
    rng = random.Random(seed)
    n = a.pencil.dim
    F = a.pencil.field
    G = Mat.identity(n, F)
    if a.dim == 0:
        return G
    for _ in range(factors):
        while True:
            C = a.element([rng.randint(-spread, spread) for _ in range(a.dim)])
            try:
                G = G @ cayley(C)
                break
            except ZeroDivisionError:
                continue
    return G


def is_automorphism(p, G):
    return G.T @ p.A @ G == p.A and G.T @ p.B @ G == p.B


def _tangent_rows(basis, L):
    out = []
    for C in basis:
        row = []
        for x in L.rows:
            row += L.complement_coords(C @ x)
        out.append(tuple(row))
    return out


def orbit_tangent_dim(a, L):
    """Rank of C -> (x -> C x mod L), the dimension of the orbit through L."""
    if L.dim == 0 or L.dim == L.ambient or a.dim == 0:
        return 0
    rows = _tangent_rows(a.basis, L)
    return Mat._raw(rows, len(rows[0]), a.pencil.field).rank()


def stabilizer(a, U):
    """Basis of {C in aut : C U ⊆ U}."""
    if U.dim == 0 or U.dim == U.ambient:
        return list(a.basis)
    rows = _tangent_rows(a.basis, U)
    cond = Mat._raw(rows, len(rows[0]), a.pencil.field).T
    ker = kernel(cond)
    return [a.element(c) for c in ker.rows]


def push_aut(a, r, C):
    """Operator induced by C on U^perp / U, in quotient coordinates."""
    if not all(r.U.contains(C @ u) for u in r.U.rows):
        raise NotInvariantU("operator does not preserve U")
    if r.quotient.dim == 0:
        return Mat.zeros(0, 0, a.pencil.field)
    return r.projection @ C @ r.section


def pushed_algebra_dim(a, r):
    """Dimension of the image of Stab(U) in the automorphism algebra of the quotient."""
    pushed = [push_aut(a, r, C) for C in stabilizer(a, r.U)]
    if not pushed or r.quotient.dim == 0:
        return 0
    rows = [tuple(x for row in M.rows for x in row) for M in pushed]
    return Mat._raw(rows, len(rows[0]), a.pencil.field).rank()


__all__ = [
    "AutAlgebra", "aut_algebra", "is_derivation", "cayley", "random_automorphism",
    "is_automorphism", "orbit_tangent_dim", "stabilizer", "push_aut", "pushed_algebra_dim",
]
