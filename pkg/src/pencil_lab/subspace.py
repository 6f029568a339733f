"""Subspaces of a bi-Poisson space: predicates, reduction, extension, samples."""

import random
from dataclasses import dataclass

from .errors import (
    AmbientMismatch, NotAdmissible, NotBiIsotropic, NotBiLagrangian, NotExtendable,
)
from .exact import Mat, Subspace, bilinear, is_isotropic, perp
from .pencil import (
    JordanContext, Pencil, core_mantle, decompose_by_eigenvalue, normalized_generators,
    pencil_rank, quotient_forms, regular_samples, standard_basis, standard_basis_nilpotent,
)


@dataclass(frozen=True)
class SubspaceReport:
    isotropic_A: bool
    isotropic_B: bool
    bi_isotropic: bool
    admissible: bool
    bi_lagrangian: bool
    dim: int
    target_dim: int

    def to_json(self):
        return dict(self.__dict__)


@dataclass(frozen=True)
class Reduction:
    pencil: Pencil
    U: Subspace
    Uperp: Subspace
    quotient: Pencil
    section: Mat
    projection: Mat


def _check_ambient(p, S):
    if S.ambient != p.dim:
        raise AmbientMismatch("subspace lives in dimension %d, pencil in %d" % (S.ambient, p.dim))


def _jordan_operator(p, rk):
    if rk != p.dim:
        return None
    ctx = JordanContext.of(p, normalize=False)
    return ctx.P


def is_admissible(p, S, rk=None):
    _check_ambient(p, S)
    rk = pencil_rank(p) if rk is None else rk
    if S.dim == 0:
        return True
    P = _jordan_operator(p, rk)
    if P is not None:
        return all(S.contains(P @ r) for r in S.rows)
    # general case: the images A_lam(S) must agree at the samples of maximal image rank
    lams = regular_samples(p, 2 * p.dim + 2, rk)
    images = [S.image(p.form(l)) for l in lams]
    top = max(im.dim for im in images)
    images = [im for im in images if im.dim == top]
    return all(im == images[0] for im in images[1:])


def classify_subspace(p, S):
    _check_ambient(p, S)
    rk = pencil_rank(p)
    ia = is_isotropic(S, p.A)
    ib = is_isotropic(S, p.B)
    adm = is_admissible(p, S, rk)
    target = p.dim - rk // 2
    return SubspaceReport(ia, ib, ia and ib, adm, ia and ib and adm and S.dim == target, S.dim, target)


def is_bilagrangian(p, S):
    return classify_subspace(p, S).bi_lagrangian


def pencil_perp(p, S, strict=False):
    """Skew-orthogonal complement shared by the regular members (S admissible)."""
    _check_ambient(p, S)
    if S.dim == 0:
        return Subspace.full(p.dim, p.field)
    rk = pencil_rank(p)
    adm = is_admissible(p, S, rk)
    if strict and not adm:
        raise NotAdmissible("subspace is not admissible")
    lams = regular_samples(p, 3 if adm else 1, rk)
    perps = [perp(S, p.form(l)) for l in lams]
    if adm and any(q != perps[0] for q in perps[1:]):
        raise NotAdmissible("complements differ across regular members")
    return perps[0]


def reduce(p, U):
    """Bi-Poisson reduction by an admissible bi-isotropic U."""
    _check_ambient(p, U)
    if not (is_isotropic(U, p.A) and is_isotropic(U, p.B)):
        raise NotBiIsotropic("U is not bi-isotropic")
    Uperp = pencil_perp(p, U, strict=True)
    sec, proj, q = quotient_forms(p, U, Uperp)
    return Reduction(p, U, Uperp, q, sec, proj)


def push_subspace(r, L):
    """((L ∩ U^perp) + U) / U in quotient coordinates."""
    if L.ambient != r.pencil.dim:
        raise AmbientMismatch("subspace lives in dimension %d, pencil in %d" % (L.ambient, r.pencil.dim))
    meet = L & r.Uperp
    return Subspace.span([r.projection @ v for v in meet.rows], r.quotient.dim, r.pencil.field)


def pull_subspace(r, Lq):
    """Preimage in U^perp of a quotient subspace."""
    return r.U + Subspace.span([r.section @ v for v in Lq.rows], r.pencil.dim, r.pencil.field)


def invariant_closure(P, S):
    rows = list(S.rows)
    out = S
    while rows:
        new = []
        for v in rows:
            w = P @ v
            if not out.contains(w):
                out = out + Subspace.span([w], S.ambient, S.field)
                new.append(w)
        rows = new
    return out


def _isotropy_witness(S, forms):
    for name, F in forms:
        for i, x in enumerate(S.rows):
            for y in S.rows[i + 1:]:
                if bilinear(F, x, y):
                    return (x, y), name
    return None


def canonical_bilagrangian(q):
    """Span of the e-vectors of a standard basis of the Jordan pencil q."""
    if q.dim == 0:
        return Subspace.zero(0, q.field)
    sb = standard_basis(q)
    return Subspace.span(sb.e_vectors(), q.dim, q.field)


def extend_to_bilagrangian(p, U):
    _check_ambient(p, U)
    F = p.field
    K, M = core_mantle(p)
    for v in U.rows:
        if not M.contains(v):
            raise NotExtendable("mantle", v)
    sec, proj, q = quotient_forms(p, K, M)
    Uq = Subspace.span([proj @ v for v in U.rows], q.dim, F) if U.dim else Subspace.zero(q.dim, F)
    if q.dim == 0:
        return K
    P = JordanContext.of(q, normalize=False).P
    C = invariant_closure(P, Uq)
    bad = _isotropy_witness(C, [("A", q.A), ("B", q.B)])
    if bad is not None:
        (x, y), name = bad
        raise NotExtendable("pairing", (sec @ x, sec @ y), name)
    r = reduce(q, C)
    Lq = pull_subspace(r, canonical_bilagrangian(r.quotient))
    return K + Subspace.span([sec @ v for v in Lq.rows], p.dim, F)


def semisimple_span(sb, heights):
    """span{e_{n-h+1..n}, f_{1..n-h}} over the blocks of a standard basis."""
    vecs = []
    for b, h in zip(sb.layout, heights):
        n = b.size
        vecs += [sb.S.col(j) for j in b.e[n - h:]]
        vecs += [sb.S.col(j) for j in b.f[:n - h]]
    return Subspace.span(vecs, sb.S.nrows, sb.S.field)


def random_bilagrangian(p, seed, generic=True):
    """A bi-Lagrangian subspace moved by a seeded random automorphism.

    With ``generic`` the start is the span of the e-vectors; otherwise every
    block gets a random height between half its size and its size.
    """
    from .aut import aut_algebra, random_automorphism

    rng = random.Random(seed)
    F = p.field
    K, M = core_mantle(p)
    sec, proj, q = quotient_forms(p, K, M)
    if q.dim == 0:
        return K
    sb = standard_basis(q)
    if generic:
        L0 = Subspace.span(sb.e_vectors(), q.dim, F)
    else:
        L0 = semisimple_span(sb, [rng.randint((b.size + 1) // 2, b.size) for b in sb.layout])
    G = random_automorphism(aut_algebra(q), rng.randrange(1 << 30))
    Lq = L0.image(G)
    return K + Subspace.span([sec @ v for v in Lq.rows], p.dim, F)


def eigen_components(p, L):
    """Per eigenvalue: (eigenvalue, nilpotent context, embedding E, L ∩ Im E in E-coordinates)."""
    out = []
    for ev, q, E in decompose_by_eigenvalue(JordanContext.of(p, normalize=False)):
        A1, B1 = normalized_generators(q, ev)
        ctx = JordanContext(q, A1, B1, ev)
        img = Subspace.span(E.T.rows, p.dim, p.field)
        part = L & img
        coords = Subspace.span([img.coordinates(v) for v in part.rows], q.dim, p.field) \
            if part.dim else Subspace.zero(q.dim, p.field)
        out.append((ev, ctx, E, coords))
    return out


def complementary(ctx, L):
    """A bi-Lagrangian complement of a generic bi-Lagrangian L."""
    p = ctx.pencil if isinstance(ctx, JordanContext) else ctx
    _check_ambient(p, L)
    if not is_bilagrangian(p, L):
        raise NotBiLagrangian("L is not bi-Lagrangian")
    vecs = []
    for ev, c, E, Lc in eigen_components(p, L):
        sb = standard_basis_nilpotent(c, Lc)
        vecs += [E @ f for f in sb.f_vectors()]
    return Subspace.span(vecs, p.dim, p.field) if vecs else Subspace.zero(p.dim, p.field)


__all__ = [
    "SubspaceReport", "Reduction", "classify_subspace", "is_admissible", "is_bilagrangian",
    "pencil_perp", "reduce", "push_subspace", "pull_subspace", "invariant_closure",
    "extend_to_bilagrangian", "random_bilagrangian", "complementary", "canonical_bilagrangian",
    "semisimple_span", "eigen_components",
]
