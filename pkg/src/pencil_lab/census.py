"""Enumerative oracles: invariant-subspace lattices and exhaustive finite-field censuses.

The finite-field enumerator lists every bi-isotropic subspace of the target
dimension exactly once by walking reduced row echelon profiles.  Rows are
filled from the last pivot upward; each new row only has to satisfy linear
orthogonality conditions against the rows already placed, so candidates are
generated by solving those conditions rather than by filtering.
"""

import itertools
from dataclasses import dataclass
from multiprocessing import Pool

from .errors import InvalidInput, NotSingleEigenvalueJordan, TooLarge
from .exact import GF, QQ, Mat, Subspace, is_prime, unit
from .orbits import classify, height_tuples
from .pencil import JordanContext, normalized_generators, pencil_rank, quotient_forms, synthesize

# ambient dimension caps per prime
FF_DIM_CAP = {2: 12, 3: 8}
FF_DIM_CAP_DEFAULT = 6
FF_MAX_PRIME = 13


@dataclass(frozen=True)
class InvariantSubspaceDesc:
    sizes: tuple
    heights: tuple

    def __str__(self):
        return "heights %s" % (list(self.heights),)


def _jordan_sizes(inv):
    if inv.kronecker or inv.single_eigenvalue() is None:
        raise NotSingleEigenvalueJordan("invariant subspaces need Jordan invariants with one eigenvalue")
    return inv.half_sizes


def invariant_subspaces(inv):
    """All height tuples of invariant subspaces ⊕J^{≤h_i}, one per block."""
    sizes = _jordan_sizes(inv)
    return [InvariantSubspaceDesc(tuple(sizes), hs) for hs in height_tuples(sizes)]


def build_invariant_subspace(inv, desc, field=QQ):
    """span{e_{n-h+1..n}, f_{1..h}} per block, in the standard layout of ``inv``."""
    dim = inv.dim
    vecs, c = [], 0
    for n, h in zip(desc.sizes, desc.heights):
        vecs += [unit(dim, c + i, field) for i in range(n - h, n)]
        vecs += [unit(dim, c + n + j, field) for j in range(h)]
        c += 2 * n
    return Subspace.span(vecs, dim, field) if vecs else Subspace.zero(dim, field)


def core_of_standard(inv, field=QQ):
    """The core of synthesize(inv): the f-vectors of the Kronecker blocks."""
    dim = inv.dim
    c = 2 * sum(inv.half_sizes)
    vecs = []
    for k in inv.kronecker:
        vecs += [unit(dim, c + k + j, field) for j in range(k + 1)]
        c += 2 * k + 1
    return Subspace.span(vecs, dim, field) if vecs else Subspace.zero(dim, field)


def invariant_bilagrangian(inv, field=QQ):
    """Core plus ⊕J^{≤n/2} when every Jordan half-size is even; None otherwise."""
    if any(n % 2 for _, n in inv.jordan):
        return None
    dim = inv.dim
    vecs, c = [], 0
    for _, n in inv.jordan:
        m = n // 2
        vecs += [unit(dim, c + i, field) for i in range(n - m, n)]
        vecs += [unit(dim, c + n + j, field) for j in range(m)]
        c += 2 * n
    core = core_of_standard(inv, field)
    L = Subspace.span(vecs + list(core.rows), dim, field) if vecs or core.dim else Subspace.zero(dim, field)
    return L


# ---------------------------------------------------------------------------
# finite-field enumeration


def _check_size(dim, p):
    if not is_prime(p):
        raise InvalidInput("%d is not prime" % p)
    if p > FF_MAX_PRIME:
        raise TooLarge("prime %d exceeds %d" % (p, FF_MAX_PRIME))
    cap = FF_DIM_CAP.get(p, FF_DIM_CAP_DEFAULT)
    if dim > cap:
        raise TooLarge("ambient dimension %d exceeds the GF(%d) cap of %d" % (dim, p, cap))


def _solve_affine(cols, targets, p):
    """Solutions x over GF(p) of sum_f x_f * cols[f] = targets (cols: per variable, a list of equation coefficients).

    Returns (particular, nullspace basis) or None; vectors indexed like ``cols``.
    """
    nvar = len(cols)
    neq = len(targets)
    rows = [[cols[f][e] % p for f in range(nvar)] + [targets[e] % p] for e in range(neq)]
    piv_cols = []
    r = 0
    for c in range(nvar):
        pr = next((i for i in range(r, neq) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(neq):
            if i != r and rows[i][c]:
                a = rows[i][c]
                rows[i] = [(x - a * y) % p for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][nvar] for i in range(r, neq)):
        return None
    part = [0] * nvar
    for i, c in enumerate(piv_cols):
        part[c] = rows[i][nvar]
    null = []
    pset = set(piv_cols)
    for f in range(nvar):
        if f in pset:
            continue
        v = [0] * nvar
        v[f] = 1
        for i, c in enumerate(piv_cols):
            v[c] = (-rows[i][f]) % p
        null.append(v)
    return part, null


def _enumerate_profile(args):
    pivots, forms, n, p = args
    k = len(pivots)
    pset = set(pivots)
    free = [[c for c in range(piv + 1, n) if c not in pset] for piv in pivots]
    out = []
    chosen = [None] * k

    def images(row):
        return [[sum(F[i][j] * row[j] for j in range(n) if row[j]) % p for i in range(n)] for F in forms]

    placed = []  # (row, [F row for each form])

    def rec(idx):
        if idx < 0:
            out.append(tuple(tuple(r) for r in chosen))
            return
        piv = pivots[idx]
        fv = free[idx]
        # conditions: for every placed row w and form F: row^T F w = 0
        eqs_cols = []
        targets = []
        for w, Fw in placed:
            for img in Fw:
                targets.append(-img[piv])
                eqs_cols.append([img[c] for c in fv])
        cols = [[eq[f] for eq in eqs_cols] for f in range(len(fv))]
        if fv:
            sol = _solve_affine(cols, targets, p) if targets else ([0] * len(fv), [
                [1 if i == j else 0 for i in range(len(fv))] for j in range(len(fv))])
        else:
            sol = ([], []) if all(t % p == 0 for t in targets) else None
        if sol is None:
            return
        part, null = sol
        for coeffs in itertools.product(range(p), repeat=len(null)):
            x = list(part)
            for c, v in zip(coeffs, null):
                if c:
                    x = [(a + c * b) % p for a, b in zip(x, v)]
            row = [0] * n
            row[piv] = 1
            for c, val in zip(fv, x):
                row[c] = val
            chosen[idx] = row
            placed.append((row, images(row)))
            rec(idx - 1)
            placed.pop()
        chosen[idx] = None

    rec(k - 1)
    return pivots, out


def ff_enumerate_pencil(p_ff, target_dim=None, core=None, workers=1):
    """Every subspace of ``target_dim`` that is isotropic for both generators and contains ``core``.

    ``p_ff`` is a pencil over GF(p).  The default target is dim V - rk/2.
    """
    F = p_ff.field
    p = F.characteristic
    if not p:
        raise InvalidInput("the census needs a pencil over a prime field")
    n = p_ff.dim
    _check_size(n, p)
    if target_dim is None:
        target_dim = n - pencil_rank(p_ff) // 2
    forms = [[[int(x) for x in r] for r in M.rows] for M in (p_ff.A, p_ff.B)]
    jobs = [(piv, forms, n, p) for piv in itertools.combinations(range(n), target_dim)]
    if workers and workers > 1:
        with Pool(workers) as pool:
            results = pool.map(_enumerate_profile, jobs)
    else:
        results = [_enumerate_profile(j) for j in jobs]
    results.sort(key=lambda t: t[0])
    out = []
    for piv, subs in results:
        for rows in sorted(subs):
            S = Subspace(n, Mat([list(r) for r in rows], F, n), tuple(piv))
            if core is None or core <= S:
                out.append(S)
    return out


def ff_enumerate_bilagrangians(inv, p, workers=1):
    """Exhaustive bi-Lagrangian list of synthesize(inv) reduced mod p."""
    _check_size(inv.dim, p)
    F = GF(p)
    pf = synthesize(inv, F)
    return ff_enumerate_pencil(pf, inv.dim - inv.rank // 2, core_of_standard(inv, F), workers)


def _ff_context(inv, p):
    F = GF(p)
    pf = synthesize(inv, F)
    ev = inv.single_eigenvalue()
    A1, B1 = normalized_generators(pf, ev)
    return JordanContext(pf, A1, B1, ev)


def ff_orbit_key(inv, p, L, ctx=None):
    """Orbit invariant of a census member, as a string."""
    F = GF(p)
    if not inv.jordan:
        return "core"
    if inv.kronecker:
        # the quotient by the core of a synthesized pencil is the synthesized Jordan part
        pf = synthesize(inv, F)
        core = core_of_standard(inv, F)
        M = Subspace.span([unit(inv.dim, j, F) for j in range(2 * sum(inv.half_sizes))]
                          + list(core.rows), inv.dim, F)
        sec, proj, q = quotient_forms(pf, core, M)
        jinv = type(inv)(inv.jordan, ())
        ref = synthesize(jinv, F)
        if q.A != ref.A or q.B != ref.B:
            return "anomaly: quotient is not in standard layout"
        Lq = Subspace.span([proj @ v for v in (L & M).rows], q.dim, F)
        return ff_orbit_key(jinv, p, Lq)
    if inv.single_eigenvalue() is None:
        raise NotSingleEigenvalueJordan("census keys need a single eigenvalue")
    ctx = ctx or _ff_context(inv, p)
    try:
        return str(classify(ctx, L))
    except Exception as ex:  # char-p anomaly: report, do not reconcile
        return "anomaly: %s" % ex


def ff_orbit_histogram(inv, p, workers=1):
    subs = ff_enumerate_bilagrangians(inv, p, workers)
    ctx = _ff_context(inv, p) if inv.jordan and not inv.kronecker and inv.single_eigenvalue() else None
    hist = {}
    for L in subs:
        key = ff_orbit_key(inv, p, L, ctx)
        hist[key] = hist.get(key, 0) + 1
    return dict(sorted(hist.items()))


__all__ = [
    "InvariantSubspaceDesc", "invariant_subspaces", "build_invariant_subspace", "core_of_standard",
    "invariant_bilagrangian", "ff_enumerate_pencil", "ff_enumerate_bilagrangians",
    "ff_orbit_histogram", "ff_orbit_key",
]
