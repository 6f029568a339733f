"""Pencils of skew-symmetric forms and their Jordan-Kronecker invariants.

A pencil is stored by its two generators ``A`` and ``B``; the member at
``lam`` is ``A + lam*B`` and the member at infinity is ``B``.  Block
conventions for synthesized pencils:

* Jordan block with finite eigenvalue ``t`` and half-size ``n``, basis
  ``e1..en, f1..fn``: ``B = [[0, I], [-I, 0]]`` and ``A = [[0, J], [-J^T, 0]]``
  with ``J`` upper bidiagonal (``t`` on the diagonal, ones above).  The
  recursion operator ``B^-1 A`` sends ``e_i -> e_{i+1}`` and ``f_j -> f_{j-1}``
  when ``t = 0``.
* Jordan block at infinity: the generators above with ``t = 0``, swapped.
* Kronecker block of size ``2k+1``, basis ``e1..ek, f0..fk``: the upper
  right ``k x (k+1)`` corner of ``A`` is ``[I | 0]`` and that of ``B`` is
  ``[0 | I]``.
"""

import random
from dataclasses import dataclass, field as dc_field

import sympy

from .errors import (
    InvalidInput, NonRationalEigenvalue, NotGeneric, NotJordan, NotNilpotent,
    NotSingleEigenvalue, NotSkewSymmetric, SizeMismatch,
)
from .exact import (
    QQ, GFElem, Mat, PolyMat, Subspace, bilinear, kernel, perp,
    rank_over_lambda, sum_all, to_rat, unit,
)


class Eigenvalue:
    """A finite rational eigenvalue, or infinity (``value is None``).

    Over GF(p) the value is the residue in 0..p-1.
    """

    __slots__ = ("value",)

    def __init__(self, value=None):
        if isinstance(value, GFElem):
            value = int(value)
        self.value = None if value is None else to_rat(value)

    @classmethod
    def of(cls, x):
        if isinstance(x, Eigenvalue):
            return x
        if x is None:
            return INF
        if isinstance(x, str):
            return cls.parse(x)
        return cls(x)

    @classmethod
    def parse(cls, s):
        t = s.strip().lower()
        if t in ("inf", "oo", "infinity", "∞"):
            return INF
        return cls(to_rat(t))

    @property
    def infinite(self):
        return self.value is None

    def key(self):
        return (1, 0) if self.value is None else (0, self.value)

    def __eq__(self, o):
        return isinstance(o, Eigenvalue) and self.value == o.value

    def __lt__(self, o):
        return self.key() < o.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return "inf" if self.value is None else str(self.value)

    __repr__ = __str__


INF = Eigenvalue(None)
ZERO = Eigenvalue(0)


class JKInvariants:
    """Jordan blocks as (eigenvalue, half-size) pairs plus Kronecker indices k."""

    __slots__ = ("jordan", "kronecker")

    def __init__(self, jordan=(), kronecker=()):
        jj = []
        for ev, n in jordan:
            n = int(n)
            if n < 1:
                raise InvalidInput("Jordan half-size must be positive")
            jj.append((Eigenvalue.of(ev), n))
        kk = [int(k) for k in kronecker]
        if any(k < 0 for k in kk):
            raise InvalidInput("Kronecker index must be non-negative")
        self.jordan = tuple(sorted(jj, key=lambda t: (t[0].key(), -t[1])))
        self.kronecker = tuple(sorted(kk, reverse=True))

    @classmethod
    def nilpotent(cls, half_sizes):
        return cls([(ZERO, n) for n in half_sizes])

    @classmethod
    def parse(cls, spec):
        jordan, kron = [], []
        for tok in spec.replace(";", ",").split(","):
            tok = tok.strip()
            if not tok:
                continue
            try:
                head, size = tok.rsplit(":", 1)
                size = int(size)
            except ValueError:
                raise InvalidInput("bad invariant token %r" % tok) from None
            if head.upper() == "K":
                kron.append(size)
            elif head[:1].upper() == "J":
                jordan.append((Eigenvalue.parse(head[1:]), size))
            else:
                raise InvalidInput("bad invariant token %r" % tok)
        return cls(jordan, kron)

    @property
    def dim(self):
        return 2 * sum(n for _, n in self.jordan) + sum(2 * k + 1 for k in self.kronecker)

    @property
    def rank(self):
        return self.dim - len(self.kronecker)

    @property
    def half_sizes(self):
        return tuple(n for _, n in self.jordan)

    def eigenvalues(self):
        return sorted({ev for ev, _ in self.jordan})

    def single_eigenvalue(self):
        evs = self.eigenvalues()
        return evs[0] if len(evs) == 1 and not self.kronecker else None

    def __eq__(self, o):
        return isinstance(o, JKInvariants) and self.jordan == o.jordan and self.kronecker == o.kronecker

    def __hash__(self):
        return hash((self.jordan, self.kronecker))

    def __str__(self):
        j = ",".join("J%s:%d" % (ev, n) for ev, n in self.jordan)
        k = ",".join("K:%d" % k for k in self.kronecker)
        return j + (";" + k if k else "") if j else k

    def __repr__(self):
        return "JKInvariants(%r)" % str(self)

    def describe(self):
        groups = []
        for ev, n in self.jordan:
            if groups and groups[-1][0] == (ev, n):
                groups[-1][1] += 1
            else:
                groups.append([(ev, n), 1])
        parts = ["Jordan(%s,%d)×%d" % (ev, n, c) for (ev, n), c in groups]
        if self.kronecker:
            parts.append("Kronecker " + ",".join(str(k) for k in self.kronecker))
        return "{" + "; ".join(parts) + "}"

    def to_json(self):
        return {"jordan": [[str(ev), n] for ev, n in self.jordan], "kronecker": list(self.kronecker)}


@dataclass(frozen=True)
class Pencil:
    dim: int
    A: Mat
    B: Mat

    @property
    def field(self):
        return self.A.field

    def form(self, lam):
        """The member A + lam*B; ``lam=None`` gives B."""
        if lam is None:
            return self.B
        return self.A + self.B.scale(lam)

    def congruent(self, S):
        return Pencil(S.ncols, S.T @ self.A @ S, S.T @ self.B @ S)

    def mod(self, p):
        return Pencil(self.dim, self.A.mod(p), self.B.mod(p))


def make_pencil(A, B):
    if not isinstance(A, Mat):
        A = Mat(A)
    if not isinstance(B, Mat):
        B = Mat(B, A.field)
    if A.nrows != A.ncols or B.nrows != B.ncols:
        raise SizeMismatch("generators must be square")
    if A.shape != B.shape:
        raise SizeMismatch("generators differ in size")
    if not A.is_skew():
        raise NotSkewSymmetric("A is not skew-symmetric")
    if not B.is_skew():
        raise NotSkewSymmetric("B is not skew-symmetric")
    return Pencil(A.nrows, A, B)


@dataclass(frozen=True)
class Block:
    kind: str            # "jordan" or "kronecker"
    eigenvalue: object   # Eigenvalue, or None for Kronecker blocks
    size: int            # half-size n, or Kronecker index k
    e: tuple
    f: tuple


@dataclass(frozen=True)
class StandardBasis:
    S: Mat
    layout: tuple = dc_field(default=())

    def e_vectors(self):
        return [self.S.col(j) for b in self.layout for j in b.e]

    def f_vectors(self):
        return [self.S.col(j) for b in self.layout for j in b.f]


def _skew_corner(X, field):
    r, c = X.nrows, X.ncols
    z = field.zero
    rows = [tuple([z] * r) + X.rows[i] for i in range(r)]
    rows += [tuple(-X.rows[i][j] for i in range(r)) + (z,) * c for j in range(c)]
    return Mat._raw(rows, r + c, field)


def jordan_block_forms(ev, n, field=QQ):
    """(A, B) for one Jordan block in standard form."""
    z, o = field.zero, field.one
    ident = Mat.identity(n, field)
    shift = Mat._raw([tuple(o if j == i + 1 else z for j in range(n)) for i in range(n)], n, field)
    ev = Eigenvalue.of(ev)
    if ev.infinite:
        return _skew_corner(ident, field), _skew_corner(shift, field)
    J = shift + ident.scale(field(ev.value))
    return _skew_corner(J, field), _skew_corner(ident, field)


def kronecker_block_forms(k, field=QQ):
    z, o = field.zero, field.one
    if k == 0:
        return Mat.zeros(1, 1, field), Mat.zeros(1, 1, field)
    XA = Mat._raw([tuple(o if j == i else z for j in range(k + 1)) for i in range(k)], k + 1, field)
    XB = Mat._raw([tuple(o if j == i + 1 else z for j in range(k + 1)) for i in range(k)], k + 1, field)
    return _skew_corner(XA, field), _skew_corner(XB, field)


def standard_layout(inv):
    out, c = [], 0
    for ev, n in inv.jordan:
        out.append(Block("jordan", ev, n, tuple(range(c, c + n)), tuple(range(c + n, c + 2 * n))))
        c += 2 * n
    for k in inv.kronecker:
        out.append(Block("kronecker", None, k, tuple(range(c, c + k)), tuple(range(c + k, c + 2 * k + 1))))
        c += 2 * k + 1
    return tuple(out)


def synthesize(inv, field=QQ):
    """Block-diagonal pencil in the standard layout of ``inv``."""
    As, Bs = [], []
    for ev, n in inv.jordan:
        a, b = jordan_block_forms(ev, n, field)
        As.append(a)
        Bs.append(b)
    for k in inv.kronecker:
        a, b = kronecker_block_forms(k, field)
        As.append(a)
        Bs.append(b)
    if not As:
        return Pencil(0, Mat.zeros(0, 0, field), Mat.zeros(0, 0, field))
    A = Mat.block_diag(As, field)
    return Pencil(A.nrows, A, Mat.block_diag(Bs, field))


def random_invertible(n, rng, field=QQ, lo=-3, hi=3):
    while True:
        S = Mat([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)], field)
        if S.det():
            return S


def scramble(p, seed):
    """Congruence by a seeded random invertible matrix with entries in -3..3."""
    S = random_invertible(p.dim, random.Random(seed), p.field)
    return p.congruent(S), S


def pencil_rank(p):
    return rank_over_lambda(PolyMat.from_pencil(p.A, p.B))


def regular_samples(p, count, rk=None):
    """The first ``count`` values 0, 1, 2, ... at which A + lam*B has full pencil rank."""
    rk = pencil_rank(p) if rk is None else rk
    F = p.field
    out, lam = [], 0
    limit = F.characteristic or None
    while len(out) < count:
        if limit is not None and lam >= limit:
            break
        if p.form(F(lam)).rank() == rk:
            out.append(F(lam))
        lam += 1
    return out


def core_mantle(p):
    """Core K (sum of kernels of regular members) and mantle M = K-perp."""
    rk = pencil_rank(p)
    if rk == p.dim:
        return Subspace.zero(p.dim, p.field), Subspace.full(p.dim, p.field)
    lams = regular_samples(p, p.dim + 1, rk)
    K = sum_all([kernel(p.form(l)) for l in lams], p.dim, p.field)
    return K, perp(K, p.form(lams[0]))


def kronecker_indices(p, rk=None):
    rk = pencil_rank(p) if rk is None else rk
    count = p.dim - rk
    if count == 0:
        return ()
    lams = regular_samples(p, p.dim + 1, rk)
    d = [0]
    acc = Subspace.zero(p.dim, p.field)
    for l in lams:
        acc = acc + kernel(p.form(l))
        d.append(acc.dim)
        if acc.dim == d[-2] and len(d) > 2:
            break
    c = [d[m] - d[m - 1] for m in range(1, len(d))] + [0]
    out = []
    for j in range(len(c) - 1):
        out += [j] * (c[j] - c[j + 1])
    return tuple(sorted(out, reverse=True))


def quotient_forms(p, U, Uperp):
    """Section (columns spanning a complement of U in Uperp), projection and quotient pencil."""
    zero_at = set(U.pivots)
    F = p.field
    cons = [unit(p.dim, j, F) for j in zero_at]
    if cons:
        Z = kernel(Mat._raw(cons, p.dim, F))
        sec_space = Uperp & Z
    else:
        sec_space = Uperp
    sec = sec_space.basis.T
    rows = []
    for i, pc in enumerate(sec_space.pivots):
        # coordinate i of x = (x reduced mod U)[pc]
        row = list(unit(p.dim, pc, F))
        for upc, urow in zip(U.pivots, U.rows):
            a = urow[pc]
            if a:
                row[upc] = row[upc] - a
        rows.append(tuple(row))
    proj = Mat._raw(rows, p.dim, F)
    if sec.ncols == 0:
        q = Pencil(0, Mat.zeros(0, 0, F), Mat.zeros(0, 0, F))
    else:
        q = Pencil(sec.ncols, sec.T @ p.A @ sec, sec.T @ p.B @ sec)
    return sec, proj, q


def _working_generators(p):
    """(A0, B0, mu, swapped) with B0 nondegenerate, spanning the same pencil.

    Unswapped: B0 = B, A0 = A and eigenvalues map identically.  Swapped:
    B0 = A + mu*B, A0 = B and an eigenvalue r of B0^-1 A0 corresponds to
    1/r - mu (infinity when r = 0).
    """
    if p.dim == 0 or p.B.det():
        return p.A, p.B, None, False
    mu = 0
    F = p.field
    while True:
        B0 = p.form(F(mu))
        if B0.det():
            return p.B, B0, F(mu), True
        mu += 1
        if F.characteristic and mu >= F.characteristic:
            raise NotJordan("no nondegenerate member over %s" % F.name)


def _map_back(r, mu, swapped):
    if not swapped:
        return Eigenvalue(r)
    if r == 0:
        return INF
    return Eigenvalue(1 / r - mu)


def charpoly(M):
    """Characteristic polynomial coefficients (highest degree first) by Faddeev-LeVerrier."""
    n = M.nrows
    F = M.field
    coeffs = [F.one]
    Mk = Mat.zeros(n, n, F)
    ident = Mat.identity(n, F)
    for k in range(1, n + 1):
        Mk = M @ (Mk + ident.scale(coeffs[-1]))
        tr = sum((Mk.rows[i][i] for i in range(n)), F.zero)
        coeffs.append(-tr / k)
    return coeffs


def rational_eigenvalues(P):
    """Distinct rational roots of the characteristic polynomial of P.

    Raises NonRationalEigenvalue when an irreducible factor of degree >= 2
    remains.
    """
    if P.nrows == 0:
        return []
    F = P.field
    if F is not QQ:
        roots = [F(x) for x in range(F.characteristic)
                 if kernel(P - Mat.identity(P.nrows, F).scale(x)).dim]
        return roots
    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in charpoly(P)], x)
    out = []
    for fac, _ in poly.factor_list()[1]:
        if fac.degree() > 1:
            raise NonRationalEigenvalue("characteristic polynomial has factor %s" % fac.as_expr())
        a, b = fac.all_coeffs()
        r = -sympy.Rational(b) / sympy.Rational(a)
        out.append(to_rat("%d/%d" % (r.p, r.q)))
    return sorted(out)


def weyr(N, space=None, limit=None):
    """Dimensions dim(space ∩ Ker N^j) for j = 0, 1, ... until stable."""
    n = N.nrows
    F = N.field
    out = [0]
    Nj = Mat.identity(n, F)
    top = space.dim if space is not None else n
    for _ in range(limit or n + 1):
        Nj = N @ Nj
        K = kernel(Nj)
        d = (K & space).dim if space is not None else K.dim
        out.append(d)
        if d == top or d == out[-2]:
            break
    return out


def partition_from_weyr(w):
    """Jordan block sizes (descending) from the kernel-dimension sequence."""
    inc = [w[j] - w[j - 1] for j in range(1, len(w))] + [0]
    sizes = []
    for j in range(len(inc) - 1):
        sizes += [j + 1] * (inc[j] - inc[j + 1])
    return tuple(sorted(sizes, reverse=True))


def jk_invariants(p):
    rk = pencil_rank(p)
    kron = kronecker_indices(p, rk)
    if kron:
        K, M = core_mantle(p)
        _, _, q = quotient_forms(p, K, M)
    else:
        q = p
    jordan = []
    if q.dim:
        A0, B0, mu, swapped = _working_generators(q)
        P = B0.inverse() @ A0
        ident = Mat.identity(q.dim, q.field)
        for r in rational_eigenvalues(P):
            sizes = partition_from_weyr(weyr(P - ident.scale(r)))
            if len(sizes) % 2:
                raise InvalidInput("operator blocks do not pair up; generators are not compatible")
            ev = _map_back(r, mu, swapped)
            jordan += [(ev, n) for n in sizes[::2]]
        if 2 * sum(n for _, n in jordan) != q.dim:
            raise NonRationalEigenvalue("spectrum is not rational")
    return JKInvariants(jordan, kron)


class JordanContext:
    """Working generators (A0, B0) of a Jordan pencil with B0 nondegenerate.

    ``P = B0^-1 A0`` is the recursion operator.  When the pencil has a single
    eigenvalue the generators are shifted (or swapped, for infinity) so that
    P is nilpotent, which is the form all height computations use.
    """

    def __init__(self, pencil, A0, B0, eigenvalue=None, mu=None, swapped=False):
        self.pencil = pencil
        self.A0 = A0
        self.B0 = B0
        self.eigenvalue = eigenvalue
        self.mu = mu
        self.swapped = swapped
        self.field = A0.field
        self.dim = A0.nrows
        self.P = B0.inverse() @ A0 if self.dim else A0
        self._powers = [Mat.identity(self.dim, self.field)]
        self._kers = {}
        self._ims = {}

    @classmethod
    def of(cls, p, normalize=True):
        if p.dim and pencil_rank(p) != p.dim:
            raise NotJordan("pencil has a Kronecker part")
        A0, B0, mu, swapped = _working_generators(p)
        ctx = cls(p, A0, B0, None, mu, swapped)
        if not normalize or p.dim == 0:
            return ctx
        rs = rational_eigenvalues(ctx.P)
        if len(rs) == 1:
            ev = _map_back(rs[0], mu, swapped)
            A1, B1 = normalized_generators(p, ev)
            return cls(p, A1, B1, ev)
        return ctx

    @classmethod
    def from_generators(cls, A0, B0, eigenvalue=None):
        p = Pencil(A0.nrows, A0, B0)
        return cls(p, A0, B0, eigenvalue)

    @property
    def nilpotent(self):
        return self.dim == 0 or self.power(self.dim).is_zero()

    def require_nilpotent(self):
        if not self.nilpotent:
            raise NotNilpotent("recursion operator is not nilpotent")

    def power(self, k):
        while len(self._powers) <= k:
            self._powers.append(self.P @ self._powers[-1])
        return self._powers[k]

    def ker(self, k):
        if k not in self._kers:
            self._kers[k] = kernel(self.power(k))
        return self._kers[k]

    def im(self, k):
        if k not in self._ims:
            M = self.power(k)
            self._ims[k] = Subspace.span(M.T.rows, self.dim, self.field) if self.dim else Subspace.zero(0, self.field)
        return self._ims[k]

    def height_of_space(self):
        k = 0
        while not self.power(k).is_zero():
            k += 1
        return k

    def is_invariant(self, S):
        return all(S.contains(self.P @ r) for r in S.rows)

    def mod(self, p):
        return JordanContext.from_generators(self.A0.mod(p), self.B0.mod(p), self.eigenvalue)


def jordan_context(p):
    return JordanContext.of(p)


def normalized_generators(p, ev):
    ev = Eigenvalue.of(ev)
    if ev.infinite:
        return p.B, p.A
    return p.A - p.B.scale(p.field(ev.value)), p.B


def normalize_to_nilpotent(p, ev):
    """Pencil with the same members whose recursion operator is nilpotent."""
    A1, B1 = normalized_generators(p, ev)
    q = Pencil(p.dim, A1, B1)
    if p.dim == 0:
        return q
    if not B1.det():
        raise NotSingleEigenvalue("%s is not the only eigenvalue" % ev)
    N = B1.inverse() @ A1
    if not N.power(p.dim).is_zero():
        raise NotSingleEigenvalue("%s is not the only eigenvalue" % ev)
    return q


def decompose_by_eigenvalue(ctx):
    """Generalized eigenspaces as (eigenvalue, restricted pencil, embedding)."""
    if isinstance(ctx, Pencil):
        ctx = JordanContext.of(ctx, normalize=False)
    p = ctx.pencil
    n = ctx.dim
    F = ctx.field
    ident = Mat.identity(n, F)
    out = []
    for r in rational_eigenvalues(ctx.P):
        E = kernel((ctx.P - ident.scale(r)).power(n)).basis.T
        if ctx.eigenvalue is not None:
            ev = ctx.eigenvalue
        else:
            ev = _map_back(r, ctx.mu, ctx.swapped)
        out.append((ev, Pencil(E.ncols, E.T @ p.A @ E, E.T @ p.B @ E), E))
    if sum(E.ncols for _, _, E in out) != n:
        raise NonRationalEigenvalue("spectrum is not rational")
    out.sort(key=lambda t: t[0].key())
    return out


def _extract_blocks(B, N, W, L=None):
    """Greedy extraction of standard Jordan chains inside the N-invariant space W.

    Returns a list of (e_vectors, f_vectors).  With ``L`` given, every top
    vector is taken from L; NotGeneric is raised when L has no vector of the
    current maximal height.
    """
    F = B.field
    blocks = []
    while W.dim:
        n = 0
        pw = [r for r in W.rows]
        while any(any(v) for v in pw):
            pw = [N @ v for v in pw]
            n += 1
        pool = (L & W).rows if L is not None else W.rows
        e1 = None
        for v in pool:
            w = v
            for _ in range(n - 1):
                w = N @ w
            if any(w):
                e1 = v
                break
        if e1 is None:
            raise NotGeneric("no vector of maximal height %d in the subspace" % n)
        es = [e1]
        for _ in range(n - 1):
            es.append(N @ es[-1])
        # f in W with B(e_i, f) = delta_{i,n}
        Wt = W.basis.T
        coef = Mat._raw(es, B.ncols, F) @ B @ Wt
        rhs = [F.zero] * (n - 1) + [F.one]
        c = coef.solve(rhs)
        f = Wt @ c
        fs = [f]
        for _ in range(n - 1):
            fs.append(N @ fs[-1])
        fs.reverse()  # f_1, ..., f_n
        blocks.append((es, fs))
        chain = Subspace.span(es + fs, B.nrows, F)
        W = W & perp(chain, B)
    return blocks


def standard_basis_nilpotent(ctx, L=None):
    """Standard basis for a nilpotent context; blocks in non-increasing half-size."""
    ctx.require_nilpotent()
    n = ctx.dim
    F = ctx.field
    blocks = _extract_blocks(ctx.B0, ctx.P, Subspace.full(n, F), L)
    cols, layout, c = [], [], 0
    ev = ctx.eigenvalue if ctx.eigenvalue is not None else ZERO
    for es, fs in blocks:
        k = len(es)
        cols += es + fs
        layout.append(Block("jordan", ev, k, tuple(range(c, c + k)), tuple(range(c + k, c + 2 * k))))
        c += 2 * k
    return StandardBasis(Mat.from_columns(cols, n, F) if cols else Mat.zeros(n, 0, F), tuple(layout))


def standard_basis(p):
    """Standard basis of a Jordan pencil (any rational spectrum)."""
    if p.dim and pencil_rank(p) != p.dim:
        raise NotJordan("standard bases are built for Jordan pencils only")
    F = p.field
    cols, layout, c = [], [], 0
    for ev, q, E in decompose_by_eigenvalue(JordanContext.of(p, normalize=False)):
        A1, B1 = normalized_generators(q, ev)
        sub = standard_basis_nilpotent(JordanContext(q, A1, B1, ev))
        S = E @ sub.S
        cols += S.cols()
        for b in sub.layout:
            layout.append(Block("jordan", ev, b.size, tuple(j + c for j in b.e), tuple(j + c for j in b.f)))
        c += S.ncols
    return StandardBasis(Mat.from_columns(cols, p.dim, F) if cols else Mat.zeros(0, 0, F), tuple(layout))


def check_standard_basis(p, sb):
    """True when the congruence by sb.S yields exactly the block forms of its layout."""
    inv = JKInvariants([(b.eigenvalue, b.size) for b in sb.layout if b.kind == "jordan"],
                       [b.size for b in sb.layout if b.kind == "kronecker"])
    ref = synthesize(inv, p.field)
    # permute reference to the recorded layout order
    order = []
    for b in sb.layout:
        order += list(b.e) + list(b.f)
    q = p.congruent(sb.S)
    if order != list(range(p.dim)):
        return False
    got_layout = standard_layout(inv)
    if [(b.eigenvalue, b.size) for b in got_layout] != [(b.eigenvalue, b.size) for b in sb.layout]:
        return False
    return q.A == ref.A and q.B == ref.B


def pairing(F, u, v):
    return bilinear(F, u, v)


__all__ = [
    "Eigenvalue", "INF", "ZERO", "JKInvariants", "Pencil", "Block", "StandardBasis",
    "make_pencil", "synthesize", "standard_layout", "scramble", "pencil_rank", "core_mantle",
    "jk_invariants", "JordanContext", "jordan_context", "normalize_to_nilpotent",
    "decompose_by_eigenvalue", "standard_basis_nilpotent", "standard_basis",
    "check_standard_basis", "regular_samples", "kronecker_indices", "quotient_forms",
    "rational_eigenvalues", "weyr", "partition_from_weyr",
]
