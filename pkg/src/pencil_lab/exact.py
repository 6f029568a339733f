"""Exact scalars, matrices and subspaces.

Everything here is field-generic: the rationals (``QQ``, backed by
``gmpy2.mpq``) and the prime fields ``GF(p)`` expose the same arithmetic,
so the algorithms above this layer run unchanged over both.  Matrices are
immutable; subspaces are stored as the reduced row echelon form of a row
basis, which makes equality a plain comparison.
"""

from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

from .errors import AmbientMismatch, InvalidInput, SizeMismatch

Rat = mpq


def to_rat(x):
    """Convert int, Fraction, mpq or a string like "-3/4" to an exact rational."""
    if isinstance(x, bool):
        raise InvalidInput("booleans are not rationals")
    if isinstance(x, type(mpq(0))):
        return x
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        try:
            if "/" in s:
                p, q = s.split("/")
                p, q = int(p.strip()), int(q.strip())
                if q == 0:
                    raise ZeroDivisionError
                return mpq(p, q)
            return mpq(int(s))
        except (ValueError, ZeroDivisionError):
            raise InvalidInput("malformed rational %r" % x) from None
    if isinstance(x, GFElem):
        raise InvalidInput("cannot lift a finite-field element to a rational")
    raise InvalidInput("unsupported scalar %r" % (x,))


class _Rationals:
    name = "QQ"
    characteristic = 0

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def __call__(self, x):
        return to_rat(x)

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (_get_qq, ())


def _get_qq():
    return QQ


QQ = _Rationals()


class GFElem:
    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _val(self, o):
        if isinstance(o, GFElem):
            return o.v
        if isinstance(o, int):
            return o
        return NotImplemented

    def __add__(self, o):
        w = self._val(o)
        if w is NotImplemented:
            return w
        return GFElem(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._val(o)
        if w is NotImplemented:
            return w
        return GFElem(self.v - w, self.p)

    def __rsub__(self, o):
        w = self._val(o)
        if w is NotImplemented:
            return w
        return GFElem(w - self.v, self.p)

    def __mul__(self, o):
        w = self._val(o)
        if w is NotImplemented:
            return w
        return GFElem(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        w = self._val(o)
        if w is NotImplemented:
            return w
        if w % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElem(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, o):
        w = self._val(o)
        if w is NotImplemented:
            return w
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElem(w * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return GFElem(-self.v, self.p)

    def __eq__(self, o):
        w = self._val(o)
        if w is NotImplemented:
            return False
        return (self.v - w) % self.p == 0

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return str(self.v)

    __str__ = __repr__


def is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class _PrimeField:
    def __init__(self, p):
        self.p = p
        self.characteristic = p
        self.name = "GF(%d)" % p
        self.zero = GFElem(0, p)
        self.one = GFElem(1, p)

    def __call__(self, x):
        if isinstance(x, GFElem):
            if x.p != self.p:
                raise InvalidInput("mixing GF(%d) and GF(%d)" % (x.p, self.p))
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return GFElem(x, self.p)
        r = to_rat(x)
        num, den = int(r.numerator), int(r.denominator)
        if den % self.p == 0:
            raise InvalidInput("%s has no image in GF(%d)" % (r, self.p))
        return GFElem(num * pow(den, -1, self.p), self.p)

    def elements(self):
        return [GFElem(i, self.p) for i in range(self.p)]

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (GF, (self.p,))


@lru_cache(maxsize=None)
def GF(p):
    if not is_prime(p):
        raise InvalidInput("%d is not prime" % p)
    return _PrimeField(p)


def field_of(x):
    if isinstance(x, GFElem):
        return GF(x.p)
    return QQ


# ---------------------------------------------------------------------------
# sparse Gauss-Jordan elimination, the workhorse behind rref/kernel/rank


def _sparse_rref(rows, zero):
    """Reduce a list of sparse rows (dict col -> value) to RREF.

    Returns a list of (pivot_col, row_dict) sorted by pivot; every row has a
    1 at its pivot and zeros at every other pivot column.
    """
    piv = {}
    one = zero + 1
    for r in rows:
        r = {c: v for c, v in r.items() if v}
        hit = [c for c in r if c in piv]
        for c in hit:
            a = r.get(c)
            if not a:
                continue
            for cc, vv in piv[c].items():
                nv = r.get(cc, zero) - a * vv
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
        if not r:
            continue
        pc = min(r)
        inv = one / r[pc]
        r = {c: v * inv for c, v in r.items()}
        for oc, orow in piv.items():
            a = orow.get(pc)
            if a:
                for cc, vv in r.items():
                    nv = orow.get(cc, zero) - a * vv
                    if nv:
                        orow[cc] = nv
                    else:
                        orow.pop(cc, None)
        piv[pc] = r
    return sorted(piv.items())


def _dense_to_sparse(rows):
    return [{j: v for j, v in enumerate(r) if v} for r in rows]


# ---------------------------------------------------------------------------


class Mat:
    """Immutable dense matrix over QQ or GF(p)."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows, field=QQ, ncols=None):
        rows = [tuple(field(x) for x in r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise SizeMismatch("ragged matrix rows")
        self.rows = tuple(rows)
        self.nrows = len(rows)
        self.ncols = ncols
        self.field = field

    @classmethod
    def _raw(cls, rows, ncols, field):
        m = cls.__new__(cls)
        m.rows = tuple(rows)
        m.nrows = len(m.rows)
        m.ncols = ncols
        m.field = field
        return m

    @classmethod
    def zeros(cls, n, m=None, field=QQ):
        m = n if m is None else m
        z = field.zero
        return cls._raw([(z,) * m for _ in range(n)], m, field)

    @classmethod
    def identity(cls, n, field=QQ):
        z, o = field.zero, field.one
        return cls._raw([tuple(o if i == j else z for j in range(n)) for i in range(n)], n, field)

    @classmethod
    def from_columns(cls, cols, n=None, field=None):
        cols = [tuple(c) for c in cols]
        if field is None:
            field = field_of(cols[0][0]) if cols and cols[0] else QQ
        if n is None:
            n = len(cols[0]) if cols else 0
        if not cols:
            return cls._raw([() for _ in range(n)], 0, field)
        return cls._raw([tuple(c[i] for c in cols) for i in range(n)], len(cols), field)

    @staticmethod
    def block_diag(mats, field=QQ):
        n = sum(m.nrows for m in mats)
        k = sum(m.ncols for m in mats)
        z = field.zero
        out = [[z] * k for _ in range(n)]
        r0 = c0 = 0
        for m in mats:
            for i, row in enumerate(m.rows):
                out[r0 + i][c0:c0 + m.ncols] = row
            r0 += m.nrows
            c0 += m.ncols
        return Mat._raw([tuple(r) for r in out], k, field)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def cols(self):
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self):
        return Mat._raw(list(zip(*self.rows)) if self.nrows else [() for _ in range(self.ncols)],
                        self.nrows, self.field)

    def __matmul__(self, o):
        if isinstance(o, Mat):
            if self.ncols != o.nrows:
                raise SizeMismatch("cannot multiply %s by %s" % (self.shape, o.shape))
            z = self.field.zero
            ocols = o.T.rows if o.nrows else [() for _ in range(o.ncols)]
            out = []
            for r in self.rows:
                nz = [(k, a) for k, a in enumerate(r) if a]
                out.append(tuple(_dot_nz(nz, c, z) for c in ocols))
            return Mat._raw(out, o.ncols, self.field)
        v = tuple(o)
        if len(v) != self.ncols:
            raise SizeMismatch("vector length %d vs %d columns" % (len(v), self.ncols))
        z = self.field.zero
        nz = [(k, a) for k, a in enumerate(v) if a]
        return tuple(_dot_nz(nz, r, z) for r in self.rows)

    def apply(self, v):
        return self @ v

    def __add__(self, o):
        if self.shape != o.shape:
            raise SizeMismatch("shape mismatch")
        return Mat._raw([tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, o.rows)],
                        self.ncols, self.field)

    def __sub__(self, o):
        if self.shape != o.shape:
            raise SizeMismatch("shape mismatch")
        return Mat._raw([tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, o.rows)],
                        self.ncols, self.field)

    def __neg__(self):
        return Mat._raw([tuple(-a for a in r) for r in self.rows], self.ncols, self.field)

    def scale(self, c):
        c = self.field(c)
        return Mat._raw([tuple(c * a for a in r) for r in self.rows], self.ncols, self.field)

    def __eq__(self, o):
        return isinstance(o, Mat) and self.shape == o.shape and self.rows == o.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Mat(%s)" % [[str(x) for x in r] for r in self.rows]

    def is_zero(self):
        return not any(any(r) for r in self.rows)

    def is_skew(self):
        n = self.nrows
        if n != self.ncols:
            return False
        return all(self.rows[i][j] == -self.rows[j][i] for i in range(n) for j in range(i, n))

    def to_lists(self):
        return [list(r) for r in self.rows]

    def to_strings(self):
        return [[str(x) for x in r] for r in self.rows]

    def mod(self, p):
        F = GF(p)
        return Mat([[F(x) for x in r] for r in self.rows], F, self.ncols)

    def rank(self):
        return len(_sparse_rref(_dense_to_sparse(self.rows), self.field.zero))

    def power(self, k):
        out = Mat.identity(self.nrows, self.field)
        for _ in range(k):
            out = out @ self
        return out

    def det(self):
        if self.nrows != self.ncols:
            raise SizeMismatch("determinant of a non-square matrix")
        a = [list(r) for r in self.rows]
        n = self.nrows
        d = self.field.one
        for k in range(n):
            p = next((i for i in range(k, n) if a[i][k]), None)
            if p is None:
                return self.field.zero
            if p != k:
                a[k], a[p] = a[p], a[k]
                d = -d
            d = d * a[k][k]
            inv = self.field.one / a[k][k]
            for i in range(k + 1, n):
                if a[i][k]:
                    f = a[i][k] * inv
                    ak = a[k]
                    ai = a[i]
                    for j in range(k, n):
                        if ak[j]:
                            ai[j] = ai[j] - f * ak[j]
        return d

    def inverse(self):
        n = self.nrows
        if n != self.ncols:
            raise SizeMismatch("inverse of a non-square matrix")
        z, o = self.field.zero, self.field.one
        aug = [dict(list({j: v for j, v in enumerate(r) if v}.items()) + [(n + i, o)])
               for i, r in enumerate(self.rows)]
        red = _sparse_rref(aug, z)
        if len(red) < n or red[n - 1][0] >= n:
            raise ZeroDivisionError("matrix is singular")
        return Mat._raw([tuple(row.get(n + j, z) for j in range(n)) for _, row in red], n, self.field)

    def solve(self, rhs):
        """One solution x of self @ x = rhs (free variables set to zero), or None."""
        n = self.ncols
        z = self.field.zero
        rows = []
        for r, b in zip(self.rows, rhs):
            d = {j: v for j, v in enumerate(r) if v}
            if b:
                d[n] = self.field(b)
            rows.append(d)
        red = _sparse_rref(rows, z)
        x = [z] * n
        for pc, row in red:
            if pc == n:
                return None
            x[pc] = row.get(n, z)
        return tuple(x)


def _dot_nz(nz, vec, z):
    s = z
    for k, a in nz:
        b = vec[k]
        if b:
            s = s + a * b
    return s


def hstack(mats):
    field = mats[0].field
    n = mats[0].nrows
    rows = [sum((m.rows[i] for m in mats), ()) for i in range(n)]
    return Mat._raw(rows, sum(m.ncols for m in mats), field)


def vstack(mats):
    mats = [m for m in mats]
    field = mats[0].field
    return Mat._raw([r for m in mats for r in m.rows], mats[0].ncols, field)


def vec(entries, field=QQ):
    return tuple(field(x) for x in entries)


def unit(n, i, field=QQ):
    return tuple(field.one if j == i else field.zero for j in range(n))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def is_zero_vec(v):
    return not any(v)


def bilinear(F, u, v):
    """u^T F v."""
    return _dot_nz([(k, a) for k, a in enumerate(u) if a], F @ v, F.field.zero)


# ---------------------------------------------------------------------------


class Subspace:
    """A subspace of F^n, stored as the RREF of a row basis (no zero rows)."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient, basis, pivots):
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def span(cls, vectors, ambient=None, field=None):
        vectors = [tuple(v) for v in vectors]
        if ambient is None:
            if not vectors:
                raise InvalidInput("ambient dimension needed for an empty span")
            ambient = len(vectors[0])
        if field is None:
            field = field_of(vectors[0][0]) if vectors and ambient else QQ
        for v in vectors:
            if len(v) != ambient:
                raise AmbientMismatch("vector of length %d in ambient %d" % (len(v), ambient))
        vectors = [tuple(field(x) for x in v) for v in vectors]
        red = _sparse_rref(_dense_to_sparse(vectors), field.zero)
        return cls._from_red(red, ambient, field)

    @classmethod
    def _from_red(cls, red, ambient, field):
        z = field.zero
        rows = [tuple(row.get(j, z) for j in range(ambient)) for _, row in red]
        return cls(ambient, Mat._raw(rows, ambient, field), tuple(pc for pc, _ in red))

    @classmethod
    def zero(cls, n, field=QQ):
        return cls(n, Mat._raw([], n, field), ())

    @classmethod
    def full(cls, n, field=QQ):
        return cls(n, Mat.identity(n, field), tuple(range(n)))

    @property
    def field(self):
        return self.basis.field

    @property
    def dim(self):
        return len(self.pivots)

    @property
    def rows(self):
        return self.basis.rows

    def __len__(self):
        return self.dim

    def __eq__(self, o):
        return isinstance(o, Subspace) and self.ambient == o.ambient and self.basis.rows == o.basis.rows

    def __hash__(self):
        return hash((self.ambient, self.basis.rows))

    def __repr__(self):
        return "Subspace(%d, %s)" % (self.ambient, self.basis.to_strings())

    def reduce(self, v):
        """Remainder of v modulo the subspace (zero at every pivot column)."""
        v = list(v)
        for pc, row in zip(self.pivots, self.basis.rows):
            a = v[pc]
            if a:
                for j, b in enumerate(row):
                    if b:
                        v[j] = v[j] - a * b
        return tuple(v)

    def contains(self, v):
        return not any(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def issubspace(self, o):
        self._check(o)
        return all(o.contains(r) for r in self.rows)

    __le__ = issubspace

    def _check(self, o):
        if self.ambient != o.ambient:
            raise AmbientMismatch("ambient %d vs %d" % (self.ambient, o.ambient))

    def __add__(self, o):
        return meet_join(self, o, "sum")

    def __and__(self, o):
        return meet_join(self, o, "intersect")

    def image(self, M):
        """{M x : x in self}, with M acting on column vectors."""
        return Subspace.span([M @ r for r in self.rows], M.nrows, self.field)

    def annihilator(self):
        return kernel(self.basis) if self.dim else Subspace.full(self.ambient, self.field)

    def coordinates(self, v):
        """Coordinates of v in the stored basis (v must lie in the subspace)."""
        return tuple(v[pc] for pc in self.pivots)

    def complement_coords(self, v):
        """Coordinates of v modulo the subspace, on the non-pivot columns."""
        r = self.reduce(v)
        pv = set(self.pivots)
        return tuple(r[j] for j in range(self.ambient) if j not in pv)

    def mod(self, p):
        return Subspace.span([[GF(p)(x) for x in r] for r in self.rows], self.ambient, GF(p))


def rref(m):
    """Canonical row space of m and an invertible transform T with T m = echelon rows padded by zeros."""
    n, k = m.nrows, m.ncols
    F = m.field
    if n == 0:
        return Subspace.zero(k, F), Mat._raw([], 0, F)
    aug = []
    for i, r in enumerate(m.rows):
        d = {j: v for j, v in enumerate(r) if v}
        d[k + i] = F.one
        aug.append(d)
    red = _sparse_rref(aug, F.zero)
    z = F.zero
    echelon = [(pc, row) for pc, row in red if pc < k]
    sub = Subspace._from_red([(pc, {c: v for c, v in row.items() if c < k}) for pc, row in echelon], k, F)
    T = Mat._raw([tuple(row.get(k + j, z) for j in range(n)) for _, row in red], n, F)
    return sub, T


def kernel(m):
    """{x : m x = 0} as a Subspace of F^cols."""
    F = m.field
    return _kernel_from_sparse(_dense_to_sparse(m.rows), m.ncols, F)


def _kernel_from_sparse(rows, ncols, F):
    red = _sparse_rref(rows, F.zero)
    pivots = [pc for pc, _ in red]
    pset = set(pivots)
    free = [j for j in range(ncols) if j not in pset]
    z, o = F.zero, F.one
    vecs = []
    for f in free:
        x = [z] * ncols
        x[f] = o
        for pc, row in red:
            a = row.get(f)
            if a:
                x[pc] = -a
        vecs.append(tuple(x))
    return Subspace.span(vecs, ncols, F) if vecs else Subspace.zero(ncols, F)


def sparse_kernel_basis(rows, ncols, F=QQ):
    """Kernel basis (list of dict vectors) of a sparse system, one vector per free column."""
    red = _sparse_rref(rows, F.zero)
    pset = {pc for pc, _ in red}
    out = []
    for f in range(ncols):
        if f in pset:
            continue
        x = {f: F.one}
        for pc, row in red:
            a = row.get(f)
            if a:
                x[pc] = -a
        out.append(x)
    return out


def meet_join(a, b, kind):
    a._check(b)
    F = a.field
    if kind == "sum":
        return Subspace.span(list(a.rows) + list(b.rows), a.ambient, F)
    if kind == "intersect":
        if a.dim == 0 or b.dim == 0:
            return Subspace.zero(a.ambient, F)
        cons = list(a.annihilator().rows) + list(b.annihilator().rows)
        if not cons:
            return Subspace.full(a.ambient, F)
        return kernel(Mat._raw(cons, a.ambient, F))
    raise InvalidInput("kind must be 'intersect' or 'sum'")


def sum_all(spaces, ambient, field=QQ):
    rows = [r for s in spaces for r in s.rows]
    return Subspace.span(rows, ambient, field) if rows else Subspace.zero(ambient, field)


def intersect_all(spaces):
    out = spaces[0]
    for s in spaces[1:]:
        out = out & s
    return out


def preimage(M, S):
    """{x : M x in S}."""
    F = M.field
    ann = S.annihilator()
    if ann.dim == 0:
        return Subspace.full(M.ncols, F)
    return kernel(Mat._raw([tuple(_row_times(a, M)) for a in ann.rows], M.ncols, F))


def _row_times(a, M):
    z = M.field.zero
    out = [z] * M.ncols
    for k, x in enumerate(a):
        if x:
            for j, y in enumerate(M.rows[k]):
                if y:
                    out[j] = out[j] + x * y
    return out


def perp(S, F):
    """{v : s^T F v = 0 for all s in S}."""
    if S.dim == 0:
        return Subspace.full(F.ncols, F.field)
    return kernel(S.basis @ F)


def is_isotropic(S, F):
    if S.dim == 0:
        return True
    return (S.basis @ F @ S.basis.T).is_zero()


# ---------------------------------------------------------------------------
# polynomials in lambda (coefficient tuples, lowest degree first)


def _ptrim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return tuple(a)


def padd(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else None
        y = b[i] if i < len(b) else None
        out.append(x + y if x is not None and y is not None else (x if y is None else y))
    return _ptrim(out)


def pneg(a):
    return tuple(-x for x in a)


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return ()
    z = a[0] * 0
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return _ptrim(out)


def pdivexact(a, b):
    """Exact quotient a / b; raises if the division leaves a remainder."""
    a = list(a)
    b = _ptrim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    db = len(b) - 1
    lead = b[-1]
    q = [a[0] * 0] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        if c:
            q[i - db] = c
            for j, y in enumerate(b):
                a[i - db + j] = a[i - db + j] - c * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return _ptrim(q)


class PolyMat:
    """Matrix with polynomial entries in lambda."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows, field=QQ):
        self.rows = tuple(tuple(_ptrim(e) for e in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        self.field = field

    @classmethod
    def from_pencil(cls, A, B):
        """Entries A_ij + lambda B_ij."""
        if A.shape != B.shape:
            raise SizeMismatch("pencil generators differ in shape")
        return cls([[(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)], A.field)

    def evaluate(self, lam):
        lam = self.field(lam)
        z = self.field.zero
        out = []
        for r in self.rows:
            row = []
            for e in r:
                s = z
                for c in reversed(e):
                    s = s * lam + c
                row.append(s)
            out.append(tuple(row))
        return Mat._raw(out, self.ncols, self.field)

    def degree(self):
        return max((len(e) - 1 for r in self.rows for e in r if e), default=-1)


def rank_over_lambda(p):
    """Rank over F(lambda) by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in p.rows]
    n, m = p.nrows, p.ncols
    prev = (p.field.one,)
    r = 0
    for k in range(m):
        if r == n:
            break
        piv = next((i for i in range(r, n) if a[i][k]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pk = a[r][k]
        for i in range(r + 1, n):
            aik = a[i][k]
            for j in range(k + 1, m):
                num = psub(pmul(pk, a[i][j]), pmul(aik, a[r][j]))
                a[i][j] = pdivexact(num, prev) if num else ()
            a[i][k] = ()
        prev = pk
        r += 1
    return r
