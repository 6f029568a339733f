"""Orbit invariants and canonical forms of bi-Lagrangian subspaces.

Everything here works with a nilpotent recursion operator P (a Jordan pencil
with one eigenvalue, normalized).  Block half-sizes of the ambient are read
from the Weyr sequence of P; every block of half-size n shows up as two
operator chains of length n.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import comb

from .aut import aut_algebra, orbit_tangent_dim
from .errors import (
    InvalidParameters, NotBiLagrangian, NotInvariant, NotSemisimple, NotSingleEigenvalueJordan, NotTwoBlocks,
    PencilLabError, QueryShapeMismatch, UnsupportedAmbient,
)
from .exact import Mat, Subspace, perp, preimage, sum_all, unit
from .pencil import (
    JKInvariants, JordanContext, Pencil, core_mantle, partition_from_weyr, quotient_forms, synthesize,
)


def as_context(x):
    if isinstance(x, JordanContext):
        return x
    if isinstance(x, Pencil):
        return JordanContext.of(x)
    raise TypeError("expected a pencil or a Jordan context")


def nilpotent_context(x):
    ctx = as_context(x)
    if not ctx.nilpotent:
        raise NotSingleEigenvalueJordan("a Jordan pencil with a single eigenvalue is required")
    return ctx


def half_sizes(ctx):
    return partition_from_weyr(_weyr_in(ctx, Subspace.full(ctx.dim, ctx.field)))[::2]


def size_groups(sizes):
    """[(n, multiplicity)] for distinct n, descending."""
    out = []
    for n in sorted(sizes, reverse=True):
        if out and out[-1][0] == n:
            out[-1][1] += 1
        else:
            out.append([n, 1])
    return [tuple(g) for g in out]


def subspace_height(ctx, L):
    k = 0
    rows = list(L.rows)
    while any(any(v) for v in rows):
        rows = [ctx.P @ v for v in rows]
        k += 1
    return k


def subspace_depth(ctx, L):
    if L.dim == 0:
        return ctx.height_of_space()
    d = 0
    while L <= ctx.im(d + 1) and d < ctx.dim:
        d += 1
    return d


@dataclass(frozen=True)
class HeightProfile:
    h: int
    d: int
    table: tuple

    def to_json(self):
        return {"h": self.h, "d": self.d, "table": [list(r) for r in self.table]}


def height_profile(ctx, L):
    ctx = nilpotent_context(ctx)
    top = ctx.height_of_space()
    table = tuple(tuple((L & ctx.ker(a) & ctx.im(b)).dim for b in range(top + 1)) for a in range(top + 1))
    return HeightProfile(subspace_height(ctx, L), subspace_depth(ctx, L), table)


def restriction_jordan_type(ctx, L):
    ctx = nilpotent_context(ctx)
    if not ctx.is_invariant(L):
        raise NotInvariant("subspace is not invariant under the recursion operator")
    return partition_from_weyr(_weyr_in(ctx, L))


def quotient_jordan_type(ctx, L, U):
    """Jordan type of P acting on L/U (U ⊆ L, both invariant)."""
    dims = [0]
    j = 0
    while dims[-1] < L.dim - U.dim:
        j += 1
        dims.append((L & preimage(ctx.power(j), U)).dim - U.dim)
        if j > ctx.dim + 1:
            break
    return partition_from_weyr(dims)


def is_generic(ctx, L):
    """Top-orbit test: for each distinct half-size n with multiplicity l, L must
    meet Ker P^n in l dimensions beyond (Ker P^n ∩ Im P) + Ker P^(n-1)."""
    ctx = as_context(ctx)
    if not ctx.nilpotent:
        from .subspace import eigen_components
        return all(is_generic(c, Lc) for _, c, _, Lc in eigen_components(ctx.pencil, L))
    for n, l in size_groups(half_sizes(ctx)):
        X = ctx.ker(n)
        Y = (X & ctx.im(1)) + ctx.ker(n - 1)
        if ((L & X) + Y).dim - Y.dim != l:
            return False
    return True


# ---------------------------------------------------------------------------
# semisimple decomposition


@dataclass(frozen=True)
class DecompBlock:
    size: int
    height: int
    e: tuple
    f: tuple
    part: Subspace


@dataclass(frozen=True)
class Decomposition:
    blocks: tuple
    residue: object  # None, or (W, L ∩ W) where no further block splits off

    @property
    def semisimple(self):
        return self.residue is None

    def heights(self):
        return [(b.height, b.size) for b in self.blocks]


def _chain(N, v, n):
    out = [v]
    for _ in range(n - 1):
        out.append(N @ out[-1])
    return out


def _weyr_in(ctx, W):
    out = [0]
    for j in range(1, ctx.dim + 2):
        d = (W & ctx.ker(j)).dim
        out.append(d)
        if d == W.dim or d == out[-2]:
            break
    return out


def _split(ctx, L, W):
    B, N = ctx.B0, ctx.P
    F = ctx.field
    LW = L & W
    if W.dim == 0:
        return [], None
    h = subspace_height(ctx, LW)
    sizes = partition_from_weyr(_weyr_in(ctx, W))[::2]
    best = ([], (W, LW))
    for n in sorted(set(sizes), reverse=True):
        if n < h:
            continue
        kerW = W & ctx.ker(n)
        Y = kerW & preimage(ctx.power(n - h), L)
        top = W.image(ctx.power(n))
        y = next((v for v in Y.rows if not top.contains(ctx.power(n - 1) @ v)), None)
        if y is None:
            continue
        es = _chain(N, y, n)
        Kt = kerW.basis.T
        coef = Mat._raw(es, ctx.dim, F) @ B @ Kt
        c = coef.solve([F.zero] * (n - 1) + [F.one])
        if c is None:
            continue
        fs = _chain(N, Kt @ c, n)[::-1]
        part = Subspace.span(es[n - h:] + fs[:n - h], ctx.dim, F)
        blk = DecompBlock(n, h, tuple(es), tuple(fs), part)
        W2 = W & perp(Subspace.span(es + fs, ctx.dim, F), B)
        rest, res = _split(ctx, L, W2)
        if res is None:
            return [blk] + rest, None
        if len(rest) + 1 > len(best[0]):
            best = ([blk] + rest, res)
    return best


def semisimple_decompose(ctx, L):
    """Split L block by block along extended maximal chains; residue is None iff L is semisimple."""
    ctx = nilpotent_context(ctx)
    blocks, res = _split(ctx, L, Subspace.full(ctx.dim, ctx.field))
    return Decomposition(tuple(blocks), res)


def is_semisimple(ctx, L):
    return semisimple_decompose(ctx, L).semisimple


# ---------------------------------------------------------------------------
# types and descriptors


class SemisimpleType:
    """Multiset of (height, half-size) pairs, sorted by size then height, descending."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        pairs = [(int(h), int(n)) for h, n in pairs]
        self.pairs = tuple(sorted(pairs, key=lambda t: (-t[1], -t[0])))

    def validate(self, sizes=None):
        for h, n in self.pairs:
            if n < 1 or not (n <= 2 * h and h <= n):
                raise InvalidParameters("height %d outside [n/2, n] for half-size %d" % (h, n))
        if sizes is not None and sorted(sizes, reverse=True) != [n for _, n in self.pairs]:
            raise InvalidParameters("type sizes %s do not match block half-sizes %s"
                                    % ([n for _, n in self.pairs], list(sizes)))
        return self

    @property
    def sizes(self):
        return tuple(n for _, n in self.pairs)

    @property
    def heights(self):
        return tuple(h for h, _ in self.pairs)

    def __eq__(self, o):
        return isinstance(o, SemisimpleType) and self.pairs == o.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __str__(self):
        return "{" + ",".join("(%d,%d)" % p for p in self.pairs) + "}"

    __repr__ = __str__


@dataclass(frozen=True)
class OrbitDescriptor:
    variant: str                  # semisimple, type1, type2, unsupported
    type: object = None           # SemisimpleType for the semisimple variant
    h: int = None
    d: int = None
    r: int = None
    delta: int = None
    z: int = None
    reason: str = None

    @classmethod
    def semisimple(cls, pairs):
        t = pairs if isinstance(pairs, SemisimpleType) else SemisimpleType(pairs)
        return cls("semisimple", type=t)

    @classmethod
    def type1(cls, h, d, r):
        return cls("type1", h=h, d=d, r=r)

    @classmethod
    def type2(cls, h, d, r, delta=0, z=None):
        return cls("type2", h=h, d=d, r=r, delta=delta, z=z if delta else None)

    def __str__(self):
        if self.variant == "semisimple":
            return "semisimple %s" % self.type
        if self.variant == "type1":
            return "type1 {h:%d,d:%d,r:%d}" % (self.h, self.d, self.r)
        if self.variant == "type2":
            s = "type2 {h:%d,d:%d,r:%d,delta:%d" % (self.h, self.d, self.r, self.delta)
            return s + (",z:%d}" % self.z if self.delta else "}")
        return "unsupported (%s)" % self.reason

    def to_json(self):
        if self.variant == "semisimple":
            return {"variant": "semisimple", "pairs": [list(p) for p in self.type.pairs]}
        if self.variant == "type1":
            return {"variant": "type1", "h": self.h, "d": self.d, "r": self.r}
        if self.variant == "type2":
            out = {"variant": "type2", "h": self.h, "d": self.d, "r": self.r, "delta": self.delta}
            if self.delta:
                out["z"] = self.z
            return out
        return {"variant": "unsupported", "reason": self.reason}

    @classmethod
    def from_json(cls, obj):
        v = obj.get("variant")
        try:
            if v == "semisimple":
                return cls.semisimple([tuple(p) for p in obj["pairs"]])
            if v == "type1":
                return cls.type1(int(obj["h"]), int(obj["d"]), int(obj["r"]))
            if v == "type2":
                delta = int(obj.get("delta", 0))
                return cls.type2(int(obj["h"]), int(obj["d"]), int(obj["r"]), delta,
                                 int(obj["z"]) if delta else None)
        except (KeyError, TypeError, ValueError) as ex:
            raise InvalidParameters("malformed descriptor: %s" % ex) from None
        raise InvalidParameters("unknown descriptor variant %r" % v)


def type2s(desc, n1, n2):
    """Special Type II: delta = 0 and r = 2h - n1 = n2 - 2d."""
    return desc.variant == "type2" and desc.delta == 0 and desc.r == 2 * desc.h - n1 == n2 - 2 * desc.d


# ---------------------------------------------------------------------------
# invariant subspaces (canonical, basis free)


def invariant_subspace(ctx, sizes, heights):
    """⊕ J^{≤h_i}: sum over distinct sizes n_i of Ker P^{h_i} ∩ Im P^{n_i - h_i}."""
    parts = []
    for n, h in zip(sizes, heights):
        if h:
            parts.append(ctx.ker(h) & ctx.im(n - h))
    return sum_all(parts, ctx.dim, ctx.field)


def height_tuples(sizes):
    """All (h_i) with 0 ≤ h_i ≤ n_i and 0 ≤ h_i - h_{i+1} ≤ n_i - n_{i+1} (n_{N+1} = 0)."""
    sizes = list(sizes)
    N = len(sizes)
    out = []

    def rec(i, acc):
        if i == N:
            out.append(tuple(acc))
            return
        lo, hi = 0, sizes[i]
        if i:
            hi = min(hi, acc[-1])
            lo = max(lo, acc[-1] - (sizes[i - 1] - sizes[i]))
        for h in range(lo, hi + 1):
            rec(i + 1, acc + [h])
    rec(0, [])
    return out


def predicted_meet_dim(pairs, ks):
    """dim(L ∩ ⊕J^{≤k}) for L semisimple of type pairs, k per block in the same order."""
    return sum(min(h, k) + min(n - h, k) for (h, n), k in zip(pairs, ks))


def _lattice(ctx, distinct):
    cache = ctx.__dict__.setdefault("_lattice", {})
    key = tuple(distinct)
    if key not in cache:
        cache[key] = [(hs, invariant_subspace(ctx, distinct, hs)) for hs in height_tuples(distinct)]
    return cache[key]


def semisimple_type(ctx, L, dec=None):
    """Type H(L) read off dim(L ∩ U) over the invariant subspaces U."""
    ctx = nilpotent_context(ctx)
    dec = dec or semisimple_decompose(ctx, L)
    if not dec.semisimple:
        raise NotSemisimple("subspace is not semisimple")
    groups = size_groups(half_sizes(ctx))
    distinct = [n for n, _ in groups]
    lattice = _lattice(ctx, distinct)
    tuples = [hs for hs, _ in lattice]
    actual = [(L & U).dim for _, U in lattice]
    options = []
    for n, l in groups:
        lo = (n + 1) // 2
        options.append([sorted(c, reverse=True) for c in combinations_with_replacement(range(lo, n + 1), l)])
    found = []
    for choice in product(*options):
        pairs = [(h, n) for (n, _), hs in zip(groups, choice) for h in hs]
        pred = []
        for hs in tuples:
            kmap = dict(zip(distinct, hs))
            pred.append(predicted_meet_dim(pairs, [kmap[n] for _, n in pairs]))
        if pred == actual:
            found.append(SemisimpleType(pairs))
    if len(found) != 1:
        raise PencilLabError("intersection dimensions match %d types" % len(found))
    t = found[0]
    if SemisimpleType(dec.heights()) != t:
        raise PencilLabError("decomposition heights disagree with intersection dimensions")
    return t


def enumerate_semisimple_types(sizes):
    groups = size_groups(sizes)
    options = []
    for n, l in groups:
        lo = (n + 1) // 2
        options.append([sorted(c, reverse=True) for c in combinations_with_replacement(range(lo, n + 1), l)])
    return [SemisimpleType([(h, n) for (n, _), hs in zip(groups, choice) for h in hs])
            for choice in product(*options)]


# ---------------------------------------------------------------------------
# two distinct blocks


def _type1_params(n1, n2, h, d, r):
    return h - r, n1 - h, d, n2 - d - r


def _type2_params(n1, n2, h, d, r):
    return h - r, n1 - h, n2 - d - r, d


def validate_descriptor(desc, n1, n2):
    """Raise InvalidParameters naming the first violated inequality."""
    if desc.variant == "semisimple":
        desc.type.validate((n1, n2))
        return
    h, d, r = desc.h, desc.d, desc.r
    if r is None or r <= 0:
        raise InvalidParameters("r > 0 violated (r = %s)" % r)
    if desc.variant == "type1":
        p1, q1, p2, q2 = _type1_params(n1, n2, h, d, r)
        if min(p1, q1, p2, q2) < 0:
            raise InvalidParameters("parameters out of range: p1=%d q1=%d p2=%d q2=%d" % (p1, q1, p2, q2))
        if not (p1 >= q1 > q2 > p2):
            raise InvalidParameters("p1 >= q1 > q2 > p2 violated: p1=%d q1=%d q2=%d p2=%d" % (p1, q1, q2, p2))
        return
    if desc.variant != "type2":
        raise InvalidParameters("descriptor variant %s has no canonical form" % desc.variant)
    p1, q1, p2, q2 = _type2_params(n1, n2, h, d, r)
    if min(p1, q1, p2, q2) < 0:
        raise InvalidParameters("parameters out of range: p1=%d q1=%d p2=%d q2=%d" % (p1, q1, p2, q2))
    if not (p1 >= q1 > q2):
        raise InvalidParameters("p1 >= q1 > q2 violated: p1=%d q1=%d q2=%d" % (p1, q1, q2))
    if not (p1 > p2 >= q2):
        raise InvalidParameters("p1 > p2 >= q2 violated: p1=%d p2=%d q2=%d" % (p1, p2, q2))
    if p1 == q1 and p2 != q2:
        raise InvalidParameters("p1 = q1 => p2 = q2 violated: p2=%d q2=%d" % (p2, q2))
    if desc.delta not in (0, 1):
        raise InvalidParameters("delta must be 0 or 1")
    if desc.delta == 1:
        z = desc.z
        if z is None or not (max(p2 - r, q2) < z - r < min(p2, q1)):
            raise InvalidParameters("max(p2-r, q2) < z-r < min(p2, q1) violated: z=%s p2=%d q2=%d q1=%d r=%d"
                                    % (z, p2, q2, q1, r))


def enumerate_two_block_descriptors(n1, n2):
    """Every admissible descriptor for half-sizes n1 > n2, semisimple ones first.

    Some delta = 1 descriptors name the same orbit as their delta = 0
    partner; classify_two_blocks reports the delta = 0 label for those.
    """
    out = [OrbitDescriptor.semisimple(t) for t in enumerate_semisimple_types((n1, n2))]
    for h in range(1, n1 + 1):
        for d in range(0, n2 + 1):
            for r in range(1, n1 + n2 + 1):
                for desc in [OrbitDescriptor.type1(h, d, r)]:
                    try:
                        validate_descriptor(desc, n1, n2)
                        out.append(desc)
                    except InvalidParameters:
                        pass
    for h in range(1, n1 + 1):
        for d in range(0, n2 + 1):
            for r in range(1, n1 + n2 + 1):
                cands = [OrbitDescriptor.type2(h, d, r, 0)]
                cands += [OrbitDescriptor.type2(h, d, r, 1, z) for z in range(1, n2 + 1)]
                for desc in cands:
                    try:
                        validate_descriptor(desc, n1, n2)
                        out.append(desc)
                    except InvalidParameters:
                        pass
    return out


def _ambient_sizes(inv):
    ev = inv.single_eigenvalue()
    if ev is None:
        raise NotSingleEigenvalueJordan("canonical forms need Jordan invariants with one eigenvalue")
    return inv.half_sizes


def canonical_representative(inv, desc):
    """Canonical bi-Lagrangian of the given orbit in synthesize(inv)."""
    sizes = _ambient_sizes(inv)
    dim = inv.dim
    offsets, c = [], 0
    for n in sizes:
        offsets.append(c)
        c += 2 * n

    def e(b, i):
        return unit(dim, offsets[b] + i - 1)

    def f(b, j):
        return unit(dim, offsets[b] + sizes[b] + j - 1)

    if desc.variant == "semisimple":
        t = desc.type.validate(sizes)
        vecs = []
        for b, (h, n) in enumerate(t.pairs):
            vecs += [e(b, i) for i in range(n - h + 1, n + 1)]
            vecs += [f(b, j) for j in range(1, n - h + 1)]
        return Subspace.span(vecs, dim)
    if len(sizes) != 2 or sizes[0] == sizes[1]:
        raise NotTwoBlocks("indecomposable canonical forms need two blocks of distinct sizes")
    n1, n2 = sizes
    validate_descriptor(desc, n1, n2)
    h, d, r = desc.h, desc.d, desc.r
    if desc.variant == "type1":
        p1, q1, p2, q2 = _type1_params(n1, n2, h, d, r)
        u = [(0, "e", n1 - h + 1, 1), (1, "e", n2 - d - r + 1, 1)]
        v = [(0, "f", n1 - h + r, 1), (1, "f", n2 - d, -1)]
    else:
        p1, q1, p2, q2 = _type2_params(n1, n2, h, d, r)
        u = [(0, "e", n1 - h + 1, 1), (1, "e", d + 1, 1)]
        v = [(0, "f", n1 - h + r, 1), (1, "f", d + r, -1)]
        if desc.delta:
            v.append((1, "e", n2 - desc.z + 1, 1))

    def build(terms, shift):
        out = [0] * dim
        for b, kind, idx, coef in terms:
            j = idx + shift if kind == "e" else idx - shift
            n = sizes[b]
            if 1 <= j <= n:
                pos = offsets[b] + (j - 1 if kind == "e" else n + j - 1)
                out[pos] += coef
        return out

    vecs = []
    for s in range(r):
        vecs.append(build(u, s))
        vecs.append(build(v, s))
    vecs += [e(0, i) for i in range(n1 - p1 + 1, n1 + 1)]
    vecs += [f(0, j) for j in range(1, q1 + 1)]
    vecs += [e(1, i) for i in range(n2 - p2 + 1, n2 + 1)]
    vecs += [f(1, j) for j in range(1, q2 + 1)]
    L = Subspace.span(vecs, dim)
    if L.dim != n1 + n2:
        raise PencilLabError("canonical span has dimension %d, expected %d" % (L.dim, n1 + n2))
    return L


def type_flag(ctx, L, h, d):
    """1 when (L ∩ Im P^{d+1}) is not inside Ker P^{h-1}, else 2."""
    if h == 0:
        return 2
    return 1 if not ((L & ctx.im(d + 1)) <= ctx.ker(h - 1)) else 2


def reduction_subspace(ctx, h, d):
    """Im P^h + Ker P^d."""
    return ctx.im(h) + ctx.ker(d)


def two_block_signature(ctx, L):
    prof = height_profile(ctx, L)
    h, d = prof.h, prof.d
    U = reduction_subspace(ctx, h, d)
    q = quotient_jordan_type(ctx, L, U) if U <= L else None
    return (type_flag(ctx, L, h, d), h, d, restriction_jordan_type(ctx, L), q, prof.table)


@lru_cache(maxsize=None)
def _two_block_catalogue(n1, n2):
    inv = JKInvariants.nilpotent((n1, n2))
    ctx = JordanContext.of(synthesize(inv))
    cat = {}
    for desc in enumerate_two_block_descriptors(n1, n2):
        if desc.variant == "semisimple":
            continue
        sig = two_block_signature(ctx, canonical_representative(inv, desc))
        cat.setdefault(sig, []).append(desc)
    return cat


def two_block_sizes(ctx):
    sizes = half_sizes(ctx)
    if len(sizes) != 2 or sizes[0] == sizes[1]:
        raise NotTwoBlocks("ambient half-sizes %s are not two distinct blocks" % (list(sizes),))
    return sizes


def classify_two_blocks(ctx, L):
    ctx = nilpotent_context(ctx)
    n1, n2 = two_block_sizes(ctx)
    dec = semisimple_decompose(ctx, L)
    if dec.semisimple:
        return OrbitDescriptor.semisimple(semisimple_type(ctx, L, dec))
    sig = two_block_signature(ctx, L)
    hits = _two_block_catalogue(n1, n2).get(sig, [])
    if len(hits) > 1:
        hits = _resolve(ctx, L, n1, n2, hits)
    if len(hits) != 1:
        raise PencilLabError("indecomposable subspace matches %d descriptors" % len(hits))
    return hits[0]


@lru_cache(maxsize=None)
def _catalogue_dim(n1, n2, desc):
    inv = JKInvariants.nilpotent((n1, n2))
    return orbit_tangent_dim(aut_algebra(synthesize(inv)), canonical_representative(inv, desc))


def _resolve(ctx, L, n1, n2, hits):
    """Split a signature collision by orbit dimension.

    A Type II pair differing only in delta lies in one orbit when the
    dimensions agree: scaling e -> a e, f -> f / a on both blocks sends the
    delta = 1 representative with coefficient t to coefficient a^2 t, so the
    delta = 0 one is in its orbit closure, and a boundary orbit is strictly
    smaller.  The delta = 0 label is returned for it.
    """
    m = orbit_tangent_dim(aut_algebra(Pencil(ctx.dim, ctx.A0, ctx.B0)), L)
    hits = [h for h in hits if _catalogue_dim(n1, n2, h) == m]
    if len(hits) == 2 and {h.variant for h in hits} == {"type2"}:
        a, b = sorted(hits, key=lambda h: h.delta)
        if (a.h, a.d, a.r, a.delta, b.delta) == (b.h, b.d, b.r, 0, 1):
            return [a]
    return hits


def classify(ctx, L):
    """Orbit descriptor for the supported single-eigenvalue ambients."""
    ctx = nilpotent_context(ctx)
    sizes = half_sizes(ctx)
    if len(set(sizes)) == 2 and len(sizes) == 2:
        return classify_two_blocks(ctx, L)
    dec = semisimple_decompose(ctx, L)
    if dec.semisimple:
        return OrbitDescriptor.semisimple(semisimple_type(ctx, L, dec))
    return OrbitDescriptor("unsupported", reason="indecomposable subspace with block half-sizes %s"
                           % (list(sizes),))


def classify_by_eigenvalue(p, L):
    """[(eigenvalue, descriptor)] for a bi-Lagrangian L of an arbitrary pencil.

    The Kronecker part is removed by passing to the quotient by the core,
    which every bi-Lagrangian contains.
    """
    from .subspace import eigen_components, is_bilagrangian
    if not is_bilagrangian(p, L):
        raise NotBiLagrangian("subspace is not bi-Lagrangian")
    K, M = core_mantle(p)
    if K.dim:
        sec, proj, p = quotient_forms(p, K, M)
        L = Subspace.span([proj @ v for v in (L & M).rows], p.dim, p.field) if L.dim > K.dim \
            else Subspace.zero(p.dim, p.field)
    if p.dim == 0:
        return []
    return [(ev, classify(c, Lc)) for ev, c, _, Lc in eigen_components(p, L)]


def same_orbit(ctx, L1, L2):
    ctx = as_context(ctx)
    if not ctx.nilpotent:
        from .subspace import eigen_components
        c1 = eigen_components(ctx.pencil, L1)
        c2 = eigen_components(ctx.pencil, L2)
        return all(same_orbit(a[1], a[3], b[3]) for a, b in zip(c1, c2))
    d1, d2 = classify(ctx, L1), classify(ctx, L2)
    if "unsupported" in (d1.variant, d2.variant):
        if d1.variant == "semisimple" or d2.variant == "semisimple":
            return False
        raise UnsupportedAmbient(d1.reason or d2.reason)
    return d1 == d2


# ---------------------------------------------------------------------------
# closed-form counts and dimensions


def _delta(hi, ni, hj, nj):
    return max(0, hj - (ni - hi)) + max(0, hj - hi, (nj - hj) - (ni - hi))


def semisimple_orbit_dim(pairs):
    """Sum over i <= j of Delta_ij, with Delta_ii = 2h_i - n_i."""
    pairs = SemisimpleType(pairs).pairs if not isinstance(pairs, SemisimpleType) else pairs.pairs
    total = 0
    for i, (hi, ni) in enumerate(pairs):
        total += 2 * hi - ni
        for hj, nj in pairs[i + 1:]:
            total += _delta(hi, ni, hj, nj)
    return total


def _eigen_groups(inv):
    groups = {}
    for ev, n in inv.jordan:
        groups.setdefault(ev, []).append(n)
    return [sorted(v, reverse=True) for v in groups.values()]


QUERIES = ("blg_dim", "aut_dim", "equal_block_orbits", "semisimple_types", "one_block_orbits",
           "semisimple_orbit_dim", "two_block_semisimple_orbits", "type2s_orbit_dim")


def formulas(inv, query, type=None, r=None):
    if query not in QUERIES:
        raise QueryShapeMismatch("unknown query %r" % query)
    if inv.kronecker and query != "blg_dim":
        raise QueryShapeMismatch("%s is defined for Jordan pencils only" % query)
    if query == "blg_dim":
        return sum(j * n for g in _eigen_groups(inv) for j, n in enumerate(g, 1))
    if query == "aut_dim":
        return sum((4 * j - 1) * n for g in _eigen_groups(inv) for j, n in enumerate(g, 1))
    if inv.single_eigenvalue() is None:
        raise QueryShapeMismatch("%s needs a single eigenvalue" % query)
    sizes = inv.half_sizes
    groups = size_groups(sizes)
    if query == "equal_block_orbits":
        if len(groups) != 1:
            raise QueryShapeMismatch("equal_block_orbits needs blocks of one size")
        n, l = groups[0]
        return comb(n // 2 + l, l)
    if query == "semisimple_types":
        out = 1
        for n, l in groups:
            out *= comb(n // 2 + l, l)
        return out
    if query == "one_block_orbits":
        if len(sizes) != 1:
            raise QueryShapeMismatch("one_block_orbits needs a single block")
        return sizes[0] // 2 + 1
    if query == "semisimple_orbit_dim":
        if type is None:
            raise QueryShapeMismatch("semisimple_orbit_dim needs a type")
        t = type if isinstance(type, SemisimpleType) else SemisimpleType(type)
        try:
            t.validate(sizes)
        except InvalidParameters as ex:
            raise QueryShapeMismatch(str(ex)) from None
        return semisimple_orbit_dim(t)
    if len(sizes) != 2 or sizes[0] == sizes[1]:
        raise QueryShapeMismatch("%s needs two blocks of distinct sizes" % query)
    n1, n2 = sizes
    if query == "two_block_semisimple_orbits":
        return (n1 // 2 + 1) * (n2 // 2 + 1)
    # type2s_orbit_dim
    if r is None:
        raise QueryShapeMismatch("type2s_orbit_dim needs r")
    if (n1 - n2) % 2 or not (1 <= r <= n2) or (r - n2) % 2:
        raise QueryShapeMismatch("r = %s is not a special Type II parameter for sizes (%d,%d)" % (r, n1, n2))
    return 3 * r


def type2s_parameters(n1, n2):
    """r values of the special Type II orbits: 1 ≤ r ≤ n2, r ≡ n2 (mod 2), n1 ≡ n2 (mod 2)."""
    if (n1 - n2) % 2:
        return []
    return [r for r in range(1, n2 + 1) if (r - n2) % 2 == 0]


def type2s_descriptor(n1, n2, r):
    return OrbitDescriptor.type2((n1 + r) // 2, (n2 - r) // 2, r, 0)


# ---------------------------------------------------------------------------
# vector orbits


def aut_closure(a, S):
    """Smallest subspace containing S and stable under every algebra element."""
    cur = S
    while True:
        rows = list(cur.rows)
        for C in a.basis:
            rows += [C @ v for v in cur.rows]
        nxt = Subspace.span(rows, S.ambient, S.field) if rows else cur
        if nxt == cur:
            return cur
        cur = nxt


def vector_orbit_representative(ctx, v, algebra=None):
    """Heights (h_j), one per distinct half-size, of the invariant subspace generated by v."""
    ctx = nilpotent_context(ctx)
    distinct = [n for n, _ in size_groups(half_sizes(ctx))]
    if not any(v):
        return tuple(0 for _ in distinct)
    a = algebra or aut_algebra(Pencil(ctx.dim, ctx.A0, ctx.B0))
    closure = aut_closure(a, Subspace.span([v], ctx.dim, ctx.field))
    for hs in height_tuples(distinct):
        if invariant_subspace(ctx, distinct, hs) == closure:
            return hs
    raise PencilLabError("closure of the vector is not in the invariant lattice")


__all__ = [
    "HeightProfile", "height_profile", "restriction_jordan_type", "quotient_jordan_type",
    "is_generic", "DecompBlock", "Decomposition", "semisimple_decompose", "is_semisimple",
    "SemisimpleType", "OrbitDescriptor", "semisimple_type", "enumerate_semisimple_types",
    "validate_descriptor", "enumerate_two_block_descriptors", "canonical_representative",
    "classify_two_blocks", "classify", "classify_by_eigenvalue", "same_orbit", "formulas", "semisimple_orbit_dim",
    "type2s_parameters", "type2s_descriptor", "type2s", "vector_orbit_representative",
    "invariant_subspace", "height_tuples", "half_sizes", "size_groups", "nilpotent_context",
    "as_context", "two_block_signature", "reduction_subspace", "type_flag", "aut_closure",
    "QUERIES",
]
