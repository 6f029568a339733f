"""Command line entry point: ``pencil-lab <command> [options]``.

Exit codes: 0 success, 1 a check answered "false" (or a subspace does not
extend), 2 invalid input, 3 unsupported input.
"""

import argparse
import json
import os
import sys

from . import io
from .aut import aut_algebra, orbit_tangent_dim
from .census import ff_orbit_histogram, invariant_bilagrangian, invariant_subspaces, build_invariant_subspace
from .errors import InvalidInput, NotExtendable, PencilLabError, TooLarge, Unsupported
from .exact import to_rat
from .orbits import (
    QUERIES, SemisimpleType, classify_by_eigenvalue, formulas, nilpotent_context,
    vector_orbit_representative,
)
from .pencil import JKInvariants, core_mantle, jk_invariants, scramble, standard_basis, synthesize
from .subspace import (
    classify_subspace, extend_to_bilagrangian, push_subspace, random_bilagrangian, reduce,
)


class _Exit(Exception):
    def __init__(self, code):
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (self.prog, message))
        raise _Exit(2)


def max_dim():
    raw = os.environ.get("PENCIL_LAB_MAX_DIM", "24")
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput("PENCIL_LAB_MAX_DIM must be an integer, got %r" % raw) from None


def _cap(dim):
    if dim > max_dim():
        raise TooLarge("ambient dimension %d exceeds PENCIL_LAB_MAX_DIM=%d" % (dim, max_dim()))


def _pencil(args):
    p = io.load_pencil(args.pencil)
    _cap(p.dim)
    return p


def _subspace(path, p):
    S = io.load_subspace(path)
    if S.ambient != p.dim:
        raise InvalidInput("subspace ambient %d does not match pencil dimension %d" % (S.ambient, p.dim))
    return S


def _invariants(args):
    inv = JKInvariants.parse(args.invariants)
    _cap(inv.dim)
    return inv


def _rows_text(S):
    if S.dim == 0:
        return "  (zero subspace)"
    return "\n".join("  [" + ", ".join(str(x) for x in r) + "]" for r in S.rows)


def _matrix_text(M):
    return "\n".join("  [" + ", ".join(str(x) for x in r) + "]" for r in M.rows)


def _emit(args, obj, text):
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _pencil_report(args, p):
    _emit(args, io.pencil_to_json(p), "dim %d\nA\n%s\nB\n%s" % (p.dim, _matrix_text(p.A), _matrix_text(p.B)))


def cmd_jk_invariants(args):
    inv = jk_invariants(_pencil(args))
    _emit(args, inv.to_json(), inv.describe())


def cmd_standard_basis(args):
    p = _pencil(args)
    sb = standard_basis(p)
    blocks = [{"eigenvalue": str(b.eigenvalue), "size": b.size, "e": list(b.e), "f": list(b.f)}
              for b in sb.layout]
    cols = [[str(x) for x in sb.S.col(j)] for j in range(sb.S.ncols)]
    text = ["blocks"]
    text += ["  Jordan(%s,%d): e %s f %s" % (b["eigenvalue"], b["size"], b["e"], b["f"]) for b in blocks]
    text += ["columns", _matrix_text(sb.S.T)]
    _emit(args, {"blocks": blocks, "columns": cols}, "\n".join(text))


def cmd_core_mantle(args):
    p = _pencil(args)
    K, M = core_mantle(p)
    _emit(args, {"core": io.subspace_to_json(K), "mantle": io.subspace_to_json(M)},
          "core (dim %d)\n%s\nmantle (dim %d)\n%s" % (K.dim, _rows_text(K), M.dim, _rows_text(M)))


def cmd_check_bilagrangian(args):
    p = _pencil(args)
    rep = classify_subspace(p, _subspace(args.subspace, p))
    _emit(args, rep.to_json(), "true" if rep.bi_lagrangian else "false")
    return 0 if rep.bi_lagrangian else 1


def _descriptor_line(pairs):
    if len(pairs) == 1:
        return str(pairs[0][1])
    return "\n".join("eigenvalue %s: %s" % (ev, d) for ev, d in pairs)


def cmd_classify(args):
    p = _pencil(args)
    pairs = classify_by_eigenvalue(p, _subspace(args.subspace, p))
    obj = [{"eigenvalue": str(ev), "descriptor": d.to_json()} for ev, d in pairs]
    _emit(args, obj, _descriptor_line(pairs) if pairs else "core only")


def cmd_reduce(args):
    p = _pencil(args)
    r = reduce(p, _subspace(args.subspace, p))
    _pencil_report(args, r.quotient)


def cmd_push(args):
    p = _pencil(args)
    r = reduce(p, _subspace(args.subspace, p))
    L = _subspace(args.target, p)
    Lq = push_subspace(r, L)
    _emit(args, io.subspace_to_json(Lq), "pushed subspace (dim %d of %d)\n%s" % (Lq.dim, Lq.ambient, _rows_text(Lq)))


def cmd_extend(args):
    p = _pencil(args)
    L = extend_to_bilagrangian(p, _subspace(args.subspace, p))
    _emit(args, io.subspace_to_json(L), "bi-Lagrangian extension (dim %d)\n%s" % (L.dim, _rows_text(L)))


def cmd_orbit_dim(args):
    p = _pencil(args)
    d = orbit_tangent_dim(aut_algebra(p), _subspace(args.subspace, p))
    _emit(args, {"orbit_dim": d}, str(d))


def _parse_type(raw):
    """"(3,3),(1,1)" -> SemisimpleType, pairs are (height, half-size)."""
    s = raw.replace(" ", "").strip("{}")
    try:
        pairs = [tuple(int(x) for x in chunk.strip("()").split(",")) for chunk in s.split("),(")]
        if any(len(t) != 2 for t in pairs):
            raise ValueError
    except ValueError:
        raise InvalidInput("malformed type %r, expected e.g. (3,3),(1,1)" % raw) from None
    return SemisimpleType(pairs)


def cmd_formulas(args):
    inv = _invariants(args)
    queries = [args.query] if args.query else [q for q in QUERIES if q in ("blg_dim", "aut_dim")]
    t = _parse_type(args.type) if args.type else None
    out = {q: formulas(inv, q, type=t, r=args.r) for q in queries}
    _emit(args, out, "\n".join("%s %d" % kv for kv in out.items()))


def cmd_invariant_subspaces(args):
    inv = _invariants(args)
    descs = invariant_subspaces(inv)
    rows = [{"heights": list(d.heights), "dim": build_invariant_subspace(inv, d).dim} for d in descs]
    text = ["%d invariant subspaces (half-sizes %s)" % (len(rows), list(inv.half_sizes))]
    text += ["  heights %s dim %d" % (r["heights"], r["dim"]) for r in rows]
    _emit(args, {"sizes": list(inv.half_sizes), "subspaces": rows}, "\n".join(text))


def cmd_invariant_bilagrangian(args):
    L = invariant_bilagrangian(_invariants(args))
    if L is None:
        _emit(args, None, "absent")
        return 0
    _emit(args, io.subspace_to_json(L), "invariant bi-Lagrangian (dim %d)\n%s" % (L.dim, _rows_text(L)))


def cmd_vector_orbit(args):
    p = _pencil(args)
    v = [to_rat(x) for x in args.vector.split(",")]
    if len(v) != p.dim:
        raise InvalidInput("vector has %d entries, pencil dimension is %d" % (len(v), p.dim))
    hs = vector_orbit_representative(nilpotent_context(p), v)
    _emit(args, {"heights": list(hs)}, "heights %s" % (list(hs),))


def cmd_random_bilagrangian(args):
    p = _pencil(args)
    L = random_bilagrangian(p, args.seed, generic=not args.nongeneric)
    _emit(args, io.subspace_to_json(L), "random bi-Lagrangian (dim %d)\n%s" % (L.dim, _rows_text(L)))


def cmd_census(args):
    inv = _invariants(args)
    hist = ff_orbit_histogram(inv, args.prime, workers=args.workers)
    total = sum(hist.values())
    text = ["%d bi-Lagrangian subspaces over GF(%d), %d classes" % (total, args.prime, len(hist))]
    text += ["  %6d  %s" % (c, k) for k, c in hist.items()]
    _emit(args, {"prime": args.prime, "total": total, "classes": hist}, "\n".join(text))


def cmd_scramble(args):
    if bool(args.pencil) == bool(args.invariants):
        raise InvalidInput("give exactly one of --pencil and --invariants")
    p = _pencil(args) if args.pencil else synthesize(_invariants(args))
    q, _ = scramble(p, args.seed)
    _pencil_report(args, q)


def cmd_synthesize(args):
    _pencil_report(args, synthesize(_invariants(args)))


def _add(sub, name, func, help, pencil=False, subspace=False, invariants=False, seed=False):
    sp = sub.add_parser(name, help=help)
    if pencil:
        sp.add_argument("--pencil", required=pencil == "required", metavar="FILE")
    if subspace:
        sp.add_argument("--subspace", required=True, metavar="FILE")
    if invariants:
        sp.add_argument("--invariants", required=invariants == "required", metavar="SPEC")
    if seed:
        sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    sp.set_defaults(func=func)
    return sp


def build_parser():
    ap = _Parser(prog="pencil-lab", description="Exact computations with pencils of skew-symmetric forms.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add(sub, "jk-invariants", cmd_jk_invariants, "Jordan-Kronecker invariants", pencil="required")
    _add(sub, "standard-basis", cmd_standard_basis, "standard basis of a Jordan pencil", pencil="required")
    _add(sub, "core-mantle", cmd_core_mantle, "core and mantle subspaces", pencil="required")
    _add(sub, "check-bilagrangian", cmd_check_bilagrangian, "is the subspace bi-Lagrangian",
         pencil="required", subspace=True)
    _add(sub, "classify", cmd_classify, "orbit descriptor of a bi-Lagrangian subspace",
         pencil="required", subspace=True)
    _add(sub, "reduce", cmd_reduce, "quotient pencil on U^perp/U", pencil="required", subspace=True)
    sp = _add(sub, "push", cmd_push, "push a bi-Lagrangian through the reduction by U",
              pencil="required", subspace=True)
    sp.add_argument("--target", required=True, metavar="FILE", help="subspace to push")
    _add(sub, "extend", cmd_extend, "extend a bi-isotropic subspace to a bi-Lagrangian one",
         pencil="required", subspace=True)
    _add(sub, "orbit-dim", cmd_orbit_dim, "dimension of the automorphism orbit of a subspace",
         pencil="required", subspace=True)
    sp = _add(sub, "formulas", cmd_formulas, "closed-form dimensions and counts", invariants="required")
    sp.add_argument("--query", choices=QUERIES)
    sp.add_argument("--type", help="semisimple type, e.g. (3,3),(1,1)")
    sp.add_argument("--r", type=int)
    _add(sub, "invariant-subspaces", cmd_invariant_subspaces, "lattice of invariant subspaces",
         invariants="required")
    _add(sub, "invariant-bilagrangian", cmd_invariant_bilagrangian, "the invariant bi-Lagrangian, if any",
         invariants="required")
    sp = _add(sub, "vector-orbit", cmd_vector_orbit, "orbit representative of a vector", pencil="required")
    sp.add_argument("--vector", required=True, help="comma-separated rationals")
    sp = _add(sub, "random-bilagrangian", cmd_random_bilagrangian, "seeded random bi-Lagrangian",
              pencil="required", seed=True)
    sp.add_argument("--nongeneric", action="store_true", help="random heights instead of the generic orbit")
    sp = _add(sub, "census", cmd_census, "finite-field orbit census", invariants="required")
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--workers", type=int, default=1)
    _add(sub, "scramble", cmd_scramble, "random congruence of a pencil", pencil=True, invariants=True, seed=True)
    _add(sub, "synthesize", cmd_synthesize, "normal-form pencil for given invariants", invariants="required")
    return ap


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        code = args.func(args)
        return code or 0
    except _Exit as ex:
        return ex.code
    except NotExtendable as ex:
        print("not extendable (%s): %s" % (ex.kind, ex))
        return 1
    except InvalidInput as ex:
        print("invalid input: %s" % ex, file=sys.stderr)
        return 2
    except Unsupported as ex:
        print("unsupported: %s" % ex, file=sys.stderr)
        return 3
    except PencilLabError as ex:
        print("error: %s" % ex, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
