"""JSON file formats for pencils, subspaces and orbit descriptors.

Pencil: {"dim": n, "A": [[...]], "B": [[...]]}, entries as strings "p/q" or "p".
Subspace: {"ambient": n, "rows": [[...]]}.  Entries are normalized on load.
"""

import json

from .errors import InvalidInput, SizeMismatch
from .exact import QQ, Mat, Subspace, to_rat
from .orbits import OrbitDescriptor
from .pencil import make_pencil


def _matrix(obj, n, name):
    if not isinstance(obj, list) or len(obj) != n or any(not isinstance(r, list) for r in obj):
        raise SizeMismatch("%s must be a list of %d rows" % (name, n))
    if any(len(r) != n for r in obj):
        raise SizeMismatch("%s must be %d x %d" % (name, n, n))
    return Mat([[to_rat(x) for x in r] for r in obj], QQ, n)


def _int(obj, key):
    v = obj.get(key) if isinstance(obj, dict) else None
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise InvalidInput("%r must be a non-negative integer" % key)
    return v


def pencil_from_json(obj):
    n = _int(obj, "dim")
    return make_pencil(_matrix(obj.get("A"), n, "A"), _matrix(obj.get("B"), n, "B"))


def pencil_to_json(p):
    return {"dim": p.dim, "A": p.A.to_strings(), "B": p.B.to_strings()}


def subspace_from_json(obj):
    n = _int(obj, "ambient")
    rows = obj.get("rows")
    if not isinstance(rows, list) or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise SizeMismatch("rows must be lists of length %d" % n)
    vecs = [[to_rat(x) for x in r] for r in rows]
    return Subspace.span(vecs, n, QQ) if vecs else Subspace.zero(n, QQ)


def subspace_to_json(S):
    return {"ambient": S.ambient, "rows": [[str(x) for x in r] for r in S.rows]}


def descriptor_from_json(obj):
    return OrbitDescriptor.from_json(obj)


def descriptor_to_json(d):
    return d.to_json()


def _read(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as ex:
        raise InvalidInput("cannot read %s: %s" % (path, ex.strerror)) from None
    except json.JSONDecodeError as ex:
        raise InvalidInput("%s is not valid JSON: %s" % (path, ex.msg)) from None


def load_pencil(path):
    return pencil_from_json(_read(path))


def load_subspace(path):
    return subspace_from_json(_read(path))


def dump(obj, path):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


__all__ = [
    "pencil_from_json", "pencil_to_json", "subspace_from_json", "subspace_to_json",
    "descriptor_from_json", "descriptor_to_json", "load_pencil", "load_subspace", "dump",
]
