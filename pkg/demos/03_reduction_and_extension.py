"""Reduce a single Jordan block by an invariant subspace and watch orbits move.

Run: python3 demos/03_reduction_and_extension.py
"""

from pencil_lab import (
    JKInvariants, JordanContext, NotExtendable, Subspace, extend_to_bilagrangian, is_bilagrangian,
    pull_subspace, push_subspace, reduce, semisimple_type, synthesize, to_rat, unit,
)

p = synthesize(JKInvariants.nilpotent((3,)))  # J(0,6): e1..e3, f1..f3
U = Subspace.span([unit(6, 2), unit(6, 3)])   # span{e3, f1}
r = reduce(p, U)
print("quotient dim", r.quotient.dim)


def show(S):
    return [[str(x) for x in row] for row in S.rows]


# a one-parameter family; at eps = 0 it degenerates
for eps in ("1/3", "1/7"):
    e = to_rat(eps)
    L = Subspace.span([[e, 1, 0, 0, 1, 0], [0, e, 1, 1, 0, 0], [0, 0, e, 0, 0, 0]])
    assert is_bilagrangian(p, L)
    Lq = push_subspace(r, L)
    print("eps=%s: type %s, pushed to %s" % (eps, semisimple_type(JordanContext.of(p), L), show(Lq)))

limit = Subspace.span([[0, 1, 0, 0, 1, 0], [0, 0, 1, 1, 0, 0], [0, 0, 1, 0, 0, 0]])
print("limit pushed to", show(push_subspace(r, limit)))

# pulling a quotient bi-Lagrangian back gives one containing U
Lq = Subspace.span([[1, 1]])
back = pull_subspace(r, Lq)
print("pulled back contains U:", U <= back, "bi-Lagrangian:", is_bilagrangian(p, back))

# extension works from U, fails from span{e1, f3}
print("extend U:", extend_to_bilagrangian(p, U).dim)
try:
    extend_to_bilagrangian(p, Subspace.span([unit(6, 0), unit(6, 5)]))
except NotExtendable as ex:
    print("span{e1, f3}: not extendable (%s)" % ex.kind)
