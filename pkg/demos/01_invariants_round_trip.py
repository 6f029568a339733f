"""Hide a normal-form pencil behind a random change of basis, then recover it.

Run: python3 demos/01_invariants_round_trip.py
"""

from pencil_lab import JKInvariants, core_mantle, jk_invariants, reduce, scramble, standard_basis, synthesize

inv = JKInvariants.parse("J0:2,J0:1,J3:1,Jinf:1;K:1")
print("target invariants:", inv.describe())

p = synthesize(inv)
q, S = scramble(p, seed=11)
print("scrambled pencil, dim %d, rank %d" % (q.dim, inv.rank))
print("first row of A after scrambling:", [str(x) for x in q.A.rows[0]])

found = jk_invariants(q)
print("recovered:", found.describe())
assert found == inv

# the core lives in the Kronecker part and every bi-Lagrangian subspace contains it
K, M = core_mantle(q)
print("core dim %d, mantle dim %d" % (K.dim, M.dim))

# quotienting by the core leaves a Jordan pencil; a standard basis of it
# brings the blocks back
sb = standard_basis(reduce(q, K).quotient)
for b in sb.layout:
    print("  block eigenvalue %s, half-size %d" % (b.eigenvalue, b.size))
