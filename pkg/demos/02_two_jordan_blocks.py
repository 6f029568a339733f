"""Orbits of bi-Lagrangian subspaces in J(0,6) + J(0,2).

Lists every orbit, builds its canonical representative, measures the orbit
dimension through the automorphism algebra and compares with a census over GF(2).

Run: python3 demos/02_two_jordan_blocks.py
"""

from pencil_lab import (
    JKInvariants, JordanContext, aut_algebra, canonical_representative, classify,
    enumerate_two_block_descriptors, ff_orbit_histogram, formulas, orbit_tangent_dim, synthesize,
)

inv = JKInvariants.nilpotent((3, 1))
p = synthesize(inv)
ctx = JordanContext.of(p)
a = aut_algebra(p)
print("aut algebra dim", a.dim, "(closed form %d)" % formulas(inv, "aut_dim"))

for desc in enumerate_two_block_descriptors(3, 1):
    L = canonical_representative(inv, desc)
    back = classify(ctx, L)
    print("%-32s orbit dim %d   classify -> %s" % (desc, orbit_tangent_dim(a, L), back))

# every GF(2) point lands in one of the orbits above
hist = ff_orbit_histogram(inv, 2)
print("GF(2) census:", sum(hist.values()), "subspaces")
for key, count in hist.items():
    print("  %4d  %s" % (count, key))
