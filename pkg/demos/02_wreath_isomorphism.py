#!/usr/bin/env python3
"""C_l wr S_d and its identification with the groupoid algebra.

Builds the generalized symmetric group from its generators, checks the
defining relations, and realizes the group algebra inside the groupoid
algebra: a permutation goes to the sum of all its color-preserving
incarnations, the color generator to a weighted sum of identity morphisms.
The map is verified to be an exact algebra isomorphism and inverted.
"""

from groupoidreps.algebra import phi, phi_inverse, verify_iso
from groupoidreps.wreath import check_presentation, enum_group, generators, s0_j

ELL, D = 3, 2

print(f"S({ELL},{D}) = C_{ELL} wr S_{D}, order {len(enum_group(ELL, D))}")
print("generators:")
for i, g in enumerate(generators(ELL, D)):
    print(f"  s_{i}: perm {g.perm}, color exponents {g.colors}")

print("\ndefining relations on the concrete generators:")
for chk in check_presentation(ELL, D):
    print(f"  [{chk['status']}] {chk['name']}")

print("\nthe diagonal element with xi at position 2 (word vs direct):")
print(f"  {s0_j(ELL, D, 2)}")

x = enum_group(ELL, D)[7]
img = phi(x)
print(f"\nPhi of {x}:")
for m, c in sorted(img.terms.items(), key=lambda t: (t[0].source, t[0].target)):
    print(f"  {c!r} * ({m.source} -> {m.target}, perm {m.perm})")

back = phi_inverse(img)
print(f"round trip: {back[0][0] == x and back[0][1].is_one()}")

rep = verify_iso(ELL, D)
print(f"\nisomorphism checks at ({ELL},{D}):")
for chk in rep["checks"]:
    print(f"  [{chk['status']}] {chk['name']}")
