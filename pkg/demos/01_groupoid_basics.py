#!/usr/bin/env python3
"""A walk through the colored-permutation groupoid.

Objects are colorings of d dots with l colors; morphisms are color-preserving
permutations.  This script rebuilds the four-object example with two dots and
two colors, prints its hom table, and demonstrates types, canonical objects
and the order-preserving canonical morphisms.
"""

from math import factorial

from groupoidreps.groupoid import (
    canonical_morphism,
    canonical_object,
    compose,
    hom,
    inverse,
    objects,
    type_of,
)

ELL, D = 2, 2

print(f"objects of the ({ELL},{D}) groupoid:")
objs = objects(ELL, D)
for f in objs:
    print(f"  {f}   type {type_of(f, ELL)}")

print("\nhom table (number of color-preserving bijections):")
header = "        " + "  ".join(str(g) for g in objs)
print(header)
for f in objs:
    row = [f"{len(hom(g, f, ELL)):6d}" for g in objs]
    print(f"{f}  " + "  ".join(row))

total = sum(len(hom(f, g, ELL)) for f in objs for g in objs)
print(f"\ntotal morphisms: {total} = {ELL}^{D} * {D}! = {ELL**D * factorial(D)}")

print("\nmorphisms in Hom((1,2),(2,1)) -- the single crossing:")
for m in hom((1, 2), (2, 1), ELL):
    print(f"  perm {m.perm}")

print("\ncanonical objects (colors sorted increasingly):")
for lam in [(2, 1), (0, 3), (1, 1, 1)]:
    print(f"  type {lam} -> {canonical_object(lam)}")

f, g, h = (1, 1, 2), (1, 2, 1), (2, 1, 1)
ab = canonical_morphism(f, g, 2)
bc = canonical_morphism(g, h, 2)
print(f"\ncanonical morphism {f} -> {g}: perm {ab.perm}")
print(f"canonical morphism {g} -> {h}: perm {bc.perm}")
print(f"cocycle law: composite perm {compose(bc, ab).perm} "
      f"= canonical {canonical_morphism(f, h, 2).perm}")
print(f"inverse of the first: {inverse(ab).perm}")
