#!/usr/bin/env python3
"""The involutive Gelfand model: every simple module exactly once.

The model space is spanned by the involutions of each object's endomorphism
group; a morphism acts by signed conjugation, the sign counting the 2-cycles
it inverts.  Exact character inner products show each simple module appears
with multiplicity one.
"""

from groupoidreps.gelfand import build_gelfand, inv_statistic, involutions, verify_gelfand
from groupoidreps.groupoid import hom

ELL, D = 2, 2

model = build_gelfand(ELL, D)
print(f"involution basis of the ({ELL},{D}) model:")
for f, ws in sorted(model.basis.items()):
    print(f"  object {f}: {len(ws)} involutions: {[w.perm for w in ws]}")
print(f"total dimension {model.total_dim}")

f = (1, 1)
sigma = hom(f, f, ELL)[1]
print(f"\nsigned conjugation by perm {sigma.perm} on object {f}:")
for w in involutions(f, ELL):
    sign, conj = model.act_on_involution(sigma, w)
    print(f"  {w.perm} -> {'+' if sign > 0 else '-'}{conj.perm}"
          f"   (inv statistic {inv_statistic(sigma, w)})")

rep = verify_gelfand(ELL, D)
print("\nmodel checks:")
for chk in rep["checks"]:
    print(f"  [{chk['status']}] {chk['name']}")
mults = rep["checks"][1]["details"]["multiplicities"]
print("\nmultiplicity table:")
for row in mults:
    print(f"  {row['label']}: {row['multiplicity']}")
