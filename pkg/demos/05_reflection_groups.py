#!/usr/bin/env python3
"""Complex reflection groups G(l,k,d) through the quotient groupoid.

Rotating the colors by l/k generates a free action on the groupoid; the
quotient's algebra embeds into the original one by orbit sums, and its image
is exactly the span of the group algebra of G(l,k,d).  Simple modules are
labelled by multi-partition orbit representatives together with a character
of their stabilizer, and the restriction of each wreath-product simple
decomposes without multiplicity.
"""

from groupoidreps.gkd import (
    restriction_check,
    endo_structure,
    rotation_eigenspace_check,
    quotient_groupoid,
    quotient_labels,
    reflection_span_check,
    quotient_simples_check,
)
ELL, K, D = 2, 2, 2

Q = quotient_groupoid(ELL, K, D)
print(f"quotient groupoid for (l,k,d) = ({ELL},{K},{D}):")
for oi, orbit in enumerate(Q.orbits):
    info = endo_structure(Q, oi)
    print(
        f"  orbit {oi}: {list(orbit)}  type {info['type']}"
        f"  stabilizer order {info['stabilizer_order']}  endomorphisms {info['endo_count']}"
    )

print("\nsimple labels (p, m):")
for lam, p, m in quotient_labels(ELL, K, D):
    print(f"  shape {lam}  p = {[list(q) for q in p]}  m = {m}")

for name, rep in [
    ("span equality with C[G(l,k,d)]", reflection_span_check(ELL, K, D)),
    ("cross-section of quotient simples", quotient_simples_check(ELL, K, D)),
    ("multiplicity-free restriction", restriction_check(ELL, K, D)),
    ("rotation-eigenspace cross-check", rotation_eigenspace_check(ELL, K, D)),
]:
    print(f"\n{name}:")
    for chk in rep["checks"]:
        print(f"  [{chk['status']}] {chk['name']}")
