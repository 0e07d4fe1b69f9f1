#!/usr/bin/env python3
"""Tensor-space dualities, computed exactly.

V splits into color blocks; the groupoid permutes tensor factors block to
block and commutes with the block-diagonal GL action.  The two actions
generate each other's centralizers; the kernel of the groupoid-algebra action
is the ideal of the simples with too many rows.  The rook monoid appears as
the extreme case of one-dimensional second block, and adjoining a cyclic
shift realizes the duality for G(l,k,d).
"""

from groupoidreps.rook import rook_epimorphism_check, rook_monoid_order
from groupoidreps.schurweyl import (
    TensorSpace,
    kernel_check,
    shift_duality_check,
    verify_commuting,
    verify_double_centralizer,
)

print("double centralizer on V^(x d) for block dimensions k:")
for ell, kvec, d in [(1, (2,), 2), (2, (1, 1), 2), (2, (2, 1), 2), (2, (2, 2), 2)]:
    T = TensorSpace(ell, kvec, d)
    ok11 = verify_commuting(T)["ok"]
    dc = verify_double_centralizer(T)
    ker = kernel_check(T)
    print(
        f"  l={ell} k={kvec} d={d}: tensor dim {T.dim()},"
        f" image dim {dc['image_dim']}, commutant dim {dc['commutant_dim']},"
        f" kernel dim {ker['kernel_dim']}"
        f"  [commuting {ok11}, double centralizer {dc['ok']}, kernel {ker['ok']}]"
    )

print("\nkilled labels for l=2, k=(1,1), d=2 (more rows than the block allows):")
ker = kernel_check(TensorSpace(2, (1, 1), 2))
print(f"  {ker['checks'][0]['details']['killed']}")

print("\nrook monoid (the l=2, k=(n-1,1) extreme):")
for d in (2, 3, 4):
    rep = rook_epimorphism_check(d)
    print(f"  d={d}: |IS_d| = {rook_monoid_order(d)}, generated dim {rep['dim']}, ok={rep['ok']}")

print("\nduality for G(l,k,d) with the cyclic shift adjoined:")
for ell, k, m, d in [(2, 2, 1, 1), (2, 2, 2, 2), (4, 2, 1, 2)]:
    rep = shift_duality_check(ell, k, m, d)
    detail = rep["checks"][1]["details"]
    print(
        f"  (l,k,m,d)=({ell},{k},{m},{d}): image dim {detail['image_dim']},"
        f" commutant dim {detail['commutant_dim']}, ok={rep['ok']}"
    )
