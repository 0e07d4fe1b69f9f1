"""The groupoid algebra A_(l,d) and the isomorphism with C[S(l,d)].

A_(l,d) is the span of all groupoid morphisms; the product of two basis
morphisms is their composition when composable and zero otherwise, extended
bilinearly.  The unit is the sum of all identity morphisms e_f.

Phi sends a permutation sigma to the sum of all morphisms with underlying
permutation sigma, and the color generator at position 1 to
sum_f xi^(f(1)) e_f (with f(1) read literally in {1..l}).  On a general
element written as D(c) * sigma this gives the closed form

    Phi(x) = sum_g xi^( sum_j c_j g(j) ) * sigma_(g o sigma, g).

Phi is verified to be an algebra isomorphism by exact computation: it is
multiplicative on element pairs and the matrix of its images in the morphism
basis has full rank l^d * d! (rank is computed blockwise: images of elements
sharing an underlying permutation live in disjoint coordinate blocks).
"""

from __future__ import annotations

import random
from itertools import product

from .cyclo import Cyc, SpanBasis, root_of_unity, solve_system
from .groupoid import GMorphism, identity_morphism, object_index, objects
from .perms import all_perms, compose_perms, invert_perm
from .wreath import WreathElem, enum_group, generators, wreath_identity, wreath_mul

__all__ = [
    "AlgElem",
    "phi",
    "phi_on_generators",
    "phi_inverse",
    "verify_iso",
]

DEFAULT_EXHAUSTIVE_PAIR_CAP = 10**5
DEFAULT_SAMPLE_PAIRS = 10**5


class AlgElem:
    """A finite exact linear combination of groupoid morphisms."""

    __slots__ = ("ell", "d", "terms")

    def __init__(self, ell: int, d: int, terms: dict[GMorphism, Cyc] | None = None):
        self.ell = ell
        self.d = d
        self.terms: dict[GMorphism, Cyc] = {}
        if terms:
            for m, c in terms.items():
                if not c.is_zero():
                    self.terms[m] = c

    @staticmethod
    def zero(ell: int, d: int) -> "AlgElem":
        return AlgElem(ell, d)

    @staticmethod
    def from_morphism(ell: int, m: GMorphism, coeff: Cyc | None = None) -> "AlgElem":
        c = coeff if coeff is not None else Cyc.one(ell)
        return AlgElem(ell, len(m.perm), {m: c})

    @staticmethod
    def unit(ell: int, d: int) -> "AlgElem":
        one = Cyc.one(ell)
        return AlgElem(ell, d, {identity_morphism(f): one for f in objects(ell, d)})

    @staticmethod
    def idempotent(ell: int, f) -> "AlgElem":
        return AlgElem.from_morphism(ell, identity_morphism(tuple(f)))

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            new = c if acc is None else acc + c
            if new.is_zero():
                terms.pop(m, None)
            else:
                terms[m] = new
        return AlgElem(self.ell, self.d, terms)

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + other.scale(Cyc.rational(self.ell, -1))

    def scale(self, c: Cyc) -> "AlgElem":
        if c.is_zero():
            return AlgElem.zero(self.ell, self.d)
        return AlgElem(self.ell, self.d, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other: "AlgElem") -> "AlgElem":
        """Bilinear extension of composition; non-composable pairs give zero."""
        self._check(other)
        by_source: dict[tuple, list[tuple[GMorphism, Cyc]]] = {}
        for m, c in self.terms.items():
            by_source.setdefault(m.source, []).append((m, c))
        terms: dict[GMorphism, Cyc] = {}
        for m2, c2 in other.terms.items():
            for m1, c1 in by_source.get(m2.target, ()):
                key = GMorphism(m2.source, m1.target, compose_perms(m1.perm, m2.perm))
                coeff = c1 * c2
                acc = terms.get(key)
                new = coeff if acc is None else acc + coeff
                if new.is_zero():
                    terms.pop(key, None)
                else:
                    terms[key] = new
        return AlgElem(self.ell, self.d, terms)

    def _check(self, other: "AlgElem") -> None:
        if self.ell != other.ell or self.d != other.d:
            raise ValueError("algebra elements have different parameters")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgElem)
            and self.ell == other.ell
            and self.d == other.d
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ell, self.d, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list:
        items = sorted(
            self.terms.items(),
            key=lambda mc: (mc[0].source, mc[0].target, mc[0].perm),
        )
        return [{"morphism": m.to_json(), "coeff": c.to_json()} for m, c in items]

    def __repr__(self) -> str:
        return f"AlgElem(ell={self.ell}, d={self.d}, {len(self.terms)} terms)"


def phi(x: WreathElem, d: int | None = None) -> AlgElem:
    """The closed form Phi(x) = sum_g xi^(sum_i colors_i * g(perm(i))) sigma_(g o perm, g)."""
    from .groupoid import _objects_tuple

    ell = x.ell
    d = len(x.perm) if d is None else d
    perm = x.perm
    colors = x.colors
    terms: dict[GMorphism, Cyc] = {}
    for g in _objects_tuple(ell, d):
        source = tuple(g[p - 1] for p in perm)
        expo = 0
        for c, s in zip(colors, source):
            expo += c * s
        terms[GMorphism(source, g, perm)] = root_of_unity(ell, expo)
    return AlgElem(ell, d, terms)


def phi_on_generators(x: WreathElem) -> AlgElem:
    """Phi(x) computed as a product of generator images (independent route).

    x is factored as D(colors') * perm with perm a word in s_1..s_{d-1} and
    the diagonal part a word in the s_0^(j); the generator images are then
    multiplied in A_(l,d).
    """
    ell, d = x.ell, len(x.perm)
    if d == 0:
        return AlgElem.unit(ell, 0)
    gens = generators(ell, d)
    images = [phi(g) for g in gens]
    from .perms import perm_to_word

    out = AlgElem.unit(ell, d)
    #左 factor: diagonal D(c') with c'_j = colors[perm^{-1}(j)]
    inv = invert_perm(x.perm)
    for j in range(1, d + 1):
        e_j = x.colors[inv[j - 1] - 1]
        if e_j % ell == 0:
            continue
        word = list(range(j - 1, 0, -1)) + [0] + list(range(1, j))
        s0j = AlgElem.unit(ell, d)
        for i in word:
            s0j = s0j * images[i]
        for _ in range(e_j % ell):
            out = out * s0j
    for i in perm_to_word(x.perm):
        out = out * images[i]
    return out


def _morphism_slot(m: GMorphism, ell: int) -> int:
    return object_index(m.target, ell)


def phi_inverse(a: AlgElem) -> list[tuple[WreathElem, Cyc]]:
    """Solve Phi(y) = a exactly; returns the terms of y in the group basis.

    Raises ValueError when a is outside the image (cannot happen for valid
    inputs since Phi is bijective).
    """
    ell, d = a.ell, a.d
    objs = objects(ell, d)
    nobj = len(objs)
    by_perm: dict[tuple, dict[int, Cyc]] = {}
    for m, c in a.terms.items():
        by_perm.setdefault(m.perm, {})[_morphism_slot(m, ell)] = c
    out: list[tuple[WreathElem, Cyc]] = []
    colorings = list(product(range(ell), repeat=d))
    zero = Cyc.zero(ell)
    for perm, slots in by_perm.items():
        rows = []
        for g in objs:
            rows.append(
                [
                    root_of_unity(ell, sum(col[i] * g[perm[i] - 1] for i in range(d)))
                    for col in colorings
                ]
            )
        rhs = [slots.get(object_index(g, ell), zero) for g in objs]
        sol = solve_system(ell, rows, rhs)
        if sol is None:
            raise ValueError("element is not in the image of Phi")
        for col, coeff in zip(colorings, sol):
            if not coeff.is_zero():
                out.append((WreathElem(ell, perm, col), coeff))
    out.sort(key=lambda t: (t[0].perm, t[0].colors))
    return out


def _rank_of_phi_images(ell: int, d: int) -> int:
    """Exact rank of {Phi(x)} in the morphism basis, blockwise by permutation."""
    objs = objects(ell, d)
    rank = 0
    for perm in all_perms(d):
        sb = SpanBasis(ell, len(objs))
        for colors in product(range(ell), repeat=d):
            x = WreathElem(ell, perm, colors)
            vec = [Cyc.zero(ell)] * len(objs)
            for i, g in enumerate(objs):
                expo = sum(colors[j] * g[perm[j] - 1] for j in range(d))
                vec[i] = root_of_unity(ell, expo)
            sb.add(vec)
        rank += sb.rank
    return rank


def verify_iso(
    ell: int,
    d: int,
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_PAIR_CAP,
    sample: int = DEFAULT_SAMPLE_PAIRS,
    seed: int = 0,
) -> dict:
    """Exact verification that Phi is an algebra isomorphism.

    Multiplicativity Phi(xy) = Phi(x)Phi(y) is checked on all |G|^2 pairs when
    |G|^2 <= exhaustive_cap, otherwise on all generator pairs plus `sample`
    seeded random pairs.  Bijectivity follows from exact rank = l^d * d!.
    """
    from math import factorial

    group = enum_group(ell, d)
    order = len(group)
    checks = []
    failures = []

    def mult_ok(x, y) -> bool:
        return phi(wreath_mul(x, y)) == phi(x) * phi(y)

    exhaustive = order * order <= exhaustive_cap
    if exhaustive:
        pairs = ((x, y) for x in group for y in group)
        npairs = order * order
    else:
        gens = generators(ell, d)
        rng = random.Random(seed)
        listed = [(x, y) for x in gens for y in gens]
        listed += [(rng.choice(group), rng.choice(group)) for _ in range(sample)]
        pairs = iter(listed)
        npairs = len(listed)
    for x, y in pairs:
        if not mult_ok(x, y):
            failures.append({"x": x.to_json(), "y": y.to_json()})
            break
    checks.append(
        {
            "name": "phi multiplicative",
            "status": "fail" if failures else "pass",
            "details": {
                "pairs": npairs,
                "mode": "exhaustive" if exhaustive else "generators+sampled",
                **({"counterexample": failures[0]} if failures else {}),
            },
        }
    )

    expected = ell**d * factorial(d)
    rank = _rank_of_phi_images(ell, d)
    checks.append(
        {
            "name": "phi bijective (exact rank)",
            "status": "pass" if rank == expected else "fail",
            "details": {"rank": rank, "dim": expected},
        }
    )

    unit_ok = phi(wreath_identity(ell, d)) == AlgElem.unit(ell, d)
    checks.append({"name": "phi preserves unit", "status": "pass" if unit_ok else "fail"})
    return {
        "ell": ell,
        "d": d,
        "checks": checks,
        "ok": all(c["status"] == "pass" for c in checks),
    }
