"""Simple modules of the groupoid algebra and their characters.

For a multi-partition p of shape lambda, the module L_p assigns the outer
Specht module S_p to every object of type lambda and zero to every other
object.  A morphism pi: f -> g (both of type lambda) acts through transport
to the canonical object b = f_lambda: the composite

    sigma_(g, b) o pi o sigma_(b, f)

is an endomorphism of b, i.e. an element of the block group S_lambda, and
acts on S_p by its outer-Specht matrix.

Characters are taken through the isomorphism with C[S(l,d)]: the character
of x is the trace of the action of Phi(x), evaluated blockwise.  Conjugacy
classes are found by brute-force orbit partitioning (conjugation by group
generators); no class counting theory is used.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .cyclo import Cyc, Mat, SpanBasis, root_of_unity
from .groupoid import (
    GMorphism,
    canonical_morphism,
    canonical_object,
    hom,
    objects,
    type_of,
)
from .perms import compose_perms
from .tableaux import (
    compositions,
    multipartitions,
    outer_rep,
    removable_cells,
    remove_cell,
)
from .wreath import (
    WreathElem,
    embed_lower_rank,
    enum_group,
    generators,
    wreath_inv,
    wreath_mul,
)

__all__ = [
    "SimpleModule",
    "all_simples",
    "build_simple",
    "conjugacy_classes",
    "ClassFunction",
    "inner_product",
    "total_dim_check",
    "young_induction_check",
    "verify_complete",
    "branching_report",
    "removable_node_restrictions",
]


class SimpleModule:
    """The simple module L_p, stored block-per-object (the functor view)."""

    def __init__(self, ell: int, d: int, p):
        self.ell = ell
        self.d = d
        self.p = tuple(tuple(pi) for pi in p)
        self.lam = tuple(sum(pi) for pi in self.p)
        if len(self.lam) != ell or sum(self.lam) != d:
            raise ValueError("multi-partition does not match (ell, d)")
        self.outer = outer_rep(self.p, self.lam)
        self.block_dim = self.outer.dim
        self.base = canonical_object(self.lam)
        self.objects = [f for f in objects(ell, d) if type_of(f, ell) == self.lam]
        self.block_index = {f: i for i, f in enumerate(self.objects)}
        self.total_dim = self.block_dim * len(self.objects)
        self._mat_cache: dict[tuple[int, ...], Mat] = {}
        self._trace_cache: dict[tuple[int, ...], Fraction] = {}

    # -- the action --------------------------------------------------------

    def transported(self, m: GMorphism) -> tuple[int, ...]:
        """The S_lambda element sigma_(g,b) o pi o sigma_(b,f) for pi = m."""
        to_f = canonical_morphism(self.base, m.source, self.ell)
        to_base = canonical_morphism(m.target, self.base, self.ell)
        return compose_perms(to_base.perm, compose_perms(m.perm, to_f.perm))

    def action_block(self, m: GMorphism) -> Mat:
        """The block matrix of a basis morphism (source and target of type lambda)."""
        w = self.transported(m)
        cached = self._mat_cache.get(w)
        if cached is None:
            rat = self.outer.matrix_of_blockperm(w)
            cached = Mat(
                self.ell,
                [[Cyc.rational(self.ell, v.rational_value()) for v in row] for row in rat.rows],
            )
            self._mat_cache[w] = cached
        return cached

    def supports(self, f) -> bool:
        return type_of(f, self.ell) == self.lam

    def act_alg(self, a) -> Mat:
        """Total matrix of an algebra element on the direct sum of blocks."""
        n = self.total_dim
        z = Cyc.zero(self.ell)
        rows = [[z] * n for _ in range(n)]
        for m, coeff in a.terms.items():
            if not (self.supports(m.source) and self.supports(m.target)):
                continue
            blk = self.action_block(m)
            r0 = self.block_index[m.target] * self.block_dim
            c0 = self.block_index[m.source] * self.block_dim
            for i in range(self.block_dim):
                for j in range(self.block_dim):
                    v = blk.rows[i][j]
                    if not v.is_zero():
                        rows[r0 + i][c0 + j] = rows[r0 + i][c0 + j] + coeff * v
        return Mat(self.ell, rows)

    def _block_trace(self, w: tuple[int, ...]) -> Fraction:
        t = self._trace_cache.get(w)
        if t is None:
            t = self.outer.trace_of_blockperm(w).rational_value()
            self._trace_cache[w] = t
        return t

    def char_wreath(self, x: WreathElem) -> Cyc:
        """Character of x in C[S(l,d)], i.e. the trace of the action of Phi(x)."""
        ell, d = self.ell, self.d
        acc = Cyc.zero(ell)
        perm = x.perm
        for g in self.objects:
            if any(g[perm[i] - 1] != g[i] for i in range(d)):
                continue
            expo = sum(x.colors[i] * g[perm[i] - 1] for i in range(d))
            tr = self._block_trace(self.transported(GMorphism(g, g, perm)))
            if tr:
                acc = acc + root_of_unity(ell, expo).scale(tr)
        return acc

    def label_json(self) -> list:
        return [list(pi) for pi in self.p]

    def __repr__(self) -> str:
        return f"SimpleModule(ell={self.ell}, d={self.d}, p={self.p}, dim={self.total_dim})"


@lru_cache(maxsize=None)
def build_simple(ell: int, d: int, p) -> SimpleModule:
    return SimpleModule(ell, d, p)


@lru_cache(maxsize=None)
def all_simples(ell: int, d: int) -> tuple[SimpleModule, ...]:
    """One simple module per multi-partition, compositions in lexicographic order."""
    out = []
    for lam in compositions(ell, d):
        for p in multipartitions(lam):
            out.append(build_simple(ell, d, p))
    return tuple(out)


@lru_cache(maxsize=None)
def conjugacy_classes(ell: int, d: int) -> tuple[tuple[WreathElem, int], ...]:
    """(representative, class size) pairs via conjugation-orbit partitioning."""
    group = enum_group(ell, d)
    if d == 0:
        return (((group[0]), 1),)
    gens = generators(ell, d)
    gen_pairs = [(g, wreath_inv(g)) for g in gens]
    seen: set[WreathElem] = set()
    classes = []
    for x in group:
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            new = []
            for y in frontier:
                for g, ginv in gen_pairs:
                    z = wreath_mul(wreath_mul(g, y), ginv)
                    if z not in orbit:
                        orbit.add(z)
                        new.append(z)
            frontier = new
        seen |= orbit
        classes.append((x, len(orbit)))
    return tuple(classes)


class ClassFunction:
    """A function on conjugacy classes, stored on class representatives."""

    def __init__(self, ell: int, d: int, values: dict[WreathElem, Cyc]):
        self.ell = ell
        self.d = d
        self.values = dict(values)

    @staticmethod
    def from_callable(ell: int, d: int, fn, verify_samples: int = 2) -> "ClassFunction":
        """Tabulate fn on class representatives; spot-check class constancy."""
        import random

        rng = random.Random(7)
        gens = generators(ell, d) if d >= 1 else []
        values = {}
        for rep, size in conjugacy_classes(ell, d):
            v = fn(rep)
            if size > 1 and gens:
                for _ in range(verify_samples):
                    g = rng.choice(gens)
                    conj = wreath_mul(wreath_mul(g, rep), wreath_inv(g))
                    if fn(conj) != v:
                        raise ValueError("function is not constant on conjugacy classes")
            values[rep] = v
        return ClassFunction(ell, d, values)

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and self.values == other.values

    def __hash__(self):
        return hash(frozenset(self.values.items()))


def inner_product(ell: int, d: int, alpha: ClassFunction, beta: ClassFunction) -> Cyc:
    """(1/|G|) sum_x alpha(x) conj(beta(x)), conj = the automorphism xi -> xi^(-1)."""
    order = ell**d * factorial(d)
    acc = Cyc.zero(ell)
    for rep, size in conjugacy_classes(ell, d):
        acc = acc + (alpha.values[rep] * beta.values[rep].conjugate()).scale(size)
    return acc.scale(Fraction(1, order))


def simple_class_function(mod: SimpleModule) -> ClassFunction:
    return ClassFunction.from_callable(mod.ell, mod.d, mod.char_wreath)


def total_dim_check(mod: SimpleModule) -> bool:
    """Total dimension equals (d!/lambda!) * dim S_p exactly."""
    lam_fact = 1
    for li in mod.lam:
        lam_fact *= factorial(li)
    return mod.total_dim == factorial(mod.d) // lam_fact * mod.block_dim


def young_induction_check(mod: SimpleModule, f) -> bool:
    """|S(l,d)| / |G^f| * dim L_p(f) = total dim, G^f the generalized Young subgroup."""
    f = tuple(f)
    if type_of(f, mod.ell) != mod.lam:
        raise ValueError("object type does not match the module's shape")
    gf_order = 1
    for li in mod.lam:
        gf_order *= mod.ell**li * factorial(li)
    group_order = mod.ell**mod.d * factorial(mod.d)
    return group_order // gf_order * mod.block_dim == mod.total_dim


def _commutant_dim(mod: SimpleModule) -> int:
    """Exact dimension of {X : X L(m) = L(m) X for all basis morphisms m}.

    X commutes with every e_f, hence is block diagonal; the unknowns are the
    per-object blocks X_f.
    """
    ell = mod.ell
    nobj = len(mod.objects)
    bd = mod.block_dim
    nunk = nobj * bd * bd
    if nunk == 0:
        return 0
    sb = SpanBasis(ell, nunk)
    zero = Cyc.zero(ell)
    for fi, f in enumerate(mod.objects):
        for gi, g in enumerate(mod.objects):
            for m in hom(f, g, ell):
                a = mod.action_block(m)
                # X_g a - a X_f = 0, one row per matrix entry (r, c)
                for r in range(bd):
                    for c in range(bd):
                        row = [zero] * nunk
                        for t in range(bd):
                            v = a.rows[t][c]
                            if not v.is_zero():
                                idx = (gi * bd + r) * bd + t
                                row[idx] = row[idx] + v
                            w = a.rows[r][t]
                            if not w.is_zero():
                                idx = (fi * bd + t) * bd + c
                                row[idx] = row[idx] - w
                        sb.add(row)
    return nunk - sb.rank


def verify_complete(ell: int, d: int) -> dict:
    """Completeness: Wedderburn count, irreducibility, pairwise distinctness."""
    mods = all_simples(ell, d)
    checks = []

    total = sum(m.total_dim**2 for m in mods)
    expected = ell**d * factorial(d)
    checks.append(
        {
            "name": "wedderburn sum of squares",
            "status": "pass" if total == expected else "fail",
            "details": {"sum": total, "group_order": expected, "dims": [m.total_dim for m in mods]},
        }
    )

    eq5 = all(total_dim_check(m) for m in mods)
    checks.append({"name": "total dim = (d!/lam!) dim S_p", "status": "pass" if eq5 else "fail"})

    bad = [m.label_json() for m in mods if _commutant_dim(m) != 1]
    checks.append(
        {
            "name": "commutant of each simple has dim 1",
            "status": "pass" if not bad else "fail",
            "details": {"failures": bad},
        }
    )

    chars = [simple_class_function(m) for m in mods]
    distinct = len({tuple(sorted(((k, v.coeffs) for k, v in c.values.items()))) for c in chars})
    checks.append(
        {
            "name": "characters pairwise distinct",
            "status": "pass" if distinct == len(mods) else "fail",
            "details": {"distinct": distinct, "count": len(mods)},
        }
    )
    return {
        "ell": ell,
        "d": d,
        "simple_count": len(mods),
        "checks": checks,
        "ok": all(c["status"] == "pass" for c in checks),
    }


def removable_node_restrictions(p) -> list[tuple[tuple[int, ...], ...]]:
    """Multi-partitions obtained by removing one removable node from one part."""
    out = []
    for i, part in enumerate(p):
        for cell in removable_cells(part):
            q = list(p)
            q[i] = remove_cell(part, cell)
            out.append(tuple(q))
    return out


def restriction_multiplicities(mod: SimpleModule) -> dict:
    """Decompose the restriction to S(l,d-1) by exact character inner products."""
    ell, d = mod.ell, mod.d
    if d < 1:
        raise ValueError("branching needs d >= 1")
    sub_simples = all_simples(ell, d - 1)

    def restricted_char(y: WreathElem) -> Cyc:
        return mod.char_wreath(embed_lower_rank(y, d))

    chi_res = ClassFunction.from_callable(ell, d - 1, restricted_char)
    mults = {}
    for sub in sub_simples:
        val = inner_product(ell, d - 1, chi_res, simple_class_function(sub))
        if not val.is_rational() or val.rational_value().denominator != 1:
            raise ValueError("character decomposition gave a non-integer multiplicity")
        m = int(val.rational_value())
        if m:
            mults[sub.p] = m
    return mults


def branching_report(ell: int, d: int) -> dict:
    """Restriction of every simple equals its removable-node multiset, multiplicity-free."""
    checks = []
    for mod in all_simples(ell, d):
        mults = restriction_multiplicities(mod)
        expected = removable_node_restrictions(mod.p)
        ok = (
            all(v == 1 for v in mults.values())
            and sorted(mults.keys()) == sorted(expected)
        )
        checks.append(
            {
                "name": f"branching of {mod.label_json()}",
                "status": "pass" if ok else "fail",
                "details": {
                    "restriction": sorted([list(map(list, q)) for q in mults.keys()]),
                    "expected": sorted([list(map(list, q)) for q in expected]),
                },
            }
        )
    return {
        "ell": ell,
        "d": d,
        "checks": checks,
        "ok": all(c["status"] == "pass" for c in checks),
    }
