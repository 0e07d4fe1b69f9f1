"""The involutive Gelfand model for the groupoid algebra.

The model space at an object f is spanned by the involutions of the
endomorphism group of f; a morphism sigma: f -> g sends an involution w to
(-1)^inv(sigma, w) * sigma w sigma^(-1), where

    inv(sigma, w) = #{(i, j) : i < j, w(i) = j, sigma(i) > sigma(j)}

counts the 2-cycles of w that sigma inverts.  The resulting module is a
multiplicity-free direct sum of all simple modules; multiplicities are
verified by exact character inner products.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclo import Cyc, root_of_unity
from .groupoid import GMorphism, compose, hom, inverse, objects
from .perms import compose_perms
from .simples import (
    ClassFunction,
    all_simples,
    conjugacy_classes,
    inner_product,
    simple_class_function,
)
from .wreath import WreathElem

__all__ = [
    "involutions",
    "inv_statistic",
    "GelfandModel",
    "build_gelfand",
    "verify_gelfand",
]


def involutions(f, ell: int) -> list[GMorphism]:
    """All w in Hom(f, f) with w o w = e_f (the identity included)."""
    f = tuple(f)
    d = len(f)
    return [m for m in hom(f, f, ell) if compose_perms(m.perm, m.perm) == tuple(range(1, d + 1))]


def inv_statistic(sigma: GMorphism, w: GMorphism) -> int:
    """#{(i,j) : i < j, w(i) = j, sigma(i) > sigma(j)}."""
    if w.source != sigma.source or w.source != w.target:
        raise ValueError("w must be an endomorphism of the source of sigma")
    s, wp = sigma.perm, w.perm
    d = len(s)
    return sum(1 for i in range(1, d + 1) if wp[i - 1] > i and s[i - 1] > s[wp[i - 1] - 1])


class GelfandModel:
    """The signed-conjugation module on involutions, one block per object."""

    def __init__(self, ell: int, d: int):
        self.ell = ell
        self.d = d
        self.objects = objects(ell, d)
        self.basis: dict[tuple, list[GMorphism]] = {
            f: involutions(f, ell) for f in self.objects
        }
        self.index: dict[tuple, dict[GMorphism, int]] = {
            f: {w: i for i, w in enumerate(ws)} for f, ws in self.basis.items()
        }
        self.total_dim = sum(len(ws) for ws in self.basis.values())

    def act_on_involution(self, sigma: GMorphism, w: GMorphism) -> tuple[int, GMorphism]:
        """(sign, sigma w sigma^(-1)); the image is again an involution."""
        conj = compose(compose(sigma, w), inverse(sigma))
        sign = -1 if inv_statistic(sigma, w) % 2 else 1
        return sign, conj

    def char_wreath(self, x: WreathElem) -> Cyc:
        """Trace of the action of Phi(x) on the model."""
        ell, d = self.ell, self.d
        perm = x.perm
        acc = Cyc.zero(ell)
        for g in self.objects:
            if any(g[perm[i] - 1] != g[i] for i in range(d)):
                continue
            expo = sum(x.colors[i] * g[perm[i] - 1] for i in range(d))
            sigma = GMorphism(g, g, perm)
            diag = 0
            for w in self.basis[g]:
                sign, conj = self.act_on_involution(sigma, w)
                if conj == w:
                    diag += sign
            if diag:
                acc = acc + root_of_unity(ell, expo).scale(diag)
        return acc

    def class_function(self) -> ClassFunction:
        return ClassFunction.from_callable(self.ell, self.d, self.char_wreath)


@lru_cache(maxsize=None)
def build_gelfand(ell: int, d: int) -> GelfandModel:
    return GelfandModel(ell, d)


def verify_gelfand(ell: int, d: int) -> dict:
    """Every simple module appears in the model with multiplicity exactly one."""
    model = build_gelfand(ell, d)
    simples = all_simples(ell, d)
    checks = []

    dim_match = model.total_dim == sum(m.total_dim for m in simples)
    checks.append(
        {
            "name": "sum of involution counts = sum of simple dims",
            "status": "pass" if dim_match else "fail",
            "details": {
                "involutions": model.total_dim,
                "sum_simple_dims": sum(m.total_dim for m in simples),
            },
        }
    )

    chi_model = model.class_function()
    mult_table = []
    all_one = True
    for m in simples:
        val = inner_product(ell, d, chi_model, simple_class_function(m))
        ok = val.is_rational() and val.rational_value() == 1
        all_one = all_one and ok
        mult_table.append({"label": m.label_json(), "multiplicity": str(val.to_json()["coeffs"]) if not val.is_rational() else int(val.rational_value())})
    checks.append(
        {
            "name": "every simple has multiplicity exactly 1",
            "status": "pass" if all_one else "fail",
            "details": {"multiplicities": mult_table},
        }
    )

    # character equality chi_model = sum_p chi_p on class representatives
    diff_zero = True
    for rep, _size in conjugacy_classes(ell, d):
        total = Cyc.zero(ell)
        for m in simples:
            total = total + m.char_wreath(rep)
        if chi_model.values[rep] != total:
            diff_zero = False
            break
    checks.append(
        {"name": "gelfand character equals sum of simple characters", "status": "pass" if diff_zero else "fail"}
    )

    return {
        "ell": ell,
        "d": d,
        "total_dim": model.total_dim,
        "checks": checks,
        "ok": all(c["status"] == "pass" for c in checks),
    }
