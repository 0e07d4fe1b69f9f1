"""Permutations of {1..d} in one-line notation (1-based tuples).

perm[i-1] is the image of i.  Composition is composition of maps:
compose(a, b) applies b first, then a.
"""

from __future__ import annotations

from itertools import permutations as _itertools_permutations

__all__ = [
    "identity_perm",
    "compose_perms",
    "invert_perm",
    "perm_sign",
    "all_perms",
    "perm_to_word",
    "apply_perm",
]


def identity_perm(d: int) -> tuple[int, ...]:
    return tuple(range(1, d + 1))


def compose_perms(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """(a o b)(i) = a(b(i))."""
    return tuple(a[bi - 1] for bi in b)


def invert_perm(a: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, ai in enumerate(a):
        inv[ai - 1] = i + 1
    return tuple(inv)


def apply_perm(a: tuple[int, ...], i: int) -> int:
    return a[i - 1]


def perm_sign(a: tuple[int, ...]) -> int:
    """Sign via cycle decomposition."""
    seen = [False] * len(a)
    sign = 1
    for i in range(len(a)):
        if not seen[i]:
            j = i
            clen = 0
            while not seen[j]:
                seen[j] = True
                j = a[j] - 1
                clen += 1
            if clen % 2 == 0:
                sign = -sign
    return sign


def all_perms(d: int):
    """All permutations of {1..d} in lexicographic one-line order."""
    return [tuple(p) for p in _itertools_permutations(range(1, d + 1))]


def adjacent_transposition(d: int, i: int) -> tuple[int, ...]:
    """s_i swapping i and i+1 (1 <= i <= d-1)."""
    p = list(range(1, d + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def perm_to_word(a: tuple[int, ...]) -> list[int]:
    """Indices i with a = s_{i_1} o s_{i_2} o ... o s_{i_m} (applied right to left).

    Produced by bubble sort; the word length equals the inversion number.
    """
    a = list(a)
    rec: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(a) - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                rec.append(i + 1)
                changed = True
    return rec[::-1]
