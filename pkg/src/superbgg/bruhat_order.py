"""Bruhat order on dot orbits, and the super Bruhat order on X through the natural map.

Convention: swapping two rho_c-shifted entries ``a > b`` with ``a`` at the
earlier position produces a strictly lower weight.  ``leq_gl`` decides the
order by comparing decreasingly sorted prefixes (Ehresmann's tableau
criterion); ``leq_gl_closure`` searches the lowering-cover graph and is the
reference the criterion is tested against.
"""

from __future__ import annotations

import itertools
from collections import deque
from functools import lru_cache

from .weights import SuperWeight, natural

__all__ = [
    "leq_gl", "leq_gl_closure", "leq_super", "pairwise_incomparable",
    "comparable", "dot_orbit", "lowering_covers",
]


def _shifted_pair(u: SuperWeight, v: SuperWeight):
    if u.m != v.m:
        raise ValueError(f"weights of different shapes: {u!r} vs {v!r}")
    length = u.m + max(len(u.pos), len(v.pos))
    su, sv = u.shifted(length), v.shifted(length)
    if sorted(su) != sorted(sv):
        return None
    return su, sv


def leq_gl(u: SuperWeight, v: SuperWeight) -> bool:
    """``u <= v`` in the Bruhat order of gl(m+inf); False off a common dot orbit."""
    pair = _shifted_pair(u, v)
    if pair is None:
        return False
    su, sv = pair
    for i in range(1, len(su) + 1):
        pu = sorted(su[:i], reverse=True)
        pv = sorted(sv[:i], reverse=True)
        if any(x > y for x, y in zip(pu, pv)):
            return False
    return True


def lowering_covers(seq: tuple[int, ...]):
    """Sequences obtained by one lowering swap (larger entry moved later)."""
    for i, j in itertools.combinations(range(len(seq)), 2):
        if seq[i] > seq[j]:
            t = list(seq)
            t[i], t[j] = t[j], t[i]
            yield tuple(t)


@lru_cache(maxsize=4096)
def _reachable(seq: tuple[int, ...]) -> frozenset:
    seen = {seq}
    todo = deque([seq])
    while todo:
        cur = todo.popleft()
        for nxt in lowering_covers(cur):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return frozenset(seen)


def leq_gl_closure(u: SuperWeight, v: SuperWeight) -> bool:
    """Reference order: is ``u`` reachable from ``v`` by lowering swaps?"""
    pair = _shifted_pair(u, v)
    if pair is None:
        return False
    su, sv = pair
    return su in _reachable(sv)


def leq_super(u: SuperWeight, v: SuperWeight) -> bool:
    """Super Bruhat order on X: ``u <= v`` iff ``natural(u) <= natural(v)``.

    Only weights in X are accepted; the order on the larger set of
    block-dominant weights is not realized here.
    """
    for w in (u, v):
        if not w.in_X():
            raise ValueError(f"{w!r} is outside X; super Bruhat order only realized on X")
    return leq_gl(natural(u), natural(v))


def comparable(u: SuperWeight, v: SuperWeight, super: bool = False) -> bool:
    leq = leq_super if super else leq_gl
    return leq(u, v) or leq(v, u)


def pairwise_incomparable(ws, super: bool = False) -> bool:
    ws = list(ws)
    return not any(comparable(u, v, super) for u, v in itertools.combinations(ws, 2))


def dot_orbit(u: SuperWeight, length: int | None = None) -> list[SuperWeight]:
    """All distinct weights whose shifted sequence rearranges that of ``u``.

    The rearrangement is over the first ``length`` linear positions
    (default: just the support of ``u``).
    """
    m = u.m
    if length is None:
        length = m + len(u.pos)
    a = u.shifted(length)
    out = set()
    for perm in set(itertools.permutations(a)):
        coords = [x - (m + 1 - p) for p, x in enumerate(perm, start=1)]
        out.add(SuperWeight(tuple(coords[:m]), tuple(coords[m:])))
    return sorted(out, key=SuperWeight.sort_key)
