"""Dot action of the Weyl group of gl(m+inf) and the layers W0_k.

Minimal length representatives of W_0 \\ W (W_0 the Levi subgroup fixing
the -1|1 boundary) are encoded by the m-set of linear positions of
``lam + rho_c`` that get routed to the negative block.  Its crossing number
is the Coxeter length.  ``oracle_w0k`` recomputes the same layers by brute
force over a finite symmetric group and is what the subset model is
checked against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .partitions import INF
from .weights import SuperWeight

__all__ = [
    "CosetElement", "dot_reflect", "crossing_number", "iter_w0k",
    "enumerate_w0k", "oracle_w0k", "oracle_representatives", "truncate_terms",
    "linear_position",
]

ORACLE_MAX_RANK = 8


def linear_position(j: int, m: int) -> int:
    """1-based position of index ``j`` in the merged order -m, ..., -1, 1, 2, ..."""
    if j < 0:
        if j < -m:
            raise IndexError(f"index {j} outside -{m}..-1")
        return m + 1 + j
    if j == 0:
        raise IndexError("index 0 is not in I(m|n)")
    return m + j


def _from_shifted(values, m: int, n=INF) -> SuperWeight:
    coords = [v - (m + 1 - p) for p, v in enumerate(values, start=1)]
    return SuperWeight(tuple(coords[:m]), tuple(coords[m:]), n)


def dot_reflect(u: SuperWeight, j: int) -> SuperWeight:
    """``sigma_j o u``: swap the rho_c-shifted coordinates at j and its successor."""
    m = u.m
    p = linear_position(j, m)
    if u.n != INF and p + 1 > m + u.n:
        raise IndexError(f"successor of index {j} lies outside I({m}|{u.n})")
    length = max(m + len(u.pos), p + 1)
    a = list(u.shifted(length))
    a[p - 1], a[p] = a[p], a[p - 1]
    return _from_shifted(a, m, u.n)


def crossing_number(positions) -> int:
    """Sum over chosen positions of the unchosen positions preceding it."""
    return sum(p - t for t, p in enumerate(sorted(positions), start=1))


@dataclass(frozen=True)
class CosetElement:
    positions: tuple[int, ...]
    base: SuperWeight

    @property
    def length(self) -> int:
        return crossing_number(self.positions)

    def weight(self) -> SuperWeight:
        """The dot image ``w o base``."""
        m = self.base.m
        span = max(self.positions[-1], m + len(self.base.pos))
        a = self.base.shifted(span)
        chosen = set(self.positions)
        neg_vals = [a[p - 1] for p in self.positions]
        pos_vals = [a[p - 1] for p in range(1, span + 1) if p not in chosen]
        return _from_shifted(neg_vals + pos_vals, m)


def _check_base(lam: SuperWeight):
    if not (lam.in_X() and lam.is_partition()):
        raise ValueError(f"{lam!r} is not a partition weight")
    a = lam.shifted(lam.m + len(lam.pos) + 1)
    if any(a[i] <= a[i + 1] for i in range(len(a) - 1)):
        raise ValueError(f"{lam!r} + rho_c is not strictly decreasing")


def iter_w0k(lam: SuperWeight, kmax: int):
    """Yield every coset element of length <= kmax acting on ``lam``."""
    _check_base(lam)
    m = lam.m
    for positions in itertools.combinations(range(1, m + kmax + 1), m):
        if crossing_number(positions) <= kmax:
            yield CosetElement(positions, lam)


def enumerate_w0k(lam: SuperWeight, kmax: int) -> dict[int, list[SuperWeight]]:
    """``{k: sorted [w o lam for w in W0_k]}`` for ``0 <= k <= kmax``."""
    layers: dict[int, list[SuperWeight]] = {k: [] for k in range(kmax + 1)}
    for elt in iter_w0k(lam, kmax):
        layers[elt.length].append(elt.weight())
    for k in layers:
        layers[k].sort(key=SuperWeight.sort_key)
    return layers


@lru_cache(maxsize=None)
def oracle_representatives(m: int, N: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All ``(w, l(w))`` in S_{m+N} with ``w(Delta^-) & Delta^+`` inside Delta^+(0).

    ``w`` is in one-line notation on 0-based positions: ``w[i]`` is where
    position ``i`` is sent.  The root condition reads: every inversion
    ``i > j, w[i] < w[j]`` straddles the block boundary with ``w[i] < m <= w[j]``.
    """
    r = m + N
    if r > ORACLE_MAX_RANK:
        raise ValueError(f"oracle rank m+N={r} exceeds {ORACLE_MAX_RANK}")
    reps = []
    for w in itertools.permutations(range(r)):
        length = 0
        for j in range(r):
            wj = w[j]
            for i in range(j + 1, r):
                if w[i] < wj:
                    if not (w[i] < m <= wj):
                        break
                    length += 1
            else:
                continue
            break
        else:
            reps.append((w, length))
    return tuple(reps)


def oracle_w0k(lam: SuperWeight, m: int, N: int, k: int) -> list[SuperWeight]:
    """Dot images of the length-k representatives, by exhaustive search in S_{m+N}."""
    if lam.m != m:
        raise ValueError("m does not match the weight")
    if len(lam.pos) > N:
        raise ValueError(f"N={N} too small for {lam!r}")
    r = m + N
    a = lam.shifted(r)
    out = set()
    for w, length in oracle_representatives(m, N):
        if length != k:
            continue
        img = [0] * r
        for i in range(r):
            img[w[i]] = a[i]
        out.add(_from_shifted(img, m))
    return sorted(out, key=SuperWeight.sort_key)


def truncate_terms(terms, n) -> list[SuperWeight]:
    """Drop the terms whose Kac module vanishes at rank n (first pos coordinate > n)."""
    return [nu for nu in terms if nu.first_pos() <= n]
