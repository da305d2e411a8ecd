"""Elementary matrices of gl(m|n) and their supercommutators.

Indices run over -m, ..., -1 (even) and 1, ..., n (odd).  A generator is the
pair ``(a, b)`` standing for E_{ab}.
"""

from __future__ import annotations


def indices(m: int, n: int) -> list[int]:
    return list(range(-m, 0)) + list(range(1, n + 1))


def index_parity(i: int) -> int:
    return 0 if i < 0 else 1


def parity(g) -> int:
    a, b = g
    return (index_parity(a) + index_parity(b)) % 2


def bracket(g, h) -> dict:
    """``[E_ab, E_cd] = delta_bc E_ad - (-1)^{|E_ab||E_cd|} delta_da E_cb``."""
    (a, b), (c, d) = g, h
    out: dict = {}
    if b == c:
        out[(a, d)] = out.get((a, d), 0) + 1
    if d == a:
        sign = -1 if parity(g) * parity(h) else 1
        out[(c, b)] = out.get((c, b), 0) - sign
    return {k: v for k, v in out.items() if v}


def weight_shift(g, m: int, n: int) -> tuple[int, ...]:
    """Weight of E_ab as a coordinate vector in linear index order."""
    idx = indices(m, n)
    a, b = g
    out = [0] * len(idx)
    out[idx.index(a)] += 1
    out[idx.index(b)] -= 1
    return tuple(out)


def all_generators(m: int, n: int) -> list[tuple[int, int]]:
    idx = indices(m, n)
    return [(a, b) for a in idx for b in idx]


def simple_raising(m: int, n: int) -> list[tuple[int, int]]:
    idx = indices(m, n)
    return [(idx[t], idx[t + 1]) for t in range(len(idx) - 1)]


def even_simple_raising(m: int, n: int) -> list[tuple[int, int]]:
    return [g for g in simple_raising(m, n) if parity(g) == 0]


def odd_lowering(m: int, n: int) -> list[tuple[int, int]]:
    """Basis of g_{-1}: E_{j,i} with i < 0 < j, sorted by (row, column)."""
    return sorted((j, i) for i in range(-m, 0) for j in range(1, n + 1))


def odd_raising(m: int, n: int) -> list[tuple[int, int]]:
    """Basis of g_{+1}: E_{i,j} with i < 0 < j, sorted by (row, column)."""
    return sorted((i, j) for i in range(-m, 0) for j in range(1, n + 1))


def is_odd_lowering(g) -> bool:
    return g[0] > 0 > g[1]


def is_odd_raising(g) -> bool:
    return g[0] < 0 < g[1]


def generator_name(g) -> str:
    return f"E({g[0]},{g[1]})"
