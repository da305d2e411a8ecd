"""Kac modules: induce a g0-irreducible through the odd raising part.

Basis vectors are pairs (S, u) with S a strictly increasing tuple of odd
lowering generators and u a basis vector of L0.  The generator action is
computed by moving the generator rightward through the odd monomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..weights import SuperWeight, dim_l0
from . import superalgebra as sa
from .glirrep import build_gl_irrep
from .linalg import add_into
from .modules import ModuleRealization, ResourceGuardError

MAX_KAC_DIM = 5000


def _check_dominant(block, name):
    if any(block[i] < block[i + 1] for i in range(len(block) - 1)):
        raise ValueError(f"{name} block {block} is not weakly decreasing")


def build_l0(m: int, n: int, nu: SuperWeight) -> ModuleRealization:
    """L0(nu) = L(neg) (x) L(pos) as a module over gl(m) + gl(n)."""
    pos = nu.coords(m + n)[m:]
    A = build_gl_irrep(m, nu.neg, "neg") if m else None
    B = build_gl_irrep(n, pos, "pos") if n else None
    da = A.dim if A else 1
    db = B.dim if B else 1
    weights, labels = [], []
    for i in range(da):
        for j in range(db):
            wa = A.weights[i] if A else ()
            wb = B.weights[j] if B else ()
            weights.append(tuple(wa) + tuple(wb))
            labels.append(f"u{i * db + j}")
    gens = {}
    if A:
        for g, cols in A.gens.items():
            gens[g] = [{k * db + j: c for k, c in cols[i].items()} for i in range(da) for j in range(db)]
    if B:
        for g, cols in B.gens.items():
            gens[g] = [{i * db + k: c for k, c in cols[j].items()} for i in range(da) for j in range(db)]
    hw = tuple(nu.neg) + tuple(pos)
    return ModuleRealization(m, n, labels, weights, [0] * len(weights), gens, hw)


def build_kac(m: int, n: int, nu_natural: SuperWeight) -> ModuleRealization:
    """The Kac module with highest weight ``nu_natural`` (coordinates in index order)."""
    if not math.isfinite(n):
        raise ValueError("Kac modules need finite n")
    n = int(n)
    nu = nu_natural
    if nu.m != m:
        raise ValueError(f"weight {nu} has {nu.m} negative entries, expected {m}")
    if len(nu.pos) > n:
        raise ValueError(f"weight {nu} does not fit gl({m}|{n})")
    pos = nu.coords(m + n)[m:]
    _check_dominant(nu.neg, "negative")
    _check_dominant(pos, "positive")
    d0 = dim_l0(SuperWeight(nu.neg, pos, n), n)
    total = 2 ** (m * n) * d0
    if total > MAX_KAC_DIM:
        raise ResourceGuardError("kac-dimension", f"dim {total} exceeds {MAX_KAC_DIM}")

    L0 = build_l0(m, n, nu)
    odd = sa.odd_lowering(m, n)
    subsets = [()]
    for f in reversed(odd):
        subsets += [(f,) + s for s in subsets]
    subsets.sort(key=lambda s: (len(s), s))

    keys = [(S, u) for S in subsets for u in range(L0.dim)]
    index = {k: t for t, k in enumerate(keys)}

    def lmul(f, S):
        if f in S:
            return None
        smaller = sum(1 for g in S if g < f)
        return (-1) ** smaller, tuple(sorted(S + (f,)))

    def lmul_vec(f, vec):
        out: dict = {}
        for (S, u), c in vec.items():
            hit = lmul(f, S)
            if hit:
                sign, S2 = hit
                add_into(out, {(S2, u): c}, sign)
        return out

    @lru_cache(maxsize=None)
    def act(x, S, u):
        if not S:
            if sa.is_odd_raising(x):
                return {}
            if sa.is_odd_lowering(x):
                return {((x,), u): Fraction(1)}
            return {((), k): c for k, c in L0.gens[x][u].items()}
        f, rest = S[0], S[1:]
        out: dict = {}
        for h, c in sa.bracket(x, f).items():
            add_into(out, act(h, rest, u), c)
        inner = act(x, rest, u)
        add_into(out, lmul_vec(f, inner), -1 if sa.parity(x) else 1)
        return out

    gens = {}
    for x in sa.all_generators(m, n):
        gens[x] = [{index[k]: c for k, c in act(x, S, u).items()} for S, u in keys]

    shifts = {f: sa.weight_shift(f, m, n) for f in odd}
    weights = []
    for S, u in keys:
        w = list(L0.weights[u])
        for f in S:
            w = [a + b for a, b in zip(w, shifts[f])]
        weights.append(tuple(w))
    tail = (lambda u: "v") if L0.dim == 1 else (lambda u: f"u{u}")
    labels = ["".join(sa.generator_name(f) for f in S) + tail(u) for S, u in keys]
    parities = [len(S) % 2 for S, _ in keys]
    return ModuleRealization(m, n, labels, weights, parities, gens, L0.highest_weight)
