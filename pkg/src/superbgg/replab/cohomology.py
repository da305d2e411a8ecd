"""Cohomology of the odd raising radical with coefficients in a tensor module.

The radical is odd and abelian, so its cochains are symmetric powers of the
dual: C^k = S^k(g_{+1}^*) (x) L, with

    d(xi^p (x) l) = sum_t xi_t xi^p (x) E_t l.

The differential is g0-equivariant, so H^k is a g0-module; its highest weight
vectors are found weight by weight as cocycles whose images under the even
simple raising generators are coboundaries.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from ..characters import G0Decomposition, decompose_g0, SparseLaurent
from ..partitions import Partition, in_hook
from ..weights import SuperWeight, natural, split_hook
from . import superalgebra as sa
from .kac import build_kac
from .linalg import Subspace, add_into, nullspace
from .modules import ModuleRealization, ResourceGuardError, irreducible_quotient

MAX_COCHAINS = 50_000


def _monomial_weight(p, m, n):
    w = [0] * (m + n)
    for t in p:
        for i, s in enumerate(sa.weight_shift(t, m, n)):
            w[i] -= s
    return w


class CochainComplex:
    """Cochains C^0..C^{kmax+1} of g_{+1} with values in ``L``, by weight."""

    def __init__(self, L: ModuleRealization, kmax: int):
        self.L = L
        self.m, self.n = L.m, L.n
        self.odd = sa.odd_raising(self.m, self.n)
        self.kmax = kmax
        self.by_weight: list[dict] = []
        for k in range(kmax + 2):
            spaces = defaultdict(list)
            for p in combinations_with_replacement(self.odd, k):
                shift = _monomial_weight(p, self.m, self.n)
                for l in range(L.dim):
                    w = tuple(a + b for a, b in zip(L.weights[l], shift))
                    spaces[w].append((p, l))
            self.by_weight.append(dict(spaces))

    def dim(self, k: int) -> int:
        return sum(len(v) for v in self.by_weight[k].values())

    def d(self, vec: dict) -> dict:
        out: dict = {}
        for (p, l), c in vec.items():
            for t in self.odd:
                q = tuple(sorted(p + (t,)))
                for l2, e in self.L.gens[t][l].items():
                    add_into(out, {(q, l2): c * e})
        return out

    def act_even(self, g, vec: dict) -> dict:
        """Action of an even generator E_ab, a derivation over xi's and L."""
        a, b = g
        out: dict = {}
        for (p, l), c in vec.items():
            for l2, e in self.L.gens[g][l].items():
                add_into(out, {(p, l2): c * e})
            for pos, (i, j) in enumerate(p):
                rest = p[:pos] + p[pos + 1 :]
                if i == a:
                    add_into(out, {(tuple(sorted(rest + ((b, j),))), l): c}, -1)
                if j == b:
                    add_into(out, {(tuple(sorted(rest + ((i, a),))), l): c})
        return out

    def cocycles(self, k: int, w) -> list[dict]:
        cols = self.by_weight[k].get(w, [])
        rows: dict = defaultdict(dict)
        for key in cols:
            for k2, c in self.d({key: Fraction(1)}).items():
                rows[k2][key] = c
        return nullspace(list(rows.values()), cols)

    def coboundaries(self, k: int, w) -> Subspace:
        if k == 0:
            return Subspace()
        return Subspace(self.d({key: Fraction(1)}) for key in self.by_weight[k - 1].get(w, []))

    def check_d_squared(self) -> bool:
        for k in range(self.kmax):
            for keys in self.by_weight[k].values():
                for key in keys:
                    if self.d(self.d({key: Fraction(1)})):
                        return False
        return True


@dataclass
class CohomologyResult:
    m: int
    n: int
    lam: Partition
    highest_weight: SuperWeight
    degrees: list[G0Decomposition]
    character_degrees: list[G0Decomposition]
    d_squared_zero: bool
    cochain_dims: list[int]
    cohomology_dims: list[int]

    @property
    def consistent(self) -> bool:
        return self.degrees == self.character_degrees


def tensor_module(m: int, n: int, lam) -> ModuleRealization:
    """L(lam natural) as the irreducible quotient of its Kac module."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    nu = natural(split_hook(lam, m)).with_n(n)
    return irreducible_quotient(build_kac(m, n, nu)).quotient


def cohomology(m: int, n: int, lam, kmax: int) -> CohomologyResult:
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if not in_hook(lam, m, n):
        raise ValueError(f"{lam.parts} is not an ({m}|{n})-hook partition")
    L = tensor_module(m, n, lam)
    for k in range(kmax + 2):
        size = math.comb(m * n + k - 1, k) * L.dim
        if size > MAX_COCHAINS:
            raise ResourceGuardError("cochain-dimension", f"C^{k} has dimension {size} > {MAX_COCHAINS}")
    C = CochainComplex(L, kmax)
    ok = C.check_d_squared()
    if not ok:
        raise ArithmeticError("d o d != 0")
    raising = sa.even_simple_raising(m, n)
    degrees, char_degrees, hdims = [], [], []
    for k in range(kmax + 1):
        entries: dict = {}
        char: dict = {}
        total = 0
        for w in sorted(C.by_weight[k]):
            Z = C.cocycles(k, w)
            B = C.coboundaries(k, w)
            h = len(Z) - len(B)
            if not h:
                continue
            char[w] = h
            total += h
            # cocycles whose raising images are coboundaries
            rows: dict = defaultdict(dict)
            for g in raising:
                target = tuple(a + b for a, b in zip(w, sa.weight_shift(g, m, n)))
                Bt = C.coboundaries(k, target)
                for t, z in enumerate(Z):
                    for key, c in Bt.reduce(C.act_even(g, z)).items():
                        rows[(g, key)][t] = c
            top = len(nullspace(list(rows.values()), range(len(Z)))) - len(B)
            if top:
                entries[SuperWeight(w[:m], w[m:], n)] = top
        degrees.append(G0Decomposition(entries))
        char_degrees.append(decompose_g0(SparseLaurent(m, n, char), m, n))
        hdims.append(total)
    return CohomologyResult(
        m, n, lam, SuperWeight(L.highest_weight[:m], L.highest_weight[m:], n),
        degrees, char_degrees, ok, [C.dim(k) for k in range(kmax + 1)], hdims,
    )
