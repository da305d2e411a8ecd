"""The gl(1|2) Verma module of highest weight (1|0,0), truncated by root height.

PBW words are nondecreasing tuples over the lowering generators
E(1,-1) < E(2,-1) < E(2,1); the odd ones appear at most once.  A word
E(1,-1)^a E(2,-1)^b E(2,1)^c has height a + 2b + c, and the window keeps
heights up to ``depth``.  Raising and Cartan generators never leave the
window, so weight spaces, singular vectors and the submodule generated by a
vector are all exact inside it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import superalgebra as sa
from .kac import build_kac
from .linalg import add_into
from .modules import (
    ModuleRealization,
    ResourceGuardError,
    SingularLine,
    irreducible_quotient,
    isomorphic,
    quotient,
    singular_vectors,
    submodule_generated,
)
from ..weights import SuperWeight

MAX_DEPTH = 8
M_, N_ = 1, 2
HIGHEST = (1, 0, 0)
LOWERING = ((1, -1), (2, -1), (2, 1))
HEIGHT = {(1, -1): 1, (2, -1): 2, (2, 1): 1}


def _is_lowering(g) -> bool:
    return g in HEIGHT


def _height(word) -> int:
    return sum(HEIGHT[g] for g in word)


@lru_cache(maxsize=None)
def _lmul(z, word) -> dict:
    """z * word rewritten in PBW order."""
    if not word or z <= word[0]:
        if word and z == word[0] and sa.parity(z):
            return {}
        return {(z,) + word: Fraction(1)}
    y, rest = word[0], word[1:]
    out: dict = {}
    sign = -1 if sa.parity(z) * sa.parity(y) else 1
    for w, c in _lmul(z, rest).items():
        add_into(out, _lmul(y, w), sign * c)
    for h, c in sa.bracket(z, y).items():
        for w, d in _lmul(h, rest).items():
            add_into(out, {w: d}, c)
    return out


@lru_cache(maxsize=None)
def _act(x, word) -> dict:
    if not word:
        if _is_lowering(x):
            return {(x,): Fraction(1)}
        if x[0] == x[1]:
            c = HIGHEST[sa.indices(M_, N_).index(x[0])]
            return {(): Fraction(c)} if c else {}
        return {}
    z, rest = word[0], word[1:]
    out: dict = {}
    for h, c in sa.bracket(x, z).items():
        add_into(out, _act(h, rest), c)
    sign = -1 if sa.parity(x) * sa.parity(z) else 1
    for w, c in _act(x, rest).items():
        add_into(out, _lmul(z, w), sign * c)
    return out


def _words(depth: int) -> list[tuple]:
    out = []
    for a in (0, 1):
        for b in (0, 1):
            for c in range(depth + 1):
                w = ((1, -1),) * a + ((2, -1),) * b + ((2, 1),) * c
                if _height(w) <= depth:
                    out.append(w)
    out.sort(key=lambda w: (_height(w), w))
    return out


def _label(word) -> str:
    parts, i = [], 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = sa.generator_name(word[i])
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "".join(parts) + "v"


def build_verma_gl12(depth: int) -> ModuleRealization:
    if depth < 0 or depth > MAX_DEPTH:
        raise ResourceGuardError("verma-depth", f"depth {depth} outside 0..{MAX_DEPTH}")
    words = _words(depth)
    index = {w: t for t, w in enumerate(words)}
    gens = {}
    for x in sa.all_generators(M_, N_):
        cols = []
        for w in words:
            cols.append({index[u]: c for u, c in _act(x, w).items() if u in index})
        gens[x] = cols
    weights = []
    for w in words:
        wt = list(HIGHEST)
        for g in w:
            wt = [a + b for a, b in zip(wt, sa.weight_shift(g, M_, N_))]
        weights.append(tuple(wt))
    parities = [sum(sa.parity(g) for g in w) % 2 for w in words]
    return ModuleRealization(M_, N_, [_label(w) for w in words], weights, parities, gens, HIGHEST)


@dataclass
class VermaReport:
    depth: int
    window_dim: int
    proper_singular_lines: list[SingularLine]
    quotient_dim: int
    irreducible_dim: int
    weights_match_kac: bool
    isomorphic_to_kac: bool

    @property
    def expressions(self) -> list[str]:
        return [ln.expression for ln in self.proper_singular_lines]


def verma_gl12_report(depth: int) -> VermaReport:
    """Singular vectors of M(1|0,0), the quotient by the submodule of E(2,1)v, and its comparison with the Kac module.

    The quotient is supported in heights 0..3, so the comparison needs
    ``depth >= 3``; below that the Kac checks report False.
    """
    M = build_verma_gl12(depth)
    proper = singular_vectors(M).proper
    seed = {t for t, lab in enumerate(M.labels) if lab == "E(2,1)v"}
    gen_vec = [{t: Fraction(1)} for t in seed]
    M1 = submodule_generated(M, gen_vec)
    Q = quotient(M, M1)
    L = irreducible_quotient(Q).quotient
    K = build_kac(M_, N_, SuperWeight(HIGHEST[:M_], HIGHEST[M_:]))
    full = depth >= 3
    weights_match = full and sorted(Q.weights) == sorted(K.weights)
    iso = weights_match and isomorphic(Q, K)
    return VermaReport(depth, M.dim, proper, Q.dim, L.dim, weights_match, iso)
