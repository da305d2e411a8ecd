"""Irreducible gl(r)-modules inside tensor products of exterior powers."""

from __future__ import annotations

from fractions import Fraction

from ..partitions import Partition, conjugate
from ..weights import dim_gl
from .linalg import Subspace, add_into
from .modules import ModuleRealization, ResourceGuardError

MAX_IRREP_DIM = 5000


def _wedge_act(a: int, b: int, wedge: tuple[int, ...]):
    """E_ab on e_{w1} ^ ... ^ e_{wk}: returns (sign, new wedge) or None."""
    if b not in wedge:
        return None
    if a == b:
        return 1, wedge
    if a in wedge:
        return None
    lo, hi = min(a, b), max(a, b)
    between = sum(1 for x in wedge if lo < x < hi)
    new = tuple(sorted(a if x == b else x for x in wedge))
    return (-1) ** between, new


def _ambient_act(a: int, b: int, vec: dict) -> dict:
    out: dict = {}
    for key, c in vec.items():
        for f, wedge in enumerate(key):
            hit = _wedge_act(a, b, wedge)
            if hit is None:
                continue
            sign, new = hit
            nk = key[:f] + (new,) + key[f + 1 :]
            s = out.get(nk, 0) + sign * c
            if s:
                out[nk] = s
            else:
                out.pop(nk, None)
    return out


def build_gl_irrep(r: int, sig, side: str = "neg") -> ModuleRealization:
    """The gl(r)-irreducible of highest weight ``sig`` with exact action matrices.

    ``side="neg"`` realizes it on indices -r..-1 (a gl(r|0)-module),
    ``side="pos"`` on 1..r (a gl(0|r)-module).  The highest weight vector
    e_1^...^e_{c1} (x) e_1^...^e_{c2} (x) ... generates the module inside the
    tensor product of exterior powers given by the columns.
    """
    sig = tuple(int(s) for s in sig)
    if len(sig) > r:
        raise ValueError(f"signature {sig} longer than rank {r}")
    if side not in ("neg", "pos"):
        raise ValueError("side must be 'neg' or 'pos'")
    sig = sig + (0,) * (r - len(sig))
    if any(sig[i] < sig[i + 1] for i in range(r - 1)):
        raise ValueError(f"signature {sig} not weakly decreasing")
    dim = dim_gl(sig, r)
    if dim > MAX_IRREP_DIM:
        raise ResourceGuardError("irrep-dimension", f"dim {dim} exceeds {MAX_IRREP_DIM}")
    shift = -min(sig + (0,))
    lam = Partition(tuple(s + shift for s in sig))
    cols = conjugate(lam).parts
    hw = tuple(tuple(range(1, h + 1)) for h in cols)

    def weight_of_key(key):
        w = [0] * r
        for wedge in key:
            for x in wedge:
                w[x - 1] += 1
        return tuple(w)

    spaces: dict = {weight_of_key(hw): Subspace([{hw: Fraction(1)}])}
    order = [weight_of_key(hw)]
    frontier = list(order)
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, r):
                target = tuple(x - (t == i - 1) + (t == i) for t, x in enumerate(w))
                for v in spaces[w].basis():
                    u = _ambient_act(i + 1, i, v)
                    if not u:
                        continue
                    if target not in spaces:
                        spaces[target] = Subspace()
                        order.append(target)
                        nxt.append(target)
                    spaces[target].add(u)
        frontier = nxt

    basis, weights, index = [], [], {}
    for w in order:
        for p in spaces[w].pivots:
            index[(w, p)] = len(basis)
            basis.append(spaces[w].rows[p])
            weights.append(w)
    if len(basis) != dim:
        raise AssertionError(f"built dimension {len(basis)} != Weyl dimension {dim}")

    gens = {}
    for a in range(1, r + 1):
        for b in range(1, r + 1):
            cols_ab = []
            for j, v in enumerate(basis):
                if a == b:
                    cols_ab.append({j: Fraction(weights[j][a - 1] - shift)} if weights[j][a - 1] != shift else {})
                    continue
                u = _ambient_act(a, b, v)
                col: dict = {}
                if u:
                    w = tuple(x + (t == a - 1) - (t == b - 1) for t, x in enumerate(weights[j]))
                    coords = spaces[w].coordinates(u)
                    for p, c in coords.items():
                        add_into(col, {index[(w, p)]: c})
                cols_ab.append(col)
            gens[(a, b)] = cols_ab

    untwisted = [tuple(x - shift for x in w) for w in weights]
    if side == "neg":
        relabel = {a: a - r - 1 for a in range(1, r + 1)}
        m, n = r, 0
    else:
        relabel = {a: a for a in range(1, r + 1)}
        m, n = 0, r
    gens = {(relabel[a], relabel[b]): cols_ab for (a, b), cols_ab in gens.items()}
    labels = [f"u{t}" for t in range(len(basis))]
    return ModuleRealization(m, n, labels, untwisted, [0] * len(basis), gens, tuple(s for s in sig))
