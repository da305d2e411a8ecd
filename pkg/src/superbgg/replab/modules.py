"""Explicit finite-dimensional gl(m|n)-modules over the rationals.

A ``ModuleRealization`` stores, for every generator E_ab it carries, the
images of the basis vectors (column ``j`` is the image of basis vector
``j``).  A gl(r)-module is the special case gl(r|0) or gl(0|r).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from ..characters import SparseLaurent
from ..weights import SuperWeight
from . import superalgebra as sa
from .linalg import Subspace, add_into, clean, nullspace


class ResourceGuardError(RuntimeError):
    """A computation would exceed a configured size guard."""

    def __init__(self, guard: str, message: str):
        super().__init__(f"{guard}: {message}")
        self.guard = guard
        self.detail = message


@dataclass
class ModuleRealization:
    m: int
    n: int
    labels: list
    weights: list[tuple[int, ...]]
    parities: list[int]
    gens: dict = field(default_factory=dict)
    highest_weight: tuple[int, ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.labels)

    def apply(self, g, v: dict) -> dict:
        cols = self.gens[g]
        out: dict = {}
        for j, c in v.items():
            add_into(out, cols[j], c)
        return out

    def weight_of(self, i: int) -> SuperWeight:
        w = self.weights[i]
        return SuperWeight(w[: self.m], w[self.m :], self.n)

    def to_super(self, w: tuple[int, ...]) -> SuperWeight:
        return SuperWeight(w[: self.m], w[self.m :], self.n)

    def weight_spaces(self) -> dict:
        spaces = defaultdict(list)
        for i, w in enumerate(self.weights):
            spaces[w].append(i)
        return dict(spaces)

    def check_weights(self) -> list:
        """Generators whose action does not shift weights by the root; empty if consistent."""
        bad = []
        for g, cols in self.gens.items():
            shift = sa.weight_shift(g, self.m, self.n)
            for j, col in enumerate(cols):
                target = tuple(a + b for a, b in zip(self.weights[j], shift))
                if any(self.weights[i] != target for i in col):
                    bad.append((g, j))
        return bad

    def check_brackets(self) -> list:
        """Pairs (x, y) violating x(yv) - (-1)^{|x||y|} y(xv) = [x,y]v; empty if consistent."""
        bad = []
        gens = sorted(self.gens)
        for x in gens:
            for y in gens:
                sign = -1 if sa.parity(x) * sa.parity(y) else 1
                br = sa.bracket(x, y)
                if any(h not in self.gens for h in br):
                    continue
                for j in range(self.dim):
                    e = {j: Fraction(1)}
                    lhs = self.apply(x, self.apply(y, e))
                    add_into(lhs, self.apply(y, self.apply(x, e)), -sign)
                    for h, c in br.items():
                        add_into(lhs, self.apply(h, e), -c)
                    if lhs:
                        bad.append((x, y))
                        break
        return bad

    def character(self) -> SparseLaurent:
        out: dict = {}
        for w in self.weights:
            out[w] = out.get(w, 0) + 1
        return SparseLaurent(self.m, self.n, out)

    def express(self, v: dict) -> str:
        """Render a vector as a combination of basis labels."""
        parts = []
        for j in sorted(v):
            c = v[j]
            label = str(self.labels[j])
            if c == 1:
                parts.append(label)
            elif c == -1:
                parts.append("-" + label)
            else:
                parts.append(f"{c}*{label}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


@dataclass
class SingularLine:
    weight: tuple[int, ...]
    vector: dict
    expression: str
    proper: bool


@dataclass
class SingularReport:
    lines: list[SingularLine]

    @property
    def proper(self) -> list[SingularLine]:
        return [ln for ln in self.lines if ln.proper]


def singular_vectors(M: ModuleRealization, raising=None) -> SingularReport:
    """Per weight space, the joint kernel of the simple raising generators."""
    if raising is None:
        raising = sa.simple_raising(M.m, M.n)
    missing = [g for g in raising if g not in M.gens]
    if missing:
        raise ValueError(f"module lacks raising generators {missing}")
    lines = []
    spaces = M.weight_spaces()
    for w in sorted(spaces, reverse=True):
        cols = spaces[w]
        rows: dict = defaultdict(dict)
        for g in raising:
            for j in cols:
                for i, c in M.gens[g][j].items():
                    rows[(g, i)][j] = c
        for vec in nullspace(list(rows.values()), cols):
            lines.append(SingularLine(w, vec, M.express(vec), w != M.highest_weight))
    return SingularReport(lines)


def submodule_generated(M: ModuleRealization, vectors, generators=None) -> dict:
    """Span of the closure of ``vectors`` (weight vectors) under the generators.

    Returns ``{weight: Subspace}``.
    """
    if generators is None:
        generators = sorted(M.gens)
    spaces: dict = defaultdict(Subspace)
    todo = []
    for v in vectors:
        v = clean(v)
        if not v:
            continue
        w = M.weights[next(iter(v))]
        if any(M.weights[i] != w for i in v):
            raise ValueError("generating vectors must be weight vectors")
        if spaces[w].add(v):
            todo.append(v)
    while todo:
        v = todo.pop()
        for g in generators:
            u = M.apply(g, v)
            if not u:
                continue
            w = M.weights[next(iter(u))]
            if spaces[w].add(u):
                todo.append(u)
    return {w: s for w, s in spaces.items() if len(s)}


def quotient(M: ModuleRealization, sub: dict) -> ModuleRealization:
    """The quotient ``M / sub`` on the basis vectors that are not pivots of ``sub``."""
    rows = {}
    for s in sub.values():
        rows.update(s.rows)
    keep = [j for j in range(M.dim) if j not in rows]
    new_index = {j: t for t, j in enumerate(keep)}

    def reduce(v):
        for p in [k for k in v if k in rows]:
            c = v.get(p, 0)
            if c:
                add_into(v, rows[p], -c)
        return {new_index[k]: c for k, c in v.items()}

    gens = {g: [reduce(dict(cols[j])) for j in keep] for g, cols in M.gens.items()}
    return ModuleRealization(
        M.m, M.n,
        [M.labels[j] for j in keep],
        [M.weights[j] for j in keep],
        [M.parities[j] for j in keep],
        gens,
        M.highest_weight,
    )


@dataclass
class IrreducibleQuotient:
    quotient: ModuleRealization
    maximal_dim: int
    generated_by_singulars: bool
    singular_submodule_dim: int
    proper_singular_lines: list[SingularLine]
    irreducible: bool


def irreducible_quotient(M: ModuleRealization) -> IrreducibleQuotient:
    """Quotient by the submodule generated by all proper singular vectors.

    If that quotient still has proper singular vectors, their lifts are
    added and the process repeats until the quotient is irreducible; the
    final submodule is then maximal and ``generated_by_singulars`` records
    whether the first step already reached it.
    """
    proper = singular_vectors(M).proper
    sub = submodule_generated(M, [ln.vector for ln in proper])
    first_dim = sum(len(s) for s in sub.values())
    while True:
        Q = quotient(M, sub)
        extra = singular_vectors(Q).proper
        if not extra:
            break
        keep = [j for j in range(M.dim) if all(j not in s.rows for s in sub.values())]
        lifts = [{keep[t]: c for t, c in ln.vector.items()} for ln in extra]
        seeds = [row for s in sub.values() for row in s.basis()] + lifts
        sub = submodule_generated(M, seeds)
    max_dim = sum(len(s) for s in sub.values())
    return IrreducibleQuotient(
        quotient=Q,
        maximal_dim=max_dim,
        generated_by_singulars=(max_dim == first_dim),
        singular_submodule_dim=first_dim,
        proper_singular_lines=proper,
        irreducible=not singular_vectors(Q).proper,
    )


def intertwiners(A: ModuleRealization, B: ModuleRealization, generators=None) -> list[dict]:
    """Basis of weight-preserving linear maps T: A -> B commuting with the generators.

    A map is returned as ``{(i, j): coeff}`` meaning ``T e_j = sum_i coeff e_i``.
    """
    if generators is None:
        generators = sorted(set(A.gens) & set(B.gens))
    unknowns = [(i, j) for j in range(A.dim) for i in range(B.dim) if A.weights[j] == B.weights[i]]
    known = set(unknowns)
    eqs: dict = defaultdict(dict)
    for g in generators:
        # (T X_A - X_B T) e_j = 0, component i
        for j in range(A.dim):
            for k, c in A.gens[g][j].items():
                for i in range(B.dim):
                    if (i, k) in known:
                        eq = eqs[(g, j, i)]
                        eq[(i, k)] = eq.get((i, k), 0) + c
            for i2 in range(B.dim):
                if (i2, j) not in known:
                    continue
                for i, c in B.gens[g][i2].items():
                    eq = eqs[(g, j, i)]
                    eq[(i2, j)] = eq.get((i2, j), 0) - c
    return nullspace([clean(e) for e in eqs.values()], unknowns)


def isomorphic(A: ModuleRealization, B: ModuleRealization) -> bool:
    """Whether some intertwiner ``A -> B`` is invertible (tested on the intertwiner basis)."""
    if A.dim != B.dim or sorted(A.weights) != sorted(B.weights):
        return False
    basis = intertwiners(A, B)
    combo: dict = {}
    for t, T in enumerate(basis, start=1):
        add_into(combo, T, t)
    for T in basis + [combo]:
        cols = defaultdict(dict)
        for (i, j), c in T.items():
            cols[j][i] = c
        if len(Subspace(cols.values())) == A.dim:
            return True
    return False
