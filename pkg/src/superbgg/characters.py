"""Exact character ring and the character-level form of the resolution.

Characters live in ``SparseLaurent``: integer Laurent polynomials in the
negative-block variables ``x_{-m}, ..., x_{-1}`` followed by positive-block
variables ``y_1, ..., y_t``.  A monomial is its exponent vector in that
order, so the monomial of a weight is the weight's coordinate vector.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import INF, Partition, in_hook
from .weights import SuperWeight, natural, split_hook, z_degree_doubled
from .weyl_cosets import enumerate_w0k, truncate_terms

__all__ = [
    "SparseLaurent", "G0Decomposition", "EulerReport", "schur_laurent",
    "l0_character", "kac_character", "hook_schur", "graded_piece_gminus1",
    "decompose_g0", "euler_verify", "power_sum_character", "weight_character",
]


class SparseLaurent:
    """Immutable integer Laurent polynomial in ``mvars + tvars`` variables."""

    __slots__ = ("mvars", "tvars", "terms")

    def __init__(self, mvars: int, tvars: int, terms=None):
        self.mvars = mvars
        self.tvars = tvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != mvars + tvars:
                raise ValueError(f"exponent {exp} has wrong length")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, mvars, tvars):
        return cls(mvars, tvars)

    @classmethod
    def one(cls, mvars, tvars):
        return cls(mvars, tvars, {(0,) * (mvars + tvars): 1})

    @classmethod
    def monomial(cls, mvars, tvars, exp, coeff=1):
        return cls(mvars, tvars, {tuple(exp): coeff})

    def _check(self, other):
        if (self.mvars, self.tvars) != (other.mvars, other.tvars):
            raise ValueError("characters over different variable sets")

    def __add__(self, other):
        if isinstance(other, int):
            other = other * SparseLaurent.one(self.mvars, self.tvars)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparseLaurent(self.mvars, self.tvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparseLaurent(self.mvars, self.tvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparseLaurent(self.mvars, self.tvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparseLaurent(self.mvars, self.tvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = SparseLaurent.one(self.mvars, self.tvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SparseLaurent):
            return NotImplemented
        return (self.mvars, self.tvars) == (other.mvars, other.tvars) and self.terms == other.terms

    def __hash__(self):
        return hash((self.mvars, self.tvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{e}" for e, c in sorted(self.terms.items(), reverse=True))

    def coefficient(self, exp) -> int:
        return self.terms.get(tuple(exp), 0)

    def at_one(self) -> int:
        """Specialize every variable to 1 (the dimension of a character)."""
        return sum(self.terms.values())

    def mask(self, keep) -> "SparseLaurent":
        return SparseLaurent(self.mvars, self.tvars, {e: c for e, c in self.terms.items() if keep(e)})

    def y_to_zero(self) -> "SparseLaurent":
        """Set every y-variable to 0; the result lives over the x-variables only."""
        m = self.mvars
        return SparseLaurent(m, 0, {e[:m]: c for e, c in self.terms.items() if not any(e[m:])})

    def regroup(self, mvars: int) -> "SparseLaurent":
        """Reassign the block boundary without touching exponent vectors."""
        total = self.mvars + self.tvars
        return SparseLaurent(mvars, total - mvars, self.terms)

    def to_records(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": str(c)} for e, c in sorted(self.terms.items())]

    @classmethod
    def from_records(cls, mvars, tvars, records):
        return cls(mvars, tvars, {tuple(r["exponents"]): int(r["coeff"]) for r in records})


def _x_then_y(xpart: SparseLaurent, ypart: SparseLaurent) -> SparseLaurent:
    """Concatenate an x-only and a y-only polynomial into one ring."""
    m, t = xpart.mvars + xpart.tvars, ypart.mvars + ypart.tvars
    out: dict = {}
    for e1, c1 in xpart.terms.items():
        for e2, c2 in ypart.terms.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return SparseLaurent(m, t, out)


def _horizontal_strips(lam: tuple[int, ...]):
    """Partitions mu with lam/mu a horizontal strip."""
    ranges = [range(lam[i + 1] if i + 1 < len(lam) else 0, lam[i] + 1) for i in range(len(lam))]
    for mu in itertools.product(*ranges):
        yield Partition(mu).parts


def _vertical_strips(lam: tuple[int, ...]):
    """Partitions mu with lam/mu a vertical strip."""
    ranges = [range(max(x - 1, 0), x + 1) for x in lam]
    for mu in itertools.product(*ranges):
        if all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)):
            yield Partition(mu).parts


@lru_cache(maxsize=None)
def _schur_terms(lam: tuple[int, ...], r: int) -> tuple:
    """Semistandard tableaux of shape lam in letters 1..r, grouped by content."""
    if len(lam) > r:
        return ()
    if r == 0:
        return (((), 1),)
    out: dict = {}
    size = sum(lam)
    for mu in _horizontal_strips(lam):
        if len(mu) > r - 1:
            continue
        for exp, c in _schur_terms(mu, r - 1):
            key = exp + (size - sum(mu),)
            out[key] = out.get(key, 0) + c
    return tuple(sorted(out.items()))


def schur_laurent(sig, vars: int) -> SparseLaurent:
    """Character of the gl(vars)-irreducible with highest weight ``sig``.

    Returned over ``vars`` x-variables.  Negative entries are handled by
    twisting with a power of the determinant.
    """
    sig = tuple(int(s) for s in sig)
    if len(sig) > vars:
        raise ValueError(f"signature {sig} longer than {vars} variables")
    if any(sig[i] < sig[i + 1] for i in range(len(sig) - 1)):
        raise ValueError(f"signature {sig} not weakly decreasing")
    sig = sig + (0,) * (vars - len(sig))
    shift = -min(sig + (0,))
    lam = Partition(tuple(s + shift for s in sig)).parts
    terms = {tuple(x - shift for x in exp): c for exp, c in _schur_terms(lam, vars)}
    return SparseLaurent(vars, 0, terms)


def _y_only(p: SparseLaurent) -> SparseLaurent:
    return SparseLaurent(0, p.mvars + p.tvars, p.terms)


@lru_cache(maxsize=4096)
def _l0_cached(neg, pos, tvars):
    return _x_then_y(schur_laurent(neg, len(neg)), _y_only(schur_laurent(pos, tvars)))


def l0_character(mu: SuperWeight, tvars: int) -> SparseLaurent:
    """Character of L0(mu) over m x-variables and ``tvars`` y-variables."""
    if len(mu.pos) > tvars:
        raise ValueError(f"positive block of {mu!r} needs more than {tvars} variables")
    padded = mu.pos + (0,) * (tvars - len(mu.pos))
    if any(mu.neg[i] < mu.neg[i + 1] for i in range(mu.m - 1)) or any(
        padded[j] < padded[j + 1] for j in range(tvars - 1)
    ):
        raise ValueError(f"{mu!r} is not gl(m)+gl(n)-dominant")
    return _l0_cached(mu.neg, mu.pos, tvars)


def _odd_lowering_factor(m: int, tvars: int) -> SparseLaurent:
    """prod_{i<0<j} (1 + x_i^{-1} y_j)."""
    out = SparseLaurent.one(m, tvars)
    for i in range(m):
        for j in range(tvars):
            e = [0] * (m + tvars)
            e[i] = -1
            e[m + j] = 1
            out = out * (SparseLaurent.one(m, tvars) + SparseLaurent.monomial(m, tvars, e))
    return out


def kac_character(nu_natural: SuperWeight, tvars: int) -> SparseLaurent:
    """Character of the Kac module V(nu): free over the odd lowering part."""
    return _odd_lowering_factor(nu_natural.m, tvars) * l0_character(nu_natural, tvars)


def hook_schur(lam, m: int, tvars: int) -> SparseLaurent:
    """Hook Schur function: the character of the tensor module L(lam^natural).

    Sum over super-semistandard tableaux in x_{-m} < ... < x_{-1} < y_1 < ... < y_t
    where x-letters fill horizontal strips and y-letters vertical strips.
    """
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if not in_hook(lam, m, tvars):
        raise ValueError(f"{lam.parts} is not an ({m}|{tvars})-hook partition")

    @lru_cache(maxsize=None)
    def hs(shape: tuple[int, ...], t: int) -> SparseLaurent:
        if t == 0:
            if len(shape) > m:
                return SparseLaurent.zero(m, tvars)
            xs = schur_laurent(shape, m)
            return SparseLaurent(m, tvars, {e + (0,) * tvars: c for e, c in xs.terms.items()})
        total = SparseLaurent.zero(m, tvars)
        size = sum(shape)
        for mu in _vertical_strips(shape):
            sub = hs(mu, t - 1)
            if not sub:
                continue
            e = [0] * (m + tvars)
            e[m + t - 1] = size - sum(mu)
            total = total + sub * SparseLaurent.monomial(m, tvars, e)
        return total

    return hs(lam.parts, tvars)


def graded_piece_gminus1(k: int, m: int, tvars: int, super: bool) -> SparseLaurent:
    """Degree-k exterior (ordinary) or symmetric (super) power of g_{-1}.

    Elementary (``super=False``) or complete homogeneous (``super=True``)
    symmetric polynomial of degree k in the ``m * tvars`` monomials x_i^{-1} y_j.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    gens = []
    for i in range(m):
        for j in range(tvars):
            e = [0] * (m + tvars)
            e[i] = -1
            e[m + j] = 1
            gens.append(tuple(e))
    choose = itertools.combinations_with_replacement if super else itertools.combinations
    out: dict = {}
    for combo in choose(gens, k):
        e = tuple(map(sum, zip(*combo))) if combo else (0,) * (m + tvars)
        out[e] = out.get(e, 0) + 1
    return SparseLaurent(m, tvars, out)


def weight_character(weights, m: int, tvars: int) -> SparseLaurent:
    """Formal character of a list of weights (each a coordinate tuple or SuperWeight)."""
    out: dict = {}
    for w in weights:
        if isinstance(w, SuperWeight):
            if len(w.pos) > tvars:
                raise ValueError(f"{w!r} needs more than {tvars} y-variables")
            w = w.neg + w.pos + (0,) * (tvars - len(w.pos))
        w = tuple(w)
        out[w] = out.get(w, 0) + 1
    return SparseLaurent(m, tvars, out)


def power_sum_character(d: int, m: int, tvars: int) -> SparseLaurent:
    """``(sum x + sum y)^d``: the character of the d-th tensor power of C^{m|n}."""
    p1 = SparseLaurent.zero(m, tvars)
    for i in range(m + tvars):
        e = [0] * (m + tvars)
        e[i] = 1
        p1 = p1 + SparseLaurent.monomial(m, tvars, e)
    return p1 ** d


@dataclass
class G0Decomposition:
    """Multiplicities of g0-irreducibles L0(mu) in a g0-character."""

    entries: dict[SuperWeight, int] = field(default_factory=dict)

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: kv[0].sort_key(), reverse=True)

    def weights(self) -> list[SuperWeight]:
        return [w for w, _ in self.items()]

    def __getitem__(self, w):
        return self.entries.get(w, 0)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, G0Decomposition):
            return NotImplemented
        return self.entries == other.entries

    def character(self, tvars: int) -> SparseLaurent:
        m = next(iter(self.entries)).m if self.entries else 0
        out = SparseLaurent.zero(m, tvars)
        for w, c in self.entries.items():
            out = out + c * l0_character(w, tvars)
        return out

    def to_records(self) -> list[dict]:
        from .weights import format_weight

        return [{"weight": format_weight(w), "multiplicity": c} for w, c in self.items()]


def decompose_g0(ch: SparseLaurent, m: int, tvars: int, allow_virtual: bool = False) -> G0Decomposition:
    """Peel irreducible g0-characters off ``ch`` by extreme weights.

    The lexicographically largest monomial is always the highest weight of
    a constituent; its coefficient is that constituent's multiplicity.
    Non-characters are rejected: a non-dominant extreme monomial, or (unless
    ``allow_virtual``) a negative multiplicity.
    """
    if (ch.mvars, ch.tvars) != (m, tvars):
        raise ValueError("character lives over a different variable set")
    rest = dict(ch.terms)
    out: dict[SuperWeight, int] = {}
    while rest:
        top = max(rest)
        c = rest[top]
        neg, pos = top[:m], top[m:]
        dominant = all(neg[i] >= neg[i + 1] for i in range(m - 1)) and all(
            pos[j] >= pos[j + 1] for j in range(tvars - 1)
        )
        if not dominant or (pos and pos[-1] < 0):
            raise ValueError(f"extreme monomial {top} is not a dominant g0-weight; not a character")
        if c < 0 and not allow_virtual:
            raise ValueError(f"negative multiplicity {c} at {top}; not a genuine character")
        if any(x < 0 for x in pos):
            raise ValueError(f"positive block {pos} is not a partition")
        w = SuperWeight(neg, pos)
        out[w] = c
        for e, d in l0_character(w, tvars).terms.items():
            v = rest.get(e, 0) - c * d
            if v:
                rest[e] = v
            else:
                rest.pop(e, None)
    return G0Decomposition(out)


@dataclass
class EulerReport:
    passed: bool
    residual: SparseLaurent
    tvars: int
    window: int  # doubled z-degree threshold
    layers: dict[int, list[SuperWeight]]


def euler_verify(lam, m: int, n, depth: int) -> EulerReport:
    """Check the alternating sum of Kac characters against the hook Schur function.

    Both sides are masked to monomials of z-degree >= z(lam^natural) - depth;
    layers beyond ``depth`` cannot reach that window.
    """
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if not in_hook(lam, m, n):
        raise ValueError(f"{lam.parts} is not an ({m}|{n})-hook partition")
    tvars = int(n) if n != INF else m + lam.size + depth
    base = split_hook(lam, m, INF)
    threshold = z_degree_doubled(natural(base)) - 2 * depth

    def in_window(e):
        return sum(e[:m]) - sum(e[m:]) >= threshold

    layers = enumerate_w0k(base, depth)
    total = SparseLaurent.zero(m, tvars)
    kept: dict[int, list[SuperWeight]] = {}
    for k in range(depth + 1):
        terms = truncate_terms(layers[k], tvars)
        kept[k] = terms
        for nu in terms:
            total = total + (-1) ** k * kac_character(natural(nu), tvars).mask(in_window)
    residual = total - hook_schur(lam, m, tvars).mask(in_window)
    return EulerReport(not residual, residual, tvars, threshold, kept)
