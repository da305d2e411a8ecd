"""Integral weights of gl(m+n) and gl(m|n) in coordinates.

A weight is stored as its ``neg`` block (coordinates at the indices
-m, ..., -1) and a finitely supported ``pos`` block (indices 1, 2, ...).
The same container serves both algebras; which bilinear form applies is a
matter of which function is called.

The Weyl vectors are evaluation rules rather than stored vectors, since
for n = INF they have infinite support:

    rho_c(j) = -j       (j < 0),     rho_c(j) = 1 - j   (j > 0)
    rho_s(j) = -j       (all j)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import INF, Partition, conjugate, in_hook

__all__ = [
    "INF", "SuperWeight", "natural", "bilinear_c", "bilinear_s", "casimir_c",
    "casimir_s", "z_degree", "z_degree_doubled", "split_hook", "parse_weight",
    "format_weight", "rho_c", "rho_s", "is_atypical", "index_set",
]


def _is_weakly_decreasing(seq) -> bool:
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


@dataclass(frozen=True)
class SuperWeight:
    neg: tuple[int, ...]
    pos: tuple[int, ...] = ()
    # rank of the positive block; context only, not part of equality
    n: float = field(default=INF, compare=False)

    def __post_init__(self):
        neg = tuple(int(x) for x in self.neg)
        pos = tuple(int(x) for x in self.pos)
        while pos and pos[-1] == 0:
            pos = pos[:-1]
        if not neg:
            raise ValueError("a weight needs m >= 1 negative-block coordinates")
        if self.n != INF and len(pos) > self.n:
            raise ValueError(f"positive block {pos} does not fit n={self.n}")
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "pos", pos)

    @property
    def m(self) -> int:
        return len(self.neg)

    def __str__(self):
        return format_weight(self)

    def __repr__(self):
        return f"SuperWeight({format_weight(self)!r})"

    def sort_key(self):
        return self.neg + self.pos

    def pos_part(self, j: int) -> int:
        """Coordinate at positive index ``j`` (1-based)."""
        return self.pos[j - 1] if j <= len(self.pos) else 0

    def first_pos(self) -> int:
        return self.pos[0] if self.pos else 0

    def coords(self, length: int) -> tuple[int, ...]:
        """Merged coordinate sequence over ``length`` linear positions."""
        if length < self.m + len(self.pos):
            raise ValueError("length too short for the support")
        return self.neg + self.pos + (0,) * (length - self.m - len(self.pos))

    def shifted(self, length: int) -> tuple[int, ...]:
        """``self + rho_c`` over the first ``length`` linear positions."""
        m = self.m
        return tuple(c + m + 1 - p for p, c in enumerate(self.coords(length), start=1))

    def in_X(self) -> bool:
        return _is_weakly_decreasing(self.neg) and _is_weakly_decreasing(self.pos) and all(x >= 0 for x in self.pos)

    def in_Xtilde(self) -> bool:
        if not _is_weakly_decreasing(self.neg):
            return False
        if self.n == INF:
            return _is_weakly_decreasing(self.pos) and all(x >= 0 for x in self.pos)
        padded = self.pos + (0,) * (int(self.n) - len(self.pos))
        return _is_weakly_decreasing(padded)

    def is_partition(self) -> bool:
        """Whether the full merged sequence is a partition."""
        full = self.neg + self.pos
        return _is_weakly_decreasing(full) and all(x >= 0 for x in full)

    def with_n(self, n) -> "SuperWeight":
        return SuperWeight(self.neg, self.pos, n)


def index_set(m: int, n: int) -> list[int]:
    """Indices -m, ..., -1, 1, ..., n in linear order."""
    return list(range(-m, 0)) + list(range(1, n + 1))


def rho_c(j: int) -> int:
    return -j if j < 0 else 1 - j


def rho_s(j: int) -> int:
    return -j


def _indexed(u: SuperWeight):
    m = u.m
    for t, c in enumerate(u.neg):
        yield t - m, c
    for t, c in enumerate(u.pos, start=1):
        yield t, c


def _check_same_shape(u: SuperWeight, v: SuperWeight):
    if u.m != v.m or u.n != v.n:
        raise ValueError(f"weights of different shapes: {u!r} (n={u.n}) vs {v!r} (n={v.n})")


def natural(w: SuperWeight) -> SuperWeight:
    """Conjugate the positive block, leaving the negative block fixed."""
    if not (_is_weakly_decreasing(w.pos) and all(x >= 0 for x in w.pos)):
        raise ValueError(f"positive block of {w!r} is not a partition")
    conj = conjugate(Partition(w.pos)).parts
    if w.n != INF and len(conj) > w.n:
        raise ValueError(f"natural image of {w!r} does not fit n={w.n}")
    return SuperWeight(w.neg, conj, w.n)


def bilinear_c(u: SuperWeight, v: SuperWeight) -> int:
    _check_same_shape(u, v)
    return sum(a * b for a, b in zip(u.neg, v.neg)) + sum(a * b for a, b in zip(u.pos, v.pos))


def bilinear_s(u: SuperWeight, v: SuperWeight) -> int:
    _check_same_shape(u, v)
    return sum(a * b for a, b in zip(u.neg, v.neg)) - sum(a * b for a, b in zip(u.pos, v.pos))


def casimir_c(u: SuperWeight) -> int:
    """``(u + 2 rho_c | u)_c``."""
    return sum(c * c + 2 * rho_c(j) * c for j, c in _indexed(u))


def casimir_s(u: SuperWeight) -> int:
    """``(u + 2 rho_s | u)_s``."""
    return sum((c * c + 2 * rho_s(j) * c) * (1 if j < 0 else -1) for j, c in _indexed(u))


def z_degree_doubled(u: SuperWeight) -> int:
    return sum(u.neg) - sum(u.pos)


def z_degree(u: SuperWeight) -> Fraction:
    """Eigenvalue of ``(sum_{i<0} E_ii - sum_{j>0} E_jj) / 2``."""
    return Fraction(z_degree_doubled(u), 2)


def split_hook(p, m: int, n=INF) -> SuperWeight:
    """Cut a hook partition after its m-th part."""
    p = p if isinstance(p, Partition) else Partition(tuple(p))
    if not in_hook(p, m, n):
        raise ValueError(f"{p.parts} is not an ({m}|{n})-hook partition")
    neg = tuple(p.part(i) for i in range(1, m + 1))
    return SuperWeight(neg, p.parts[m:], INF)


def is_atypical(mu: SuperWeight, n: int) -> bool:
    """True iff ``mu + rho_s`` is (.|.)_s-orthogonal to an odd root delta_i - delta_j."""
    m = mu.m
    for i in range(-m, 0):
        for j in range(1, n + 1):
            if mu.neg[i + m] + rho_s(i) + mu.pos_part(j) + rho_s(j) == 0:
                return True
    return False


def parse_weight(text: str, n=INF) -> SuperWeight:
    """Parse ``"a,b,...|c,d,..."``; an empty positive block is the zero tail."""
    if text.count("|") != 1:
        raise ValueError(f"malformed weight {text!r}: expected exactly one '|'")
    left, right = text.split("|")
    try:
        neg = tuple(int(t) for t in left.split(",")) if left.strip() else ()
        pos = tuple(int(t) for t in right.split(",")) if right.strip() else ()
    except ValueError as exc:
        raise ValueError(f"malformed weight {text!r}") from exc
    if not neg:
        raise ValueError(f"malformed weight {text!r}: empty negative block")
    return SuperWeight(neg, pos, n)


def format_weight(w: SuperWeight) -> str:
    return ",".join(map(str, w.neg)) + "|" + ",".join(map(str, w.pos))


def dim_gl(sig, r: int | None = None) -> int:
    """Weyl dimension of the gl(r)-irreducible with highest weight ``sig``."""
    sig = tuple(sig)
    if r is None:
        r = len(sig)
    if len(sig) > r:
        raise ValueError("signature longer than rank")
    sig = sig + (0,) * (r - len(sig))
    num = den = 1
    for i in range(r):
        for j in range(i + 1, r):
            num *= sig[i] - sig[j] + j - i
            den *= j - i
    return num // den


def dim_l0(mu: SuperWeight, tvars: int | None = None) -> int:
    """Dimension of the gl(m)+gl(n)-irreducible L0(mu).

    The positive block is taken over ``n`` variables when ``mu.n`` is finite,
    else over ``tvars``; with neither, only a zero positive block has finite
    dimension.
    """
    if not mu.in_Xtilde():
        raise ValueError(f"{mu!r} is not dominant for gl(m)+gl(n)")
    r = int(mu.n) if mu.n != INF else tvars
    if r is None:
        if mu.pos:
            raise ValueError(f"L0({mu}) is infinite-dimensional for n = INF")
        r = 0
    return dim_gl(mu.neg) * dim_gl(mu.pos, r)
