"""Integer partitions, the (m|n)-hook condition and two combinatorial identities.

Half-integers are carried as doubled integers throughout (``3`` stands for
3/2); squared half-integers as quadrupled integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

INF = math.inf


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers (no trailing zeros)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))

    def part(self, i: int) -> int:
        """1-based part, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        return conjugate(self)


def _as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(tuple(p))


def conjugate(p) -> Partition:
    p = _as_partition(p)
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for x in p.parts if x >= j) for j in range(1, p.parts[0] + 1)))


def in_hook(p, m: int, n) -> bool:
    """True iff the (m+1)-th part of ``p`` is at most ``n``."""
    p = _as_partition(p)
    return p.part(m + 1) <= n


def aux111_sets(p, N: int) -> tuple[frozenset[int], frozenset[int]]:
    """The two sets of positive half-integers attached to ``p`` and a bound ``N``.

    Returns ``(A, B)`` as doubled integers, where
    ``A = {p'_i - i + 1/2 > 0}`` and ``B = {-p_i + i - 1/2 : p_i - i + 1/2 < 0}``
    for ``1 <= i <= N``.  Together they partition ``{1/2, 3/2, ..., N - 1/2}``.
    """
    p = _as_partition(p)
    if p.length > N:
        raise ValueError(f"length of {p.parts} exceeds N={N}")
    q = conjugate(p)
    a = frozenset(2 * q.part(i) - 2 * i + 1 for i in range(1, N + 1) if 2 * q.part(i) - 2 * i + 1 > 0)
    b = frozenset(-2 * p.part(i) + 2 * i - 1 for i in range(1, N + 1) if 2 * p.part(i) - 2 * i + 1 < 0)
    return a, b


def comb_identity_sides(p, N: int) -> tuple[int, int]:
    """Both sides of the quadratic partition identity, multiplied by 4."""
    p = _as_partition(p)
    q = conjugate(p)
    if N < max(p.length, q.length):
        raise ValueError(f"N={N} below max(length, conjugate length) of {p.parts}")
    lhs = sum((2 * p.part(j) - 2 * j + 1) ** 2 + (2 * q.part(j) - 2 * j + 1) ** 2 for j in range(1, N + 1))
    rhs = 2 * sum((2 * j - 1) ** 2 for j in range(1, N + 1))
    return lhs, rhs


def comb_identity_check(p, N: int) -> bool:
    lhs, rhs = comb_identity_sides(p, N)
    return lhs == rhs


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def partitions_up_to(size: int) -> Iterator[Partition]:
    for n in range(size + 1):
        yield from partitions_of(n)


def hook_partitions(size: int, m: int, n) -> Iterator[Partition]:
    """Partitions of exactly ``size`` satisfying the (m|n)-hook condition."""
    return (p for p in partitions_of(size) if in_hook(p, m, n))


def count_standard_tableaux(p) -> int:
    """Number of standard Young tableaux of shape ``p`` (hook length formula)."""
    p = _as_partition(p)
    q = conjugate(p)
    hooks = 1
    for i, row in enumerate(p.parts, start=1):
        for j in range(1, row + 1):
            hooks *= row - j + q.part(j) - i + 1
    return math.factorial(p.size) // hooks


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc
    if any(x <= 0 for x in parts):
        raise ValueError(f"malformed partition {text!r}: parts must be positive")
    return Partition(parts)


def format_partition(p) -> str:
    return str(_as_partition(p))
