"""Sparse exact linear algebra over the rationals.

Vectors are dicts ``{key: Fraction}`` with orderable keys; absent keys are
zero.  Everything is exact: ranks and kernel dimensions are results here,
not approximations.
"""

from __future__ import annotations

from fractions import Fraction

Vec = dict


def clean(v: Vec) -> Vec:
    return {k: c for k, c in v.items() if c}


def axpy(a, x: Vec, y: Vec) -> Vec:
    """Return ``a*x + y`` (new dict)."""
    out = dict(y)
    for k, c in x.items():
        s = out.get(k, 0) + a * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def scale(a, x: Vec) -> Vec:
    return {k: a * c for k, c in x.items()} if a else {}


def add_into(acc: Vec, x: Vec, a=1):
    for k, c in x.items():
        s = acc.get(k, 0) + a * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


class Subspace:
    """Reduced row echelon basis of a subspace, grown one vector at a time.

    Each stored row has coefficient 1 at its pivot and 0 at every other
    pivot, so coordinates of a member vector are its entries at the pivots.
    """

    def __init__(self, vectors=()):
        self.rows: dict = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Vec) -> Vec:
        r = clean(v)
        for p in [k for k in r if k in self.rows]:
            c = r.get(p, 0)
            if c:
                r = axpy(-c, self.rows[p], r)
        return r

    def add(self, v: Vec) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        r = scale(Fraction(1) / r[p], r)
        for q, row in self.rows.items():
            c = row.get(p, 0)
            if c:
                self.rows[q] = axpy(-c, r, row)
        self.rows[p] = r
        return True

    def __contains__(self, v: Vec) -> bool:
        return not self.reduce(v)

    @property
    def pivots(self) -> list:
        return sorted(self.rows)

    def basis(self) -> list[Vec]:
        return [self.rows[p] for p in self.pivots]

    def coordinates(self, v: Vec) -> dict:
        """``{pivot: coefficient}`` of a member vector; raises if not a member."""
        if self.reduce(v):
            raise ValueError("vector is not in the subspace")
        return {p: v[p] for p in self.rows if v.get(p, 0)}


def nullspace(rows, columns) -> list[Vec]:
    """Basis of ``{x : row . x = 0 for every row}`` with x supported on ``columns``."""
    sub = Subspace(rows)
    free = [c for c in columns if c not in sub.rows]
    out = []
    for f in free:
        x = {f: Fraction(1)}
        for p, row in sub.rows.items():
            c = row.get(f, 0)
            if c:
                x[p] = -c
        out.append(x)
    return out


def rank(vectors) -> int:
    return len(Subspace(vectors))
