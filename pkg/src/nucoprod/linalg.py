"""Sparse exact linear algebra over dict vectors.

Vectors are plain dicts ``{key: scalar}`` without zeros.  ``Echelon`` keeps an
incrementally built row-echelon basis and, optionally, how each row was
combined from the vectors that were fed in, which gives span membership with
explicit coefficients, kernel relations and inconsistency certificates.
"""
from __future__ import annotations

from typing import Hashable, Iterable

from .element import add_into
from .scalar import div

RHS = ("__rhs__",)


class Echelon:
    def __init__(self, track: bool = True):
        self.track = track
        self.rows = {}      # pivot key -> (row dict with row[pivot] == 1, combination dict)
        self.order = {}     # pivot key -> insertion rank
        self.pivots = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict, combo: dict | None = None):
        """Return (residual, combination) with residual = vec - sum combination * inputs."""
        v = dict(vec)
        c = dict(combo) if combo else {}
        rows, order = self.rows, self.order
        while True:
            best = None
            for k in v:
                r = order.get(k)
                if r is not None and (best is None or r < best[0]):
                    best = (r, k)
            if best is None:
                return v, c
            key = best[1]
            factor = v[key]
            row, rcombo = rows[key]
            add_into(v, row, -factor)
            if self.track:
                add_into(c, rcombo, -factor)

    def add(self, vec: dict, label: Hashable = None):
        """Insert a vector.  Returns None if it was independent, else the kernel relation.

        The relation is a dict over labels whose combination of inputs vanishes.
        """
        residual, combo = self.reduce(vec, {label: 1} if self.track else None)
        if not residual:
            return combo if self.track else {}
        pivot = next(k for k in residual if k != RHS) if any(k != RHS for k in residual) else RHS
        inv = div(1, residual[pivot])
        row = {k: v * inv for k, v in residual.items()}
        combo = {k: v * inv for k, v in combo.items()} if self.track else None
        self.rows[pivot] = (row, combo)
        self.order[pivot] = len(self.pivots)
        self.pivots.append(pivot)
        return None

    def contains(self, vec: dict) -> bool:
        residual, _ = self.reduce(vec)
        return not residual

    def express(self, vec: dict):
        """Coefficients over input labels reproducing ``vec``, or None if outside the span."""
        if not self.track:
            raise ValueError("express needs combination tracking")
        residual, combo = self.reduce(vec)
        if residual:
            return None
        return {k: -v for k, v in combo.items() if v}


def rank(vectors: Iterable[dict]) -> int:
    ech = Echelon(track=False)
    for v in vectors:
        ech.add(v)
    return ech.rank


def kernel(vectors: list) -> list:
    """Basis of {x : sum x_k vectors[k] = 0} as dicts over positions."""
    ech = Echelon(track=True)
    relations = []
    for k, v in enumerate(vectors):
        rel = ech.add(v, k)
        if rel is not None:
            relations.append({i: c for i, c in rel.items() if c})
    return relations


def solve(equations: list):
    """Solve linear equations given as dicts over unknowns plus an optional RHS entry.

    Each equation means ``sum coef * unknown = eq.get(RHS, 0)``.  Returns
    ``(solution, free_unknowns, None)`` with free unknowns set to 0, or
    ``(None, None, certificate)`` where the certificate is a dict of equation
    positions whose combination reads 0 = nonzero.
    """
    ech = Echelon(track=True)
    unknowns = {}
    for pos, eq in enumerate(equations):
        for k in eq:
            if k != RHS:
                unknowns.setdefault(k, None)
        row = {k: (-v if k == RHS else v) for k, v in eq.items()}
        ech.add(row, pos)
        if RHS in ech.rows:
            _, combo = ech.rows[RHS]
            return None, None, {k: v for k, v in combo.items() if v}
    solution = {}
    for pivot in reversed(ech.pivots):
        row, _ = ech.rows[pivot]
        value = -row.get(RHS, 0)
        for k, c in row.items():
            if k != pivot and k != RHS:
                value -= c * solution.get(k, 0)
        solution[pivot] = value
    free = [k for k in unknowns if k not in ech.rows]
    for k in free:
        solution[k] = 0
    return {k: solution[k] for k in unknowns}, free, None


def nullspace(equations: list, unknowns: list) -> list:
    """Basis of the solution space of homogeneous equations (dicts over unknowns)."""
    ech = Echelon(track=False)
    for eq in equations:
        ech.add(eq)
    # bring to reduced form so each pivot row involves only free unknowns
    pivots = list(reversed(ech.pivots))
    reduced = {}
    for p in pivots:
        row = dict(ech.rows[p][0])
        for k in list(row):
            if k != p and k in reduced:
                add_into(row, reduced[k], -row[k])
        reduced[p] = row
    free = [u for u in unknowns if u not in reduced]
    basis = []
    for f in free:
        vec = {f: 1}
        for p, row in reduced.items():
            c = row.get(f)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis
