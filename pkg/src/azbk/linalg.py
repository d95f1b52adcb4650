"""Exact incremental Gaussian elimination over Q on sparse vectors.

Vectors are dicts ``coordinate -> Fraction``.  Coordinates must be mutually
comparable; pivots are chosen as the smallest coordinate of each residual.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, List, Tuple

Vector = Dict[Hashable, Fraction]


def _axpy(y: Vector, a: Fraction, x: Vector) -> None:
    # y += a * x in place, dropping zeros
    for k, v in x.items():
        t = y.get(k, 0) + a * v
        if t:
            y[k] = t
        else:
            y.pop(k, None)


class Echelon:
    """Row echelon form that remembers how each row was built from the inputs."""

    def __init__(self):
        self.rows: List[Tuple[Hashable, Vector, Vector]] = []  # (pivot, row, combination of labels)
        self._by_pivot: Dict[Hashable, int] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vector) -> Tuple[Vector, Vector]:
        """Return (residual, combination) with vec = sum combination[label] * input[label] + residual."""
        res = {k: Fraction(v) for k, v in vec.items() if v}
        combo: Vector = {}
        changed = True
        while changed and res:
            changed = False
            for k in sorted(res):
                idx = self._by_pivot.get(k)
                if idx is None:
                    continue
                pivot, row, rc = self.rows[idx]
                a = res[k] / row[pivot]
                _axpy(res, -a, row)
                _axpy(combo, a, rc)
                changed = True
                break
        return res, combo

    def add(self, vec: Vector, label: Hashable) -> bool:
        """Insert ``vec`` under ``label``; False (and no change) if it is already in the span."""
        res, combo = self.reduce(vec)
        if not res:
            return False
        pivot = min(res)
        rc = {label: Fraction(1)}
        _axpy(rc, Fraction(-1), combo)
        self._by_pivot[pivot] = len(self.rows)
        self.rows.append((pivot, res, rc))
        return True

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)[0]

    def solve(self, vec: Vector) -> Vector:
        """Coefficients on the input labels reproducing ``vec``; ValueError if out of span."""
        res, combo = self.reduce(vec)
        if res:
            raise ValueError("vector is not in the span")
        return combo


def rank(vectors) -> int:
    e = Echelon()
    for i, v in enumerate(vectors):
        e.add(v, i)
    return e.rank
