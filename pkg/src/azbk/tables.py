"""Low-degree pentagon relations arranged as (monomial, dual element, relation) rows.

The row keys are the reference choice of multiplicative generators: every
degree-1 monomial, four in degree 2 and ten in degree 3.  Degree-3 relations
are shown after applying zeta_sh(X0^k) = zeta_sh(X1^k) = 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .bar import BarTensor, dual_basis_element
from .relations import Relation, pentagon_lhs, PENTAGON, to_mzv_form
from .words import X12, X23, X24, X34, X45, Word

DEGREE1_ROWS: List[Word] = [(X12,), (X23,), (X24,), (X34,), (X45,)]

DEGREE2_ROWS: List[Word] = [
    (X24, X45),
    (X24, X34),
    (X34, X45),
    (X12, X23),
]

DEGREE3_ROWS: List[Word] = [
    (X34, X24, X24),
    (X12, X23, X23),
    (X34, X45, X45),
    (X45, X24, X24),
    (X12, X12, X23),
    (X34, X34, X45),
    (X24, X45, X45),
    (X24, X34, X34),
    (X24, X45, X34),
    (X24, X34, X45),
]

ROWS = {1: DEGREE1_ROWS, 2: DEGREE2_ROWS, 3: DEGREE3_ROWS}


@dataclass(frozen=True)
class TableRow:
    key: Word
    dual: BarTensor
    relation: Relation


def table(degree: int) -> List[TableRow]:
    if degree not in ROWS:
        raise ValueError("tables exist for degrees 1, 2 and 3 only")
    simplify = degree == 3
    out = []
    for key in ROWS[degree]:
        rel = to_mzv_form(Relation(PENTAGON, key, pentagon_lhs(key)), simplify=simplify)
        out.append(TableRow(key, dual_basis_element(key), rel))
    return out
