"""Normal forms in the enveloping algebra of the 5-strand sphere braid Lie algebra.

Words over ``X24, X34, X45`` (the kernel of the forgetful projection) and
``X12, X23`` (the quotient) are rewritten until every quotient letter sits to
the right of every kernel letter.  The resulting monomials ``u·v`` form the
basis B4; the coefficients of a word in that basis are the integers l_{b,W}.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Tuple

from .series import NCSeries
from .words import (AB, AB51, AX, X0, X1, X12, X23, X24, X34, X45, X51, Word, check_word,
                    letter_rank, words_of_length)

KERNEL = (X24, X34, X45)
QUOTIENT = (X12, X23)

# X51 = X23 + X24 + X34 in the braid algebra
X51_IMAGE = (X23, X24, X34)

# (left, right) -> list of (coefficient, replacement pair); moves quotient letters rightwards
RELCOM: Dict[Tuple[str, str], List[Tuple[int, Tuple[str, str]]]] = {
    (X12, X34): [(1, (X34, X12))],
    (X12, X45): [(1, (X45, X12))],
    (X23, X45): [(1, (X45, X23))],
    # (X24+X34+X45)X24 - X24(X24+X34+X45) + X24X12, with the X24X24 terms cancelled
    (X12, X24): [(1, (X34, X24)), (1, (X45, X24)), (-1, (X24, X34)), (-1, (X24, X45)), (1, (X24, X12))],
    (X23, X24): [(1, (X24, X34)), (-1, (X34, X24)), (1, (X24, X23))],
    (X23, X34): [(1, (X34, X24)), (-1, (X24, X34)), (1, (X34, X23))],
}


class RewriteBudgetExceeded(RuntimeError):
    pass


def is_b4(w: Word) -> bool:
    """True when no quotient letter precedes a kernel letter."""
    seen_quotient = False
    for a in w:
        if a in QUOTIENT:
            seen_quotient = True
        elif seen_quotient:
            return False
    return True


def split_b4(w: Word) -> Tuple[Word, Word]:
    """Split a B4 monomial into its kernel part u and quotient part v."""
    i = 0
    while i < len(w) and w[i] in KERNEL:
        i += 1
    return w[:i], w[i:]


def inversion_measure(w: Word) -> int:
    """Sum over quotient letters of the number of kernel letters to their right."""
    total, kernel_right = 0, 0
    for a in reversed(w):
        if a in KERNEL:
            kernel_right += 1
        elif a in QUOTIENT:
            total += kernel_right
    return total


def termination_measure(w: Word) -> Tuple[int, int]:
    """(number of quotient letters, inversion measure); decreases lexicographically on every rewrite."""
    return (sum(1 for a in w if a in QUOTIENT), inversion_measure(w))


def _reducible_positions(w: Word):
    return [i for i in range(len(w) - 1) if (w[i], w[i + 1]) in RELCOM]


def relcom_step(w: Word, strategy: str = "left") -> Optional[Dict[Word, int]]:
    """Rewrite one reducible adjacent pair; ``None`` if ``w`` is already in B4."""
    w = check_word(w, AB)
    positions = _reducible_positions(w)
    if not positions:
        return None
    if strategy == "left":
        i = positions[0]
    elif strategy == "right":
        i = positions[-1]
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    out: Dict[Word, int] = {}
    for c, pair in RELCOM[(w[i], w[i + 1])]:
        u = w[:i] + pair + w[i + 2:]
        out[u] = out.get(u, 0) + c
    return {u: c for u, c in out.items() if c}


def expand_x51(a: NCSeries) -> NCSeries:
    """Replace every X51 by X23 + X24 + X34; the result lives over AB."""
    out: Dict[Word, object] = {}
    for w, c in a.terms.items():
        partial = [()]
        for l in w:
            images = X51_IMAGE if l == X51 else (l,)
            partial = [u + (m,) for u in partial for m in images]
        for u in partial:
            out[u] = out[u] + c if u in out else c
    return NCSeries(AB, a.max_weight, out)


def _normalize_word(w: Word, strategy: str, budget: int) -> Dict[Word, int]:
    pending: Dict[Word, int] = {w: 1}
    done: Dict[Word, int] = {}
    steps = 0
    while pending:
        u, c = pending.popitem()
        step = relcom_step(u, strategy)
        if step is None:
            v = done.get(u, 0) + c
            if v:
                done[u] = v
            else:
                done.pop(u, None)
            continue
        steps += 1
        if steps > budget:
            raise RewriteBudgetExceeded(f"more than {budget} rewrites while normalizing {w}")
        for v, cv in step.items():
            t = pending.get(v, 0) + c * cv
            if t:
                pending[v] = t
            else:
                pending.pop(v, None)
    return done


def rewrite_budget(weight: int) -> int:
    return 10 * factorial(weight)


@lru_cache(maxsize=None)
def _l_coefficients(w: Word, strategy: str) -> Tuple[Tuple[Word, int], ...]:
    if X51 in w:
        expanded = expand_x51(NCSeries(AB51, len(w), {w: 1}))
        total: Dict[Word, int] = {}
        for u, c in expanded.terms.items():
            for b, l in _l_coefficients(u, strategy):
                total[b] = total.get(b, 0) + c * l
        return tuple(sorted((b, l) for b, l in total.items() if l))
    nf = _normalize_word(w, strategy, rewrite_budget(len(w)))
    return tuple(sorted(nf.items()))


def l_coefficients(w, strategy: str = "left") -> Dict[Word, int]:
    """Coefficients l_{b,w} of the word ``w`` in the basis B4."""
    w = check_word(w, AB51)
    return dict(_l_coefficients(w, strategy))


def normal_form(a: NCSeries, strategy: str = "left") -> NCSeries:
    """Expand X51 and rewrite every word into the basis B4."""
    out: Dict[Word, object] = {}
    for w, c in a.terms.items():
        for b, l in _l_coefficients(check_word(w, AB51), strategy):
            t = c * l
            out[b] = out[b] + t if b in out else t
    return NCSeries(AB, a.max_weight, out)


def b4_key(b: Word):
    """Canonical order: quotient length, then kernel part, then quotient part."""
    u, v = split_b4(b)
    rank = letter_rank(AB)
    return (len(v), tuple(rank[x] for x in u), tuple(rank[x] for x in v))


def enumerate_b4(degree: int) -> List[Word]:
    if degree < 0:
        raise ValueError("degree must be >= 0")
    out = []
    for k in range(degree + 1):
        for u in words_of_length(KERNEL, degree - k):
            for v in words_of_length(QUOTIENT, k):
                out.append(u + v)
    return sorted(out, key=b4_key)


_F4 = {X12: X0, X23: X1, X24: None, X34: None, X45: None}


def f4_projection(a: NCSeries) -> NCSeries:
    """Algebra morphism to the free algebra on X0, X1 killing X24, X34, X45."""
    a = expand_x51(a) if any(X51 in w for w in a.terms) else a
    out: Dict[Word, object] = {}
    for w, c in a.terms.items():
        img = tuple(_F4[l] for l in w)
        if None in img:
            continue
        out[img] = out[img] + c if img in out else c
    return NCSeries(AX, a.max_weight, out)


@lru_cache(maxsize=None)
def transpose_l(degree: int) -> Dict[Word, Dict[Word, int]]:
    """For every B4 monomial b of the given degree, the map W -> l_{b,W} over AB-words W."""
    table: Dict[Word, Dict[Word, int]] = {b: {} for b in enumerate_b4(degree)}
    for w in words_of_length(AB, degree):
        for b, l in l_coefficients(w).items():
            table[b][w] = l
    return table
