"""Coefficient relations equivalent to the 2-cycle, hexagon and pentagon equations.

Each family is produced twice: from the closed splitting formulas
(:func:`c2_coefficient`, :func:`c3_coefficient`, :func:`c5_coefficient`) and by
literally expanding the truncated products (:func:`c3_via_product`,
:func:`c5_via_product`).  The two routes share nothing beyond the word and
coefficient layers, so agreement between them is a real check.

ZS[w] stands for the coefficient Z_w of a general associator.  With
``signed=True`` a Phi slot contributes ``(-1)^depth(w) ZS[w]`` instead, which is
the Drinfel'd associator convention; :func:`to_mzv_form` converts the unsigned
form to values of the shuffle-regularized zeta function.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterator, List, Optional, Tuple

from .braid import b4_key, enumerate_b4, expand_x51, transpose_l
from .coeff import MU, MU_SYM, ONE, PI, ZERO, CoeffExpr, Symbol, is_zs, zs_word
from .series import NCSeries, linear, nc_exp, nc_mul, substitute_letters
from .words import (AB, AB51, AX, X0, X1, X12, X23, X24, X34, X45, X51, Word, check_word, depth,
                    splittings, theta, word_key, words_of_length, words_up_to)

TWO_CYCLE, HEXAGON, PENTAGON = "two-cycle", "hexagon", "pentagon"
FAMILIES = (TWO_CYCLE, HEXAGON, PENTAGON)
SYMBOLIC, MZV = "symbolic", "mzv"


def _z(w: Word, signed: bool = False) -> CoeffExpr:
    z = CoeffExpr.zs(w)
    if signed and depth(w) % 2:
        return -z
    return z


# 2-cycle

def c2_coefficient(w: Word, signed: bool = False) -> CoeffExpr:
    """Coefficient of ``w`` in Phi(X0,X1) Phi(X1,X0)."""
    w = check_word(w, AX)
    if not w:
        raise ValueError("the 2-cycle coefficient is only a relation for nonempty words")
    total = ZERO
    for i in range(len(w) + 1):
        total = total + _z(w[:i], signed) * _z(theta(w[i:]), signed)
    return total


# hexagon

def decx(w: Word, letter: str) -> List[Tuple[Tuple[Word, int], ...]]:
    """All tuples ((V1,k1),...,(Vp,kp)) with w = V1 x^k1 ... Vp x^kp.

    V2..Vp are nonempty, k1..k(p-1) > 0 and kp >= 0, where x is ``letter``.
    """
    w = check_word(w, AX)

    def gen(rest: Word, first: bool) -> Iterator[Tuple[Tuple[Word, int], ...]]:
        for j in range(0 if first else 1, len(rest) + 1):
            v = rest[:j]
            run = 0
            while j + run < len(rest) and rest[j + run] == letter:
                run += 1
            for k in range(run + 1):
                if j + k == len(rest):
                    yield ((v, k),)
                elif k > 0:
                    for tail in gen(rest[j + k:], False):
                        yield ((v, k),) + tail

    return list(gen(w, True))


def _exp_coeff(n: int) -> CoeffExpr:
    # coefficient mu^n / (2^n n!)
    return (MU ** n).scale(Fraction(1, 2 ** n * factorial(n)))


def _phi_inf_coeff(w: Word, letter: str, signed: bool) -> CoeffExpr:
    # coefficient of w in Phi(Xinf, X0) (letter X0) or Phi(X1, Xinf) (letter X1)
    other = X1 if letter == X0 else X0
    total = ZERO
    for dec in decx(w, letter):
        target: Tuple[str, ...] = ()
        size = 0
        for v, k in dec:
            target += (letter,) * len(v) + (other,) * k
            size += len(v)
        z = _z(target, signed)
        total = total + (-z if size % 2 else z)
    return total


@lru_cache(maxsize=None)
def _c3_direct(w: Word, signed: bool) -> CoeffExpr:
    total = ZERO
    for w1, w2, w3, w4, w5, w6 in splittings(w, 6):
        if any(a != X0 for a in w1) or any(a != X1 for a in w5):
            continue
        head = _exp_coeff(len(w1)) * _exp_coeff(len(w5))
        if len(w3) % 2:
            head = -head
        head = head * _exp_coeff(len(w3))
        if not head:
            continue
        a = _phi_inf_coeff(w2, X0, signed)
        if not a:
            continue
        b = _phi_inf_coeff(w4, X1, signed)
        if not b:
            continue
        total = total + head * a * b * _z(w6, signed)
    return total


def c3_coefficient(w: Word, signed: bool = False) -> CoeffExpr:
    """Coefficient of ``w`` in the hexagon product, from the six-fold splitting formula."""
    w = check_word(w, AX)
    if not w:
        raise ValueError("the hexagon coefficient is only a relation for nonempty words")
    return _c3_direct(w, signed)


def generic_associator(x: NCSeries, y: NCSeries, max_weight: int, signed: bool = False) -> NCSeries:
    """Phi(x, y) truncated at ``max_weight`` for linear series x, y, with formal coefficients."""
    phi = NCSeries(AX, max_weight, {w: _z(w, signed) for w in words_up_to(AX, max_weight)})
    return substitute_letters(phi, {X0: x, X1: y}, x.alphabet)


def c3_via_product(max_weight: int, signed: bool = False) -> Dict[Word, CoeffExpr]:
    """Expand e^{mu/2 X0} Phi(Xinf,X0) e^{mu/2 Xinf} Phi(X1,Xinf) e^{mu/2 X1} Phi(X0,X1)."""
    n = max_weight
    one = ONE
    x0 = linear({X0: one}, AX, n)
    x1 = linear({X1: one}, AX, n)
    xinf = linear({X0: -one, X1: -one}, AX, n)
    half_mu = MU.scale(Fraction(1, 2))
    factors = [
        nc_exp(linear({X0: half_mu}, AX, n), unit=one),
        generic_associator(xinf, x0, n, signed),
        nc_exp(xinf.scale(half_mu), unit=one),
        generic_associator(x1, xinf, n, signed),
        nc_exp(linear({X1: half_mu}, AX, n), unit=one),
        generic_associator(x0, x1, n, signed),
    ]
    prod = factors[0]
    for f in factors[1:]:
        prod = nc_mul(prod, f)
    return {w: prod[w] or ZERO for w in words_up_to(AX, n)}


# pentagon

# letter -> image under rho_1..rho_5 (None is the zero map)
RHO_TABLE: Dict[str, Tuple[Optional[str], ...]] = {
    X12: (X0, None, X1, None, None),
    X23: (X1, None, X0, X0, X1),
    X34: (None, X0, X0, X1, X1),
    X45: (None, X1, None, None, X0),
    X24: (None, None, X0, None, X1),
}


def rho(i: int, w: Word) -> Optional[Word]:
    """Image of ``w`` under rho_i, or None when some letter is sent to zero."""
    if i not in range(1, 6):
        raise ValueError("rho index must be in 1..5")
    w = check_word(w, AB)
    out = []
    for a in w:
        img = RHO_TABLE[a][i - 1]
        if img is None:
            return None
        out.append(img)
    return tuple(out)


@lru_cache(maxsize=None)
def _c5_direct(w: Word, signed: bool) -> CoeffExpr:
    total = ZERO
    count = 0
    for parts in splittings(w, 5):
        count += 1
        term = ONE
        for i, u in enumerate(parts, start=1):
            img = rho(i, u)
            if img is None:
                term = ZERO
                break
            term = term * _z(img, signed)
        total = total + term
    assert count == comb(len(w) + 4, 4)
    return total


def c5_coefficient(w: Word, signed: bool = False) -> CoeffExpr:
    """Coefficient of ``w`` in the pentagon product with X51 expanded."""
    return _c5_direct(check_word(w, AB), signed)


def c5_via_product(max_weight: int, signed: bool = False) -> Dict[Word, CoeffExpr]:
    """Expand the five-factor pentagon product over the letters X12..X51, then drop X51."""
    n = max_weight
    letter = {a: linear({a: ONE}, AB51, n) for a in AB51}
    pairs = [(X12, X23), (X34, X45), (X51, X12), (X23, X34), (X45, X51)]
    prod = None
    for a, b in pairs:
        f = generic_associator(letter[a], letter[b], n, signed)
        prod = f if prod is None else nc_mul(prod, f)
    expanded = expand_x51(prod)
    return {w: expanded[w] or ZERO for w in words_up_to(AB, n)}


# relations

@dataclass(frozen=True)
class Relation:
    """The identity ``lhs = 0`` for one key of one family."""

    family: str
    key: Word
    lhs: CoeffExpr
    form: str = SYMBOLIC

    @property
    def weight(self) -> int:
        return len(self.key)

    def is_trivial(self) -> bool:
        return self.lhs.is_zero()


def two_cycle_relations(max_weight: int) -> List[Relation]:
    return [Relation(TWO_CYCLE, w, c2_coefficient(w))
            for n in range(1, max_weight + 1) for w in words_of_length(AX, n)]


def hexagon_relations(max_weight: int) -> List[Relation]:
    return [Relation(HEXAGON, w, c3_coefficient(w))
            for n in range(1, max_weight + 1) for w in words_of_length(AX, n)]


def pentagon_lhs(b: Word, signed: bool = False) -> CoeffExpr:
    """Sum over AB-words W of l_{b,W} C_{5,W}."""
    total = ZERO
    for w, l in transpose_l(len(b))[tuple(b)].items():
        total = total + c5_coefficient(w, signed).scale(l)
    return total


def pentagon_relations(max_weight: int, degrees=None) -> List[Relation]:
    degrees = range(1, max_weight + 1) if degrees is None else degrees
    return [Relation(PENTAGON, b, pentagon_lhs(b)) for d in degrees for b in enumerate_b4(d)]


def relations(family: str, max_weight: int) -> List[Relation]:
    if family == TWO_CYCLE:
        return two_cycle_relations(max_weight)
    if family == HEXAGON:
        return hexagon_relations(max_weight)
    if family == PENTAGON:
        return pentagon_relations(max_weight)
    raise ValueError(f"unknown family {family!r}")


def sort_key(r: Relation):
    if r.family == PENTAGON:
        return (len(r.key), b4_key(r.key))
    return word_key(r.key, AX)


def is_pure_power(w: Word) -> bool:
    return len(w) > 0 and len(set(w)) == 1


def mzv_symbol_map(simplify: bool = False):
    """Symbol map Z_w -> (-1)^depth(w) zeta(w), MU -> 2 PI."""

    def fn(sym: Symbol) -> CoeffExpr:
        if sym == MU_SYM:
            return PI.scale(2)
        if is_zs(sym):
            w = zs_word(sym)
            if simplify and is_pure_power(w):
                return ZERO
            return _z(w, signed=True)
        return CoeffExpr.symbol(sym)

    return fn


def simplify_powers(expr: CoeffExpr) -> CoeffExpr:
    """Apply zeta(X0^k) = zeta(X1^k) = 0 for k >= 1."""
    return expr.substitute(
        lambda s: ZERO if is_zs(s) and is_pure_power(zs_word(s)) else CoeffExpr.symbol(s))


def to_mzv_form(r: Relation, simplify: bool = False) -> Relation:
    if r.form == MZV:
        return replace(r, lhs=simplify_powers(r.lhs)) if simplify else r
    return replace(r, lhs=r.lhs.substitute(mzv_symbol_map(simplify)), form=MZV)


__all__ = [
    "TWO_CYCLE", "HEXAGON", "PENTAGON", "FAMILIES", "SYMBOLIC", "MZV",
    "c2_coefficient", "decx", "c3_coefficient", "c3_via_product", "generic_associator",
    "RHO_TABLE", "rho", "c5_coefficient", "c5_via_product", "Relation",
    "two_cycle_relations", "hexagon_relations", "pentagon_relations", "pentagon_lhs", "relations",
    "sort_key", "to_mzv_form", "simplify_powers", "mzv_symbol_map", "is_pure_power",
]
