"""Bar construction on the moduli space M_{0,5} in the cubical coordinates (x, y).

A bar tensor ``[w_a|w_b|...]`` is stored as the AB-word ``(Xa, Xb, ...)`` read
in the same order, so the dual basis element b* = sum l_{b,W} w_W is simply the
column of the braid structure coefficients.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

import sympy

from .braid import enumerate_b4, transpose_l
from .coeff import ONE, ZERO, CoeffExpr
from .linalg import Echelon
from .series import _shuffle_cached
from .words import AB, X0, X1, X12, X23, X24, X34, X45, Word, check_word, depth, splittings, word_key

x, y = sympy.symbols("x y")


@dataclass(frozen=True)
class Form1:
    """f_x dx + f_y dy with rational function coefficients."""

    fx: sympy.Expr
    fy: sympy.Expr

    def __post_init__(self):
        object.__setattr__(self, "fx", sympy.cancel(self.fx))
        object.__setattr__(self, "fy", sympy.cancel(self.fy))


FORMS: Dict[str, Form1] = {
    X12: Form1(1 / x, sympy.Integer(0)),
    X23: Form1(1 / (x - 1), sympy.Integer(0)),
    X34: Form1(sympy.Integer(0), 1 / (y - 1)),
    X45: Form1(sympy.Integer(0), 1 / y),
    X24: Form1(y / (x * y - 1), x / (x * y - 1)),
}

# ordered basis of H^1(M_{0,5})
H1_BASIS = (X34, X45, X24, X12, X23)


def form_of(letter: str) -> Form1:
    try:
        return FORMS[letter]
    except KeyError:
        raise ValueError(f"no 1-form attached to {letter!r}") from None


def wedge(a: Form1, b: Form1) -> sympy.Expr:
    """Coefficient of dx^dy in a ^ b."""
    return sympy.cancel(a.fx * b.fy - a.fy * b.fx)


@lru_cache(maxsize=None)
def _wedge_letters(a: str, b: str) -> sympy.Expr:
    return wedge(form_of(a), form_of(b))


def is_zero_rational(expr) -> bool:
    """Exact test: numerator of the reduced fraction is the zero polynomial."""
    num, _ = sympy.fraction(sympy.cancel(sympy.together(expr)))
    return sympy.Poly(num, x, y).is_zero


# bar tensors

_NAME = {X12: "w12", X23: "w23", X34: "w34", X45: "w45", X24: "w24"}
_LETTER = {v: k for k, v in _NAME.items()}


class BarTensor:
    """Finite rational combination of tensor words over the five forms."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Fraction] = None):
        self.terms: Dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            w = check_word(w, AB)
            c = Fraction(c)
            if c:
                self.terms[w] = self.terms.get(w, 0) + c
                if not self.terms[w]:
                    del self.terms[w]

    @classmethod
    def symbol(cls, *letters: str) -> "BarTensor":
        return cls({tuple(letters): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, BarTensor) and self.terms == other.terms

    def __add__(self, other: "BarTensor") -> "BarTensor":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return BarTensor(out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "BarTensor":
        c = Fraction(c)
        return BarTensor({w: v * c for w, v in self.terms.items()})

    def degrees(self):
        return {len(w) for w in self.terms}

    def degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("bar tensor is not homogeneous")
        return ds.pop()

    def items(self):
        for w in sorted(self.terms, key=lambda w: word_key(w, H1_ORDER)):
            yield w, self.terms[w]

    def shuffle(self, other: "BarTensor") -> "BarTensor":
        out: Dict[Word, Fraction] = {}
        for v, cv in self.terms.items():
            for w, cw in other.terms.items():
                for u, m in _shuffle_cached(v, w).items():
                    out[u] = out.get(u, 0) + cv * cw * m
        return BarTensor(out)

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign}{abs(c)} [" + "|".join(_NAME[a] for a in w) + "]")
        return " ".join(parts)

    def latex(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for w, c in self.items():
            body = "[" + "|".join(r"\omega_{" + a[1:] + "}" for a in w) + "]"
            mag = abs(c)
            coef = "" if mag == 1 else str(mag)
            sign = "-" if c < 0 else ("+" if out else "")
            out += (" " if out else "") + f"{sign}{coef}{body}"
        return out

    __str__ = format

    def __repr__(self):
        return f"BarTensor({self.format()!r})"


# letters sorted as in the published tables: w12 < w23 < w24 < w34 < w45
H1_ORDER = (X12, X23, X24, X34, X45)

_TERM_RE = re.compile(r"([+-])\s*(\d+(?:/\d+)?)?\s*\[([^\]]*)\]")


def parse_bar(text: str) -> BarTensor:
    """Inverse of :meth:`BarTensor.format`."""
    text = text.strip()
    if text == "0":
        return BarTensor()
    if text and text[0] not in "+-":
        text = "+" + text
    terms: Dict[Word, Fraction] = {}
    pos = 0
    for m in _TERM_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"cannot parse bar tensor near {text[pos:m.start()]!r}")
        pos = m.end()
        c = Fraction(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        names = [p.strip() for p in m.group(3).split("|")]
        try:
            w = tuple(_LETTER[n] for n in names)
        except KeyError as e:
            raise ValueError(f"unknown form {e.args[0]!r}") from None
        terms[w] = terms.get(w, 0) + c
    if text[pos:].strip():
        raise ValueError(f"cannot parse bar tensor near {text[pos:]!r}")
    return BarTensor(terms)


@dataclass
class IntegrabilityReport:
    passed: bool
    position: Optional[int] = None  # 1-based index of the first failing adjacent pair
    witness: Optional[Word] = None  # untouched slots of the failing component

    def __bool__(self):
        return self.passed


def integrability_check(t: BarTensor) -> IntegrabilityReport:
    """Every adjacent wedge contraction of ``t`` vanishes identically."""
    if not t:
        return IntegrabilityReport(True)
    m = t.degree()
    for j in range(m - 1):
        groups: Dict[Word, sympy.Expr] = {}
        for w, c in t.terms.items():
            rest = w[:j] + w[j + 2:]
            term = sympy.Rational(c.numerator, c.denominator) * _wedge_letters(w[j], w[j + 1])
            groups[rest] = groups.get(rest, 0) + term
        for rest in sorted(groups, key=lambda w: word_key(w, AB)):
            if not is_zero_rational(groups[rest]):
                return IntegrabilityReport(False, j + 1, rest)
    return IntegrabilityReport(True)


def dual_basis_element(b4: Word) -> BarTensor:
    """b* = sum over AB-words W of l_{b,W} [w_W]."""
    b4 = check_word(b4, AB)
    if not b4:
        raise ValueError("the empty monomial has no dual element here")
    column = transpose_l(len(b4)).get(b4)
    if column is None:
        raise ValueError("not a B4 monomial")
    return BarTensor(column)


# restriction along the pentagon path

class GammaEdge(enum.Enum):
    """Edges of the pentagon path, valued by their slot index in the 5-fold splitting."""

    P35 = 1
    P52 = 2
    P24 = 3
    P41 = 4
    P13 = 5

    @property
    def index(self) -> int:
        return self.value


# traversal order of the path; slot i of the splitting lives on GAMMA[i-1]
GAMMA = (GammaEdge.P35, GammaEdge.P52, GammaEdge.P24, GammaEdge.P41, GammaEdge.P13)

# restriction to D35: w12 -> dt/t, w23 -> dt/(t-1), the rest vanish
_REG_P35 = {X12: X0, X23: X1}


def reg_restrict(letter: str, edge: GammaEdge) -> Optional[str]:
    """X0 for dt/t, X1 for dt/(t-1), None for zero."""
    from .relations import RHO_TABLE

    check_word((letter,), AB)
    if edge is GammaEdge.P35:
        return _REG_P35.get(letter)
    return RHO_TABLE[letter][edge.index - 1]


def _edge_integral(u: Word, edge: GammaEdge) -> CoeffExpr:
    img = []
    for a in u:
        r = reg_restrict(a, edge)
        if r is None:
            return ZERO
        img.append(r)
    img = tuple(img)
    z = CoeffExpr.zs(img)
    return -z if depth(img) % 2 else z


@lru_cache(maxsize=None)
def _word_integral(w: Word) -> CoeffExpr:
    total = ZERO
    for parts in splittings(w, 5):
        term = ONE
        for u, edge in zip(parts, GAMMA):
            term = term * _edge_integral(u, edge)
            if not term:
                break
        total = total + term
    return total


def iterated_integral_gamma(t: BarTensor) -> CoeffExpr:
    """Integral of Reg(t) along the pentagon path, in zeta_sh symbols."""
    total = ZERO
    for w, c in t.terms.items():
        total = total + _word_integral(w).scale(c)
    return total


def gamma_value(t: BarTensor, tol: float = 1e-12):
    from .mzv import evaluate_expr

    return evaluate_expr(iterated_integral_gamma(t), tol)


# multiplicative generators

def _vec(t: BarTensor):
    return {word_key(w, AB): c for w, c in t.terms.items()}


@lru_cache(maxsize=None)
def _generators(degree: int) -> Tuple[Word, ...]:
    if degree < 1:
        raise ValueError("degree must be >= 1")
    ech = Echelon()
    for d1 in range(1, degree // 2 + 1):
        lo = [dual_basis_element(b) for b in enumerate_b4(d1)]
        hi = lo if d1 == degree - d1 else [dual_basis_element(b) for b in enumerate_b4(degree - d1)]
        for i, a in enumerate(lo):
            for j, b in enumerate(hi):
                if d1 == degree - d1 and j < i:
                    continue
                ech.add(_vec(a.shuffle(b)), (d1, i, j))
    chosen = []
    for b in enumerate_b4(degree):
        if ech.add(_vec(dual_basis_element(b)), b):
            chosen.append(b)
    return tuple(chosen)


def multiplicative_generators(degree: int) -> List[Word]:
    """Greedy choice, in canonical B4 order, of monomials whose duals are not shuffle-decomposable."""
    for d in range(1, degree):
        _generators(d)
    return list(_generators(degree))


def _monomials(gens_by_degree: Dict[int, List[Word]], degree: int):
    # multisets of generators with total degree ``degree``
    flat = [(d, g) for d in sorted(gens_by_degree) for g in gens_by_degree[d]]
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(flat)):
            d, g = flat[i]
            if d <= remaining:
                rec(i, remaining - d, acc + [g])

    rec(0, degree, [])
    return out


@lru_cache(maxsize=None)
def shuffle_monomial(gens: Tuple[Word, ...]) -> BarTensor:
    """Shuffle product of the dual elements of ``gens``."""
    out = BarTensor({(): 1})
    for g in gens:
        out = out.shuffle(dual_basis_element(g))
    return out


def expand_shuffle_polynomial(poly: Mapping[Tuple[Word, ...], Fraction]) -> BarTensor:
    total = BarTensor()
    for gens, c in poly.items():
        total = total + shuffle_monomial(tuple(gens)).scale(c)
    return total


@lru_cache(maxsize=None)
def _monomial_echelon(degree: int) -> Echelon:
    gens = {d: multiplicative_generators(d) for d in range(1, degree + 1)}
    ech = Echelon()
    for mono in _monomials(gens, degree):
        ech.add(_vec(shuffle_monomial(mono)), mono)
    return ech


def express_in_generators(t: BarTensor) -> Dict[Tuple[Word, ...], Fraction]:
    """Write an integrable homogeneous tensor as a shuffle polynomial in generator duals."""
    if not t:
        return {}
    report = integrability_check(t)
    if not report:
        raise ValueError(f"tensor is not integrable (fails at position {report.position})")
    combo = _monomial_echelon(t.degree()).solve(_vec(t))
    return {m: c for m, c in combo.items() if c}


def generator_combinations(degree: int) -> int:
    gens = {d: multiplicative_generators(d) for d in range(1, degree + 1)}
    return len(_monomials(gens, degree))


__all__ = [
    "Form1", "FORMS", "H1_BASIS", "form_of", "wedge", "is_zero_rational", "BarTensor", "parse_bar",
    "IntegrabilityReport", "integrability_check", "dual_basis_element", "GammaEdge", "GAMMA",
    "reg_restrict", "iterated_integral_gamma", "gamma_value", "multiplicative_generators",
    "shuffle_monomial", "expand_shuffle_polynomial", "express_in_generators",
    "generator_combinations",
]

