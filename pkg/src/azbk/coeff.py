"""Exact commutative polynomials over Q in the symbols PI, MU and ZS[w].

Symbols are tuples whose natural ordering is the canonical one::

    PI    = (0,)
    MU    = (1,)
    ZS[w] = (2, len(w), w)

so ``sorted`` on symbols gives PI < MU < ZS ordered by (weight, letters).
A monomial is a sorted tuple of ``(symbol, exponent)`` pairs; the empty tuple
is the constant monomial.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterator, Tuple

from .words import Word, format_word

Symbol = tuple
Monomial = Tuple[Tuple[Symbol, int], ...]

PI_SYM: Symbol = (0,)
MU_SYM: Symbol = (1,)


def zs_symbol(w: Word) -> Symbol:
    return (2, len(w), tuple(w))


def is_zs(sym: Symbol) -> bool:
    return sym[0] == 2


def zs_word(sym: Symbol) -> Word:
    return sym[2]


def _mul_monomials(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    powers = dict(a)
    for s, e in b:
        powers[s] = powers.get(s, 0) + e
    return tuple(sorted(powers.items()))


class CoeffExpr:
    """Polynomial with Fraction coefficients; treat instances as immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Dict[Monomial, Fraction] = None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c) -> "CoeffExpr":
        return cls({(): Fraction(c)}) if c else cls()

    @classmethod
    def symbol(cls, sym: Symbol, power: int = 1) -> "CoeffExpr":
        if power == 0:
            return cls.const(1)
        return cls({((sym, power),): Fraction(1)})

    @classmethod
    def zs(cls, w: Word) -> "CoeffExpr":
        """ZS[w]; the empty word gives 1."""
        if not w:
            return cls.const(1)
        return cls.symbol(zs_symbol(w))

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    # ring operations
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, CoeffExpr):
            return other
        if isinstance(other, (int, Fraction)):
            return CoeffExpr.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return CoeffExpr._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return CoeffExpr._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "CoeffExpr":
        c = Fraction(c)
        if not c:
            return CoeffExpr()
        return CoeffExpr._raw({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CoeffExpr):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mul_monomials(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return CoeffExpr._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = CoeffExpr.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # inspection
    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in canonical order."""
        for m in sorted(self.terms):
            yield m, self.terms[m]

    def __len__(self):
        return len(self.terms)

    def symbols(self):
        return sorted({s for m in self.terms for s, _ in m})

    def constant(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def weights(self):
        """Set of weights of the terms; ZS[w] has weight |w|, PI and MU weight 1."""
        return {sum((len(s[2]) if is_zs(s) else 1) * e for s, e in m) for m in self.terms}

    def is_homogeneous(self, weight: int = None) -> bool:
        ws = self.weights()
        if not ws:
            return True
        return len(ws) == 1 and (weight is None or ws == {weight})

    # transformations
    def substitute(self, fn: Callable[[Symbol], "CoeffExpr"]) -> "CoeffExpr":
        """Ring morphism defined by its value ``fn(sym)`` on every symbol."""
        cache = {}
        out = CoeffExpr()
        for m, c in self.terms.items():
            term = CoeffExpr.const(c)
            for s, e in m:
                if s not in cache:
                    cache[s] = fn(s)
                term = term * cache[s] ** e
                if not term:
                    break
            out = out + term
        return out

    def evaluate(self, fn: Callable[[Symbol], object], zero=0):
        """Numeric value with ``fn`` giving the value of each symbol."""
        cache = {}
        total = zero
        for m, c in self.terms.items():
            term = c
            for s, e in m:
                if s not in cache:
                    cache[s] = fn(s)
                term = term * cache[s] ** e
            total = total + term
        return total

    # printing
    def format(self, zs_name: str = "Z", pi_name: str = "PI", mu_name: str = "MU") -> str:
        if not self.terms:
            return "0"

        def sym_str(s):
            if s == PI_SYM:
                return pi_name
            if s == MU_SYM:
                return mu_name
            return f"{zs_name}({format_word(zs_word(s))})"

        pieces = []
        for m, c in self.items():
            factors = [sym_str(s) + (f"^{e}" if e > 1 else "") for s, e in m]
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"CoeffExpr({self.format()!r})"


ZERO = CoeffExpr()
ONE = CoeffExpr.const(1)
PI = CoeffExpr.symbol(PI_SYM)
MU = CoeffExpr.symbol(MU_SYM)


def ZS(w: Word) -> CoeffExpr:
    return CoeffExpr.zs(tuple(w))
