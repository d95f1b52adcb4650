"""Weight-truncated noncommutative series and the shuffle product.

Coefficients are any exact commutative ring elements supporting ``+``, ``*``
and truthiness as a zero test; in practice :class:`~azbk.coeff.CoeffExpr` or
:class:`fractions.Fraction`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
import math
from math import factorial
from typing import Callable, Dict, Mapping, Sequence, Tuple

from .words import EMPTY, AlphabetError, Word, alphabet_of, check_word, format_word, word_key, words_up_to


class WeightMismatch(ValueError):
    pass


class NCSeries:
    """A finite map Word -> coefficient, truncated above ``max_weight``."""

    __slots__ = ("alphabet", "max_weight", "terms")

    def __init__(self, alphabet: Sequence[str], max_weight: int, terms: Mapping[Word, object] = None):
        if max_weight < 0:
            raise ValueError("max_weight must be >= 0")
        self.alphabet = tuple(alphabet)
        self.max_weight = max_weight
        clean = {}
        for w, c in (terms or {}).items():
            w = check_word(w, self.alphabet)
            if len(w) <= max_weight and c:
                clean[w] = c
        self.terms: Dict[Word, object] = clean

    @classmethod
    def one(cls, alphabet, max_weight, unit=Fraction(1)):
        return cls(alphabet, max_weight, {EMPTY: unit})

    @classmethod
    def word(cls, w: Word, alphabet=None, max_weight=None, coeff=Fraction(1)):
        w = tuple(w)
        return cls(alphabet or alphabet_of(w), len(w) if max_weight is None else max_weight, {w: coeff})

    def _check(self, other: "NCSeries"):
        if self.alphabet != other.alphabet:
            raise AlphabetError(f"alphabet mismatch {self.alphabet} vs {other.alphabet}")
        if self.max_weight != other.max_weight:
            raise WeightMismatch(f"max_weight mismatch {self.max_weight} vs {other.max_weight}")

    def __getitem__(self, w) -> object:
        return self.terms.get(tuple(w), 0)

    def __contains__(self, w):
        return tuple(w) in self.terms

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, NCSeries):
            return NotImplemented
        return (self.alphabet, self.max_weight, self.terms) == (other.alphabet, other.max_weight, other.terms)

    def items(self):
        """Terms in canonical word order."""
        for w in sorted(self.terms, key=lambda w: word_key(w, self.alphabet)):
            yield w, self.terms[w]

    def __add__(self, other: "NCSeries") -> "NCSeries":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return NCSeries(self.alphabet, self.max_weight, out)

    def __neg__(self):
        return NCSeries(self.alphabet, self.max_weight, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "NCSeries":
        return NCSeries(self.alphabet, self.max_weight, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other: "NCSeries") -> "NCSeries":
        return nc_mul(self, other)

    def homogeneous_part(self, n: int) -> "NCSeries":
        return NCSeries(self.alphabet, self.max_weight, {w: c for w, c in self.terms.items() if len(w) == n})

    def truncate(self, n: int) -> "NCSeries":
        return NCSeries(self.alphabet, n, {w: c for w, c in self.terms.items() if len(w) <= n})

    def map_coefficients(self, fn) -> "NCSeries":
        return NCSeries(self.alphabet, self.max_weight, {w: fn(c) for w, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return f"NCSeries(0, max_weight={self.max_weight})"
        body = " + ".join(f"({c})*{format_word(w)}" for w, c in self.items())
        return f"NCSeries({body}, max_weight={self.max_weight})"


def nc_mul(a: NCSeries, b: NCSeries) -> NCSeries:
    """Concatenation (Cauchy) product truncated at the common max_weight."""
    a._check(b)
    n = a.max_weight
    by_len: Dict[int, list] = {}
    for w, c in b.terms.items():
        by_len.setdefault(len(w), []).append((w, c))
    out: Dict[Word, object] = {}
    for u, cu in a.terms.items():
        room = n - len(u)
        for k in range(room + 1):
            for v, cv in by_len.get(k, ()):
                w = u + v
                p = cu * cv
                out[w] = out[w] + p if w in out else p
    return NCSeries(a.alphabet, n, out)


def nc_pow(a: NCSeries, k: int, unit=Fraction(1)) -> NCSeries:
    out = NCSeries.one(a.alphabet, a.max_weight, unit)
    for _ in range(k):
        out = nc_mul(out, a)
    return out


def nc_exp(x: NCSeries, max_weight: int = None, unit=Fraction(1)) -> NCSeries:
    """Truncated exponential of a series with only weight-one terms."""
    if any(len(w) != 1 for w in x.terms):
        raise ValueError("nc_exp expects a linear series (weight-one terms only)")
    n = x.max_weight if max_weight is None else max_weight
    x = NCSeries(x.alphabet, n, x.terms)
    out = NCSeries.one(x.alphabet, n, unit)
    power = NCSeries.one(x.alphabet, n, unit)
    for k in range(1, n + 1):
        power = nc_mul(power, x)
        out = out + power.scale(Fraction(1, factorial(k)))
    return out


def substitute_letters(a: NCSeries, mapping: Mapping[str, NCSeries], target_alphabet=None) -> NCSeries:
    """Apply the algebra morphism sending each letter to a linear series."""
    images = {}
    for letter, img in mapping.items():
        if any(len(w) != 1 for w in img.terms):
            raise ValueError(f"image of {letter} is not homogeneous of weight one")
        images[letter] = img
    if target_alphabet is None:
        alphs = {img.alphabet for img in images.values()}
        if len(alphs) != 1:
            raise AlphabetError("cannot infer target alphabet")
        target_alphabet = alphs.pop()
    n = a.max_weight
    out: Dict[Word, object] = {}
    for w, c in a.terms.items():
        missing = [l for l in w if l not in images]
        if missing:
            raise KeyError(f"letter {missing[0]} has no image")
        # expand the product of the letter images
        partial = {EMPTY: c}
        for l in w:
            nxt = {}
            for u, cu in partial.items():
                for (v,), cv in images[l].terms.items():
                    key = u + (v,)
                    p = cu * cv
                    nxt[key] = nxt[key] + p if key in nxt else p
            partial = nxt
        for u, cu in partial.items():
            out[u] = out[u] + cu if u in out else cu
    return NCSeries(target_alphabet, n, out)


# shuffle product

def shuffle_words(v: Word, w: Word) -> Counter:
    """Multiset of interleavings of ``v`` and ``w`` as a Counter."""
    v, w = tuple(v), tuple(w)
    return Counter(_shuffle_cached(v, w))


_SHUFFLE_CACHE: Dict[Tuple[Word, Word], Dict[Word, int]] = {}


def _shuffle_cached(v: Word, w: Word) -> Dict[Word, int]:
    key = (v, w)
    hit = _SHUFFLE_CACHE.get(key)
    if hit is not None:
        return hit
    if not v:
        res = {w: 1}
    elif not w:
        res = {v: 1}
    else:
        res: Dict[Word, int] = {}
        for u, m in _shuffle_cached(v[1:], w).items():
            k = (v[0],) + u
            res[k] = res.get(k, 0) + m
        for u, m in _shuffle_cached(v, w[1:]).items():
            k = (w[0],) + u
            res[k] = res.get(k, 0) + m
    _SHUFFLE_CACHE[key] = res
    return res


def shuffle(v: Word, w: Word, alphabet=None) -> NCSeries:
    """v ⧢ w as a series with integer multiplicities."""
    if alphabet is None:
        alphabet = alphabet_of(v, w)
    v, w = check_word(v, alphabet), check_word(w, alphabet)
    return NCSeries(alphabet, len(v) + len(w), {u: Fraction(m) for u, m in _shuffle_cached(v, w).items()})


def shuffle_series(a: NCSeries, b: NCSeries) -> NCSeries:
    """Bilinear shuffle product, truncated at the common max_weight."""
    a._check(b)
    out: Dict[Word, object] = {}
    for v, cv in a.terms.items():
        for w, cw in b.terms.items():
            if len(v) + len(w) > a.max_weight:
                continue
            p = cv * cw
            for u, m in _shuffle_cached(v, w).items():
                t = p * m
                out[u] = out[u] + t if u in out else t
    return NCSeries(a.alphabet, a.max_weight, out)


# group-like test through the coefficient shuffle relations

@dataclass
class GrouplikeReport:
    passed: bool
    worst: float
    worst_pair: Tuple[Word, Word]
    checked: int

    def __str__(self):
        v, w = self.worst_pair
        status = "pass" if self.passed else "FAIL"
        return (f"grouplike {status}: {self.checked} pairs, worst |a(V)a(W) - a(V sh W)| = "
                f"{float(self.worst):.3e} at ({format_word(v)}, {format_word(w)})")


def _magnitude(d):
    try:
        return abs(d)
    except TypeError:
        # exact symbolic difference: either zero or an outright violation
        return 0 if not d else math.inf


def grouplike_check(a: NCSeries, evaluate: Callable[[object], object] = None, tol=0) -> GrouplikeReport:
    """Check a(V)a(W) = sum over U in sh(V,W) of a(U) for |V|+|W| <= max_weight."""
    if evaluate is None:
        evaluate = lambda c: c  # noqa: E731
    values = {}

    def val(w):
        if w not in values:
            values[w] = evaluate(a[w]) if w in a.terms else 0
        return values[w]

    worst, worst_pair, checked = 0, (EMPTY, EMPTY), 0
    n = a.max_weight
    nonempty = [w for w in words_up_to(a.alphabet, n - 1) if w]
    for v in nonempty:
        for w in nonempty:
            if len(v) + len(w) > n:
                continue
            rhs = 0
            for u, m in _shuffle_cached(v, w).items():
                rhs = rhs + m * val(u)
            err = _magnitude(val(v) * val(w) - rhs)
            checked += 1
            if err > worst:
                worst, worst_pair = err, (v, w)
    return GrouplikeReport(passed=bool(worst <= tol), worst=worst, worst_pair=worst_pair, checked=checked)


def linear(coeffs: Mapping[str, object], alphabet, max_weight) -> NCSeries:
    """Series sum c_a * a over letters."""
    return NCSeries(alphabet, max_weight, {(l,): c for l, c in coeffs.items()})


def all_words_series(alphabet, max_weight, coeff_fn) -> NCSeries:
    return NCSeries(alphabet, max_weight, {w: coeff_fn(w) for w in words_up_to(alphabet, max_weight)})


__all__ = [
    "NCSeries", "WeightMismatch", "nc_mul", "nc_pow", "nc_exp", "substitute_letters",
    "shuffle_words", "shuffle", "shuffle_series", "grouplike_check", "GrouplikeReport",
    "linear", "all_words_series",
]
