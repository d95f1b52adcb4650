"""Shuffle regularization and a high-precision numeric oracle for multiple zeta values.

Numerics use a private :class:`mpmath.MPContext` per precision so that worker
threads never race on a global ``dps``.  The working precision defaults to 40
digits and can be overridden with the ``AZBK_PRECISION`` environment variable.
"""
from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

import mpmath

from .coeff import PI_SYM, CoeffExpr, is_zs, zs_word
from .series import NCSeries, _shuffle_cached
from .words import (AX, X0, X1, Word, check_word, composition_to_word, depth, format_word,
                    is_convergent, reverse, theta, word_key, word_to_composition, words_up_to)

DEFAULT_DIGITS = 40


def digits() -> int:
    raw = os.environ.get("AZBK_PRECISION")
    if raw is None:
        return DEFAULT_DIGITS
    try:
        d = int(raw)
    except ValueError:
        raise ValueError(f"AZBK_PRECISION must be an integer, got {raw!r}") from None
    if d < 15:
        raise ValueError("AZBK_PRECISION must be at least 15")
    return d


_contexts: Dict[int, mpmath.MPContext] = {}
_ctx_lock = threading.Lock()


def context(dps: Optional[int] = None) -> mpmath.MPContext:
    dps = digits() if dps is None else dps
    with _ctx_lock:
        ctx = _contexts.get(dps)
        if ctx is None:
            ctx = mpmath.MPContext()
            ctx.dps = dps
            _contexts[dps] = ctx
    return ctx


def to_mp(ctx, c: Fraction):
    c = Fraction(c)
    return ctx.mpf(c.numerator) / c.denominator


# shuffle regularization

@dataclass(frozen=True)
class MzvLinearCombo:
    """constant + sum of c_w * zeta(w) over convergent words w."""

    terms: Tuple[Tuple[Word, Fraction], ...] = ()
    constant: Fraction = Fraction(0)

    @classmethod
    def from_dict(cls, d: Dict[Word, Fraction], constant=Fraction(0)) -> "MzvLinearCombo":
        for w in d:
            if not is_convergent(w):
                raise ValueError(f"{format_word(w)} is not convergent")
        items = sorted(((w, Fraction(c)) for w, c in d.items() if c), key=lambda t: word_key(t[0], AX))
        return cls(tuple(items), Fraction(constant))

    def as_dict(self) -> Dict[Word, Fraction]:
        return dict(self.terms)

    def norm1(self) -> Fraction:
        return abs(self.constant) + sum(abs(c) for _, c in self.terms)

    def __str__(self):
        parts = [str(self.constant)] if self.constant else []
        parts += [f"{c}*zeta({format_word(w)})" for w, c in self.terms]
        return " + ".join(parts) or "0"


@lru_cache(maxsize=None)
def _regularize(w: Word) -> Tuple[Fraction, Tuple[Tuple[Word, Fraction], ...]]:
    if not w:
        return Fraction(1), ()
    if is_convergent(w):
        return Fraction(0), ((w, Fraction(1)),)
    if len(set(w)) == 1:
        return Fraction(0), ()
    if w[0] == X1:
        # 0 = zeta(X1^a) zeta(v) = zeta(X1^a sh v); w appears once
        a = 0
        while w[a] == X1:
            a += 1
        expansion = _shuffle_cached(w[:a], w[a:])
    else:
        # w starts with X0 and ends with X0: 0 = zeta(v sh X0^b)
        b = 0
        while w[-1 - b] == X0:
            b += 1
        expansion = _shuffle_cached(w[:-b], w[-b:])
    assert expansion[w] == 1
    const, acc = Fraction(0), {}
    for u, m in expansion.items():
        if u == w:
            continue
        c, ts = _regularize(u)
        const -= m * c
        for v, cv in ts:
            acc[v] = acc.get(v, 0) - m * cv
    return const, tuple(sorted(((v, c) for v, c in acc.items() if c), key=lambda t: word_key(t[0], AX)))


def shuffle_regularize(w) -> MzvLinearCombo:
    """zeta_sh(w) as an exact combination of convergent MZVs."""
    const, terms = _regularize(check_word(w, AX))
    return MzvLinearCombo(terms, const)


# numeric evaluation

def _check_convergent_composition(k) -> Tuple[int, ...]:
    k = tuple(int(x) for x in k)
    if not k or any(x < 1 for x in k):
        raise ValueError(f"bad composition {k}")
    if k[0] < 2:
        raise ValueError(f"composition {k} is not convergent (k1 must be >= 2)")
    return k


def _polylog_half(ctx, k: Tuple[int, ...], n_terms: int):
    """Li_k(1/2) = sum over n1 > ... > np >= 1 of 2^-n1 / (n1^k1 ... np^kp), truncated at n1 <= N."""
    if not k:
        return ctx.mpf(1)
    inv_pow = {}
    level = None
    for ki in reversed(k):
        if ki not in inv_pow:
            inv_pow[ki] = [ctx.mpf(0)] + [ctx.mpf(1) / ctx.mpf(n) ** ki for n in range(1, n_terms + 1)]
        row = inv_pow[ki]
        if level is None:
            level = row[:]
        else:
            new = [ctx.mpf(0)] * (n_terms + 1)
            acc = ctx.mpf(0)
            for n in range(1, n_terms + 1):
                new[n] = row[n] * acc
                acc += level[n]
            level = new
    total = ctx.mpf(0)
    z = ctx.mpf(1)
    half = ctx.mpf(1) / 2
    for n in range(1, n_terms + 1):
        z *= half
        total += z * level[n]
    return total


def truncation_depth(weight: int, dep: int, tol: float) -> int:
    """Smallest N with 2 * 2^-N * (N + weight)^depth <= tol."""
    n = 1
    log_tol = math.log(tol)
    while math.log(2) * (1 - n) + dep * math.log(n + weight) > log_tol:
        n += 1
    return n


_memo: Dict[Tuple[Tuple[int, ...], int, int], object] = {}
_memo_lock = threading.Lock()


def _holder(k: Tuple[int, ...], dps: int, tol: float):
    ctx = context(dps)
    w = composition_to_word(k)
    n = len(w)
    # each of the n+1 products has two factors bounded by 1, error budget split evenly
    per = tol / (4 * (n + 1))
    total = ctx.mpf(0)
    for j in range(n + 1):
        top, bottom = w[:j], w[j:]
        if top and top[0] != X0:
            continue
        if bottom and bottom[-1] != X1:
            continue
        top_word = reverse(theta(top))
        kt = word_to_composition(top_word)
        kb = word_to_composition(bottom)
        nt = truncation_depth(len(top_word), len(kt), per)
        nb = truncation_depth(len(bottom), len(kb), per)
        total += _polylog_half(ctx, kt, nt) * _polylog_half(ctx, kb, nb)
    return total


def mzv_numeric(k, tol: float = 1e-12, dps: Optional[int] = None):
    """zeta(k1, ..., kp) via the Hoelder convolution at 1/2, as an mpf with error <= tol."""
    k = _check_convergent_composition(k)
    if not tol > 0:
        raise ValueError("tol must be positive")
    dps = digits() if dps is None else dps
    # work at the precision floor whenever the caller asks for less
    eff = min(float(tol), 10.0 ** (5 - dps))
    key = (k, dps, truncation_depth(sum(k), len(k), eff))
    hit = _memo.get(key)
    if hit is not None:
        return hit
    value = _holder(k, dps, eff)
    with _memo_lock:
        _memo.setdefault(key, value)
    return _memo[key]


def zsha_numeric(w, tol: float = 1e-12, dps: Optional[int] = None):
    """Numeric zeta_sh(w) for any word over X0, X1."""
    combo = shuffle_regularize(w)
    ctx = context(dps)
    scale = max(float(combo.norm1()), 1.0)
    total = to_mp(ctx, combo.constant)
    for v, c in combo.terms:
        total += to_mp(ctx, c) * mzv_numeric(word_to_composition(v), tol / scale, dps)
    return total


def nested_sum_oracle(k, n_terms: int = 200_000) -> Tuple[float, float]:
    """Brute-force partial sum over n1 <= N and a rigorous bound on the dropped tail.

    The inner sums are bounded by (1 + ln n)^q / q!, so the tail is at most
    the integral of (1 + ln x)^q / (q! x^k1) from N to infinity.
    """
    k = _check_convergent_composition(k)
    level = None
    for ki in reversed(k):
        row = [0.0] + [n ** -ki for n in range(1, n_terms + 1)]
        if level is None:
            level = row
            continue
        new = [0.0] * (n_terms + 1)
        acc = 0.0
        for n in range(1, n_terms + 1):
            new[n] = row[n] * acc
            acc += level[n]
        level = new
    partial = math.fsum(level)
    q = len(k) - 1
    tail = mpmath.quad(lambda x: (1 + mpmath.log(x)) ** q / x ** k[0], [n_terms, mpmath.inf])
    return partial, float(tail) / math.factorial(q)


# relations

@dataclass
class Residual:
    key: Word
    residual: float
    passed: bool
    value: object = field(default=None, repr=False)


def symbol_value(sym, tol: float = 1e-12, dps: Optional[int] = None):
    """Numeric value of a coefficient symbol: PI is i*pi, ZS[w] is zeta_sh(w)."""
    ctx = context(dps)
    if sym == PI_SYM:
        return ctx.mpc(0, ctx.pi)
    if is_zs(sym):
        return zsha_numeric(zs_word(sym), tol, dps)
    raise ValueError(f"symbol {sym} has no numeric value in MZV form")


def evaluate_expr(expr: CoeffExpr, tol: float = 1e-12, dps: Optional[int] = None):
    """Complex value of an MZV-form coefficient expression."""
    ctx = context(dps)
    cache = {}
    total = ctx.mpc(0)
    for mono, c in expr.items():
        term = ctx.mpc(to_mp(ctx, c))
        for s, e in mono:
            if s not in cache:
                cache[s] = symbol_value(s, tol, dps)
            term *= cache[s] ** e
        total += term
    return total


def evaluate_relation(r, tol: float = 1e-8, dps: Optional[int] = None) -> Residual:
    from .relations import MZV

    if r.form != MZV:
        raise ValueError("evaluate_relation needs a relation in MZV form")
    # per-symbol accuracy well below the relation tolerance
    value = evaluate_expr(r.lhs, min(tol, 1e-12) * 1e-6, dps)
    res = float(abs(value))
    return Residual(r.key, res, res <= tol, value)


def duality_check(w, tol: float = 1e-9, dps: Optional[int] = None) -> Tuple[bool, float]:
    """zeta(w) = zeta(reverse(theta(w))) numerically."""
    w = check_word(w, AX)
    dual = reverse(theta(w))
    if not (is_convergent(w) and is_convergent(dual)):
        raise ValueError(f"{format_word(w)} is not convergent")
    a = mzv_numeric(word_to_composition(w), tol / 10, dps)
    b = mzv_numeric(word_to_composition(dual), tol / 10, dps)
    diff = float(abs(a - b))
    return diff <= tol, diff


def convergent_words(max_weight: int):
    return [w for w in words_up_to(AX, max_weight) if is_convergent(w)]


def phi_kz(max_weight: int) -> NCSeries:
    """Truncated Drinfel'd associator with symbolic coefficients (-1)^depth ZS[w]."""
    terms = {}
    for w in words_up_to(AX, max_weight):
        z = CoeffExpr.zs(w)
        terms[w] = -z if depth(w) % 2 else z
    return NCSeries(AX, max_weight, terms)


__all__ = [
    "MzvLinearCombo", "shuffle_regularize", "mzv_numeric", "zsha_numeric", "nested_sum_oracle",
    "evaluate_expr", "evaluate_relation", "duality_check", "Residual", "convergent_words",
    "phi_kz", "context", "digits", "truncation_depth", "symbol_value",
]
