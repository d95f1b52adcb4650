"""Text, LaTeX and JSON encodings of relations and bar tensors.

JSON is lossless: every coefficient is an exact rational string and
:func:`relation_from_json` rebuilds an equal :class:`~azbk.relations.Relation`.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List

from .bar import BarTensor, parse_bar
from .coeff import MU_SYM, PI_SYM, CoeffExpr, zs_symbol, zs_word
from .relations import MZV, SYMBOLIC, Relation
from .words import Word, format_word, parse_word


def _sym_text(sym, form: str) -> str:
    if sym == PI_SYM:
        return "(i*pi)"
    if sym == MU_SYM:
        return "MU"
    name = "zeta" if form == MZV else "Z"
    return f"{name}({format_word(zs_word(sym))})"


def expr_text(expr: CoeffExpr, form: str = SYMBOLIC) -> str:
    if not expr:
        return "0"
    out = []
    for mono, c in expr.items():
        factors = [_sym_text(s, form) + (f"^{e}" if e > 1 else "") for s, e in mono]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if out:
            out.append(("- " if c < 0 else "+ ") + body)
        else:
            out.append(("-" if c < 0 else "") + body)
    return " ".join(out)


def relation_text(r: Relation) -> str:
    return f"{format_word(r.key)}: {expr_text(r.lhs, r.form)} = 0"


# LaTeX

def word_latex(w: Word) -> str:
    if not w:
        return "1"
    return "".join("X_{" + a[1:] + "}" for a in w)


def _sym_latex(sym, form: str) -> str:
    if sym == PI_SYM:
        return r"(i\pi)"
    if sym == MU_SYM:
        return r"\mu"
    inner = " ".join("X_{" + a[1:] + "}" for a in zs_word(sym))
    if form == MZV:
        return r"\zeta^{\sqcup\!\sqcup}\left(" + inner + r"\right)"
    return "Z_{" + inner.replace(" ", "") + "}"


def expr_latex(expr: CoeffExpr, form: str = SYMBOLIC) -> str:
    if not expr:
        return "0"
    out = ""
    for mono, c in expr.items():
        factors = "".join(_sym_latex(s, form) + (f"^{{{e}}}" if e > 1 else "") for s, e in mono)
        mag = abs(c)
        if mag == 1 and factors:
            coef = ""
        elif mag.denominator == 1:
            coef = str(mag.numerator)
        else:
            coef = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        sign = "-" if c < 0 else ("+" if out else "")
        out += (" " if out else "") + sign + coef + factors
    return out


def latex_table(rows: List[List[str]], header: List[str]) -> str:
    spec = "l" * len(header)
    lines = [r"\begin{tabular}{" + spec + "}", r"\hline", " & ".join(header) + r" \\", r"\hline"]
    for row in rows:
        lines.append(" & ".join(row) + r" \\")
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines)


def relation_latex_row(r: Relation) -> List[str]:
    return ["$" + word_latex(r.key) + "$", "$" + expr_latex(r.lhs, r.form) + " = 0$"]


# JSON

def expr_to_terms(expr: CoeffExpr) -> List[dict]:
    terms = []
    for mono, c in expr.items():
        pi = mu = 0
        factors = []
        for s, e in mono:
            if s == PI_SYM:
                pi = e
            elif s == MU_SYM:
                mu = e
            else:
                factors.extend([format_word(zs_word(s))] * e)
        terms.append({"coeff": str(c), "pi_power": pi, "mu_power": mu, "factors": factors})
    return terms


def terms_to_expr(terms: List[dict]) -> CoeffExpr:
    acc: Dict[tuple, Fraction] = {}
    for t in terms:
        powers: Dict[tuple, int] = {}
        if t.get("pi_power", 0):
            powers[PI_SYM] = int(t["pi_power"])
        if t.get("mu_power", 0):
            powers[MU_SYM] = int(t["mu_power"])
        for f in t.get("factors", []):
            sym = zs_symbol(parse_word(f))
            powers[sym] = powers.get(sym, 0) + 1
        mono = tuple(sorted(powers.items()))
        acc[mono] = acc.get(mono, Fraction(0)) + Fraction(t["coeff"])
    return CoeffExpr(acc)


def relation_to_json(r: Relation) -> dict:
    terms = expr_to_terms(r.lhs)
    return {
        "family": r.family,
        "weight": r.weight,
        "key": format_word(r.key),
        "form": r.form,
        "term_count": len(terms),
        "terms": terms,
    }


def relation_from_json(d: dict) -> Relation:
    if d.get("form", SYMBOLIC) not in (SYMBOLIC, MZV):
        raise ValueError(f"unknown form {d['form']!r}")
    return Relation(d["family"], parse_word(d["key"]), terms_to_expr(d["terms"]), d.get("form", SYMBOLIC))


def bar_to_json(key: Word, t: BarTensor) -> dict:
    return {
        "key": format_word(key),
        "degree": len(key),
        "term_count": len(t.terms),
        "tensor": t.format(),
        "terms": [{"coeff": str(c), "forms": ["w" + a[1:] for a in w]} for w, c in t.items()],
    }


def bar_from_json(d: dict) -> BarTensor:
    terms: Dict[Word, Fraction] = {}
    for t in d["terms"]:
        w = tuple("X" + f[1:] for f in t["forms"])
        terms[w] = terms.get(w, Fraction(0)) + Fraction(t["coeff"])
    out = BarTensor(terms)
    if "tensor" in d and parse_bar(d["tensor"]) != out:
        raise ValueError("tensor text and term list disagree")
    return out


def dumps(doc) -> str:
    return json.dumps(doc, indent=2)

