"""Command-line interface: ``azbk <command> [flags]``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from . import relations as rel
from .bar import dual_basis_element, multiplicative_generators
from .braid import enumerate_b4, l_coefficients
from .mzv import evaluate_relation, mzv_numeric, zsha_numeric
from .serialize import (bar_to_json, dumps, expr_latex, latex_table, relation_latex_row,
                        relation_text, relation_to_json, word_latex)
from .tables import table
from .words import AB, AB51, AX, format_word, parse_composition, parse_word, word_key

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

MAX_WEIGHT = {rel.TWO_CYCLE: 6, rel.HEXAGON: 6, rel.PENTAGON: 5}


class UsageError(Exception):
    pass


def generate(family: str, max_weight: int) -> List[rel.Relation]:
    """Relations of one family, sorted canonically; tests patch this to inject faults."""
    return sorted(rel.relations(family, max_weight), key=rel.sort_key)


def _check_weight(family: str, n: int):
    if not 1 <= n <= MAX_WEIGHT[family]:
        raise UsageError(f"--max-weight for {family} must be in 1..{MAX_WEIGHT[family]}")


def _write(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_relations(args) -> int:
    _check_weight(args.family, args.max_weight)
    rels = generate(args.family, args.max_weight)
    if args.form == rel.MZV:
        rels = [rel.to_mzv_form(r) for r in rels]
    if args.format == "json":
        doc = {"command": "relations", "family": args.family, "max_weight": args.max_weight,
               "form": args.form, "relations": [relation_to_json(r) for r in rels]}
        _write(dumps(doc))
    elif args.format == "latex":
        _write(latex_table([relation_latex_row(r) for r in rels], ["Key", "Relation"]))
    else:
        for r in rels:
            line = relation_text(r)
            _write(line + ("  [trivial]" if r.is_trivial() else ""))
    return EXIT_OK


def cmd_tables(args) -> int:
    if args.degree not in (1, 2, 3):
        raise UsageError("--degree must be 1, 2 or 3")
    rows = table(args.degree)
    if args.format == "json":
        doc = {"command": "tables", "degree": args.degree, "rows": [
            {"dual": bar_to_json(r.key, r.dual), "relation": relation_to_json(r.relation)} for r in rows]}
        _write(dumps(doc))
    elif args.format == "latex":
        body = [["$" + word_latex(r.key) + "$", "$" + r.dual.latex() + "$",
                 "$" + expr_latex(r.relation.lhs, r.relation.form) + " = 0$"] for r in rows]
        _write(latex_table(body, ["Monomial", "Dual element", "Relation"]))
    else:
        for r in rows:
            _write(f"{format_word(r.key)}\n  dual:     {r.dual.format()}\n  relation: "
                   + relation_text(r.relation).split(": ", 1)[1])
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_weight(args.family, args.max_weight)
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    rels = [rel.to_mzv_form(r) for r in generate(args.family, args.max_weight)]
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(lambda r: evaluate_relation(r, args.tol), rels))
    worst = {}
    for r, res in zip(rels, results):
        cur = worst.get(r.weight)
        if cur is None or res.residual > cur.residual:
            worst[r.weight] = res
    failed = [res for res in results if not res.passed]
    for n in sorted(worst):
        res = worst[n]
        _write(f"weight {n}: {sum(1 for r in rels if r.weight == n)} relations, "
               f"worst residual {res.residual:.3e} at {format_word(res.key)}")
    for res in failed:
        _write(f"FAIL {format_word(res.key)}: residual {res.residual:.3e} > {args.tol:g}")
    _write(f"{args.family}: {len(rels) - len(failed)}/{len(rels)} relations within tol {args.tol:g}")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_reduce(args) -> int:
    if args.word is None:
        raise UsageError("reduce needs --word")
    try:
        w = parse_word(args.word, AB51)
    except ValueError as e:
        raise UsageError(str(e)) from None
    coeffs = l_coefficients(w)
    items = sorted(coeffs.items(), key=lambda t: word_key(t[0], AB))
    if args.format == "json":
        _write(dumps({"command": "reduce", "word": format_word(w),
                      "terms": [{"coeff": str(c), "monomial": format_word(b)} for b, c in items]}))
    else:
        text = " ".join(f"{'-' if c < 0 else '+'}{abs(c)} {format_word(b)}" for b, c in items)
        _write(text or "0")
    return EXIT_OK


def _digits_for(tol: float) -> int:
    return max(6, int(math.ceil(-math.log10(tol))) + 1)


def cmd_mzv(args) -> int:
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    if (args.composition is None) == (args.word is None):
        raise UsageError("mzv needs exactly one of --composition or --word")
    try:
        if args.composition is not None:
            k = parse_composition(args.composition)
            label = ",".join(map(str, k))
            value = mzv_numeric(k, args.tol)
        else:
            w = parse_word(args.word, AX)
            label = format_word(w)
            value = zsha_numeric(w, args.tol)
    except ValueError as e:
        raise UsageError(str(e)) from None
    text = value.context.nstr(value, _digits_for(args.tol))
    if args.format == "json":
        _write(dumps({"command": "mzv", "input": label, "tol": args.tol, "value": text}))
    else:
        _write(text)
    return EXIT_OK


def _check_degree(d: int, top: int):
    if not 1 <= d <= top:
        raise UsageError(f"--degree must be in 1..{top}")


def _emit_bars(command: str, degree: int, keys, fmt: str):
    duals = [(b, dual_basis_element(b)) for b in keys]
    if fmt == "json":
        _write(dumps({"command": command, "degree": degree, "count": len(duals),
                      "elements": [bar_to_json(b, t) for b, t in duals]}))
    elif fmt == "latex":
        _write(latex_table([["$" + word_latex(b) + "$", "$" + t.latex() + "$"] for b, t in duals],
                           ["Monomial", "Dual element"]))
    else:
        for b, t in duals:
            _write(f"{format_word(b)}: {t.format()}")


def cmd_dual_basis(args) -> int:
    _check_degree(args.degree, 4)
    _emit_bars("dual-basis", args.degree, enumerate_b4(args.degree), args.format)
    return EXIT_OK


def cmd_generators(args) -> int:
    _check_degree(args.degree, 4)
    _emit_bars("generators", args.degree, multiplicative_generators(args.degree), args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="azbk", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        return sp

    fmt = dict(choices=["json", "latex", "text"], default="text")

    sp = add("relations", cmd_relations, "emit one relation family")
    sp.add_argument("--family", choices=rel.FAMILIES, required=True)
    sp.add_argument("--max-weight", type=int, required=True)
    sp.add_argument("--form", choices=[rel.SYMBOLIC, rel.MZV], default=rel.SYMBOLIC)
    sp.add_argument("--format", **fmt)

    sp = add("tables", cmd_tables, "low-degree pentagon tables")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--format", **fmt)

    sp = add("verify", cmd_verify, "check a family numerically")
    sp.add_argument("--family", choices=rel.FAMILIES, required=True)
    sp.add_argument("--max-weight", type=int, required=True)
    sp.add_argument("--tol", type=float, default=1e-8)

    sp = add("reduce", cmd_reduce, "rewrite a braid word in the B4 basis")
    sp.add_argument("--word", required=True)
    sp.add_argument("--format", **fmt)

    sp = add("mzv", cmd_mzv, "numeric multiple zeta value")
    sp.add_argument("--composition")
    sp.add_argument("--word")
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--format", **fmt)

    sp = add("dual-basis", cmd_dual_basis, "dual basis elements in the bar construction")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--format", **fmt)

    sp = add("generators", cmd_generators, "multiplicative generators of one degree")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--format", **fmt)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        sys.stderr.write(f"azbk {args.command}: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
