"""Generate the three associator relation families and check them numerically.

Each relation is a polynomial identity among regularized multiple zeta values.
We print a few low-weight examples and then evaluate every relation through
weight 4 at 40 digits.
"""
from azbk.mzv import evaluate_relation
from azbk.relations import FAMILIES, relations, to_mzv_form
from azbk.serialize import relation_text

for family in FAMILIES:
    rels = [to_mzv_form(r, simplify=True) for r in relations(family, 3)]
    interesting = [r for r in rels if not r.is_trivial()][:3]
    print(f"== {family}: {len(rels)} relations through weight 3")
    for r in interesting:
        print("  ", relation_text(r))

print()
for family in FAMILIES:
    res = [evaluate_relation(to_mzv_form(r)) for r in relations(family, 4)]
    worst = max(res, key=lambda x: x.residual)
    print(f"{family:>10}: {len(res)} relations, worst residual {worst.residual:.2e}")
