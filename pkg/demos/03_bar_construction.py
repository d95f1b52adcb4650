"""Dual basis elements as integrable bar tensors, and their shuffle generators.

The dual of each B4 monomial is an integrable word in the five 1-forms.
Integrating along the boundary path of the moduli space gives back the
pentagon relation for that monomial.
"""
from azbk.bar import (dual_basis_element, express_in_generators, integrability_check,
                      iterated_integral_gamma, multiplicative_generators)
from azbk.braid import enumerate_b4
from azbk.relations import simplify_powers
from azbk.serialize import expr_text
from azbk.words import format_word, parse_word

for b in enumerate_b4(2)[:4]:
    t = dual_basis_element(b)
    print(f"{format_word(b):>10}: {t.format()}")
    print(f"{'':>10}  integrable: {integrability_check(t).passed}")
    print(f"{'':>10}  along gamma: {expr_text(simplify_powers(iterated_integral_gamma(t)), 'mzv')}")

for d in (2, 3):
    gens = multiplicative_generators(d)
    print(f"degree {d}: {len(gens)} generators:", ", ".join(format_word(g) for g in gens))

b = parse_word("X34.X24.X24")
poly = express_in_generators(dual_basis_element(b))
print(f"dual of {format_word(b)} as a shuffle polynomial:")
for mono, c in poly.items():
    print(f"  {c} * " + " sh ".join(format_word(g) for g in mono))
