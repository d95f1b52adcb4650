"""Rewrite braid words into the B4 normal form and show the projection is respected.

Words in the pure braid generators are pushed into the form u.v, with u in
the kernel letters X24, X34, X45 and v in the quotient letters X12, X23.
"""
from azbk.braid import enumerate_b4, l_coefficients
from azbk.words import format_word, parse_word

print("basis sizes:", [len(enumerate_b4(d)) for d in range(1, 5)])
for text in ["X12.X24", "X23.X34", "X12.X23.X24", "X51"]:
    w = parse_word(text)
    coeffs = l_coefficients(w)
    pretty = " ".join(f"{c:+d} {format_word(b)}" for b, c in sorted(coeffs.items()))
    print(f"{text:>12} -> {pretty}")

# left-most and right-most rewriting agree
w = parse_word("X12.X23.X12.X24")
assert l_coefficients(w, "left") == l_coefficients(w, "right")
print("strategies agree on", format_word(w))
