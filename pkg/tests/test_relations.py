import pytest
import sympy

from azbk.coeff import MU, PI, ZERO, ZS, CoeffExpr, is_zs, zs_word
from azbk.relations import (HEXAGON, MZV, PENTAGON, TWO_CYCLE, Relation, c2_coefficient, c3_coefficient,
                            c3_via_product, c5_coefficient, c5_via_product, decx, hexagon_relations,
                            pentagon_relations, rho, to_mzv_form, two_cycle_relations)
from azbk.words import AB, AX, X0, X1, X12, X23, X24, X34, X45, words_of_length, words_up_to


def W(*letters):
    return tuple(letters)


def zeta(*letters):
    return ZS(letters)


def test_c2_examples():
    assert c2_coefficient(W(X0)) == ZS(W(X0)) + ZS(W(X1))
    assert c2_coefficient(W(X0, X1)) == ZS(W(X0, X1)) + ZS(W(X0)) * ZS(W(X0)) + ZS(W(X1, X0))
    assert c2_coefficient(W(X0, X0, X1)) == (ZS(W(X0, X0, X1)) + ZS(W(X0, X0)) * ZS(W(X0))
                                             + ZS(W(X0)) * ZS(W(X1, X0)) + ZS(W(X1, X1, X0)))


def test_empty_keys_rejected():
    for fn in (c2_coefficient, c3_coefficient):
        with pytest.raises(ValueError):
            fn(())


def test_decx_examples():
    assert sorted(decx(W(X0), X0)) == sorted([((W(X0), 0),), ((W(), 1),)])
    assert decx(W(X1), X0) == [((W(X1), 0),)]
    assert sorted(decx(W(X0, X1), X0)) == sorted([((W(X0, X1), 0),), ((W(), 1), (W(X1), 0))])


@pytest.mark.parametrize("n", range(1, 6))
def test_decx_reconstructs_and_is_duplicate_free(n):
    for w in words_of_length(AX, n):
        for letter in AX:
            decs = decx(w, letter)
            assert len(decs) == len(set(decs))
            for dec in decs:
                assert sum((v + (letter,) * k for v, k in dec), ()) == w
                assert all(v for v, _ in dec[1:])
                assert all(k > 0 for _, k in dec[:-1]) and dec[-1][1] >= 0


def test_hexagon_weight_one_vanishes():
    for w in words_of_length(AX, 1):
        assert c3_coefficient(w) == ZERO
    assert all(r.is_trivial() for r in hexagon_relations(1))


def test_hexagon_via_product_constant_term():
    assert c3_via_product(2)[()] == CoeffExpr.const(1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hexagon_two_methods_agree(n):
    via = c3_via_product(n)
    for w in words_of_length(AX, n):
        assert c3_coefficient(w) == via[w]


def test_hexagon_weight_two_forces_mu_squared_over_24():
    # weight-1 values vanish; group-like: Z(X0X0)=Z(X1X1)=0, Z(X0X1)+Z(X1X0)=0
    z01, z10 = sympy.symbols("z01 z10")
    mu = sympy.Symbol("mu")
    values = {W(X0): 0, W(X1): 0, W(X0, X0): 0, W(X1, X1): 0, W(X0, X1): z01, W(X1, X0): z10}

    def to_sympy(expr):
        total = 0
        for mono, c in expr.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for s, e in mono:
                term *= (mu if s == (1,) else values[zs_word(s)]) ** e
            total += term
        return total

    eqs = [to_sympy(r.lhs) for r in hexagon_relations(2) if r.weight == 2] + [z01 + z10]
    sol = sympy.solve(eqs, [z01, z10], dict=True)
    assert sol == [{z01: mu ** 2 / 24, z10: -mu ** 2 / 24}]
    # with mu = 2 PI this is PI^2/6
    assert sympy.simplify(sol[0][z01].subs(mu, 2 * sympy.Symbol("PI")) - sympy.Symbol("PI") ** 2 / 6) == 0


def test_rho_table():
    assert rho(1, W(X12, X23)) == W(X0, X1)
    assert rho(3, W(X24)) == W(X0)
    assert rho(2, W(X12)) is None
    assert rho(4, ()) == ()


def test_c5_examples():
    assert c5_coefficient(W(X12)) == ZS(W(X0)) + ZS(W(X1))
    assert c5_coefficient(W(X23)) == (ZS(W(X0)) + ZS(W(X1))).scale(2)
    assert c5_coefficient(()) == CoeffExpr.const(1)
    via = c5_via_product(1)
    assert via[()] == CoeffExpr.const(1)
    assert via[W(X12)] == ZS(W(X0)) + ZS(W(X1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pentagon_two_methods_agree(n):
    via = c5_via_product(n)
    for w in words_of_length(AB, n):
        assert c5_coefficient(w) == via[w]


def test_pentagon_family_shapes():
    rels = pentagon_relations(2)
    assert len([r for r in rels if r.weight == 2]) == 19
    (r12,) = [r for r in rels if r.key == W(X12)]
    assert r12.lhs == ZS(W(X0)) + ZS(W(X1))
    assert two_cycle_relations(1)[0].lhs == ZS(W(X0)) + ZS(W(X1))


def test_to_mzv_form_examples():
    r = to_mzv_form(Relation(PENTAGON, W(X34, X45), c5_coefficient(W(X34, X45))))
    expected = (zeta(X0) * zeta(X0)).scale(2) - zeta(X1) * zeta(X0) - zeta(X0, X1) - zeta(X1, X0)
    assert r.form == MZV and r.lhs == expected
    (r3,) = [r for r in pentagon_relations(3, [3]) if r.key == W(X24, X34, X45)]
    assert to_mzv_form(r3, simplify=True).lhs == zeta(X0, X1, X0) + zeta(X1, X1, X0).scale(2)
    r = to_mzv_form(two_cycle_relations(1)[0])
    assert r.lhs == zeta(X0) - zeta(X1)


def test_mu_becomes_two_pi():
    r = to_mzv_form(Relation(HEXAGON, W(X0), MU))
    assert r.lhs == PI.scale(2)


def _grading_ok(r):
    return r.lhs.is_homogeneous(r.weight)


def test_every_relation_is_homogeneous():
    rels = two_cycle_relations(5) + hexagon_relations(4) + pentagon_relations(3)
    assert all(_grading_ok(r) for r in rels)
    assert all(_grading_ok(to_mzv_form(r)) for r in rels)


def test_pentagon_restricts_to_two_cycle_weight_3():
    quotient = {X12: X0, X23: X1}
    two = {r.key: to_mzv_form(r, simplify=True).lhs for r in two_cycle_relations(3)}
    for r in pentagon_relations(3):
        if set(r.key) <= {X12, X23}:
            key = tuple(quotient[a] for a in r.key)
            assert to_mzv_form(r, simplify=True).lhs == two[key]


def test_signed_convention_matches_mzv_form():
    for w in words_up_to(AB, 2):
        if not w:
            continue
        signed = c5_coefficient(w, signed=True)
        mzv = to_mzv_form(Relation(PENTAGON, w, c5_coefficient(w))).lhs
        assert signed == mzv


def test_zs_symbols_live_over_ax():
    for r in pentagon_relations(2):
        for s in r.lhs.symbols():
            assert is_zs(s) and set(zs_word(s)) <= set(AX)


def test_relation_families_are_tagged():
    assert {r.family for r in two_cycle_relations(2)} == {TWO_CYCLE}
    assert {r.family for r in pentagon_relations(1)} == {PENTAGON}
