import random
from fractions import Fraction

import mpmath
import pytest

from azbk.coeff import PI, ZS
from azbk.mzv import (context, convergent_words, duality_check, evaluate_expr, evaluate_relation,
                      mzv_numeric, nested_sum_oracle, phi_kz, shuffle_regularize, zsha_numeric)
from azbk.relations import MZV, TWO_CYCLE, Relation, to_mzv_form, two_cycle_relations
from azbk.series import _shuffle_cached
from azbk.words import AX, X0, X1, composition_to_word, word_to_composition, words_up_to

ctx = context()


def W(*letters):
    return tuple(letters)


def test_regularize_examples():
    assert shuffle_regularize(W(X0, X1)).as_dict() == {W(X0, X1): 1}
    assert shuffle_regularize(W(X1, X0, X0)).as_dict() == {W(X0, X0, X1): 1}
    assert shuffle_regularize(W(X0, X1, X0)).as_dict() == {W(X0, X0, X1): -2}
    assert shuffle_regularize(()).constant == 1
    assert not shuffle_regularize(W(X0, X0)).terms
    assert not shuffle_regularize(W(X1, X1, X1)).terms


def test_regularize_is_identity_on_convergent_words():
    for w in convergent_words(6):
        assert shuffle_regularize(w).as_dict() == {w: 1}


def test_regularize_respects_shuffle_exactly():
    # zeta(v sh w) = zeta(v) zeta(w) is linear only when one side is X0 or X1, where it vanishes
    for v in words_up_to(AX, 4):
        for letter in (W(X0), W(X1)):
            total = {}
            for u, m in _shuffle_cached(v, letter).items():
                for k, c in shuffle_regularize(u).as_dict().items():
                    total[k] = total.get(k, 0) + m * c
            assert not {k: c for k, c in total.items() if c}


def test_known_values():
    assert abs(mzv_numeric((2,), 1e-30) - ctx.pi ** 2 / 6) < 1e-30
    assert abs(mzv_numeric((3,), 1e-30) - ctx.zeta(3)) < 1e-30
    assert abs(mzv_numeric((3, 1), 1e-30) - ctx.pi ** 4 / 360) < 1e-30
    assert abs(mzv_numeric((2, 2), 1e-30) - ctx.pi ** 4 / 120) < 1e-30
    assert abs(mzv_numeric((2, 1)) - mzv_numeric((3,))) < 1e-10
    assert mpmath.nstr(mzv_numeric((2,)), 13) == "1.644934066848"


def test_numeric_input_validation():
    with pytest.raises(ValueError):
        mzv_numeric((1, 2))
    with pytest.raises(ValueError):
        mzv_numeric((2,), tol=0)


def test_precision_override(monkeypatch):
    monkeypatch.setenv("AZBK_PRECISION", "60")
    v = mzv_numeric((2,), 1e-50)
    assert v.context.dps == 60
    assert abs(v - context(60).pi ** 2 / 6) < 1e-50


def test_zsha_numeric_examples():
    assert zsha_numeric(W(X0)) == 0
    assert abs(zsha_numeric(W(X1, X0, X0)) - ctx.zeta(3)) < 1e-25
    assert zsha_numeric(W(X0, X1, X1)) == mzv_numeric((2, 1))


@pytest.mark.parametrize("k", [(2,), (3,), (2, 1), (4,), (3, 1), (2, 2), (2, 1, 1), (5,), (4, 1),
                               (3, 2), (2, 3), (3, 1, 1), (2, 2, 1), (2, 1, 2), (2, 1, 1, 1)])
def test_oracle_independence(k):
    partial, tail = nested_sum_oracle(k, n_terms=100_000)
    value = float(mzv_numeric(k))
    # the partial sum undershoots by at most the tail bound
    assert partial - 1e-9 <= value <= partial + tail + 1e-9


def test_shuffle_homomorphism_numerically():
    words = [w for w in words_up_to(AX, 4) if w]
    for v in words:
        for w in words:
            if len(v) + len(w) > 5:
                continue
            rhs = sum(m * zsha_numeric(u) for u, m in _shuffle_cached(v, w).items())
            assert abs(zsha_numeric(v) * zsha_numeric(w) - rhs) < 1e-9


def test_evaluate_relation_examples():
    r = to_mzv_form([r for r in two_cycle_relations(2) if r.key == W(X0, X1)][0])
    assert evaluate_relation(r).residual < 1e-10
    with pytest.raises(ValueError):
        evaluate_relation(Relation(TWO_CYCLE, W(X0), ZS(W(X0))))


def test_pi_is_imaginary():
    v = evaluate_expr(PI * PI)
    assert abs(v + ctx.pi ** 2) < 1e-30
    r = Relation(TWO_CYCLE, W(X0, X1), PI * PI + ZS(W(X0, X1)).scale(6), MZV)
    assert evaluate_relation(r).residual < 1e-25


def test_evaluation_is_linear():
    rng = random.Random(3)
    syms = [ZS(w) for w in words_up_to(AX, 3) if w] + [PI]
    for _ in range(20):
        a = sum((rng.choice(syms) * rng.choice(syms)).scale(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
                for _ in range(3))
        b = sum(rng.choice(syms).scale(rng.randint(-4, 4)) for _ in range(3)) * PI
        assert abs(evaluate_expr(a + b) - evaluate_expr(a) - evaluate_expr(b)) < 1e-25


def test_duality_examples():
    ok, diff = duality_check(W(X0, X0, X1))
    assert ok and diff < 1e-9
    assert duality_check(W(X0, X1))[0]
    with pytest.raises(ValueError):
        duality_check(W(X1, X0))


def test_phi_kz_signs():
    phi = phi_kz(2)
    assert phi[()] == 1
    assert phi[W(X0, X1)] == -ZS(W(X0, X1))
    assert phi[W(X0, X0)] == ZS(W(X0, X0))


def test_composition_word_helpers_agree():
    for w in convergent_words(5):
        assert composition_to_word(word_to_composition(w)) == w
