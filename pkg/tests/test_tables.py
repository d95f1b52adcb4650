import pytest

from azbk.bar import parse_bar
from azbk.mzv import evaluate_relation
from azbk.relations import simplify_powers
from azbk.tables import ROWS, table

from golden import TABLE1, TABLE1_DUALS, TABLE2, TABLE2_DUALS, TABLE3, TABLE4, proportional


def test_row_keys_match_golden_tables():
    assert ROWS[1] == list(TABLE1)
    assert ROWS[2] == list(TABLE2)
    assert ROWS[3] == list(TABLE3) == list(TABLE4)


@pytest.mark.parametrize("degree,golden,duals", [(1, TABLE1, TABLE1_DUALS), (2, TABLE2, TABLE2_DUALS)])
def test_low_degree_rows(degree, golden, duals):
    for row in table(degree):
        assert proportional(row.relation.lhs, golden[row.key]), row.key
        assert row.dual == parse_bar(duals[row.key])
        assert evaluate_relation(row.relation).residual < 1e-10


def test_degree_two_rows_are_exact():
    # no rescaling needed in degree two
    for row in table(2):
        assert row.relation.lhs == TABLE2[row.key]


def test_degree_three_rows():
    for row in table(3):
        assert proportional(row.relation.lhs, simplify_powers(TABLE3[row.key])), row.key
        assert row.dual == parse_bar(TABLE4[row.key])
        assert evaluate_relation(row.relation).residual < 1e-8


def test_unsupported_degree():
    with pytest.raises(ValueError):
        table(4)
