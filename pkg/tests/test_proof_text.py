import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpllkit.dpll_proof import CONFLICT, Elim, Red, Split, Unit
from dpllkit.proof_text import (
    ProofParseError,
    parse_dpll,
    parse_res,
    serialize_dpll,
    serialize_res,
)
from dpllkit.resolution import Res, Sub

from strategies import clauses, literals

PHP21_PROOF = Unit(1, Unit(2, Red((-1, -2), 1, Red((-2,), 2, CONFLICT))))
PHP21_TEXT = "(unit 1 (unit 2 (red [ -1 -2 ] 1 (red [ -2 ] 2 conflict))))"

dpll_trees = st.recursive(
    st.just(CONFLICT),
    lambda node: st.one_of(
        st.builds(Unit, literals, node),
        st.builds(Elim, clauses, literals, node),
        st.builds(Red, clauses, literals, node),
        st.builds(Split, literals, node, node),
    ),
    max_leaves=20,
)

res_trees = st.recursive(
    st.builds(Sub, st.integers(min_value=1, max_value=9), clauses),
    lambda node: st.builds(Res, literals, node, node, clauses),
    max_leaves=20,
)


def test_serialize_conflict():
    assert serialize_dpll(CONFLICT) == "conflict"


def test_serialize_php_2_1_golden():
    assert serialize_dpll(PHP21_PROOF) == PHP21_TEXT


def test_parse_php_2_1_golden():
    assert parse_dpll(PHP21_TEXT) == PHP21_PROOF


def test_parse_dpll_errors():
    with pytest.raises(ProofParseError):
        parse_dpll("(unit 1 conflict")
    with pytest.raises(ProofParseError):
        parse_dpll("(unit 0 conflict)")
    with pytest.raises(ProofParseError):
        parse_dpll("conflict conflict")
    with pytest.raises(ProofParseError):
        parse_dpll("(red [ 1 2 conflict)")
    with pytest.raises(ProofParseError):
        parse_dpll("")


@given(dpll_trees)
@settings(max_examples=300)
def test_dpll_round_trip(p):
    assert parse_dpll(serialize_dpll(p)) == p


def test_serialize_res_leaf():
    assert serialize_res(Sub(3, (1, -2))) == "1 S 3 1 -2 0\n"


def test_serialize_res_php_2_1():
    proof = Res(1, Res(2, Sub(3, (-1, -2)), Sub(2, (2,)), (-1,)), Sub(1, (1,)), ())
    text = serialize_res(proof)
    lines = text.strip().splitlines()
    assert len(lines) == 5
    assert lines[-1] == "5 R 1 3 4 0"


def test_res_ids_postorder():
    proof = Res(1, Sub(1, (-1,)), Sub(2, (1,)), ())
    lines = serialize_res(proof).strip().splitlines()
    ids = [int(l.split()[0]) for l in lines]
    assert ids == [1, 2, 3]  # children precede the root


def test_parse_res_errors():
    with pytest.raises(ProofParseError):
        parse_res("")
    with pytest.raises(ProofParseError):
        parse_res("1 S 1 1\n")  # missing terminating zero
    with pytest.raises(ProofParseError):
        parse_res("1 R 1 5 6 0\n")  # undefined children
    with pytest.raises(ProofParseError):
        parse_res("x S 1 0\n")


@given(res_trees)
@settings(max_examples=300)
def test_res_round_trip(r):
    assert parse_res(serialize_res(r)) == r
