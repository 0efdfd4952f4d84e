import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g41.algebra import ONE, Multivector, basis, e0
from g41.errors import ExprSyntaxError, InvalidBlade, NonScalarSquare
from g41.expr import BinOp, BladeLit, MAX_DEPTH, evaluate, evaluate_str, format_multivector, parse, to_sexpr

from helpers import exact_multivectors, multivectors

F1 = "0.25 + 0.25*e014 + 0.25*e023 - 0.25*e1234"


def test_simple_product():
    assert parse("e0*e0") == BinOp("*", BladeLit((0,)), BladeLit((0,)))
    assert evaluate_str("e0*e0").equals(-ONE)
    assert evaluate_str("e0 * e0").equals(evaluate_str("e0*e0"))


@pytest.mark.parametrize(
    "src, tree",
    [
        ("e0|e1^e2*e3+e4", "((((e0|e1)^e2)*e3)+e4)"),
        ("e1+e2*e3^e4", "(e1+(e2*(e3^e4)))"),
        ("e1^e2|e3", "((e1^e2)|e3)"),
        ("e1*e2*e3", "((e1*e2)*e3)"),
        ("e1-e2-e3", "((e1-e2)-e3)"),
        ("-e1^e2", "((-e1)^e2)"),
        ("-e12~", "(-(e12~))"),
        ("(e1+e2)*e3", "((e1+e2)*e3)"),
        ("<e1*e2>2 + i", "(<(e1*e2)>2+i)"),
        ("exp(e12)*e1", "(exp(e12)*e1)"),
    ],
)
def test_precedence_golden(src, tree):
    assert to_sexpr(parse(src)) == tree


def test_precedence_law_matches_explicit_grouping():
    assert parse("e0|e1^e2*e3+e4") == parse("(((e0|e1)^e2)*e3)+e4")


def test_idempotent_expression():
    with pytest.raises(ExprSyntaxError) as err:
        parse("(1 + e023)*(1 + e014)/4")
    assert err.value.offset == len("(1 + e023)*(1 + e014)")
    f1 = evaluate_str("0.25*(1+e023)*(1+e014)")
    assert format_multivector(f1) == F1
    assert f1.equals(evaluate_str(F1))


@pytest.mark.parametrize("src", ["e10", "e00", "e5", "e012345", "e31"])
def test_invalid_blades(src):
    with pytest.raises(InvalidBlade) as err:
        parse("1 + " + src)
    assert err.value.offset == 4


def test_invalid_blade_is_a_syntax_error():
    assert issubclass(InvalidBlade, ExprSyntaxError)


@pytest.mark.parametrize(
    "src, offset, expected",
    [
        ("e1 +", 4, "number"),
        ("(e1", 3, ")"),
        ("e1 e2", 3, "end of input"),
        ("<e1>7", 4, "2"),
        ("foo", 0, "exp"),
        ("", 0, "blade"),
        ("é+x", 0, "blade"),
        ("e1+é", 3, "blade"),
    ],
)
def test_error_offsets_and_expected(src, offset, expected):
    with pytest.raises(ExprSyntaxError) as err:
        parse(src)
    assert err.value.offset == offset
    assert expected in err.value.expected


def test_formatting_examples():
    assert format_multivector(evaluate_str("e1*e0")) == "-e01"
    assert format_multivector(Multivector()) == "0"
    assert format_multivector(evaluate_str("0")) == "0"
    assert format_multivector(evaluate_str("3 - 2*e4 + e0*e1*e2*e3*e4")) == "3 - 2*e4 + e01234"
    assert format_multivector(evaluate_str("1/3*e23")) == "1/3*e23"
    assert format_multivector(evaluate_str("e2 + 0.5*e1")) == "0.5*e1 + e2"


def test_literals():
    assert evaluate_str("i").equals(basis("e01234"))
    assert evaluate_str("i*i").equals(-ONE)
    assert evaluate_str("1.5e-3").scalar_part() == 0.0015
    assert evaluate_str("2/4").scalar_part() == Fraction(1, 2)
    assert evaluate_str("2*e1 - 1/3*e23").exact
    assert not evaluate_str("2.0*e1").exact
    assert not evaluate_str("1/3*e23 + exp(0)").exact
    assert evaluate_str("<e1 + 3*e12>2").equals(3 * basis("e12"))
    assert evaluate_str("e12~").equals(-basis("e12"))
    assert evaluate_str("e1|e1").equals(ONE)
    assert evaluate_str("e1^e1").is_zero()
    with pytest.raises(ExprSyntaxError):
        parse("1/0")


def test_exp():
    assert evaluate_str("exp(e12*1.5707963267948966)").isclose(basis("e12"), 1e-12)
    with pytest.raises(NonScalarSquare):
        evaluate_str("exp(e1 + e23)")


@settings(max_examples=200)
@given(multivectors())
def test_round_trip_float(x):
    assert evaluate_str(format_multivector(x)).isclose(x, 1e-12)


@given(exact_multivectors())
def test_round_trip_exact(x):
    assert evaluate_str(format_multivector(x)).equals(x)


@given(st.floats(allow_nan=False, allow_infinity=False, min_value=-1e300, max_value=1e300), st.sampled_from(["", "*e0", "*e24"]))
def test_round_trip_extreme_coefficients(c, tail):
    x = evaluate_str(repr(abs(c)) + tail)
    if c < 0:
        x = -x
    assert evaluate_str(format_multivector(x)).equals(x)


alphabet = st.sampled_from(list("e01234569i+-*^|~()<>/. ") + ["exp", "e12", "1/2", "é", "\x00"])


@settings(max_examples=300)
@given(st.one_of(st.text(max_size=40), st.lists(alphabet, max_size=30).map("".join)))
def test_parser_totality(src):
    try:
        node = parse(src)
    except ExprSyntaxError as err:
        assert 0 <= err.offset <= len(src.encode("utf-8"))
        return
    try:
        evaluate(node)
    except NonScalarSquare:
        pass


def test_deep_nesting_is_rejected_cleanly():
    ok = "(" * MAX_DEPTH + "e1" + ")" * MAX_DEPTH
    assert evaluate_str(ok).equals(basis("e1"))
    for depth in (MAX_DEPTH + 1, 5000):
        with pytest.raises(ExprSyntaxError, match="nested too deeply"):
            parse("(" * depth + "e1" + ")" * depth)
    with pytest.raises(ExprSyntaxError):
        parse("-" * 5000 + "e1")
    with pytest.raises(ExprSyntaxError):
        parse("exp(" * 5000)


def test_long_chains_need_no_recursion():
    n = 20000
    x = evaluate_str("+".join(["e1"] * n) + "+0.0")
    assert x.equals(n * basis("e1"))
    assert to_sexpr(parse("*".join(["e0"] * 4))) == "(((e0*e0)*e0)*e0)"
    assert evaluate_str("*".join(["e0"] * 2001)).equals(e0)
    assert evaluate_str("e1" + "~" * 5000).equals(basis("e1"))


def test_pi_half_rotor_angle():
    # exp of a unit-square-minus-one bivector walks the circle
    got = evaluate_str(f"exp(e12*{math.pi!r})")
    assert got.isclose(-ONE, 1e-12)
