"""Expression parsing, elaboration, positions, sessions, round trips."""

import random

import pytest

from trikernel import (
    BudgetExceededError,
    ElaborationError,
    FrontendError,
    GradingError,
    TriSyntaxError,
)
from trikernel.frontend import (
    Session,
    parse_expression,
    parse_graded_gens,
    parse_point,
    parse_poly,
    parse_poly_list,
    parse_ring_descriptor,
    tokenize,
)
from conftest import random_tri_poly


def ring(desc="QQ, n=2"):
    return parse_ring_descriptor(desc)


def test_tokenizer_positions():
    toks = tokenize("x1 +\n  23*")
    assert [(t.kind, t.text, t.line, t.column) for t in toks] == [
        ("ident", "x1", 1, 1),
        ("op", "+", 1, 4),
        ("num", "23", 2, 3),
        ("op", "*", 2, 5),
        ("end", "", 2, 6),
    ]
    with pytest.raises(TriSyntaxError) as err:
        tokenize("x1 $ x2")
    assert err.value.line == 1 and err.value.column == 4
    assert "(line 1, column 4)" in str(err.value)


def test_parse_error_positions():
    for text, line, column in [
        ("x1 +", 1, 5),
        ("(x1", 1, 4),
        ("x1 ^ 0", 1, 6),
        ("x1 ^ x2", 1, 6),
        ("2/", 1, 3),
        (")", 1, 1),
        ("x1 x2", 1, 4),
        ("x1 + + x2", 1, 6),
    ]:
        with pytest.raises(TriSyntaxError) as err:
            parse_expression(text)
        assert (err.value.line, err.value.column) == (line, column), text


def test_deep_nesting_is_rejected_not_crashed():
    with pytest.raises(TriSyntaxError):
        parse_expression("(" * 500 + "x1" + ")" * 500)


def test_elaboration_examples():
    R = ring()
    f = parse_poly("u1 # v1 + 2# * w1", R)
    u1, v1, w1 = R.variable("u1"), R.variable("v1"), R.variable("w1")
    two_sharp = R.tri(odd=R.odd_ring.constant(R.model.base.from_int(2)))
    assert f == u1.sharp(v1) + two_sharp.sharp(w1)
    assert str(f) == "u1*v1 + 2#*w1"

    assert parse_poly("x1 * v1", R) == R.variable("x1") * v1
    assert parse_poly("1#", R) == R.one_sharp()
    assert parse_poly("-x1 + 2", R) == R.one() + R.one() - R.variable("x1")
    assert parse_poly("(x1 + v1)^2", R) == (R.variable("x1") + v1) ** 2
    assert parse_poly("v1^3", R) == v1.sharp_power(3)
    assert parse_poly("1/2", R).even.constant_coeff() == 0.5


def test_elaboration_grading_errors():
    R = ring()
    with pytest.raises(GradingError) as err:
        parse_poly("x1 # v1", R)
    assert (err.value.line, err.value.column) == (1, 4)
    with pytest.raises(GradingError):
        parse_poly("(x1 + v1) # v1", R)
    with pytest.raises(GradingError):
        parse_poly("v1 # 2", R)


def test_elaboration_name_errors():
    R = ring()
    for text, column in [("x3", 1), ("q1 + 1", 1), ("x1 + zz", 6)]:
        with pytest.raises(ElaborationError) as err:
            parse_poly(text, R)
        assert err.value.column == column
    with pytest.raises(ElaborationError):
        parse_poly("g", R)  # no generator literal over QQ
    with pytest.raises(ElaborationError):
        parse_poly("1/0", ring("Fp:5, n=1"))


def test_generator_literal_over_quadratic_field():
    R = ring("Fp2:3, n=1")
    g = R.model.base.gen
    assert parse_poly("g", R).even.constant_coeff() == g
    assert parse_poly("g#", R).odd.constant_coeff() == g
    assert parse_poly("g^2", R).even.constant_coeff() == g * g
    assert str(parse_poly("(g + 1) * u1", R)) == "(g + 1)*u1"


def test_named_values_in_expressions():
    R = ring()
    session = Session()
    session.execute("ring QQ, n=2")
    session.execute("let F = x1 + v1")
    out = session.execute("print F^2 - x1^2")
    assert out == ["u1*v1 + v1*w1"]
    names = session.values
    assert parse_poly("F * F", session.ring, names) == names["F"] ** 2
    with pytest.raises(ElaborationError):
        parse_poly("F", R, {})


def test_poly_list_and_graded_gens():
    R = ring("Fp:3, n=2")
    polys = parse_poly_list("x1, x2^2, v1", R)
    assert len(polys) == 3
    assert parse_poly_list("   ", R) == []
    evens, odds = parse_graded_gens("x1, x2 ; v1", R)
    assert [str(p) for p in evens] == ["x1", "x2"]
    assert [str(p) for p in odds] == ["v1"]
    assert parse_graded_gens("x1", R)[1] == []
    assert parse_graded_gens(";", R) == ([], [])
    assert parse_graded_gens("", R) == ([], [])
    with pytest.raises(GradingError):
        parse_graded_gens("v1 ; x1", R)
    with pytest.raises(GradingError):
        parse_graded_gens("x1 + v1 ; ", R)


def test_parse_point():
    R = ring("Fp:3, n=2")
    pt = parse_point("(1 + 2#, 0)", R)
    assert pt.coords[0].even == 1 and pt.coords[0].odd == 2
    assert pt.coords[1].is_zero
    with pytest.raises(ElaborationError):
        parse_point("(1)", R)
    with pytest.raises(ElaborationError):
        parse_point("(x1, 0)", R)
    with pytest.raises(TriSyntaxError):
        parse_point("1, 0", R)
    tw = ring("Fp2:3, n=1")
    pt = parse_point("(g + g#)", tw)
    assert pt.coords[0].even == tw.model.base.gen


def test_ring_descriptor_parsing():
    R = ring("Fp2:3, n=2, order=lex")
    assert R.model.kind == "twisted"
    assert R.n == 2
    assert str(R.even_ring.order) == "lex"
    assert ring("QQ, n=1").model.kind == "symmetric"
    for bad in [
        "Fp:4, n=1",
        "QQ",
        "QQ, n=0",
        "QQ, n=x",
        "QQ, n=1, order=weird",
        "Zp:3, n=1",
        "QQ, n=1, order=lex, extra=1",
    ]:
        with pytest.raises(TriSyntaxError):
            parse_ring_descriptor(bad)


def test_session_script_flow():
    script = """
// a small session
ring Fp:3, n=2, order=grevlex

let F = x1 + v1
print F^2
ideal J = x1 ; v1
member J x1^2
member J x2
radical-member J x1
power J x1 bound=3
eval F at (1 + 1#, 2)
gb odd J
close J
variety J
"""
    session = Session()
    out = session.run_script(script)
    assert out == [
        "x1^2 + u1*v1 + v1*w1",
        "true",
        "false",
        "true",
        "1",
        "1 + 1#",
        "w1",
        "v1",
        "u1",
        "even: x1",
        "odd: v1",
        "odd: u1",
        "odd: w1",
        "v0_count: 27",
        "v1_count: 9",
    ]
    # same script, same output
    assert Session().run_script(script) == out


def test_session_errors():
    session = Session()
    with pytest.raises(ElaborationError):
        session.execute("print x1")  # no ring yet
    session.execute("ring Fp:3, n=1")
    with pytest.raises(TriSyntaxError):
        session.execute("bogus x1")
    with pytest.raises(TriSyntaxError):
        session.execute("let x1 = 2")
    with pytest.raises(TriSyntaxError):
        session.execute("let at = 2")
    with pytest.raises(ElaborationError):
        session.execute("member NOPE x1")
    with pytest.raises(TriSyntaxError):
        session.execute("gb sideways J")
    session.execute("ideal J = x1 ;")
    with pytest.raises(TriSyntaxError):
        session.execute("eval x1 on (1)")
    # line numbers propagate into script errors
    with pytest.raises(TriSyntaxError) as err:
        Session().run_script("ring Fp:3, n=1\nprint x1 $")
    assert err.value.line == 2


def test_session_budget():
    session = Session(budget=5)
    session.execute("ring Fp:3, n=2")
    session.execute("ideal J = x1 ;")
    with pytest.raises(BudgetExceededError):
        session.execute("variety J")


def test_session_repr_command():
    session = Session()
    session.execute("ring QQ, n=2")
    out = session.execute("repr x1*x2^2 - x1 in x1*x2 - 1, x2^2 - 1")
    assert [piece.startswith(f"h{i + 1} = ") for i, piece in enumerate(out)] == [True, True]
    # the printed cofactors must reassemble the element exactly
    R = session.ring
    gens = [parse_poly("x1*x2 - 1", R), parse_poly("x2^2 - 1", R)]
    cofs = [parse_poly(piece.split(" = ", 1)[1], R) for piece in out]
    total = sum((h * g for h, g in zip(cofs, gens)), R.zero())
    assert total == parse_poly("x1*x2^2 - x1", R)
    out = session.execute("repr x1 in x1*x2 - 1, x2^2 - 1")
    assert out == ["not a member"]
    with pytest.raises(ElaborationError):
        session.execute("repr x1 + v1 in x1")


def test_round_trip_random_all_models():
    descriptors = ["QQ, n=1", "QQ, n=2", "Fp:3, n=2", "Fp:5, n=1", "Fp2:3, n=2", "Fp2:2, n=1"]
    rng = random.Random(99)
    for desc in descriptors:
        R = parse_ring_descriptor(desc)
        for _ in range(40):
            f = random_tri_poly(R, rng, max_degree=3, max_terms=4)
            text = str(f)
            assert parse_poly(text, R) == f, (desc, text)
            assert str(parse_poly(text, R)) == text


def test_fuzz_smoke():
    rng = random.Random(1234)
    alphabet = "x1 v2 u w + - * / ^ # ( ) 0 3 g , ; girl 1# 2"
    pieces = alphabet.split(" ")
    R = ring("Fp2:3, n=2")
    for _ in range(300):
        text = " ".join(rng.choice(pieces) for _ in range(rng.randint(1, 12)))
        try:
            parse_poly(text, R)
        except FrontendError:
            pass
