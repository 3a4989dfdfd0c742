"""
Tests for the polynomial algebra on trees.
"""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.config import configure, reset_settings
from src.dendriform import (
    ONE,
    X,
    ZERO,
    Polynomial,
    add,
    compose,
    mul,
    poly_of_int,
    prec,
    render_polynomial,
    scale,
    succ,
)
from src.errors import CapExceededError, DegreeError, DendriformUnitError
from src.trees import LEAF, parse, trees_of_degree

AB = parse("((. .) .)")
BA = parse("(. (. .))")


@pytest.fixture(autouse=True)
def fresh_settings():
    reset_settings()
    yield
    reset_settings()


def mono(text, coeff=1):
    return Polynomial.monomial(parse(text), coeff)


scalar_free = st.lists(
    st.tuples(
        st.integers(1, 2).flatmap(lambda d: st.sampled_from(trees_of_degree(d))),
        st.fractions(min_value=-3, max_value=3, max_denominator=4),
    ),
    min_size=1,
    max_size=3,
).map(Polynomial.from_terms)


def test_terms_are_collected_and_sorted():
    p = Polynomial.from_terms([(AB, 2), (BA, 1), (AB, -2), (LEAF, 3)])
    assert p.terms == ((LEAF, Fraction(3)), (BA, Fraction(1)))
    assert p.scalar_part == 3
    assert p.positive_part == Polynomial.monomial(BA)
    assert p.coefficient(AB) == 0
    assert p.support == frozenset({LEAF, BA})
    assert Polynomial.from_terms({AB: 0}).is_zero


def test_poly_of_int():
    assert poly_of_int(0) == ONE
    assert poly_of_int(1) == X
    assert poly_of_int(2) == Polynomial.from_terms([(AB, 1), (BA, 1)])
    assert len(poly_of_int(4)) == 14
    with pytest.raises(DegreeError):
        poly_of_int(-1)
    configure(enum_cap=3)
    with pytest.raises(CapExceededError):
        poly_of_int(4)


def test_halves_of_x_times_x():
    assert prec(X, X) == Polynomial.monomial(BA)
    assert succ(X, X) == Polynomial.monomial(AB)
    assert mul(X, X) == poly_of_int(2)


def test_unit_rules():
    p = mono("((. .) (. .))", 2) + X
    assert prec(p, ONE) == p
    assert succ(ONE, p) == p
    assert prec(ONE, p) == ZERO
    assert succ(p, ONE) == ZERO
    assert mul(ONE, p) == p == mul(p, ONE)
    assert mul(ONE, ONE) == ONE


def test_split_of_one_times_one_is_undefined():
    with pytest.raises(DendriformUnitError):
        prec(ONE, ONE)
    with pytest.raises(DendriformUnitError):
        succ(X + ONE, scale(2, ONE))


@pytest.mark.parametrize("n, m", [(n, m) for n in range(5) for m in range(5) if n + m <= 6])
def test_powers_of_x_multiply(n, m):
    assert mul(poly_of_int(n), poly_of_int(m)) == poly_of_int(n + m)


def test_linearity():
    p = scale(Fraction(1, 2), X) - mono("(. (. .))", 3)
    q = mono("((. .) .)", -1) + X
    assert mul(add(p, q), X) == add(mul(p, X), mul(q, X))
    assert prec(scale(3, p), q) == scale(3, prec(p, q))
    assert p - p == ZERO
    assert -(-p) == p


def test_compose_examples():
    assert compose(X, X) == X
    assert compose(ONE, X) == ONE
    assert compose(X, scale(2, X)) == scale(2, X)
    assert compose(Polynomial.monomial(BA), scale(2, X)) == scale(4, Polynomial.monomial(BA))
    assert compose(poly_of_int(2), poly_of_int(2)) == poly_of_int(4)
    assert compose(ZERO, X) == ZERO


def test_compose_with_scalar_part_is_undefined():
    with pytest.raises(DendriformUnitError):
        compose(X, X + ONE)


def test_compose_is_associative_on_monomials():
    p, q, r = poly_of_int(2), mono("((. .) .)"), mono("(. (. .))")
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


def test_text_rendering():
    p = Polynomial.from_terms([(LEAF, 1), (parse("(. .)"), 2), (AB, Fraction(-1, 2))])
    assert render_polynomial(p) == "1 + 2*x^{(. .)} - 1/2*x^{((. .) .)}"
    assert str(ZERO) == "0"
    assert str(scale(-1, X)) == "-1*x^{(. .)}"
    assert repr(X) == "Polynomial('1*x^{(. .)}')"


def test_json_roundtrip():
    p = Polynomial.from_terms([(LEAF, Fraction(2, 3)), (AB, -4)])
    data = json.loads(json.dumps(p.to_dict()))
    assert data["terms"][0] == {"tree": ".", "coefficient": "2/3"}
    assert Polynomial.from_dict(data) == p


@settings(max_examples=60, deadline=None)
@given(scalar_free, scalar_free, scalar_free)
def test_dendriform_axioms(p, q, r):
    assert prec(prec(p, q), r) == prec(p, mul(q, r))
    assert prec(succ(p, q), r) == succ(p, prec(q, r))
    assert succ(mul(p, q), r) == succ(p, succ(q, r))
    assert mul(p, q) == add(prec(p, q), succ(p, q))
