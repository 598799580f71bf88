from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from flagmorph.errors import DomainError, WeightMismatchError
from flagmorph.polyring import (DEFAULT_RING, Polynomial, Ring, arith, evaluate,
                                series_invert, truncate)

R = DEFAULT_RING
X1, X2, X3 = R.var(1), R.var(2), R.var(3)


def test_difference_of_squares():
    assert arith(X1 + X2, X1 - X2, "mul") == X1 ** 2 - X2 ** 2
    assert str((X1 + X2) * (X1 - X2)) == "X1^2 - X2^2"


def test_zero_absorbs():
    p = 3 * X1 ** 2 * X2 - 7
    assert arith(p, R.zero, "mul").is_zero()
    assert str(p * 0) == "0"


def test_trinomial_square_against_multinomial_coefficients():
    sq = (X1 + X2 + X3) ** 2
    expected = {}
    for alpha in product(range(3), repeat=3):
        if sum(alpha) == 2:
            coef = factorial(2) // (factorial(alpha[0]) * factorial(alpha[1]) * factorial(alpha[2]))
            mono = tuple((v + 1, e) for v, e in enumerate(alpha) if e)
            expected[mono] = coef
    assert dict(sq.terms) == expected
    assert len(sq) == 6
    assert sorted(c for c in sq.terms.values()) == [1, 1, 1, 2, 2, 2]


def test_add_sub_cancel_to_canonical_zero():
    p = X1 * X2 + 5
    assert (p - p).terms == {}
    assert p - p == 0
    assert Polynomial({((1, 1),): 0}) == R.zero


def test_unknown_op_rejected():
    with pytest.raises(ValueError):
        arith(X1, X2, "div")


def test_weight_mismatch_rejected():
    W = Ring(weights={1: 2})
    with pytest.raises(WeightMismatchError):
        arith(X1, W.var(1), "add")
    with pytest.raises(WeightMismatchError):
        X1 * W.var(2)


def test_ring_normalizes_unit_weights():
    assert Ring(weights={1: 1, 2: 1}) == Ring()
    assert Ring(weights={2: 3, 1: 2}) == Ring(weights=((1, 2), (2, 3)))
    with pytest.raises(ValueError):
        Ring(weights={1: 0})


def test_eval_examples():
    assert evaluate(X1 ** 2 + X1 * X2 + X2 ** 2, {1: 1, 2: 1}) == 3
    h2 = X1 ** 2 + X1 * X2 + X2 ** 2
    assert evaluate(h2, {1: 1, 2: -1}) == 1
    p = 4 * X1 ** 3 - X2 * X3 + 11
    assert evaluate(p, {1: 0, 2: 0, 3: 0}) == p.constant_term() == 11


def test_eval_missing_variable_rejected():
    with pytest.raises(DomainError):
        evaluate(X1 + X2, {1: 3})


def test_eval_is_exact_for_large_values():
    p = X1 ** 5 * X2 ** 3
    assert p.evaluate({1: 10 ** 12, 2: -(10 ** 9)}) == -(10 ** 87)


def test_truncate_examples():
    assert truncate(1 + X1 + X1 ** 2, 1) == 1 + X1
    p = 1 + X1 * X2 ** 3 - X3
    assert truncate(p, 10 ** 6) == p
    h3 = sum((X1 ** a * X2 ** (3 - a) for a in range(4)), R.zero)
    assert truncate(h3, 2).is_zero()


def test_truncate_uses_weights():
    W = Ring(weights={1: 1, 2: 2, 3: 3})
    a, b, c = W.var(1), W.var(2), W.var(3)
    p = a + b + c + a * b
    assert truncate(p, 2) == a + b
    assert p.degree() == 3
    assert (a * b).degree() == 3


def test_series_invert_geometric():
    assert series_invert(1 - X1, 3) == 1 + X1 + X1 ** 2 + X1 ** 3
    assert series_invert(R.one, 5) == 1


def test_series_invert_product_of_geometric_series():
    # product of two geometric series: every X1^a X2^b with a + b <= 2 once
    expected = sum((X1 ** a * X2 ** b for a in range(3) for b in range(3) if a + b <= 2), R.zero)
    assert series_invert((1 - X1) * (1 - X2), 2) == expected


def test_series_invert_negative_unit():
    q = series_invert(-1 + X1, 4)
    assert truncate(q * (-1 + X1), 4) == 1
    assert q.constant_term() == -1


def test_series_invert_rejects_non_unit():
    with pytest.raises(DomainError, match="constant term"):
        series_invert(2 + X1, 3)
    with pytest.raises(DomainError):
        series_invert(X1, 3)


def test_text_form_is_deterministic():
    p = X2 ** 2 - 3 * X1 * X2 + X1 ** 2 * X3 - 1
    assert p.to_text() == "X1^2*X3 - 3*X1*X2 + X2^2 - 1"
    q = Polynomial(dict(reversed(list(p.terms.items()))))
    assert q.to_text() == p.to_text()
    assert (-X1).to_text() == "-X1"
    named = Ring(names={0: "a"})
    assert str(named.var(0) * 2 + 1) == "2*a + 1"


def test_coefficients_must_be_integers():
    with pytest.raises(TypeError):
        Polynomial({(): 1.5})


# properties ---------------------------------------------------------------------

VARS = range(1, 13)


@st.composite
def monomials(draw, max_degree=6):
    budget = draw(st.integers(0, max_degree))
    exps = {}
    while budget:
        v = draw(st.sampled_from(VARS))
        e = draw(st.integers(1, budget))
        exps[v] = exps.get(v, 0) + e
        budget -= e
    return tuple(sorted(exps.items()))


polys = st.dictionaries(monomials(), st.integers(-10 ** 20, 10 ** 20), max_size=6).map(Polynomial)
points = st.fixed_dictionaries({v: st.integers(-5, 5) for v in VARS})


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == R.zero
    assert p * 1 == p and p + 0 == p


@settings(max_examples=80, deadline=None)
@given(polys, polys, points)
def test_eval_is_a_ring_homomorphism(p, q, x):
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)
    assert (p - q).evaluate(x) == p.evaluate(x) - q.evaluate(x)


@settings(max_examples=60, deadline=None)
@given(polys, polys, st.integers(0, 8))
def test_truncate_idempotent_and_linear(p, q, d):
    assert truncate(truncate(p, d), d) == truncate(p, d)
    assert truncate(p + q, d) == truncate(p, d) + truncate(q, d)
    assert truncate(p.scale(-3), d) == truncate(p, d).scale(-3)


@settings(max_examples=60, deadline=None)
@given(polys, st.sampled_from([1, -1]), st.integers(0, 6))
def test_series_invert_is_an_inverse(p, unit, d):
    p = p - p.constant_term() + unit
    q = series_invert(p, d)
    assert truncate(q * p, d) == 1
    assert q.degree() <= d


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7))
def test_series_invert_weighted(d):
    W = Ring(weights={0: 1, 1: 2, 2: 3})
    p = 1 - W.var(0) + W.var(1) - W.var(2) * 5
    assert truncate(series_invert(p, d) * p, d) == W.one
