from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trinomial_rings.abgroup import quotient_group
from trinomial_rings.lattice import IntMatrix
from trinomial_rings.polynomial import (
    ANY_DEGREE,
    SparsePoly,
    VariableCountError,
    in_linear_span,
    is_homogeneous,
    monomial_degree,
)

NAMES = ["T_01", "T_11", "T_21"]


def sq(i, n=3, c=1):
    e = [0] * n
    e[i] = 2
    return SparsePoly.monomial(e, c)


@pytest.fixture
def example_degrees():
    G = quotient_group(3, IntMatrix.from_rows([[-2, -2], [2, 0], [0, 2]]))
    return [G.basis_degree(k) for k in range(3)]


def test_arithmetic():
    p = sq(0) - sq(1)
    assert p + SparsePoly.zero(3) == p
    assert (sq(0) - sq(1)) + (sq(1) + sq(2)) == sq(0) + sq(2)
    assert (sq(0) - sq(1) + sq(2)).scale(-1) == -sq(0) + sq(1) - sq(2)
    assert (p - p).is_zero()
    x, y = SparsePoly.variable(2, 0), SparsePoly.variable(2, 1)
    assert (x + y) * (x - y) == x * x - y * y
    assert (x + 1) ** 2 == x * x + 2 * x + 1
    assert SparsePoly(2, {(1, 0): 0}).is_zero()
    with pytest.raises(VariableCountError):
        x + SparsePoly.variable(3, 0)


def test_render():
    g = sq(0) - sq(1) + sq(2)
    assert g.render(NAMES) == "T_01^2 - T_11^2 + T_21^2"
    h = SparsePoly(2, {(0, 1): Fraction(-2, 3), (1, 1): 1, (0, 0): -5})
    assert h.render(["x", "y"]) == "x*y - 2/3*y - 5"
    assert SparsePoly.zero(2).render() == "0"
    assert (-sq(1)).render(NAMES) == "-T_11^2"


def test_monomial_degree(example_degrees):
    d01, d11, _ = example_degrees
    G = d01.group
    assert monomial_degree((0, 0, 0), example_degrees) == G.identity()
    assert monomial_degree((2, 0, 0), example_degrees) == 2 * d01
    assert monomial_degree((0, 2, 0), example_degrees) == monomial_degree((2, 0, 0), example_degrees)
    w = monomial_degree((2, 0, 0), example_degrees)
    assert w.free_part == (2,) or w.free_part == (-2,)
    assert w.torsion_part == (0, 0)


def test_is_homogeneous(example_degrees):
    g = sq(0) - sq(1) + sq(2)
    assert is_homogeneous(g, example_degrees) == 2 * example_degrees[0]
    assert is_homogeneous(SparsePoly.constant(3), example_degrees) == example_degrees[0].group.identity()
    assert is_homogeneous(SparsePoly.zero(3), example_degrees) is ANY_DEGREE
    G = quotient_group(1, IntMatrix(1, 0, ()))
    x = SparsePoly.variable(1, 0)
    assert is_homogeneous(x + x * x, [G.basis_degree(0)]) is None


exponents = st.lists(st.integers(0, 3), min_size=3, max_size=3).map(tuple)
polys = st.dictionaries(exponents, st.integers(-5, 5), max_size=3).map(lambda d: SparsePoly(3, d))


@settings(max_examples=100, deadline=None)
@given(exponents, exponents, st.integers(1, 3), st.integers(-3, 3).filter(bool))
def test_homogeneous_product_degree(e1, e2, k, c):
    G = quotient_group(3, IntMatrix.from_rows([[-2, -2], [2, 0], [0, 2]]))
    degs = [G.basis_degree(i) for i in range(3)]
    # T_01^2 and T_11^2 share a degree, so these binomials are homogeneous
    p = SparsePoly.monomial(e1) * (sq(0) - sq(1).scale(c)) ** k
    q = SparsePoly.monomial(e2, c) * (sq(1) + sq(2))
    assert is_homogeneous(p, degs) is not None
    pq = p * q
    assert is_homogeneous(pq, degs) == is_homogeneous(p, degs) + is_homogeneous(q, degs)


def test_linear_span_examples():
    g012 = sq(0, 4) - sq(1, 4) + sq(2, 4)
    g123 = -sq(1, 4) + 2 * sq(2, 4) + sq(3, 4)
    g013 = -2 * sq(0, 4) + sq(1, 4) + sq(3, 4)
    assert in_linear_span(g012, [g012, g123]) == [1, 0]
    assert in_linear_span(g013, [g012, g123]) == [-2, 1]
    t0cubed = SparsePoly.monomial((3, 0, 0), 1)
    assert in_linear_span(t0cubed, [sq(0) - sq(1) + sq(2)]) is None
    assert in_linear_span(SparsePoly.zero(3), []) == []


@settings(max_examples=100, deadline=None)
@given(st.lists(polys, min_size=1, max_size=3), st.lists(st.integers(-4, 4), min_size=3, max_size=3),
       polys)
def test_linear_span_reconstructs(gens, coeffs, noise):
    target = SparsePoly.zero(3)
    for c, g in zip(coeffs, gens):
        target = target + g.scale(c)
    lam = in_linear_span(target, gens)
    assert lam is not None
    rebuilt = SparsePoly.zero(3)
    for c, g in zip(lam, gens):
        rebuilt = rebuilt + g.scale(c)
    assert rebuilt == target
    other = in_linear_span(target + noise, gens)
    if other is not None:
        rebuilt = SparsePoly.zero(3)
        for c, g in zip(other, gens):
            rebuilt = rebuilt + g.scale(c)
        assert rebuilt == target + noise
