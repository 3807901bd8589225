
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trinomial_rings.abgroup import INFINITE, MixedGroupError, element_order, generates, quotient_group
from trinomial_rings.lattice import DimensionError, IntMatrix, image_contains

EXAMPLE_RELATIONS = IntMatrix.from_rows([[-2, -2], [2, 0], [0, 2]])


@pytest.fixture
def example_group():
    return quotient_group(3, EXAMPLE_RELATIONS)


def test_quotient_invariants(example_group):
    assert example_group.invariants == (1, (2, 2))
    assert quotient_group(2, IntMatrix(2, 0, ())).invariants == (2, ())
    assert quotient_group(1, IntMatrix.from_rows([[3]])).invariants == (0, (3,))
    assert str(example_group) == "Z ⊕ Z/2 ⊕ Z/2"
    with pytest.raises(DimensionError):
        quotient_group(2, EXAMPLE_RELATIONS)


def test_project_example(example_group):
    G = example_group
    e01, e11, e21 = (G.basis_degree(k) for k in range(3))
    assert G.project((0, 0, 0)) == G.identity()
    assert e01 != e11
    assert 2 * e01 == 2 * e11 == 2 * e21
    assert G.project((1 - 2, 0 + 2, 0)) == e01
    diff = e11 - e01
    assert not diff.is_identity() and (diff + diff).is_identity()
    assert element_order(diff) == 2
    assert element_order(e01) == INFINITE
    assert element_order(G.identity()) == 1
    with pytest.raises(DimensionError):
        G.project((1, 0))


def test_torsion_free(example_group):
    assert not example_group.is_torsion_free()
    assert quotient_group(2, IntMatrix(2, 0, ())).is_torsion_free()
    assert not quotient_group(1, IntMatrix.from_rows([[3]])).is_torsion_free()


def test_generates(example_group):
    assert generates(example_group, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert not generates(example_group, [])
    assert not generates(example_group, [(1, 0, 0)])
    Z3 = quotient_group(1, IntMatrix.from_rows([[3]]))
    assert generates(Z3, [(2,)])
    assert not generates(Z3, [(3,)])
    assert generates(quotient_group(1, IntMatrix.from_rows([[1]])), [])


def test_mixed_groups(example_group):
    other = quotient_group(1, IntMatrix.from_rows([[3]]))
    with pytest.raises(MixedGroupError):
        example_group.identity() + other.identity()


def relation_matrices():
    return st.integers(1, 4).flatmap(lambda n: st.integers(0, 4).flatmap(
        lambda k: st.lists(st.lists(st.integers(-6, 6), min_size=k, max_size=k),
                           min_size=n, max_size=n).map(lambda rows: IntMatrix.from_rows(rows, cols=k))))


@settings(max_examples=120, deadline=None)
@given(relation_matrices(), st.randoms(use_true_random=False))
def test_group_properties(R, rnd):
    n = R.rows
    G = quotient_group(n, R)
    assert G.rank + len(G.torsion) <= n
    assert all(d >= 2 for d in G.torsion)
    assert all(b % a == 0 for a, b in zip(G.torsion, G.torsion[1:]))
    for _ in range(5):
        a = [rnd.randint(-9, 9) for _ in range(n)]
        b = [rnd.randint(-9, 9) for _ in range(n)]
        assert G.project(a) + G.project(b) == G.project([x + y for x, y in zip(a, b)])
        assert G.project(a).is_identity() == (image_contains(R, a) is not None)
        assert all(0 <= t < d for t, d in zip(G.project(a).torsion_part, G.torsion))
        if R.cols:
            col = R.column(rnd.randrange(R.cols))
            assert G.project([x + y for x, y in zip(a, col)]) == G.project(a)


@settings(max_examples=60, deadline=None)
@given(relation_matrices(), st.randoms(use_true_random=False))
def test_isomorphic_presentations(R, rnd):
    """Changing the presentation by unimodular moves keeps invariants and transports addition."""
    n = R.rows
    # random unimodular W on the ambient lattice: product of elementary moves
    W = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(6):
        if n < 2:
            break
        i, j = rnd.sample(range(n), 2)
        q = rnd.randint(-3, 3)
        W[i] = [a + q * b for a, b in zip(W[i], W[j])]
    W = IntMatrix.from_rows(W)
    G, H = quotient_group(n, R), quotient_group(n, W @ R)
    assert G.invariants == H.invariants
    for _ in range(5):
        a = [rnd.randint(-9, 9) for _ in range(n)]
        b = [rnd.randint(-9, 9) for _ in range(n)]
        # a -> W a induces G -> H; equality and sums must be preserved
        same = G.project(a) == G.project(b)
        assert same == (H.project(W.apply(a)) == H.project(W.apply(b)))
        assert element_order(G.project(a)) == element_order(H.project(W.apply(a)))


def test_element_order_lcm():
    G = quotient_group(2, IntMatrix.from_rows([[4, 0], [0, 6]]))
    assert G.torsion == (2, 12)
    orders = {element_order(G.project((a, b))) for a in range(4) for b in range(6)}
    assert max(orders) == 12
    assert orders <= {1, 2, 3, 4, 6, 12}
    for a in range(4):
        for b in range(6):
            g = G.project((a, b))
            k = element_order(g)
            assert (k * g).is_identity()
            assert all(not (j * g).is_identity() for j in range(1, k))
