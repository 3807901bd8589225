import itertools

import pytest

from oracles import determinantal_invariants, lone_linear_blocks, random_triples
from trinomial_rings.abgroup import INFINITE
from trinomial_rings.coxring import (
    DowngradeData,
    InadmissibleError,
    block_matrix,
    build,
    check_admissible,
    degrees_pairwise_distinct,
    isotropy_order,
    nonassociation_certificate,
    positive_kernel_vector,
    surface_recipe,
)
from trinomial_rings.lattice import IntMatrix
from trinomial_rings.polynomial import is_homogeneous, monomial_degree
from trinomial_rings.trinomial import TripleData, presentation, standard_configuration

EXAMPLE = TripleData.make([(1, 0), (1, 1), (0, 1)], (1, 1, 1), ((2,), (2,), (2,)))


@pytest.fixture
def example_cox():
    base = presentation(EXAMPLE)
    return build(base, surface_recipe(base))


def test_surface_recipe_example(example_cox):
    assert example_cox.data.d.tolist() == [[1, 1, 1]]
    assert example_cox.data.d_prime.tolist() == [[1, -1]]
    assert example_cox.dotP.tolist() == [[-2, 2, 0, 0, 0], [-2, 0, 2, 0, 0], [1, 1, 1, 1, -1]]


@pytest.mark.parametrize("L, expected", [
    (((2, 2), (3,), (1,)), [1, 3, 1, 1]),
    (((1,), (1,), (1,)), [1, 1, 1]),
    (((3, 2, 6), (4,), (5,)), [1, 1, 5, 1, 1]),
])
def test_surface_recipe_rows(L, expected):
    t = TripleData.make(standard_configuration(2), tuple(map(len, L)), L)
    data = surface_recipe(presentation(t))
    assert list(data.d.row(0)) == expected


def test_example_cox_group(example_cox):
    rows = example_cox.dotP.transpose().tolist()
    assert determinantal_invariants(rows, 3) == (1, 2, 2)
    assert example_cox.Kdot.invariants == (2, (2, 2))
    assert degrees_pairwise_distinct(example_cox)
    assert nonassociation_certificate(example_cox) == "certified"
    base = example_cox.base
    assert all(a != b for a, b in itertools.combinations(base.degrees, 2))


def test_isotropy(example_cox):
    orders = [isotropy_order(example_cox, c) for c in range(5)]
    assert orders == [2, 2, 2, INFINITE, INFINITE]


def test_isotropy_rejects_non_primitive(example_cox):
    from dataclasses import replace
    bad = replace(example_cox, dotP=IntMatrix.from_rows([[2, 2], [0, 2], [2, 4]]))
    with pytest.raises(ValueError):
        isotropy_order(bad, 0)


def test_check_admissible_failures():
    P = presentation(EXAMPLE).P
    dup = block_matrix(P, IntMatrix.from_rows([[1, 1, 1]]), IntMatrix.from_rows([[1, 1]]))
    rep = check_admissible(dup, 2, 1, 3, 2)
    assert not rep.distinct and rep.duplicate_columns == ((3, 4),) and not rep.admissible
    upper = block_matrix(P, IntMatrix.from_rows([[1, 1, 1]]), IntMatrix.from_rows([[1]]))
    rep = check_admissible(upper, 2, 1, 3, 1)
    assert rep.primitive and rep.distinct and not rep.full_cone
    nonprim = block_matrix(P, IntMatrix.from_rows([[2, 1, 1]]), IntMatrix.from_rows([[1, -1]]))
    rep = check_admissible(nonprim, 2, 1, 3, 2)
    assert rep.non_primitive_columns == (0,) and not rep.admissible
    with pytest.raises(ValueError):
        check_admissible(dup, 2, 2, 3, 2)


def test_s_bound():
    base = presentation(EXAMPLE)
    data = DowngradeData(0, 0, IntMatrix(0, 3, ()), IntMatrix(0, 0, ()))
    with pytest.raises(InadmissibleError) as info:
        build(base, data)
    assert not info.value.report.s_in_bounds
    # s = n + m - r is out of range even for an otherwise fine matrix
    data = DowngradeData.make([[1, 1, 1]], [], m=0)
    rep = check_admissible(block_matrix(base.P, data.d, data.d_prime), 2, 1, 3, 0)
    assert not rep.s_in_bounds


def test_r1_build():
    t = TripleData.make([(1, 0), (0, 1)], (1, 2), ((2,), (1, 3)))
    base = presentation(t)
    assert base.relations == ()
    cox = build(base, surface_recipe(base))
    assert cox.dotP.tolist() == [[-2, 1, 3, 0, 0], [1, 1, 4, 1, -1]]
    assert [isotropy_order(cox, c) for c in range(5)] == [2, 1, 3, INFINITE, INFINITE]
    assert cox.Kdot.rank == 5 - 2


def test_positive_kernel_vector(example_cox):
    x = positive_kernel_vector(example_cox.dotP)
    assert x is not None and all(v > 0 for v in x)
    assert positive_kernel_vector(IntMatrix.from_rows([[1, 1]])) is None


def test_explicit_non_surface_build():
    base = presentation(EXAMPLE)
    data = DowngradeData.make([[1, 0, 1], [0, 1, 1]], [[1, -1], [-1, 0]])
    cox = build(base, data)
    assert cox.Kdot.rank == 3 + 2 - (2 + 2)
    for g in base.relations:
        assert is_homogeneous(g, cox.T_degrees) is not None


def test_coarsening_consistency():
    for t in random_triples(11, 25, r_min=2):
        base = presentation(t)
        cox = build(base, surface_recipe(base))
        for g in base.relations:
            assert is_homogeneous(g, cox.T_degrees) is not None
        # equal base degree of monomials implies equal coarsened degree
        for e in itertools.islice(itertools.product(range(3), repeat=base.n_total), 40):
            for f in itertools.islice(itertools.product(range(3), repeat=base.n_total), 0, 40, 7):
                if monomial_degree(e, base.degrees) == monomial_degree(f, base.degrees):
                    ext = lambda v: tuple(v) + (0, 0)
                    assert monomial_degree(ext(e), cox.degrees) == monomial_degree(ext(f), cox.degrees)


def test_degree_collisions_only_from_two_linear_blocks():
    """Surface builds: degrees collide exactly when two blocks are a single linear variable."""
    seen = set()
    for t in random_triples(12, 80, n_max=2, l_max=2):
        base = presentation(t)
        cox = build(base, surface_recipe(base))
        distinct = degrees_pairwise_distinct(cox)
        assert distinct == (lone_linear_blocks(t) < 2)
        seen.add(distinct)
        if not distinct:
            assert nonassociation_certificate(cox) == "inconclusive"
    assert seen == {True, False}
