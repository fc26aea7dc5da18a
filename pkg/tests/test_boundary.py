import pytest

from gwcalc import (
    BoundaryDatum,
    builtin_model,
    d_sum,
    enumerate_boundary,
    intersection_counts,
    nd_plane,
)
from gwcalc.engine import TableDepthError
from gwcalc.series import binomial_z


def brute_force_boundary(n, beta):
    """Oracle: all ordered (side, split) pairs, filtered, deduplicated."""
    splits = [()]
    for entry in beta:
        splits = [prefix + (x,) for prefix in splits for x in range(entry + 1)]
    found = set()
    for mask in range(1 << n):
        side_a = frozenset(x for x in range(1, n + 1) if mask >> (x - 1) & 1)
        side_b = frozenset(range(1, n + 1)) - side_a
        for beta1 in splits:
            beta2 = tuple(x - y for x, y in zip(beta, beta1))
            datum = BoundaryDatum(side_a, side_b, beta1, beta2)
            if datum.is_valid(n, beta):
                found.add(datum.unordered())
    return found


def test_four_points_no_curve_class():
    data = enumerate_boundary(4, (0,))
    assert len(data) == 3
    sides = {frozenset((tuple(sorted(x.a)), tuple(sorted(x.b)))) for x in data}
    assert sides == {
        frozenset(((1, 2), (3, 4))),
        frozenset(((1, 3), (2, 4))),
        frozenset(((1, 4), (2, 3))),
    }


def test_no_markings_degree_five():
    data = enumerate_boundary(0, (5,))
    assert [(x.beta1, x.beta2) for x in data] == [((1,), (4,)), ((2,), (3,))]


def test_no_markings_even_degree_counts_halves_once():
    data = enumerate_boundary(0, (4,))
    assert [(x.beta1, x.beta2) for x in data] == [((1,), (3,)), ((2,), (2,))]


def test_one_marking_degree_two():
    data = enumerate_boundary(1, (2,))
    assert len(data) == 1
    datum = data[0]
    assert datum.a == frozenset({1}) and datum.b == frozenset()
    assert datum.beta1 == (1,) and datum.beta2 == (1,)


def test_every_datum_satisfies_conditions():
    for n in range(0, 6):
        for d in range(0, 4):
            for datum in enumerate_boundary(n, (d,)):
                assert datum.is_valid(n, (d,))


def test_no_duplicate_data():
    for n in range(0, 6):
        for d in range(0, 4):
            data = enumerate_boundary(n, (d,))
            assert len({x.unordered() for x in data}) == len(data)


@pytest.mark.parametrize("model_name,d_top", [("p2", 4), ("p3", 3)])
def test_enumeration_matches_brute_force(model_name, d_top):
    model = builtin_model(model_name)
    for n in range(0, 9):
        for d in range(0, d_top + 1):
            beta = (d,)
            assert model.c1_degree(beta) <= 12
            fast = {x.unordered() for x in enumerate_boundary(n, beta)}
            assert fast == brute_force_boundary(n, beta)


def test_enumeration_two_parameter_classes():
    for n in range(0, 5):
        for beta in [(1, 0), (1, 1), (2, 1)]:
            fast = {x.unordered() for x in enumerate_boundary(n, beta)}
            assert fast == brute_force_boundary(n, beta)


def test_d_sum_triples_partition_two_two_splits():
    for beta in [(0,), (1,), (2,)]:
        data = enumerate_boundary(4, beta)
        two_two = {x.unordered() for x in data if len(x.a) == 2}
        collected = set()
        total = 0
        for j, k, l in ((2, 3, 4), (3, 2, 4), (4, 2, 3)):
            part = {x.unordered() for x in d_sum(4, beta, 1, j, k, l)}
            assert not (collected & part)
            collected |= part
            total += len(part)
        assert collected == two_two
        assert total == len(two_two)


def test_d_sum_membership():
    for datum in d_sum(6, (2,), 1, 2, 3, 4):
        assert {1, 2} <= set(datum.a)
        assert {3, 4} <= set(datum.b)


def test_d_sum_contracted_datum_is_unique():
    data = d_sum(6, (2,), 1, 2, 3, 4)
    contracted = [
        x for x in data if x.beta1 == (0,) and x.a == frozenset({1, 2})
    ]
    assert len(contracted) == 1


def test_d_sum_partition_counts_match_binomials():
    # the itemized partition counts of the incidence-count formula
    for d in (2, 3):
        n = 3 * d
        data = d_sum(n, (d,), 1, 2, 3, 4)
        for d1 in range(1, d):
            matching = [
                x for x in data if x.beta1 == (d1,) and len(x.a) == 3 * d1 + 1
            ]
            assert len(matching) == binomial_z(3 * d - 4, 3 * d1 - 1)


def test_d_sum_requires_distinct_markings():
    with pytest.raises(ValueError):
        d_sum(6, (2,), 1, 1, 3, 4)
    with pytest.raises(ValueError):
        d_sum(3, (2,), 1, 2, 3, 4)


def test_intersection_counts_degree_two(plane_table):
    counts = intersection_counts(2, plane_table)
    n2 = plane_table.get((2,), (5,))
    assert counts.lhs.total == n2 + 1
    assert counts.rhs.total == 2
    assert counts.balanced


def test_intersection_counts_match_through_degree_six(plane_table):
    for d in range(2, 7):
        counts = intersection_counts(d, plane_table)
        assert counts.balanced, f"degree {d}"


def test_intersection_counts_forces_degree_two_count():
    # equality of the two sides pins the degree-2 count to 1
    table = nd_plane(2)
    counts = intersection_counts(2, table)
    lhs_without_nd = counts.lhs.total - table.get((2,), (5,))
    assert counts.rhs.total - lhs_without_nd == 1


def test_intersection_counts_input_validation(plane_table):
    with pytest.raises(ValueError):
        intersection_counts(1, plane_table)
    with pytest.raises(TableDepthError):
        intersection_counts(3, nd_plane(2))
