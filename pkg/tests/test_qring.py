from fractions import Fraction

import pytest

from gwcalc import (
    GWTable,
    big_associator,
    big_product,
    big_ring,
    build_potential,
    builtin_model,
    fixed_points_number,
    grassmannian_presentation,
    gw_invariant,
    pr_presentation,
    presentation_from_big,
    s_r_determinant,
    small_ring,
    standard_table,
)
from gwcalc.series import GWSeries, GradedPoly


def _nonzero(expansion):
    return {f: series for f, series in expansion.items() if not series.is_zero()}


# -- big ring ----------------------------------------------------------------


def test_unit_acts_trivially(q3_potential):
    bounds = q3_potential.bounds
    for j in range(4):
        product = big_product(q3_potential, 0, j)
        for f, series in product.items():
            expected = GWSeries.constant(bounds, 1 if f == j else 0)
            assert series == expected


def test_plane_product_displays(plane_potential):
    g111 = plane_potential.gamma_partial(1, 1, 1)
    g112 = plane_potential.gamma_partial(1, 1, 2)
    g122 = plane_potential.gamma_partial(1, 2, 2)
    g222 = plane_potential.gamma_partial(2, 2, 2)
    t1t1 = big_product(plane_potential, 1, 1)
    assert t1t1[2] == GWSeries.constant(plane_potential.bounds, 1)
    assert t1t1[1].coeffs == g111.coeffs
    assert t1t1[0].coeffs == g112.coeffs
    t2t2 = big_product(plane_potential, 2, 2)
    assert t2t2[2].is_zero()
    assert t2t2[1].coeffs == g122.coeffs
    assert t2t2[0].coeffs == g222.coeffs


def test_big_commutativity(q3_potential):
    for i in range(4):
        for j in range(4):
            left = big_product(q3_potential, i, j)
            right = big_product(q3_potential, j, i)
            assert {f: s.coeffs for f, s in left.items()} == {
                f: s.coeffs for f, s in right.items()
            }


def test_unit_associator_identically_zero(q3_potential):
    for j in range(4):
        for k in range(4):
            residual = big_associator(q3_potential, 0, j, k)
            assert all(series.is_zero() for series in residual.values())


def test_plane_associator_and_unit_coefficient(plane_potential):
    residual = big_associator(plane_potential, 1, 1, 2)
    assert all(series.is_zero_on_complete() for series in residual.values())


def test_threefold_associators(p3_potential, q3_potential):
    for bundle in (p3_potential, q3_potential):
        for i in range(1, 4):
            for j in range(1, 4):
                for k in range(1, 4):
                    residual = big_associator(bundle, i, j, k)
                    assert all(
                        series.is_zero_on_complete() for series in residual.values()
                    )


def test_projective_space_associators():
    for r in (1, 2, 3, 4):
        model = builtin_model("pr", r=r)
        c1_max = 2 * (r + 1)
        table = standard_table(model, c1_max)
        bundle = build_potential(model, table, c1_max)
        for i in range(1, r + 1):
            for j in range(i, r + 1):
                for k in range(j, r + 1):
                    residual = big_associator(bundle, i, j, k)
                    assert all(
                        series.is_zero_on_complete() for series in residual.values()
                    )


def test_product_of_lines_associators():
    model = builtin_model("p1xp1")
    table = standard_table(model, 8)
    bundle = build_potential(model, table, 8)
    for i in range(1, 4):
        for j in range(i, 4):
            for k in range(j, 4):
                residual = big_associator(bundle, i, j, k)
                assert all(series.is_zero_on_complete() for series in residual.values())


def test_big_ring_collects_constants(plane_potential):
    ring = big_ring(plane_potential)
    assert ring.kind == "big"
    assert set(ring.constants) == {(i, j) for i in range(3) for j in range(i, 3)}
    assert ring.product(1, 1)[2] == GWSeries.constant(plane_potential.bounds, 1)


# -- the cubic satisfied by the plane's hyperplane class ----------------------


def test_plane_cubic_presentation(plane_potential):
    result = presentation_from_big(plane_potential)
    assert result.holds()
    assert set(result.coefficient_series) == {0, 1, 2}


def test_plane_cubic_unit_coefficient(plane_potential):
    # the unit coefficient of the triple power: quantum part of T1.T2.T2 plus
    # the product of the two leading cubic coefficients
    from gwcalc.qring import _star_expansion

    pow3 = _star_expansion(plane_potential, big_product(plane_potential, 1, 1), 1)
    expected = plane_potential.gamma_partial(1, 2, 2) + plane_potential.gamma_partial(
        1, 1, 1
    ) * plane_potential.gamma_partial(1, 1, 2)
    assert (pow3[0] - expected).is_zero_on_complete()


def test_plane_cubic_degenerates_classically(p2):
    bundle = build_potential(p2, GWTable(p2, 6), 6)
    result = presentation_from_big(bundle)
    assert result.holds()
    assert all(series.is_zero() for series in result.coefficient_series.values())


def test_cubic_requires_plane_shape(q3_potential):
    with pytest.raises(ValueError):
        presentation_from_big(q3_potential)


# -- small rings --------------------------------------------------------------


def test_plane_small_ring(p2):
    ring = small_ring(p2, standard_table(p2, 4))
    assert _expansion_strings(ring.product(2, 2)) == {1: "1*q1"}
    assert _expansion_strings(ring.product(1, 1)) == {2: "1"}
    assert _expansion_strings(ring.product(1, 2)) == {0: "1*q1"}


def _expansion_strings(expansion):
    return {f: str(poly) for f, poly in expansion.items() if not poly.is_zero()}


def test_projective_space_product_rules():
    for r in (1, 2, 3, 4):
        model = builtin_model("pr", r=r)
        ring = small_ring(model, standard_table(model, 2 * r))
        for i in range(1, r + 1):
            for j in range(i, r + 1):
                expansion = _nonzero_polys(ring.product(i, j))
                if i + j <= r:
                    assert list(expansion) == [i + j]
                    assert expansion[i + j].coeffs == {(0,): 1}
                else:
                    target = i + j - r - 1
                    assert list(expansion) == [target]
                    assert expansion[target].coeffs == {(1,): 1}


def _nonzero_polys(expansion):
    return {f: poly for f, poly in expansion.items() if not poly.is_zero()}


def test_hyperplane_power_is_deformation_parameter():
    for r in (1, 2, 3, 4):
        model = builtin_model("pr", r=r)
        ring = small_ring(model, standard_table(model, 2 * r))
        power = _nonzero_polys(ring.basis_power(1, r + 1))
        assert list(power) == [0]
        assert power[0].coeffs == {(1,): 1}


def test_small_ring_homogeneity(q3):
    ring = small_ring(q3, standard_table(q3, 6))
    for (i, j), expansion in ring.constants.items():
        for f, poly in expansion.items():
            for mono, _ in poly.terms():
                weight = sum(e * d for e, d in zip(mono, ring.q_degrees))
                assert weight + q3.codim(f) == q3.codim(i) + q3.codim(j)


def test_small_ring_q0_is_cup_product():
    for name in ("p2", "p3", "q3", "p1xp1"):
        model = builtin_model(name)
        ring = small_ring(model, standard_table(model, 2 * model.dimension))
        classical = ring.specialize_q0()
        for i in range(model.rank):
            for j in range(i, model.rank):
                for f in range(model.rank):
                    cup = sum(
                        Fraction(model.triple(i, j, e)) * model.g_inv(e, f)
                        for e in range(model.rank)
                    )
                    assert classical[(i, j)].get(f, 0) == cup


def test_small_ring_commutative_storage(q3):
    ring = small_ring(q3, standard_table(q3, 6))
    assert ring.product(1, 2) is ring.product(2, 1)


def test_product_of_lines_small_ring():
    model = builtin_model("p1xp1")
    ring = small_ring(model, standard_table(model, 4))
    assert _expansion_strings(ring.product(1, 1)) == {0: "1*q1"}
    assert _expansion_strings(ring.product(2, 2)) == {0: "1*q2"}
    assert _expansion_strings(ring.product(1, 2)) == {3: "1"}
    assert _expansion_strings(ring.product(3, 3)) == {0: "1*q1*q2"}


# -- presentations ------------------------------------------------------------


def test_pr_presentation_normal_forms():
    for r in (1, 2, 3):
        pres = pr_presentation(r)
        t_var = pres.variable(0)
        q_var = pres.variable(1)
        power = GradedPoly.constant(pres.degrees, 1, pres.names)
        for _ in range(r + 1):
            power = power * t_var
        assert pres.normal_form(power) == pres.normal_form(q_var)
        assert pres.normal_form(power * t_var) == pres.normal_form(q_var * t_var)
        for degree in range(3 * (r + 1)):
            assert pres.rank(degree) == 1


def test_s_r_determinant_basics():
    s1 = s_r_determinant(2, 4, 1)
    assert str(s1) == "1*s1"
    s3 = s_r_determinant(2, 4, 3)
    assert s3.coeffs == {(3, 0): 1, (1, 1): -2}
    s2 = s_r_determinant(2, 4, 2)
    assert s2.coeffs == {(2, 0): 1, (0, 1): -1}


def test_alternating_sum_identity():
    for p, n in ((2, 4), (2, 5)):
        k = n - p
        total = s_r_determinant(p, n, n)
        sign = -1
        for i in range(1, k + 1):
            sigma = GradedPoly.variable(total.degrees, i - 1, total.names)
            total = total + (s_r_determinant(p, n, n - i) * sigma).scale(sign)
            sign = -sign
        assert total.is_zero()


def _box_partitions_by_size(p, k):
    # independent oracle: enumerate decreasing tuples inside the p x k box
    def rec(rows_left, limit):
        if rows_left == 0:
            yield ()
            return
        for first in range(limit + 1):
            for rest in rec(rows_left - 1, first):
                yield (first,) + rest

    counts = [0] * (p * k + 1)
    for shape in rec(p, k):
        counts[sum(shape)] += 1
    return counts


def test_grassmannian_presentation_rank():
    for p, n, total in ((2, 4, 6), (2, 5, 10)):
        k = n - p
        ideal = grassmannian_presentation(p, n)
        box = _box_partitions_by_size(p, k)
        assert sum(box) == total
        for degree in range(p * k + n + 1):
            expected = sum(
                box[degree - n * j]
                for j in range(degree // n + 1)
                if degree - n * j <= p * k
            )
            assert ideal.rank(degree) == expected


def test_grassmannian_seed_product():
    ideal = grassmannian_presentation(2, 4)
    s1 = ideal.variable(0)
    s2 = ideal.variable(1)
    q = ideal.variable(2)
    sigma_11 = s1 * s1 - s2
    assert ideal.normal_form(s2 * sigma_11) == ideal.normal_form(q)


def test_grassmannian_point_class_cube():
    # sigma_2^3 reduces to q times the complementary degree-2 class
    ideal = grassmannian_presentation(2, 4)
    s1 = ideal.variable(0)
    s2 = ideal.variable(1)
    q = ideal.variable(2)
    assert ideal.reduces_to_zero(s2 * s2 * s2 - q * (s1 * s1 - s2))


def test_grassmannian_classical_relations_at_q0():
    ideal = grassmannian_presentation(2, 4)

    def lift(poly):
        return GradedPoly(
            ideal.degrees, {m + (0,): c for m, c in poly.coeffs.items()}, ideal.names
        )

    assert ideal.reduces_to_zero(lift(s_r_determinant(2, 4, 3)))
    top = ideal.normal_form(lift(s_r_determinant(2, 4, 4)))
    assert top.set_var_to_zero(2).is_zero()
    assert top.coeffs == {(0, 0, 1): -1}


def test_grassmannian_scale_guard():
    with pytest.raises(ValueError):
        grassmannian_presentation(3, 7)


# -- fixed-point counts --------------------------------------------------------


def test_three_point_count_is_invariant(p2, plane_table):
    assert fixed_points_number(p2, plane_table, (1,), [2, 2, 1]) == gw_invariant(
        p2, plane_table, (1,), [2, 2, 1]
    )
    assert fixed_points_number(p2, plane_table, (0,), [0, 1, 1]) == 1


def test_line_four_point_count_vanishes():
    model = builtin_model("p1")
    table = standard_table(model, 2)
    assert fixed_points_number(model, table, (1,), [1, 1, 1, 1]) == 0


def test_split_position_independence(p2, plane_table):
    classes = [2, 2, 2, 1, 1]
    values = {
        k: fixed_points_number(p2, plane_table, (2,), classes, k) for k in (2, 3)
    }
    assert values[2] == values[3]


def test_fixed_points_input_validation(p2, plane_table):
    with pytest.raises(ValueError):
        fixed_points_number(p2, plane_table, (1,), [2, 2])
    with pytest.raises(ValueError):
        fixed_points_number(p2, plane_table, (1,), [2, 2, 2, 2], k=1)
