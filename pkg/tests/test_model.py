import json
from fractions import Fraction
from itertools import permutations

import pytest

from gwcalc import (
    ModelError,
    builtin_model,
    expected_dimension,
    load_model,
    model_from_dict,
    save_model,
)

ALL_BUILTINS = ["p1", "p2", "p3", "q3", "p1xp1"]


def test_plane_structure(p2):
    assert p2.dimension == 2
    assert p2.codims == (0, 1, 2)
    assert p2.pairing == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert p2.c1_degree((1,)) == 3


def test_threefold_line_degrees(p3, q3):
    assert p3.c1_degree((1,)) == 4
    assert q3.c1_degree((1,)) == 3


def test_quadric_classical_difference(p3, q3):
    # hyperplane cube: 1 on projective space, 2 on the quadric
    assert p3.triple(1, 1, 1) == 1
    assert q3.triple(1, 1, 1) == 2


def test_expected_dimension(p2, p3):
    assert expected_dimension(p2, (1,), 2) == 4
    assert expected_dimension(p3, (1,), 0) == 4
    assert expected_dimension(p2, (0,), 3) == 2


def test_pairing_inverse_exact():
    for name in ALL_BUILTINS:
        model = builtin_model(name)
        size = model.rank
        for i in range(size):
            for j in range(size):
                total = sum(
                    Fraction(model.g(i, e)) * model.g_inv(e, j) for e in range(size)
                )
                assert total == (1 if i == j else 0)


def test_duality_counts():
    for name in ALL_BUILTINS:
        model = builtin_model(name)
        for k in range(model.dimension + 1):
            low = sum(1 for c in model.codims if c == k)
            high = sum(1 for c in model.codims if c == model.dimension - k)
            assert low == high


def test_triples_fully_symmetric(q3):
    for i, j, k in permutations((1, 1, 1), 3):
        assert q3.triple(i, j, k) == 2
    for perm in permutations((0, 1, 2)):
        assert q3.triple(*perm) == 1


def test_unit_triples_match_pairing():
    for name in ALL_BUILTINS:
        model = builtin_model(name)
        for j in range(model.rank):
            for k in range(model.rank):
                assert model.triple(0, j, k) == model.g(j, k)


def test_product_of_lines_validates():
    model = builtin_model("p1xp1")
    assert model.divisor_count == 2
    assert model.effective_c1 == (2, 2)
    assert model.triple(0, 1, 2) == 1
    assert model.triple(1, 1, 2) == 0


def test_pr_models():
    p5 = builtin_model("pr", r=5)
    assert p5.dimension == 5
    assert p5.c1_degree((1,)) == 6
    with pytest.raises(ModelError):
        builtin_model("pr")
    with pytest.raises(ModelError):
        builtin_model("nope")


def test_round_trip(tmp_path, p2):
    path = tmp_path / "plane.json"
    save_model(p2, path)
    assert load_model(path) == p2


def test_round_trip_all_builtins(tmp_path):
    for name in ALL_BUILTINS:
        model = builtin_model(name)
        path = tmp_path / f"{name}.json"
        save_model(model, path)
        assert load_model(path) == model


def test_asymmetric_pairing_rejected(p2):
    data = p2.to_dict()
    data["pairing"][0][1] = 1
    with pytest.raises(ModelError, match="symmetric"):
        model_from_dict(data)


def test_low_anticanonical_degree_rejected(p2):
    data = p2.to_dict()
    data["effective"][0]["c1_degree"] = 1
    with pytest.raises(ModelError, match="at least 2"):
        model_from_dict(data)


def test_unit_law_violation_rejected(p2):
    data = p2.to_dict()
    data["triples"] = [t for t in data["triples"] if (t["i"], t["j"], t["k"]) != (0, 0, 2)]
    with pytest.raises(ModelError, match="unit law"):
        model_from_dict(data)


def test_bad_codim_order_rejected(p2):
    data = p2.to_dict()
    data["basis"][1], data["basis"][2] = data["basis"][2], data["basis"][1]
    with pytest.raises(ModelError):
        model_from_dict(data)


def test_parse_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ModelError, match="parse"):
        load_model(path)


def test_effective_class_enumeration(p2):
    assert p2.effective_classes(9) == [(0,), (1,), (2,), (3,)]
    pp = builtin_model("p1xp1")
    assert (1, 1) in pp.effective_classes(4)
    assert all(pp.c1_degree(b) <= 4 for b in pp.effective_classes(4))


def test_dimension_constraint(p2, q3):
    assert p2.dimension_matches((1,), (2,))
    assert not p2.dimension_matches((1,), (3,))
    assert q3.dimension_matches((2,), (2, 2))
    assert not q3.dimension_matches((2,), (2, 1))
