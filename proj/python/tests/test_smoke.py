import json

import pytest

import nsym

EXAMPLE = {(2, 2, 4): 1, (3, 1, 4): 1, (3, 2, 3): 1, (4, 3, 1): -1, (5, 3): -1}


@pytest.mark.parametrize("method", ["oracle", "signed", "tableau", "closed-form"])
def test_product_methods_agree(method):
    assert nsym.product([2], [2, 4], method) == EXAMPLE


def test_product_is_graded_lex_ordered():
    assert list(nsym.product([2], [2, 4])) == [(2, 2, 4), (3, 1, 4), (3, 2, 3), (4, 3, 1), (5, 3)]


def test_pieri_rules():
    assert nsym.left_pieri(2, [2, 4]) == EXAMPLE
    assert nsym.right_pieri([2], 2) == {(4,): 1, (2, 2): 1, (3, 1): 1}
    assert nsym.left_pieri_unit_coefficient([3, 1, 4], [2, 3, 2, 2]) == -1
    assert nsym.sgn([1, -1, 2]) == -1


def test_structure_constants():
    assert nsym.structure_constant([1, 1], [3, 2, 2], [3, 3, 1, 1, 1]) == 0
    assert nsym.structure_constant([2, 2], [6, 4, 4], [6, 6, 2, 2, 2]) == 1
    assert nsym.structure_constant([2, 2], [6, 4, 4], [6, 6, 2, 2, 2], "tableau") == 1
    assert nsym.structure_constant([2], [2, 4], [5, 3], "signed") == -1


def test_convert():
    assert nsym.convert("S", {(1, 1): 1}, "H") == {(2,): -1, (1, 1): 1}
    assert nsym.convert("H", {(1, 2): 1}, "S") == {(3,): 1, (1, 2): 1, (2, 1): 1}
    assert nsym.convert("S", {(2, 1): 1}, "s") == {(2, 1): 1}
    assert nsym.convert("s", {(1, 1): 1}, "h") == {(2,): -1, (1, 1): 1}
    with pytest.raises(ValueError):
        nsym.convert("h", {(1,): 1}, "S")


def test_rendering():
    assert nsym.render_text("S", EXAMPLE) == "S[2,2,4] + S[3,1,4] + S[3,2,3] - S[4,3,1] - S[5,3]"
    data = json.loads(nsym.render_json("S", EXAMPLE))
    assert data["basis"] == "S" and len(data["terms"]) == 5


def test_tableaux_and_involution():
    sat = nsym.skew_immaculate_tableaux([2, 2], [6, 4, 4], [6, 6, 2, 2, 2])
    assert sat
    ts = nsym.T_alpha_beta([1, 2], [2, 2, 2])
    hit = [t for t in ts if t["rows"] == [[1, 1, 2], [2], [2, 3]]]
    assert hit and hit[0]["sigma"] == [1, 3, 2]
    img = nsym.y_map([1, 2], [[1, 1, 2], [2], [2, 3]], [2, 2, 2])
    assert img["rows"] == [[1, 1], [3], [1, 2, 3]]
    assert "X 1 1 2" in nsym.render_tableau([1, 2], [[1, 1, 2], [2], [2, 3]])


def test_verify():
    assert len(nsym.suite_names()) == 9
    report = nsym.verify("translation", max_size=5)
    assert report["passed"] and report["checked"] > 0
    with pytest.raises(ValueError):
        nsym.verify("no-such-suite")


def test_errors():
    with pytest.raises(ValueError):
        nsym.product([1, 0], [1])
    with pytest.raises(ValueError):
        nsym.product([1], [1], "magic")
    with pytest.raises(nsym.ResourceLimit):
        nsym.product([1] * 6, [1] * 5)
