import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import medianlab as ml

DATA = Path(os.environ.get("MEDIANLAB_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))

PARITY = json.dumps(
    {
        "generators": {"a": [6, 7, 4, 5, 2, 3, 0, 1], "b": [5, 4, 7, 6, 1, 0, 3, 2]},
        "mu": {"e": "1/4", "a": "1/4", "b": "1/4", "a b": "1/4"},
    }
)


def p3():
    return ml.MedianAlgebra.from_embedding(["00", "10", "11"])


def test_path_walls_and_cubes():
    m = p3()
    assert len(m) == 3
    assert m.median(0, 2, 1) == 1
    assert ml.walls(m) == [[0], [0, 1]]
    assert len(ml.cubes(m)) == 6
    square = ml.MedianAlgebra.from_embedding(["00", "10", "01", "11"])
    assert len(ml.cubes(square)) == 11


def test_decompose():
    m = ml.MedianAlgebra.from_embedding(["000", "001", "100", "101", "110", "111"])
    d = ml.decompose(m)
    assert d["dim"] == 1
    assert len(d["m_prime"]) == 3
    assert ml.decompose(d["m_prime"])["dim"] == 0


def test_phi_is_exact():
    m = p3()
    third = Fraction(1, 3)
    assert sum(ml.phi(m, [third] * 3)) == 1
    assert ml.is_balanced(m, [Fraction(1, 2), 0, Fraction(1, 2)])
    assert not ml.is_balanced(m, [third] * 3)


def test_stationary_parity():
    vertices = ml.stationary(ml.MedianAlgebra.cube(3), PARITY)
    assert len(vertices) == 2
    supports = sorted(tuple(i for i, w in enumerate(v) if w) for v in vertices)
    assert supports == [(0, 3, 5, 6), (1, 2, 4, 7)]
    assert all(w in (0, Fraction(1, 4)) for v in vertices for w in v)
    assert ml.minimal(ml.MedianAlgebra.cube(3), PARITY) == (True, None)


def test_json_round_trip():
    m = p3()
    assert ml.MedianAlgebra.from_json(m.to_json()) == m


def test_errors_carry_codes():
    with pytest.raises(ml.MedianError) as info:
        ml.MedianAlgebra.from_embedding(["100", "010", "001"])
    assert info.value.code
    with pytest.raises(ValueError):
        ml.phi(p3(), [Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)])


def test_run_matches_cli():
    code, out, err = ml.run("walls", [str(DATA / "point.json")])
    assert code == 0, err
    assert json.loads(out)["wall_count"] == 0
    code, _, err = ml.run("check", [str(DATA / "bad_absorption.json")])
    assert code == 1
