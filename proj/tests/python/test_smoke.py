import os
from fractions import Fraction

import pytest

import cytk

SAMPLE = os.environ.get("CYTK_SAMPLE")


def test_partition_and_quasismooth():
    assert cytk.is_partitionable(7, [2, 3])
    assert not cytk.is_partitionable(1, [2, 3])
    assert cytk.is_quasismooth(120, [3, 7, 20, 40, 50])


def test_analyze_1734():
    r = cytk.analyze(1734, [91, 96, 102, 578, 867])
    assert r["quasismooth"] and r["wellformed"] and r["calabi_yau_degree"]
    assert r["no_edge"] is True
    assert [c["type"] for c in r["singular_locus"]["singular_curves"]] == ["1/17(6,11)", "1/3(1,2)", "1/2(1,1)"]


def test_analyze_rejects_bad_weights():
    with pytest.raises(ValueError):
        cytk.analyze(10, [2, 4, 6, 8, 10])


@pytest.mark.skipif(SAMPLE is None, reason="sample path not given")
def test_census_sample():
    with open(SAMPLE) as f:
        text = f.read()
    one = cytk.census(text)
    assert one["summary"] == {"total": 3, "not_smooth_codim2": 2, "not_smooth_codim2_and_no_edge": 2}
    assert cytk.census(text, jobs=4) == one


def test_surface():
    assert cytk.orbifold_c2("16A1") == 0
    assert cytk.orbifold_c2("A1") == Fraction(45, 2)
    assert cytk.surface("16A1")["classification"]["builtin_action"] == "kummer"
    assert cytk.surface("5A4")["gate"]["possible"] is False
    with pytest.raises(ValueError):
        cytk.surface("2 A1")


def test_enumerate():
    doc = cytk.enumerate_zero_c2()
    assert doc["count"] == len(doc["multisets"])
    for m in doc["multisets"]:
        text = m if isinstance(m, str) else m["multiset"]
        assert cytk.orbifold_c2(text) == 0


def test_torus_builtins():
    names = [b["name"] for b in cytk.builtin_actions()]
    assert len(names) == 10
    for name in names:
        r = cytk.torus_quotient(builtin=name)
        assert r["matches_expected"] is True
        assert cytk.fraction(r["orbifold_c2"]) == 0


def test_torus_action_dict():
    minus = [[-1 if i == j else 0 for j in range(4)] for i in range(4)]
    r = cytk.torus_quotient(action={"label": "m", "generators": [{"linear": minus, "translation": [0, 0, 0, 0]}]})
    assert r["multiset"] == "16A1"
    shift = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    with pytest.raises(cytk.TorusError):
        cytk.torus_quotient(action={"label": "t", "generators": [{"linear": shift, "translation": ["1/2", 0, 0, 0]}]})
    with pytest.raises(ValueError):
        cytk.torus_quotient()
