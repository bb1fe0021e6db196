import json
from pathlib import Path

import numpy as np
import pytest

from catsharp.utils import (
    EXACT,
    Exactness,
    FrozenMap,
    JSONEncoder,
    LawViolation,
    Report,
    RunConfig,
    label,
    least,
    meet_all,
    save_run_report,
    sort_ids,
)


def test_sort_ids_orders_across_types():
    assert sort_ids([("a",), 2, "b", 1, None]) == (None, 1, 2, "b", ("a",))


def test_sort_ids_orders_tuples_by_length_first():
    assert sort_ids([(0, 0), (5,), (1,)]) == ((1,), (5,), (0, 0))


def test_least_is_first_in_canonical_order():
    assert least(["e", "v", ("e", 0)]) == "e"


def test_frozen_map_is_canonical_and_callable():
    a = FrozenMap({"b": 1, "a": 2})
    b = FrozenMap([("a", 2), ("b", 1)])
    assert a == b
    assert hash(a) == hash(b)
    assert a("a") == 2
    assert "b" in a
    assert {a: "x"}[b] == "x"


def test_frozen_map_lookups_repeat():
    m = FrozenMap({"a": 1, "b": 2})
    assert [m("a"), m("a"), m("b")] == [1, 1, 2]
    assert m.get("c", 0) == 0
    assert m.as_dict() == {"a": 1, "b": 2}
    assert m._table is not None and callable(m._table)


def test_label_of_nested_ids():
    assert label(("e", 3)) == "(e,3)"
    assert label(FrozenMap({("v", 0): 1})) == "{(v,0): 1}"


@pytest.mark.parametrize("left, right, expected", [
    (EXACT, EXACT, EXACT),
    (EXACT, Exactness.truncated(3), Exactness.truncated(3)),
    (Exactness.truncated(4), Exactness.truncated(2), Exactness.truncated(2)),
])
def test_exactness_meet(left, right, expected):
    assert left.meet(right) == expected
    assert right.meet(left) == expected


def test_meet_all_and_str():
    e = meet_all([EXACT, Exactness.truncated(5), Exactness.truncated(3)])
    assert str(e) == "truncated@3"
    assert str(EXACT) == "exact"


def test_report_collects_child_violations():
    report = Report("outer", bound=2)
    report.expect(True, "fine", "here")
    child = report.add(Report("inner", exactness=Exactness.truncated(2)))
    child.expect(False, "associativity", ("f", "g"), "differs")
    assert not report.ok
    assert report.laws_violated() == ["associativity"]
    assert report.exactness == Exactness.truncated(2)
    assert "FAILED (1 violations)" in report.summary()
    assert report.find("inner") is child
    assert report.find("missing") is None


def test_report_raise_if_failed():
    report = Report("broken")
    report.fail("unit", "a")
    with pytest.raises(LawViolation) as info:
        report.raise_if_failed()
    assert info.value.report is report
    assert Report("fine").raise_if_failed().ok


def test_report_to_dict_round_trips_through_json():
    report = Report("r", bound=1)
    report.fail("law", ("x", 1), "detail")
    data = json.loads(json.dumps(report, cls=JSONEncoder))
    assert data["ok"] is False
    assert data["violations"][0]["law"] == "law"


def test_json_encoder_handles_numpy_paths_and_exactness():
    text = json.dumps({"n": np.int64(3), "a": np.arange(2), "p": Path("x/y"), "e": EXACT}, cls=JSONEncoder)
    assert json.loads(text) == {"n": 3, "a": [0, 1], "p": "x/y", "e": "exact"}


def test_save_run_report_creates_parents(tmp_path):
    path = tmp_path / "runs" / "r.json"
    save_run_report(path, {"ok": True, "bound": np.int64(2)})
    assert json.loads(path.read_text()) == {"ok": True, "bound": 2}


def test_run_config_needs_a_bound():
    with pytest.raises(ValueError, match="bound"):
        RunConfig(output_format="table").start()


def test_run_config_rejects_unknown_settings():
    with pytest.raises(ValueError, match="not allowed"):
        RunConfig(colour=True)


def test_run_config_validates():
    config = {"bound": 3} >> RunConfig(oracle=True)
    assert config.bound == 3
    assert config.oracle
    assert config.output_format == "table"
    with pytest.raises(ValueError):
        RunConfig(output_format="svg").start(bound=1)
    with pytest.raises(ValueError):
        RunConfig().start(bound=-1)
