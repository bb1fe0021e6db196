import json

import pytest
import yaml

from catsharp.cli import SpecFile, load_spec, main, parse_operation, parse_operations
from catsharp.fincat import commutative_square, find_isomorphism
from catsharp.monad import check_monad, monad_list, monad_path, monad_smc
from catsharp.utils import SpecError

CHAIN_SPEC = {
    "bound": 4,
    "algebras": {"chain": {"monad": "path", "category": "[2]"}},
}

MAYBE_TABLES = {
    "operations": {"just": 1, "nothing": 0},
    "unit": "just",
    "mult": [
        {"outer": "just", "inner": ["just"], "result": "just", "witness": [[0, 0]]},
        {"outer": "just", "inner": ["nothing"], "result": "nothing", "witness": []},
        {"outer": "nothing", "inner": [], "result": "nothing", "witness": []},
    ],
}


def _write(tmp_path, document, name="spec.yaml"):
    path = tmp_path / name
    path.write_text(yaml.safe_dump(document))
    return path


def test_builtin_names_resolve_without_a_file():
    spec = SpecFile()
    assert spec.monad("path") is spec.monad("path")
    assert spec.copresheaf("vec2").sizes() == {"v": 3, "e": 2}
    assert len(spec.category("[3]").objects) == 4


def test_spec_file_declarations(tmp_path):
    spec = load_spec(_write(tmp_path, {
        "bound": 2,
        "categories": {"arrow": {"objects": ["a", "b"], "morphisms": {"f": ["a", "b"]}}},
        "copresheaves": {"pair": {"base": "arrow", "sets": {"a": [1], "b": [1, 2]}, "action": {"f": {1: 2}}}},
    }))
    assert spec.bound == 2
    assert spec.names("categories") == ("arrow",)
    assert spec.copresheaf("pair").sizes() == {"a": 1, "b": 2}


def test_unknown_sections_are_rejected(tmp_path):
    with pytest.raises(SpecError):
        load_spec(_write(tmp_path, {"monoids": {}}))


def test_invalid_yaml_is_a_spec_error(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("categories: [unclosed\n")
    with pytest.raises(SpecError):
        load_spec(path)


def test_dangling_reference():
    spec = SpecFile({"algebras": {"a": {"monad": "nope", "category": "square"}}})
    with pytest.raises(SpecError, match="unknown monad"):
        spec.algebra("a", bound=2)


def test_unknown_ends_are_a_spec_error():
    decl = {"objects": ["a"], "morphisms": {"f": ["a", "b"]}}
    with pytest.raises(SpecError):
        SpecFile({"categories": {"bad": decl}}).category("bad")


def test_check_reports_a_bad_composite(tmp_path, capsys):
    decl = {"objects": ["a", "b", "c"], "morphisms": {"f": ["a", "b"], "g": ["b", "c"]},
            "compose": [["f", "g", "f"]]}
    path = _write(tmp_path, {"bound": 1, "categories": {"bad": decl}})
    assert main(["check", str(path)]) == 1
    captured = capsys.readouterr()
    assert "FAIL" in captured.out
    assert "typing" in captured.out + captured.err


def test_explicit_maybe_monad():
    m = SpecFile({"monads": {"maybe2": {"tables": MAYBE_TABLES}}}).monad("maybe2")
    assert check_monad(m, bound=1, progress=False).ok


def test_explicit_monad_needs_every_composite():
    tables = dict(MAYBE_TABLES, mult=MAYBE_TABLES["mult"][:2])
    with pytest.raises(SpecError):
        SpecFile({"monads": {"maybe2": {"tables": tables}}}).monad("maybe2")


def test_parse_path_operations():
    m = monad_path()
    assert parse_operation(m, "v", 3) == "v"
    assert parse_operations(m, "v,e0,e3", 3) == ("v", ("e", 0), ("e", 3))
    assert parse_operation(m, "e4", 3) == ("e", 4)
    for token in ("x", "e", "v1"):
        with pytest.raises(SpecError):
            parse_operation(m, token, 3)


def test_parse_list_and_smc_operations():
    assert parse_operation(monad_list(), "2", 2) == 2
    smc = monad_smc()
    assert parse_operation(smc, "v2", 3) == ("v", 2)
    assert parse_operation(smc, "e1.0.2", 3) == ("e", 1, (0,), (2,))
    assert parse_operation(smc, "e2.10.0.1", 3) == ("e", 2, (1, 0), (0, 1))
    assert parse_operation(smc, "e2.10.2.2", 1) == ("e", 2, (1, 0), (2, 2))
    with pytest.raises(SpecError):
        parse_operation(smc, "e2.11.0.0", 3)


def test_free_prints_sizes(capsys):
    assert main(["free", "--monad", "path", "--copresheaf", "vec1", "--bound", "3"]) == 0
    captured = capsys.readouterr()
    assert "exactness: exact" in captured.out
    assert "free path" in captured.err


def test_a_bound_is_required(capsys):
    assert main(["free", "--monad", "path", "--copresheaf", "vec1"]) == 2
    assert "bound" in capsys.readouterr().err


def test_theory_table_with_oracle(capsys):
    code = main(["theory", "--monad", "path", "--objects", "v,e0,e1,e2", "--bound", "4", "--oracle"])
    out = capsys.readouterr().out
    assert code == 0
    assert "oracle: isomorphic" in out
    assert "exactness: exact" in out


def test_truncated_theory_exits_with_two(capsys):
    assert main(["theory", "--monad", "path", "--objects", "v,e0,e1,e2,e3", "--bound", "2"]) == 2
    err = capsys.readouterr().err
    assert "truncated" in err
    assert "no operation" not in err


def test_partial_theory_reports_truncation(capsys):
    code = main(["theory", "--monad", "path", "--objects", "v,e0,e1,e2,e3", "--bound", "2", "--partial"])
    assert code == 0
    assert "truncated" in capsys.readouterr().out


def test_nerve_with_segal(tmp_path, capsys):
    path = _write(tmp_path, CHAIN_SPEC)
    code = main(["nerve", str(path), "--monad", "path", "--algebra", "chain", "--objects", "v,e0,e1,e2",
                 "--segal"])
    assert code == 0
    assert "segal: PASS" in capsys.readouterr().out


def test_unknown_algebra_exits_with_two(tmp_path, capsys):
    path = _write(tmp_path, CHAIN_SPEC)
    assert main(["segal", str(path), "--monad", "path", "--algebra", "nope"]) == 2
    assert "unknown algebra" in capsys.readouterr().err


def test_check_passes(tmp_path, capsys):
    path = _write(tmp_path, {"bound": 2, "categories": {"sq": {"builtin": "square"}},
                             "monads": {"lists": {"builtin": "list"}}})
    assert main(["check", str(path)]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out


def test_check_reports_a_broken_morphism(tmp_path, capsys):
    path = _write(tmp_path, {"bound": 3, "morphisms": {"bad": {"builtin": "sm", "constant": True}}})
    assert main(["check", str(path)]) == 1
    assert "multiplication" in capsys.readouterr().out


def test_compare_monads(capsys):
    assert main(["compare-monads", "--monads", "list", "associative", "--bound", "2"]) == 0
    assert "PASS" in capsys.readouterr().out
    assert main(["compare-monads", "--monads", "list", "maybe", "--bound", "2"]) == 1


def test_native_category_export_loads_back(tmp_path):
    out = tmp_path / "square.yaml"
    assert main(["export", "--category", "square", "--format", "native", "--bound", "1", "-o", str(out)]) == 0
    loaded = load_spec(out).category("square")
    assert find_isomorphism(loaded, commutative_square()) is not None


def test_native_copresheaf_export_loads_back(tmp_path):
    out = tmp_path / "vec2.yaml"
    assert main(["export", "--copresheaf", "vec2", "--format", "native", "--bound", "1", "-o", str(out)]) == 0
    assert load_spec(out).copresheaf("vec2").sizes() == {"v": 3, "e": 2}


def test_graph_export(capsys):
    assert main(["export", "--category", "g", "--format", "graph", "--bound", "1"]) == 0
    assert "<graphml" in capsys.readouterr().out


def test_run_report(tmp_path):
    report = tmp_path / "run.json"
    code = main(["compose", "--left", "path", "--right", "path", "--bound", "2", "--report", str(report)])
    assert code == 0
    data = json.loads(report.read_text())
    assert data["command"] == "compose"
    assert data["ok"]
    assert data["tasks"][0]["exactness"] in ("exact", "truncated@2")


def test_run_executes_tasks(tmp_path, capsys):
    path = _write(tmp_path, dict(CHAIN_SPEC, tasks=[
        {"command": "free", "monad": "path", "copresheaf": "vec1"},
        {"command": "segal", "monad": "path", "algebra": "chain", "objects": ["v", "e0", "e1", "e2"]},
    ]))
    assert main(["run", str(path)]) == 0
    assert "segal: PASS" in capsys.readouterr().out


def test_run_needs_tasks(tmp_path):
    assert main(["run", str(_write(tmp_path, {"bound": 1}))]) == 2
