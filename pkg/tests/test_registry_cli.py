import json

import pytest

from ringlab import catalog as cat
from ringlab import registry as rg
from ringlab.cli import main


def test_registry_covers_required_ids():
    ids = [c.id for c in rg.registry()]
    assert len(ids) == len(set(ids))
    missing = set(rg.REQUIRED_IDS) - set(ids)
    assert not missing


def test_every_check_has_instances_and_expectation():
    for c in rg.registry():
        assert c.instances, c.id
        assert c.expected in (rg.PASS, rg.WITNESS)
        assert c.description


def test_examples_reproduce():
    rep = rg.run_registry("ex-*")
    assert {r["id"] for r in rep["checks"]} == {"ex-matrix-units", "ex-m2", "ex-weak-annihilator"}
    assert all(r["outcome"] in (rg.PASS, rg.WITNESS) for r in rep["checks"])


def test_prop_2_1_passes():
    rep = rg.run_registry("prop-2.1")
    assert rep["checks"][0]["outcome"] == rg.PASS


def test_unknown_filter_is_empty_success():
    rep = rg.run_registry("no-such-check")
    assert rep["checks"] == [] and rg.report_ok(rep)


def test_budget_exhaustion_marks_skipped():
    rep = rg.run_registry("prop-h3", rg.Config(budget=1000))
    assert rep["checks"][0]["outcome"] == rg.SKIPPED
    assert rg.report_ok(rep)


def test_deviation_is_reported(monkeypatch):
    bad = rg.TheoremCheck("fake", "always wrong", rg.PASS, lambda cfg: {"ok": False},
                          (rg.Instance("x"),))
    monkeypatch.setattr(rg, "_REGISTRY", rg.registry() + [bad])
    rep = rg.run_registry("fake")
    assert rep["checks"][0]["outcome"] == rg.DEVIATION
    assert not rg.report_ok(rep)
    assert main(["verify", "--filter", "fake"]) == 1


def test_report_is_deterministic_and_parallel_safe():
    a = rg.report_json(rg.run_registry("lem-*"))
    b = rg.report_json(rg.run_registry("lem-*", rg.Config(jobs=2)))
    assert a == b
    assert "wall_time" not in a


@pytest.mark.parametrize("expr,present,absent", [
    ("two_primal & !semicommutative", ["t2(z2)"], ["z2"]),
    ("reduced", ["z2", "z3", "z2xz2"], ["z4"]),
    ("!dedekind_finite", [], ["z2"]),
    ("(reduced | NI) & !reduced", ["z4"], ["z2"]),
])
def test_search(expr, present, absent):
    hits = {h["ring"] for h in rg.search(expr)}
    assert set(present) <= hits
    assert not set(absent) & hits


def test_search_empty_for_non_dedekind_finite():
    assert rg.search("!dedekind_finite") == []


@pytest.mark.parametrize("bad", ["", "reduced &", "(reduced", "foo", "reduced reduced"])
def test_bad_expressions(bad):
    with pytest.raises(rg.ExpressionError):
        rg.parse_expression(bad)


def test_catalog_listing():
    c = cat.catalog()
    rings = {r["name"]: r for r in c["rings"]}
    for name in ["z2", "z3", "z4", "z8", "z12", "z2xz2", "z2xz4", "t2(z2)", "t2(z4)", "t3(z2)",
                 "m2(z2)", "h3(z2)", "t(z2,3,id)", "s(z2,3,id)", "a(z2,4,id)", "b(z2,4,id)",
                 "skewT2(z2xz2,swap)"]:
        assert name in rings
    assert rings["z12"]["order"] == 12
    assert rings["z8"]["chain_ring"]
    monoids = {m["name"]: m for m in c["monoids"]}
    for name in ["nat", "nat2", "c2", "c3", "c4", "lz2", "matrix-units", "free2", "prod(nat,c2)"]:
        assert name in monoids
    assert monoids["matrix-units"]["order"] == 6


def test_cli_radicals(capsys):
    assert main(["radicals", "--ring", "z12"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["nilpotents"] == ["0", "6"] and out["lower"] == ["0", "6"]
    assert out["classes"]["two_primal"]


def test_cli_check(capsys):
    assert main(["check", "--ring", "z2", "--monoid", "matrix-units", "--property", "lower-nil"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["outcome"] == "Fails"
    assert out["witness"]["alpha"] == "1*E22"
    assert main(["check", "--ring", "z4", "--monoid", "nat", "--degree", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["outcome"] == "HoldsUpToBounds" and out["bounds"]["fragment_size"] == 3


def test_cli_usage_errors(capsys):
    assert main([]) == 2
    assert main(["check", "--ring", "nope", "--monoid", "nat"]) == 2
    assert main(["check", "--ring", "z2", "--monoid", "nope"]) == 2
    assert main(["check", "--ring", "z2", "--monoid", "nat", "--property", "bogus"]) == 2
    assert main(["search", "reduced &"]) == 2
    assert main(["verify", "--jobs", "0"]) == 2


def test_cli_verify_writes_json(tmp_path):
    path = tmp_path / "r.json"
    assert main(["verify", "--filter", "ex-*", "--json", str(path)]) == 0
    data = json.loads(path.read_text())
    assert data["suite"]["summary"]["DEVIATION"] == 0
    assert len(data["checks"]) == 3


def test_cli_catalog_and_search(capsys):
    assert main(["catalog"]) == 0
    assert "matrix-units" in capsys.readouterr().out
    assert main(["search", "two_primal & !semicommutative"]) == 0
    assert "t2(z2)" in capsys.readouterr().out
