import copy
import json

import pytest

from sagbilab import harness
from sagbilab.harness import (
    ALL_EXAMPLES,
    ExampleError,
    ExampleId,
    parse_example_id,
    reproduce,
    thm41_checks,
    thm41_verify,
)


def test_parse_fixed_and_defaults():
    assert parse_example_id("E3.5") == ExampleId("E3.5")
    assert parse_example_id("E3.6") == ExampleId("E3.6", (3,))
    assert parse_example_id("E3.7(4, 3)") == ExampleId("E3.7", (4, 3))
    assert parse_example_id("T4.1(2,1)") == ExampleId("T4.1", (2, 1))
    t = parse_example_id("T3.4(2,1;1,2;3,3)")
    assert t.params == ((2, 1), (1, 2), ((3, 3),))
    assert str(t) == "T3.4(2,1;1,2;3,3)"


@pytest.mark.parametrize(
    "text",
    ["E9.9", "e3.5", "E3.5(1)", "E3.6(5)", "E3.6(0)", "E3.7(7,1)", "E3.7(1)", "T4.1(1,1)", "T4.1(2,5)", "T3.4(1,0;0,1)", "E3.6(x)"],
)
def test_parse_rejects(text):
    with pytest.raises(ExampleError):
        parse_example_id(text)


EXPECTED_VERDICT = {name: "Match" for name in ALL_EXAMPLES}
EXPECTED_VERDICT["P3.1"] = "Mismatch"


@pytest.mark.parametrize("name", ALL_EXAMPLES)
def test_every_example_verdict(name):
    rep = reproduce(name, timed=False)
    assert rep.verdict == EXPECTED_VERDICT[name]
    assert rep.matched == (rep.verdict == "Match")


def test_p31_mismatch_names_the_basis():
    rep = reproduce("P3.1", timed=False)
    assert rep.to_json()["verdict"]["Mismatch"] == {"dependent": {"status": "Finite", "basis": ["x + y", "x*y + 1/2*y^2"]}}
    assert rep.computed["independent_is_sagbi"]


@pytest.mark.parametrize("example", ["E3.6(2)", "E3.7(4,3)", "T3.4(2,1;1,2;3,3)", "T4.1(2,3)"])
def test_parametrized_examples_match(example):
    assert reproduce(example, timed=False).matched


def test_json_shape_and_byte_stability():
    a = json.dumps(reproduce("E3.5", timed=False, max_degree=10).to_json(), sort_keys=True)
    b = json.dumps(reproduce("E3.5", timed=False, max_degree=10).to_json(), sort_keys=True)
    assert a == b
    data = json.loads(a)
    assert set(data) == {"example", "verdict", "expected", "computed", "seconds"}
    assert data["seconds"] is None
    assert data["verdict"] == "Match"


def test_timed_report_has_seconds():
    rep = reproduce("E3.5", max_degree=8)
    assert rep.seconds >= 0
    assert "seconds:" in rep.render()


def test_thm41_checks_all_pass():
    checks = thm41_checks(3, 3)
    assert checks and all(ok for _, ok in checks)
    names = [n for n, _ in checks]
    assert "odd identity k=3" in names and "even identity k=1" in names


def test_thm41_fails_as_a_whole(monkeypatch):
    data = copy.deepcopy(harness.golden())
    data["T4.1"]["h_reduced"][1] = "X0*X1 - X0*X2"
    monkeypatch.setattr(harness, "golden", lambda: data)
    rep = thm41_verify(2, 1, timed=False)
    assert rep.verdict == "Mismatch"
    assert rep.diff == {"failed": ["reduced lex basis of <h1, h2, h3>"]}


def test_thm41_range_errors():
    with pytest.raises(ExampleError):
        thm41_checks(5, 1)
