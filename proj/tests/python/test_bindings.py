from fractions import Fraction
from pathlib import Path

import pytest

import unicover

DATA = Path(__file__).resolve().parent.parent / "data"


def read(name):
    return (DATA / name).read_text()


def test_normalize_and_gcd():
    assert unicover.normalize("(z0 + t)^2", ["z0"]) == "z0^2 + 2*t*z0 + t^2"
    assert unicover.gcd("(w - z0)^3", "3*(w - z0)^2", ["w", "z0"]) == "w^2 - 2*w*z0 + z0^2"


def test_forward_matches_the_family_file():
    assert unicover.forward(read("running_example.tower")) == read("running_example.family")
    assert "# a1: t^2*z1^2" in unicover.forward(read("running_example.tower"), sigma_adic=True)


def test_verify_reports_rules():
    rules = {rule: ok for rule, ok, _ in unicover.verify(read("running_example.tower"))}
    assert rules and all(rules.values())
    bad = {rule: ok for rule, ok, _ in unicover.verify(read("bad_chain.tower"))}
    assert bad["divides[2]"] is False


def test_resolve_round_trips():
    res = unicover.resolve(read("running_example.family"))
    assert res["depth"] == 1
    assert res["final_system"][-1] == "-z1^4 + w0^2 + t*z1^2*w0"
    assert res["text"] == read("golden/resolve.txt")


def test_curve():
    res = unicover.curve([[1, 0, 1], [1, 0, -1]])
    assert res["depth"] == 3
    assert [d for d, _ in res["steps"]] == ["w0 - 1", "w1"]
    assert unicover.curve([[Fraction(1, 2)], [Fraction(-1, 2)]])["depth"] == 1


def test_errors_carry_their_kind():
    with pytest.raises(unicover.UnicoverError) as info:
        unicover.normalize("z0^-1", ["z0"])
    assert info.value.kind == "SyntaxError"
    with pytest.raises(unicover.UnicoverError) as info:
        unicover.curve([[2, -1, 1, 3], [2, 3, 2, 1], [2, -1, 1, 1], [2, 3, 0, 0]])
    assert info.value.kind == "UnsupportedShape"
