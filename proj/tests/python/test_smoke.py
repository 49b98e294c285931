"""Smoke tests for the itdual python module."""

import json

import pytest

import itdual


def test_parse_dual_roundtrip():
    basic = itdual.parse("I(A;B|C)", ground=["A", "B", "C", "D"])
    dual = itdual.dual(basic)
    assert itdual.i_form(dual) == "I(A;B|D)"
    assert itdual.dual(dual) == basic  # the basic inequality is balanced


def test_balance_and_residuals():
    h = itdual.parse("H(X1)", ground=["X1", "X2"])
    assert not itdual.is_balanced(h)
    assert itdual.residuals(h) == {"X1": "1", "X2": "0"}
    balanced = itdual.balance(h)
    assert itdual.is_balanced(balanced)
    assert balanced == itdual.parse("I(X1;X2)")


def test_parse_error_positions():
    with pytest.raises(ValueError):
        itdual.parse("I(A;B")


def test_catalog_and_shannon_certificates():
    assert itdual.catalog_names() == [
        "basic",
        "ingleton",
        "ingleton-conditional",
        "mmrv",
        "mmrv-dual",
    ]
    basic = json.loads(itdual.is_shannon_type(itdual.catalog_entry("basic")))
    assert basic["verdict"] == "shannon-type"
    mmrv = json.loads(itdual.is_shannon_type(itdual.catalog_entry("mmrv")))
    assert mmrv["verdict"] == "not-shannon-type"
    assert "separator" in mmrv


def test_selfdual_certificates():
    cert = json.loads(itdual.is_self_dual(itdual.catalog_entry("ingleton")))
    assert cert["verdict"] == "instance"
    cert = json.loads(itdual.is_self_dual(itdual.catalog_entry("mmrv")))
    assert cert["verdict"] == "not-found"


def test_entropy_engine():
    coin = itdual.JointDistribution(["A"], [(["0"], "1/2"), (["1"], "1/2")])
    assert itdual.entropy(coin, ["A"]) == pytest.approx(1.0)

    pair = itdual.JointDistribution(
        ["A", "B"], [(["0", "0"], "1/2"), (["1", "1"], "1/2")]
    )
    assert itdual.mutual_information(pair, ["A"], ["B"]) == pytest.approx(1.0)
    vec = itdual.entropic_vector(pair)
    assert vec["AB"] == pytest.approx(1.0)

    with pytest.raises(ValueError):
        itdual.JointDistribution(["A"], [(["0"], "1/3")])


def test_counterexample_and_theorem():
    d = itdual.counterexample_distribution("1/100")
    dual = itdual.catalog_entry("mmrv-dual")
    assert itdual.evaluate(dual, d) < 0
    assert itdual.evaluate(itdual.catalog_entry("mmrv"), d) >= -1e-12

    report = json.loads(itdual.verify_main_theorem("1/100"))
    assert report["pass"] is True
    assert report["checks"]["zero_terms"] is True
