import json

import pytest

import cgv


def test_eval_expr():
    assert cgv.eval_expr("r^3+r^2") == "1"
    assert cgv.eval_expr("(3*r-2)*(r+1)") == "-2 + r + 3*r^2"


def test_eval_expr_parse_error():
    with pytest.raises(cgv.ParseError):
        cgv.eval_expr("r +")


def test_field_helpers():
    assert cgv.nf_reduce([10, -25, 11, 6, 4, -12, 9]) == "0"
    assert cgv.nf_inverse("3*r^2+4*r-4") == "17/35 + 29/35*r + 16/35*r^2"
    with pytest.raises(ValueError):
        cgv.nf_inverse("0")


def test_genus_accounting():
    assert cgv.ci_genus(5, 5) == 76
    assert cgv.rh_relation(3, 1) == 4
    with pytest.raises(cgv.InfeasibleError):
        cgv.rh_relation(1, 2)
    assert cgv.quotient_feasibility(76, 4, 2) == {"feasible": True, "s_q": 19, "obstruction": ""}
    assert not cgv.quotient_feasibility(76, 4, 4)["feasible"]


def test_divisors():
    assert [cgv.exceptional_multiplicity(n) for n in (1, 2, 3, 5)] == [-1, -2, -3, -5]


def test_distinct_points():
    assert cgv.distinct_points("X^3 - X*Y^2") == 3
    assert cgv.distinct_points("(X - Y)^3*(X + Y)^2") == 2


def test_run_suite_json():
    report = json.loads(cgv.run_suite("divisors"))
    assert report["suite"] == "divisors"
    assert report["summary"]["confirmed"] == "4"
    assert all(c["agreement"] == "confirmed" for c in report["checks"])


def test_run_suite_deterministic_text():
    assert cgv.run_suite("all", format="text") == cgv.run_suite("all", format="text")


def test_run_suite_config_errors():
    with pytest.raises(cgv.ConfigError):
        cgv.run_suite("nope")
    with pytest.raises(cgv.ConfigError):
        cgv.run_suite("sigma", m="1+")
    with pytest.raises(ValueError):
        cgv.run_suite("sigma", format="xml")
