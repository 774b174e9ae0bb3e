import json

import padicverify as pv


def test_teichmuller_congruence():
    assert pv.teichmuller(5, 2, 2) == "5^0 * 7 :: 2"
    assert pv.teichmuller(7, 1, 10) == "7^0 * 1 :: 10"


def test_gamma_at_integers():
    assert pv.gamma(5, 2, 1, 4, 20).startswith("5^0 * 1 ::")


def test_gauss_valuation_steps():
    for p in (5, 7):
        for a in range(1, p - 1):
            num, _, den = pv.gauss_valuation(p, a, 20).partition("/")
            assert int(num) * (p - 1) == int(den or 1) * a


def test_unit_log_of_p_is_zero():
    assert pv.unit_log(5, 5, 30) in ("0",) or " 0 :: 0" in pv.unit_log(5, 5, 30)


def test_l_values_shape():
    value, deriv = pv.l_values(5, 1, 25)
    assert value.startswith("5^0 * ")
    assert int(value.split()[2]) % 5 == 2
    assert deriv.startswith("5^")


def test_verify_json_structure():
    raw = pv.verify_json(5, 20)
    doc = json.loads(raw)
    assert list(doc.keys()) == [
        "config",
        "conventions",
        "log_table",
        "discrepancy",
        "characters",
        "constants",
        "renorm",
        "infra_checks",
        "timings",
    ]
    assert doc["config"]["p"] == 5
    assert len(doc["characters"]) == 2
    assert doc["infra_checks"][-1]["name"] == "strict-gate"
    assert raw == pv.verify_json(5, 20)


def test_verify_csv_row():
    header, row = pv.verify_csv(7, 20)
    assert header.startswith("p,precision,num_odd_chi,")
    assert row.startswith("7,20,3,")
