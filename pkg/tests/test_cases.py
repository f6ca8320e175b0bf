from gor3.cases import case_ids, run_case
from gor3.fields import GF


def test_every_registered_case_passes():
    for cid in case_ids():
        res = run_case(cid)
        assert res.passed, (cid, [c for c in res.checks if not c[1]])


def test_case_results_serialize():
    res = run_case("ex-2-5")
    d = res.as_dict()
    assert d["case"] == "ex-2-5"
    assert d["passed"] is True
    assert all(c["ok"] for c in d["checks"])


def test_char_zero_case_skips_over_prime_field():
    res = run_case("sum-power", field=GF(101))
    assert res.skipped
    assert "characteristic" in res.note


def test_small_cases_hold_mod_p():
    F = GF(101)
    for cid in ("ex-2-5", "ex-3-7", "non-equigen-xyz", "five-quadrics-unit"):
        res = run_case(cid, field=F)
        assert res.passed, (cid, [c for c in res.checks if not c[1]])
