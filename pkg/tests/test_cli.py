import json

from gor3.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


def test_colon_subcommand(capsys):
    code, report, _ = run_json(
        capsys, "colon", "--ci", "x^3,y^3,z^3", "--f", "x^2+y^2+z^2")
    assert code == 0
    assert report["minimal_profile"] == {"3": 7}
    assert report["socle"]["is_gorenstein"] is True
    assert report["datum"] == {"d": 3, "r": 7, "d_prime": 1}
    assert len(report["generators"]) == 7


def test_colon_reports_are_deterministic(capsys):
    args = ("colon", "--ci", "x^3,y^3,z^3", "--f", "x^2*y^2+x^2*z^2+y^2*z^2")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_socle_subcommand(capsys):
    code, report, _ = run_json(
        capsys, "socle", "--ideal", "x*y,x*z,y*z,x^2-z^2,y^2-z^2")
    assert code == 0
    assert report["socle"]["socle_degree"] == 2
    assert report["hilbert_function"] == [1, 3, 1, 0]


def test_betti_subcommand(capsys):
    code, report, _ = run_json(
        capsys, "betti", "--ideal", "x^2,y^2,z^2")
    assert code == 0
    assert [1, 2, 3] in report["betti"]["triples"]
    assert report["linear_resolution"] is False


def test_datum_subcommand(capsys):
    code, report, _ = run_json(capsys, "datum", "--ideal", "x^3,y^3,z^3")
    assert code == 0
    assert report["datum"] == {"d": 3, "r": 3, "d_prime": 3}


def test_ideal_from_file(tmp_path, capsys):
    path = tmp_path / "ideal.txt"
    path.write_text("x^3\ny^3\nz^3\n")
    code, report, _ = run_json(capsys, "datum", "--ideal", f"@{path}")
    assert code == 0
    assert report["datum"] == {"d": 3, "r": 3, "d_prime": 3}


def test_datum_failure_exit_code(capsys):
    code, report, _ = run_json(capsys, "datum", "--ideal", "x^2,y^3,z^4")
    assert code == 1
    assert "error" in report


def test_pfaffian_even(capsys):
    # a single upper-triangle row with one entry is a 2x2 matrix
    code, report, _ = run_json(capsys, "pfaffian", "--matrix", "x")
    assert code == 0
    assert report["size"] == 2
    assert report["pfaffian"] == "x"


def test_pfaffian_rejects_ragged_matrix(capsys):
    code, _, err = run(capsys, "pfaffian", "--matrix", "x,y,z")
    assert code == 2
    assert "upper triangle" in err or "square" in err


def test_pfaffian_file_matrix(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("x*y*z, y^3, x^3, x^2*y\nz^3, y^3, z^3\nz^3, x^3\nz^3\n")
    code, report, _ = run_json(capsys, "pfaffian", "--matrix", f"@{path}")
    assert code == 0
    assert report["size"] == 5
    assert report["minimal_profile"] == {"6": 5}
    assert report["datum"] == {"d": 6, "r": 5, "d_prime": 3}


def test_model_subcommand(capsys):
    code, report, _ = run_json(
        capsys, "model", "--r", "5", "--dp", "1", "--seed", "7")
    assert code == 0
    assert report["datum"] == {"d": 2, "r": 5, "d_prime": 1}
    assert report["seed"] == 7


def test_inverse_and_ann_round_trip(capsys):
    code, report, _ = run_json(
        capsys, "inverse", "--ideal", "x*y,x*z,y*z,x^2-z^2,y^2-z^2")
    assert code == 0
    assert report["generator"] == "X^2 + Y^2 + Z^2"
    code, back, _ = run_json(capsys, "ann", "--dual", report["generator"])
    assert code == 0
    assert back["minimal_profile"] == {"2": 5}


def test_newton_dual_subcommand(capsys):
    code, report, _ = run_json(
        capsys, "newton-dual", "--f", "x^2*y^2+x^2*z^2+y^2*z^2",
        "--socle-m", "3")
    assert code == 0
    assert report["dual"] == "X^2 + Y^2 + Z^2"


def test_directrix_subcommand(capsys):
    code, report, _ = run_json(
        capsys, "directrix", "--m", "3",
        "--ideal", "x*y,x*z,y*z,x^2-z^2,y^2-z^2")
    assert code == 0
    assert report["colon_identity_verified"] is True
    assert report["degree"] == 4


def test_linres_subcommand_with_char_warning(capsys):
    code, report, _ = run_json(
        capsys, "linres-test", "--f", "(x+y+z)^2", "--m", "3")
    assert code == 0
    assert report["verdict"] == "YES"
    assert "warning" not in report
    code, modp, _ = run_json(
        capsys, "linres-test", "--f", "(x+y+z)^2", "--m", "3",
        "--field", "fp:101")
    assert code == 0
    assert "characteristic" in modp["warning"]


def test_spans_subcommand(capsys):
    code, report, _ = run_json(
        capsys, "spans", "--forms", "x^2+z^2,x*y+z^2,x*z,y^2,y*z", "--e", "1")
    assert code == 0
    assert report["spans"] is True


def test_certify_quadrics_seeded(capsys):
    code, report, _ = run_json(capsys, "certify-quadrics", "--seed", "5")
    assert code == 0
    assert report["verdict"] in ("GORENSTEIN", "INCONCLUSIVE")
    if report["verdict"] == "GORENSTEIN":
        assert report["socle_confirms"] is True


def test_gap_subcommand(capsys):
    code, report, _ = run_json(
        capsys, "gap", "--ideal",
        "x^3,y^3,z^3,x*y*z,x*(y^2-z^2),y*(x^2-z^2),z*(x^2-y^2)")
    assert code == 0
    assert report["pure_power_index"] == 3
    assert report["gap"] == 2


def test_power_check_subcommand(capsys):
    code, report, _ = run_json(
        capsys, "power-check", "--ideal", "x*y,x*z,y*z,x^2-z^2,y^2-z^2",
        "--k", "2", "--seed", "1")
    assert code == 0
    assert report["power_equals_max_ideal_power"] is True
    assert report["reduction"]["reduction_number_is_two"] is True


def test_reproduce_single_case(capsys):
    code, out, _ = run(capsys, "reproduce", "--case", "ex-2-5")
    assert code == 0
    assert "PASS ex-2-5" in out


def test_reproduce_unknown_case(capsys):
    code, _, err = run(capsys, "reproduce", "--case", "nope")
    assert code == 2
    assert "unknown case" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "colon", "--ci", "x^3,y^(", "--f", "x")
    assert code == 2
    assert "parse error" in err


def test_field_flag_is_respected(capsys):
    code, report, _ = run_json(
        capsys, "colon", "--ci", "x^3,y^3,z^3", "--f", "x^2+y^2+z^2",
        "--field", "fp:101")
    assert code == 0
    assert report["field"] == "GF(101)"
    assert report["minimal_profile"] == {"3": 7}


def test_bad_field_spec(capsys):
    code, _, err = run(capsys, "socle", "--ideal", "x,y,z", "--field", "fp:9")
    assert code == 2


def test_usage_error(capsys):
    assert main(["colon"]) == 2
