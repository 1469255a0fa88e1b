import csv
import io
import json

from matchmoments.cli import main


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_pgf_plain(capsys):
    code, out, _ = run(capsys, "pgf", "--n", "1")
    assert code == 0
    assert "0\t2/3" in out and "2\t1/3" in out


def test_pgf_csv(capsys):
    code, out, _ = run(capsys, "pgf", "--n", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["j", "probability"], ["0", "8/35"], ["2", "24/35"], ["4", "3/35"]]
    assert '"8/35"' in out


def test_pgf_json(capsys):
    code, out, _ = run(capsys, "pgf", "--n", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["schema_version"] == 1 and doc["command"] == "pgf"
    assert doc["results"]["coefficients"] == {"0": "8/35", "2": "24/35", "4": "3/35"}
    assert doc["results"]["total_matchings"] == "105"


def test_usage_errors(capsys):
    assert run(capsys, "pgf", "--n", "0")[0] == 2
    assert run(capsys, "verify", "--r-max", "2")[0] == 2
    assert run(capsys, "moments", "--n-min", "5", "--n-max", "3")[0] == 2
    assert run(capsys, "oracle", "--n", "9")[0] == 2
    assert run(capsys, "fit", "--target", "bogus")[0] == 2
    assert run(capsys, "nosuchcommand")[0] == 2


def test_moments_csv(capsys, tmp_path):
    path = tmp_path / "m.csv"
    code, _, _ = run(capsys, "moments", "--n-min", "1", "--n-max", "1", "--r-max", "4", "--out", str(path))
    assert code == 0
    (row,) = list(csv.DictReader(path.open()))
    assert row["m1"] == "2/3" and row["mu2"] == "8/9" and row["alpha4"] == "3/2" and row["alpha3_sq"] == "1/2"


def test_moments_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "moments", "--n-max", "2", "--r-max", "2", "--out", str(tmp_path / "no" / "x.csv"))
    assert code != 0 and "x.csv" in err


def test_fit_mean(capsys):
    code, out, _ = run(capsys, "fit", "--target", "mean", "--n-max", "12")
    assert code == 0 and out.strip() == "(4*n^2-2*n)/(4*n-1)"


def test_fit_failure_exit_code(capsys):
    code, _, err = run(capsys, "fit", "--target", "alpha14", "--method", "direct")
    assert code == 1 and "no rational function" in err


def test_asympt_variance(capsys):
    code, out, _ = run(capsys, "asympt", "--target", "variance", "--order", "9", "--format", "json")
    coeffs = json.loads(out)["results"]["series"]["coefficients"]
    assert coeffs == ["1/2", "1/8", "1/16", "3/64", "19/512", "59/2048", "45/2048", "17/1024", "1637/131072",
                      "4917/524288"]


def test_asympt_mean_plain(capsys):
    code, out, _ = run(capsys, "asympt", "--target", "mean", "--order", "3")
    assert "n - 1/4 - 1/16*n^-1 - 1/64*n^-2 + O(n^-3)" in out


def test_asympt_derived_alpha(capsys):
    code, out, _ = run(capsys, "asympt", "--target", "alpha8", "--order", "2", "--format", "json")
    doc = json.loads(out)["results"]
    assert code == 0 and doc["method"] == "derived" and doc["limit"] == {"kind": "finite", "value": "105"}


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--r-max", "6", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["results"]["overall"] == "pass"
    limits = [m["limit"]["value"] for m in doc["results"]["per_moment"]]
    assert limits == ["0", "3", "0", "15"]
    first = doc["results"]["per_moment"][0]
    assert set(first) >= {"fitted_function", "series", "expected_limit", "verdict"}
    assert first["series"]["leading_exponent"] == -5


def test_verify_failure_exit(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "20", "--r-max", "6")
    assert code == 1 and "overall: fail" in out


def test_oracle_and_sample(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "2", "--format", "csv")
    assert list(csv.reader(io.StringIO(out)))[1:] == [["0", "24"], ["2", "72"], ["4", "9"]]
    a = json.loads(run(capsys, "sample", "--n", "3", "--trials", "500", "--seed", "4", "--format", "json")[1])
    b = json.loads(run(capsys, "sample", "--n", "3", "--trials", "500", "--seed", "4", "--format", "json")[1])
    a.pop("timing_ms"), b.pop("timing_ms")
    assert a == b and a["results"]["generator"] == "PCG64"


def test_deterministic_bytes(capsys):
    outs = []
    for _ in range(2):
        doc = json.loads(run(capsys, "verify", "--r-max", "4", "--format", "json")[1])
        doc.pop("timing_ms")
        outs.append(json.dumps(doc))
    assert outs[0] == outs[1]


def test_internal_error_exit_code(capsys, monkeypatch):
    import matchmoments.cli as cli_mod

    def boom(n):
        raise RuntimeError("boom")
    monkeypatch.setattr(cli_mod, "build_pgf", boom)
    assert run(capsys, "pgf", "--n", "1")[0] == 3
