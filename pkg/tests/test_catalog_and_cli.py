import json
import tempfile
from pathlib import Path
from unittest.mock import patch

import pytest
import pytest_check as check

from selfdual_codes_lib.catalog import (
    CatalogRecord,
    append_records,
    build_record,
    catalog_keys,
    read_catalog,
)
from selfdual_codes_lib.claims import REFUTED, ClaimVerdict
from selfdual_codes_lib.cli import (
    EXIT_CATALOG,
    EXIT_CHAR_TWO,
    EXIT_INVALID,
    EXIT_MISMATCH,
    EXIT_OK,
    main,
)
from selfdual_codes_lib.config import OracleLimits
from selfdual_codes_lib.errors import CatalogCorruptError


def run(capsys, *argv):
    code = main(["--env-file", "selfdual-tests-no-such.env", *argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- catalog ---

def test_build_record(f5):
    record = build_record(f5, 10)
    assert record.key == (5, 1, 10, -1)
    assert record.exists
    assert record.count == 6
    assert len(record.generators) == 6
    assert (record.pairing_s, record.pairing_t) == (0, 1)
    assert not record.oracle_checked
    assert record.timestamp.endswith("Z")


def test_build_record_with_oracle(f5, f3):
    assert build_record(f5, 10, verify=True).oracle_checked
    record = build_record(f3, 6, verify=True)
    assert record.oracle_checked
    assert not record.exists
    assert record.count == 0
    assert record.generators == ()


def test_build_record_truncates_and_skips(f5):
    with pytest.warns(UserWarning, match="catalog list left empty"):
        record = build_record(f5, 10, generator_limit=2)
    assert record.generators_truncated
    assert record.generators == ()
    with pytest.warns(UserWarning, match="not oracle-checked"):
        record = build_record(f5, 10, verify=True, limits=OracleLimits(max_n=4))
    assert not record.oracle_checked


def test_record_line_format(f5):
    record = build_record(f5, 10)
    line = record.to_line()
    assert line.endswith("\n")
    data = json.loads(line)
    assert list(data) == ["key", "provenance", "result"]
    assert data["key"] == {"a": -1, "n": 10, "p": 5, "s": 1}
    assert data["result"]["pairing"] == {"s": 0, "t": 1}
    assert CatalogRecord.from_dict(data) == record


def test_append_skips_known_keys(f5, f3, catalog_path, capsys):
    first = append_records(catalog_path, [build_record(f5, 10), build_record(f3, 6)])
    assert len(first) == 2
    again = append_records(catalog_path, [build_record(f5, 10), build_record(f5, 6)], verbose=True)
    assert [r.key for r in again] == [(5, 1, 6, -1)]
    assert "[Catalog]" in capsys.readouterr().out
    assert catalog_keys(catalog_path) == {(5, 1, 10, -1), (3, 1, 6, -1), (5, 1, 6, -1)}
    assert len(catalog_path.read_text(encoding="utf-8").splitlines()) == 3


def test_read_missing_catalog(tmp_path):
    assert read_catalog(tmp_path / "absent.jsonl") == []


def test_corrupt_catalog_reports_line(f5):
    with tempfile.TemporaryDirectory() as tmpdir:
        path = Path(tmpdir) / "catalog.jsonl"
        path.write_text(build_record(f5, 10).to_line() + "{not json\n", encoding="utf-8")
        with pytest.raises(CatalogCorruptError) as excinfo:
            read_catalog(path)
        assert excinfo.value.line_number == 2
        assert "at line 2" in str(excinfo.value)


# --- cli ---

def test_cli_factor(capsys):
    code, out, _ = run(capsys, "factor", "--p", "5", "--n", "10")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "1 + x^10 over F_5 (n = 2 * 5^1)"
    assert lines[1].split() == ["[0]", "(3", "+", "x)^5", "pair:1"]
    assert lines[-1] == "s=0 t=1"


def test_cli_factor_in_characteristic_two(capsys):
    code, out, _ = run(capsys, "factor", "--p", "2", "--n", "6")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "1 + x^6 over F_2 (n = 3 * 2^1)"
    assert len(lines) == 4
    assert run(capsys, "factor", "--p", "2", "--n", "6", "--constant", "1") == (EXIT_OK, out, "")
    assert run(capsys, "factor", "--p", "4", "--n", "6")[0] == EXIT_INVALID


def test_cli_factor_json(capsys):
    code, out, _ = run(capsys, "factor", "--p", "5", "--n", "10", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["field"] == {"modulus": "x", "p": 5, "s": 1}
    assert data["factors"][0] == {"mult": 5, "pairing": "pair:1", "poly": "3 + x"}
    assert (data["s"], data["t"], data["core"], data["r"]) == (0, 1, 2, 1)


def test_cli_count_and_exists(capsys):
    code, out, _ = run(capsys, "count", "--p", "5", "--n", "70")
    assert code == EXIT_OK
    assert "count: 36" in out
    code, out, _ = run(capsys, "exists", "--p", "3", "--n", "6")
    assert code == EXIT_OK
    assert "exists: false" in out
    code, out, _ = run(capsys, "count", "--p", "3", "--s", "2", "--n", "30", "--json")
    assert json.loads(out)["count"] == 64


def test_cli_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--p", "5", "--n", "10", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert len(data["generators"]) == 6
    assert data["exists"] is True


def test_cli_verify(capsys):
    code, out, _ = run(capsys, "verify", "--p", "5", "--n", "10")
    assert code == EXIT_OK
    assert "oracle: 6 (agrees)" in out


def test_cli_cyclic_over_characteristic_two(capsys):
    code, _, err = run(capsys, "count", "--p", "2", "--n", "14")
    assert code == EXIT_CHAR_TWO
    assert err.startswith("selfdual: ")
    code, out, _ = run(capsys, "count", "--p", "2", "--n", "14", "--constant", "1")
    assert code == EXIT_OK
    assert "count: 3" in out


def test_cli_invalid_parameters(capsys):
    check.equal(run(capsys, "count", "--p", "4", "--n", "10")[0], EXIT_INVALID)
    check.equal(run(capsys, "count", "--p", "5")[0], EXIT_INVALID)
    check.equal(run(capsys, "count", "--p", "5", "--n", "10", "--constant", "2")[0], EXIT_INVALID)
    check.equal(run(capsys, "order", "--q", "5", "--m", "10")[0], EXIT_INVALID)
    check.equal(run(capsys, "--help")[0], EXIT_OK)


def test_cli_oracle_guard(capsys, monkeypatch):
    monkeypatch.setenv("SELFDUAL_ORACLE_MAX_N", "8")
    code, _, err = run(capsys, "verify", "--p", "5", "--n", "10")
    assert code == EXIT_INVALID
    assert "oracle length guard" in err


def test_cli_order(capsys):
    code, out, _ = run(capsys, "order", "--q", "2", "--m", "7")
    assert code == EXIT_OK
    assert out.splitlines() == ["ord_7(2) = 3", "  {0} self-paired", "  {1,2,4}", "  {3,5,6}"]
    code, out, _ = run(capsys, "order", "--q", "3", "--m", "4", "--odd")
    assert out.splitlines()[0] == "ord_8(3) = 2"


def test_cli_claims_table_and_exit_code(capsys, tmp_path):
    agree = ClaimVerdict("example-2i", {"p": 5}, True, True, True, details={"engine_oracle_agree": True})
    broken = ClaimVerdict(
        "thm1-F5-n4", {"p": 5}, None, True, False, status=REFUTED, details={"engine_oracle_agree": False}
    )
    with patch("selfdual_codes_lib.cli.run_claims_report", return_value=[agree]) as mocked:
        code, out, _ = run(capsys, "claims", "--no-sweeps", "--max-n", "10")
    assert code == EXIT_OK
    assert mocked.call_args.args[0].include_sweeps is False
    assert mocked.call_args.args[0].max_n == 10
    assert out.splitlines()[1].split() == ["example-2i", "confirmed", "true", "true", "true"]

    out_file = tmp_path / "claims.jsonl"
    with patch("selfdual_codes_lib.cli.run_claims_report", return_value=[agree, broken]):
        code, _, _ = run(capsys, "claims", "--json", "--out", str(out_file))
    assert code == EXIT_MISMATCH
    rows = [json.loads(line) for line in out_file.read_text(encoding="utf-8").splitlines()]
    assert [r["claim_id"] for r in rows] == ["example-2i", "thm1-F5-n4"]


@pytest.mark.slow
@pytest.mark.timeout(1800)
def test_cli_claims_json_is_byte_identical_across_runs(capsys, tmp_path):
    outputs = []
    for name in ("first.jsonl", "second.jsonl"):
        out_file = tmp_path / name
        code, _, _ = run(capsys, "claims", "--no-sweeps", "--json", "--out", str(out_file))
        assert code == EXIT_OK
        outputs.append(out_file.read_bytes())
    assert outputs[0] == outputs[1]
    rows = [json.loads(line) for line in outputs[0].decode("utf-8").splitlines()]
    assert [r["claim_id"] for r in rows] == sorted(r["claim_id"] for r in rows)
    assert all("paper_outcome" in r for r in rows)


def test_cli_catalog_append(capsys, catalog_path):
    code, _, _ = run(capsys, "count", "--p", "5", "--n", "10", "--catalog", str(catalog_path))
    assert code == EXIT_OK
    code, _, _ = run(capsys, "verify", "--p", "5", "--n", "10", "--catalog", str(catalog_path))
    assert code == EXIT_OK
    records = read_catalog(catalog_path)
    assert len(records) == 1
    assert records[0].count == 6


def test_cli_catalog_from_environment(capsys, monkeypatch, tmp_path):
    target = tmp_path / "env_catalog.jsonl"
    monkeypatch.setenv("SELFDUAL_CATALOG", str(target))
    code, _, _ = run(capsys, "count", "--p", "3", "--n", "4", "--catalog")
    assert code == EXIT_OK
    assert catalog_keys(target) == {(3, 1, 4, -1)}


def test_cli_catalog_rejects_cyclic(capsys, catalog_path):
    code, _, _ = run(capsys, "count", "--p", "2", "--n", "14", "--constant", "1", "--catalog", str(catalog_path))
    assert code == EXIT_INVALID
    assert not catalog_path.exists()


def test_cli_corrupt_catalog(capsys, catalog_path):
    catalog_path.write_text("not json\n", encoding="utf-8")
    code, _, err = run(capsys, "count", "--p", "5", "--n", "10", "--catalog", str(catalog_path))
    assert code == EXIT_CATALOG
    assert "Corrupt catalog" in err


def test_cli_sweep(capsys, catalog_path):
    code, _, _ = run(capsys, "sweep", "--p-list", "3,5", "--n-max", "6", "--catalog", str(catalog_path))
    assert code == EXIT_OK
    keys = catalog_keys(catalog_path)
    assert len(keys) == 12
    assert (5, 1, 6, -1) in keys
    code, out, _ = run(capsys, "sweep", "--p-list", "3,5", "--n-max", "6", "--catalog", str(catalog_path), "--verbose")
    assert code == EXIT_OK
    assert "[Sweep] 0 new records, 12 already catalogued" in out
    assert len(read_catalog(catalog_path)) == 12


def test_cli_sweep_rejects_bad_primes(capsys, catalog_path):
    assert run(capsys, "sweep", "--p-list", "2,3", "--n-max", "4", "--catalog", str(catalog_path))[0] == EXIT_CHAR_TWO
    assert run(capsys, "sweep", "--p-list", "3,x", "--n-max", "4", "--catalog", str(catalog_path))[0] == EXIT_INVALID


def test_cli_sweep_keeps_finished_fields(capsys, catalog_path):
    def fail_on_f5(field, n, **kwargs):
        if field.p == 5:
            raise AssertionError("enumeration and oracle disagree")
        return build_record(field, n, **kwargs)

    with patch("selfdual_codes_lib.cli.build_record", side_effect=fail_on_f5):
        with pytest.raises(AssertionError):
            run(capsys, "sweep", "--p-list", "3,5", "--n-max", "4", "--catalog", str(catalog_path))
    assert catalog_keys(catalog_path) == {(3, 1, n, -1) for n in range(1, 5)}

    code, _, _ = run(capsys, "sweep", "--p-list", "3,5", "--n-max", "4", "--catalog", str(catalog_path))
    assert code == EXIT_OK
    assert len(read_catalog(catalog_path)) == 8
