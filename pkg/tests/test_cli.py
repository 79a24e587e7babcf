import os
import subprocess
import sys

import pytest

from ubd.qseries import deserialize_series


def run_cli(args, cache, check=True):
    env = dict(os.environ, UBD_CACHE_DIR=str(cache))
    proc = subprocess.run([sys.executable, "-m", "ubd"] + args,
                          capture_output=True, env=env)
    if check and proc.returncode != 0:
        raise AssertionError(
            f"exit {proc.returncode}: {proc.stderr.decode()}")
    return proc


def test_eta_record_output(tmp_path):
    p = run_cli(["eta", "1:2,13:-2", "--width", "1", "--terms", "10"], tmp_path)
    series = deserialize_series(p.stdout.decode())
    assert series.lead == -1
    assert series.coefficients(-1, 3) == [1, -2, -1, 2]


def test_eta_width_error_exit_code(tmp_path):
    p = run_cli(["eta", "1:1", "--width", "1", "--terms", "5"], tmp_path,
                check=False)
    assert p.returncode == 2
    assert b"incompatible" in p.stderr


def test_eta_eta_itself(tmp_path):
    p = run_cli(["eta", "1:1", "--width", "24", "--terms", "5"], tmp_path)
    series = deserialize_series(p.stdout.decode())
    assert series.lead == 1


def test_detect_entry_and_exit_codes(tmp_path):
    p = run_cli(["--format", "records", "detect", "--entry", "fP",
                 "--prime", "5", "--root", "5", "--terms", "40"], tmp_path)
    out = p.stdout.decode()
    assert "status=UnboundedCertified" in out
    assert "witness_index=1" in out
    assert "mode=rational" in out


def test_detect_unknown_entry_lists_labels(tmp_path):
    p = run_cli(["detect", "--entry", "nope", "--prime", "5", "--root", "5"],
                tmp_path, check=False)
    assert p.returncode == 2
    for lab in (b"fP1", b"fP", b"fQ", b"fQ+1P"):
        assert lab in p.stderr


def test_detect_series_file(tmp_path):
    eta = run_cli(["eta", "1:2,13:-2", "--width", "1", "--terms", "50"], tmp_path)
    f = tmp_path / "zeta.series"
    f.write_bytes(eta.stdout)
    p = run_cli(["--format", "records", "detect", "--series-file", str(f),
                 "--prime", "3", "--root", "3", "--terms", "50"], tmp_path)
    assert b"status=UnboundedCertified" in p.stdout
    assert b"witness_index=1" in p.stdout


def test_census_examples(tmp_path):
    p = run_cli(["census", "--xmax", "3"], tmp_path)
    assert p.stdout.decode().split("\t")[:2] == ["3", "4"]
    p = run_cli(["census", "--xmax", "100", "--b", "1,0,1"], tmp_path)
    fields = p.stdout.decode().split("\t")
    assert fields[1] == str(len_100_count())


def len_100_count():
    from ubd.census import s_count
    return s_count(100).count


def test_catalog_output(tmp_path):
    p = run_cli(["catalog", "--index", "5", "--terms", "6"], tmp_path)
    out = p.stdout.decode()
    assert out.count("entry ") == 6
    assert out.count("congruence known-congruence") == 1


def test_expand_xy_output(tmp_path):
    p = run_cli(["expand-xy", "--terms", "15"], tmp_path)
    out = p.stdout.decode()
    assert out.startswith("# kappa -1/1")
    assert "lead -2" in out and "lead -3" in out


def test_report_records(tmp_path):
    p = run_cli(["--format", "records", "report", "--index", "2",
                 "--terms", "30"], tmp_path)
    out = p.stdout.decode()
    assert out.count("status=UnboundedCertified") == 3
    assert "hypothesis_confirmed=True" in out


@pytest.mark.parametrize("args", [
    ["eta", "1:2,13:-2", "--width", "1", "--terms", "20"],
    ["expand-xy", "--terms", "12"],
    ["catalog", "--index", "2", "--terms", "5"],
    ["--format", "records", "detect", "--entry", "fP", "--prime", "5",
     "--root", "5", "--terms", "30"],
    ["census", "--xmax", "50"],
    ["census", "--xmax", "40", "--b", "2,1,2"],
    ["--format", "records", "report", "--index", "2", "--terms", "25"],
])
def test_determinism_byte_identical(tmp_path, args):
    first = run_cli(args, tmp_path)       # cold cache
    second = run_cli(args, tmp_path)      # warm cache
    assert first.stdout == second.stdout
    fresh = run_cli(args, tmp_path / "other")  # cold again
    assert first.stdout == fresh.stdout


def test_validation_exit_codes(tmp_path):
    cases = [
        ["eta", "0:1", "--width", "1", "--terms", "3"],
        ["eta", "1:x", "--width", "1", "--terms", "3"],
        ["expand-xy", "--terms", "3"],
        ["report", "--index", "2", "--terms", "15", "--prime", "4"],
        ["report", "--index", "3", "--terms", "15"],
        ["census", "--xmax", "1"],
        ["census", "--xmax", "30", "--b", "2,9,2"],
        ["detect", "--prime", "5", "--root", "5"],
    ]
    for args in cases:
        p = run_cli(args, tmp_path, check=False)
        assert p.returncode == 2, (args, p.stderr.decode())
        assert p.stderr.startswith(b"error:")


def test_detect_garbage_series_file(tmp_path):
    f = tmp_path / "bad.series"
    f.write_text("garbage\n")
    p = run_cli(["detect", "--series-file", str(f), "--prime", "3",
                 "--root", "3"], tmp_path, check=False)
    assert p.returncode == 2


def test_detect_inconclusive_exit_code(tmp_path):
    # a Q(i)-coefficient series whose conjugate valuations straddle the
    # threshold at the split prime 5: detection must exit 3
    from fractions import Fraction
    from ubd.exactnum import NumberField
    from ubd.qseries import LaurentSeries, serialize_series

    gauss = NumberField([1, 0, 1])
    i = gauss.gen()
    f = LaurentSeries(1, 0, [gauss.one(), (2 - i) / 5, gauss.zero()],
                      field=gauss)
    path = tmp_path / "straddle.series"
    path.write_text(serialize_series(f))
    p = run_cli(["--format", "records", "detect", "--series-file", str(path),
                 "--prime", "5", "--root", "2", "--terms", "2"], tmp_path,
                check=False)
    assert p.returncode == 3
    assert b"status=Inconclusive" in p.stdout


def test_cache_roundtrip_and_corruption(tmp_path):
    args = ["--format", "records", "detect", "--entry", "fP1", "--prime", "2",
            "--root", "2", "--terms", "25"]
    first = run_cli(args, tmp_path)
    files = [f for f in os.listdir(tmp_path) if f.endswith(".series")]
    assert files
    # corrupt every cache record; the run must warn and recompute identically
    for f in files:
        (tmp_path / f).write_text("series 1\nwidth nonsense\n")
    second = run_cli(args, tmp_path)
    assert b"recomputing" in second.stderr or second.stdout == first.stdout
    assert second.stdout == first.stdout
