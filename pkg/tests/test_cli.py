import json
import subprocess
import sys

import numpy as np
import pytest

from abharm import __version__
from abharm.cli import RunConfig, main, run
from abharm.errors import SchemaError


def call(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def values(doc):
    return np.array([complex(*v) for v in doc["values"]])


def test_transform_example(capsys):
    status, out, _ = call(capsys, "transform", "--group", '{"cyclic_orders":[2]}',
                          "--in", '{"values": [[1,0],[1,0]]}')
    assert status == 0
    assert values(json.loads(out)).tolist() == [1, 0]


def test_transform_counting_and_naive(capsys, tmp_path):
    rng = np.random.default_rng(0)
    v = rng.normal(size=(12, 2)).tolist()
    f = write(tmp_path / "f.json", {"values": v})
    g = write(tmp_path / "g.json", {"cyclic_orders": [3, 4]})
    docs = {}
    for flags in ((), ("--naive",), ("--haar", "counting")):
        status, out, _ = call(capsys, "transform", "--group", g, "--in", f, *flags)
        assert status == 0
        docs[flags] = values(json.loads(out))
    assert np.max(np.abs(docs[()] - docs[("--naive",)])) <= 1e-9
    assert np.max(np.abs(docs[()] * 12 - docs[("--haar", "counting")])) <= 1e-9


def test_characters_and_haar_unique(capsys):
    status, out, _ = call(capsys, "characters", "--group", '{"cyclic_orders":[2]}')
    assert status == 0
    assert json.loads(out)["characters"] == [{"frequencies": [0]}, {"frequencies": [1]}]
    for argv in (("haar-unique",), ("haar", "unique")):
        status, out, _ = call(capsys, *argv, "--group", '{"cyclic_orders":[3]}')
        assert status == 0 and json.loads(out) == {"dimension": 1}


def test_haar_check(capsys, tmp_path):
    f = write(tmp_path / "f.json", {"values": [[1, 0], [2, 0], [0, 0], [0, 5], [1, 1], [3, 0]]})
    for argv in (("haar-check",), ("haar", "check")):
        status, out, _ = call(capsys, *argv, "--group", '{"cyclic_orders":[2,3]}',
                              "--function", f, "--shifts", "3")
        assert status == 0
        report = json.loads(out)
        assert set(report) == {"invariance_max_residual", "positivity_ok", "linearity_max_residual"}
        assert report["positivity_ok"] is True
        assert report["invariance_max_residual"] <= 1e-12
        assert report["linearity_max_residual"] <= 1e-12


def test_convolve_translate(capsys, tmp_path):
    g = '{"cyclic_orders":[4]}'
    d1 = write(tmp_path / "d1.json", {"values": [0, 1, 0, 0]})
    status, out, _ = call(capsys, "convolve", "--group", g, "--in", d1, "--in2", d1,
                          "--haar", "counting")
    assert status == 0 and values(json.loads(out)).tolist() == [0, 0, 1, 0]
    status, out, _ = call(capsys, "translate", "--group", g, "--in", d1, "--by", "[2]")
    assert status == 0 and values(json.loads(out)).tolist() == [0, 0, 0, 1]


def test_laplace(capsys, tmp_path):
    s = write(tmp_path / "s.json", {"support": [[1, [1, 0]]]})
    status, out, _ = call(capsys, "laplace", "--support", s, "--base", "2,0")
    assert status == 0
    assert json.loads(out) == {"value": [2.0, 0.0], "character": "unbounded"}
    status, out, _ = call(capsys, "laplace", "--support", s, "--base", "0,1")
    assert json.loads(out) == {"value": [0.0, -1.0], "character": "bounded"}


def test_cantor(capsys, tmp_path):
    cf = write(tmp_path / "cf.json", {"base": 2, "depth": 1, "values": [[1, 0], [0, 0]]})
    status, out, _ = call(capsys, "cantor", "integrate", "--in", cf)
    assert status == 0 and json.loads(out) == {"integral": [0.5, 0.0]}
    status, out, _ = call(capsys, "cantor-refine", "--in", cf, "--to", "2")
    doc = json.loads(out)
    assert doc["depth"] == 2 and values(doc).tolist() == [1, 0, 1, 0]
    status, out, _ = call(capsys, "cantor", "transform", "--in", cf, "--base", "2", "--depth", "1")
    assert values(json.loads(out)).tolist() == [0.5, 0.5]
    status, _, err = call(capsys, "cantor", "transform", "--in", cf, "--base", "3")
    assert status == 1 and json.loads(err)["error"]["code"] == "shape_mismatch"


def test_csv_input(capsys, tmp_path):
    path = tmp_path / "f.csv"
    path.write_text("re,im\n1,0\n1,0\n")
    status, out, _ = call(capsys, "transform", "--group", '{"cyclic_orders":[2]}',
                          "--in", str(path), "--csv")
    assert status == 0 and values(json.loads(out)).tolist() == [1, 0]


def test_round_trip_through_files(capsys, tmp_path):
    rng = np.random.default_rng(7)
    orig = rng.normal(size=(60, 2))
    f = write(tmp_path / "f.json", {"values": orig.tolist()})
    g = write(tmp_path / "g.json", {"cyclic_orders": [3, 4, 5]})
    spec, back = tmp_path / "F.json", tmp_path / "back.json"
    assert main(["transform", "--group", g, "--in", f, "--out", str(spec)]) == 0
    assert main(["itransform", "--group", g, "--in", str(spec), "--out", str(back)]) == 0
    got = values(json.loads(back.read_text()))
    assert np.max(np.abs(got - (orig[:, 0] + 1j * orig[:, 1]))) <= 1e-9
    first = spec.read_bytes()
    assert main(["transform", "--group", g, "--in", f, "--out", str(spec)]) == 0
    assert spec.read_bytes() == first
    # the output carries its group, so --group may be omitted downstream
    assert main(["itransform", "--in", str(spec), "--out", str(back)]) == 0


@pytest.mark.parametrize("argv,code,status", [
    (("transform", "--group", '{"cyclic_orders":[3]}', "--in", '{"values":[1,2]}'), "shape_mismatch", 1),
    (("transform", "--group", '{"cyclic_orders":[0]}', "--in", '{"values":[1]}'), "non_positive_order", 1),
    (("transform", "--group", '{"cyclic_orders":[4096,4096,2]}', "--in", '{"values":[1]}'), "size_cap_exceeded", 1),
    (("transform", "--group", '{"orders":[3]}', "--in", '{"values":[1,2,3]}'), "schema_error", 1),
    (("transform", "--group", '{"cyclic_orders":[3]', "--in", '{"values":[1,2,3]}'), "schema_error", 1),
    (("transform", "--in", '{"values":[1,2,3]}'), "schema_error", 1),
    (("transform", "--group", "missing.json", "--in", '{"values":[1]}'), "io_error", 2),
    (("transform", "--group", '{"cyclic_orders":[1]}', "--in", '{"values":[1]}', "--precision", "5"), "schema_error", 1),
    (("laplace", "--support", '{"support":[[0,[1,0]]]}', "--base", "0,0"), "zero_base", 1),
    (("transform",), "usage_error", 1),
])
def test_error_paths(capsys, argv, code, status):
    got, out, err = call(capsys, *argv)
    assert got == status
    assert out == ""
    assert json.loads(err.splitlines()[-1])["error"]["code"] == code


def test_error_object_has_path(capsys, tmp_path):
    f = write(tmp_path / "bad.json", {"values": [[1, 2, 3]]})
    status, out, err = call(capsys, "transform", "--group", '{"cyclic_orders":[1]}', "--in", f)
    assert status == 1 and out == ""
    assert json.loads(err)["error"]["path"] == f


def test_size_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("ABHARM_SIZE_CAP", "4")
    status, _, err = call(capsys, "characters", "--group", '{"cyclic_orders":[5]}')
    assert status == 1 and json.loads(err)["error"]["code"] == "size_cap_exceeded"


def test_run_config_validation():
    with pytest.raises(SchemaError):
        RunConfig(command="nope")
    with pytest.raises(SchemaError):
        RunConfig(command="transform", precision=18)
    status, text = run(RunConfig(command="characters", inputs={"group": '{"cyclic_orders":[]}'}))
    assert status == 0 and json.loads(text)["characters"] == [{"frequencies": []}]


def test_precision_controls_digits(capsys):
    args = ("transform", "--group", '{"cyclic_orders":[3]}', "--in", '{"values":[1,0,0]}',
            "--haar", "normalized")
    _, out6, _ = call(capsys, *args, "--precision", "6")
    assert json.loads(out6)["values"][0] == [0.333333, 0.0]
    _, out12, _ = call(capsys, *args)
    assert json.loads(out12)["values"][0] == [0.333333333333, 0.0]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "abharm", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and __version__ in proc.stdout
