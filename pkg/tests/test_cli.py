import io
import json
import subprocess
import sys

from bscone.cli import run

EXAMPLE_JSON = json.dumps({"vars": 3, "entries": [[0, 0, 1], [1, 2, 2], [1, 3, 1], [2, 3, 1], [2, 4, 2], [3, 5, 1]]})


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def test_decompose_json():
    code, out, _ = call(["decompose", "-"], EXAMPLE_JSON)
    assert code == 0
    obj = json.loads(out)
    assert [(p["coefficient"], p["degrees"]) for p in obj["parts"]] == [
        ("1/5", [0, 2, 3, 5]), ("1/10", [0, 2, 4, 5]), ("1/6", [0, 3, 4]), ("1/3", [0, 3])]
    assert obj["parts"][1]["diagram"]["entries"] == [[0, 0, 3], [1, 2, 10], [2, 4, 15], [3, 5, 8]]


def test_decompose_layout_format(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(EXAMPLE_JSON)
    code, out, _ = call(["decompose", str(path), "--format", "paper"])
    assert code == 0
    assert "1/5 * (0,2,3,5)" in out
    assert "+ 1/3 * (0,3)" in out


def test_decompose_product_normalization():
    code, out, _ = call(["decompose", "-", "--normalization", "product"], EXAMPLE_JSON)
    assert [p["coefficient"] for p in json.loads(out)["parts"]] == [6, 12, 2, 1]


def test_not_in_cone_exit_code():
    table = json.dumps({"vars": 1, "entries": [[0, 0, 1], [1, 1, 100]]})
    code, _, err = call(["decompose", "-"], table)
    assert code == 2
    assert "NotInCone" in err


def test_usage_errors():
    assert call(["pure", "0,0"])[0] == 1
    assert call(["decompose", "-"], "not json")[0] == 1
    assert call(["decompose", "-"], '{"vars": 1, "entries": [[0, 0, 0.5]]}')[0] == 1
    assert call(["betti", "--ideal", "x^2"])[0] == 1
    assert call(["frobnicate"])[0] == 1


def test_pure():
    code, out, _ = call(["pure", "0,2,4,5"])
    obj = json.loads(out)
    assert code == 0
    assert obj["canonical"]["entries"] == [[0, 0, 3], [1, 2, 10], [2, 4, 15], [3, 5, 8]]
    assert obj["scale"] == 120


def test_supernatural():
    code, out, _ = call(["supernatural", "--roots=0,-4", "--window=-7:3"])
    obj = json.loads(out)
    assert obj["rank"] == 2
    assert obj["gamma"][2][:3] == [21, 12, 5]
    assert obj["gamma"][1][4:7] == [3, 4, 3]
    assert obj["gamma"][0][-3:] == [5, 12, 21]


def test_pair_and_truncated_pair():
    table = json.dumps({"vars": 4, "entries": [[0, 0, 2], [1, 1, 4], [2, 3, 4], [3, 4, 2]]})
    assert json.loads(call(["pair", "-", "--roots=0,-4"], table)[1])["value"] == 0
    obj = json.loads(call(["pair", "-", "--roots=0,-4", "--tau", "1", "--kappa", "1"], table)[1])
    assert obj["value"] == 12
    assert call(["pair", "-", "--roots=0,-4", "--kappa", "1"], table)[0] == 1


def test_facet(tmp_path):
    path = tmp_path / "b.json"
    path.write_text(json.dumps({"vars": 4, "entries": [[0, 0, 2], [1, 1, 4], [2, 3, 4], [3, 4, 2]]}))
    code, out, _ = call(["facet", "--a", "0,2,3,4", "--b", "0,1,3,4", "--c", "0,1,2,4", "--vars", "4",
                         "--eval", str(path)])
    obj = json.loads(out)
    assert code == 0
    assert (obj["roots"], obj["tau"], obj["kappa"]) == ([0, -4], 1, 1)
    assert obj["values_on_chain"] == {"a": 0, "b": 6, "c": 0}
    assert obj["value"] == 12


def test_bad_chain_exit_code():
    code, _, _ = call(["facet", "--a", "0,2,4", "--b", "0,1,4", "--c", "0,1,3"])
    assert code == 2


def test_betti_and_pipeline():
    code, out, _ = call(["betti", "--ideal", "x^2,x*y,x*z^2", "--vars", "x,y,z"])
    assert code == 0
    code, out2, _ = call(["decompose", "-"], out)
    assert code == 0 and len(json.loads(out2)["parts"]) == 4


def test_betti_random_is_reproducible():
    assert call(["betti", "--random", "7"])[1] == call(["betti", "--random", "7"])[1]


def test_hilbert():
    obj = json.loads(call(["hilbert", "-", "--at", "2"], EXAMPLE_JSON)[1])
    assert obj["codimension"] == 1 and obj["multiplicity"] == 1
    assert obj["at"] == {"k": 2, "value": 4}
    obj = json.loads(call(["hilbert", "-", "--series", "4"], EXAMPLE_JSON)[1])
    assert obj["series"] == [1, 3, 4, 4, 5]


def test_check_bounds():
    obj = json.loads(call(["check-bounds", "-"], EXAMPLE_JSON)[1])
    assert (obj["multiplicity"], obj["bound"], obj["equality"]) == (1, 3, False)
    pure = json.dumps({"vars": 3, "entries": [[0, 0, 1], [1, 2, 5], [2, 3, 5], [3, 5, 1]]})
    obj = json.loads(call(["check-bounds", "-"], pure)[1])
    assert (obj["multiplicity"], obj["bound"], obj["equality"]) == (5, 5, True)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bscone", "pure", "0,3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["canonical"]["entries"] == [[0, 0, 1], [1, 3, 1]]
