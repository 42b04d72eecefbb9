import io as _io
import json

import pytest

from conftest import FIXTURES
from levikit import catalog, io
from levikit.action import validate_action, validate_grading
from levikit.cli import run
from levikit.cohomology import coboundary1
from levikit.errors import InputError
from levikit.exactmat import Matrix, Q, Subspace
from levikit.hopf import group_algebra, sweedler4, validate_hopf
from levikit.levi import LeviDecomposition, verify_decomposition
from levikit.groups import symmetric_group3


def cli(*argv):
    out, err = _io.StringIO(), _io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def fx(name):
    return FIXTURES / name


# -- file formats ------------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(catalog.ALGEBRAS))
def test_algebra_round_trip(name):
    L = catalog.ALGEBRAS[name]()
    back = io.algebra_from_dict(json.loads(io.write_json(io.algebra_to_dict(L))))
    assert back.dim == L.dim and back.labels == L.labels
    assert all(back.bracket_basis(i, j) == L.bracket_basis(i, j)
               for i in range(L.dim) for j in range(L.dim))


@pytest.mark.parametrize("h", [sweedler4(), group_algebra(symmetric_group3())[0]])
def test_hopf_round_trip(h):
    back = validate_hopf(io.hopf_from_dict(json.loads(io.write_json(io.hopf_to_dict(h)))))
    assert io.hopf_to_dict(back) == io.hopf_to_dict(h)


def test_structure_round_trips():
    L, g = catalog.s3_block()
    g2 = validate_grading(L, io.grading_from_dict(io.grading_to_dict(g), L.dim))
    assert g2.degrees == g.degrees
    L6, a = catalog.l6_sweedler()
    d = io.module_to_dict(a, hopf_ref=io.hopf_to_dict(a.hopf))
    a2 = validate_action(L6, io.module_from_dict(d, L6.dim))
    assert all(x == y for x, y in zip(a2.act, a.act))


def test_fixture_files_match_catalog():
    L, g = catalog.s3_block()
    assert io.algebra_to_dict(io.load_algebra(fx("s3_block.alg"))) == io.algebra_to_dict(L)
    assert io.load_structure(L, "grading", fx("s3.grading")).degrees == g.degrees


def test_cochain_round_trip():
    d = io.read_json(fx("sl2_adj.cochain"))
    c = io.cochain_from_dict(d, 3)
    assert io.cochain_to_dict(c) == d


def test_output_is_canonical_json():
    text = io.write_json({"a": [1, 2, 3], "b": {"c": [["1/2", "0"]]}})
    assert json.loads(text) == {"a": [1, 2, 3], "b": {"c": [["1/2", "0"]]}}
    assert '"a": [1, 2, 3]' in text and text.endswith("\n")


@pytest.mark.parametrize("bad, needle", [
    ({"dim": 2, "bracket": [{"i": 0, "j": 1, "c": {"0": 0.5}}]}, "p/q"),
    ({"dim": 2, "bracket": [{"i": 0, "j": 2, "c": {"0": "1"}}]}, ""),
    ({"dim": 2, "bracket": [{"i": 1, "j": 0, "c": {"0": "1"}}]}, ""),
    ({"bracket": []}, "dim"),
    ({"dim": 2, "bracket": [{"i": 0, "j": 1, "c": {"0": "x/y"}}]}, ""),
])
def test_malformed_algebras_are_input_errors(bad, needle):
    with pytest.raises(InputError) as e:
        io.algebra_from_dict(bad)
    assert needle in str(e.value)


def test_q_rejects_floats():
    with pytest.raises(TypeError):
        Q(0.5)
    assert Q("3/6") == Q(1) / 2


# -- command line ------------------------------------------------------------------------

def test_decompose_s3_block_example():
    code, out, _ = cli("decompose", fx("s3_block.alg"), "--grading", fx("s3.grading"))
    assert code == 0
    assert "B: dim 6" in out and "R: dim 2" in out and "N: dim 2" in out and "S: dim 0" in out
    assert "homogeneous: yes" in out and "[FAIL]" not in out


def test_levi_sweedler_exits_with_hypothesis_failure():
    code, out, err = cli("levi", fx("l6.alg"), "--module", fx("sweedler_action.act"), "--hopf", fx("h4.hopf"))
    assert code == 2 and out == ""
    assert "RadicalNotInvariant" in err


def test_integral_h4_exits_with_hypothesis_failure():
    code, out, err = cli("integral", fx("h4.hopf"), "--format", "structured")
    assert code == 2
    d = json.loads(out)
    assert d["error"] == "NormalizationImpossible"
    assert d["details"]["integral_space_dim"] == 1


def test_integral_group_algebra():
    code, out, _ = cli("integral", fx("s3.hopf"), "--format", "structured")
    d = json.loads(out)
    assert code == 0 and d["t"] == ["1", "0", "0", "0", "0", "0"]
    assert d["normalized"] and d["ad_invariant"]


def test_output_is_deterministic(tmp_path):
    runs = [cli("decompose", fx("l7.alg"), "--format", "structured") for _ in range(2)]
    assert runs[0] == runs[1]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    cli("split", fx("sl2_swap.alg"), "--grading", fx("sl2_swap.grading"), "--output", a)
    cli("split", fx("sl2_swap.alg"), "--grading", fx("sl2_swap.grading"), "--output", b)
    assert a.read_bytes() == b.read_bytes()


def test_structured_decomposition_reverifies():
    code, out, _ = cli("decompose", fx("l7.alg"), "--format", "structured")
    assert code == 0
    d = json.loads(out)
    L = io.load_algebra(fx("l7.alg"))

    def sub(x):
        return Subspace([tuple(Q(c) for c in row) for row in x["basis"]], L.dim)

    dec = LeviDecomposition(sub(d["B"]), sub(d["R"]), sub(d["S"]), sub(d["N"]),
                            [sub(c) for c in d["components"]])
    assert all(ok for _, ok in verify_decomposition(L, None, dec))
    assert d["passed"] and d["S"]["dim"] == 1 and d["N"]["dim"] == 2


def test_split_without_and_with_swap():
    code, out, _ = cli("split", fx("sl2_sum.alg"), "--format", "structured")
    assert code == 0 and [c["dim"] for c in json.loads(out)["components"]] == [3, 3]
    code, out, _ = cli("split", fx("sl2_swap.alg"), "--grading", fx("sl2_swap.grading"), "--format", "structured")
    assert code == 0 and [c["dim"] for c in json.loads(out)["components"]] == [6]


def test_obstruction_command():
    code, out, _ = cli("obstruction", fx("block7.alg"), "--automorphism", fx("block7.aut"), "--format", "structured")
    d = json.loads(out)
    assert code == 0 and d["obstructed"] and d["fixed_equals_R"]
    assert d["R"]["dim"] == 4


def test_weyl_with_representation():
    code, out, _ = cli("weyl", fx("sl2.alg"), "--rep", fx("sl2_nat_adj.rep"), "--format", "structured")
    assert code == 0
    assert sorted(c["dim"] for c in json.loads(out)["components"]) == [2, 3]


def test_cohomology_solve_round_trip():
    code, out, _ = cli("cohomology", "solve", fx("sl2.alg"), "--cochain", fx("sl2_adj.cochain"),
                       "--format", "structured")
    assert code == 0
    L = io.load_algebra(fx("sl2.alg"))
    omega = Matrix([[Q(x) for x in row] for row in json.loads(out)["omega"]], 3)
    phi = io.cochain_from_dict(io.read_json(fx("sl2_adj.cochain")), 3)
    assert coboundary1(L, list(L.ad_basis), omega) == phi


def test_radical_and_validate_text():
    code, out, _ = cli("radical", fx("gl2.alg"))
    assert code == 0 and "R: dim 1" in out
    code, out, _ = cli("validate", fx("l6.alg"), "--module", fx("sweedler_action.act"))
    assert code == 0 and "valid: yes" in out


def test_hopf_build_and_dual(tmp_path):
    code, out, _ = cli("hopf", "build", "sweedler4")
    assert code == 0
    assert io.hopf_to_dict(validate_hopf(io.hopf_from_dict(json.loads(out)))) == io.hopf_to_dict(sweedler4())
    code, out, _ = cli("hopf", "build", "group", "--table", fx("s3.group"))
    assert code == 0 and json.loads(out)["dim"] == 6
    p = tmp_path / "h4.hopf"
    p.write_text(out)
    code, out, _ = cli("hopf", "dual", p)
    assert code == 0 and validate_hopf(io.hopf_from_dict(json.loads(out))).dim == 6


def test_mutually_exclusive_structures():
    code, _, err = cli("levi", fx("s3_block.alg"), "--grading", fx("s3.grading"),
                       "--automorphism", fx("block7.aut"))
    assert code == 3 and "InputError" in err


@pytest.mark.parametrize("content", ["{not json", '{"dim": 2, "bracket": [{"i": 0, "j": 1, "c": {"0": 1.5}}]}'])
def test_bad_files_exit_3(tmp_path, content):
    p = tmp_path / "bad.alg"
    p.write_text(content)
    code, _, err = cli("radical", p)
    assert code == 3 and err.startswith("levikit: InputError")


def test_missing_file_exit_3():
    assert cli("radical", "/nonexistent/x.alg")[0] == 3


def test_invalid_algebra_exit_1(tmp_path):
    p = tmp_path / "asym.alg"
    # [e0,e1] = e2, [e0,e2] = e0: the Jacobi sum on (0,1,2) is -e2
    p.write_text(json.dumps({"dim": 3, "bracket": [
        {"i": 0, "j": 1, "c": {"2": "1"}}, {"i": 0, "j": 2, "c": {"0": "1"}}]}))
    code, out, _ = cli("radical", p, "--format", "structured")
    assert code == 1
    assert json.loads(out)["error"] == "JacobiViolation" and json.loads(out)["indices"]


def test_dimension_cap(monkeypatch):
    monkeypatch.setenv("LEVIKIT_MAX_DIM", "5")
    code, _, err = cli("radical", fx("l7.alg"))
    assert code == 1 and "DimensionCapExceeded" in err
    monkeypatch.setenv("LEVIKIT_MAX_DIM", "7")
    assert cli("radical", fx("l7.alg"))[0] == 0


def test_bad_arguments_exit_3():
    assert cli("frobnicate")[0] == 3
    assert cli("levi")[0] == 3
