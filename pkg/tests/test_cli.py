import json

import pytest

from core import golden
from core.circmrd import CircCodeParams, build_pq, instance_to_text
from core.constants import (
    CAP_ENV_VAR,
    EXIT_CAP_EXCEEDED,
    EXIT_INVALID_PARAMS,
    EXIT_IO_ERROR,
    EXIT_OK,
    EXIT_VERDICT_FALSE,
)
from core.linalg import format_matrix, matrix_from_rows
from main import main


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv(CAP_ENV_VAR, raising=False)


def write_matrix(path, rows):
    path.write_text(format_matrix(matrix_from_rows(rows)) + "\n", encoding="utf-8")
    return str(path)


def construct_user(tmp_path, name, L, exponents, G_rows, H_rows, variant="c1"):
    out = tmp_path / f"{name}.code"
    code = main([
        "construct", "--q", "2", "--L", str(L), "--k", "1", "--n", str(len(exponents)),
        "--exponents", ",".join(str(l) for l in exponents), "--variant", variant, "--pq", "user",
        "--G", write_matrix(tmp_path / f"{name}_G.txt", G_rows),
        "--H", write_matrix(tmp_path / f"{name}_H.txt", H_rows),
        "--output", str(out),
    ])
    assert code == EXIT_OK
    return str(out)


@pytest.fixture
def ex2_file(tmp_path):
    return construct_user(tmp_path, "ex2", golden.EX2_L, golden.EX2_EXPONENTS, golden.EX2_G, golden.EX2_H)


@pytest.fixture
def ex4_file(tmp_path):
    return construct_user(tmp_path, "ex4", golden.EX4_L, golden.EX4_EXPONENTS, golden.EX4_G, golden.EX4_H)


class TestConstruct:
    def test_instance_a_has_identity_block(self, capsys):
        code = main(["construct", "--q", "2", "--L", "9", "--k", "1", "--n", "3",
                     "--exponents", "0,1,2", "--variant", "c1", "--pq", "a"])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("q: 2\nL: 9\nk: 1\nn: 3\nexponents: 0,1,2\nvariant: c1\npq_choice: a\n")
        assert "P:\n6 9 2\n1 0 0 0 0 0 0 0 0\n0 1 0 0 0 0 0 0 0\n" in out

    @pytest.mark.parametrize("argv", [
        ["--L", "4", "--n", "1", "--exponents", "0"],
        ["--L", "9", "--n", "7", "--exponents", "0,1,2,3,4,5,6"],
        ["--L", "9", "--n", "3", "--exponents", "0,1,1"],
        ["--L", "9", "--n", "3", "--exponents", "0,1,x"],
        ["--L", "9", "--n", "3", "--exponents", "0,1,2", "--pq", "user"],
    ])
    def test_invalid_parameters(self, argv):
        assert main(["construct", "--q", "2", "--k", "1"] + argv) == EXIT_INVALID_PARAMS

    def test_composite_q(self):
        assert main(["construct", "--q", "4", "--L", "9", "--k", "1", "--n", "3",
                     "--exponents", "0,1,2"]) == EXIT_INVALID_PARAMS

    def test_missing_matrix_file(self, tmp_path):
        code = main(["construct", "--q", "2", "--L", "7", "--k", "1", "--n", "3", "--exponents", "0,1,2",
                     "--pq", "user", "--G", str(tmp_path / "absent.txt")])
        assert code == EXIT_IO_ERROR


class TestEncode:
    def test_first_generator(self, ex2_file, capsys):
        capsys.readouterr()
        assert main(["encode", "--instance", ex2_file, "--message", "000001"]) == EXIT_OK
        expected = format_matrix(matrix_from_rows(golden.EX2_GENERATORS[0])) + "\n"
        assert capsys.readouterr().out == expected

    def test_fast_path_is_byte_identical(self, ex2_file, capsys):
        capsys.readouterr()
        main(["encode", "--instance", ex2_file, "--message", "101100"])
        generic = capsys.readouterr().out
        main(["encode", "--instance", ex2_file, "--message", "101100", "--path", "fast"])
        assert capsys.readouterr().out == generic

    def test_all_messages(self, ex2_file, tmp_path):
        out = tmp_path / "book.txt"
        assert main(["encode", "--instance", ex2_file, "--all", "--output", str(out)]) == EXIT_OK
        blocks = out.read_text(encoding="utf-8").strip().split("\n\n")
        assert len(blocks) == 64
        assert blocks[0] == "6 3 2\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n0 0 0"

    @pytest.mark.parametrize("message", ["0001", "000002", "00a001"])
    def test_bad_message(self, ex2_file, message):
        assert main(["encode", "--instance", ex2_file, "--message", message]) == EXIT_INVALID_PARAMS

    def test_missing_message(self, ex2_file):
        assert main(["encode", "--instance", ex2_file]) == EXIT_INVALID_PARAMS

    def test_missing_instance(self, tmp_path):
        assert main(["encode", "--instance", str(tmp_path / "nope.code"),
                     "--message", "000001"]) == EXIT_IO_ERROR

    def test_corrupt_instance(self, tmp_path):
        bad = tmp_path / "bad.code"
        bad.write_text("q: 2\nL: 7\n", encoding="utf-8")
        assert main(["encode", "--instance", str(bad), "--message", "000001"]) == EXIT_INVALID_PARAMS


class TestVerifyMrd:
    def test_ex2_is_mrd(self, ex2_file, capsys):
        capsys.readouterr()
        assert main(["verify-mrd", "--instance", ex2_file]) == EXIT_OK
        assert capsys.readouterr().out == "min_rank=3 MRD=yes\n"

    def test_cap_flag(self, ex2_file):
        assert main(["--cap", "10", "verify-mrd", "--instance", ex2_file]) == EXIT_CAP_EXCEEDED

    def test_cap_environment(self, ex2_file, monkeypatch):
        monkeypatch.setenv(CAP_ENV_VAR, "10")
        assert main(["verify-mrd", "--instance", ex2_file]) == EXIT_CAP_EXCEEDED
        # the flag wins over the environment
        assert main(["--cap", "100", "verify-mrd", "--instance", ex2_file]) == EXIT_OK

    def test_bad_cap_environment(self, ex2_file, monkeypatch):
        monkeypatch.setenv(CAP_ENV_VAR, "lots")
        assert main(["verify-mrd", "--instance", ex2_file]) == EXIT_INVALID_PARAMS

    def test_non_positive_cap(self, ex2_file):
        assert main(["--cap", "0", "verify-mrd", "--instance", ex2_file]) == EXIT_INVALID_PARAMS


class TestCompare:
    def test_full_dimension_code(self, ex4_file, capsys):
        capsys.readouterr()
        assert main(["compare", "--instance", ex4_file]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out[:3] == ["C2 == T*C1: yes", "C1 == M~: yes", "Gabidulin coincidence: yes"]

    def test_partial_dimension_code(self, ex2_file, capsys):
        capsys.readouterr()
        assert main(["compare", "--instance", ex2_file]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out[:3] == ["C2 == T*C1: yes", "C1 == M~: yes", "Gabidulin coincidence: no"]


class TestBench:
    @pytest.mark.parametrize("preset", ["section5", "walkthrough"])
    def test_preset_csv(self, preset, capsys):
        assert main(["bench", "--preset", preset, "--csv"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert "C1,5,4,3,56,56,0,0" in lines
        assert "C2,5,4,3,47,47,0,0" in lines

    def test_single_configuration(self, capsys):
        assert main(["bench", "--L", "7", "--n", "3", "--k", "2"]) == EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == 5

    def test_needs_a_configuration(self):
        assert main(["bench", "--L", "7"]) == EXIT_INVALID_PARAMS

    def test_rejects_composite_l(self):
        assert main(["bench", "--L", "9", "--n", "3", "--k", "1"]) == EXIT_INVALID_PARAMS


class TestExamples:
    def test_ex1(self, capsys):
        assert main(["examples", "ex1"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("ex1: pass\n")

    def test_unknown_example_is_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["examples", "ex9"])
        assert excinfo.value.code == EXIT_INVALID_PARAMS


class TestGlobalOptions:
    def test_no_command(self):
        assert main([]) == EXIT_INVALID_PARAMS

    def test_missing_config(self, tmp_path, ex2_file):
        assert main(["--config", str(tmp_path / "none.json"), "verify-mrd",
                     "--instance", ex2_file]) == EXIT_IO_ERROR

    def test_invalid_config(self, tmp_path, ex2_file):
        cfg = tmp_path / "bad.json"
        cfg.write_text(json.dumps({"variant": "c7"}), encoding="utf-8")
        assert main(["--config", str(cfg), "verify-mrd", "--instance", ex2_file]) == EXIT_INVALID_PARAMS

    def test_config_cap(self, tmp_path, ex2_file):
        cfg = tmp_path / "small.json"
        cfg.write_text(json.dumps({"enumeration_cap": 10}), encoding="utf-8")
        assert main(["--config", str(cfg), "verify-mrd", "--instance", ex2_file]) == EXIT_CAP_EXCEEDED


class TestVerdicts:
    def test_repeated_exponent_is_not_mrd(self, tmp_path, capsys):
        # construct refuses repeated exponents, so write the file directly
        instance = build_pq(CircCodeParams(q=2, L=7, k=1, n=3, exponents=(0, 0, 1)))
        path = tmp_path / "repeated.code"
        path.write_text(instance_to_text(instance), encoding="utf-8")
        capsys.readouterr()
        assert main(["verify-mrd", "--instance", str(path)]) == EXIT_VERDICT_FALSE
        assert capsys.readouterr().out.endswith("MRD=no\n")
