import numpy as np

from remeshx import Mesh, read_bin, write_obj
from remeshx.cli import main
from conftest import elems, vtx


def run(capsys, *args):
    code = main([str(a) for a in args])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_reindex_stats(tmp_path, capsys):
    grid = tmp_path / "g.rmx"
    out = tmp_path / "out.rmx"
    assert run(capsys, "gen", "--n", 8, grid)[0] == 0
    assert run(capsys, "reindex", grid, out)[0] == 0
    code, stdout, _ = run(capsys, "stats", out)
    assert code == 0
    assert "vertices:  81" in stdout
    assert "elements:  64" in stdout
    assert "duplicate vertices: 0" in stdout
    assert "unused vertices:    0" in stdout


def test_validate_ok_and_failing(tmp_path, capsys):
    good = tmp_path / "good.obj"
    good.write_text("v 0 0\nv 1 0\nv 0 1\nf 1 2 3\n")
    assert run(capsys, "validate", good)[0] == 0

    bad = tmp_path / "bad.rmx"
    from remeshx.fileio import _RMX_HEADER, _RMX_MAGIC
    payload = np.array([0, 0, 1, 1], "<f4").tobytes() + \
        np.array([0, 1, 9], "<u4").tobytes()
    bad.write_bytes(_RMX_HEADER.pack(_RMX_MAGIC, 2, 3, 2, 1) + payload)
    code, _, stderr = run(capsys, "validate", bad)
    assert code == 1
    assert "out of range" in stderr


def test_missing_file_is_runtime_error(tmp_path, capsys):
    code, _, stderr = run(capsys, "reindex", tmp_path / "missing.obj",
                          tmp_path / "out.obj")
    assert code == 1
    assert "error" in stderr


def test_usage_error_exit_2(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["reindex"]) == 2


def test_merge_cli(tmp_path, capsys):
    a, b = tmp_path / "a.obj", tmp_path / "b.obj"
    write_obj(Mesh(vtx((0, 0), (1, 0), (0, 1)), elems((0, 1, 2))), a)
    write_obj(Mesh(vtx((1, 0), (0, 1), (1, 1)), elems((0, 1, 2))), b)
    out = tmp_path / "merged.rmx"
    assert run(capsys, "merge", a, b, out)[0] == 0
    merged = read_bin(out)
    assert merged.n_vertices == 4 and merged.n_elements == 2


def test_soup_cli(tmp_path, capsys):
    src = tmp_path / "dup.obj"
    # duplicated vertex rows; soup rebuild welds them
    src.write_text("v 0 0\nv 1 0\nv 0 1\nv 0 0\nv 1 0\nv 1 1\nf 1 2 3\nf 4 5 6\n")
    out = tmp_path / "welded.rmx"
    assert run(capsys, "soup", src, out)[0] == 0
    assert read_bin(out).n_vertices == 4


def test_subset_cli_keep_and_group(tmp_path, capsys):
    src = tmp_path / "grouped.obj"
    src.write_text(
        "v 0 0\nv 1 0\nv 0 1\nv 1 1\n"
        "g left\nf 1 2 3\ng right\nf 2 4 3\n")
    out = tmp_path / "left.rmx"
    assert run(capsys, "subset", src, out, "--group", "left")[0] == 0
    assert read_bin(out).n_elements == 1
    out2 = tmp_path / "kept.rmx"
    assert run(capsys, "subset", src, out2, "--keep", "0-1")[0] == 0
    assert read_bin(out2).n_elements == 2
    code, _, stderr = run(capsys, "subset", src, out2, "--group", "nope")
    assert code == 1 and "nope" in stderr


def test_bench_cli_csv(tmp_path, capsys):
    csv = tmp_path / "bench.csv"
    code, stdout, _ = run(capsys, "bench", "--sizes", "4,8", "--reps", "1",
                          "--csv", csv)
    assert code == 0
    assert "vertices_out" in stdout
    lines = csv.read_text().splitlines()
    assert len(lines) == 3
    assert lines[1].split(",")[3] == "25"
    assert lines[2].split(",")[3] == "81"


def test_threads_flag(tmp_path, capsys):
    grid = tmp_path / "g.rmx"
    out1, out2 = tmp_path / "o1.rmx", tmp_path / "o2.rmx"
    assert run(capsys, "gen", "--n", 4, grid)[0] == 0
    assert run(capsys, "--threads", 1, "reindex", grid, out1)[0] == 0
    assert run(capsys, "--threads", 4, "reindex", grid, out2)[0] == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_format_override_and_quiet(tmp_path, capsys):
    src = tmp_path / "mesh.dat"
    src.write_text("v 0 0\nv 1 0\nv 0 1\nf 1 2 3\n")
    out = tmp_path / "out.rmx"
    code, stdout, _ = run(capsys, "--format", "obj", "--quiet", "reindex", src, out)
    # output format falls back to the flag too, so write also goes through OBJ
    assert code == 0
    assert stdout == ""
