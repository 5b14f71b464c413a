"""Command-line interface: commands, exit codes, determinism."""

import xml.etree.ElementTree as ET

import pytest

from sblocus.cli import main

SVG_NS = "{http://www.w3.org/2000/svg}"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_chambers_row_counts(capsys):
    for space, rows in (("deg2", 8), ("deg3_general", 22), ("deg3_lines", 16)):
        code, out, _ = run(capsys, "chambers", space)
        assert code == 0
        data_rows = [l for l in out.splitlines() if l and not l.startswith(("#", "item"))]
        assert len(data_rows) == rows


def test_chambers_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "chambers", "deg3_general")
    _, second, _ = run(capsys, "chambers", "deg3_general")
    assert first == second


def test_classify_examples(capsys):
    code, out, _ = run(capsys, "classify", "deg2", "1/2", "1/2", "1/2")
    assert code == 0 and "ray T" in out and "{}" in out
    code, out, _ = run(capsys, "classify", "deg2", "3/4", "3/4", "-1/4")
    assert code == 0 and "ray P" in out and "Q[(1)^*]" in out
    code, out, _ = run(capsys, "classify", "deg2", "-1", "0", "0")
    assert code == 0 and out.strip() == "not effective"


def test_classify_chamber_consistent_with_table(capsys):
    # Off-diagonal interior point of the chamber between the nef cone and P.
    code, out, _ = run(capsys, "classify", "deg2", "3/10", "23/100", "-3/50")
    assert code == 0
    assert "chamber 2" in out and "Q[(1)^*]" in out
    code, table, _ = run(capsys, "chambers", "deg2")
    row = next(l for l in table.splitlines() if l.startswith("2 |"))
    assert "Q[(1)^*]" in row


def test_classify_wall(capsys):
    # Interior point of the open wall c(Ddeg Dunb) of the deg2 theorem's
    # item 5 (off the diagonal, which meets that wall in a vertex).
    code, out, _ = run(capsys, "classify", "deg2", "7/20", "3/20", "-1/4")
    assert code == 0
    assert "wall" in out and "Q[(1,1)^*]" in out and "Q[(2)^*]" in out


def test_classify_rejects_malformed_rational(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify", "deg2", "x", "0", "0"])
    assert exc.value.code == 2


def test_verify_exit_codes(capsys, tmp_path):
    assert run(capsys, "verify", "deg2")[0] == 0
    assert run(capsys, "verify", "deg3_general")[0] == 0
    code, out, _ = run(capsys, "verify", "deg3_lines")
    assert code == 1 and "FAIL" in out
    out_path = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "deg2", "-o", str(out_path))
    assert code == 0 and '"passed": true' in out_path.read_text()


def test_figure_structure_matches_chamber_count(capsys, tmp_path):
    for space, chambers in (("deg2", 8), ("deg3_general", 22), ("deg3_lines", 16)):
        path = tmp_path / f"{space}.svg"
        code, _, _ = run(capsys, "figure", space, "-o", str(path))
        assert code == 0
        tree = ET.parse(path)
        assert tree.getroot().tag == SVG_NS + "svg"
        groups = [g for g in tree.iter(SVG_NS + "g") if g.get("class") == "chamber"]
        assert len(groups) == chambers
        texts = [t.text for t in tree.iter(SVG_NS + "text")]
        catalog = __import__("sblocus").load(space)
        for d in catalog.divisors:
            assert d.name in texts, f"missing ray label {d.name}"


def test_figure_bytes_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    run(capsys, "figure", "deg2", "-o", str(a))
    run(capsys, "figure", "deg2", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_solve_class_files(capsys, tmp_path):
    f = tmp_path / "p.txt"
    f.write_text("1 0 3 0\n0 1 3 0\n1 1 2 1\n")
    code, out, _ = run(capsys, "solve-class", str(f))
    assert code == 0 and out.strip() == "3/4 3/4 -1/4"
    f.write_text("1 0 5 0\n0 1 5 0\n1 0 -1 2\n")
    assert run(capsys, "solve-class", str(f))[1].strip() == "5/3 5/3 -1/3"
    f.write_text("1 0 0 1\n0 1 0 0\n0 0 1 0\n")
    assert run(capsys, "solve-class", str(f))[1].strip() == "1 0 0"


def test_solve_class_singular_exits_2(capsys, tmp_path):
    f = tmp_path / "singular.txt"
    f.write_text("1 0 0 1\n2 0 0 2\n0 0 1 0\n")
    code, _, err = run(capsys, "solve-class", str(f))
    assert code == 2 and "determine" in err


def test_canonical_outputs(capsys):
    code, out, _ = run(capsys, "canonical", "2", "4", "2")
    assert code == 0
    assert "K = -2 -2 -1" in out and "interior" in out
    code, out, _ = run(capsys, "canonical", "3", "6", "3")
    assert "K = -2 -2 0" in out and "boundary" in out
    code, out, _ = run(capsys, "canonical", "2", "5", "3")
    assert "K = -4/3 -7/3 -1/3" in out
    code, _, err = run(capsys, "canonical", "2", "4", "3")
    assert code == 2


def test_catalog_override_flag(capsys, tmp_path):
    override = tmp_path / "override.txt"
    override.write_text(
        "[space]\nregime = deg2\nk = 2\nn = 7\nd = 2\n",
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "--catalog", str(override), "chambers", "deg2")
    assert code == 0 and "8 chambers" in out


def test_malformed_catalog_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("[space]\nregime = deg2\nk = two\nn = 4\nd = 2\n")
    code, _, err = run(capsys, "--catalog", str(bad), "chambers", "deg2")
    assert code == 2 and "parse error" in err
