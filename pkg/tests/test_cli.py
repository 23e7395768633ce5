import json
import xml.etree.ElementTree as ET

from boxrig.cli import format_points, main, parse_points
from boxrig.lab import gen_two_diagonals
from boxrig.oracle import hull_union_area


def run(*argv):
    return main(list(argv))


def test_pointfile_roundtrip(tmp_path):
    text = "# comment\n1 2\n\n3 4\n# trailing\n5 -6\n"
    ps = parse_points(text)
    normalized = format_points(ps.coords())
    assert normalized == "1 2\n3 4\n5 -6\n"
    assert parse_points(normalized).coords() == ps.coords()
    assert format_points(parse_points(normalized).coords()) == normalized


def test_pointfile_rejects_garbage():
    for bad in ("1\n", "a b\n", "1 2 3\n", "1 1\n1 5\n"):
        assert run("cover", "/nonexistent") == 2
        try:
            parse_points(bad)
        except ValueError:
            continue
        raise AssertionError(f"accepted {bad!r}")


def test_gen_two_diagonals(tmp_path):
    out = tmp_path / "pts.txt"
    assert run("gen", "two-diagonals", "--m", "2", "-o", str(out)) == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 4


def test_gen_uniform_deterministic(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    assert run("gen", "uniform", "--n", "100", "--seed", "7", "-o", str(a)) == 0
    assert run("gen", "uniform", "--n", "100", "--seed", "7", "-o", str(b)) == 0
    assert a.read_text() == b.read_text()


def test_gen_lower_bound_valid(tmp_path):
    out = tmp_path / "lb.txt"
    assert run("gen", "lower-bound", "--n", "8", "-o", str(out)) == 0
    ps = parse_points(out.read_text())
    assert ps.n == 16


def test_gen_missing_flags():
    assert run("gen", "two-diagonals") == 2
    assert run("gen", "uniform") == 2


def test_cover_verify_two_diagonals(tmp_path):
    pts = tmp_path / "pts.txt"
    run("gen", "two-diagonals", "--m", "2", "-o", str(pts))
    out = tmp_path / "stats.json"
    assert run("cover", str(pts), "--verify", "--json", str(out)) == 0
    stats = json.loads(out.read_text())
    assert stats["schema"] == 1
    assert stats["edges"] == 6
    assert stats["verify"]["ok"]


def test_cover_k_zero_matches_default(tmp_path):
    pts = tmp_path / "pts.txt"
    run("gen", "uniform", "--n", "60", "--seed", "3", "-o", str(pts))
    j1 = tmp_path / "a.json"
    j2 = tmp_path / "b.json"
    assert run("cover", str(pts), "--json", str(j1)) == 0
    assert run("cover", str(pts), "--k", "0", "--json", str(j2)) == 0
    e1 = json.loads(j1.read_text())["edges"]
    e2 = json.loads(j2.read_text())["edges"]
    assert e1 == e2


def test_cover_basic_flag(tmp_path):
    pts = tmp_path / "pts.txt"
    run("gen", "uniform", "--n", "80", "--seed", "1", "-o", str(pts))
    out = tmp_path / "s.json"
    assert run("cover", str(pts), "--basic", "--json", str(out), "--verify") == 0
    assert json.loads(out.read_text())["parameters"]["variant"] == "basic"


def test_cover_io_error():
    assert run("cover", "/no/such/file.txt") == 2


def test_hull_json_and_svg(tmp_path):
    pts = tmp_path / "pts.txt"
    pts.write_text("1 1\n2 2\n3 3\n")
    js = tmp_path / "hull.json"
    svg = tmp_path / "hull.svg"
    csvg = tmp_path / "cover.svg"
    assert run("hull", str(pts), "--json", str(js), "--svg", str(svg),
               "--cover-svg", str(csvg)) == 0
    doc = json.loads(js.read_text())
    assert doc["hull_area"] == 2
    ps = parse_points(pts.read_text())
    assert doc["hull_area"] == hull_union_area(ps)
    for f in (svg, csvg):
        root = ET.fromstring(f.read_text())  # valid XML
        assert root.tag.endswith("svg")
        assert "viewBox" in root.attrib


def test_hull_two_points_svg(tmp_path):
    pts = tmp_path / "pts.txt"
    pts.write_text("0 0\n3 3\n")
    svg = tmp_path / "h.svg"
    assert run("hull", str(pts), "--svg", str(svg)) == 0
    assert "polyline" in svg.read_text()


def test_hull_svg_n500_fast(tmp_path):
    import time
    pts = tmp_path / "pts.txt"
    run("gen", "uniform", "--n", "500", "--seed", "1", "-o", str(pts))
    svg = tmp_path / "h.svg"
    t0 = time.perf_counter()
    assert run("hull", str(pts), "--svg", str(svg)) == 0
    assert time.perf_counter() - t0 < 1.0
    ET.fromstring(svg.read_text())


def test_depth_query_outside_bbox(tmp_path, capsys):
    pts = tmp_path / "pts.txt"
    pts.write_text("0 0\n3 3\n")
    assert run("depth", str(pts), "--query", "10", "10") == 0
    assert capsys.readouterr().out.strip() == "0"


def test_depth_query_half_integer(tmp_path, capsys):
    pts = tmp_path / "pts.txt"
    pts.write_text("0 0\n3 3\n")
    assert run("depth", str(pts), "--query", "1.5", "2.5") == 0
    assert capsys.readouterr().out.strip() == "1"


def test_depth_max_contract(tmp_path, capsys):
    pts = tmp_path / "pts.txt"
    run("gen", "two-diagonals", "--m", "2", "-o", str(pts))
    assert run("depth", str(pts), "--max", "--eps", "0.5") == 0
    out = capsys.readouterr().out
    value = int(out.strip().splitlines()[-1].split()[-1])
    # d_max = 5 on this family (closed-vertex maximum)
    assert 3 <= value <= 5


def test_depth_bad_eps(tmp_path):
    pts = tmp_path / "pts.txt"
    pts.write_text("0 0\n3 3\n")
    assert run("depth", str(pts), "--max", "--eps", "1.5") == 2


def test_depth_log_approx(tmp_path, capsys):
    from boxrig.oracle import brute_depth
    from fractions import Fraction
    pts = tmp_path / "pts.txt"
    run("gen", "uniform", "--n", "50", "--seed", "2", "-o", str(pts))
    assert run("depth", str(pts), "--log-approx") == 0
    lines = capsys.readouterr().out.strip().splitlines()
    wx, wy = lines[0].split()[1:]
    value = int(lines[1].split()[1])
    ps = parse_points(pts.read_text())
    q = (Fraction(wx), Fraction(wy))
    assert brute_depth(ps, q) == value


def test_bench_row_count(tmp_path):
    out = tmp_path / "bench.json"
    assert run("bench", "--ns", "256,512", "--seeds", "2", "--json", str(out)) == 0
    doc = json.loads(out.read_text())
    assert len(doc["rows"]) == 4


def test_bench_empty_ns():
    assert run("bench", "--ns", "") == 2


def test_fuzz_clean(tmp_path):
    out = tmp_path / "fuzz.json"
    assert run("fuzz", "--n", "40", "--seeds", "5", "--json", str(out)) == 0
    doc = json.loads(out.read_text())
    assert doc["fitted"]["k5_violations"] == 0


def test_unknown_command():
    assert run("frobnicate") == 2
