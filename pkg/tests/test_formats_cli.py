import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from ahomotopy import (GraphMap, StablePath, are_homotopic, certify_no_cone_map, constant_map,
                       cycle_graph, identity_cone, identity_map, make_graph, path_graph)
from ahomotopy import formats
from ahomotopy.cli import main
from ahomotopy.cones import check_report
from ahomotopy.errors import ParseError

C4, C5, C6 = cycle_graph(4), cycle_graph(5), cycle_graph(6)


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(argv, capsys):
    status = main(argv)
    out = capsys.readouterr()
    return status, out.out, out.err


# ---- formats


@settings(max_examples=100)
@given(st.integers(0, 6).flatmap(lambda n: st.lists(
    st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))).filter(lambda e: e[0] != e[1]),
    max_size=10).map(lambda es: make_graph(n, es) if n else make_graph(0))))
def test_graph_round_trip(g):
    text = formats.format_graph(g)
    assert formats.parse_graph(text) == g
    assert formats.format_graph(formats.parse_graph(text)) == text


def test_graph_comments_and_blank_lines():
    text = "# a triangle\nn 3\n\ne 0 1\ne 1 2  # last\ne 2 0\n"
    assert formats.parse_graph(text) == cycle_graph(3)


@pytest.mark.parametrize("text, line, col", [
    ("n 3\ne 0 0\n", 2, 5),
    ("n 3\ne 0 3\n", 2, 5),
    ("n 3\nx 0 1\n", 2, 1),
    ("n three\n", 1, 3),
    ("", 1, 1),
    ("n 3\ne 0\n", 2, 1),
])
def test_graph_parse_errors(text, line, col):
    with pytest.raises(ParseError) as exc:
        formats.parse_graph(text)
    assert (exc.value.line, exc.value.column) == (line, col)
    assert str(exc.value).startswith(f"{line}:{col}:")


def test_map_round_trip_and_errors():
    f = GraphMap(C5, C6, (0, 1, 2, 1, 0))
    assert formats.parse_map(formats.format_map(f)) == (5, 6, f.assignment)
    with pytest.raises(ParseError):
        formats.parse_map("m 2 3\na 0 1\n")
    with pytest.raises(ParseError):
        formats.parse_map("m 2 3\na 0 1\na 0 2\n")
    with pytest.raises(ParseError):
        formats.parse_map("m 2 3\na 0 1\na 1 3\n")


def test_path_round_trip():
    p = StablePath(C5, (0, 1, 2, 3, 4, 0))
    assert formats.format_path(p) == "p 6 0 1 2 3 4 0\n"
    assert StablePath(C5, formats.parse_path(formats.format_path(p))) == p
    with pytest.raises(ParseError):
        formats.parse_path("p 3 0 1\n")


def test_trace_round_trip():
    tr = are_homotopic(identity_map(C4), constant_map(C4, C4, 0))
    text = formats.format_trace(tr)
    assert formats.load_trace(text, C4, C4) == tr
    with pytest.raises(ParseError):
        formats.load_trace(text, C5, C5)


def test_cone_round_trip():
    cone = identity_cone(5, (0, 1, 2, 4))
    text = formats.format_cone(cone)
    assert formats.parse_cone(text) == cone
    assert text.endswith("c 6 0 1 2 3 4 0\nmarks 0 1 2 4\n")


def test_report_round_trip():
    src = identity_cone(5)
    report = certify_no_cone_map(src)
    back = formats.parse_report(report.to_text())
    assert back.to_text() == report.to_text()
    assert back.certified and check_report(src, back)


def test_grid_round_trip():
    from ahomotopy import nullhomotopic_in_cycle
    d = nullhomotopic_in_cycle(StablePath(C4, (0, 1, 2, 3, 0)))
    text = formats.format_grid(d.certificate)
    assert formats.load_grid(text, C4) == d.certificate
    with pytest.raises(ParseError):
        formats.parse_grid("g 2 2\n0 1\n0\n")


# ---- cli


@pytest.fixture
def files(tmp_path):
    def graph(name, g):
        return write(tmp_path, name, formats.format_graph(g))
    d = {
        "c4": graph("c4.txt", C4),
        "c5": graph("c5.txt", C5),
        "c6": graph("c6.txt", C6),
        "i0": graph("i0.txt", path_graph(0)),
        "i1": graph("i1.txt", path_graph(1)),
        "c3": graph("c3.txt", cycle_graph(3)),
        "loop": write(tmp_path, "loop.txt", "n 2\ne 1 1\n"),
        "id4": write(tmp_path, "id4.txt", formats.format_map(identity_map(C4))),
        "k4": write(tmp_path, "k4.txt", formats.format_map(constant_map(C4, C4, 0))),
        "id5": write(tmp_path, "id5.txt", formats.format_map(identity_map(C5))),
        "k5": write(tmp_path, "k5.txt", formats.format_map(constant_map(C5, C5, 0))),
        "bad5": write(tmp_path, "bad5.txt", "m 5 5\na 0 0\na 1 2\na 2 2\na 3 3\na 4 4\n"),
        "loop5": write(tmp_path, "loop5.txt", "p 6 0 1 2 3 4 0\n"),
        "double5": write(tmp_path, "double5.txt", "p 11 0 1 2 3 4 0 1 2 3 4 0\n"),
        "const": write(tmp_path, "const.txt", "p 1 0\n"),
        "loop4": write(tmp_path, "loop4.txt", "p 5 0 1 2 3 0\n"),
        "cone5": write(tmp_path, "cone5.txt", formats.format_cone(identity_cone(5))),
        "cone_const": write(tmp_path, "cone_const.txt", "n 5\n" + "".join(
            f"e {i} {(i + 1) % 5}\n" for i in range(5)) + "c 1 0\nmarks 0 0 0 0\n"),
        "cone_bad": write(tmp_path, "cone_bad.txt", formats.format_graph(C5)
                          + "c 6 0 1 2 3 4 0\nmarks 0 3 2 1\n"),
        "dir": tmp_path,
    }
    return d


def test_check_map(files, capsys):
    assert run(["check-map", files["c5"], files["c5"], files["id5"]], capsys)[0] == 0
    assert run(["check-map", files["c5"], files["c5"], files["bad5"]], capsys)[0] == 1
    status, _, err = run(["check-map", files["loop"], files["loop"], files["id5"]], capsys)
    assert status == 64 and "loop.txt:2:" in err
    assert run(["check-map", files["c4"], files["c5"], files["id5"]], capsys)[0] == 65
    assert run(["check-map", files["c5"], files["c5"], "/nonexistent"], capsys)[0] == 64


def test_homotopic(files, capsys):
    out = str(files["dir"] / "trace.txt")
    status, stdout, _ = run(["homotopic", files["c4"], files["c4"], files["id4"], files["k4"],
                             "--out", out], capsys)
    assert status == 0 and stdout.startswith("homotopic")
    tr = formats.load_trace(open(out).read(), C4, C4)
    assert tr.first == identity_map(C4) and tr.last == constant_map(C4, C4, 0)
    assert run(["homotopic", files["c5"], files["c5"], files["id5"], files["k5"]], capsys)[0] == 1
    assert run(["homotopic", files["c5"], files["c5"], files["k5"], files["id5"],
                "--cap", "10"], capsys)[0] == 3


def test_winding(files, capsys):
    assert run(["winding", files["c5"], files["loop5"]], capsys)[:2] == (0, "1\n")
    assert run(["winding", files["c5"], files["const"]], capsys)[:2] == (0, "0\n")
    assert run(["winding", files["c5"], files["double5"]], capsys)[:2] == (0, "2\n")
    assert run(["winding", files["i1"], files["const"]], capsys)[0] == 65


def test_contract(files, capsys):
    out = str(files["dir"] / "grid.txt")
    assert run(["contract", files["c4"], files["loop4"], "--out", out], capsys)[0] == 0
    assert formats.load_grid(open(out).read(), C4).row(0) == (0, 1, 2, 3, 0, 0, 0)
    status, stdout, _ = run(["contract", files["c5"], files["loop5"]], capsys)
    assert status == 1 and "winding 1" in stdout


def test_path_homotopic(files, capsys):
    out = str(files["dir"] / "pgrid.txt")
    assert run(["path-homotopic", files["c4"], files["loop4"], files["const"], "--out", out],
               capsys)[0] == 0
    assert formats.load_grid(open(out).read(), C4).is_valid()
    args = ["path-homotopic", files["c5"], files["loop5"], files["const"], "--window", "6"]
    assert run(args, capsys)[0] == 3
    assert run(args + ["--max-window", "6"], capsys)[0] == 1
    assert run(["path-homotopic", files["c5"], files["loop5"], files["loop4"]], capsys)[0] == 65


def test_verify_counterexample(files, capsys):
    out = str(files["dir"] / "report.txt")
    status, _, err = run(["verify-counterexample", files["cone5"], "--max-rows", "3",
                          "--max-cols", "8", "--out", out], capsys)
    assert status == 0 and "0 cone maps" in err
    text = open(out).read()
    assert text.startswith("obstruction N=6 target_winding=1\nf 0 winding=0\n")
    assert check_report(identity_cone(5), formats.parse_report(text))
    assert run(["verify-counterexample", files["cone_const"], "--no-search"], capsys)[0] == 0
    assert run(["verify-counterexample", files["cone_bad"]], capsys)[0] == 65


def test_enum_homs(files, capsys):
    assert run(["enum-homs", files["i0"], files["c5"]], capsys)[:2] == (0, "5\n")
    assert run(["enum-homs", files["i1"], files["c3"]], capsys)[:2] == (0, "9\n")
    status, stdout, _ = run(["enum-homs", files["i1"], files["c3"], "--list"], capsys)
    lines = stdout.splitlines()
    assert lines[0] == "9" and lines[1:] == sorted(lines[1:]) and lines[1] == "0 0"
    assert run(["enum-homs", files["c6"], files["c6"], "--cap", "100"], capsys)[0] == 3
    assert run(["enum-homs", files["c6"], files["c6"], "--cap", "100", "--list"], capsys)[0] == 3


def test_byte_stable_subprocess(files):
    cmds = [
        ["enum-homs", files["c5"], files["c6"], "--list"],
        ["verify-counterexample", files["cone5"], "--no-search"],
        ["winding", files["c5"], files["double5"]],
    ]
    for cmd in cmds:
        runs = [subprocess.run([sys.executable, "-m", "ahomotopy.cli", *cmd], capture_output=True)
                for _ in range(2)]
        assert runs[0].returncode == runs[1].returncode == 0
        assert runs[0].stdout == runs[1].stdout and runs[0].stdout
