import pytest

from gradedreg.errors import ParseError
from gradedreg.ringfile import RingFile, format_ring_file, load_ring, parse_ring_file


def test_parse_basic():
    rf = parse_ring_file("# a cone\nfield 7\nvars x y z\nideal x*z - y^2\n", name="cone")
    assert rf.p == 7 and rf.vars == ["x", "y", "z"] and rf.ideal == ["x*z - y^2"]
    A = rf.presentation()
    assert A.name == "cone" and A.dim == 2


def test_empty_ideal_and_no_vars():
    rf = parse_ring_file("field 32003\nvars\nideal\n")
    assert rf.vars == [] and rf.ideal == []
    assert rf.presentation().dim == 0


def test_round_trip():
    for text in ("field 7\nvars x y\nideal x*y, x^2 - 3*y^2\n", "field 32003\nvars a\nideal\n",
                 "field 5\nvars x y z\nideal (x+y)^2, 4*z^2\n"):
        rf = parse_ring_file(text)
        again = parse_ring_file(format_ring_file(rf))
        assert again == rf
        assert format_ring_file(again) == format_ring_file(rf)


@pytest.mark.parametrize("text,line,col", [
    ("field 6\nvars x\nideal\n", 1, 7),
    ("field x\nvars x\nideal\n", 1, 7),
    ("vars x\nfield 7\n", 1, 1),
    ("field 7\nfield 7\n", 2, 1),
    ("field 7\nvars x x\n", 2, 6),
    ("field 7\nvars x y\nideal x*y, , y^2\n", 3, 11),
    ("field 7\nvars x y\nideal x*y, y^^2\n", 3, 14),
    ("field 7\nvars x y\nideal x*w\n", 3, 9),
    ("field 7\nvars x\nbogus x\n", 3, 1),
    ("field 7\n", 1, 1),
])
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_ring_file(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_load_ring(tmp_path):
    path = tmp_path / "quad.ring"
    path.write_text("field 32003\nvars x y z\nideal x^2 + y*z\n")
    A = load_ring(path)
    assert A.name == "quad" and A.dim == 2


def test_equality_is_by_polynomials():
    a = RingFile(7, ["x", "y"], ["x*y + 0"])
    b = RingFile(7, ["x", "y"], ["y*x"])
    assert a == b
