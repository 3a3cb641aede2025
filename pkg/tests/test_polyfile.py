from fractions import Fraction

import pytest

from services import generators
from services.arith import PuiseuxFraction
from services.polyfile import (
    PolyParseError,
    dump,
    format_constraints,
    load,
    read,
    write,
)
from services.polyhedron import HRep

t = PuiseuxFraction.t()

SQUARE = """\
# unit square
H 2
INEQ
4 3
0 1 0
0 0 1
1 -1 0
1 0 -1
"""


class TestRead:
    def test_hrep(self):
        p = read(SQUARE)
        assert p.ambient_dim == 2
        assert len(p.hrep.inequalities) == 4
        assert p.hrep.equations == ()
        assert p.vrep is None

    def test_vrep_with_rays(self):
        p = read("V 2\nPTS\n1 3\n1 1/2 0\nRAYS\n1 3\n0 0 1\n")
        assert p.vrep.points == ((1, Fraction(1, 2), 0),)
        assert p.vrep.rays == ((0, 0, 1),)

    def test_puiseux_entries(self):
        p = read("H 1\nINEQ\n1 2\n(1 - t) -1\n")
        assert p.hrep.inequalities == ((1 - t, -1),)

    def test_equations(self):
        p = read("H 2\nEQ\n1 3\n-1 1 1\n")
        assert p.hrep.equations == ((-1, 1, 1),)


class TestReadErrors:
    @pytest.mark.parametrize(
        "text,line,message",
        [
            ("", 1, "empty file"),
            ("X 2\n", 1, "expected 'H d'"),
            ("H 2\nPTS\n", 2, "unknown section"),
            ("H 2\nINEQ\n1 4\n0 1 0 0\n", 3, "expected 3 columns"),
            ("H 2\nINEQ\n1 3\n0 1\n", 4, "expected 3 entries"),
            ("H 2\nINEQ\n2 3\n0 1 0\n", 4, "ends early"),
            ("H 2\nINEQ\n1 3\n0 x 1\n", 4, "invalid rational"),
            ("H 2\nINEQ\nmany\n", 3, "expected 'rows cols'"),
            ("V 1\nPTS\n1 2\n2 0\n", 1, "must start with 1"),
        ],
    )
    def test_line_numbers(self, text, line, message):
        with pytest.raises(PolyParseError, match=message) as info:
            read(text)
        assert info.value.line == line

    def test_duplicate_section(self):
        text = "H 1\nINEQ\n1 2\n0 1\nINEQ\n1 2\n1 -1\n"
        with pytest.raises(PolyParseError, match="duplicate section"):
            read(text)


class TestWrite:
    def test_hrep_text(self):
        h = HRep(((0, 1), (2, -1)), (), 1)
        assert write_text(h) == "H 1\nINEQ\n2 2\n0 1\n2 -1\nEQ\n0 2\n"

    def test_reads_back(self):
        p = generators.klee_minty(3)
        again = read(write(p))
        assert again.hrep == p.hrep

    def test_vrep_when_no_hrep(self):
        p = generators.hard_simplex(7, 9, 11)
        assert write(p).startswith("V 5\nPTS\n6 6\n")

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "square.poly"
        dump(read(SQUARE), path)
        assert load(path).hrep == read(SQUARE).hrep


def write_text(h: HRep) -> str:
    from services.polyhedron import Polytope

    return write(Polytope(hrep=h))


class TestFormatConstraints:
    def test_klee_minty(self):
        text = format_constraints(generators.klee_minty(2).hrep)
        assert text.splitlines() == [
            "0: x1 >= (0)",
            "1: -x1 >= (-1)",
            "2: -(t) x1 + x2 >= (0)",
            "3: -(t) x1 - x2 >= (-1)",
        ]

    def test_rational(self):
        h = HRep(((40, -2, -3),), ((0, Fraction(1, 2), 0),), 2)
        assert format_constraints(h).splitlines() == [
            "0: -2 x1 - 3 x2 >= -40",
            "1: 1/2 x1 = 0",
        ]
