"""The ``.poly`` text format.

    H 3                 # or "V 3"
    INEQ                # H sections: INEQ, EQ   V sections: PTS, RAYS, LIN
    2 4                 # rows cols (cols = d + 1)
    0 1 0 0
    1 -1 0 0
    EQ
    0 4

Scalars are integers, ``p/q`` or Puiseux fractions in ``t``; a Puiseux
scalar containing spaces is written in parentheses.
"""

from __future__ import annotations

from pathlib import Path

from services.arith import ScalarParseError, format_scalar, is_rational, parse_scalar
from services.polyhedron import HRep, Polytope, VRep

H_SECTIONS = ("INEQ", "EQ")
V_SECTIONS = ("PTS", "RAYS", "LIN")


class PolyParseError(ValueError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _tokens(text: str) -> list[str]:
    """Split at whitespace outside parentheses."""
    tokens: list[str] = []
    depth = 0
    current = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch.isspace() and depth == 0:
            if current:
                tokens.append(current)
                current = ""
        else:
            current += ch
    if current:
        tokens.append(current)
    return tokens


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def read(text: str) -> Polytope:
    lines = list(_lines(text))
    if not lines:
        raise PolyParseError("empty file", 1)
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in ("H", "V") or not parts[1].isdigit():
        raise PolyParseError(f"expected 'H d' or 'V d', got {header!r}", number)
    kind, d = parts[0], int(parts[1])
    allowed = H_SECTIONS if kind == "H" else V_SECTIONS
    sections: dict[str, list[tuple]] = {}

    pos = 1
    while pos < len(lines):
        number, name = lines[pos]
        if name not in allowed:
            raise PolyParseError(
                f"unknown section {name!r} in an {kind} file", number
            )
        if name in sections:
            raise PolyParseError(f"duplicate section {name}", number)
        pos += 1
        if pos >= len(lines):
            raise PolyParseError(f"section {name} has no size line", number)
        number, size = lines[pos]
        dims = size.split()
        if len(dims) != 2 or not all(x.isdigit() for x in dims):
            raise PolyParseError(f"expected 'rows cols', got {size!r}", number)
        rows, cols = int(dims[0]), int(dims[1])
        if cols != d + 1:
            raise PolyParseError(f"expected {d + 1} columns, got {cols}", number)
        pos += 1
        body = []
        for _ in range(rows):
            if pos >= len(lines):
                raise PolyParseError(f"section {name} ends early", number)
            number, line = lines[pos]
            tokens = _tokens(line)
            if len(tokens) != cols:
                raise PolyParseError(
                    f"expected {cols} entries, got {len(tokens)}", number
                )
            try:
                body.append(tuple(parse_scalar(tok) for tok in tokens))
            except ScalarParseError as e:
                raise PolyParseError(str(e), number) from e
            pos += 1
        sections[name] = body

    try:
        if kind == "H":
            return Polytope(
                hrep=HRep(
                    tuple(sections.get("INEQ", ())), tuple(sections.get("EQ", ())), d
                )
            )
        return Polytope(
            vrep=VRep(
                tuple(sections.get("PTS", ())),
                tuple(sections.get("RAYS", ())),
                tuple(sections.get("LIN", ())),
                d,
            )
        )
    except ValueError as e:
        raise PolyParseError(str(e), lines[0][0]) from e


def load(path: str | Path) -> Polytope:
    return read(Path(path).read_text())


def _scalar(x) -> str:
    if is_rational(x):
        return format_scalar(x)
    text = format_scalar(x)
    return text if " " not in text or text.startswith("(") else f"({text})"


def _section(name: str, rows, width: int) -> list[str]:
    out = [name, f"{len(rows)} {width}"]
    out.extend(" ".join(_scalar(x) for x in row) for row in rows)
    return out


def write_hrep(h: HRep) -> str:
    width = h.ambient_dim + 1
    lines = [f"H {h.ambient_dim}"]
    lines += _section("INEQ", h.inequalities, width)
    lines += _section("EQ", h.equations, width)
    return "\n".join(lines) + "\n"


def write_vrep(v: VRep) -> str:
    width = v.ambient_dim + 1
    lines = [f"V {v.ambient_dim}"]
    lines += _section("PTS", v.points, width)
    lines += _section("RAYS", v.rays, width)
    lines += _section("LIN", v.lineality, width)
    return "\n".join(lines) + "\n"


def write(p: Polytope) -> str:
    """H data when present, V data otherwise."""
    if p.hrep is not None:
        return write_hrep(p.hrep)
    return write_vrep(p.vrep)


def dump(p: Polytope, path: str | Path) -> None:
    Path(path).write_text(write(p))


def _coefficient(a, rational: bool) -> tuple[bool, str]:
    """(negative, magnitude text) for a coefficient; empty text for 1."""
    negative = a < 0
    magnitude = -a if negative else a
    if rational:
        return negative, "" if magnitude == 1 else f"{format_scalar(magnitude)} "
    return negative, f"({format_scalar(magnitude)}) "


def _constraint(row, relation: str, rational: bool) -> str:
    terms = []
    for j, a in enumerate(row[1:], start=1):
        if a == 0:
            continue
        negative, text = _coefficient(a, is_rational(a))
        body = f"{text}x{j}"
        if not terms:
            terms.append(f"-{body}" if negative else body)
        else:
            terms.append(f"- {body}" if negative else f"+ {body}")
    lhs = " ".join(terms) or "0"
    rhs = -row[0]
    rhs_text = format_scalar(rhs) if rational else f"({format_scalar(rhs)})"
    return f"{lhs} {relation} {rhs_text}"


def format_constraints(h: HRep) -> str:
    """Numbered human-readable listing, e.g. ``2: -(t) x1 + x2 >= (0)``.

    Over the rationals coefficients print bare; with Puiseux coefficients
    non-rational coefficients and every right-hand side print in parentheses.
    """
    rational = h.is_rational
    lines = []
    for i, row in enumerate(h.inequalities):
        lines.append(f"{i}: {_constraint(row, '>=', rational)}")
    offset = len(h.inequalities)
    for i, row in enumerate(h.equations):
        lines.append(f"{offset + i}: {_constraint(row, '=', rational)}")
    return "\n".join(lines)
