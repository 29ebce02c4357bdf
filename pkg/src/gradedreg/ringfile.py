"""Ring description files.

    # comment
    field 32003
    vars x y z
    ideal x^2 + y*z, x*y

``ideal`` may be repeated (generators accumulate) or left empty.
"""

from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError
from .poly import PolyRing, parse_poly
from .rings import validate


@dataclass
class RingFile:
    p: int
    vars: list
    ideal: list = field(default_factory=list)
    name: str = "ring"

    def ring(self):
        return PolyRing(self.vars, self.p)

    def polys(self):
        R = self.ring()
        return [parse_poly(s, R) for s in self.ideal]

    def presentation(self):
        return validate(self.ring(), self.polys(), name=self.name)

    def __eq__(self, other):
        if not isinstance(other, RingFile):
            return NotImplemented
        return (self.p == other.p and list(self.vars) == list(other.vars)
                and self.polys() == other.polys())


def format_ring_file(rf):
    lines = [f"field {rf.p}", "vars " + " ".join(rf.vars)]
    R = rf.ring()
    gens = [str(parse_poly(s, R)) for s in rf.ideal]
    lines.append(("ideal " + ", ".join(gens)) if gens else "ideal")
    return "\n".join(lines) + "\n"


def parse_ring_file(text, name="ring"):
    p = None
    names = None
    ideal = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        keyword, _, rest = stripped.partition(" ")
        keyword = keyword.rstrip()
        rest_col = indent + len(keyword) + 2
        if keyword == "field":
            if p is not None:
                raise ParseError("duplicate 'field' line", lineno, indent + 1)
            try:
                p = int(rest.strip())
            except ValueError:
                raise ParseError(f"expected an integer characteristic, got {rest.strip()!r}",
                                 lineno, rest_col) from None
            try:
                PolyRing((), p)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, rest_col) from None
        elif keyword == "vars":
            if p is None:
                raise ParseError("'vars' before 'field'", lineno, indent + 1)
            if names is not None:
                raise ParseError("duplicate 'vars' line", lineno, indent + 1)
            names = rest.split()
            try:
                PolyRing(names, p)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, rest_col) from None
        elif keyword == "ideal":
            if names is None:
                raise ParseError("'ideal' before 'vars'", lineno, indent + 1)
            R = PolyRing(names, p)
            col = rest_col
            for chunk in rest.split(","):
                if chunk.strip():
                    try:
                        parse_poly(chunk, R)
                    except ParseError as exc:
                        raise ParseError(str(exc).split(": ", 1)[-1] if exc.column else str(exc),
                                         lineno, col + (exc.column or 1) - 1) from None
                    ideal.append(chunk.strip())
                elif rest.strip():
                    raise ParseError("empty generator", lineno, col)
                col += len(chunk) + 1
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, indent + 1)
    if p is None:
        raise ParseError("missing 'field' line", 1, 1)
    if names is None:
        raise ParseError("missing 'vars' line", 1, 1)
    return RingFile(p, names, ideal, name)


def load_ring_file(path):
    path = Path(path)
    return parse_ring_file(path.read_text(), name=path.stem)


def load_ring(path):
    return load_ring_file(path).presentation()
