"""Line-oriented text formats for posets, coverings, matrices and vectors.

Poset files carry a `points:` line plus either `order:` lines `x <= y`
(generating pairs; the closure is applied) or `basis:` lines with
brace-enclosed open sets.  Covering files carry `points:` plus `cover:`
lines.  Matrix files carry the dimension k followed by k integer rows.
Blank lines and `#` comments are ignored everywhere.  The canonical poset
form uses `order:` lines listing the covering pairs, so parse -> print ->
parse is the identity on it.
"""

from .errors import ParseError
from .topology import GroundSpace, Poset, hasse, order_from_basis


def _logical_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_set(body, lineno):
    body = body.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ParseError(f"line {lineno}: expected a brace-enclosed set, "
                         f"got {body!r}")
    inner = body[1:-1].strip()
    if not inner:
        raise ParseError(f"line {lineno}: empty set")
    return frozenset(x.strip() for x in inner.split(","))


def parse_poset(text):
    points = None
    order_pairs = []
    basis_sets = []
    for lineno, line in _logical_lines(text):
        if line.startswith("points:"):
            if points is not None:
                raise ParseError(f"line {lineno}: duplicate points: line")
            points = line[len("points:"):].split()
            if not points:
                raise ParseError(f"line {lineno}: points: line lists no points")
        elif line.startswith("order:"):
            body = line[len("order:"):]
            parts = body.split("<=")
            if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
                raise ParseError(f"line {lineno}: expected `order: x <= y`")
            order_pairs.append((parts[0].strip(), parts[1].strip()))
        elif line.startswith("basis:"):
            basis_sets.append(_parse_set(line[len("basis:"):], lineno))
        else:
            raise ParseError(f"line {lineno}: unrecognized line {line!r}")
    if points is None:
        raise ParseError("missing points: line")
    if order_pairs and basis_sets:
        raise ParseError("a poset file may use order: lines or basis: lines, "
                         "not both")
    if basis_sets:
        return order_from_basis(points, basis_sets)
    return Poset.from_pairs(points, order_pairs)


def print_poset(p):
    """Canonical form: points in input order, covering pairs sorted."""
    lines = ["points: " + " ".join(p.points)]
    for (a, b) in hasse(p).links:
        lines.append(f"order: {a} <= {b}")
    return "\n".join(lines) + "\n"


def parse_covering(text):
    points = None
    cover = []
    for lineno, line in _logical_lines(text):
        if line.startswith("points:"):
            if points is not None:
                raise ParseError(f"line {lineno}: duplicate points: line")
            points = line[len("points:"):].split()
        elif line.startswith("cover:"):
            cover.append(_parse_set(line[len("cover:"):], lineno))
        else:
            raise ParseError(f"line {lineno}: unrecognized line {line!r}")
    if points is None:
        raise ParseError("missing points: line")
    if not cover:
        raise ParseError("missing cover: lines")
    return GroundSpace.make(points, cover)


def parse_matrix(text):
    lines = [line for _, line in _logical_lines(text)]
    if not lines:
        raise ParseError("empty matrix file")
    try:
        k = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the dimension, got {lines[0]!r}")
    if k < 1:
        raise ParseError("matrix dimension must be positive")
    if len(lines) != k + 1:
        raise ParseError(f"expected {k} rows after the dimension line, "
                         f"got {len(lines) - 1}")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            row = tuple(int(v) for v in line.split())
        except ValueError:
            raise ParseError(f"row {lineno}: non-integer entry in {line!r}")
        if len(row) != k:
            raise ParseError(f"row {lineno}: expected {k} entries, "
                             f"got {len(row)}")
        rows.append(row)
    return tuple(rows)


def print_matrix(rows):
    """Row-major, fixed-width columns for fixture diffing."""
    width = max(len(str(v)) for row in rows for v in row)
    return "\n".join(" ".join(f"{v:>{width}}" for v in row)
                     for row in rows) + "\n"


def parse_vector(text):
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"vector entries must be integers: {text!r}")
