"""CSV tables of constant-coefficient centers and reports over a triangle.

Format (UTF-8)::

    # comment lines start with '#'
    index,u,v
    2,1,0
    140,3,-1
    7000,1/2,-0.25

``u`` and ``v`` accept integers, decimals and ``p/q`` rationals; all are
read exactly. An optional fourth ``label`` column is preserved.
"""

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction

from .centers import (
    CenterRecord,
    Direction,
    ShinagawaPair,
    barycentric_to_cartesian,
    center_position_via_tau,
    conway_symbols,
    known_centers,
    normalize_triangle,
    shinagawa_barycentrics,
    tau,
)
from .errors import GeometryError, InvalidPairError, TableError
from .kernel import format_scalar, line_contains, points_equal
from .plambda import DegenerateLine, InscribedConfig, euler_line

HEADER = ("index", "u", "v")


@dataclass(frozen=True)
class CenterTable:
    rows: tuple
    source: str = ""

    def __post_init__(self):
        rows = tuple(self.rows)
        seen = set()
        for rec in rows:
            if rec.etc_index in seen:
                raise TableError(f"duplicate index X{rec.etc_index}")
            seen.add(rec.etc_index)
        object.__setattr__(self, "rows", rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


def builtin_table():
    return CenterTable(tuple(known_centers()), source="built-in")


def _number(text, line, column):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise TableError(f"malformed number {text.strip()!r} in column {column!r}", line) from None


def parse_center_table(stream, source="<stream>"):
    """Read a center table from a text stream or a string."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    header = None
    rows = []
    seen = {}
    for lineno, raw in enumerate(stream, 1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        fields = [f.strip() for f in next(csv.reader([text]))]
        if header is None:
            if tuple(f.lower() for f in fields[:3]) != HEADER or len(fields) > 4:
                raise TableError(f"expected header 'index,u,v', got {text!r}", lineno)
            header = fields
            continue
        if len(fields) not in (3, len(header)):
            raise TableError(f"expected {len(header)} fields, got {len(fields)}", lineno)
        try:
            index = int(fields[0])
        except ValueError:
            raise TableError(f"malformed index {fields[0]!r}", lineno) from None
        if index < 1:
            raise TableError(f"index must be positive, got {index}", lineno)
        u = _number(fields[1], lineno, "u")
        v = _number(fields[2], lineno, "v")
        try:
            pair = ShinagawaPair(u, v)
        except InvalidPairError:
            raise TableError("Shinagawa pair (0, 0) has no lambda", lineno) from None
        if index in seen:
            raise TableError(f"duplicate index X{index} (first on line {seen[index]})", lineno)
        seen[index] = lineno
        label = fields[3] if len(fields) > 3 else ""
        rows.append(CenterRecord(index, pair, tau(pair), label))
    if header is None:
        raise TableError("missing header 'index,u,v'")
    return CenterTable(tuple(rows), source=source)


def serialize_center_table(table):
    out = io.StringIO()
    labelled = any(rec.label for rec in table)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(HEADER + (("label",) if labelled else ()))
    for rec in table:
        row = [rec.etc_index, format_scalar(rec.pair.u), format_scalar(rec.pair.v)]
        if labelled:
            row.append(rec.label)
        writer.writerow(row)
    return out.getvalue()


@dataclass(frozen=True)
class RowReport:
    record: CenterRecord
    position: object  # Point, or Direction for the infinity point
    collinear: object  # bool, or None when not applicable
    barycentric_agrees: object  # bool, or None when not checkable


@dataclass(frozen=True)
class TableReport:
    rows: tuple
    triangle: object  # the normalized triangle
    similarity: object
    euler_line: object
    finite_count: int
    infinite_count: int
    all_collinear: object  # None when the Euler line is degenerate
    source: str = ""
    notes: tuple = field(default=())

    def format(self):
        lines = [f"source: {self.source or '-'}"]
        if isinstance(self.euler_line, DegenerateLine):
            lines.append("euler line: degenerate (vertex sum is zero)")
        else:
            lines.append(f"euler line: through {self.euler_line.base!r} "
                         f"direction {self.euler_line.direction!r}")
        for r in self.rows:
            rec = r.record
            if isinstance(r.position, Direction):
                where = f"direction {r.position.vector!r}"
            elif r.position is None:
                where = "undefined"
            else:
                where = f"{r.position!r}"
            flag = {True: "collinear", False: "NOT collinear", None: "-"}[r.collinear]
            lines.append(f"X{rec.etc_index}\tu={format_scalar(rec.pair.u)}\t"
                         f"v={format_scalar(rec.pair.v)}\tlambda={rec.lam}\t{where}\t{flag}")
        collinear = {True: "yes", False: "no", None: "degenerate"}[self.all_collinear]
        lines.append(f"finite: {self.finite_count}  infinite: {self.infinite_count}  "
                     f"all collinear: {collinear}")
        lines.extend(self.notes)
        return "\n".join(lines) + "\n"


def table_report(table, t):
    """Place every table center on the normalized triangle and test collinearity."""
    nt, sim = normalize_triangle(t)
    cs = conway_symbols(nt)
    if cs.degenerate:
        raise GeometryError("degenerate triangle")
    cfg = InscribedConfig(nt.vertices, validate=False)
    ell = euler_line(cfg)
    degenerate = isinstance(ell, DegenerateLine)
    rows = []
    notes = []
    finite = infinite = 0
    all_collinear = None if degenerate else True
    for rec in table:
        if rec.lam.is_infinite:
            infinite += 1
            position = Direction(cfg.vertex_sum()) if not degenerate else None
            if degenerate:
                notes.append(f"X{rec.etc_index}: infinity point undefined on a degenerate Euler line")
            rows.append(RowReport(rec, position, None, None))
            continue
        finite += 1
        position = center_position_via_tau(nt, rec.pair)
        collinear = None if degenerate else line_contains(ell, position)
        if collinear is False:
            all_collinear = False
        try:
            bary = barycentric_to_cartesian(nt, shinagawa_barycentrics(cs, rec.pair))
            agrees = points_equal(bary, position)
        except GeometryError:
            agrees = None
        rows.append(RowReport(rec, position, collinear, agrees))
    return TableReport(tuple(rows), nt, sim, ell, finite, infinite, all_collinear,
                       source=table.source, notes=tuple(notes))
