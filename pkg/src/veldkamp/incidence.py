"""Point-line incidence structures whose lines carry exactly two points.

Such a structure is just a simple graph: points are vertices and lines are
edges.  Point subsets are carried around as plain ``int`` bitmasks, bit ``p``
standing for point ``p``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

from .errors import EdgeListParseError, InvalidParameterError

log = logging.getLogger(__name__)

Line = tuple[int, int]


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def points_of(mask: int) -> tuple[int, ...]:
    out = []
    p = 0
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return tuple(out)


@dataclass(frozen=True)
class IncidenceStructure:
    """Points ``0..point_count-1`` and a set of two-point lines.

    Lines are normalised to ``(a, b)`` with ``a < b`` and stored sorted.
    ``vertex_ids`` records the original vertex names when the structure was
    parsed from a file with sparse ids; it does not take part in equality.
    """

    point_count: int
    lines: tuple[Line, ...]
    name: str = field(default="", compare=False)
    vertex_ids: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.point_count < 1:
            raise InvalidParameterError("point_count must be positive")
        norm = []
        for line in self.lines:
            a, b = line
            if a == b:
                raise InvalidParameterError(f"line {line} joins a point to itself")
            if not (0 <= a < self.point_count and 0 <= b < self.point_count):
                raise InvalidParameterError(
                    f"line {line} has a point outside 0..{self.point_count - 1}"
                )
            norm.append((min(a, b), max(a, b)))
        if not norm:
            raise InvalidParameterError("an incidence structure needs at least one line")
        if len(set(norm)) != len(norm):
            raise InvalidParameterError("two lines share the same pair of points")
        object.__setattr__(self, "lines", tuple(sorted(norm)))
        isolated = self.isolated_points()
        if isolated:
            log.warning("points %s lie on no line and are unconstrained", list(isolated))

    @property
    def full_mask(self) -> int:
        return (1 << self.point_count) - 1

    @property
    def line_masks(self) -> tuple[int, ...]:
        return tuple((1 << a) | (1 << b) for a, b in self.lines)

    def point_order(self, p: int) -> int:
        return point_order(self, p)

    def isolated_points(self) -> tuple[int, ...]:
        used = set()
        for a, b in self.lines:
            used.update((a, b))
        return tuple(p for p in range(self.point_count) if p not in used)

    def __str__(self):
        label = self.name or "structure"
        return f"{label}: {self.point_count} points, {len(self.lines)} lines"


def point_order(s: IncidenceStructure, p: int) -> int:
    """Number of lines through point ``p``."""
    if not 0 <= p < s.point_count:
        raise InvalidParameterError(f"point {p} out of range 0..{s.point_count - 1}")
    return sum(1 for a, b in s.lines if p in (a, b))


def build_extended_dynkin_d(n: int) -> IncidenceStructure:
    """The extended Dynkin diagram of type D~n as a point-line structure.

    Vertices 0 and 1 fork off vertex 2, vertices n-1 and n fork off vertex
    n-2, and 2..n-2 form a path.  For n = 4 both forks share vertex 2.
    """
    if n < 4:
        raise InvalidParameterError(f"D~n needs n >= 4, got {n}")
    lines = {(0, 2), (1, 2), (n - 2, n - 1), (n - 2, n)}
    lines.update((k, k + 1) for k in range(2, n - 2))
    return IncidenceStructure(n + 1, tuple(sorted(lines)), name=f"D~{n}")


def parse_edge_list(text: str, name: str = "") -> IncidenceStructure:
    """Parse whitespace-separated vertex pairs, one edge per line.

    ``#`` starts a comment; blank lines are skipped.  Sparse vertex ids are
    compacted to ``0..P-1`` in ascending order and the mapping is logged and
    kept on ``vertex_ids``.
    """
    edges: list[Line] = []
    seen: dict[Line, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if len(fields) != 2:
            raise EdgeListParseError(f"expected two vertex ids, got {body!r}", lineno)
        try:
            a, b = (int(f) for f in fields)
        except ValueError:
            raise EdgeListParseError(f"vertex ids must be integers: {body!r}", lineno) from None
        if a < 0 or b < 0:
            raise EdgeListParseError(f"vertex ids must be nonnegative: {body!r}", lineno)
        if a == b:
            raise EdgeListParseError(f"self-loop on vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise EdgeListParseError(
                f"duplicate edge {key[0]}-{key[1]} (first seen on line {seen[key]})", lineno
            )
        seen[key] = lineno
        edges.append(key)
    if not edges:
        raise EdgeListParseError("no edges found")

    ids = sorted({v for e in edges for v in e})
    vertex_ids = None
    if ids[-1] + 1 != len(ids):
        remap = {v: i for i, v in enumerate(ids)}
        log.warning("compacting sparse vertex ids: %s", remap)
        edges = [(remap[a], remap[b]) for a, b in edges]
        vertex_ids = tuple(ids)
    return IncidenceStructure(len(ids), tuple(edges), name=name, vertex_ids=vertex_ids)


def emit_edge_list(s: IncidenceStructure) -> str:
    return "".join(f"{a} {b}\n" for a, b in s.lines)
