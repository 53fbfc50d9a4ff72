"""The Veldkamp space of a catalog: its size-three lines and full-line sizes.

Writing ``c(H)`` for the complement of a hyperplane, the third point of the
size-three line through ``A`` and ``B`` is the hyperplane whose complement is
``c(A) ^ c(B)`` (the complement of the symmetric difference ``A ^ B``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import InvalidParameterError, StructuralError
from .hyperplanes import HyperplaneCatalog

VeldkampLine = tuple[int, int, int]


def third_point(catalog: HyperplaneCatalog, a: int, b: int) -> int | None:
    if a == b:
        raise InvalidParameterError("third_point needs two distinct hyperplanes")
    comp = catalog.complements
    full = catalog.structure.full_mask
    return catalog.find(full ^ (comp[a] ^ comp[b]))


@dataclass(frozen=True)
class VeldkampSpace:
    catalog: HyperplaneCatalog
    lines3: tuple[VeldkampLine, ...]
    degree: tuple[int, ...]
    _line_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_line_set", frozenset(self.lines3))

    @property
    def point_count(self) -> int:
        return len(self.catalog)

    def has_line(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self._line_set

    def lines_through(self, p: int) -> list[VeldkampLine]:
        return [ln for ln in self.lines3 if p in ln]

    def lines_within(self, members) -> list[VeldkampLine]:
        ms = set(members)
        return [ln for ln in self.lines3 if ms.issuperset(ln)]


def build_veldkamp_space(catalog: HyperplaneCatalog) -> VeldkampSpace:
    if not len(catalog):
        raise InvalidParameterError("catalog is empty")
    comp = catalog.complements
    where = {c: i for i, c in enumerate(comp)}
    found = set()
    for i in range(len(comp)):
        ci = comp[i]
        for j in range(i + 1, len(comp)):
            k = where.get(ci ^ comp[j])
            if k is not None:
                found.add(tuple(sorted((i, j, k))))
    lines = tuple(sorted(found))
    deg = [0] * len(comp)
    for ln in lines:
        for p in ln:
            deg[p] += 1
    space = VeldkampSpace(catalog, lines, tuple(deg))
    check_lines(space)
    return space


def check_lines(space: VeldkampSpace) -> None:
    """Runtime guard: XOR identity and equal pairwise intersections on every line."""
    masks = space.catalog.masks
    comp = space.catalog.complements
    for a, b, c in space.lines3:
        if comp[a] ^ comp[b] ^ comp[c]:
            raise StructuralError(f"line {(a, b, c)} breaks the XOR identity")
        if not masks[a] & masks[b] == masks[a] & masks[c] == masks[b] & masks[c]:
            raise StructuralError(f"line {(a, b, c)} has unequal pairwise intersections")


def full_line(catalog: HyperplaneCatalog, a: int, b: int) -> tuple[int, ...]:
    """Every hyperplane on the Veldkamp line through ``a`` and ``b``."""
    if a == b:
        raise InvalidParameterError("a Veldkamp line needs two distinct hyperplanes")
    masks = catalog.masks
    meet = masks[a] & masks[b]
    return tuple(
        i for i, h in enumerate(masks)
        if i in (a, b) or (h & masks[a] == meet and h & masks[b] == meet)
    )


def full_line_size(catalog: HyperplaneCatalog, a: int, b: int) -> int:
    return len(full_line(catalog, a, b))


def full_line_histogram(catalog: HyperplaneCatalog) -> dict[int, int]:
    """Size -> number of distinct full Veldkamp lines of that size.

    Full lines do not form a linear space (two of them may share a pair of
    points), so every pair is expanded.
    """
    n = len(catalog)
    seen = {full_line(catalog, a, b) for a in range(n) for b in range(a + 1, n)}
    return dict(sorted(Counter(len(ln) for ln in seen).items()))


def lines3_with_full_size_three(space: VeldkampSpace) -> int:
    """How many size-three lines are also complete Veldkamp lines."""
    return sum(1 for a, b, _ in space.lines3 if full_line_size(space.catalog, a, b) == 3)


@dataclass(frozen=True)
class PointDiagnostics:
    index: int
    degree: int
    memberships: tuple[int, ...]


def exceptional_diagnostics(space: VeldkampSpace, subspaces=()) -> list[PointDiagnostics]:
    """Degree and containing-subspace positions for every Veldkamp point.

    ``subspaces`` is any sequence of objects with a ``members`` attribute,
    normally the maximal subspaces; memberships are positions in it.
    """
    return [
        PointDiagnostics(
            i,
            space.degree[i],
            tuple(k for k, sub in enumerate(subspaces) if i in sub.members),
        )
        for i in range(space.point_count)
    ]
