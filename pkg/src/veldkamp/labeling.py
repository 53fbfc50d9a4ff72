"""Pauli labelings of diagram vertices and the checks run on induced labels.

A hyperplane is labeled by the product of its points' labels.  Products are
taken in the phase-free group, where multiplication is XOR and therefore
commutative; point order does not matter.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import pauli
from .errors import InvalidParameterError, LabelingError, StructuralError
from .gf2space import ProjectiveSubspace, subspaces_of_dimension
from .hyperplanes import HyperplaneCatalog
from .pauli import MagicSquareVerdict, PauliElement
from .space import VeldkampLine, VeldkampSpace

log = logging.getLogger(__name__)

_BUILTIN = {
    (4, 1): "XI IX YY ZI IZ",
    (5, 1): "ZI XI YI IY IZ IX",
    (6, 1): "ZI XI YI II IY IZ IX",
    (6, 2): "ZI XI II YY II IZ IX",
    (7, 1): "ZI XI YI II II IY IZ IX",
    (7, 2): "ZI XI II YI IY II IZ IX",
    (8, 1): "XII ZII YII IXI IYI IZI IIY IIX IIZ",
}


@dataclass(frozen=True)
class VertexLabeling:
    name: str
    labels: tuple[PauliElement, ...]

    def __post_init__(self):
        if not self.labels:
            raise LabelingError("a labeling needs at least one vertex")
        widths = {e.n for e in self.labels}
        if len(widths) != 1:
            raise LabelingError(f"labels have mixed widths {sorted(widths)}")

    @property
    def width(self) -> int:
        return self.labels[0].n

    def __len__(self):
        return len(self.labels)

    def total_product(self) -> PauliElement:
        return pauli.product(self.labels)

    def __str__(self):
        return ", ".join(f"{v} -> {e}" for v, e in enumerate(self.labels))


def builtin_labeling(n: int, variant: int = 1) -> VertexLabeling:
    try:
        text = _BUILTIN[(n, variant)]
    except KeyError:
        raise InvalidParameterError(
            f"no builtin labeling for D~{n} variant {variant} "
            "(n in 4..8; variant 2 only for n = 6, 7)"
        ) from None
    return VertexLabeling(f"D~{n} builtin v{variant}", tuple(map(pauli.parse, text.split())))


def load_labeling(
    source: str | Path,
    *,
    point_count: int | None = None,
    allow_nonidentity: bool = False,
    name: str | None = None,
) -> VertexLabeling:
    """Read ``vertex PAULI`` pairs (``#`` comments allowed).

    ``source`` is a path or the file text itself.  Every vertex 0..P-1 must be
    labeled exactly once.  A total product other than the identity is an
    error unless ``allow_nonidentity`` is set, in which case it is logged.
    """
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source
                                    and Path(source).is_file()):
        path = Path(source)
        text = path.read_text(encoding="utf-8")
        name = name or path.name
    else:
        text = str(source)
    found: dict[int, PauliElement] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if len(fields) != 2 or not fields[0].isdigit():
            raise LabelingError(f"line {lineno}: expected 'vertex PAULI', got {body!r}")
        v = int(fields[0])
        if v in found:
            raise LabelingError(f"line {lineno}: vertex {v} labeled twice")
        if point_count is not None and v >= point_count:
            raise LabelingError(f"line {lineno}: unknown vertex {v}")
        e = pauli.parse(fields[1])
        if found and e.n != next(iter(found.values())).n:
            raise LabelingError(f"line {lineno}: {e} has width {e.n}, expected "
                                f"{next(iter(found.values())).n}")
        found[v] = e
    size = point_count if point_count is not None else (max(found) + 1 if found else 0)
    missing = [v for v in range(size) if v not in found]
    if missing:
        raise LabelingError(f"vertices {missing} carry no label")
    lab = VertexLabeling(name or "file", tuple(found[v] for v in range(size)))
    prod = lab.total_product()
    if not prod.is_identity:
        if not allow_nonidentity:
            raise LabelingError(f"product of all vertex labels is {prod}, not the identity")
        log.warning("product of all vertex labels is %s; line products may fail", prod)
    return lab


@dataclass(frozen=True)
class InducedLabeling:
    labels: tuple[PauliElement, ...]

    def __getitem__(self, index: int) -> PauliElement:
        return self.labels[index]

    def __len__(self):
        return len(self.labels)


def induce(labeling: VertexLabeling, catalog: HyperplaneCatalog) -> InducedLabeling:
    if len(labeling) != catalog.structure.point_count:
        raise LabelingError(
            f"labeling covers {len(labeling)} vertices, structure has "
            f"{catalog.structure.point_count}"
        )
    return InducedLabeling(tuple(
        pauli.product((labeling.labels[p] for p in h.points), labeling.width)
        for h in catalog
    ))


def check_line_products(induced: InducedLabeling, lines3: Sequence[VeldkampLine]) -> list[VeldkampLine]:
    """Lines whose three labels do not multiply to the identity."""
    return [ln for ln in lines3 if not pauli.product(induced[i] for i in ln).is_identity]


def check_bijection(induced: InducedLabeling, members) -> bool:
    labs = [induced[i] for i in members]
    return len(set(labs)) == len(labs) and not any(e.is_identity for e in labs)


def is_y_only(e: PauliElement) -> bool:
    return e.x == e.z


def find_y_only_fano(space: VeldkampSpace, induced: InducedLabeling) -> list[ProjectiveSubspace]:
    pool = [i for i in range(space.point_count) if is_y_only(induced[i])]
    return subspaces_of_dimension(space, 2, pool=pool)


@dataclass(frozen=True)
class MerminPeres:
    shared_lines: tuple[VeldkampLine, ...]
    isotropic_lines: tuple[VeldkampLine, ...]
    grid: tuple[tuple[int, ...], ...]
    verdict: MagicSquareVerdict

    @property
    def grid_labels(self) -> tuple[tuple[str, ...], ...]:
        return tuple(tuple(map(str, row)) for row in self.verdict.grid)


def lines_shared_with_others(
    space: VeldkampSpace, sub: ProjectiveSubspace, others: Sequence[ProjectiveSubspace]
) -> list[VeldkampLine]:
    """Lines that ``sub`` has in common with subspaces not containing it,
    where that common part is exactly one line."""
    out = set()
    for m in others:
        if sub.members <= m.members:
            continue
        common = sub.members & m.members
        if len(common) == 3:
            out.update(space.lines_within(common))
    return sorted(out)


def extract_mermin_peres(
    space: VeldkampSpace,
    induced: InducedLabeling,
    distinguished: ProjectiveSubspace,
    others: Sequence[ProjectiveSubspace],
) -> MerminPeres:
    """Strip the two shared lines from the commuting-line quadrangle of a
    labeled PG(3, 2) and check that the 3x3 grid left over is magic."""
    if distinguished.dimension != 3:
        raise StructuralError("the distinguished subspace must be a PG(3,2)")
    members = distinguished.members
    if not check_bijection(induced, members):
        raise StructuralError("labels on the distinguished PG(3,2) are not a bijection")
    shared = lines_shared_with_others(space, distinguished, others)
    if len(shared) != 2 or set(shared[0]) & set(shared[1]):
        raise StructuralError(f"expected two disjoint shared lines, found {shared}")

    lines = space.lines_within(members)
    iso = [ln for ln in lines
           if all(pauli.commutes(induced[a], induced[b]) for a, b in
                  ((ln[0], ln[1]), (ln[0], ln[2]), (ln[1], ln[2])))]
    if not pauli.check_gq22(sorted(members), iso):
        raise StructuralError("commuting lines do not form GQ(2,2)")

    removed = set(shared[0]) | set(shared[1])
    rest = sorted(members - removed)
    grid_lines = [ln for ln in iso if not removed & set(ln)]
    if not pauli.is_generalized_quadrangle(rest, grid_lines, 2, 1):
        raise StructuralError("the leftover points do not form a 3x3 grid")

    grid = _arrange_grid(rest, grid_lines, lambda i: str(induced[i]))
    verdict = pauli.verify_magic_square([[induced[i] for i in row] for row in grid])
    return MerminPeres(tuple(shared), tuple(iso), grid, verdict)


def _arrange_grid(points, lines, key):
    # anchor: least label; first row is the anchor's line with smaller other labels
    anchor = min(points, key=key)

    def ordered(line, first):
        return (first,) + tuple(sorted((p for p in line if p != first), key=key))

    through = [ordered(ln, anchor) for ln in lines if anchor in ln]
    through.sort(key=lambda ln: [key(p) for p in ln])
    row0, col0 = through
    rows = [row0]
    for start in col0[1:]:
        line = next(ln for ln in lines if start in ln and not set(ln) & set(col0) - {start})
        cols = []
        for head in row0:
            col = next(ln for ln in lines if head in ln and not set(ln) & set(row0) - {head})
            cols.append(next(p for p in line if p in col))
        rows.append(tuple(cols))
    return tuple(rows)
