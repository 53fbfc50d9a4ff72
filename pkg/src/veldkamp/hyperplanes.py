"""Geometric hyperplanes of a two-point-line incidence structure.

A hyperplane is a proper point subset that every line meets in one or two
points.  Enumeration sweeps all ``2**P`` subsets in vectorised blocks,
dropping candidates as soon as one line misses them.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .errors import CapacityError, InvalidParameterError, NotAHyperplaneError
from .incidence import IncidenceStructure, mask_of, points_of

DEFAULT_MAX_POINTS = 30
_BLOCK = 1 << 18


def as_mask(s: IncidenceStructure, candidate: int | Iterable[int]) -> int:
    if isinstance(candidate, (int, np.integer)):
        mask = int(candidate)
    else:
        mask = mask_of(candidate)
    if mask < 0 or mask >> s.point_count:
        raise InvalidParameterError(
            f"point set {points_of(mask)} does not fit {s.point_count} points"
        )
    return mask


def is_hyperplane(s: IncidenceStructure, candidate: int | Iterable[int]) -> bool:
    mask = as_mask(s, candidate)
    if mask == s.full_mask:
        return False
    return all(mask & lm for lm in s.line_masks)


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: fewer points first, then ascending point lists compared lexicographically."""
    pts = points_of(mask)
    return (len(pts), pts)


@dataclass(frozen=True)
class Hyperplane:
    index: int
    mask: int
    point_count: int

    @property
    def points(self) -> tuple[int, ...]:
        return points_of(self.mask)

    @property
    def complement(self) -> int:
        return ((1 << self.point_count) - 1) ^ self.mask

    def __len__(self):
        return self.mask.bit_count()

    def __str__(self):
        return "{" + ",".join(map(str, self.points)) + "}"


@dataclass(frozen=True)
class HyperplaneCatalog:
    """All hyperplanes of ``structure`` in canonical order; index == position."""

    structure: IncidenceStructure
    hyperplanes: tuple[Hyperplane, ...]
    _by_mask: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_mask", {h.mask: h.index for h in self.hyperplanes})

    @classmethod
    def from_masks(cls, structure: IncidenceStructure, masks: Iterable[int]) -> HyperplaneCatalog:
        ordered = sorted(set(masks), key=canonical_key)
        P = structure.point_count
        return cls(structure, tuple(Hyperplane(i, m, P) for i, m in enumerate(ordered)))

    def __len__(self):
        return len(self.hyperplanes)

    def __iter__(self) -> Iterator[Hyperplane]:
        return iter(self.hyperplanes)

    def __getitem__(self, i: int) -> Hyperplane:
        return self.hyperplanes[i]

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(h.mask for h in self.hyperplanes)

    @property
    def complements(self) -> tuple[int, ...]:
        return tuple(h.complement for h in self.hyperplanes)

    def find(self, mask: int) -> int | None:
        return self._by_mask.get(mask)

    def index_of(self, points: int | Iterable[int]) -> int:
        return canonical_index_of(self, points)


def _sweep(line_pairs: list[tuple[int, int]], full: int, start: int, stop: int) -> list[int]:
    found: list[int] = []
    for lo in range(start, stop, _BLOCK):
        cand = np.arange(lo, min(lo + _BLOCK, stop), dtype=np.uint64)
        for a, b in line_pairs:
            hit = ((cand >> np.uint64(a)) | (cand >> np.uint64(b))) & np.uint64(1)
            cand = cand[hit.astype(bool)]
            if not cand.size:
                break
        found.extend(cand[cand != np.uint64(full)].tolist())
    return found


def enumerate_hyperplanes(
    s: IncidenceStructure,
    *,
    max_points: int = DEFAULT_MAX_POINTS,
    chunks: int = 1,
    workers: int = 1,
) -> HyperplaneCatalog:
    """Exhaustively find every hyperplane of ``s``.

    The subset range is split into ``chunks`` contiguous pieces which run on
    ``workers`` threads; the merged result is canonically sorted, so the
    catalog does not depend on either setting.
    """
    P = s.point_count
    if P > max_points:
        raise CapacityError(P, max_points)
    if chunks < 1 or workers < 1:
        raise InvalidParameterError("chunks and workers must be positive")
    total = 1 << P
    # Lines with the most-constrained points first reject candidates soonest.
    order = [s.point_order(p) for p in range(P)]
    pairs = sorted(s.lines, key=lambda ln: -(order[ln[0]] + order[ln[1]]))
    bounds = [total * k // chunks for k in range(chunks + 1)]
    ranges = [(bounds[k], bounds[k + 1]) for k in range(chunks) if bounds[k] < bounds[k + 1]]
    full = s.full_mask
    if workers == 1:
        parts = [_sweep(pairs, full, a, b) for a, b in ranges]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda r: _sweep(pairs, full, *r), ranges))
    return HyperplaneCatalog.from_masks(s, (m for part in parts for m in part))


def canonical_index_of(catalog: HyperplaneCatalog, points: int | Iterable[int]) -> int:
    mask = as_mask(catalog.structure, points)
    idx = catalog.find(mask)
    if idx is None:
        raise NotAHyperplaneError(f"{list(points_of(mask))} is not a hyperplane of the catalog")
    return idx


def containment_poset(catalog: HyperplaneCatalog) -> tuple[tuple[int, ...], ...]:
    """For each hyperplane, the indices of the other hyperplanes containing it."""
    masks = catalog.masks
    return tuple(
        tuple(j for j, big in enumerate(masks) if j != i and small & big == small)
        for i, small in enumerate(masks)
    )
