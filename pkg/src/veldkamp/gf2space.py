"""Binary projective subgeometries of a Veldkamp space.

Hyperplane complements compose by XOR along size-three lines, so a family of
Veldkamp points spans a PG(d, 2) exactly when its complements, together with
zero, form a GF(2)-linear subspace of dimension d + 1.  Searches below grow
such subspaces one basis vector at a time and deduplicate by member set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidParameterError, StructuralError
from .hyperplanes import HyperplaneCatalog, containment_poset
from .space import VeldkampLine, VeldkampSpace


def pg_point_count(d: int) -> int:
    return (1 << (d + 1)) - 1


def pg_line_count(d: int) -> int:
    return ((1 << (d + 1)) - 1) * ((1 << d) - 1) // 3


def dimension_of_size(size: int) -> int:
    d = (size + 1).bit_length() - 2
    if d < 0 or pg_point_count(d) != size:
        raise StructuralError(f"{size} points is not the size of a binary projective space")
    return d


def gf2_rank(vectors: Iterable[int]) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def span(vectors: Iterable[int]) -> set[int]:
    """Nonzero elements of the GF(2) span."""
    out = {0}
    for v in vectors:
        if v not in out:
            out |= {v ^ w for w in out}
    out.discard(0)
    return out


@dataclass(frozen=True)
class ProjectiveSubspace:
    members: frozenset[int]
    dimension: int
    representative: int | None = None

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __len__(self):
        return len(self.members)

    @property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __str__(self):
        rep = "" if self.representative is None else f" rep=H{self.representative}"
        return f"PG({self.dimension},2)[{len(self.members)} pts{rep}]"


def is_xor_closed(space: VeldkampSpace, members: Iterable[int]) -> bool:
    comp = space.catalog.complements
    vecs = {comp[i] for i in members}
    return all((a ^ b) in vecs for a in vecs for b in vecs if a != b)


def induced_lines(space: VeldkampSpace, members: Iterable[int]) -> list[VeldkampLine]:
    return space.lines_within(members)


def certify(space: VeldkampSpace, members: Iterable[int], poset=None) -> ProjectiveSubspace:
    """Check that ``members`` form a PG(d, 2) inside ``space`` and wrap them."""
    ms = frozenset(members)
    d = dimension_of_size(len(ms))
    if not is_xor_closed(space, ms):
        raise StructuralError(f"members {sorted(ms)} are not XOR-closed")
    n_lines = len(induced_lines(space, ms))
    if n_lines != pg_line_count(d):
        raise StructuralError(
            f"PG({d},2) should carry {pg_line_count(d)} lines, found {n_lines}"
        )
    sub = ProjectiveSubspace(ms, d)
    rep = representative_hyperplane(space.catalog, sub, poset)
    return ProjectiveSubspace(ms, d, rep)


def _extend(vectors: set[int], W: frozenset[int], v: int) -> frozenset[int]:
    return W | {v} | {v ^ w for w in W}


def _candidates(vectors: set[int], W: frozenset[int], pool: Iterable[int]) -> set[int]:
    return {u for u in pool if u not in W and all((u ^ w) in vectors for w in W)}


def _to_subspace(space, where, W, poset) -> ProjectiveSubspace:
    members = frozenset(where[v] for v in W)
    sub = ProjectiveSubspace(members, dimension_of_size(len(members)))
    return ProjectiveSubspace(members, sub.dimension,
                              representative_hyperplane(space.catalog, sub, poset))


def _sort_key(sub: ProjectiveSubspace):
    return (-sub.dimension, sub.sorted_members)


def maximal_subspaces(space: VeldkampSpace, min_dim: int = 1) -> list[ProjectiveSubspace]:
    """All inclusion-maximal XOR-closed families of Veldkamp points.

    Isolated points would come out as maximal PG(0,2)s; ``min_dim`` filters
    those (and anything else too small) from the result without affecting
    which families count as maximal.
    """
    comp = space.catalog.complements
    vectors = set(comp)
    where = {c: i for i, c in enumerate(comp)}
    poset = containment_poset(space.catalog)
    seen: set[frozenset[int]] = set()
    maximal: list[frozenset[int]] = []
    stack = []
    for v in comp:
        W = frozenset((v,))
        seen.add(W)
        stack.append((W, _candidates(vectors, W, vectors)))
    while stack:
        W, cand = stack.pop()
        if not cand:
            maximal.append(W)
            continue
        for u in cand:
            W2 = _extend(vectors, W, u)
            if W2 in seen:
                continue
            seen.add(W2)
            stack.append((W2, _candidates(vectors, W2, cand)))
    subs = [_to_subspace(space, where, W, poset) for W in maximal]
    return sorted((s for s in subs if s.dimension >= min_dim), key=_sort_key)


def subspaces_of_dimension(
    space: VeldkampSpace, dim: int, required: Iterable[int] = (), pool: Iterable[int] | None = None
) -> list[ProjectiveSubspace]:
    """Every PG(dim, 2) in the space (maximal or not) containing ``required``.

    ``pool`` restricts the search to subspaces made of those points only.
    """
    comp = space.catalog.complements
    vectors = set(comp) if pool is None else {comp[i] for i in pool}
    where = {c: i for i, c in enumerate(comp)}
    req = list(required)
    if req:
        seed = span(comp[i] for i in req)
        if not seed <= vectors:
            return []
        layer = {frozenset(seed)}
    else:
        layer = {frozenset((v,)) for v in vectors}
    size = pg_point_count(dim)
    while layer and len(next(iter(layer))) < size:
        nxt = set()
        for W in layer:
            for u in _candidates(vectors, W, vectors):
                nxt.add(_extend(vectors, W, u))
        layer = nxt
    poset = containment_poset(space.catalog)
    found = [_to_subspace(space, where, W, poset) for W in layer if len(W) == size]
    return sorted(found, key=_sort_key)


def find_fano_planes_with_points(space: VeldkampSpace, required: Iterable[int]) -> list[ProjectiveSubspace]:
    return subspaces_of_dimension(space, 2, required)


def intersect(a: ProjectiveSubspace, b: ProjectiveSubspace) -> frozenset[int]:
    return a.members & b.members


def shared_lines(space: VeldkampSpace, a: ProjectiveSubspace, b: ProjectiveSubspace) -> list[VeldkampLine]:
    return space.lines_within(intersect(a, b))


def representative_hyperplane(
    catalog: HyperplaneCatalog, sub: ProjectiveSubspace, poset=None
) -> int | None:
    """The member contained (as a point set) in every other member, if any."""
    if poset is not None:
        for h in sub.members:
            if sub.members - {h} <= set(poset[h]):
                return h
        return None
    masks = catalog.masks
    for h in sub.members:
        if all(masks[h] & masks[m] == masks[h] for m in sub.members):
            return h
    return None


def subspace_represented_by(space: VeldkampSpace, index: int) -> ProjectiveSubspace:
    """The hyperplane ``index`` together with every hyperplane containing it.

    Its complement is an independent point set, so adding any proper part of
    the complement keeps the hyperplane property: the family is a
    PG(|complement| - 1, 2).
    """
    masks = space.catalog.masks
    h = masks[index]
    members = [i for i, m in enumerate(masks) if m & h == h]
    return certify(space, members)


def distinguished_subspace(space: VeldkampSpace) -> ProjectiveSubspace | None:
    """Subspace represented by the set of points of order at least two.

    For the D~n diagrams this set is the spine 2..n-2 and the subspace is
    the distinguished PG(3, 2) spanned by the four leaves.  Returns None when
    that set is not a hyperplane.
    """
    s = space.catalog.structure
    core = 0
    for p in range(s.point_count):
        if s.point_order(p) >= 2:
            core |= 1 << p
    idx = space.catalog.find(core)
    return None if idx is None else subspace_represented_by(space, idx)


@dataclass(frozen=True)
class Pasch:
    points: tuple[int, ...]
    lines: tuple[VeldkampLine, ...]


def pasch_from_fano(space: VeldkampSpace, plane: ProjectiveSubspace, removed: int) -> Pasch:
    if removed not in plane.members:
        raise InvalidParameterError(f"H{removed} is not a point of the plane")
    if len(plane.members) != 7:
        raise InvalidParameterError("a Fano plane has seven points")
    lines = induced_lines(space, plane.members)
    if len(lines) != 7:
        raise StructuralError(f"plane carries {len(lines)} lines, expected 7")
    kept = tuple(ln for ln in lines if removed not in ln)
    pts = tuple(sorted(plane.members - {removed}))
    if len(kept) != 4 or any(sum(p in ln for ln in kept) != 2 for p in pts):
        raise StructuralError("removing the point did not leave a Pasch configuration")
    return Pasch(pts, kept)


def exceptional_points(space: VeldkampSpace, maximal: Sequence[ProjectiveSubspace]) -> list[int]:
    """Points outside every maximal subspace that shares a line with a top one.

    "Top" means of the largest dimension present.  Points lying in no maximal
    subspace at all (degree-zero points) are included.
    """
    if not maximal:
        return list(range(space.point_count))
    top = max(m.dimension for m in maximal)
    anchors = [m for m in maximal if m.dimension == top]
    good = [m for m in maximal if any(len(intersect(m, a)) >= 3 for a in anchors)]
    covered = set().union(*(m.members for m in good))
    return [i for i in range(space.point_count) if i not in covered]


@dataclass(frozen=True)
class HierarchyNode:
    subspace: ProjectiveSubspace
    kinds: tuple[str, ...]


@dataclass(frozen=True)
class SubspaceHierarchy:
    """Maximal subspaces, extra named subspaces and their line-or-larger overlaps.

    ``edges`` are (parent, child) node positions of the containment DAG after
    transitive reduction.
    """

    nodes: tuple[HierarchyNode, ...]
    edges: tuple[tuple[int, int], ...]
    membership: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def maximal(self) -> list[ProjectiveSubspace]:
        return [n.subspace for n in self.nodes if "maximal" in n.kinds]

    def node_index(self, sub: ProjectiveSubspace) -> int:
        for i, n in enumerate(self.nodes):
            if n.subspace.members == sub.members:
                return i
        raise KeyError("subspace is not a hierarchy node")


def build_hierarchy(
    space: VeldkampSpace,
    maximal: Sequence[ProjectiveSubspace],
    extra: dict[str, ProjectiveSubspace] | None = None,
) -> SubspaceHierarchy:
    poset = containment_poset(space.catalog)
    kinds: dict[frozenset[int], list[str]] = {}
    subs: dict[frozenset[int], ProjectiveSubspace] = {}

    def add(sub, kind):
        kinds.setdefault(sub.members, [])
        if kind not in kinds[sub.members]:
            kinds[sub.members].append(kind)
        subs.setdefault(sub.members, sub)

    for m in maximal:
        add(m, "maximal")
    for name, sub in (extra or {}).items():
        add(sub, name)
    base = list(subs.values())
    for i, a in enumerate(base):
        for b in base[i + 1:]:
            common = intersect(a, b)
            if len(common) >= 3 and common not in subs:
                add(certify(space, common, poset), "intersection")
    order = sorted(subs, key=lambda k: _sort_key(subs[k]))
    nodes = tuple(HierarchyNode(subs[k], tuple(kinds[k])) for k in order)
    contains = {
        (i, j)
        for i, a in enumerate(order)
        for j, b in enumerate(order)
        if i != j and b < a
    }
    edges = tuple(sorted(
        (i, j) for i, j in contains
        if not any((i, k) in contains and (k, j) in contains for k in range(len(order)))
    ))
    membership = tuple(
        tuple(k for k, key in enumerate(order) if p in key)
        for p in range(space.point_count)
    )
    return SubspaceHierarchy(nodes, edges, membership)
