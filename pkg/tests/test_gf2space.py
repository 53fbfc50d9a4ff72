from itertools import combinations

import pytest

from conftest import dynkin_induced, dynkin_maximal, dynkin_space
from veldkamp.errors import InvalidParameterError, StructuralError
from veldkamp.gf2space import (
    build_hierarchy, certify, distinguished_subspace, exceptional_points,
    find_fano_planes_with_points, gf2_rank, intersect, maximal_subspaces, pasch_from_fano,
    pg_line_count, representative_hyperplane, shared_lines, span, subspace_represented_by,
    subspaces_of_dimension,
)
from veldkamp.hyperplanes import enumerate_hyperplanes
from veldkamp.incidence import IncidenceStructure
from veldkamp.space import build_veldkamp_space
from veldkamp.tables import resolve_d5_indices



def dims(subs):
    return [s.dimension for s in subs]


def test_pg_line_counts():
    assert [pg_line_count(d) for d in (1, 2, 3, 4, 5)] == [1, 7, 35, 155, 651]


def test_span_and_rank():
    assert span([1, 2]) == {1, 2, 3}
    assert gf2_rank([1, 2, 3, 4]) == 3


def test_every_maximal_subspace_certifies(n):
    sp = dynkin_space(n)
    for sub in dynkin_maximal(n):
        assert len(sub) == 2 ** (sub.dimension + 1) - 1
        lines = sp.lines_within(sub.members)
        assert len(lines) == pg_line_count(sub.dimension)
        # oracle: brute-force triples inside the member set
        comp = sp.catalog.complements
        brute = [t for t in combinations(sorted(sub.members), 3)
                 if comp[t[0]] ^ comp[t[1]] == comp[t[2]]]
        assert sorted(brute) == sorted(lines)


def test_maximality(n):
    mx = dynkin_maximal(n)
    for a in mx:
        for b in mx:
            assert a is b or not a.members <= b.members


def test_d4():
    (sub,) = dynkin_maximal(4)
    sp = dynkin_space(4)
    assert sub.dimension == 3 and len(sub) == 15
    assert len(sp.lines_within(sub.members)) == 35
    outside = set(range(16)) - sub.members
    assert [sp.catalog[i].points for i in outside] == [(0, 1, 3, 4)]
    assert sp.catalog[sub.representative].points == (2,)


def test_d5_hierarchy_and_shared_lines():
    sp = dynkin_space(5)
    D5, problems = resolve_d5_indices(sp.catalog, dynkin_induced(5))
    assert not problems
    d3, f1, f2 = dynkin_maximal(5)
    assert dims([d3, f1, f2]) == [3, 2, 2]
    assert intersect(f1, f2) == frozenset()
    found = {tuple(shared_lines(sp, d3, f)[0]) for f in (f1, f2)}
    expect = {tuple(sorted((D5[14], D5[16], D5[20]))), tuple(sorted((D5[13], D5[15], D5[21])))}
    assert found == expect


def test_d6_hierarchy():
    sp = dynkin_space(6)
    d4, f1, f2, line = dynkin_maximal(6)
    assert dims(dynkin_maximal(6)) == [4, 2, 2, 1]
    assert len(d4) == 31 and len(sp.lines_within(d4.members)) == 155
    assert d4.representative == 0


def test_d7_d8_intersections():
    a, b = dynkin_maximal(7)[:2]
    assert dims([a, b]) == [4, 4] and len(intersect(a, b)) == 15
    top, second = dynkin_maximal(8)[:2]
    assert dims([top, second]) == [5, 4] and len(intersect(top, second)) == 15
    assert intersect(top, second) == distinguished_subspace(dynkin_space(8)).members


def test_distinguished_is_spine_subspace(n):
    sp = dynkin_space(n)
    d = distinguished_subspace(sp)
    assert d.dimension == 3
    spine = set(range(2, n - 1))
    assert set(sp.catalog[d.representative].points) == spine


def test_representative_examples():
    sp4 = dynkin_space(4)
    assert sp4.catalog[dynkin_maximal(4)[0].representative].points == (2,)
    d4 = dynkin_maximal(6)[0]
    assert d4.representative == 0 and len(dynkin_space(6).catalog[0]) == 2
    # planes of the D~4 PG(3,2) that avoid {2} have no member inside all the others
    planes = subspaces_of_dimension(sp4, 2)
    assert len(planes) == 15
    lacking = [p for p in planes if p.representative is None]
    assert lacking and all(representative_hyperplane(sp4.catalog, p) is None for p in lacking)


def test_subspace_represented_by(n):
    sp = dynkin_space(n)
    for h in (0, len(sp.catalog) // 2):
        sub = subspace_represented_by(sp, h)
        assert sub.dimension == sp.catalog[h].complement.bit_count() - 1
        assert sub.representative == h


def test_abstract_fano_plane():
    # seven points whose complements are the nonzero vectors of a 3-dim space
    s = IncidenceStructure(4, ((0, 1), (0, 2), (0, 3)))
    sp = build_veldkamp_space(enumerate_hyperplanes(s))
    (plane,) = maximal_subspaces(sp)
    assert plane.dimension == 2 and len(plane) == 7
    for removed in plane.members:
        pasch = pasch_from_fano(sp, plane, removed)
        assert len(pasch.points) == 6 and len(pasch.lines) == 4
        assert all(sum(p in ln for ln in pasch.lines) == 2 for p in pasch.points)
    with pytest.raises(InvalidParameterError):
        pasch_from_fano(sp, plane, len(sp.catalog) + 5)


def test_d8_exceptional_fano():
    sp = dynkin_space(8)
    (plane,) = find_fano_planes_with_points(sp, {41, 80})
    assert 100 in plane.members
    pasch = pasch_from_fano(sp, plane, 100)
    assert len(pasch.points) == 6 and len(pasch.lines) == 4
    assert find_fano_planes_with_points(sp, {0, 41}) == []


def test_exceptional_points_rule():
    got = {n: exceptional_points(dynkin_space(n), dynkin_maximal(n)) for n in range(4, 9)}
    assert got[4] == [13] and got[5] == [] and got[7] == [43] and got[8] == [41, 80]
    assert len(got[6]) == 1 and dynkin_space(6).degree[got[6][0]] == 1


def test_hierarchy_d6():
    sp = dynkin_space(6)
    h = build_hierarchy(sp, dynkin_maximal(6), {"distinguished": distinguished_subspace(sp)})
    kinds = [(n.subspace.dimension, n.kinds) for n in h.nodes]
    assert (4, ("maximal",)) in kinds and (3, ("distinguished",)) in kinds
    assert sum(1 for d, k in kinds if d == 2 and "maximal" in k) == 2
    assert sum(1 for d, k in kinds if d == 1 and "maximal" in k) == 1
    top = h.node_index(dynkin_maximal(6)[0])
    dist = h.node_index(distinguished_subspace(sp))
    assert (top, dist) in h.edges
    for node in h.nodes:
        certify(sp, node.subspace.members)


def test_certify_rejects_non_subspace():
    sp = dynkin_space(4)
    with pytest.raises(StructuralError):
        certify(sp, [0, 1, 2])
