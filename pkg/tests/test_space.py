from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import dynkin_maximal, dynkin_space
from oracles import brute_full_line, brute_hyperplanes, brute_lines3
from veldkamp.errors import InvalidParameterError
from veldkamp.gf2space import exceptional_points
from veldkamp.hyperplanes import enumerate_hyperplanes
from veldkamp.incidence import IncidenceStructure
from veldkamp.space import (
    build_veldkamp_space, exceptional_diagnostics, full_line, full_line_histogram,
    full_line_size, lines3_with_full_size_three, third_point,
)

from test_incidence import graphs

PATH3 = IncidenceStructure(3, ((0, 1), (1, 2)))
K2 = IncidenceStructure(2, ((0, 1),))


def test_third_point_d4():
    cat = dynkin_space(4).catalog
    a, b = cat.index_of({0, 2}), cat.index_of({1, 2})
    assert cat[third_point(cat, a, b)].points == (2, 3, 4)
    # c({0,2}) ^ c({0,1,3,4}) = {1,3,4} ^ {2}: its owner {0} is no hyperplane
    assert third_point(cat, a, cat.index_of({0, 1, 3, 4})) is None
    with pytest.raises(InvalidParameterError):
        third_point(cat, a, a)


@pytest.mark.parametrize("n, count", [(4, 35), (5, 47), (6, 168), (7, 332), (8, 876)])
def test_line_counts(n, count):
    assert len(dynkin_space(n).lines3) == count


def test_path_has_one_line():
    sp = build_veldkamp_space(enumerate_hyperplanes(PATH3))
    (line,) = sp.lines3
    # complements {2}, {0}, {0,2}: the XOR-closed triple
    assert {sp.catalog[i].points for i in line} == {(0, 1), (1, 2), (1,)}


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_lines_match_set_oracle(s):
    sp = build_veldkamp_space(enumerate_hyperplanes(s))
    got = {frozenset(frozenset(sp.catalog[i].points) for i in ln) for ln in sp.lines3}
    assert got == brute_lines3(brute_hyperplanes(s.point_count, s.lines), s.point_count)
    assert sum(sp.degree) == 3 * len(sp.lines3)


def test_structural_laws(n):
    sp = dynkin_space(n)
    masks, comp = sp.catalog.masks, sp.catalog.complements
    assert len(set(sp.lines3)) == len(sp.lines3)
    for a, b, c in sp.lines3:
        assert comp[a] ^ comp[b] ^ comp[c] == 0
        assert masks[a] & masks[b] == masks[a] & masks[c] == masks[b] & masks[c]
    assert sum(sp.degree) == 3 * len(sp.lines3)


def test_full_line_size_examples():
    cat = dynkin_space(4).catalog
    a, b = cat.index_of({0, 2}), cat.index_of({1, 2})
    # oracle: {2}, {2,3}, {2,4}, {2,3,4} all meet both in {2}
    hyps = [frozenset(h.points) for h in cat]
    assert full_line_size(cat, a, b) == len(brute_full_line(hyps, hyps[a], hyps[b])) == 6
    k2 = enumerate_hyperplanes(K2)
    assert full_line_size(k2, 0, 1) == 2


def test_full_line_d6_exceptional_joint():
    sp = dynkin_space(6)
    (exc,) = exceptional_points(sp, dynkin_maximal(6))
    (line,) = sp.lines_through(exc)
    assert full_line_size(sp.catalog, line[0], line[1]) == 3
    assert set(full_line(sp.catalog, line[0], line[1])) == set(line)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_full_line_histogram_matches_oracle(n):
    cat = dynkin_space(n).catalog
    hyps = [frozenset(h.points) for h in cat]
    lines = {frozenset(brute_full_line(hyps, a, b)) for a, b in combinations(hyps, 2)}
    expect = {}
    for ln in lines:
        expect[len(ln)] = expect.get(len(ln), 0) + 1
    assert full_line_histogram(cat) == dict(sorted(expect.items()))


def test_agreement_diagnostic_is_reported():
    # Most XOR triples sit inside longer full Veldkamp lines; only this many are complete.
    got = {n: lines3_with_full_size_three(dynkin_space(n)) for n in range(4, 9)}
    assert got == {4: 6, 5: 10, 6: 15, 7: 21, 8: 28}
    for n, k in got.items():
        assert k <= len(dynkin_space(n).lines3)


def test_exceptional_diagnostics():
    sp4 = dynkin_space(4)
    diag = exceptional_diagnostics(sp4, dynkin_maximal(4))
    zero = [d for d in diag if d.degree == 0]
    assert len(zero) == 1 and sp4.catalog[zero[0].index].points == (0, 1, 3, 4)
    assert zero[0].memberships == ()
    assert [d.degree for d in exceptional_diagnostics(dynkin_space(6))].count(1) == 1
    assert min(d.degree for d in exceptional_diagnostics(dynkin_space(5))) >= 3
