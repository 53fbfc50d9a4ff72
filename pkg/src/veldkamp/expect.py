"""Published facts about the D~4..D~8 Veldkamp spaces, checked against a report."""

from __future__ import annotations

from dataclasses import dataclass

from .gf2space import intersect, pg_line_count
from .incidence import mask_of
from .report import AnalysisReport
from .tables import compare_d4, compare_d5

HYPERPLANES = {4: 16, 5: 23, 6: 40, 7: 64, 8: 105}
LINES3 = {4: 35, 5: 47, 6: 168, 7: 332, 8: 876}
MAXIMAL_DIMS = {4: [3], 5: [3, 2, 2], 6: [4, 2, 2, 1], 7: [4, 4, 3, 3, 1], 8: [5, 4, 3, 3, 3, 3, 2]}
D7_ORDER = {
    (2, 3, 5): 0, (2, 4, 5): 1, (0, 1, 3, 5): 2, (0, 2, 3, 5): 3, (0, 2, 4, 5): 4,
    (0, 1, 3, 4, 6, 7): 43, (0, 2, 3, 4, 5, 6, 7): 62, (1, 2, 3, 4, 5, 6, 7): 63,
}


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _eq(name, got, want) -> Check:
    return Check(name, got == want, f"got {got}, expected {want}")


def paper_checks(r: AnalysisReport, n: int) -> list[Check]:
    if n not in HYPERPLANES:
        raise ValueError(f"no published data for D~{n}")
    sp, cat, mx = r.space, r.catalog, r.maximal
    checks = [
        _eq("hyperplane count", len(cat), HYPERPLANES[n]),
        _eq("size-three line count", len(sp.lines3), LINES3[n]),
        _eq("maximal subspace dimensions", [m.dimension for m in mx], MAXIMAL_DIMS[n]),
    ]
    for m in mx:
        checks.append(_eq(f"PG({m.dimension},2) induced lines",
                          len(sp.lines_within(m.members)), pg_line_count(m.dimension)))
    exc = r.exceptional
    v = r.verdicts

    if n == 4:
        checks.append(_eq("exceptional point", [list(cat[i].points) for i in exc], [[0, 1, 3, 4]]))
        checks.append(_eq("exceptional degree", [sp.degree[i] for i in exc], [0]))
        checks.append(_eq("{2} lies in 14 others", len(r.poset[cat.index_of([2])]), 14))
    elif n == 5:
        checks.append(_eq("no exceptional points", exc, []))
        d3, f1, f2 = mx
        checks.append(_eq("Fano planes disjoint", len(intersect(f1, f2)), 0))
        for f in (f1, f2):
            checks.append(_eq("Fano plane shares one line with PG(3,2)",
                              len(sp.lines_within(intersect(f, d3))), 1))
    elif n == 6:
        d4, f1, f2, line = mx
        checks.append(_eq("PG(4,2) size", len(d4), 31))
        checks.append(_eq("smallest hyperplane in 30 others", len(r.poset[0]), 30))
        checks.append(_eq("one degree-1 exceptional point", [sp.degree[i] for i in exc], [1]))
        if exc:
            (joint,) = sp.lines_through(exc[0])
            others = [p for p in joint if p != exc[0]]
            checks.append(Check("exceptional line joins the two Fano planes",
                                sorted(sum(p in f.members for p in others) for f in (f1, f2)) == [1, 1]
                                and set(joint) == line.members))
    elif n == 7:
        a, b = mx[0], mx[1]
        common = intersect(a, b)
        checks.append(_eq("PG(4,2)s intersect in 15 points", len(common), 15))
        if r.distinguished is not None:
            checks.append(Check("intersection is the distinguished PG(3,2)",
                                common == r.distinguished.members))
        checks.append(_eq("one degree-1 exceptional point", [sp.degree[i] for i in exc], [1]))
        for pts, idx in D7_ORDER.items():
            checks.append(_eq(f"canonical index of {set(pts)}", cat.find(mask_of(pts)), idx))
    elif n == 8:
        checks.append(_eq("PG(5,2) and PG(4,2) intersect in 15 points",
                          len(intersect(mx[0], mx[1])), 15))
        checks.append(_eq("exceptional points", exc, [41, 80]))
        checks.append(_eq("H80 = H41 + point 4",
                          cat[80].mask ^ cat[41].mask, 1 << 4))
        ef = r.exceptional_fano or {}
        checks.append(_eq("third point of the exceptional line", ef.get("third"), 100))
        checks.append(_eq("Fano planes through H41 and H80", len(ef.get("planes", [])), 1))
        checks.append(Check("Pasch configuration after dropping H100", ef.get("pasch") is not None))

    if r.labeling is None:
        return checks
    checks.append(_eq("line product violations", len(v["line_product_violations"]), 0))
    if n == 4:
        checks.append(Check("distinguished PG(3,2) bijective", v.get("bijection_distinguished", False)))
        checks.append(_eq("commuting lines", len(v.get("isotropic_lines", [])), 15))
        checks.append(Check("commuting lines form GQ(2,2)", v.get("w32_gq22", False)))
        diff = compare_d4(sp, r.induced)
        checks.append(Check("tables 1-3", not diff, "; ".join(diff)))
    if n == 5:
        diff = compare_d5(sp, r.induced)
        checks.append(Check("tables 4-6", not diff, "; ".join(diff)))
    if n >= 5:
        ms = v.get("magic_square", {})
        checks.append(Check("Mermin-Peres magic square", ms.get("is_magic", False),
                            ms.get("error", f"signs {ms.get('context_signs')}")))
    if n == 6 and r.labeling.name.endswith("v2") and exc:
        (joint,) = sp.lines_through(exc[0])
        checks.append(Check("exceptional line labeled by the identity",
                            all(r.induced[i].is_identity for i in joint)))
    if n == 8:
        checks.append(_eq("PG(5,2) bijective", v["bijection_top"], [True]))
        sub = v.get("subgroup", {})
        checks.append(Check("distinguished labels form a two-qubit subgroup",
                            sub == {"closed": True, "rank": 4, "nondegenerate": True}, str(sub)))
        planes = (r.exceptional_fano or {}).get("planes", [])
        checks.append(Check("exceptional Fano plane labels use only I and Y",
                            len(planes) == 1 and all(r.induced[i].x == r.induced[i].z
                                                     for i in planes[0])))
    return checks
