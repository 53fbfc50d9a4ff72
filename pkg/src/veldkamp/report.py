"""Full analysis pipeline and its text, JSON and DOT renderings."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import gf2space, pauli
from .errors import StructuralError
from .gf2space import ProjectiveSubspace, SubspaceHierarchy
from .hyperplanes import HyperplaneCatalog, containment_poset, enumerate_hyperplanes, DEFAULT_MAX_POINTS
from .incidence import IncidenceStructure
from .labeling import (
    InducedLabeling, VertexLabeling, check_bijection, check_line_products,
    extract_mermin_peres, find_y_only_fano, induce, lines_shared_with_others,
)
from .space import (
    VeldkampSpace, build_veldkamp_space, exceptional_diagnostics,
    full_line_histogram, lines3_with_full_size_three,
)


@dataclass
class AnalysisReport:
    structure: IncidenceStructure
    catalog: HyperplaneCatalog
    space: VeldkampSpace
    poset: tuple
    maximal: list[ProjectiveSubspace]
    distinguished: ProjectiveSubspace | None
    hierarchy: SubspaceHierarchy
    exceptional: list[int]
    full_line_sizes: dict[int, int]
    lines3_complete: int
    exceptional_fano: dict | None
    labeling: VertexLabeling | None = None
    induced: InducedLabeling | None = None
    verdicts: dict = field(default_factory=dict)


def _exceptional_fano(space: VeldkampSpace, exceptional: list[int]) -> dict | None:
    """Planes through a pair of exceptional points and the Pasch left when
    the third point of their line is dropped."""
    for a, b in combinations(exceptional, 2):
        lines = [ln for ln in space.lines_through(a) if b in ln]
        if not lines:
            continue
        third = next(p for p in lines[0] if p not in (a, b))
        planes = gf2space.find_fano_planes_with_points(space, (a, b))
        out = {"pair": [a, b], "third": third,
               "planes": [list(p.sorted_members) for p in planes], "pasch": None}
        if len(planes) == 1:
            pasch = gf2space.pasch_from_fano(space, planes[0], third)
            out["pasch"] = {"points": list(pasch.points), "lines": [list(ln) for ln in pasch.lines]}
        return out
    return None


def analyze(
    structure: IncidenceStructure,
    labeling: VertexLabeling | None = None,
    *,
    max_points: int = DEFAULT_MAX_POINTS,
    workers: int = 1,
) -> AnalysisReport:
    catalog = enumerate_hyperplanes(structure, max_points=max_points,
                                    chunks=max(workers, 1), workers=workers)
    space = build_veldkamp_space(catalog)
    poset = containment_poset(catalog)
    maximal = gf2space.maximal_subspaces(space)
    dist = gf2space.distinguished_subspace(space)
    extra = {"distinguished": dist} if dist is not None else {}
    hierarchy = gf2space.build_hierarchy(space, maximal, extra)
    exceptional = gf2space.exceptional_points(space, maximal)
    report = AnalysisReport(
        structure, catalog, space, poset, maximal, dist, hierarchy, exceptional,
        full_line_histogram(catalog), lines3_with_full_size_three(space),
        _exceptional_fano(space, exceptional),
    )
    if labeling is not None:
        report.labeling = labeling
        report.induced = induce(labeling, catalog)
        report.verdicts = _labeling_verdicts(report)
    return report


def _labeling_verdicts(r: AnalysisReport) -> dict:
    ind = r.induced
    out: dict = {
        "line_product_violations": [list(ln) for ln in check_line_products(ind, r.space.lines3)],
        "bijection_top": [check_bijection(ind, m.members) for m in r.maximal
                          if m.dimension == r.maximal[0].dimension],
        "bijection_all": check_bijection(ind, range(len(r.catalog))),
        "y_only_fano": [list(p.sorted_members) for p in find_y_only_fano(r.space, ind)],
    }
    d = r.distinguished
    if d is not None and d.dimension == 3:
        labs = [ind[i] for i in d.sorted_members]
        out["bijection_distinguished"] = check_bijection(ind, d.members)
        iso = [ln for ln in r.space.lines_within(d.members)
               if pauli.isotropic_lines([[ind[i] for i in ln]])]
        out["isotropic_lines"] = [list(ln) for ln in iso]
        out["w32_gq22"] = len(iso) == 15 and pauli.check_gq22(d.sorted_members, iso)
        sub = pauli.check_subgroup(labs)
        out["subgroup"] = {"closed": sub.closed, "rank": sub.rank, "nondegenerate": sub.nondegenerate}
        try:
            mp = extract_mermin_peres(r.space, ind, d, r.maximal)
        except StructuralError as exc:
            out["magic_square"] = {"error": str(exc)}
        else:
            out["magic_square"] = {
                "shared_lines": [list(ln) for ln in mp.shared_lines],
                "grid": [list(row) for row in mp.grid],
                "grid_labels": [list(row) for row in mp.grid_labels],
                "context_signs": list(mp.verdict.context_signs),
                "sign_product": mp.verdict.sign_product,
                "is_magic": mp.verdict.is_magic,
            }
    return out


def to_dict(r: AnalysisReport) -> dict:
    def sub_entry(node):
        s = node.subspace
        return {
            "dim": s.dimension,
            "members": list(s.sorted_members),
            "representative": s.representative,
            "kinds": list(node.kinds),
            "induced_lines": len(r.space.lines_within(s.members)),
            "shared_lines": [list(ln) for ln in lines_shared_with_others(r.space, s, r.maximal)],
        }

    diag = exceptional_diagnostics(r.space, r.hierarchy.maximal)
    out = {
        "structure": r.structure.name,
        "points": r.structure.point_count,
        "lines": [list(ln) for ln in r.structure.lines],
        "hyperplanes": [{"index": h.index, "set": list(h.points)} for h in r.catalog],
        "veldkamp_lines": [list(ln) for ln in r.space.lines3],
        "full_line_sizes": {str(k): v for k, v in r.full_line_sizes.items()},
        "lines3_complete": r.lines3_complete,
        "subspaces": [sub_entry(n) for n in r.hierarchy.nodes],
        "hierarchy_edges": [list(e) for e in r.hierarchy.edges],
        "diagnostics": {
            "degrees": [d.degree for d in diag],
            "memberships": [list(d.memberships) for d in diag],
            "exceptional": r.exceptional,
            "exceptional_fano": r.exceptional_fano,
        },
    }
    if r.structure.vertex_ids is not None:
        out["vertex_ids"] = list(r.structure.vertex_ids)
    if r.labeling is not None:
        out["labeling"] = {
            "name": r.labeling.name,
            "width": r.labeling.width,
            "vertex_labels": [str(e) for e in r.labeling.labels],
            "hyperplane_labels": [str(e) for e in r.induced.labels],
            **r.verdicts,
        }
    return out


def render_text(r: AnalysisReport) -> str:
    s = r.structure
    lines = [
        f"{s.name or 'structure'}: {s.point_count} points, {len(s.lines)} lines",
        f"hyperplanes: {len(r.catalog)}",
        f"size-three Veldkamp lines: {len(r.space.lines3)}"
        f" ({r.lines3_complete} of them complete Veldkamp lines)",
        "full Veldkamp line sizes: "
        + ", ".join(f"{k}:{v}" for k, v in r.full_line_sizes.items()),
        "projective subspaces:",
    ]
    for node in r.hierarchy.nodes:
        sub = node.subspace
        rep = "-" if sub.representative is None else f"H{sub.representative}"
        lines.append(f"  PG({sub.dimension},2)  {len(sub):3d} points  rep {rep:5s} "
                     f"[{', '.join(node.kinds)}]")
    exc = ", ".join(f"H{i} (degree {r.space.degree[i]})" for i in r.exceptional) or "none"
    lines.append(f"exceptional points: {exc}")
    if r.exceptional_fano:
        ef = r.exceptional_fano
        lines.append(f"exceptional pair H{ef['pair'][0]}, H{ef['pair'][1]} -> third point "
                     f"H{ef['third']}, {len(ef['planes'])} Fano plane(s) through the pair")
    if r.labeling is not None:
        v = r.verdicts
        lines.append(f"labeling {r.labeling.name}: {r.labeling}")
        lines.append(f"  line product violations: {len(v['line_product_violations'])}")
        lines.append(f"  bijection on top subspace(s): {v['bijection_top']}")
        if "bijection_distinguished" in v:
            lines.append(f"  distinguished PG(3,2) bijective: {v['bijection_distinguished']}; "
                         f"commuting lines {len(v['isotropic_lines'])}, GQ(2,2) {v['w32_gq22']}")
            ms = v["magic_square"]
            if "error" in ms:
                lines.append(f"  magic square: not extracted ({ms['error']})")
            else:
                lines.append(f"  magic square (signs {ms['context_signs']}, "
                             f"magic={ms['is_magic']}):")
                lines.extend("    " + " ".join(row) for row in ms["grid_labels"])
        lines.append(f"  Y-only Fano planes: {len(v['y_only_fano'])}")
    return "\n".join(lines) + "\n"


def emit_dot(r: AnalysisReport, what: str = "diagram") -> str:
    if what == "diagram":
        body = [f"  {p};" for p in range(r.structure.point_count)]
        body += [f"  {a} -- {b};" for a, b in r.structure.lines]
        return "graph diagram {\n" + "\n".join(body) + "\n}\n"
    if what == "veldkamp":
        body = [f'  H{h.index} [label="H{h.index}\\n{h}"];' for h in r.catalog]
        for k, ln in enumerate(r.space.lines3):
            body.append(f"  L{k} [shape=point];")
            body += [f"  L{k} -- H{p};" for p in ln]
        return "graph veldkamp {\n" + "\n".join(body) + "\n}\n"
    if what == "hierarchy":
        body = []
        for i, node in enumerate(r.hierarchy.nodes):
            sub = node.subspace
            rep = "" if sub.representative is None else f"\\nrep H{sub.representative}"
            shape = "ellipse" if "maximal" in node.kinds else "box"
            body.append(f'  S{i} [label="PG({sub.dimension},2){rep}\\n{"/".join(node.kinds)}", '
                        f"shape={shape}];")
        body += [f"  S{a} -> S{b};" for a, b in r.hierarchy.edges]
        return "digraph hierarchy {\n" + "\n".join(body) + "\n}\n"
    raise ValueError(f"unknown DOT view {what!r}")
