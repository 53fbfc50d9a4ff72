"""Published tables for D~4 and D~5 and comparison against computed data.

D~4 hyperplanes are given explicitly, so they are matched as point sets (the
published order is not the canonical one).  For D~5 only labels are
published; each published index is resolved to the unique hyperplane with
that label inside its family, and the line tables are then checked under
that resolution.
"""

from __future__ import annotations

from .hyperplanes import HyperplaneCatalog
from .incidence import mask_of, points_of
from .labeling import InducedLabeling
from .space import VeldkampSpace

D4_HYPERPLANES = {
    1: (0, 2), 2: (1, 2), 3: (2, 4), 4: (2, 3), 5: (1, 2, 3, 4), 6: (0, 2, 3, 4),
    7: (0, 1, 2, 3), 8: (0, 1, 2, 4), 9: (0, 2, 3), 10: (0, 2, 4), 11: (0, 1, 2),
    12: (2, 3, 4), 13: (1, 2, 3), 14: (1, 2, 4), 15: (2,), 16: (0, 1, 3, 4),
}

D4_LINES = [
    (1, 2, 12), (1, 3, 13), (1, 4, 14), (1, 5, 15), (1, 6, 11), (1, 7, 10), (1, 8, 9),
    (2, 3, 9), (2, 4, 10), (2, 5, 11), (2, 6, 15), (2, 7, 14), (2, 8, 13), (3, 4, 11),
    (3, 5, 10), (3, 6, 14), (3, 7, 15), (3, 8, 12), (4, 5, 9), (4, 6, 13), (4, 7, 12),
    (4, 8, 15), (5, 6, 12), (5, 7, 13), (5, 8, 14), (6, 7, 9), (6, 8, 10), (7, 8, 11),
    (9, 10, 11), (9, 12, 13), (9, 14, 15), (10, 12, 14), (10, 13, 15), (11, 12, 15),
    (11, 13, 14),
]

D4_LABELS = dict(zip(range(1, 17), (
    "ZY YZ YX XY XI IX IZ ZI IY ZX ZZ XX XZ YI YY YY".split()
)))

D5_FANO_LINES = [
    (1, 2, 14), (1, 3, 16), (1, 4, 20), (2, 3, 20), (2, 4, 16), (3, 4, 14),
    (5, 6, 13), (5, 7, 15), (5, 8, 21), (6, 7, 21), (6, 8, 15), (7, 8, 13),
]

D5_PG32_LINES = [
    (9, 10, 19), (9, 11, 21), (9, 12, 23), (9, 13, 17), (9, 14, 18), (9, 15, 20),
    (9, 16, 22), (10, 11, 22), (10, 12, 20), (10, 13, 18), (10, 14, 17), (10, 15, 23),
    (10, 16, 21), (11, 12, 18), (11, 13, 20), (11, 14, 23), (11, 15, 17), (11, 16, 19),
    (12, 13, 22), (12, 14, 21), (12, 15, 19), (12, 16, 17), (13, 14, 19), (13, 15, 21),
    (13, 16, 23), (14, 15, 22), (14, 16, 20), (15, 16, 18), (17, 18, 19), (17, 20, 21),
    (17, 22, 23), (18, 20, 22), (18, 21, 23), (19, 20, 23), (19, 21, 22),
]

D5_LABELS = {
    9: "XY", 10: "YX", 11: "ZY", 12: "YZ", 13: "ZI", 14: "IZ", 15: "XI", 16: "IX",
    17: "YY", 18: "XX", 19: "ZZ", 20: "IY", 21: "YI", 22: "XZ", 23: "ZX",
    2: "YX", 3: "YZ", 1: "YY", 4: "YI", 6: "XY", 7: "ZY", 5: "YY", 8: "IY",
}


def default_fixtures() -> dict:
    return {
        "d4_hyperplanes": {k: list(v) for k, v in D4_HYPERPLANES.items()},
        "d4_lines": [list(t) for t in D4_LINES],
        "d4_labels": dict(D4_LABELS),
        "d5_fano_lines": [list(t) for t in D5_FANO_LINES],
        "d5_pg32_lines": [list(t) for t in D5_PG32_LINES],
        "d5_labels": dict(D5_LABELS),
    }


def _int_keys(d: dict) -> dict:
    return {int(k): v for k, v in d.items()}


def _fmt(triple) -> str:
    return "{" + ",".join(f"H{t}" for t in triple) + "}"


def compare_d4(space: VeldkampSpace, induced: InducedLabeling, fixtures: dict | None = None) -> list[str]:
    """Diff lines between computed D~4 data and the published tables; empty means match."""
    fx = fixtures or default_fixtures()
    catalog = space.catalog
    diff: list[str] = []
    to_canon: dict[int, int] = {}
    for k, pts in sorted(_int_keys(fx["d4_hyperplanes"]).items()):
        idx = catalog.find(mask_of(pts))
        if idx is None:
            diff.append(f"table 1: H{k} = {sorted(pts)} is not a computed hyperplane")
        else:
            to_canon[k] = idx
    published = {mask_of(p) for p in fx["d4_hyperplanes"].values()}
    for h in catalog:
        if h.mask not in published:
            diff.append(f"table 1: computed hyperplane {list(h.points)} is missing")
    if diff:
        return diff

    got = set(space.lines3)
    want = set()
    for t in fx["d4_lines"]:
        want.add(tuple(sorted(to_canon[k] for k in t)))
    from_canon = {v: k for k, v in to_canon.items()}
    for ln in sorted(want - got):
        diff.append(f"table 2: published line {_fmt(from_canon[i] for i in ln)} not computed")
    for ln in sorted(got - want):
        diff.append(f"table 2: computed line {_fmt(from_canon[i] for i in ln)} not published")

    for k, lab in sorted(_int_keys(fx["d4_labels"]).items()):
        if str(induced[to_canon[k]]) != lab:
            diff.append(f"table 3: H{k} labeled {induced[to_canon[k]]}, published {lab}")
    return diff


def _d5_family(k: int, mask: int) -> bool:
    has2, has3 = bool(mask >> 2 & 1), bool(mask >> 3 & 1)
    if k <= 4:
        return not has2
    if k <= 8:
        return not has3
    return has2 and has3


def resolve_d5_indices(catalog: HyperplaneCatalog, induced: InducedLabeling,
                       labels: dict[int, str] | None = None) -> tuple[dict[int, int], list[str]]:
    """Map each published D~5 index to a canonical index.

    Indices 1-4 miss point 2, 5-8 miss point 3 and 9-23 contain both; within
    its family a published label must single out one hyperplane.
    """
    labels = _int_keys(labels or D5_LABELS)
    mapping: dict[int, int] = {}
    problems = []
    for k, lab in sorted(labels.items()):
        hits = [h.index for h in catalog
                if str(induced[h.index]) == lab and _d5_family(k, h.mask)]
        if len(hits) != 1:
            problems.append(f"table 6: H{k} ({lab}) matches {len(hits)} hyperplanes")
        else:
            mapping[k] = hits[0]
    if len(set(mapping.values())) != len(mapping):
        problems.append("table 6: two published indices resolve to one hyperplane")
    return mapping, problems


def compare_d5(space: VeldkampSpace, induced: InducedLabeling, fixtures: dict | None = None) -> list[str]:
    fx = fixtures or default_fixtures()
    catalog = space.catalog
    mapping, diff = resolve_d5_indices(catalog, induced, fx["d5_labels"])
    if diff:
        return diff
    if len(mapping) != len(catalog):
        diff.append(f"table 6: {len(mapping)} published points, {len(catalog)} computed")
    back = {v: k for k, v in mapping.items()}
    got = {tuple(sorted(back[i] for i in ln)) for ln in space.lines3}
    for name, rows in (("table 4", fx["d5_fano_lines"]), ("table 5", fx["d5_pg32_lines"])):
        for t in rows:
            if tuple(sorted(t)) not in got:
                diff.append(f"{name}: published line {_fmt(t)} not computed")
    want = {tuple(sorted(t)) for t in fx["d5_fano_lines"] + fx["d5_pg32_lines"]}
    for ln in sorted(got - want):
        diff.append(f"tables 4-5: computed line {_fmt(ln)} not published")

    # PG(3,2) = all hyperplanes containing H17; Fano planes = those containing H1 / H5
    masks = catalog.masks

    def above(k):
        m = masks[mapping[k]]
        return {back[i] for i, h in enumerate(masks) if h & m == m}

    checks = [
        ("PG(3,2) points", above(17), set(range(9, 24))),
        ("first Fano plane", above(1), {1, 2, 3, 4, 14, 16, 20}),
        ("second Fano plane", above(5), {5, 6, 7, 8, 13, 15, 21}),
        ("first missing line", above(20), {14, 16, 20}),
        ("second missing line", above(21), {13, 15, 21}),
    ]
    for name, found, expected in checks:
        if found != expected:
            diff.append(f"table 6: {name} computed as {sorted(found)}, published {sorted(expected)}")
    return diff


def describe_d5_mapping(catalog: HyperplaneCatalog, mapping: dict[int, int]) -> list[str]:
    return [f"H{k} = {list(points_of(catalog.masks[v]))} (canonical {v})"
            for k, v in sorted(mapping.items())]
