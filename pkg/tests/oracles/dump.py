"""Oracle results in the golden JSON layout."""

from __future__ import annotations

import brute
import schema


def symdyn_view(T, max_period: int = 8) -> dict:
    P = brute.Partition.of(T)
    return {
        "counts": {str(p): brute.word_count(P, p) for p in range(1, max_period + 1)},
        "free": {kind: schema.free_set(brute.free_classes(P, kind, 2 * T.n)) for kind in ("stable", "unstable")},
    }


def side_view(side: "brute.Side") -> dict:
    components = [
        {"strips": schema.strips(c), "chi": d["chi"], "circles": d["circles"], "genus": d["genus"]}
        for c, d in side.census.items()
    ]
    leaves = [
        {
            "segments": schema.segments(l["segments"]),
            "component": schema.strips(l["component"]),
            "orbit": schema.word(l["orbit"]),
            "sign": l["sign"],
        }
        for l in side.leaves
    ]
    return {
        "components": sorted(components, key=lambda d: d["strips"]),
        "leaves": sorted(leaves, key=lambda d: d["segments"]),
        "gaps": [dict(g, rect=g["rect"] + 1) for g in side.gaps()],
        "violations": sorted([k, schema.strips(c)] for k, c in side.violations()),
    }


def surface_view(T, rule: str = "thirds") -> dict:
    sides = brute.analyze(T, rule)
    out = {kind: side_view(sides[kind]) for kind in ("stable", "unstable")}
    out["realizable"] = not any(out[k]["violations"] for k in ("stable", "unstable"))
    return out
