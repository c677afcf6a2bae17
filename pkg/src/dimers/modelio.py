r"""
Text formats: the dimer model file, analysis reports, SVG and DOT output.

The model file is JSON-shaped with a ``format_version`` field::

    {"format_version": 1,
     "name": "square4",
     "nodes": [{"id": "P1", "color": "black"}, ...],
     "edges": [{"id": "e1", "white": "P2", "black": "P1", "shift": [0, 0]}, ...],
     "rotations": {"P1": ["e1", "e4", "e5", "e6"], ...},
     "faces": [{"label": 0, "dart": ["e1", "wb"]}, ...],          # optional
     "reference_pm": ["e2", "e4"],                                 # optional
     "pm_aliases": {"D1": ["e3", "e5"], ...}}                      # optional

Reports are deterministic (sorted keys and rows) so they diff cleanly.
"""
from __future__ import annotations

import json
import math

from .algebra import INFINITE, is_acyclic, truncated_dimension
from .fixtures import Fixture
from .matchings import enumerate_pms, pm_polygon
from .quiver import dualize
from .surface import TorusBipartiteGraph
from .zigzag import is_consistent, rcharge_feasible, slope_side_check, zigzag_paths

FORMAT_VERSION = 1


def model_to_dict(fixture_or_graph):
    if isinstance(fixture_or_graph, Fixture):
        graph = fixture_or_graph.graph
        reference = fixture_or_graph.reference_pm
        aliases = fixture_or_graph.pm_aliases
    else:
        graph = fixture_or_graph
        reference = None
        aliases = {}
    graph.validate()
    data = {
        "format_version": FORMAT_VERSION,
        "name": graph.name,
        "nodes": [{"id": n, "color": c} for n, c in sorted(graph.nodes.items())],
        "edges": [{"id": e, "white": ed.white, "black": ed.black,
                   "shift": list(ed.shift)}
                  for e, ed in sorted(graph.edges.items())],
        "rotations": {n: list(r) for n, r in sorted(graph.rotations.items())},
        "faces": [{"label": f.label, "dart": list(f.darts[0])}
                  for f in graph.faces],
    }
    if reference:
        data["reference_pm"] = sorted(reference)
    if aliases:
        data["pm_aliases"] = {k: sorted(v) for k, v in sorted(aliases.items())}
    return data


def model_from_dict(data):
    if data.get("format_version") != FORMAT_VERSION:
        raise ValueError("unsupported format_version %r" % data.get("format_version"))
    nodes = {n["id"]: n["color"] for n in data["nodes"]}
    edges = {e["id"]: (e["white"], e["black"], tuple(e["shift"]))
             for e in data["edges"]}
    rotations = {n: tuple(r) for n, r in data["rotations"].items()}
    face_label_darts = {}
    for f in data.get("faces", []):
        face_label_darts[f["label"]] = tuple(f["dart"])
    graph = TorusBipartiteGraph(nodes, edges, rotations, face_label_darts,
                                name=data.get("name"))
    fixture = Fixture(graph,
                      reference_pm=data.get("reference_pm"),
                      pm_aliases=data.get("pm_aliases"))
    return fixture


def dump_model(fixture_or_graph):
    return json.dumps(model_to_dict(fixture_or_graph), indent=2, sort_keys=True)


def load_model(text):
    return model_from_dict(json.loads(text))


# ---------------------------------------------------------------------
# analysis report
# ---------------------------------------------------------------------

def _dim_str(d):
    return "infinite" if d == INFINITE or d is math.inf else int(d)


def analysis_report(fixture, theta=None):
    """Full cross-consistent report: consistency, matchings, polygon,
    zigzag data, and optionally the stability section."""
    graph = fixture.graph
    qp = dualize(graph)
    verdict = is_consistent(graph)
    rch, eps = rcharge_feasible(graph)
    poly = pm_polygon(graph, fixture.reference_pm)
    pms = enumerate_pms(graph)
    rows = []
    for m in pms:
        cls = poly.classify(m)
        acyclic = is_acyclic(qp, m)
        dim = truncated_dimension(qp, m)
        if (cls == "internal") != acyclic:
            raise AssertionError("classification and acyclicity disagree on %r"
                                 % sorted(m))
        rows.append({
            "id": fixture.alias_of(m) or "{%s}" % ",".join(sorted(m)),
            "edges": sorted(m),
            "point": list(poly.point_of(m)),
            "class": cls,
            "acyclic": acyclic,
            "dimension": _dim_str(dim),
        })
    rows.sort(key=lambda r: (r["point"], r["edges"]))
    slopes_equal, slopes, sides = slope_side_check(graph, fixture.reference_pm)
    report = {
        "format_version": FORMAT_VERSION,
        "model": graph.name,
        "consistency": {
            "zigzag_criterion": bool(verdict),
            "rcharge_feasible": rch is not None,
            "rcharge_epsilon": str(eps) if rch is not None else None,
            "reasons": [r[0] for r in verdict.reasons],
        },
        "polygon": {
            "hull": [list(p) for p in poly.hull],
            "lattice_points": [list(p) for p in poly.lattice_points()],
            "interior_points": [list(p) for p in poly.interior_lattice_points()],
        },
        "perfect_matchings": rows,
        "zigzag": {
            "count": len(zigzag_paths(graph)),
            "slopes": [list(s) for s in slopes],
            "slopes_match_sides": slopes_equal,
        },
    }
    if theta is not None:
        from .stability import theta_stable_pms, triangulate
        st = theta_stable_pms(graph, qp, theta, fixture.reference_pm)
        tri = triangulate(graph, qp, theta, fixture.reference_pm)
        report["stability"] = {
            "theta": {str(k): v for k, v in sorted(theta.items(), key=lambda kv: str(kv[0]))},
            "bijective": st.bijective,
            "stable": [{"point": list(p),
                        "id": fixture.alias_of(st.by_point[p]) or sorted(st.by_point[p])}
                       for p in sorted(st.by_point)],
            "triangulation": {
                "well_formed": tri.well_formed,
                "segments": [[list(a), list(b)] for a, b in tri.segments],
                "triangles": [[list(p) for p in t] for t in tri.triangles],
            },
        }
    return report


def report_text(report):
    lines = ["model: %s" % report["model"]]
    c = report["consistency"]
    lines.append("consistent: %s (zigzag) / %s (R-charge, eps=%s)"
                 % (c["zigzag_criterion"], c["rcharge_feasible"], c["rcharge_epsilon"]))
    lines.append("polygon hull: %s" % (report["polygon"]["hull"],))
    lines.append("interior points: %s" % (report["polygon"]["interior_points"],))
    lines.append("zigzag paths: %d, slopes match sides: %s"
                 % (report["zigzag"]["count"], report["zigzag"]["slopes_match_sides"]))
    lines.append("perfect matchings (%d):" % len(report["perfect_matchings"]))
    for r in report["perfect_matchings"]:
        lines.append("  %-24s point=%-8s %-8s dim=%s"
                     % (r["id"], tuple(r["point"]), r["class"], r["dimension"]))
    if "stability" in report:
        st = report["stability"]
        lines.append("stable matchings (bijective=%s):" % st["bijective"])
        for row in st["stable"]:
            lines.append("  %s -> %s" % (tuple(row["point"]), row["id"]))
        lines.append("triangulation: %d triangles, well-formed=%s"
                     % (len(st["triangulation"]["triangles"]),
                        st["triangulation"]["well_formed"]))
    return "\n".join(lines)


def zigzag_report(graph):
    out = []
    for z in zigzag_paths(graph):
        out.append({"slope": list(z.slope),
                    "darts": [[e, d] for e, d in z.darts]})
    return {"format_version": FORMAT_VERSION, "model": graph.name, "zigzags": out}


# ---------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------

def polygon_svg(poly, labels=None, segments=None, scale=40):
    """An SVG drawing of the matching polygon with labelled lattice points
    and optional triangulation segments."""
    pts = poly.lattice_points()
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    pad = 1

    def cx(x):
        return (x - min(xs) + pad) * scale

    def cy(y):
        return (max(ys) - y + pad) * scale

    w = (max(xs) - min(xs) + 2 * pad) * scale
    h = (max(ys) - min(ys) + 2 * pad) * scale
    out = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d">' % (w, h)]
    hull_pts = " ".join("%d,%d" % (cx(x), cy(y)) for x, y in poly.hull)
    out.append('<polygon points="%s" fill="none" stroke="black" stroke-width="2"/>' % hull_pts)
    for a, b in segments or []:
        out.append('<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="gray" stroke-width="1"/>'
                   % (cx(a[0]), cy(a[1]), cx(b[0]), cy(b[1])))
    labels = labels or {}
    for p in pts:
        out.append('<circle cx="%d" cy="%d" r="4" fill="black"/>' % (cx(p[0]), cy(p[1])))
        text = labels.get(tuple(p))
        if text:
            out.append('<text x="%d" y="%d" font-size="12">%s</text>'
                       % (cx(p[0]) + 6, cy(p[1]) - 6, text))
    out.append("</svg>")
    return "\n".join(out)
