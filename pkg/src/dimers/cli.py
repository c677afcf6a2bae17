r"""
Command-line interface.

``dimers <command> <model> [options]`` where ``<model>`` is a built-in
fixture name or a path to a model file.  Exit codes: 0 on success, 1 when
a check fails or an invariant is violated, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import fixtures, modelio
from .matchings import pm_polygon
from .mutations import (exchange_graph, mutate_dimer, mutate_pm_minus,
                        mutate_pm_plus, mutate_qp)
from .quiver import dualize
from .stability import theta_stable_pms, triangulate
from .surface import ValidationError
from .zigzag import is_consistent, rcharge_feasible
from .algebra import (algebra_fingerprint, dimension_without_vertex,
                      is_acyclic, truncated_dimension)
from .modelio import _dim_str


class CliError(SystemExit):
    pass


def _load(name_or_path):
    if name_or_path in fixtures.fixture_names():
        return fixtures.load_fixture(name_or_path)
    try:
        with open(name_or_path) as fh:
            return modelio.load_model(fh.read())
    except FileNotFoundError:
        print("no fixture or file named %r" % name_or_path, file=sys.stderr)
        raise SystemExit(2)


def _parse_theta(fixture, text):
    if text is None:
        if fixture.theta is None:
            print("this model has no default stability weight; pass --theta",
                  file=sys.stderr)
            raise SystemExit(2)
        return fixture.theta
    values = [int(v) for v in text.split(",")]
    verts = sorted(f.label for f in fixture.graph.faces)
    if len(values) != len(verts):
        print("expected %d weights, got %d" % (len(verts), len(values)),
              file=sys.stderr)
        raise SystemExit(2)
    return dict(zip(verts, values))


def _resolve_pm(fixture, name):
    if name in fixture.pm_aliases:
        return fixture.pm_aliases[name]
    edges = frozenset(name.split(","))
    if edges <= set(fixture.graph.edges):
        return edges
    print("unknown matching %r (use an alias like D7 or a comma list of edges)"
          % name, file=sys.stderr)
    raise SystemExit(2)


def _emit(path, text):
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_validate(args):
    fx = _load(args.model)
    bad = fx.graph.violations()
    if bad:
        for v in bad:
            print(str(v))
        return 1
    print("ok: %d nodes, %d edges, %d faces"
          % (len(fx.graph.nodes), len(fx.graph.edges), len(fx.graph.faces)))
    return 0


def cmd_analyze(args):
    fx = _load(args.model)
    theta = _parse_theta(fx, args.theta) if (args.theta or fx.theta) else None
    reference = _resolve_pm(fx, args.ref_pm) if args.ref_pm else fx.reference_pm
    fx.reference_pm = frozenset(reference) if reference else None
    report = modelio.analysis_report(fx, theta)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(modelio.report_text(report))
    return 0


def cmd_polygon(args):
    fx = _load(args.model)
    poly = pm_polygon(fx.graph, fx.reference_pm)
    labels = {}
    for name, m in fx.pm_aliases.items():
        p = tuple(poly.point_of(m))
        labels[p] = "%s %s" % (labels.get(p, ""), name) if p in labels else name
    _emit(args.svg, modelio.polygon_svg(poly, labels))
    if args.svg:
        print("wrote %s" % args.svg)
    return 0


def cmd_zigzag(args):
    fx = _load(args.model)
    print(json.dumps(modelio.zigzag_report(fx.graph), indent=2, sort_keys=True))
    return 0


def cmd_consistency(args):
    fx = _load(args.model)
    verdict = is_consistent(fx.graph)
    reasons = []
    for r in verdict.reasons:
        entry = {"kind": r[0], "slope": list(r[1].slope),
                 "darts": [[e, d] for e, d in r[1].darts]}
        if len(r) > 2:
            entry["repeated_edges"] = sorted(r[2])
        reasons.append(entry)
    out = {"model": fx.graph.name, "consistent": bool(verdict),
           "reasons": reasons}
    if args.lp:
        rch, eps = rcharge_feasible(fx.graph)
        out["rcharge_feasible"] = rch is not None
        out["rcharge_epsilon"] = str(eps)
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0 if verdict else 1


def cmd_stable_pms(args):
    fx = _load(args.model)
    theta = _parse_theta(fx, args.theta)
    qp = dualize(fx.graph)
    st = theta_stable_pms(fx.graph, qp, theta, fx.reference_pm)
    out = {"model": fx.graph.name, "bijective": st.bijective,
           "stable": {str(tuple(p)): sorted(st.by_point[p]) for p in sorted(st.by_point)},
           "issues": [list(map(str, i)) for i in st.issues]}
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0 if st.bijective else 1


def cmd_triangulate(args):
    fx = _load(args.model)
    theta = _parse_theta(fx, args.theta)
    qp = dualize(fx.graph)
    tri = triangulate(fx.graph, qp, theta, fx.reference_pm)
    if args.svg:
        poly = pm_polygon(fx.graph, fx.reference_pm)
        _emit(args.svg, modelio.polygon_svg(poly, segments=tri.segments))
        print("wrote %s" % args.svg)
    else:
        print(json.dumps({"segments": [[list(a), list(b)] for a, b in tri.segments],
                          "triangles": [[list(p) for p in t] for t in tri.triangles],
                          "well_formed": tri.well_formed},
                         indent=2, sort_keys=True))
    return 0 if tri.well_formed else 1


def cmd_mutate_pm(args):
    fx = _load(args.model)
    qp = dualize(fx.graph)
    m = _resolve_pm(fx, args.pm)
    k = int(args.vertex)
    if args.dir == "plus":
        out = mutate_pm_plus(qp, m, k)
    else:
        out = mutate_pm_minus(qp, m, k)
    print(json.dumps({"matching": sorted(out),
                      "alias": fx.alias_of(out)}, indent=2, sort_keys=True))
    return 0


def cmd_exchange_graph(args):
    fx = _load(args.model)
    qp = dualize(fx.graph)
    m = _resolve_pm(fx, args.pm)
    poly = pm_polygon(fx.graph, fx.reference_pm)
    eg = exchange_graph(qp, m, poly)
    alias = {edges: name for name, edges in fx.pm_aliases.items()}
    dot = eg.to_dot(alias)
    _emit(args.dot, dot)
    if args.dot:
        print("wrote %s (%d matchings, %d edges)"
              % (args.dot, len(eg.nodes), len(eg.edges)))
    return 0


def cmd_mutate_dimer(args):
    fx = _load(args.model)
    k = int(args.face)
    mut = mutate_dimer(fx.graph, k)
    text = modelio.dump_model(mut.model)
    _emit(args.out, text)
    if args.out:
        print("wrote %s" % args.out)
    return 0


def cmd_mutate_qp(args):
    fx = _load(args.model)
    qp = dualize(fx.graph)
    k = int(args.vertex)
    grading = None
    if args.graded:
        if not args.pm:
            print("--graded needs --pm", file=sys.stderr)
            return 2
        grading = qp.grading_of(_resolve_pm(fx, args.pm))
    qp2, deg2 = mutate_qp(qp, k, grading=grading, side=args.side)
    print(qp2.to_dot(deg2, name="mutated"))
    return 0


def cmd_algebra(args):
    fx = _load(args.model)
    qp = dualize(fx.graph)
    m = _resolve_pm(fx, args.pm)
    acyclic = is_acyclic(qp, m)
    out = {"model": fx.graph.name, "matching": sorted(m), "acyclic": acyclic,
           "dimension": _dim_str(truncated_dimension(qp, m))}
    if args.drop_vertex is not None:
        out["dimension_without_vertex"] = _dim_str(
            dimension_without_vertex(qp, m, int(args.drop_vertex)))
    if acyclic:
        total, mat = algebra_fingerprint(qp, m)
        out["fingerprint"] = {"dimension": total, "blocks": list(mat)}
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def cmd_fixtures(args):
    if args.action == "list":
        for name in fixtures.fixture_names():
            print(name)
        return 0
    fx = fixtures.load_fixture(args.name)
    print(modelio.dump_model(fx))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="dimers",
                                description="dimer model combinatorics")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("validate", cmd_validate, help="check the embedding axioms")
    sp.add_argument("model")

    sp = add("analyze", cmd_analyze, help="full analysis report")
    sp.add_argument("model")
    sp.add_argument("--theta")
    sp.add_argument("--ref-pm")
    sp.add_argument("--json", action="store_true")

    sp = add("polygon", cmd_polygon, help="matching polygon as SVG")
    sp.add_argument("model")
    sp.add_argument("--svg")

    sp = add("zigzag", cmd_zigzag, help="zigzag paths and slopes")
    sp.add_argument("model")

    sp = add("consistency", cmd_consistency, help="consistency verdict")
    sp.add_argument("model")
    sp.add_argument("--lp", action="store_true",
                    help="also run the exact R-charge feasibility check")

    sp = add("stable-pms", cmd_stable_pms, help="stable matchings per lattice point")
    sp.add_argument("model")
    sp.add_argument("--theta")

    sp = add("triangulate", cmd_triangulate, help="stability triangulation")
    sp.add_argument("model")
    sp.add_argument("--theta")
    sp.add_argument("--svg")

    sp = add("mutate-pm", cmd_mutate_pm, help="matching mutation")
    sp.add_argument("model")
    sp.add_argument("--pm", required=True)
    sp.add_argument("--vertex", required=True)
    sp.add_argument("--dir", choices=["plus", "minus"], required=True)

    sp = add("exchange-graph", cmd_exchange_graph, help="mutation closure as DOT")
    sp.add_argument("model")
    sp.add_argument("--pm", required=True)
    sp.add_argument("--dot")

    sp = add("mutate-dimer", cmd_mutate_dimer, help="dimer mutation at a face")
    sp.add_argument("model")
    sp.add_argument("--face", required=True)
    sp.add_argument("--out")

    sp = add("mutate-qp", cmd_mutate_qp, help="quiver-with-potential mutation")
    sp.add_argument("model")
    sp.add_argument("--vertex", required=True)
    sp.add_argument("--graded", action="store_true")
    sp.add_argument("--pm")
    sp.add_argument("--side", choices=["L", "R"], default="L")

    sp = add("algebra", cmd_algebra, help="truncated algebra data")
    sp.add_argument("model")
    sp.add_argument("--pm", required=True)
    sp.add_argument("--drop-vertex")

    sp = add("fixtures", cmd_fixtures, help="list or dump built-in models")
    sp.add_argument("action", choices=["list", "dump"])
    sp.add_argument("name", nargs="?")

    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValidationError as exc:
        for v in exc.violations:
            print(str(v), file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
