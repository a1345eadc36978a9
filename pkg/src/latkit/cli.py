"""Batch command line front end.

Every subcommand reads one input file (or stdin via `-`), calls the
library, and prints either key/value lines or a JSON report. Integers
in JSON are decimal strings so consumers with 64-bit parsers stay safe.
Exit codes: 0 success, 1 violated math precondition, 2 parse or I/O
problem.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import fileformats
from .cb3 import DEFAULT_EXPONENT_CAP, cb_properties_check, cb_structure, find_hull_gcb3
from .decomp import rational_orbit_report
from .degree import (
    degree_graded_dim1,
    degree_lattice_breakdown,
    degree_matrix_ideal,
    degree_toric,
)
from .errors import ParseError, PreconditionError
from .exactmat import IntMatrix, smith_normal_form
from .graphs import (
    WeightedDigraph,
    WeightedGraph,
    laplacian,
    laplacian_digraph,
    laplacian_report,
    sandpile_group,
    spanning_tree_count,
    toppling_ideal,
)
from .ideal import Binomial, BinomialIdeal, affine_degree, matrix_ideal, saturate_variables
from .lattice import Lattice, critical_group, torsion_order
from .matclass import classify
from .volume import normalized_volume

SCHEMA = "latkit/1"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror or e}") from None


def _binomial_entry(b: Binomial):
    return {"plus": list(b.plus), "minus": list(b.minus), "text": repr(b)}


def _ideal_entries(ideal: BinomialIdeal):
    return [_binomial_entry(b) for b in ideal.reduced_groebner()]


def _matrix_entry(mat: IntMatrix):
    return mat.to_rows()


def _jsonify(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    raise TypeError(f"unexpected report value {value!r}")


def _human_value(value):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "none"
    return str(value)


def _human_lines(payload, indent=""):
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            if set(value) == {"plus", "minus", "text"}:
                lines.append(f"{indent}{key}: {value['text']}")
                continue
            lines.append(f"{indent}{key}:")
            lines.extend(_human_lines(value, indent + "  "))
        elif isinstance(value, (list, tuple)):
            if all(isinstance(v, (int, str)) and not isinstance(v, bool) for v in value):
                lines.append(f"{indent}{key}: {' '.join(str(v) for v in value)}")
            elif all(isinstance(v, (list, tuple)) for v in value) and all(
                isinstance(x, int) for v in value for x in v
            ):
                lines.append(f"{indent}{key}:")
                lines.extend(f"{indent}  {' '.join(str(x) for x in row)}" for row in value)
            else:
                lines.append(f"{indent}{key}:")
                for item in value:
                    if isinstance(item, dict):
                        if set(item) == {"plus", "minus", "text"}:
                            lines.append(f"{indent}  {item['text']}")
                        else:
                            lines.extend(_human_lines(item, indent + "  "))
                    else:
                        lines.append(f"{indent}  {_human_value(item)}")
        else:
            lines.append(f"{indent}{key}: {_human_value(value)}")
    return lines


def _cmd_snf(args):
    mat = fileformats.parse_matrix(_read_input(args.file))
    dec = smith_normal_form(mat)
    return {
        "rows": mat.rows,
        "cols": mat.cols,
        "gamma": list(dec.gamma),
        "rank": dec.rank,
        "P": _matrix_entry(dec.P),
        "Q": _matrix_entry(dec.Q),
    }


def _cmd_torsion(args):
    lat = fileformats.parse_lattice(_read_input(args.file))
    group = critical_group(lat)
    return {
        "ambient_dim": lat.ambient_dim,
        "rank": lat.rank,
        "torsion_order": torsion_order(lat),
        "invariant_factors": list(group.invariant_factors),
    }


def _parse_grading(raw, length):
    parts = raw.split(",")
    try:
        d = tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"grading must be comma-separated integers: {raw!r}") from None
    if len(d) != length:
        raise ParseError(f"grading has {len(d)} entries, expected {length}")
    return d


def _cmd_degree(args):
    text = _read_input(args.file)
    if args.kind == "lattice":
        lat = fileformats.parse_lattice(text)
        if args.grading is not None:
            d = _parse_grading(args.grading, lat.ambient_dim)
            return {"degree": degree_graded_dim1(lat, d), "grading": list(d)}
        br = degree_lattice_breakdown(lat)
        return {
            "degree": br.degree,
            "torsion_order": br.torsion_order,
            "normalized_volume": br.normalized_volume,
            "defining_torsion": br.defining_torsion,
        }
    if args.grading is not None:
        raise ParseError("--grading only applies to `degree lattice`")
    if args.kind == "toric":
        mat = fileformats.parse_matrix(text)
        lat = Lattice(mat.rows, [mat.column(j) for j in range(mat.cols)])
        return {
            "degree": degree_toric(mat),
            "torsion_free": torsion_order(lat) == 1,
        }
    if args.kind == "ideal":
        ideal = fileformats.parse_ideal(text)
        dim, deg = affine_degree(ideal)
        return {"dimension": dim, "degree": deg}
    mat = fileformats.parse_matrix(text)
    return {"degree": degree_matrix_ideal(mat)}


def _cmd_saturate(args):
    ideal = fileformats.parse_ideal(_read_input(args.file))
    sat = saturate_variables(ideal)
    return {
        "num_vars": sat.ambient_dim,
        "generators": _ideal_entries(sat),
    }


def _cmd_hull(args):
    mat = fileformats.parse_matrix(_read_input(args.file))
    hull = saturate_variables(matrix_ideal(mat))
    return {
        "num_vars": hull.ambient_dim,
        "generators": _ideal_entries(hull),
    }


def _cmd_classify(args):
    mat = fileformats.parse_matrix(_read_input(args.file))
    rep = classify(mat)
    return {
        "pure_binomial": rep.pure_binomial,
        "full_support_binomial": rep.full_support_binomial,
        "critical": rep.critical,
        "positive_critical": rep.positive_critical,
        "generalized_critical": rep.generalized_critical,
        "generalized_positive": rep.generalized_positive,
        "right_kernel_witness": list(rep.right_kernel_witness)
        if rep.right_kernel_witness
        else None,
        "left_kernel_witness": list(rep.left_kernel_witness)
        if rep.left_kernel_witness
        else None,
    }


def _cmd_laplacian(args):
    graph = fileformats.parse_graph(_read_input(args.file))
    if args.digraph:
        if not isinstance(graph, WeightedDigraph):
            raise ParseError("--digraph needs a file with `i > j w` arc lines")
        L = laplacian_digraph(graph)
        return {
            "vertices": graph.vertex_count,
            "laplacian": _matrix_entry(L),
            "strongly_connected": graph.is_strongly_connected(),
        }
    if not isinstance(graph, WeightedGraph):
        raise ParseError("directed graph file needs --digraph")
    L = laplacian(graph)
    payload = {
        "vertices": graph.vertex_count,
        "laplacian": _matrix_entry(L),
        "sandpile_invariant_factors": list(sandpile_group(graph).invariant_factors),
        "sandpile_order": sandpile_group(graph).order,
        "spanning_trees": spanning_tree_count(graph),
    }
    if args.full_report:
        rep = laplacian_report(graph)
        payload.update(
            {
                "vanishing_condition": rep.vanishing_condition,
                "laplacian_ideal_degree": rep.laplacian_ideal_degree,
                "toppling_ideal_degree": rep.toppling_ideal_degree,
                "hull_equals_toppling": rep.hull_equals_toppling,
                "is_lattice_ideal": rep.is_lattice,
                "column_support_sizes": list(rep.column_support_sizes),
                "support_hypothesis_applies": rep.support_hypothesis_applies,
                "aci_applies": rep.aci_applies,
                "minimal_generators": rep.minimal_generators,
                "hull_generators": _ideal_entries(toppling_ideal(graph)),
            }
        )
    return payload


def _cmd_decompose(args):
    lat = fileformats.parse_lattice(_read_input(args.file))
    return rational_orbit_report(lat).to_report()


def _cmd_cb3(args):
    text = _read_input(args.file)
    cap = args.max_iter
    if args.mode == "structure":
        lat = fileformats.parse_lattice(text)
        cbset, M = cb_structure(lat, cap)
        return {
            "case": cbset.case,
            "permutation": list(cbset.permutation),
            "critical_binomials": [_binomial_entry(b) for b in cbset.binomials],
            "pure_exponents": list(cbset.pure_exponents),
            "matrix": _matrix_entry(M),
        }
    if args.mode == "findhull":
        mat = fileformats.parse_matrix(text)
        M, hull = find_hull_gcb3(mat, cap)
        return {
            "matrix": _matrix_entry(M),
            "hull_generators": _ideal_entries(hull),
        }
    mat = fileformats.parse_matrix(text)
    rep = cb_properties_check(mat)
    return {
        "syzygies_hold": rep.syzygies_hold,
        "lattice_ideal": rep.lattice_ideal,
        "unmixed": rep.unmixed,
        "minimal_generators": rep.minimal_generators,
        "complete_intersection": rep.complete_intersection,
    }


def _cmd_volume(args):
    points = fileformats.parse_points(_read_input(args.file))
    return {"normalized_volume": normalized_volume(points)}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="latkit",
        description="Exact computations with lattice ideals, matrix ideals and graph Laplacians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="input file, or - for stdin")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.set_defaults(handler=handler)
        return p

    add("snf", _cmd_snf, "Smith normal form of an integer matrix")
    add("torsion", _cmd_torsion, "torsion of Z^s modulo a lattice")

    p = sub.add_parser("degree", help="degree of a lattice/toric/binomial/matrix ideal")
    p.add_argument("kind", choices=["lattice", "toric", "ideal", "matrix"])
    p.add_argument("file", help="input file, or - for stdin")
    p.add_argument("--grading", help="comma-separated positive weights (lattice only)")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.set_defaults(handler=_cmd_degree)

    add("saturate", _cmd_saturate, "saturate a binomial ideal by the product of variables")
    add("hull", _cmd_hull, "hull (saturation) of a matrix ideal")
    add("classify", _cmd_classify, "membership in the six sign-pattern matrix classes")

    p = add("laplacian", _cmd_laplacian, "Laplacian matrix and sandpile data of a graph")
    p.add_argument("--digraph", action="store_true", help="directed input")
    p.add_argument("--full-report", action="store_true", help="degrees, hull, generator count")

    add("decompose", _cmd_decompose, "rational orbit report of a graded rank s-1 lattice")

    p = sub.add_parser("cb3", help="critical binomials in three variables")
    p.add_argument("mode", choices=["structure", "findhull", "check"])
    p.add_argument("file", help="input file, or - for stdin")
    p.add_argument("--max-iter", type=int, default=DEFAULT_EXPONENT_CAP,
                   help="exponent cap for the critical binomial search")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.set_defaults(handler=_cmd_cb3)

    add("volume", _cmd_volume, "normalized volume of a lattice polytope")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        result = args.handler(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    elapsed_ms = int((time.monotonic() - started) * 1000)
    payload = {"schema": SCHEMA, "command": args.command, "input": args.file}
    payload.update(result)
    payload["elapsed_ms"] = elapsed_ms
    if args.json:
        print(json.dumps(_jsonify(payload), indent=2))
    else:
        print("\n".join(_human_lines(payload)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
