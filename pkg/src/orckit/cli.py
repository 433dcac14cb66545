"""Command-line front end: generate graphs, compute curvature profiles,
reconstruct idleness functions, and run verification suites.

Exit codes: 0 success or all suites passed, 1 verification failure,
2 usage or input parse error. All machine output is deterministic for
identical inputs and flags; rationals are emitted as reduced "p/q"
strings, never floats. RICCI_THREADS > 1 fans per-edge curvature work out
to worker processes; output order stays canonical either way.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from . import curvature, families, verify
from .formats import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graphs import Graph


def rational_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _parse_alpha(text: str) -> Fraction:
    a = Fraction(text)
    if not (0 <= a <= 1):
        raise ValueError(f"alpha {text} outside [0, 1]")
    return a


_FAMILIES = {
    "complete": ("n",),
    "cycle": ("n",),
    "path": ("n",),
    "star": ("n",),
    "complete-bipartite": ("m", "n"),
    "hypercube": ("n",),
    "cocktail-party": ("n",),
    "near-cocktail": ("n",),
    "petersen": (),
    "dodecahedral": (),
    "icosidodecahedron": (),
    "bi": ("n",),
    "torus": ("n", "m"),
    "twisted-torus": ("n", "m", "l"),
    "klein-bottle": ("n", "m"),
    "random-regular": ("n", "d", "seed"),
}


def _build_family(args: argparse.Namespace) -> Graph:
    name = args.family
    if name not in _FAMILIES:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(sorted(_FAMILIES))}")
    need = _FAMILIES[name]
    params = {}
    for p in need:
        value = getattr(args, p)
        if value is None:
            raise ValueError(f"family {name!r} requires --{p}")
        params[p] = value
    builders = {
        "complete": lambda: families.complete(params["n"]),
        "cycle": lambda: families.cycle(params["n"]),
        "path": lambda: families.path(params["n"]),
        "star": lambda: families.star(params["n"]),
        "complete-bipartite": lambda: families.complete_bipartite(params["m"], params["n"]),
        "hypercube": lambda: families.hypercube(params["n"]),
        "cocktail-party": lambda: families.cocktail_party(params["n"]),
        "near-cocktail": lambda: families.near_cocktail(params["n"]),
        "petersen": families.petersen,
        "dodecahedral": families.dodecahedral,
        "icosidodecahedron": families.icosidodecahedron,
        "bi": lambda: families.bi_antiprism(params["n"]),
        "torus": lambda: families.torus_grid(params["n"], params["m"]),
        "twisted-torus": lambda: families.twisted_torus(params["n"], params["m"], params["l"]),
        "klein-bottle": lambda: families.klein_bottle(params["n"], params["m"]),
        "random-regular": lambda: families.random_regular(params["n"], params["d"], params["seed"]),
    }
    return builders[name]()


def _looks_like_graph6(text: str) -> bool:
    try:
        parse_graph6(text)
        return True
    except ValueError:
        return False


def read_graph(path: str, input_format: str = "auto") -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if input_format == "g6":
        return parse_graph6(text)
    if input_format == "edgelist":
        return parse_edge_list(text)
    if path.endswith(".g6"):
        return parse_graph6(text)
    stripped = text.lstrip()
    if stripped and 63 <= ord(stripped[0]) <= 126 and _looks_like_graph6(text):
        return parse_graph6(text)
    return parse_edge_list(text)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record_row(g: Graph, edge: tuple[int, int], alphas: list[Fraction]) -> dict:
    x, y = edge
    rec = curvature.edge_record(g, x, y)
    row = {
        "u": rec.x,
        "v": rec.y,
        "du": rec.dx,
        "dv": rec.dy,
        "nxy": rec.nxy,
        "kappa0": rational_str(rec.kappa0),
        "kappaLLY": rational_str(rec.kappa_lly),
        "gap_c": rec.gap_c,
        "supsup": rec.supsup,
        "bone_idle": rec.bone_idle,
    }
    if alphas:
        row["kappa_alpha"] = {str(a): rational_str(curvature.kappa_alpha(g, x, y, a))
                              for a in alphas}
    return row


def _worker_record(payload) -> dict:
    return _record_row(*payload)


def _profile_rows(g: Graph, alphas: list[Fraction]) -> list[dict]:
    edges = g.edges()
    workers = int(os.environ.get("RICCI_THREADS", "1") or "1")
    if workers > 1 and len(edges) > 1:
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(workers) as pool:
            return pool.map(_worker_record, [(g, e, alphas) for e in edges])
    return [_record_row(g, e, alphas) for e in edges]


def _rows_to_csv(rows: list[dict], alphas: list[Fraction], decimals: Optional[int]) -> str:
    columns = ["u", "v", "du", "dv", "nxy", "kappa0", "kappaLLY", "gap_c", "supsup", "bone_idle"]
    columns += [f"kappa_alpha[{a}]" for a in alphas]
    if decimals is not None:
        columns += ["kappa0_decimal", "kappaLLY_decimal"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        out = [row["u"], row["v"], row["du"], row["dv"], row["nxy"],
               row["kappa0"], row["kappaLLY"],
               "" if row["gap_c"] is None else row["gap_c"],
               "" if row["supsup"] is None else row["supsup"],
               str(row["bone_idle"]).lower()]
        out += [row["kappa_alpha"][str(a)] for a in alphas]
        if decimals is not None:
            out.append(f"{_as_float(row['kappa0']):.{decimals}f}")
            out.append(f"{_as_float(row['kappaLLY']):.{decimals}f}")
        writer.writerow(out)
    return buf.getvalue()


def _as_float(pq: str) -> float:
    num, den = pq.split("/")
    return int(num) / int(den)


def _cmd_gen(args: argparse.Namespace) -> int:
    g = _build_family(args)
    if args.format == "edgelist":
        text = write_edge_list(g)
    else:
        text = write_graph6(g) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_curvature(args: argparse.Namespace) -> int:
    g = read_graph(args.input, args.input_format)
    alphas = [_parse_alpha(a) for a in args.alpha.split(",")] if args.alpha else []
    rows = _profile_rows(g, alphas)
    if args.format == "csv":
        _emit(_rows_to_csv(rows, alphas, args.decimals), args.out)
    else:
        if args.decimals is not None:
            for row in rows:
                row["kappa0_decimal"] = f"{_as_float(row['kappa0']):.{args.decimals}f}"
                row["kappaLLY_decimal"] = f"{_as_float(row['kappaLLY']):.{args.decimals}f}"
        _emit(json.dumps(rows, indent=2) + "\n", args.out)
    return 0


def _cmd_idleness(args: argparse.Namespace) -> int:
    g = read_graph(args.input, args.input_format)
    try:
        u, v = (int(part) for part in args.edge.split(","))
    except ValueError:
        raise ValueError(f"--edge expects 'u,v', got {args.edge!r}") from None
    fn = curvature.idleness_function(g, u, v)
    lines = ["alpha,kappa_alpha,alpha_decimal,kappa_alpha_decimal"]
    for a, val in zip(fn.breakpoints, fn.values):
        lines.append(f"{a},{rational_str(val)},{float(a):.6f},{float(val):.6f}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


_SUITES = ("main-theorem", "ric-one", "family-values", "bone-idle-families",
           "no-cubic-bone-idle", "girth5", "product-formula", "edge-properties")


def _run_suite(name: str, args: argparse.Namespace) -> verify.VerificationReport:
    if name == "main-theorem":
        return verify.check_main_theorem(args.nmax)
    if name == "ric-one":
        return verify.check_ric_one_classification()
    if name == "family-values":
        return verify.check_family_values()
    if name == "bone-idle-families":
        return verify.check_bone_idle_families()
    if name == "no-cubic-bone-idle":
        return verify.check_no_cubic_bone_idle(args.seed, args.trials)
    if name == "girth5":
        return verify.check_girth5_bone_idle()
    if name == "product-formula":
        return verify.check_product_formula()
    if name == "edge-properties":
        return verify.check_edge_properties(verify.default_corpus(args.seed))
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(_SUITES)} or 'all'")


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite != "all" and args.suite not in _SUITES:
        raise ValueError(f"unknown suite {args.suite!r}; choose from {', '.join(_SUITES)} or 'all'")
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    reports = [_run_suite(name, args) for name in names]
    if args.rf72:
        reports.append(verify.check_rf72(read_graph(args.rf72, "auto")))
    for report in reports:
        print(report.summary(), file=sys.stderr)
    payload = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    _emit(payload, args.out)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orckit",
                                     description="Exact edge curvature on finite simple graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named family graph")
    gen.add_argument("--family", required=True)
    gen.add_argument("--n", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--l", type=int)
    gen.add_argument("--d", type=int)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    gen.add_argument("--out")
    gen.set_defaults(func=_cmd_gen)

    curv = sub.add_parser("curvature", help="per-edge curvature table")
    curv.add_argument("input")
    curv.add_argument("--input-format", choices=("auto", "g6", "edgelist"), default="auto")
    curv.add_argument("--alpha", help="comma-separated idleness values, e.g. 0,1/3")
    curv.add_argument("--format", choices=("json", "csv"), default="json")
    curv.add_argument("--decimals", type=int)
    curv.add_argument("--out")
    curv.set_defaults(func=_cmd_curvature)

    idle = sub.add_parser("idleness", help="breakpoints of the idleness function of one edge")
    idle.add_argument("input")
    idle.add_argument("--input-format", choices=("auto", "g6", "edgelist"), default="auto")
    idle.add_argument("--edge", required=True, help="edge as 'u,v'")
    idle.add_argument("--out")
    idle.set_defaults(func=_cmd_idleness)

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("--suite", default="all")
    ver.add_argument("--nmax", type=int, default=5)
    ver.add_argument("--seed", type=int, default=2024)
    ver.add_argument("--trials", type=int, default=15)
    ver.add_argument("--rf72", help="optional graph file checked for the 5-regular flat values")
    ver.add_argument("--out")
    ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, curvature.ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
