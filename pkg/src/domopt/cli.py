"""Command-line front end: poly, classify, verify, grid, enumerate.

Exit codes: 0 success, 1 claim failure, 2 usage error, 3 input parse
error, 4 resource cap exceeded.  Outputs are deterministic; run manifests
carry a timestamp and wall time unless --deterministic is given.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb
from pathlib import Path

from . import __version__
from .domination import (
    DomPoly,
    OrderCapExceeded,
    delta_plus_one_coefficient,
    dense_template_polynomial,
    domination_polynomial,
    tail_coefficient,
    template_graph,
    universal_vertex_coefficient,
)
from .enumeration import (
    EnumerationBound,
    all_graph_labels,
    canonical_form,
    class_index,
    read_graph6_class,
)
from .graphs import Graph, Graph6ParseError, GraphError, parse_edge_list, parse_graph6
from .optimality import (
    classify_class,
    dense_counterexample,
    least_optimal_counterexample,
    structure_decomposition,
    verify_characterization,
)
from .polynomials import CROSSING, IntPoly, eval_rational, sturm_root_count
from .domination import join_polynomial
from .reliability import reliability_polynomial, verify_reliability_transfer

EXIT_OK = 0
EXIT_CLAIM = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_CAP = 4


def _default_cache_dir() -> str:
    return os.environ.get("DOMOPT_CACHE_DIR", "domopt-cache")


def _sha256_file(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return "sha256:" + h.hexdigest()


def _write_manifest(out_path: Path, command: str, parameters: dict, inputs: dict,
                    outputs: list[str], wall: float, deterministic: bool) -> None:
    manifest = {
        "command": command,
        "parameters": parameters,
        "input_digests": inputs,
        "version": __version__,
        "wall_time_s": None if deterministic else round(wall, 6),
        "outputs": outputs,
        "timestamp": None if deterministic else time.strftime("%Y-%m-%dT%H:%M:%S%z"),
    }
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(json.dumps(manifest, indent=2) + "\n")


def _read_graph_arg(args) -> Graph:
    if args.edge_list:
        text = Path(args.edge_list).read_text()
        return parse_edge_list(text)
    if args.input is None:
        raise GraphError("no graph input given")
    if args.input == "-":
        return parse_graph6(sys.stdin.readline())
    return parse_graph6(args.input)


# -- poly ---------------------------------------------------------------------


def cmd_poly(args) -> int:
    g = _read_graph_arg(args)
    dom = domination_polynomial(g)
    checks = []
    if g.n >= 1:
        delta = g.min_degree()
        tails_ok = all(dom.d[g.n - j] == tail_coefficient(g, j) for j in range(delta + 1))
        checks.append(("tail-binomials", tails_ok))
        checks.append(("min-degree-defect", dom.d[g.n - delta - 1] == delta_plus_one_coefficient(g)))
        checks.append(("universal-count", dom.d[1] == universal_vertex_coefficient(g)))
    if args.json:
        payload = dom.to_json_dict()
        payload["graph6"] = canonical_form(g) if g.n <= 10 else None
        payload["m"] = g.m
        payload["checks"] = {name: ok for name, ok in checks}
        print(json.dumps(payload, indent=2))
    else:
        print(f"n = {g.n}, m = {g.m}")
        print(f"d = {list(dom.d)}")
        print(f"gamma = {dom.gamma}")
        for name, ok in checks:
            print(f"[{'pass' if ok else 'FAIL'}] {name}")
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_CLAIM


# -- enumerate ------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    if args.from_file:
        with open(args.from_file) as fh:
            graphs = read_graph6_class(fh, args.n, args.m)
        labels = [canonical_form(g) for g in graphs]
    else:
        labels = list(class_index(args.n, args.m).members)
    if args.manifest:
        print(json.dumps({"n": args.n, "m": args.m, "count": len(labels), "members": labels}))
    else:
        for lbl in labels:
            print(lbl)
    return EXIT_OK


# -- classify --------------------------------------------------------------------


def _class_file(cache_dir: str, n: int, m: int) -> Path:
    return Path(cache_dir) / "atlas" / str(n) / f"{m}.jsonl"


def _load_class_file(path: Path) -> tuple[list[str], dict[str, DomPoly]]:
    members: list[str] = []
    polys: dict[str, DomPoly] = {}
    n = None
    with open(path) as fh:
        for line in fh:
            obj = json.loads(line)
            if obj["kind"] == "class":
                n = obj["n"]
            elif obj["kind"] == "member":
                members.append(obj["g6"])
                polys[obj["g6"]] = DomPoly(n, tuple(int(s) for s in obj["d"]))
    return members, polys


def cmd_classify(args) -> int:
    t0 = time.perf_counter()
    inputs = {}
    cache_path = _class_file(args.cache_dir, args.n, args.m)
    if args.from_file:
        inputs[args.from_file] = _sha256_file(args.from_file)
        with open(args.from_file) as fh:
            graphs = read_graph6_class(fh, args.n, args.m)
        report = classify_class(args.n, args.m, graphs=graphs, jobs=args.jobs)
        dompolys = [domination_polynomial(g) for g in graphs]
        labels = list(report.members)
    elif cache_path.exists():
        labels, table = _load_class_file(cache_path)
        graphs = [parse_graph6(lbl) for lbl in labels]
        dompolys = [table[lbl] for lbl in labels]
        report = classify_class(args.n, args.m, graphs=graphs, precomputed=dompolys)
    else:
        report = classify_class(args.n, args.m, jobs=args.jobs)
        labels = list(report.members)
        dompolys = [domination_polynomial(parse_graph6(lbl)) for lbl in labels]

    cache_path.parent.mkdir(parents=True, exist_ok=True)
    with open(cache_path, "w") as fh:
        fh.write(json.dumps({"kind": "class", "n": args.n, "m": args.m, "count": len(labels)}) + "\n")
        for lbl, dp in zip(labels, dompolys):
            fh.write(json.dumps({"kind": "member", "g6": lbl, "d": [str(a) for a in dp.d]}) + "\n")
        fh.write(json.dumps({"kind": "report", **report.to_json_dict()}) + "\n")
    _write_manifest(
        cache_path.with_suffix(".manifest.json"),
        "classify",
        {"n": args.n, "m": args.m, "jobs": args.jobs, "from_file": args.from_file},
        inputs,
        [str(cache_path)],
        time.perf_counter() - t0,
        args.deterministic,
    )
    print(json.dumps(report.to_json_dict(), indent=2))
    return EXIT_OK


# -- verify ----------------------------------------------------------------------


def _emit_claims(claims: list[tuple[str, bool, str]], as_json: bool) -> int:
    if as_json:
        print(json.dumps(
            [{"claim": name, "pass": ok, "detail": detail} for name, ok, detail in claims],
            indent=2,
        ))
    else:
        for name, ok, detail in claims:
            print(f"[{'pass' if ok else 'FAIL'}] {name}: {detail}")
        n_ok = sum(1 for _, ok, _ in claims if ok)
        print(f"{n_ok}/{len(claims)} claims hold")
    return EXIT_OK if all(ok for _, ok, _ in claims) else EXIT_CLAIM


def _verify_characterization(args) -> int:
    rows = verify_characterization(args.n, jobs=args.jobs)
    claims = []
    for row in rows:
        name = f"characterization n={args.n} m={row['m']}"
        if row["predicted"] is None:
            detail = "no optimal graph" if row["agree"] else (
                f"expected nonexistence, found optimal {row['optimal_members']}"
            )
        else:
            detail = (
                f"unique optimal {row['predicted']}" if row["agree"]
                else f"expected {row['predicted']}, exhaustive gave "
                     f"exists={row['optimal_exists']} members={row['optimal_members']}"
            )
        claims.append((name, row["agree"], detail))
    return _emit_claims(claims, args.json)


def _verify_dense(args) -> int:
    n, k = args.n, args.k
    wit = dense_counterexample(n, k)
    claims = []
    from .optimality import _DENSE_SMALL_TEMPLATE

    template = _DENSE_SMALL_TEMPLATE[k]
    counted = domination_polynomial(template_graph(n, template))
    closed = dense_template_polynomial(n, template)
    claims.append((
        f"counted D(K_{n} minus {template}) equals closed form",
        counted.d == closed.d,
        f"d = {list(counted.d)}",
    ))
    counted_m = domination_polynomial(template_graph(n, "matching", k))
    closed_m = dense_template_polynomial(n, "matching", k)
    claims.append((
        f"counted D(K_{n} minus {k}-matching) equals closed form",
        counted_m.d == closed_m.d,
        f"d = {list(counted_m.d)}",
    ))
    claims.append((
        "max-universal graph wins the near-zero order",
        wit.small_x_order > 0,
        f"lex order {wit.small_x_order}",
    ))
    claims.append((
        "matching removal wins the near-infinity order",
        wit.large_x_order < 0,
        f"lex order {wit.large_x_order}",
    ))
    claims.append((
        f"no optimal graph in class n={n} m={comb(n, 2) - k}",
        wit.certifies_nonexistence,
        f"witness pair {canonical_form(wit.small_winner)} / {canonical_form(wit.large_winner)}",
    ))
    if k == 4:
        alt = domination_polynomial(template_graph(n, "paw"))
        ge = all(a >= b for a, b in zip(counted.d, alt.d))
        claims.append((
            "4-cycle removal dominates triangle-plus-pendant removal coefficientwise",
            ge,
            f"d(C4 removal) = {list(counted.d)}, d(paw removal) = {list(alt.d)}",
        ))
    return _emit_claims(claims, args.json)


def _verify_least_optimal(args) -> int:
    n, k = args.n, args.k
    wit = least_optimal_counterexample(n, k)
    claims = []
    counted = wit.matching_poly
    closed = dense_template_polynomial(n, "matching", k)
    claims.append((
        f"counted D(K_{n} minus {k}-matching) equals closed form",
        counted.d == closed.d,
        f"d = {list(counted.d)}",
    ))
    claims.append((
        "matching and path removals cross on (0, inf)",
        wit.verdict.relation == CROSSING,
        f"witness intervals {[[str(a), str(b)] for a, b in wit.verdict.witnesses]}",
    ))
    threshold = Fraction(k - 1, k - 2)
    diff = wit.difference
    one_change = (
        not diff.is_zero
        and sturm_root_count(diff, (0, None)) == 1
        and diff(threshold) == 0
    )
    claims.append((
        f"unique positive sign change at x = {threshold}",
        one_change,
        f"difference = {list(diff.coeffs)}, value at {threshold} is {eval_rational(diff, threshold)}",
    ))
    claims.append((
        f"no least-optimal graph in class n={n} m={comb(n, 2) - k}",
        wit.certifies_nonexistence,
        wit.note or "crossing certificate attached",
    ))
    return _emit_claims(claims, args.json)


def _verify_lemmas(args) -> int:
    n = args.n
    labels = all_graph_labels(n)
    tails = defect = universal = joins = 0
    bad: dict[str, list[str]] = {"tails": [], "defect": [], "universal": [], "join": []}
    for lbl in labels:
        g = parse_graph6(lbl)
        dom = domination_polynomial(g)
        delta = g.min_degree()
        if all(dom.d[n - j] == tail_coefficient(g, j) for j in range(delta + 1)):
            tails += 1
        else:
            bad["tails"].append(lbl)
        if dom.d[n - delta - 1] == delta_plus_one_coefficient(g):
            defect += 1
        else:
            bad["defect"].append(lbl)
        if dom.d[1] == universal_vertex_coefficient(g):
            universal += 1
        else:
            bad["universal"].append(lbl)
        r, rest = structure_decomposition(g)
        if r >= 1:
            expected = join_polynomial(r, domination_polynomial(rest))
            if expected.d == dom.d:
                joins += 1
            else:
                bad["join"].append(lbl)
        else:
            joins += 1
    total = len(labels)
    claims = [
        (f"tail binomial coefficients on all {total} graphs of order {n}",
         not bad["tails"], f"{tails}/{total} pass" + (f", failures {bad['tails']}" if bad["tails"] else "")),
        (f"minimum-degree defect coefficient on all {total} graphs",
         not bad["defect"], f"{defect}/{total} pass" + (f", failures {bad['defect']}" if bad["defect"] else "")),
        (f"universal-vertex count coefficient on all {total} graphs",
         not bad["universal"], f"{universal}/{total} pass" + (f", failures {bad['universal']}" if bad["universal"] else "")),
        (f"join decomposition formula on all {total} graphs",
         not bad["join"], f"{joins}/{total} pass" + (f", failures {bad['join']}" if bad["join"] else "")),
    ]
    return _emit_claims(claims, args.json)


def _verify_reliability(args) -> int:
    rows = verify_reliability_transfer(args.n)
    claims = []
    for row in rows:
        ok = row["agree"]
        detail = (
            f"optimal transfer: exists={row['rel_optimal_exists']} members={row['rel_optimal_members']}"
            if ok
            else f"dom side {row['dom_optimal_members']} vs reliability side {row['rel_optimal_members']}"
        )
        claims.append((f"reliability transfer n={args.n} m={row['m']}", ok, detail))
    return _emit_claims(claims, args.json)


def cmd_verify(args) -> int:
    return args.verify_func(args)


# -- grid -------------------------------------------------------------------------


def _render(value: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def cmd_grid(args) -> int:
    if args.steps < 2:
        print("grid needs at least 2 steps", file=sys.stderr)
        return EXIT_USAGE
    graphs = []
    for item in args.graphs:
        if os.path.exists(item):
            text = Path(item).read_text()
            if ";" in text:
                graphs.append(parse_edge_list(text))
            else:
                graphs.extend(parse_graph6(line) for line in text.splitlines() if line.strip())
        else:
            graphs.append(parse_graph6(item))
    if not graphs:
        print("no input graphs", file=sys.stderr)
        return EXIT_USAGE
    lo, hi = Fraction(args.lo), Fraction(args.hi)
    if args.var == "p" and not (0 <= lo <= hi <= 1):
        print("p-range must lie inside [0, 1]", file=sys.stderr)
        return EXIT_USAGE
    polys = []
    names = []
    for g in graphs:
        dom = domination_polynomial(g)
        names.append(canonical_form(g) if g.n <= 10 else f"n{g.n}m{g.m}")
        polys.append(dom.poly if args.var == "x" else reliability_polynomial(dom).poly)
    print(",".join([args.var] + names))
    for i in range(args.steps):
        point = lo + (hi - lo) * i / (args.steps - 1)
        row = [_render(point, args.digits)]
        row += [_render(eval_rational(p, point), args.digits) for p in polys]
        print(",".join(row))
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domopt",
        description="Exact domination polynomials: counting, classification, verification.",
    )
    parser.add_argument("--version", action="version", version=f"domopt {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="domination polynomial of one graph with coefficient checks")
    p_poly.add_argument("input", nargs="?", help="graph6 line, or - for stdin")
    p_poly.add_argument("--edge-list", help="file containing 'n; u v; u v; ...'")
    p_poly.add_argument("--json", action="store_true")
    p_poly.set_defaults(func=cmd_poly)

    p_enum = sub.add_parser("enumerate", help="one graph6 line per isomorphism class of G(n,m)")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("m", type=int)
    p_enum.add_argument("--from-file", help="deduplicate an external graph6 file instead of generating")
    p_enum.add_argument("--manifest", action="store_true", help="print a JSON class manifest")
    p_enum.set_defaults(func=cmd_enumerate)

    p_cls = sub.add_parser("classify", help="optimal/least-optimal classification of G(n,m)")
    p_cls.add_argument("n", type=int)
    p_cls.add_argument("m", type=int)
    p_cls.add_argument("--from-file", help="read the class from a graph6 file")
    p_cls.add_argument("--jobs", type=int, default=1)
    p_cls.add_argument("--cache-dir", default=_default_cache_dir())
    p_cls.add_argument("--deterministic", action="store_true",
                       help="omit timestamp and wall time from the manifest")
    p_cls.set_defaults(func=cmd_classify)

    p_ver = sub.add_parser("verify", help="mechanical checks of the classification claims")
    ver_sub = p_ver.add_subparsers(dest="target", required=True)

    v_char = ver_sub.add_parser("characterization")
    v_char.add_argument("n", type=int)
    v_char.add_argument("--jobs", type=int, default=1)
    v_char.add_argument("--json", action="store_true")
    v_char.set_defaults(func=cmd_verify, verify_func=_verify_characterization)

    v_dense = ver_sub.add_parser("dense")
    v_dense.add_argument("n", type=int)
    v_dense.add_argument("k", type=int)
    v_dense.add_argument("--json", action="store_true")
    v_dense.set_defaults(func=cmd_verify, verify_func=_verify_dense)

    v_least = ver_sub.add_parser("least-optimal")
    v_least.add_argument("n", type=int)
    v_least.add_argument("k", type=int)
    v_least.add_argument("--json", action="store_true")
    v_least.set_defaults(func=cmd_verify, verify_func=_verify_least_optimal)

    v_lem = ver_sub.add_parser("lemmas")
    v_lem.add_argument("n", type=int)
    v_lem.add_argument("--json", action="store_true")
    v_lem.set_defaults(func=cmd_verify, verify_func=_verify_lemmas)

    v_rel = ver_sub.add_parser("reliability")
    v_rel.add_argument("n", type=int)
    v_rel.add_argument("--json", action="store_true")
    v_rel.set_defaults(func=cmd_verify, verify_func=_verify_reliability)

    p_grid = sub.add_parser("grid", help="CSV of exact curve values rendered to fixed precision")
    p_grid.add_argument("graphs", nargs="+", help="graph6 strings or files (graph6 lines / edge list)")
    p_grid.add_argument("--var", choices=("x", "p"), default="x")
    p_grid.add_argument("--lo", default="0")
    p_grid.add_argument("--hi", default="1")
    p_grid.add_argument("--steps", type=int, default=11)
    p_grid.add_argument("--digits", type=int, default=12)
    p_grid.set_defaults(func=cmd_grid)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Graph6ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OrderCapExceeded, EnumerationBound) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GraphError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
