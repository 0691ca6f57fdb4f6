"""Command-line front end.

Subcommands::

    eulerian   print one row of an Eulerian triangle
    verify     check a named identity for every rank up to a bound
    bijection  audit a bijection by exhaustive round trips
    threshold  counting data (and optionally the list) of threshold graphs
    render     draw the path representation of a signed permutation
    poset      lattice/isomorphism/cover/join-irreducibility reports

Exit codes: 0 on success, 1 when a verification or audit fails, 2 on
usage or domain errors.  Output is deterministic for fixed flags; the
``--format`` option switches between a human table, JSON and CSV, and
``--jobs`` fans exhaustive scans out over worker processes (results are
independent of the worker count).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence

from . import barred, pathrep, posets, sgnperm, threshold
from .eulerian import (
    IDENTITY_NAMES,
    eulerian as eulerian_number,
    eulerian_polynomial,
    report_to_json,
    threshold_counts,
    verify_identity,
)

__all__ = ["main", "run"]

_DEFAULT_BUDGET = 10**8

_MIN_N = {
    "alternating": 1,
    "eulBeven": 1,
    "eulBodd": 1,
    "main": 1,
    "stembridge": 2,
    "B_n1": 2,
    "D_n1": 2,
}

# Group whose enumeration each identity's brute-force side needs.
_SCAN_KIND = {
    "alternating": "A",
    "eulBeven": "B",
    "eulBodd": "B",
    "main": None,
    "stembridge": "D",
    "B_n1": "B",
    "D_n1": "D",
}


class _UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _check_budget(elements: int, budget: int, what: str) -> None:
    if elements > budget:
        raise _UsageError(
            f"{what} needs {elements} elements, over the budget of {budget}"
            " (raise --max-elements to allow it)"
        )


# ---------------------------------------------------------------------------
# eulerian


def _cmd_eulerian(args: argparse.Namespace) -> int:
    if args.kind == "D" and args.n < 2:
        raise _UsageError("type D needs --n at least 2")
    if args.method == "bruteforce":
        _check_budget(
            sgnperm.group_order(args.n, args.kind),
            args.max_elements,
            f"brute force over {args.kind}_{args.n}",
        )
    coeffs = eulerian_polynomial(args.n, args.kind, args.method)
    if args.method == "bruteforce":
        # eulerian_polynomial routes each coefficient through the cached
        # histogram, so re-evaluating per k costs nothing extra
        coeffs = tuple(
            eulerian_number(
                args.n, k, args.kind, "bruteforce", jobs=args.jobs,
                max_elements=args.max_elements,
            )
            for k in range(len(coeffs))
        )
    if args.format == "json":
        _emit(json.dumps({
            "kind": args.kind,
            "n": args.n,
            "method": args.method,
            "coefficients": list(coeffs),
        }))
    elif args.format == "csv":
        _emit("k,count")
        for k, value in enumerate(coeffs):
            _emit(f"{k},{value}")
    else:
        _emit(" ".join(str(c) for c in coeffs))
    return 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args: argparse.Namespace) -> int:
    name = args.identity
    lo = _MIN_N[name]
    if args.max_n < lo:
        raise _UsageError(f"identity {name} needs --max-n >= {lo}")
    kind = _SCAN_KIND[name]
    reports = []
    for n in range(lo, args.max_n + 1):
        if kind is not None:
            _check_budget(
                sgnperm.group_order(n, kind),
                args.max_elements,
                f"brute force over {kind}_{n}",
            )
        reports.append(verify_identity(name, n, jobs=args.jobs))
    ok = all(r.holds for r in reports)
    if args.format == "json":
        _emit(json.dumps({
            "identity": name,
            "holds": ok,
            "reports": [json.loads(report_to_json(r)) for r in reports],
        }, indent=2))
    elif args.format == "csv":
        _emit("identity,n,index,lhs,rhs,brute,holds")
        for r in reports:
            for row in r.rows:
                brute = "" if row.brute is None else row.brute
                _emit(
                    f"{name},{r.n},{row.index},{row.lhs},{row.rhs},{brute},"
                    f"{str(row.holds).lower()}"
                )
    else:
        for r in reports:
            status = "holds" if r.holds else "FAILS"
            _emit(f"{name} at n={r.n}: {status} ({len(r.rows)} rows)")
            if not r.holds:
                for row in r.rows:
                    if not row.holds:
                        extra = "" if row.brute is None else f", brute={row.brute}"
                        _emit(
                            f"  index {row.index}: lhs={row.lhs} "
                            f"rhs={row.rhs}{extra}"
                        )
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# bijection audits


def _audit_psi(n: int) -> tuple[int, str | None]:
    checked = 0
    for sbp in barred.enumerate_sbp(n):
        u = barred.psi(sbp)
        back = barred.psi_inverse(u)
        if back != sbp:
            return checked, f"psi round trip broke at {barred.format_sbp(sbp)}"
        if sgnperm.descent_count(u, "B") != barred.descB_formula(sbp):
            return checked, f"descent formula broke at {barred.format_sbp(sbp)}"
        checked += 1
    for u in sgnperm.enumerate_group(n, "B"):
        if barred.psi(barred.psi_inverse(u)) != u:
            return checked, f"psi_inverse round trip broke at {u}"
        checked += 1
    return checked, None


def _audit_theta(n: int) -> tuple[int, str | None]:
    checked = 0
    for lbp in barred.enumerate_lbp(n):
        sbp = barred.theta(lbp)
        s = barred.descent_sum(lbp)
        if s % 2 == 0:
            k, parity = s // 2, "even"
            if barred.descB_formula(sbp) != k:
                return checked, f"theta image off the target set at {lbp}"
        else:
            k, parity = (s - 1) // 2, "odd"
            if barred.positive_descB_formula(sbp) != k:
                return checked, f"theta image off the target set at {lbp}"
        if barred.theta_inverse(sbp, k, parity) != lbp:
            return checked, f"theta round trip broke at {lbp}"
        checked += 1
    return checked, None


def _audit_chi(n: int) -> tuple[int, str | None]:
    if n < 2:
        raise _UsageError("chi needs --n at least 2")
    checked = 0
    images = set()
    for u in sgnperm.enumerate_group(n, "B"):
        if sgnperm.is_smooth(u):
            continue
        x, v = sgnperm.chi(u)
        if sgnperm.chi_inverse(x, v) != u:
            return checked, f"chi round trip broke at {u}"
        if sgnperm.positive_descent_count(v) != sgnperm.descent_count(u, "B") - 1:
            return checked, f"descent shift broke at {u}"
        images.add((x, v))
        checked += 1
    expected = n * sgnperm.group_order(n - 1, "B")
    if len(images) != expected:
        return checked, f"chi image has {len(images)} pairs, expected {expected}"
    return checked, None


def _audit_tgdo(n: int) -> tuple[int, str | None]:
    checked = 0
    images = set()
    for u in sgnperm.enumerate_group(n, "D"):
        pair = threshold.tg_pair(u)
        if threshold.signed_from_tg(pair) != u:
            return checked, f"tgdo round trip broke at {u}"
        images.add(pair)
        checked += 1
    target = set(threshold.enumerate_tg(n))
    if images != target:
        return checked, (
            f"tgdo image has {len(images)} pairs, expected {len(target)}"
        )
    return checked, None


def _audit_bijtgsbps(n: int) -> tuple[int, str | None]:
    checked = 0
    images = set()
    for g in threshold.enumerate_threshold_graphs(n):
        sbp = threshold.sbp_from_threshold(g)
        if threshold.threshold_from_sbp(sbp) != g:
            return checked, f"round trip broke at {threshold.format_graph(g)}"
        images.add(sbp)
        checked += 1
    if len(images) != checked:
        return checked, "the map is not injective on threshold graphs"
    return checked, None


_AUDITS = {
    "psi": (_audit_psi, lambda n: 2 ** (n + 1) * sgnperm.group_order(n, "A")),
    "theta": (_audit_theta, lambda n: 2 ** (n + 1) * sgnperm.group_order(n, "A")),
    "chi": (_audit_chi, lambda n: sgnperm.group_order(n, "B")),
    "tgdo": (_audit_tgdo, lambda n: 2 * sgnperm.group_order(max(n, 1), "D")),
    "bijtgsbps": (_audit_bijtgsbps, lambda n: 2 ** (n * (n - 1) // 2)),
}


def _cmd_bijection(args: argparse.Namespace) -> int:
    audit, cost = _AUDITS[args.check]
    _check_budget(cost(args.n), args.max_elements, f"the {args.check} audit")
    checked, failure = audit(args.n)
    if failure is None:
        _emit(f"{args.check} at n={args.n}: {checked} round trips verified")
        return 0
    _emit(f"{args.check} at n={args.n}: FAILED after {checked} round trips")
    _emit(f"  {failure}")
    return 1


# ---------------------------------------------------------------------------
# threshold


def _cmd_threshold(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise _UsageError("--n must be at least 1")
    show_counts = args.counts or not args.list
    data = threshold_counts(args.n) if show_counts else None
    listing: list[threshold.SimpleGraph] = []
    if args.list:
        _check_budget(
            2 ** (args.n * (args.n - 1) // 2),
            args.max_elements,
            "listing threshold graphs",
        )
        listing = list(threshold.enumerate_threshold_graphs(args.n))
    if args.format == "json":
        payload: dict = {"n": args.n}
        if data is not None:
            payload["total"] = data.total
            payload["by_degree_classes"] = list(data.by_degree_classes)
            payload["by_partition_descents"] = list(data.by_partition_descents)
            payload["unlabeled"] = data.unlabeled
        if args.list:
            payload["graphs"] = [json.loads(threshold.graph_to_json(g)) for g in listing]
        _emit(json.dumps(payload, indent=2))
    elif args.format == "csv":
        _emit("series,index,value")
        if data is not None:
            _emit(f"total,,{data.total}")
            _emit(f"unlabeled,,{data.unlabeled}")
            for i, value in enumerate(data.by_degree_classes, start=1):
                _emit(f"by_degree_classes,{i},{value}")
            for k, value in enumerate(data.by_partition_descents):
                _emit(f"by_partition_descents,{k},{value}")
        for g in listing:
            _emit(f"graph,,{threshold.format_graph(g)}")
    else:
        if data is not None:
            _emit(f"labeled threshold graphs on [{args.n}]: {data.total}")
            _emit(f"unlabeled classes: {data.unlabeled}")
            _emit(
                "by distinct degrees (i=1..n): "
                + " ".join(str(v) for v in data.by_degree_classes)
            )
            _emit(
                "by degree-partition descents (k=0..): "
                + " ".join(str(v) for v in data.by_partition_descents)
            )
        for g in listing:
            _emit(threshold.format_graph(g))
    return 0


# ---------------------------------------------------------------------------
# render


def _cmd_render(args: argparse.Namespace) -> int:
    u = sgnperm.parse_signed(args.perm)
    rep = pathrep.path_representation(u)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as handle:
            handle.write(pathrep.render_svg(rep))
        _emit(f"wrote {args.svg}")
    else:
        _emit(pathrep.render_ascii(rep))
    return 0


# ---------------------------------------------------------------------------
# poset


def _pair_label(pair: threshold.ThresholdPair) -> str:
    edges = ",".join(f"{a}-{b}" for a, b in sorted(pair.edges))
    return f"{sgnperm.format_signed(pair.w)}:{edges or 'empty'}"


def _build_poset(kind: str, n: int, budget: int) -> posets.FinitePoset:
    if kind == "TG":
        _check_budget(2 * sgnperm.group_order(max(n, 1), "D"), budget, "the TG poset")
        return posets.tg_poset(n)
    _check_budget(sgnperm.group_order(n, kind), budget, f"the weak {kind} poset")
    return posets.weak_poset(n, kind)


def _cmd_poset(args: argparse.Namespace) -> int:
    kind, n = args.kind, args.n
    if kind == "D" and n < 2:
        raise _UsageError("type D posets need --n at least 2")
    if args.check == "iso":
        if kind not in ("D", "TG"):
            raise _UsageError(
                "--check iso compares weak D with TG; use --kind D or TG"
            )
        p = _build_poset("D", n, args.max_elements)
        q = _build_poset("TG", n, args.max_elements)
        ok = posets.order_isomorphism_check(p, q, threshold.tg_pair)
        _emit(
            f"tg_pair on weak D_{n} -> TG_{n}: "
            + ("order isomorphism" if ok else "NOT an order isomorphism")
        )
        return 0 if ok else 1

    p = _build_poset(kind, n, args.max_elements)
    label = _pair_label if kind == "TG" else sgnperm.format_signed
    exit_code = 0
    if args.check == "lattice":
        report = p.lattice_check()
        if report.is_lattice:
            _emit(f"{kind} poset at n={n}: lattice ({len(p)} elements)")
        else:
            a, b = report.witness  # type: ignore[misc]
            _emit(
                f"{kind} poset at n={n}: NOT a lattice; "
                f"{report.missing} missing for {label(a)} and {label(b)}"
            )
            exit_code = 1
    elif args.check == "covers":
        pairs = p.covers()
        if kind != "TG":
            # in a weak order the lower covers of u are marked by descents
            counts = p.lower_cover_counts()
            for u, c in counts.items():
                if c != sgnperm.descent_count(u, kind):
                    _emit(f"cover/descent mismatch at {label(u)}")
                    return 1
        _emit(f"{kind} poset at n={n}: {len(pairs)} cover pairs")
        for a, b in pairs:
            _emit(f"  {label(a)} < {label(b)}")
    else:  # joinirr
        count = p.join_irreducible_count()
        _emit(f"{kind} poset at n={n}: {count} join-irreducible elements")
        formula_kind = "D" if kind == "TG" else kind
        # k = 1 is a valid descent count from n = 2 on (n = 1 for type B)
        if n >= (1 if formula_kind == "B" else 2):
            expected = eulerian_number(n, 1, formula_kind)
            _emit(f"Eulerian count with one descent: {expected}")
            if count != expected:
                _emit("MISMATCH between join-irreducibles and the Eulerian count")
                exit_code = 1
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(p.to_dot(label))
        _emit(f"wrote {args.dot}")
    return exit_code


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default="table",
        help="output format (default: table)",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="worker processes for exhaustive scans (default: 1)",
    )
    parser.add_argument(
        "--max-elements",
        type=int,
        default=_DEFAULT_BUDGET,
        help=f"largest enumeration allowed (default: {_DEFAULT_BUDGET})",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedpaths",
        description="Exact combinatorics of signed permutations, lattice "
        "paths and threshold graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eulerian", help="print one Eulerian triangle row")
    p.add_argument("--kind", choices=("A", "B", "D"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--method", choices=("formula", "bruteforce"), default="formula"
    )
    _add_common(p)
    p.set_defaults(func=_cmd_eulerian)

    p = sub.add_parser("verify", help="check a named identity exactly")
    p.add_argument("--identity", choices=IDENTITY_NAMES, required=True)
    p.add_argument("--max-n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bijection", help="audit a bijection by round trips")
    p.add_argument(
        "--check",
        choices=("psi", "theta", "chi", "tgdo", "bijtgsbps"),
        required=True,
    )
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("threshold", help="threshold-graph counting data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--counts", action="store_true", help="print the counts")
    p.add_argument("--list", action="store_true", help="list the graphs")
    _add_common(p)
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("render", help="draw a path representation")
    p.add_argument("--perm", required=True, help='window, e.g. "-2,3,1"')
    p.add_argument("--svg", help="write an SVG file instead of ASCII")
    _add_common(p)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("poset", help="weak-order and threshold-pair posets")
    p.add_argument("--kind", choices=("A", "B", "D", "TG"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--check",
        choices=("lattice", "iso", "covers", "joinirr"),
        required=True,
    )
    p.add_argument("--dot", help="also write the Hasse diagram as DOT")
    _add_common(p)
    p.set_defaults(func=_cmd_poset)

    return parser


def _glue_window_values(argv: Sequence[str]) -> list[str]:
    # windows routinely start with a minus sign ("-2,3,1"), which argparse
    # would mistake for a flag; fold them into --perm=... form
    out: list[str] = []
    it = iter(argv)
    for token in it:
        if token == "--perm":
            value = next(it, None)
            if value is None:
                out.append(token)
            else:
                out.append(f"--perm={value}")
        else:
            out.append(token)
    return out


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` and execute the chosen subcommand; returns the exit code."""
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_glue_window_values(argv))
    except SystemExit as exc:  # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (_UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
