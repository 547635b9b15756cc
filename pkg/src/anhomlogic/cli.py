"""Command-line front end.

Every subcommand takes an optional problem file (``-`` for stdin); flags such
as ``--n`` and ``--precluded`` fill in or override its fields.  Reports are
plain text, or JSON with ``--json``.  Exit codes: 0 success, 1 a checked
property failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import poset
from . import preclusion as pc
from . import projections as pj
from . import truth as tf
from .coevent import from_table, interpolate, low_order_values, to_table
from .errors import AnhomError, ParseError
from .events import Event, OutcomeSpace
from .gf2 import rank
from .suites import SUITES, run_suite
from .textio import (
    ProblemSpec,
    format_coevent,
    format_table,
    parse_coevent,
    parse_events_list,
    parse_family,
    parse_problem,
    parse_table,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_RANDOM_BUDGET = 200


@dataclass
class Report:
    data: dict
    lines: list[str] = field(default_factory=list)
    status: int = EXIT_OK


def _bits(text: str, count: int, what: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    if len(parts) != count or any(p not in ("0", "1") for p in parts):
        raise ParseError(f"{what} needs {count} comma-separated 0/1 values, got {text!r}")
    return [int(p) for p in parts]


def load_problem(args, required: bool = True) -> ProblemSpec | None:
    """Combine the problem file (or stdin) with command-line overrides."""
    spec = None
    if args.problem is not None:
        text = sys.stdin.read() if args.problem == "-" else open(args.problem, encoding="utf-8").read()
        spec = parse_problem(text)
    elif args.n is None and required:
        spec = parse_problem(sys.stdin.read())
    if args.n is not None:
        if spec is not None and spec.n != args.n:
            raise ParseError(f"--n {args.n} disagrees with n = {spec.n} in the problem file")
        spec = spec or parse_problem(f"n = {args.n}")
    if spec is None:
        return None
    space = spec.space
    if getattr(args, "precluded", None) is not None:
        spec.precluded = parse_family(args.precluded, space)
    if getattr(args, "query", None) is not None:
        spec.query_events = parse_events_list(args.query, space)
    return spec


def _coevent_lines(label: str, sub: pc.CoeventSubspace) -> list[str]:
    out = [f"{label} subspace: dim {sub.dim}"]
    for phi in sub.basis:
        out.append(f"  {format_coevent(phi)}" + ("   (unital)" if phi.is_unital() else ""))
    return out


# -- subcommands -----------------------------------------------------------------


def cmd_classify(args) -> Report:
    spec = load_problem(args)
    space = spec.space
    if args.table is not None:
        t = parse_table(args.table, space)
    elif args.coevent is not None:
        t = to_table(parse_coevent(args.coevent, space))
    else:
        raise ParseError("classify needs --table or --coevent")
    rep = tf.classify(t)
    data = {"table": format_table(t), **rep.to_dict()}
    lines = [f"table: {format_table(t)}"]
    lines += [f"{k}: {'yes' if v else 'no'}" for k, v in rep.to_dict().items()]
    witnesses = {
        "grade1_violation": tf.grade1_violation(t),
        "multiplicative_violation": tf.multiplicative_violation(t),
        "grade2_violation": tf.grade2_violation(t),
    }
    for name, w in witnesses.items():
        if w is not None:
            shown = [str(Event(space, m)) for m in w]
            data[name] = shown
            lines.append(f"{name}: {', '.join(shown)}")
    if rep.grade2_additive:
        phi = from_table(t)
        data["coevent"] = format_coevent(phi)
        lines.append(f"coevent: {format_coevent(phi)}")
    if rep.grade1_additive and not t.is_zero():
        outs = tf.decompose_additive(t)
        data["additive_decomposition"] = outs
        lines.append("sum of containment maps: " + " + ".join(f"w{i}*" for i in outs))
    if rep.multiplicative and not t.is_zero():
        b = tf.decompose_multiplicative(t)
        data["multiplicative_decomposition"] = str(b)
        lines.append(f"product of containment maps over {b}")
    return Report(data, lines)


def cmd_interpolate(args) -> Report:
    spec = load_problem(args)
    space = spec.space
    if args.table is not None:
        singles, doubles = low_order_values(parse_table(args.table, space))
    else:
        if args.singles is None:
            raise ParseError("interpolate needs --table or --singles (and --doubles)")
        pairs = space.n * (space.n - 1) // 2
        singles = _bits(args.singles, space.n, "--singles")
        doubles = _bits(args.doubles or ",".join("0" * pairs), pairs, "--doubles")
    phi = interpolate(space, singles, doubles)
    data = {
        "n": space.n,
        "singles": singles,
        "doubles": doubles,
        "coevent": format_coevent(phi),
        "coefficients": phi.vector.to_list(),
        "unital": phi.is_unital(),
    }
    lines = [
        f"coevent: {format_coevent(phi)}",
        "coefficients: " + "".join(str(b) for b in phi.vector.to_list()),
        f"unital: {'yes' if phi.is_unital() else 'no'}",
    ]
    return Report(data, lines)


def _family(args, spec: ProblemSpec) -> pc.PrecludedFamily:
    fam = spec.precluded or pc.PrecludedFamily(spec.space)
    if args.close_disjoint_unions:
        fam = fam.closed_under_disjoint_unions()
    return fam


def cmd_preclusion(args) -> Report:
    spec = load_problem(args)
    fam = _family(args, spec)
    obs = pj.MasterObservable(spec.space)
    pcv, pcg = pc.preclusive_basis(fam), pc.precluding_basis(fam, obs)
    data = {
        "n": spec.n,
        "precluded": str(fam),
        "union": str(fam.union),
        "preclusive": [format_coevent(p) for p in pcv.basis],
        "precluding": [format_coevent(p) for p in pcg.basis],
    }
    lines = [f"precluded: {fam}", f"union: {fam.union}"]
    lines += _coevent_lines("preclusive", pcv)
    lines += _coevent_lines("precluding", pcg)
    status = EXIT_OK
    if spec.n <= pc.MAX_DUALITY_N:
        dual = pc.duality_report(fam, obs)
        data["duality"] = dual.to_dict()
        lines.append(f"duality checks: {'pass' if dual.passed else 'FAIL'} "
                     f"({sum(dual.checks.values())} checks)")
        lines += [f"  {f}" for f in dual.failures]
        if dual.preclusive_inside_union:
            lines.append("preclusive witness although B is inside the union: "
                         + " ".join(str(b) for b in dual.preclusive_inside_union))
        if dual.precluding_unreachable:
            lines.append("outside the union but no precluding witness: "
                         + " ".join(str(b) for b in dual.precluding_unreachable))
        status = EXIT_OK if dual.passed else EXIT_FAIL
    return Report(data, lines, status)


def cmd_occurs(args) -> Report:
    spec = load_problem(args)
    fam = _family(args, spec)
    if not spec.query_events:
        raise ParseError("occurs needs query events (--query or 'query =' in the problem)")
    modes = [args.mode] if args.mode else ["preclusive", "precluding"]
    results, lines = [], [f"precluded: {fam}"]
    for b in spec.query_events:
        for mode in modes:
            occ = pc.occurrence_query(fam, b, mode)
            witness = format_coevent(occ.witness) if occ.witness is not None else None
            results.append({"event": str(b), "mode": mode, "exists": occ.exists, "witness": witness})
            tail = f" witness {witness}" if witness else ""
            lines.append(f"{b} {mode}: {'occurs' if occ.exists else 'cannot occur'}{tail}")
    return Report({"precluded": str(fam), "queries": results}, lines)


def cmd_master(args) -> Report:
    spec = load_problem(args)
    space = spec.space
    obs = pj.MasterObservable(space)
    events = spec.query_events or (list(space.events()) if space.n <= 3 else list(map(space.singleton, space.outcomes())))
    phi = parse_coevent(args.coevent, space) if args.coevent is not None else None
    entries, lines = [], []
    for a in events:
        p = obs(a)
        entry = {"event": str(a), "matrix": p.matrix.to_lists(), "rank": _rank(p)}
        lines.append(f"P({a}):  rank {entry['rank']}")
        lines += [f"  {row}" for row in str(p.matrix).splitlines()]
        if phi is not None:
            image = p @ phi
            entry["applied"] = format_coevent(image)
            lines.append(f"  P({a}) applied to {format_coevent(phi)} = {format_coevent(image)}")
        entries.append(entry)
    data = {"n": space.n, "projections": entries}
    if spec.random_variable is not None:
        f = pj.RandomVariable(space, tuple(spec.random_variable))
        spectrum = []
        for v in sorted(set(f.values)):
            p = pj.observable(obs, f, {v})
            pre = f.preimage({v})
            spectrum.append({"value": v, "preimage": str(pre), "matrix": p.matrix.to_lists()})
            lines.append(f"P^f({{{v:g}}}) = P({pre}):  rank {_rank(p)}")
        data["observable"] = spectrum
    return Report(data, lines)


def _rank(p: pj.Projection) -> int:
    return rank(p.matrix)


def cmd_verify(args) -> Report:
    n = args.n
    if args.problem is not None:
        n = load_problem(args).n
    run = run_suite(args.suite, n if n is not None else 3)
    return Report(run.to_dict(), run.lines(), run.exit_status)


def cmd_lattice(args) -> Report:
    n = args.n
    if args.problem is not None:
        n = load_problem(args).n
    space = OutcomeSpace(n if n is not None else 2)
    budget = args.budget
    if args.mode == "random" and budget is None:
        budget = DEFAULT_RANDOM_BUDGET
    rep = poset.lattice_search(space, args.mode, budget=budget, seed=args.seed)
    lines = [
        f"mode: {rep.mode}, D={rep.dim}, {rep.universe_size} projections",
        f"examined {rep.examined} pairs: {rep.with_meet} with meet, {rep.without_meet} without",
        f"verdict: {rep.verdict}",
        f"internally consistent: {'yes' if rep.consistent else 'NO'}",
    ]
    if rep.sampled_verifications:
        lines.append(f"meets verified on a sample of lower bounds: {rep.sampled_verifications}")
    for p, q in rep.counterexamples[:3]:
        lines.append("no meet: P=" + "/".join(str(p).splitlines()) + " Q=" + "/".join(str(q).splitlines()))
    lines += rep.inconsistencies
    return Report(rep.to_dict(), lines, EXIT_OK if rep.consistent else EXIT_FAIL)


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="anhomlogic", description="Grade-2 coevent toolkit over GF(2).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, precluded: bool = False, query: bool = False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("problem", nargs="?", help="problem file, or - for stdin")
        p.add_argument("--n", type=int, help="number of outcomes")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        if precluded:
            p.add_argument("--precluded", help="precluded events, e.g. '{1,2};{2,3}'")
            p.add_argument("--close-disjoint-unions", action="store_true",
                           help="add unions of disjoint precluded events")
        if query:
            p.add_argument("--query", help="query events, e.g. '{1};{1,2}'")
        p.set_defaults(func=func)
        return p

    p = add("classify", cmd_classify, "classify a truth table")
    p.add_argument("--table", help="events where the table is 1, e.g. '[{1},{1,2}]'")
    p.add_argument("--coevent", help="classify the table of this coevent")

    p = add("interpolate", cmd_interpolate, "coevent from singleton and doubleton values")
    p.add_argument("--singles", help="phi({i}) for i = 1..n, e.g. '1,0,1'")
    p.add_argument("--doubles", help="phi({i,j}) for i < j in lexicographic order")
    p.add_argument("--table", help="take the low-order values from this table")

    add("preclusion", cmd_preclusion, "preclusive and precluding subspaces", precluded=True)

    p = add("occurs", cmd_occurs, "can a query event occur", precluded=True, query=True)
    p.add_argument("--mode", choices=["preclusive", "precluding"], help="default: both")

    p = add("master", cmd_master, "master observable projections", query=True)
    p.add_argument("--coevent", help="apply each projection to this coevent")

    p = add("verify", cmd_verify, "run exhaustive verification suites")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")

    p = add("lattice-search", cmd_lattice, "search for projection pairs without a meet")
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--budget", type=int, help="pairs to examine (random mode needs one)")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        report = args.func(args)
    except (AnhomError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps({**report.data, "exit_status": report.status}, indent=2, default=str))
    else:
        print("\n".join(report.lines))
    return report.status


if __name__ == "__main__":
    sys.exit(main())
