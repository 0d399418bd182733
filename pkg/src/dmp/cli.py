"""Command-line front end: solve, operate, construct, verify, oracle-check.

Exit codes: 0 success, 1 invalid input or flags, 2 verification mismatch or
bound violation, 3 solver budget exceeded.  The env var DMP_NODE_BUDGET
overrides the solver's node budget.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import bounds, constructions, graph as gr, operations as ops
from .solver import BudgetExceededError, SearchLimits, mp_exact, mp_oracle


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 on bad flags, not argparse's 2
        raise CliError(message)


def _limits() -> SearchLimits:
    raw = os.environ.get("DMP_NODE_BUDGET")
    if raw is None:
        return SearchLimits()
    try:
        return SearchLimits(node_budget=int(raw))
    except ValueError:
        raise CliError(f"DMP_NODE_BUDGET must be an integer, got {raw!r}") from None


def _read_graph(path: str, fmt: str) -> gr.Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    if fmt == "edgelist":
        return gr.parse_edge_list_text(text)
    if fmt == "json":
        return gr.parse_json_text(text)
    return gr.parse_graph_text(text)


def _write_graph(g: gr.Graph, path: str, as_json: bool) -> None:
    text = gr.to_json_text(g) + "\n" if as_json else gr.to_edge_list_text(g)
    Path(path).write_text(text)


def _cmd_mp(args) -> int:
    g = _read_graph(args.input, args.format)
    res = mp_exact(g, _limits())
    print(f"mp={res.value}")
    if args.witness:
        print("witness=" + ",".join(str(v) for v in res.witness.vertices))
        print(f"direction={res.witness.direction}")
    return 0


def _parse_ids(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in raw.split(","))
    except ValueError:
        raise CliError(f"expected comma-separated integers, got {raw!r}") from None


def _op_theorem(op: str, g: gr.Graph, target, partner) -> tuple[str | None, str | None]:
    """Most specific applicable theorem for the operation, or a reason why none."""
    if op == "add-edge":
        return "edge_add", None
    if op == "delete-edge":
        return "edge_delete", None
    if op == "subdivide":
        return "subdivision", None
    if op == "contract":
        if gr.is_triangle_free(g):
            return "contraction_triangle_free", None
        return None, "graph not triangle-free"
    if op == "add-vertex":
        if gr.is_tree(g) and len(target) == 1:
            return "tree_leaf_add", None
        return "vertex_add_general", None
    if op == "delete-vertex":
        if gr.is_tree(g) and g.degree(target) == 1 and g.n >= 2:
            return "tree_leaf_delete", None
        return "vertex_delete_general", None
    if op == "cartesian-product":
        if gr.is_connected(g) and gr.is_connected(partner):
            return "cartesian_product", None
        return None, "operands not both connected"
    return "join", None


def _cmd_op(args) -> int:
    g = _read_graph(args.input, args.format)
    op = {"cartesian": "cartesian-product"}.get(args.op, args.op)
    limits = _limits()
    partner = None
    if op in ("cartesian-product", "join"):
        if args.partner is None:
            raise CliError(f"--op {args.op} needs --partner")
        partner = _read_graph(args.partner, args.format)
        target = partner
        after = (
            ops.cartesian_product(g, partner)
            if op == "cartesian-product"
            else ops.join(g, partner)
        )
    elif op == "add-vertex":
        if args.neighbors is None:
            raise CliError("--op add-vertex needs --neighbors")
        target = _parse_ids(args.neighbors)
        after = ops.add_vertex(g, target)
    elif op == "delete-vertex":
        if args.vertex is None:
            raise CliError("--op delete-vertex needs --vertex")
        target = args.vertex
        after = ops.delete_vertex(g, target)[0]
    else:
        if args.u is None or args.v is None:
            raise CliError(f"--op {args.op} needs --u and --v")
        target = (args.u, args.v)
        fn = {
            "add-edge": ops.add_edge,
            "delete-edge": ops.delete_edge,
            "subdivide": ops.subdivide_edge,
        }.get(op)
        after = fn(g, *target) if fn else ops.contract_edge(g, *target)[0]

    mp_before = mp_exact(g, limits).value
    mp_after = mp_exact(after, limits).value
    theorem_id, reason = _op_theorem(op, g, target, partner)
    if theorem_id is None:
        print(f"{mp_before} -> {mp_after}, theorem inapplicable ({reason})")
    else:
        spec = bounds.THEOREMS[theorem_id]
        mp_p = mp_exact(partner, limits).value if spec.needs_partner else None
        n_p = partner.n if spec.needs_partner else None
        lo = spec.lower(mp_before, g.n, mp_p, n_p)
        hi = spec.upper(mp_before, g.n, mp_p, n_p)
        verdict = "pass" if lo <= mp_after <= hi else "FAIL"
        print(f"{mp_before} -> {mp_after}, bounds [{lo}, {hi}], {verdict}")
    if args.out:
        _write_graph(after, args.out, args.json)
    return 0


def _cmd_construct(args) -> int:
    params = {}
    for name in ("n", "m", "k", "t"):
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    inst = constructions.generate(args.family, params)
    g = inst.graph
    tgt = bounds.describe_target(inst.operation, inst.target)
    pstr = " ".join(f"{k}={v}" for k, v in sorted(inst.params.items()))
    print(
        f"family={inst.family} {pstr} n={g.n} m={g.m} "
        f"claimed {inst.claimed_mp_before} -> {inst.claimed_mp_after} "
        f"op={inst.operation} target={tgt}"
    )
    if args.out:
        _write_graph(g, args.out, args.json)
    if args.partner_out:
        if not isinstance(inst.target, gr.Graph):
            raise CliError(f"family {inst.family} has no partner graph")
        _write_graph(inst.target, args.partner_out, args.json)
    return 0


def _make_model(args) -> bounds.Model:
    if args.model == "gnp":
        if args.n is None or args.p is None:
            raise CliError("gnp model needs --n and --p")
        return bounds.Gnp(args.n, args.p)
    if args.model == "random_tree":
        if args.n is None:
            raise CliError("random_tree model needs --n")
        return bounds.RandomTree(args.n)
    if args.n1 is None or args.n2 is None or args.p is None:
        raise CliError("random_bipartite model needs --n1, --n2 and --p")
    return bounds.RandomBipartite(args.n1, args.n2, args.p)


def _cmd_verify(args) -> int:
    config = bounds.CampaignConfig(
        theorem=args.theorem,
        model=_make_model(args),
        trials=args.trials,
        seed=args.seed,
        target_policy=("sample", args.sample) if args.sample else None,
    )
    try:
        records, summary = bounds.run_campaign(config, _limits(), jobs=args.jobs)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.report:
        Path(args.report).write_text(
            bounds.records_to_json(records, summary)
            if args.json
            else bounds.records_to_csv(records)
        )
    print(
        f"theorem={summary.theorem} model={config.model.describe()} "
        f"trials={summary.trials} records={summary.records} "
        f"failures={summary.failures} skips={summary.skipped_trials} "
        f"tight_low={summary.tight_low} tight_high={summary.tight_high}"
    )
    return 2 if summary.failures else 0


def _oracle_catalog(max_n: int) -> list[gr.Graph]:
    cat: list[gr.Graph] = []
    cat.extend(constructions.path_graph(n) for n in range(1, max_n + 1))
    cat.extend(constructions.cycle_graph(n) for n in range(3, max_n + 1))
    cat.extend(constructions.star_graph(m) for m in range(1, max_n))
    cat.extend(constructions.complete_graph(n) for n in range(1, max_n + 1))
    cat.extend(
        constructions.complete_bipartite_graph(a, b)
        for a in range(1, max_n)
        for b in range(a, max_n + 1 - a)
    )
    return cat


def _cmd_oracle_check(args) -> int:
    if args.max_n > 12:
        raise CliError(f"--max-n must be at most 12, got {args.max_n}")
    limits = _limits()
    graphs = _oracle_catalog(args.max_n)
    rng_n = min(args.max_n, 10)
    for t in range(args.trials):
        seed = (args.seed * 1_000_003 + t) & 0x7FFFFFFFFFFFFFFF
        n = 1 + (seed % rng_n)
        p = 0.1 + 0.8 * ((seed >> 8) % 100) / 100.0
        graphs.append(bounds.random_graph(bounds.Gnp(n, p), seed))
    mismatches = 0
    for g in graphs:
        if mp_exact(g, limits).value != mp_oracle(g, args.max_n):
            mismatches += 1
    print(f"mismatches={mismatches} graphs={len(graphs)}")
    return 2 if mismatches else 0


def main(argv: list[str] | None = None) -> int:
    parser = _Parser(prog="dmp", description="degree-monotone path toolkit")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_mp = sub.add_parser("mp", help="compute mp of a graph file")
    p_mp.add_argument("input")
    p_mp.add_argument("--format", choices=["auto", "edgelist", "json"], default="auto")
    p_mp.add_argument("--witness", action="store_true")

    p_op = sub.add_parser("op", help="apply an operation and report mp before/after")
    p_op.add_argument("input")
    p_op.add_argument(
        "--op",
        required=True,
        choices=[
            "add-edge", "delete-edge", "subdivide", "contract",
            "add-vertex", "delete-vertex", "cartesian", "join",
        ],
    )
    p_op.add_argument("--format", choices=["auto", "edgelist", "json"], default="auto")
    p_op.add_argument("--u", type=int)
    p_op.add_argument("--v", type=int)
    p_op.add_argument("--vertex", type=int)
    p_op.add_argument("--neighbors")
    p_op.add_argument("--partner")
    p_op.add_argument("--out")
    p_op.add_argument("--json", action="store_true")

    p_con = sub.add_parser("construct", help="emit a catalog construction")
    p_con.add_argument("--family", required=True)
    p_con.add_argument("--n", type=int)
    p_con.add_argument("--m", type=int)
    p_con.add_argument("--k", type=int)
    p_con.add_argument("--t", type=int)
    p_con.add_argument("--out")
    p_con.add_argument("--partner-out")
    p_con.add_argument("--json", action="store_true")

    p_ver = sub.add_parser("verify", help="run a randomized bound campaign")
    p_ver.add_argument("--theorem", required=True, choices=list(bounds.THEOREM_IDS))
    p_ver.add_argument(
        "--model", required=True, choices=["gnp", "random_tree", "random_bipartite"]
    )
    p_ver.add_argument("--n", type=int)
    p_ver.add_argument("--p", type=float)
    p_ver.add_argument("--n1", type=int)
    p_ver.add_argument("--n2", type=int)
    p_ver.add_argument("--trials", type=int, default=200)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--sample", type=int, help="check only this many targets per trial")
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--report")
    p_ver.add_argument("--json", action="store_true")

    p_or = sub.add_parser("oracle-check", help="cross-check solver against the oracle")
    p_or.add_argument("--max-n", type=int, default=12)
    p_or.add_argument("--trials", type=int, default=500)
    p_or.add_argument("--seed", type=int, default=0)

    try:
        args = parser.parse_args(argv)
        handler = {
            "mp": _cmd_mp,
            "op": _cmd_op,
            "construct": _cmd_construct,
            "verify": _cmd_verify,
            "oracle-check": _cmd_oracle_check,
        }[args.cmd]
        return handler(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
