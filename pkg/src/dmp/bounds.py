"""Machine-checkable bound theorems and randomized verification campaigns.

Each TheoremSpec pins one proven inequality relating mp before and after an
operation.  Bounds are evaluated in exact rational arithmetic: a check
passes iff lower <= mp_after <= upper as Fractions, and tightness flags
record equality with either end.  All bound violations indicate an
implementation defect, since the inequalities are proven.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from heapq import heapify, heappop, heappush

from .graph import Graph, from_edge_list, is_connected, is_tree, is_triangle_free
from . import operations as ops
from .solver import SearchLimits, mp_exact

THEOREM_IDS = (
    "edge_add",
    "edge_delete",
    "subdivision",
    "contraction_triangle_free",
    "vertex_add_general",
    "vertex_delete_general",
    "tree_leaf_add",
    "tree_leaf_delete",
    "cartesian_product",
    "join",
)

CSV_HEADER = "theorem,seed,trial,n,m,target,mp_before,mp_after,lower,upper,pass,tight_low,tight_high"


class PreconditionError(ValueError):
    """The theorem's precondition does not hold for the given graph/target."""


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    needs_partner: bool
    # lower/upper as functions of (mp_before, n_before, mp_partner, n_partner)
    lower_desc: str
    upper_desc: str

    def lower(self, mp: int, n: int, mp_p: int | None, n_p: int | None) -> Fraction:
        return _BOUNDS[self.id][0](mp, n, mp_p, n_p)

    def upper(self, mp: int, n: int, mp_p: int | None, n_p: int | None) -> Fraction:
        return _BOUNDS[self.id][1](mp, n, mp_p, n_p)


_BOUNDS = {
    "edge_add": (
        lambda mp, n, p, np_: Fraction(mp + 1, 3),
        lambda mp, n, p, np_: Fraction(3 * mp),
    ),
    "edge_delete": (
        lambda mp, n, p, np_: Fraction(mp, 3),
        lambda mp, n, p, np_: Fraction(3 * mp - 1),
    ),
    "subdivision": (
        lambda mp, n, p, np_: Fraction(_ceil_div(mp + 1, 2)),
        lambda mp, n, p, np_: Fraction(mp + 1),
    ),
    "contraction_triangle_free": (
        lambda mp, n, p, np_: Fraction(mp, 3),
        lambda mp, n, p, np_: Fraction(2 * mp),
    ),
    "vertex_add_general": (
        lambda mp, n, p, np_: Fraction(2),
        lambda mp, n, p, np_: Fraction(n + 1),
    ),
    "vertex_delete_general": (
        lambda mp, n, p, np_: Fraction(1),
        lambda mp, n, p, np_: Fraction(n - 1),
    ),
    "tree_leaf_add": (
        lambda mp, n, p, np_: Fraction(mp, 2),
        lambda mp, n, p, np_: Fraction(2 * mp),
    ),
    "tree_leaf_delete": (
        lambda mp, n, p, np_: Fraction(mp, 2),
        lambda mp, n, p, np_: Fraction(2 * mp),
    ),
    "cartesian_product": (
        lambda mp, n, p, np_: Fraction(mp + p - 1),
        lambda mp, n, p, np_: Fraction(mp * p),
    ),
    "join": (
        lambda mp, n, p, np_: Fraction(mp + p),
        lambda mp, n, p, np_: Fraction(n + np_),
    ),
}

THEOREMS: dict[str, TheoremSpec] = {
    "edge_add": TheoremSpec("edge_add", False, "(mp+1)/3", "3*mp"),
    "edge_delete": TheoremSpec("edge_delete", False, "mp/3", "3*mp-1"),
    "subdivision": TheoremSpec("subdivision", False, "ceil((mp+1)/2)", "mp+1"),
    "contraction_triangle_free": TheoremSpec(
        "contraction_triangle_free", False, "mp/3", "2*mp"),
    "vertex_add_general": TheoremSpec("vertex_add_general", False, "2", "n+1"),
    "vertex_delete_general": TheoremSpec("vertex_delete_general", False, "1", "n-1"),
    "tree_leaf_add": TheoremSpec("tree_leaf_add", False, "mp/2", "2*mp"),
    "tree_leaf_delete": TheoremSpec("tree_leaf_delete", False, "mp/2", "2*mp"),
    "cartesian_product": TheoremSpec(
        "cartesian_product", True, "mp_G+mp_H-1", "mp_G*mp_H"),
    "join": TheoremSpec("join", True, "mp_G+mp_H", "n_G+n_H"),
}


@dataclass(frozen=True)
class BoundCheckRecord:
    theorem: str
    seed: int
    trial: int
    n: int
    m: int
    target: str
    mp_before: int
    mp_after: int
    lower: Fraction
    upper: Fraction
    passed: bool
    tight_low: bool
    tight_high: bool

    def csv_row(self) -> str:
        cells = [
            self.theorem, str(self.seed), str(self.trial), str(self.n), str(self.m),
            self.target, str(self.mp_before), str(self.mp_after),
            str(self.lower), str(self.upper),
            "true" if self.passed else "false",
            "true" if self.tight_low else "false",
            "true" if self.tight_high else "false",
        ]
        return ",".join(cells)

    def json_obj(self) -> dict:
        return {
            "theorem": self.theorem, "seed": self.seed, "trial": self.trial,
            "n": self.n, "m": self.m, "target": self.target,
            "mp_before": self.mp_before, "mp_after": self.mp_after,
            "lower": str(self.lower), "upper": str(self.upper),
            "pass": self.passed, "tight_low": self.tight_low,
            "tight_high": self.tight_high,
        }


def describe_target(operation: str, target) -> str:
    """Comma-free target description for reports."""
    if operation in ("add-edge", "delete-edge", "subdivide", "contract"):
        return f"edge({target[0]}-{target[1]})"
    if operation == "delete-vertex":
        return f"vertex({target})"
    if operation == "add-vertex":
        return "neighbors(" + "+".join(str(x) for x in target) + ")"
    return f"partner(n={target.n};m={target.m})"


_THEOREM_OPERATION = {
    "edge_add": "add-edge",
    "edge_delete": "delete-edge",
    "subdivision": "subdivide",
    "contraction_triangle_free": "contract",
    "vertex_add_general": "add-vertex",
    "vertex_delete_general": "delete-vertex",
    "tree_leaf_add": "add-vertex",
    "tree_leaf_delete": "delete-vertex",
    "cartesian_product": "cartesian-product",
    "join": "join",
}


def theorem_operation(theorem_id: str) -> str:
    return _THEOREM_OPERATION[theorem_id]


def _check_precondition(theorem_id: str, g: Graph, target, partner: Graph | None) -> None:
    if theorem_id in ("cartesian_product", "join"):
        if partner is None:
            raise PreconditionError(f"{theorem_id} needs a partner graph")
        if theorem_id == "cartesian_product":
            if not (is_connected(g) and is_connected(partner)):
                raise PreconditionError("cartesian_product theorem needs connected operands")
        return
    if theorem_id == "contraction_triangle_free":
        if not is_triangle_free(g):
            raise PreconditionError("graph has a triangle, contraction theorem does not apply")
        if not g.has_edge(*target):
            raise PreconditionError(f"target {target} is not an edge")
        return
    if theorem_id in ("edge_delete", "subdivision"):
        if not g.has_edge(*target):
            raise PreconditionError(f"target {target} is not an edge")
        return
    if theorem_id == "edge_add":
        u, v = target
        if u == v or g.has_edge(u, v):
            raise PreconditionError(f"target {target} is not a non-adjacent pair")
        return
    if theorem_id == "tree_leaf_add":
        if not is_tree(g):
            raise PreconditionError("tree_leaf_add needs a tree")
        if len(target) != 1:
            raise PreconditionError("tree_leaf_add adds a vertex with exactly one neighbor")
        return
    if theorem_id == "tree_leaf_delete":
        if not is_tree(g):
            raise PreconditionError("tree_leaf_delete needs a tree")
        if g.n < 2:
            raise PreconditionError("cannot delete from a single-vertex tree")
        if g.degree(target) != 1:
            raise PreconditionError(f"vertex {target} is not a leaf")
        return
    if theorem_id == "vertex_add_general":
        if len(target) == 0:
            raise PreconditionError("new vertex needs at least one neighbor")
        return
    if theorem_id == "vertex_delete_general":
        if g.n < 2:
            raise PreconditionError("cannot delete the last vertex")
        return
    raise ValueError(f"unknown theorem {theorem_id!r}")


def _apply(theorem_id: str, g: Graph, target, partner: Graph | None) -> Graph:
    op = _THEOREM_OPERATION[theorem_id]
    if op == "add-edge":
        return ops.add_edge(g, *target)
    if op == "delete-edge":
        return ops.delete_edge(g, *target)
    if op == "subdivide":
        return ops.subdivide_edge(g, *target)
    if op == "contract":
        return ops.contract_edge(g, *target)[0]
    if op == "add-vertex":
        return ops.add_vertex(g, target)
    if op == "delete-vertex":
        return ops.delete_vertex(g, target)[0]
    if op == "cartesian-product":
        return ops.cartesian_product(g, partner)
    return ops.join(g, partner)


def check_bound(
    theorem_id: str,
    g: Graph,
    target,
    partner: Graph | None = None,
    limits: SearchLimits | None = None,
    seed: int = 0,
    trial: int = 0,
) -> BoundCheckRecord:
    """Verify one theorem instance with exact mp values and tightness flags."""
    if theorem_id not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem_id!r}")
    spec = THEOREMS[theorem_id]
    _check_precondition(theorem_id, g, target, partner)
    mp_before = mp_exact(g, limits).value
    mp_p = n_p = None
    if spec.needs_partner:
        mp_p = mp_exact(partner, limits).value
        n_p = partner.n
        tgt = partner
    else:
        tgt = target
    after = _apply(theorem_id, g, target, partner)
    mp_after = mp_exact(after, limits).value
    lower = spec.lower(mp_before, g.n, mp_p, n_p)
    upper = spec.upper(mp_before, g.n, mp_p, n_p)
    return BoundCheckRecord(
        theorem=theorem_id,
        seed=seed,
        trial=trial,
        n=g.n,
        m=g.m,
        target=describe_target(_THEOREM_OPERATION[theorem_id], tgt),
        mp_before=mp_before,
        mp_after=mp_after,
        lower=lower,
        upper=upper,
        passed=lower <= mp_after <= upper,
        tight_low=mp_after == lower,
        tight_high=mp_after == upper,
    )


# random graph models


@dataclass(frozen=True)
class Gnp:
    n: int
    p: float

    def describe(self) -> str:
        return f"gnp(n={self.n};p={self.p})"


@dataclass(frozen=True)
class RandomTree:
    n: int

    def describe(self) -> str:
        return f"random_tree(n={self.n})"


@dataclass(frozen=True)
class RandomBipartite:
    n1: int
    n2: int
    p: float

    def describe(self) -> str:
        return f"random_bipartite(n1={self.n1};n2={self.n2};p={self.p})"


Model = Gnp | RandomTree | RandomBipartite


def random_graph(model: Model, seed: int) -> Graph:
    """Draw one graph from the model, deterministically for a fixed seed."""
    rng = random.Random(seed)
    if isinstance(model, Gnp):
        if model.n < 1 or not 0.0 <= model.p <= 1.0:
            raise ValueError(f"bad gnp parameters {model}")
        edges = [
            (u, v)
            for u in range(model.n)
            for v in range(u + 1, model.n)
            if rng.random() < model.p
        ]
        return from_edge_list(model.n, edges)
    if isinstance(model, RandomTree):
        n = model.n
        if n < 1:
            raise ValueError(f"bad tree size {n}")
        if n == 1:
            return from_edge_list(1, [])
        if n == 2:
            return from_edge_list(2, [(0, 1)])
        # uniform labeled tree via a random Pruefer sequence
        seq = [rng.randrange(n) for _ in range(n - 2)]
        deg = [1] * n
        for x in seq:
            deg[x] += 1
        leaves = [v for v in range(n) if deg[v] == 1]
        heapify(leaves)
        edges = []
        for x in seq:
            v = heappop(leaves)
            edges.append((min(v, x), max(v, x)))
            deg[x] -= 1
            if deg[x] == 1:
                heappush(leaves, x)
        u, v = heappop(leaves), heappop(leaves)
        edges.append((min(u, v), max(u, v)))
        return from_edge_list(n, edges)
    if isinstance(model, RandomBipartite):
        n1, n2, p = model.n1, model.n2, model.p
        if n1 < 1 or n2 < 1 or not 0.0 <= p <= 1.0:
            raise ValueError(f"bad bipartite parameters {model}")
        edges = [
            (u, n1 + w)
            for u in range(n1)
            for w in range(n2)
            if rng.random() < p
        ]
        return from_edge_list(n1 + n2, edges)
    raise ValueError(f"unknown model {model!r}")


@dataclass(frozen=True)
class CampaignConfig:
    theorem: str
    model: Model
    trials: int
    seed: int
    # "all" checks every valid target per trial; ("sample", j) checks j
    # seeded random targets; None picks a per-theorem default
    target_policy: str | tuple[str, int] | None = None


@dataclass(frozen=True)
class CampaignSummary:
    theorem: str
    trials: int
    records: int
    passes: int
    failures: int
    skipped_trials: int
    tight_low: int
    tight_high: int
    min_lower_slack: Fraction | None
    min_upper_slack: Fraction | None


def _trial_seed(seed: int, trial: int) -> int:
    return (seed * 1_000_003 + trial) & 0x7FFFFFFFFFFFFFFF


def _default_policy(theorem_id: str) -> str | tuple[str, int]:
    if theorem_id == "vertex_add_general":
        return ("sample", 1)  # subsets are exponential, sample per trial
    if theorem_id in ("cartesian_product", "join"):
        return "all"  # single target: the partner
    return "all"


def _candidate_targets(theorem_id: str, g: Graph, rng: random.Random, policy):
    """Deterministic list of targets for one trial; empty list means skip."""
    if theorem_id == "edge_add":
        cands = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        ]
    elif theorem_id in ("edge_delete", "subdivision", "contraction_triangle_free"):
        cands = g.edges()
    elif theorem_id == "vertex_delete_general":
        cands = list(range(g.n)) if g.n >= 2 else []
    elif theorem_id == "tree_leaf_add":
        cands = [(v,) for v in range(g.n)]
    elif theorem_id == "tree_leaf_delete":
        cands = [v for v in range(g.n) if g.degree(v) == 1] if g.n >= 2 else []
    elif theorem_id == "vertex_add_general":
        size_cap = min(g.n, 8)
        cands = []
        j = policy[1] if isinstance(policy, tuple) else 1
        for _ in range(j):
            size = rng.randint(1, size_cap)
            cands.append(tuple(sorted(rng.sample(range(g.n), size))))
        return cands
    else:
        raise AssertionError(theorem_id)
    if isinstance(policy, tuple):
        j = min(policy[1], len(cands))
        return [cands[i] for i in sorted(rng.sample(range(len(cands)), j))]
    return cands


def _run_trial(config: CampaignConfig, trial: int, limits: SearchLimits | None):
    """Records for one trial, or None when the trial is skipped."""
    theorem_id = config.theorem
    policy = config.target_policy or _default_policy(theorem_id)
    tseed = _trial_seed(config.seed, trial)
    g = random_graph(config.model, tseed)
    rng = random.Random(tseed ^ 0x5EED)
    if theorem_id in ("cartesian_product", "join"):
        partner = random_graph(config.model, tseed + 1)
        if theorem_id == "cartesian_product" and not (
            is_connected(g) and is_connected(partner)
        ):
            return None
        rec = check_bound(
            theorem_id, g, None, partner, limits, seed=config.seed, trial=trial
        )
        return [rec]
    if theorem_id == "contraction_triangle_free" and not is_triangle_free(g):
        return None
    targets = _candidate_targets(theorem_id, g, rng, policy)
    if not targets:
        return None
    return [
        check_bound(theorem_id, g, t, None, limits, seed=config.seed, trial=trial)
        for t in targets
    ]


def run_campaign(
    config: CampaignConfig,
    limits: SearchLimits | None = None,
    jobs: int = 1,
) -> tuple[list[BoundCheckRecord], CampaignSummary]:
    """Run all trials; deterministic for a fixed config, regardless of jobs."""
    if config.trials < 1:
        raise ValueError("trials must be >= 1")
    if config.theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {config.theorem!r}")
    if config.theorem in ("tree_leaf_add", "tree_leaf_delete") and not isinstance(
        config.model, RandomTree
    ):
        raise ValueError(f"{config.theorem} campaigns need the random_tree model")

    results: list[list[BoundCheckRecord] | None]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(
                    _run_trial,
                    [config] * config.trials,
                    range(config.trials),
                    [limits] * config.trials,
                    chunksize=max(1, config.trials // (jobs * 4)),
                )
            )
    else:
        results = [_run_trial(config, t, limits) for t in range(config.trials)]

    records: list[BoundCheckRecord] = []
    skipped = 0
    for res in results:
        if res is None:
            skipped += 1
        else:
            records.extend(res)
    passes = sum(1 for r in records if r.passed)
    lo_slacks = [r.mp_after - r.lower for r in records]
    hi_slacks = [r.upper - r.mp_after for r in records]
    summary = CampaignSummary(
        theorem=config.theorem,
        trials=config.trials,
        records=len(records),
        passes=passes,
        failures=len(records) - passes,
        skipped_trials=skipped,
        tight_low=sum(1 for r in records if r.tight_low),
        tight_high=sum(1 for r in records if r.tight_high),
        min_lower_slack=min(lo_slacks) if lo_slacks else None,
        min_upper_slack=min(hi_slacks) if hi_slacks else None,
    )
    return records, summary


def records_to_csv(records: list[BoundCheckRecord]) -> str:
    lines = [CSV_HEADER]
    lines.extend(r.csv_row() for r in records)
    return "\n".join(lines) + "\n"


def records_to_json(records: list[BoundCheckRecord], summary: CampaignSummary) -> str:
    import json

    obj = {
        "records": [r.json_obj() for r in records],
        "summary": {
            "theorem": summary.theorem,
            "trials": summary.trials,
            "records": summary.records,
            "passes": summary.passes,
            "failures": summary.failures,
            "skipped_trials": summary.skipped_trials,
            "tight_low": summary.tight_low,
            "tight_high": summary.tight_high,
            "min_lower_slack": (
                str(summary.min_lower_slack) if summary.min_lower_slack is not None else None
            ),
            "min_upper_slack": (
                str(summary.min_upper_slack) if summary.min_upper_slack is not None else None
            ),
        },
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
