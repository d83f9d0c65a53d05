"""Corpus verification harness: per-graph analysis records, theorem-sweep
checks, and deterministic machine-readable reports.

Report format (JSON lines, diffable and streamable):

    line 1      header object: {"signrank_report": 1, "command": ..., config}
    lines 2..   one record object per input graph, in input order
    last line   {"summary": {"records": N, "pass": P, "fail": F, "skip": S}}

Objects are serialized with sorted keys and no whitespace, so two runs with
identical inputs, seed and configuration produce byte-identical reports.
Per-record wall-clock timings are only included when explicitly requested,
because they would break that reproducibility.

Every witness embedded in a record is self-contained: the record carries the
graph (graph6) and the witness values in canonical edge order, so it can be
re-verified from the report alone.

Checks (cmd_verify tags):

    t21    a full-rank signing exists  <=>  full perrank  <=>  a factor exists
    c22    max rank over signs equals perrank
    t31    singular weighting exists <=> at least two factors (t = 0 flagged)
    r11    factor-orientation count equals the adjacency permanent
    r32    flow-route witnesses respect the 5 (bipartite) / 11 bound
    flows  bounded zero-sum flow solver succeeds where existence is known
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from multiprocessing import Pool
from typing import Callable, Iterable

from . import __version__
from .errors import GraphParseError, ResourceCapError
from .exact_linalg import adjacency_matrix, mat_vec, permanent
from .factors import (
    count_factors,
    count_nonzero_transversals,
    enumerate_factors,
    has_factor,
    perrank_fast,
)
from .graph_core import (
    Graph,
    components,
    cut_edges,
    encode_graph6,
    is_bipartite,
    parse_edge_list,
    parse_graph6,
)
from .sign_search import find_fullrank_sign, max_rank_over_signs, min_rank_over_signs
from .weight_search import find_singular_weight, verify_weight
from .zero_sum_flow import find_zero_sum_flow, flow_exists_nonbipartite_test, verify_flow

THEOREM_TAGS = ("t21", "c22", "t31", "r11", "r32", "flows")


@dataclass(frozen=True)
class Caps:
    """Resource caps; each command marks a graph "skip" instead of exceeding
    them."""

    sign_exhaustive_m: int = 20
    factor_n: int = 12
    detpoly_n: int = 10
    minrank_m: int = 20
    flow_nodes: int = 2_000_000

    def as_dict(self) -> dict:
        return {
            "sign_exhaustive_m": self.sign_exhaustive_m,
            "factor_n": self.factor_n,
            "detpoly_n": self.detpoly_n,
            "minrank_m": self.minrank_m,
            "flow_nodes": self.flow_nodes,
        }


@dataclass(frozen=True)
class RunConfig:
    command: str
    theorem: str | None = None
    seed: int = 0
    bound: int = 6
    method: str = "randomized"
    jobs: int = 1
    timings: bool = False
    caps: Caps = field(default_factory=Caps)


def parse_caps(text: str) -> Caps:
    """Parse a --caps string like "sign_exhaustive_m=24,factor_n=10"."""
    caps = Caps()
    if not text:
        return caps
    for item in text.split(","):
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in caps.as_dict():
            raise ValueError(f"unknown cap {key!r}")
        caps = replace(caps, **{key: int(value)})
    return caps


def graph_seed(master: int, index: int) -> int:
    """Stable per-graph seed, independent of worker count and platform."""
    digest = hashlib.sha256(f"{master}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def load_corpus(text: str, fmt: str) -> list[Graph]:
    """graph6: one graph per non-empty line.  edgelist: the whole text is a
    single graph."""
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    if fmt != "graph6":
        raise ValueError(f"unknown input format {fmt!r}")
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphParseError as exc:
            raise GraphParseError(f"line {lineno}: {exc}") from None
    return graphs


def _base_record(index: int, g: Graph) -> dict:
    g6 = encode_graph6(g)
    gid = f"{index}:{hashlib.sha256(g6.encode()).hexdigest()[:12]}"
    return {"record": index, "id": gid, "g6": g6, "n": g.n, "m": g.m}


def _sign_outcome_dict(outcome) -> dict:
    return {
        "witness": list(outcome.witness.values) if outcome.witness else None,
        "method": outcome.method,
        "attempts": outcome.attempts,
        "certified_none": outcome.certified_none,
        "basis": outcome.basis,
    }


def _weight_outcome_dict(outcome) -> dict:
    return {
        "witness": list(outcome.witness.values) if outcome.witness else None,
        "route": outcome.route,
        "certificate_impossible": outcome.certificate_impossible,
        "identically_singular": outcome.identically_singular,
        "max_abs_weight": outcome.witness.max_abs() if outcome.witness else None,
    }


def analyze_record(index: int, g: Graph, cfg: RunConfig) -> dict:
    rec = _base_record(index, g)
    caps = cfg.caps
    if g.n > caps.factor_n:
        rec.update(status="skip", reason=f"n={g.n} exceeds factor cap {caps.factor_n}")
        return rec
    seed = graph_seed(cfg.seed, index)
    rec["t"] = count_factors(g)
    rec["perrank"] = perrank_fast(g)
    rec["full_perrank"] = rec["perrank"] == g.n
    try:
        sign = find_fullrank_sign(
            g, method=cfg.method, seed=seed, exhaustive_m_cap=caps.sign_exhaustive_m)
        rec["sign"] = _sign_outcome_dict(sign)
    except ResourceCapError as exc:
        rec["sign"] = {"skipped": str(exc)}
    weight = find_singular_weight(g, bound=cfg.bound, seed=seed)
    rec["weight"] = _weight_outcome_dict(weight)
    flow = find_zero_sum_flow(g, max(cfg.bound, 2), node_budget=caps.flow_nodes)
    rec["flow"] = {
        "k": max(cfg.bound, 2),
        "values": list(flow.values) if flow is not None else None,
    }
    rec["status"] = "ok"
    return rec


def check_record(index: int, g: Graph, cfg: RunConfig) -> dict:
    rec = _base_record(index, g)
    caps = cfg.caps
    if g.n > caps.factor_n:
        rec.update(status="skip", reason=f"n={g.n} exceeds factor cap {caps.factor_n}")
        return rec
    seed = graph_seed(cfg.seed, index)
    try:
        checker = _CHECKERS[cfg.theorem]
    except KeyError:
        raise ValueError(f"unknown theorem tag {cfg.theorem!r}") from None
    try:
        ok, detail = checker(g, seed, cfg)
    except ResourceCapError as exc:
        rec.update(status="skip", reason=str(exc))
        return rec
    rec["check"] = detail
    rec["status"] = "pass" if ok else "fail"
    return rec


def _check_t21(g: Graph, seed: int, cfg: RunConfig) -> tuple[bool, dict]:
    outcome = find_fullrank_sign(
        g, method="exhaustive", seed=seed, exhaustive_m_cap=cfg.caps.sign_exhaustive_m)
    factor = has_factor(g)
    full = perrank_fast(g) == g.n
    found = outcome.witness is not None
    ok = (found == factor == full) and (found or outcome.certified_none)
    detail = {
        "has_factor": factor,
        "full_perrank": full,
        "sign": _sign_outcome_dict(outcome),
    }
    return ok, detail


def _check_c22(g: Graph, seed: int, cfg: RunConfig) -> tuple[bool, dict]:
    mx = max_rank_over_signs(g, exhaustive_m_cap=cfg.caps.sign_exhaustive_m, seed=seed)
    pr = perrank_fast(g)
    return mx == pr, {"max_rank": mx, "perrank": pr}


def _check_t31(g: Graph, seed: int, cfg: RunConfig) -> tuple[bool, dict]:
    t = count_factors(g)
    outcome = find_singular_weight(g, bound=cfg.bound, seed=seed)
    detail = {"t": t, "weight": _weight_outcome_dict(outcome)}
    if t == 0:
        ok = outcome.identically_singular and outcome.witness is not None
    elif t == 1:
        ok = outcome.certificate_impossible is not None and outcome.witness is None
    else:
        ok = (
            outcome.witness is not None
            and not outcome.identically_singular
            and verify_weight(g, outcome.witness) == "singular"
        )
    return ok, detail


def _check_r11(g: Graph, seed: int, cfg: RunConfig) -> tuple[bool, dict]:
    transversals = count_nonzero_transversals(g)
    perm = permanent(adjacency_matrix(g, (1,) * g.m)) if g.n else 1
    return transversals == perm, {"transversals": transversals, "permanent": perm}


def _check_r32(g: Graph, seed: int, cfg: RunConfig) -> tuple[bool, dict]:
    outcome = find_singular_weight(g, bound=cfg.bound, seed=seed)
    detail = {"weight": _weight_outcome_dict(outcome)}
    if outcome.route != "flow" or outcome.witness is None:
        detail["applicable"] = False
        return True, detail
    bound = 5 if is_bipartite(g) else 11
    detail["applicable"] = True
    detail["bound"] = bound
    return outcome.witness.max_abs() <= bound, detail


def _check_flows(g: Graph, seed: int, cfg: RunConfig) -> tuple[bool, dict]:
    detail: dict = {"applicable": False}
    if g.n == 0 or g.m == 0 or len(components(g)) != 1:
        return True, detail
    if is_bipartite(g):
        if cut_edges(g):
            return True, detail
        k = 6
    else:
        if not flow_exists_nonbipartite_test(g):
            return True, detail
        k = 12
    detail.update(applicable=True, k=k)
    flow = find_zero_sum_flow(g, k, node_budget=cfg.caps.flow_nodes)
    if flow is None:
        detail["values"] = None
        return False, detail
    detail["values"] = list(flow.values)
    kernel = mat_vec(adjacency_matrix(g, flow), (1,) * g.n)
    ok = (
        verify_flow(g, flow)
        and all(x == 0 for x in kernel)
        and flow.max_abs() <= k - 1
    )
    return ok, detail


_CHECKERS: dict[str, Callable] = {
    "t21": _check_t21,
    "c22": _check_c22,
    "t31": _check_t31,
    "r11": _check_r11,
    "r32": _check_r32,
    "flows": _check_flows,
}


def minrank_record(index: int, g: Graph, cfg: RunConfig) -> dict:
    rec = _base_record(index, g)
    try:
        value, witness = min_rank_over_signs(g, exhaustive_m_cap=cfg.caps.minrank_m)
    except ResourceCapError as exc:
        rec.update(status="skip", reason=str(exc))
        return rec
    rec.update(status="ok", min_rank=value, witness=list(witness.values))
    return rec


def factors_record(index: int, g: Graph, cfg: RunConfig) -> dict:
    rec = _base_record(index, g)
    if g.n > cfg.caps.factor_n:
        rec.update(status="skip", reason=f"n={g.n} exceeds factor cap {cfg.caps.factor_n}")
        return rec
    facs = enumerate_factors(g)
    rec.update(
        status="ok",
        t=len(facs),
        factors=[{"k2": list(f.k2_edges), "cycles": [list(c) for c in f.cycles]}
                 for f in facs],
    )
    return rec


def perrank_record(index: int, g: Graph, cfg: RunConfig) -> dict:
    rec = _base_record(index, g)
    pr = perrank_fast(g)
    rec.update(status="ok", perrank=pr, full_perrank=pr == g.n)
    return rec


def signfind_record(index: int, g: Graph, cfg: RunConfig) -> dict:
    rec = _base_record(index, g)
    if g.n > cfg.caps.factor_n:
        rec.update(status="skip", reason=f"n={g.n} exceeds factor cap {cfg.caps.factor_n}")
        return rec
    try:
        outcome = find_fullrank_sign(
            g, method=cfg.method, seed=graph_seed(cfg.seed, index),
            exhaustive_m_cap=cfg.caps.sign_exhaustive_m)
    except ResourceCapError as exc:
        rec.update(status="skip", reason=str(exc))
        return rec
    rec.update(status="ok", sign=_sign_outcome_dict(outcome))
    return rec


def weightfind_record(index: int, g: Graph, cfg: RunConfig) -> dict:
    rec = _base_record(index, g)
    if g.n > cfg.caps.factor_n:
        rec.update(status="skip", reason=f"n={g.n} exceeds factor cap {cfg.caps.factor_n}")
        return rec
    outcome = find_singular_weight(g, bound=cfg.bound, seed=graph_seed(cfg.seed, index))
    rec.update(status="ok", weight=_weight_outcome_dict(outcome))
    return rec


def zsf_record(index: int, g: Graph, cfg: RunConfig) -> dict:
    rec = _base_record(index, g)
    k = max(cfg.bound, 2)
    try:
        flow = find_zero_sum_flow(g, k, node_budget=cfg.caps.flow_nodes)
    except ResourceCapError as exc:
        rec.update(status="skip", reason=str(exc))
        return rec
    rec.update(status="ok", k=k, values=list(flow.values) if flow is not None else None)
    return rec


_RECORD_FN: dict[str, Callable[[int, Graph, RunConfig], dict]] = {
    "analyze": analyze_record,
    "verify": check_record,
    "minrank": minrank_record,
    "factors": factors_record,
    "perrank": perrank_record,
    "signfind": signfind_record,
    "weightfind": weightfind_record,
    "zsf": zsf_record,
}


def _worker(args: tuple[str, int, str, RunConfig]) -> dict:
    command, index, g6, cfg = args
    g = parse_graph6(g6)
    return _with_timing(command, index, g, cfg)


def _with_timing(command: str, index: int, g: Graph, cfg: RunConfig) -> dict:
    if not cfg.timings:
        return _RECORD_FN[command](index, g, cfg)
    import time

    start = time.perf_counter()
    rec = _RECORD_FN[command](index, g, cfg)
    rec["ms"] = round((time.perf_counter() - start) * 1000, 3)
    return rec


def run(graphs: Iterable[Graph], cfg: RunConfig) -> tuple[str, dict]:
    """Run one command over a corpus.  Returns (report_text, summary)."""
    graphs = list(graphs)
    if cfg.command not in _RECORD_FN:
        raise ValueError(f"unknown command {cfg.command!r}")
    if cfg.command == "verify" and cfg.theorem not in THEOREM_TAGS:
        raise ValueError(f"unknown theorem tag {cfg.theorem!r}")
    if cfg.jobs > 1 and len(graphs) > 1:
        tasks = [(cfg.command, i, encode_graph6(g), cfg) for i, g in enumerate(graphs)]
        with Pool(cfg.jobs) as pool:
            records = pool.map(_worker, tasks)
    else:
        records = [_with_timing(cfg.command, i, g, cfg) for i, g in enumerate(graphs)]
    summary = {
        "records": len(records),
        "pass": sum(1 for r in records if r.get("status") == "pass"),
        "fail": sum(1 for r in records if r.get("status") == "fail"),
        "skip": sum(1 for r in records if r.get("status") == "skip"),
    }
    header = {
        "signrank_report": 1,
        "version": __version__,
        "command": cfg.command,
        "theorem": cfg.theorem,
        "seed": cfg.seed,
        "bound": cfg.bound,
        "method": cfg.method,
        "caps": cfg.caps.as_dict(),
    }
    lines = [_dumps(header)]
    lines.extend(_dumps(r) for r in records)
    lines.append(_dumps({"summary": summary}))
    return "\n".join(lines) + "\n", summary


def _dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def exit_code(summary: dict, allow_skips: bool = False) -> int:
    """0 ok; 1 any failure; 3 any skip (unless allowed)."""
    if summary["fail"]:
        return 1
    if summary["skip"] and not allow_skips:
        return 3
    return 0
