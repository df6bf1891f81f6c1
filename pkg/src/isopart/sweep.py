"""Batch runner: bound checks, construction checks and conjecture probes over graph streams.

Every record carries enough to be replayed from its graph6 string, and
``recheck_report`` re-verifies every stored witness independently.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Iterable, Optional

from .clique_partition import partition_k_clique
from .cycle_partition import partition_cycle
from .errors import HypothesisError, ProofGapReport, SearchAborted
from .exact import (
    DEFAULT_BUDGET,
    clique_isomatic_k_partition,
    cycle_isomatic_3_partition,
    isomatic_partition,
    max_isomatic,
    min_isolating,
)
from .formats import emit_graph6, parse_graph6
from .graph import (
    Graph,
    bits,
    is_claw_free,
    is_complete,
    is_connected,
    to_mask,
)
from .planarity import is_planar
from .verify import Certificate, Coloring, Target, is_isolating, recheck, verify_partition

PASS, FAIL, VACUOUS, ABORTED = "PASS", "FAIL", "VACUOUS", "ABORTED"
THEOREM, CONJECTURE, CONSTRUCTION = "theorem", "conjecture", "construction"

DOMINATE = Target.clique(1)
ISOLATE = Target.clique(2)
CYCLE = Target.cycle()

GROUPS = ("bounds", "partitions", "conjectures")


@dataclass(frozen=True)
class RunConfig:
    checks: tuple[str, ...] = ("all",)
    ks: tuple[int, ...] = (3,)
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    out: Optional[str] = None
    # description of the input (file name or generator settings), echoed into the report
    source: str = ""

    def __post_init__(self):
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.jobs <= 0:
            raise ValueError("jobs must be positive")
        if any(k < 3 for k in self.ks):
            raise ValueError("every k must be at least 3")
        known = set(GROUPS) | {"all"} | set(CHECKS)
        bad = [c for c in self.checks if c not in known]
        if bad:
            raise ValueError(f"unknown checks {bad}; choose from {sorted(known)}")

    def selected(self) -> list[str]:
        names = []
        for c in self.checks:
            if c == "all":
                names.extend(CHECKS)
            elif c in GROUPS:
                names.extend(n for n, (grp, _) in CHECKS.items() if grp == c)
            else:
                names.append(c)
        return list(dict.fromkeys(names))

    def to_json(self) -> dict:
        d = asdict(self)
        d["checks"] = list(self.checks)
        d["ks"] = list(self.ks)
        return d


def _result(name: str, verdict: str, basis: str, details: str, witness: Optional[dict] = None) -> dict:
    return {"name": name, "verdict": verdict, "basis": basis, "details": details, "witness": witness}


def _set_witness(target: Target, mask: int, value: int) -> dict:
    return {"kind": "set", "target": target.to_json(), "set": list(bits(mask)), "value": value}


def _coloring_witness(g: Graph, target: Target, coloring: Coloring) -> dict:
    cert = verify_partition(g, coloring, target)
    return {"kind": "coloring", "coloring": coloring.to_json(), "certificate": cert.to_json()}


def _is_c5(g: Graph) -> bool:
    return g.n == 5 and g.num_edges() == 5 and g.max_degree() == 2 and is_connected(g)


# -- bound checks ----------------------------------------------------------


def check_domatic_two(g: Graph, cfg: RunConfig) -> list[dict]:
    name, basis = "connected-graph-has-two-disjoint-dominating-sets", THEOREM
    if not is_connected(g) or g.n == 1:
        return [_result(name, VACUOUS, basis, "needs a connected graph other than K_1")]
    found, _ = isomatic_partition(g, DOMINATE, 2, cfg.budget)
    if found is None:
        return [_result(name, FAIL, basis, "no partition into two dominating sets")]
    return [_result(name, PASS, basis, "two disjoint dominating sets", _coloring_witness(g, DOMINATE, found))]


def _iota_bound(name: str, g: Graph, target: Target, denom: int, excluded: bool, why: str, cfg: RunConfig) -> dict:
    if not is_connected(g) or excluded:
        return _result(name, VACUOUS, THEOREM, why)
    res = min_isolating(g, target, cfg.budget)
    ok = res.value * denom <= g.n
    detail = f"value={res.value} n={g.n} bound=n/{denom}"
    return _result(name, PASS if ok else FAIL, THEOREM, detail, _set_witness(target, res.witness, res.value))


def check_domination_half(g: Graph, cfg: RunConfig) -> list[dict]:
    return [_iota_bound("domination-number-at-most-half", g, DOMINATE, 2, g.n == 1, "needs connected, not K_1", cfg)]


def check_isolation_third(g: Graph, cfg: RunConfig) -> list[dict]:
    excluded = (g.n == 2 and g.num_edges() == 1) or _is_c5(g)
    return [_iota_bound("isolation-number-at-most-third", g, ISOLATE, 3, excluded, "needs connected, not K_2 or C_5", cfg)]


def check_clique_isolation_bound(g: Graph, cfg: RunConfig) -> list[dict]:
    out = []
    for k in cfg.ks:
        excluded = g.n == k and is_complete(g)
        out.append(_iota_bound(f"clique-isolation-number-at-most-n/{k + 1}[k={k}]", g, Target.clique(k), k + 1, excluded, f"needs connected, not K_{k}", cfg))
    return out


def check_cycle_isolation_quarter(g: Graph, cfg: RunConfig) -> list[dict]:
    excluded = g.n == 3 and is_complete(g)
    return [_iota_bound("cycle-isolation-number-at-most-quarter", g, CYCLE, 4, excluded, "needs connected, not C_3", cfg)]


def check_isomatic_three(g: Graph, cfg: RunConfig) -> list[dict]:
    name = "connected-graph-has-three-disjoint-isolating-sets"
    if not is_connected(g) or (g.n == 2 and g.num_edges() == 1) or _is_c5(g):
        return [_result(name, VACUOUS, THEOREM, "needs connected, not K_2 or C_5")]
    found, _ = isomatic_partition(g, ISOLATE, 3, cfg.budget)
    if found is None:
        return [_result(name, FAIL, THEOREM, "no partition into three isolating sets")]
    return [_result(name, PASS, THEOREM, "three disjoint isolating sets", _coloring_witness(g, ISOLATE, found))]


def check_isomatic_times_iota(g: Graph, cfg: RunConfig) -> list[dict]:
    out = []
    targets = [ISOLATE] + [Target.clique(k) for k in cfg.ks] + [CYCLE]
    for target in dict.fromkeys(targets):
        name = f"isomatic-times-isolation-at-most-n[{target}]"
        iota = min_isolating(g, target, cfg.budget)
        if iota.value == 0:
            out.append(_result(name, VACUOUS, THEOREM, "pattern-free: isolation number 0, isomatic number unbounded"))
            continue
        iso = max_isomatic(g, target, cfg.budget)
        ok = iso.value * iota.value <= g.n
        w = _coloring_witness(g, target, iso.witness)
        w["set"] = list(bits(iota.witness))
        out.append(_result(name, PASS if ok else FAIL, THEOREM, f"iso={iso.value} iota={iota.value} n={g.n}", w))
    return out


# -- constructions ---------------------------------------------------------


def _construction(name: str, g: Graph, target: Target, build: Callable[[], Coloring]) -> dict:
    try:
        coloring = build()
    except HypothesisError as exc:
        return _result(name, VACUOUS, CONSTRUCTION, f"hypothesis not met ({exc.hypothesis}): {exc}")
    except ProofGapReport as exc:
        # the colouring may belong to a subgraph deep in the recursion
        usable = exc.coloring is not None and len(exc.coloring.colors) == g.n
        w = _coloring_witness(g, target, exc.coloring) if usable else None
        return _result(name, FAIL, CONSTRUCTION, f"construction gap: {exc}", w)
    w = _coloring_witness(g, target, coloring)
    verdict = PASS if w["certificate"]["verdict"] == PASS else FAIL
    return _result(name, verdict, CONSTRUCTION, f"{coloring.m}-class colouring", w)


def check_clique_partition(g: Graph, cfg: RunConfig) -> list[dict]:
    return [
        _construction(f"degree-bounded-clique-partition[k={k}]", g, Target.clique(k), lambda k=k: partition_k_clique(g, k))
        for k in cfg.ks
    ]


def check_cycle_partition(g: Graph, cfg: RunConfig) -> list[dict]:
    return [_construction("claw-free-subcubic-cycle-partition", g, CYCLE, lambda: partition_cycle(g))]


def check_clique_isomatic_k(g: Graph, cfg: RunConfig) -> list[dict]:
    return [
        _construction(f"clique-isomatic-k-partition[k={k}]", g, Target.clique(k), lambda k=k: clique_isomatic_k_partition(g, k))
        for k in cfg.ks
    ]


def check_cycle_isomatic_3(g: Graph, cfg: RunConfig) -> list[dict]:
    return [_construction("cycle-isomatic-3-partition", g, CYCLE, lambda: cycle_isomatic_3_partition(g, cfg.budget))]


# -- conjecture probes -----------------------------------------------------


def _probe(name: str, g: Graph, target: Target, m: int, construct: Optional[Callable[[], Coloring]], cfg: RunConfig) -> dict:
    """PASS means "consistent with the conjecture on this graph", never a proof."""
    if construct is not None:
        try:
            coloring = construct()
            if verify_partition(g, coloring, target).passed:
                return _result(name, PASS, CONJECTURE, f"consistent: {m} classes by construction", _coloring_witness(g, target, coloring))
        except (HypothesisError, ProofGapReport):
            pass
    found, _ = isomatic_partition(g, target, m, cfg.budget)
    if found is None:
        return _result(name, FAIL, CONJECTURE, f"COUNTEREXAMPLE: no {m}-class partition exists")
    return _result(name, PASS, CONJECTURE, f"consistent: {m} classes by exact search", _coloring_witness(g, target, found))


def check_clique_isomatic_k_plus_1(g: Graph, cfg: RunConfig) -> list[dict]:
    out = []
    for k in cfg.ks:
        name = f"connected-graph-has-k+1-clique-isolating-sets[k={k}]"
        if not is_connected(g) or (g.n == k and is_complete(g)):
            out.append(_result(name, VACUOUS, CONJECTURE, f"needs connected, not K_{k}"))
            continue
        build = (lambda k=k: partition_k_clique(g, k)) if g.max_degree() <= k else None
        out.append(_probe(name, g, Target.clique(k), k + 1, build, cfg))
    return out


def _cycle_four(name: str, g: Graph, cfg: RunConfig, planar_only: bool) -> dict:
    if not is_connected(g) or (g.n == 3 and is_complete(g)):
        return _result(name, VACUOUS, CONJECTURE, "needs connected, not C_3")
    if planar_only and not is_planar(g):
        return _result(name, VACUOUS, CONJECTURE, "not planar")
    build = (lambda: partition_cycle(g)) if g.max_degree() <= 3 and is_claw_free(g) else None
    return _probe(name, g, CYCLE, 4, build, cfg)


def check_cycle_isomatic_four(g: Graph, cfg: RunConfig) -> list[dict]:
    return [_cycle_four("connected-graph-has-four-cycle-isolating-sets", g, cfg, False)]


def check_planar_cycle_four(g: Graph, cfg: RunConfig) -> list[dict]:
    return [_cycle_four("planar-graph-has-four-cycle-isolating-sets", g, cfg, True)]


CHECKS: dict[str, tuple[str, Callable[[Graph, RunConfig], list[dict]]]] = {
    "domatic-two": ("bounds", check_domatic_two),
    "domination-half": ("bounds", check_domination_half),
    "isolation-third": ("bounds", check_isolation_third),
    "clique-isolation-bound": ("bounds", check_clique_isolation_bound),
    "cycle-isolation-quarter": ("bounds", check_cycle_isolation_quarter),
    "isomatic-three": ("bounds", check_isomatic_three),
    "isomatic-times-iota": ("bounds", check_isomatic_times_iota),
    "clique-partition": ("partitions", check_clique_partition),
    "cycle-partition": ("partitions", check_cycle_partition),
    "clique-isomatic-k": ("partitions", check_clique_isomatic_k),
    "cycle-isomatic-3": ("partitions", check_cycle_isomatic_3),
    "clique-isomatic-k-plus-1": ("conjectures", check_clique_isomatic_k_plus_1),
    "cycle-isomatic-four": ("conjectures", check_cycle_isomatic_four),
    "planar-cycle-four": ("conjectures", check_planar_cycle_four),
}


# -- running ---------------------------------------------------------------


def run_graph(g: Graph, cfg: RunConfig) -> dict:
    """All selected checks on one graph; aborts become ABORTED records."""
    checks = []
    for name in cfg.selected():
        try:
            checks.extend(CHECKS[name][1](g, cfg))
        except SearchAborted as exc:
            checks.append(_result(name, ABORTED, CHECKS[name][0], str(exc)))
    return {"graph6": emit_graph6(g), "n": g.n, "checks": checks}


def _run_graph6(args: tuple[str, RunConfig]) -> dict:
    line, cfg = args
    return run_graph(parse_graph6(line), cfg)


def run_sweep(graphs: Iterable[Graph], cfg: RunConfig) -> dict:
    """SweepReport for ``graphs``; results keep input order whatever ``cfg.jobs`` is."""
    lines = [emit_graph6(g) for g in graphs]
    if cfg.jobs == 1:
        results = [_run_graph6((ln, cfg)) for ln in lines]
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_run_graph6, [(ln, cfg) for ln in lines], chunksize=max(1, len(lines) // (cfg.jobs * 8))))
    aggregate = {"pass": 0, "fail": 0, "vacuous": 0, "aborted": 0}
    counterexamples = []
    for rec in results:
        for chk in rec["checks"]:
            aggregate[chk["verdict"].lower()] += 1
            if chk["verdict"] == FAIL:
                counterexamples.append({"graph6": rec["graph6"], "check": chk["name"], "basis": chk["basis"], "details": chk["details"]})
    report = {"config": cfg.to_json(), "results": results, "counterexamples": counterexamples, "aggregate": aggregate}
    report["summary"] = summarize(report)
    return report


def summarize(report: dict) -> list[str]:
    """One line per check name: PASS, FAIL, or for probes "consistent"/"COUNTEREXAMPLE"."""
    tally: dict[str, dict[str, int]] = {}
    basis: dict[str, str] = {}
    for rec in report["results"]:
        for chk in rec["checks"]:
            t = tally.setdefault(chk["name"], {PASS: 0, FAIL: 0, VACUOUS: 0, ABORTED: 0})
            t[chk["verdict"]] += 1
            basis[chk["name"]] = chk["basis"]
    lines = []
    for name, t in tally.items():
        counts = f"pass={t[PASS]} fail={t[FAIL]} vacuous={t[VACUOUS]} aborted={t[ABORTED]}"
        if basis[name] == CONJECTURE:
            word = "COUNTEREXAMPLE FOUND" if t[FAIL] else "consistent with conjecture on this set"
        else:
            word = "FAIL" if t[FAIL] else "PASS"
        lines.append(f"{name}: {word} ({counts})")
    return lines


def counterexample_path(out: Optional[str]) -> Path:
    if out is None:
        return Path("COUNTEREXAMPLES.json")
    p = Path(out)
    return p.with_name(p.stem + ".COUNTEREXAMPLES.json")


def write_report(report: dict, out: Optional[str]) -> Optional[Path]:
    """Write the report (if ``out``) and, when anything failed, the counterexample file.

    Returns the counterexample file path when one was written.
    """
    if out is not None:
        Path(out).write_text(json.dumps(report, indent=1, sort_keys=True) + "\n")
    if not report["counterexamples"]:
        return None
    path = counterexample_path(out)
    path.write_text(json.dumps(report["counterexamples"], indent=1, sort_keys=True) + "\n")
    return path


def to_tsv(report: dict) -> str:
    rows = ["graph6\tn\tcheck\tverdict\tbasis\tdetails"]
    for rec in report["results"]:
        for chk in rec["checks"]:
            rows.append("\t".join([rec["graph6"], str(rec["n"]), chk["name"], chk["verdict"], chk["basis"], chk["details"]]))
    return "\n".join(rows) + "\n"


# -- soundness gate --------------------------------------------------------


def recheck_witness(g: Graph, chk: dict) -> bool:
    """Re-verify one check's stored witness from scratch."""
    w = chk.get("witness")
    if w is None:
        return chk["verdict"] in (VACUOUS, ABORTED) or chk["basis"] == CONJECTURE or chk["verdict"] == FAIL
    ok = True
    if w["kind"] == "set" or "set" in w:
        target = Target.from_json(w["target"] if "target" in w else w["certificate"]["target"])
        mask = to_mask(w["set"])
        ok &= is_isolating(g, mask, target).passed
        if "value" in w:
            ok &= len(w["set"]) == w["value"]
    if w["kind"] == "coloring":
        coloring = Coloring.from_json(w["coloring"])
        cert = Certificate.from_json(w["certificate"])
        ok &= recheck(g, coloring, cert)
        if chk["verdict"] == PASS:
            ok &= cert.passed
    return bool(ok)


def recheck_report(report: dict) -> list[tuple[str, str]]:
    """(graph6, check name) of every record whose witness does not re-verify."""
    bad = []
    for rec in report["results"]:
        g = parse_graph6(rec["graph6"])
        for chk in rec["checks"]:
            if not recheck_witness(g, chk):
                bad.append((rec["graph6"], chk["name"]))
    return bad
