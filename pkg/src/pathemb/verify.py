"""Seeded cross-checks of every decider and reduction against brute force.

Each check draws its instances from its own ``random.Random`` seeded by
the configured seed and the check name, so checks are reproducible in
isolation.  Reports are JSON with a fixed key order; wall-clock timings
are kept out of the serialized report unless explicitly requested, so
the same seed yields byte-identical output.
"""

from __future__ import annotations

import json
import random
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Optional

from .analysis import (
    critical_bound,
    critical_edges,
    max_degree,
    per_edge_degrees,
    two_var_atom_count,
    unfoldable_edges,
)
from .families import gen_family
from .generate import FAMILIES, random_ac_instance, random_graph, random_tail_instance
from .io import dump_graph, dump_structure
from .reductions import (
    GadgetSpec,
    build_B,
    make_P_kl,
    reduce_longshort,
    select_X_case1,
    select_X_case2,
)
from .solvers.brute import brute_force_embedding, is_embedding
from .solvers.colour_coding import DEFAULT_K_MAX, embed_AC
from .solvers.paths import LongShortInstance, solve_longshort, solve_ustcon
from .solvers.tails import embed_B

METHODS = ("ac", "tail")
CHECK_NAMES = ("ac_vs_brute", "tail_vs_brute", "ustcon_round_trip", "longshort_round_trip", "analysis_facts")


@dataclass(frozen=True)
class VerificationConfig:
    seed: int = 1
    instance_count: int = 10
    max_k: int = 5
    max_n: int = 7
    families: tuple[str, ...] = FAMILIES
    methods: tuple[str, ...] = METHODS
    k_max: int = DEFAULT_K_MAX
    multiplier: float = 1.0

    def __post_init__(self) -> None:
        if self.max_k < 3:
            raise ValueError("max_k must be at least 3")
        if self.max_n < self.max_k:
            raise ValueError("max_n must be at least max_k")
        if self.instance_count < 1:
            raise ValueError("instance_count must be at least 1")
        if not self.families or set(self.families) - set(FAMILIES):
            raise ValueError(f"families must be a non-empty subset of {FAMILIES}")
        if set(self.methods) - set(METHODS):
            raise ValueError(f"methods must be a subset of {METHODS}")


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: Optional[dict] = None
    seconds: float = 0.0

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "counterexample": self.counterexample,
        }
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class VerificationReport:
    config: VerificationConfig
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.checks)

    def to_dict(self, timings: bool = False) -> dict:
        cfg = self.config
        return {
            "config": {
                "seed": cfg.seed,
                "instance_count": cfg.instance_count,
                "max_k": cfg.max_k,
                "max_n": cfg.max_n,
                "families": list(cfg.families),
                "methods": list(cfg.methods),
                "k_max": cfg.k_max,
                "log_base_multiplier": cfg.multiplier,
            },
            "checks": [c.to_dict(timings) for c in self.checks],
            "ok": self.ok,
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2) + "\n"


# Each trial returns None on success or a serialized counterexample.
Trial = Callable[[random.Random], Optional[dict]]


def _emb_case(P, B, expected, got, **extra) -> dict:
    return {"P.json": dump_structure(P.base), "B.json": dump_structure(B),
            "expected": expected, "got": got, **extra}


def _agrees(P, B, witness) -> Optional[tuple[bool, bool]]:
    truth = brute_force_embedding(P.base, B) is not None
    found = witness is not None
    if truth != found or (found and not is_embedding(P.base, B, witness)):
        return truth, found
    return None


def _ac_trial(cfg: VerificationConfig) -> Trial:
    def trial(rng):
        P, B = random_ac_instance(rng, cfg.families, cfg.max_k, cfg.max_n)
        w = embed_AC(P, B, k_max=cfg.k_max, multiplier=cfg.multiplier)
        bad = _agrees(P, B, w)
        return _emb_case(P, B, *bad, method="ac") if bad else None

    return trial


def _tail_trial(cfg: VerificationConfig) -> Trial:
    def trial(rng):
        P, B, C = random_tail_instance(rng, cfg.max_k, cfg.max_n)
        w = embed_B(P, B, C, k_max=cfg.k_max, multiplier=cfg.multiplier)
        bad = _agrees(P, B, w)
        return _emb_case(P, B, *bad, method="tail", C=C) if bad else None

    return trial


def _graph_size(rng: random.Random, cfg: VerificationConfig) -> int:
    return rng.randint(2, max(2, min(8, cfg.max_n)))


def ustcon_case(rng: random.Random, case: int, n: int, max_ell: int = 3):
    """Random ustcon instance plus the gadget pattern for ``case``.

    Case 1 uses a family-2 member with at least ell unfoldable edges, case 2
    a family-3 member with an edge of degree ell; sizes are the smallest
    that qualify, or one more.
    """
    G = random_graph(rng, n)
    s, t = rng.randrange(n), rng.randrange(n)
    ell = rng.randint(0, max_ell)
    if case == 1:
        P = gen_family(2, max(3, 2 * ell + 1) + rng.randint(0, 1))
        X = select_X_case1(P, ell)
    else:
        P = gen_family(3, max(3, ell + 2) + rng.randint(0, 1))
        X = select_X_case2(P, ell)
    return G, s, t, ell, P, X


def _ustcon_trial(cfg: VerificationConfig) -> Trial:
    counter = iter(range(10**9))

    def trial(rng):
        case = 1 + next(counter) % 2
        G, s, t, ell, P, X = ustcon_case(rng, case, _graph_size(rng, cfg))
        B = build_B(GadgetSpec(G, P, X, s, t))
        expected = solve_ustcon(G, s, t, ell)
        got = brute_force_embedding(P.base, B) is not None
        if expected == got:
            return None
        return {"G.edges": dump_graph(G), "s": s, "t": t, "l": ell, "case": case,
                "P.json": dump_structure(P.base), "expected": expected, "got": got}

    return trial


def longshort_case(rng: random.Random, n: int, max_ell: int = 4):
    G = random_graph(rng, n)
    s, t = rng.randrange(n), rng.randrange(n)
    ell = rng.randint(1, max_ell)
    k = rng.randrange(ell)
    return G, s, t, k, ell


def _longshort_trial(cfg: VerificationConfig) -> Trial:
    def trial(rng):
        G, s, t, k, ell = longshort_case(rng, _graph_size(rng, cfg))
        P, Gp = reduce_longshort(G, s, t, k, ell)
        expected = solve_longshort(LongShortInstance(G, s, t, k, ell))
        got = brute_force_embedding(P.base, Gp) is not None
        if expected == got:
            return None
        return {"G.edges": dump_graph(G), "s": s, "t": t, "k": k, "l": ell,
                "expected": expected, "got": got}

    return trial


def analysis_violations(family: str, size: int, rng: random.Random | None = None) -> list[str]:
    """Structural facts that must hold for a generated structure; returns the broken ones."""
    if family == "Pkl":
        k = (rng or random.Random(0)).randrange(size - 1)
        P = make_P_kl(k, size - 1)
    else:
        P = gen_family(int(family), size)
    degrees = per_edge_degrees(P)
    unf = unfoldable_edges(P)
    crit = critical_edges(P)
    broken = []
    if family in ("1", "4") and sum(degrees) != 0:
        broken.append("degree 0")
    if family == "2" and unf != list(range(2, P.k, 2)):
        broken.append("even edges unfoldable")
    if family == "3":
        if unf != [P.k - 1] or max_degree(P, P.k - 1) != P.k - 2:
            broken.append("only the last edge unfoldable, of degree k-2")
    if family in ("3", "4") and size >= 4 and len(crit) != 2:
        broken.append("two critical edges")
    if family == "Pkl":
        expect = [k + 2] if k + 3 <= size else []
        if unf != expect or any(d > 1 for d in degrees):
            broken.append("P_kl unfoldable edges")
    if P.k >= 3 and 2 not in crit:
        broken.append("e2 critical")
    if len(crit) > critical_bound(len(unf), two_var_atom_count(P.vocabulary)):
        broken.append("critical bound")
    return broken


def _analysis_trial(cfg: VerificationConfig) -> Trial:
    def trial(rng):
        family = rng.choice(list(cfg.families))
        size = rng.randint(3, 12)
        broken = analysis_violations(family, size, rng)
        return {"family": family, "size": size, "violations": broken} if broken else None

    return trial


def _run_check(name: str, trial: Trial, cfg: VerificationConfig) -> CheckResult:
    rng = random.Random(f"{cfg.seed}:{name}")
    result = CheckResult(name)
    start = time.perf_counter()
    for _ in range(cfg.instance_count):
        bad = trial(rng)
        if bad is None:
            result.passed += 1
        else:
            result.failed += 1
            if result.counterexample is None:
                result.counterexample = bad
    result.seconds = time.perf_counter() - start
    return result


def run_verification(cfg: VerificationConfig) -> VerificationReport:
    builders = {
        "ac_vs_brute": _ac_trial,
        "tail_vs_brute": _tail_trial,
        "ustcon_round_trip": _ustcon_trial,
        "longshort_round_trip": _longshort_trial,
        "analysis_facts": _analysis_trial,
    }
    skipped = {"ac_vs_brute": "ac", "tail_vs_brute": "tail"}
    report = VerificationReport(cfg)
    for name in CHECK_NAMES:
        if name in skipped and skipped[name] not in cfg.methods:
            continue
        report.checks.append(_run_check(name, builders[name](cfg), cfg))
    return report
