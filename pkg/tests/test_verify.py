import json
import random

import pytest

from pathemb.generate import FAMILIES
from pathemb.reductions import GadgetSpec, build_B
from pathemb.solvers.brute import brute_force_embedding
from pathemb.solvers.paths import solve_ustcon
from pathemb.verify import (
    VerificationConfig,
    analysis_violations,
    run_verification,
    ustcon_case,
)

CHECKS = ["ac_vs_brute", "tail_vs_brute", "ustcon_round_trip", "longshort_round_trip", "analysis_facts"]


@pytest.fixture(scope="module")
def report():
    return run_verification(VerificationConfig(seed=1, instance_count=10, max_k=5, max_n=7))


def test_default_config_passes_every_check(report):
    assert [c.name for c in report.checks] == CHECKS
    assert report.ok
    for check in report.checks:
        assert check.passed + check.failed == 10
        assert (check.counterexample is not None) == (check.failed > 0)


def test_reports_are_reproducible(report):
    again = run_verification(VerificationConfig(seed=1, instance_count=10, max_k=5, max_n=7))
    assert again.to_json() == report.to_json()


def test_report_layout(report):
    data = json.loads(report.to_json())
    assert list(data) == ["config", "checks", "ok"]
    assert "seconds" not in data["checks"][0]
    assert "seconds" in json.loads(report.to_json(timings=True))["checks"][0]


def test_method_selection_skips_checks():
    rep = run_verification(VerificationConfig(instance_count=2, methods=("tail",)))
    assert "ac_vs_brute" not in [c.name for c in rep.checks]


@pytest.mark.parametrize(
    "kwargs",
    [
        {"max_k": 2},
        {"max_k": 6, "max_n": 5},
        {"instance_count": 0},
        {"families": ()},
        {"families": ("7",)},
        {"methods": ("fast",)},
    ],
)
def test_config_invariants(kwargs):
    with pytest.raises(ValueError):
        VerificationConfig(**kwargs)


@pytest.mark.parametrize("case", [1, 2])
def test_ustcon_cases_round_trip(case):
    rng = random.Random(case)
    for _ in range(15):
        G, s, t, ell, P, X = ustcon_case(rng, case, 5)
        B = build_B(GadgetSpec(G, P, X, s, t))
        assert (brute_force_embedding(P.base, B) is not None) == solve_ustcon(G, s, t, ell)


@pytest.mark.parametrize("family", FAMILIES)
def test_checked_analysis_facts_hold(family):
    for size in range(3, 13):
        assert analysis_violations(family, size, random.Random(size)) == []
