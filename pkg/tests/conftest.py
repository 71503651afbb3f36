"""Shared fixtures plus the acceptance-criteria summary.

Tests marked @pytest.mark.acceptance("<criterion>") are tallied per
criterion, and the terminal summary prints one PASS/FAIL line for each
criterion that ran.
"""

import pytest

from airavata import domain
from airavata.learning import DirichletPrior

CRITERIA = (
    "oracle-equivalence",
    "info-gain-table",
    "corpus-census",
    "belief-argmax",
    "belief-equalities",
    "ranking-claim",
    "property-suites",
)


@pytest.fixture(scope="session")
def corpus():
    return domain.generate_dataset()


@pytest.fixture(scope="session")
def canonical_model(corpus):
    return domain.canonical_model(corpus)


@pytest.fixture(scope="session")
def laplace_model(corpus):
    # per-cell pseudo-count of 1, the generic learning default
    return domain.canonical_model(corpus, DirichletPrior(1.0))


def pytest_configure(config):
    config._acceptance_outcomes = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    name = marker.args[0]
    tally = item.config._acceptance_outcomes.setdefault(name, {"passed": 0, "failed": 0})
    if report.when == "call":
        tally["passed" if report.passed else "failed"] += 1
    elif report.failed:  # setup/teardown error counts against the criterion
        tally["failed"] += 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = getattr(config, "_acceptance_outcomes", {})
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in CRITERIA:
        if name not in outcomes:
            continue
        tally = outcomes[name]
        verdict = "PASS" if tally["failed"] == 0 and tally["passed"] > 0 else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {verdict} {name}")
    for name in sorted(set(outcomes) - set(CRITERIA)):
        tally = outcomes[name]
        verdict = "PASS" if tally["failed"] == 0 and tally["passed"] > 0 else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {verdict} {name}")
