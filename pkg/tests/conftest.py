import random

import pytest
from hypothesis import settings

from fsynth.oracle import OracleSession


# timing on a shared single core is noisy; correctness is what matters here
settings.register_profile("fsynth", deadline=None)
settings.load_profile("fsynth")


class RecordingSession(OracleSession):
    """Session that remembers every queried byte string."""

    def __init__(self, fmt, **kw):
        super().__init__(fmt, **kw)
        self.queries = []

    def feedback(self, data):
        self.queries.append(bytes(data))
        return super().feedback(data)


@pytest.fixture
def json_session():
    return OracleSession("json")


@pytest.fixture
def recording():
    return RecordingSession


@pytest.fixture
def rng():
    return random.Random(1234)


CRITERIA = {
    "test_table_one_fixtures": "Table 1 fixtures",
    "test_delete_only_trace": "Delete-only trace",
    "test_ddmax_failure_traces": "DDMax failure traces",
    "test_ddmax_bugfix_inputs": "DDMax bugfix inputs",
    "test_soundness_suite": "Soundness suite",
    "test_minimality_oracle": "Minimality oracle",
    "test_directional_trend": "Directional trend",
    "test_binary_search_call_bound": "Oracle-call efficiency",
    "test_metrics": "Metrics",
    "test_cli_bench_determinism": "CLI end-to-end determinism",
}


def pytest_terminal_summary(terminalreporter):
    results = {}
    for reports in terminalreporter.stats.values():
        for rep in reports:
            if getattr(rep, "when", None) != "call" or "test_acceptance.py" not in rep.nodeid:
                continue
            name = rep.nodeid.rsplit("::", 1)[-1]
            ok = rep.passed
            detail = dict(rep.user_properties).get("detail", "")
            results[name] = (ok, detail)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in CRITERIA.items():
        if name in results:
            ok, detail = results[name]
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
