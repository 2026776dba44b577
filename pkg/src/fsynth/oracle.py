"""Three-valued parser feedback and oracle-run accounting.

Every format oracle classifies a byte sequence as complete (valid),
incomplete (a strict prefix of some valid input) or incorrect (no suffix
can make it valid).  All repair algorithms talk to a format exclusively
through an :class:`OracleSession`, which counts invocations and enforces
optional run and wall-clock budgets.
"""

from __future__ import annotations

import enum
import time


class Verdict(enum.Enum):
    COMPLETE = "complete"
    INCOMPLETE = "incomplete"
    INCORRECT = "incorrect"

    def __str__(self) -> str:
        return self.value


COMPLETE = Verdict.COMPLETE
INCOMPLETE = Verdict.INCOMPLETE
INCORRECT = Verdict.INCORRECT


class BudgetExhausted(Exception):
    """Raised when a session runs out of oracle runs or wall-clock time."""

    def __init__(self, reason: str, runs: int):
        super().__init__(f"{reason} after {runs} oracle runs")
        self.reason = reason
        self.runs = runs


_MISSING = object()
_DEAD = None


class OracleSession:
    """Counts and answers feedback queries for one format.

    Verdicts are pure functions of the bytes, so the session memoizes the
    scanner state reached after each queried prefix.  A query whose bytes
    extend a previously queried prefix by one byte resumes from the stored
    state instead of rescanning.  This is invisible to callers apart from
    speed: every query still counts as one oracle run.
    """

    def __init__(self, fmt: str, budget: int | None = None,
                 deadline: float | None = None, cache_limit: int = 200_000):
        from .formats import get_format

        self.format = fmt
        self.scanner = get_format(fmt)
        self.budget = budget
        self.deadline = deadline
        self.run_count = 0
        self._cache_limit = cache_limit
        self._states: dict[bytes, object] = {}

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_states"] = {}
        del state["scanner"]
        return state

    def __setstate__(self, state):
        from .formats import get_format

        self.__dict__.update(state)
        self.scanner = get_format(self.format)

    def set_timeout(self, seconds: float | None) -> None:
        self.deadline = None if seconds is None else time.monotonic() + seconds

    def feedback(self, data: bytes) -> Verdict:
        if self.budget is not None and self.run_count >= self.budget:
            raise BudgetExhausted("run budget exhausted", self.run_count)
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExhausted("timeout", self.run_count)
        self.run_count += 1
        return self._verdict(bytes(data))

    def check_prefix(self, data: bytes, b: int) -> Verdict:
        if not 0 <= b <= len(data):
            raise IndexError(f"prefix length {b} outside 0..{len(data)}")
        return self.feedback(data[:b])

    def pass_fail(self, data: bytes) -> bool:
        return self.feedback(data) is COMPLETE

    def _verdict(self, data: bytes) -> Verdict:
        states = self._states
        state = states.get(data, _MISSING)
        if state is _MISSING:
            if not data:
                parent = _MISSING
            else:
                head = data[:-1]
                parent = states.get(head, _MISSING)
                if parent is _MISSING:
                    # siblings that differ only in the last byte will want this
                    parent = states[head] = self._scan(head)
            if parent is _MISSING:
                state = self.scanner.start()
            elif parent is _DEAD:
                state = _DEAD
            else:
                state = self.scanner.step(parent, data[-1])
            if len(states) >= self._cache_limit:
                states.clear()
            states[data] = state
        if state is _DEAD:
            return INCORRECT
        return COMPLETE if self.scanner.at_end(state) else INCOMPLETE

    def _scan(self, data: bytes):
        step = self.scanner.step
        state = self.scanner.start()
        for c in data:
            state = step(state, c)
            if state is None:
                return _DEAD
        return state


def feedback(session: OracleSession, data: bytes) -> Verdict:
    return session.feedback(data)


def check_prefix(session: OracleSession, data: bytes, b: int) -> Verdict:
    return session.check_prefix(data, b)


def pass_fail(session: OracleSession, data: bytes) -> bool:
    return session.pass_fail(data)
