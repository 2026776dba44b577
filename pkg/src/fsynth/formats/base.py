"""Shared shape of the format scanners.

A scanner is a left-to-right automaton over bytes with immutable states:

* ``start()`` returns the state for the empty input,
* ``step(state, byte)`` returns the successor state, or ``None`` once no
  suffix can lead to a valid input,
* ``at_end(state)`` tells whether the bytes consumed so far form a
  complete input.

Dead is final, which gives the incorrectness monotonicity the repair
search relies on.
"""

from __future__ import annotations

from ..oracle import COMPLETE, INCOMPLETE, INCORRECT, Verdict


class Scanner:
    name = ""

    def start(self):
        raise NotImplementedError

    def step(self, state, c: int):
        raise NotImplementedError

    def at_end(self, state) -> bool:
        raise NotImplementedError

    def classify(self, data: bytes) -> Verdict:
        state = self.start()
        step = self.step
        for c in data:
            state = step(state, c)
            if state is None:
                return INCORRECT
        return COMPLETE if self.at_end(state) else INCOMPLETE

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"
