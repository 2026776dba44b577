"""S-expressions: exactly one top-level datum.

A datum is an atom, a double-quoted string (backslash escapes any byte)
or a parenthesized list of data.  Atoms are runs of letters, digits and
``-+*/_.!?<>=:%&~^$@``; any other non-blank byte outside a string is
illegal.  State is ``(mode, depth)``.
"""

from __future__ import annotations

from .base import Scanner

BETWEEN = 0   # between data (or before the first one)
ATOM = 1
STRING = 2
ESCAPE = 3
DONE = 4      # top-level datum finished

WS = frozenset(b" \t\n\r")
ATOM_BYTES = frozenset(
    b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
    b"-+*/_.!?<>=:%&~^$@"
)
OPEN, CLOSE, QUOTE, BACKSLASH = 0x28, 0x29, 0x22, 0x5C


def _between(depth, c):
    if c in WS:
        return (BETWEEN, depth) if depth else None
    if c == OPEN:
        return (BETWEEN, depth + 1)
    if c == CLOSE:
        if depth == 0:
            return None
        return (DONE, 0) if depth == 1 else (BETWEEN, depth - 1)
    if c == QUOTE:
        return (STRING, depth)
    if c in ATOM_BYTES:
        return (ATOM, depth)
    return None


def _step(state, c):
    mode, depth = state
    if mode == STRING:
        if c == QUOTE:
            return (DONE, 0) if depth == 0 else (BETWEEN, depth)
        return (ESCAPE, depth) if c == BACKSLASH else state
    if mode == ESCAPE:
        return (STRING, depth)
    if mode == ATOM:
        if c in ATOM_BYTES:
            return state
        if depth == 0:
            return (DONE, 0) if c in WS else None
        return _between(depth, c)
    if mode == DONE:
        return state if c in WS else None
    # BETWEEN; leading blanks before the top-level datum are fine
    if depth == 0 and c in WS:
        return state
    return _between(depth, c)


class SexpScanner(Scanner):
    name = "sexp"

    def start(self):
        return (BETWEEN, 0)

    step = staticmethod(_step)

    def at_end(self, state) -> bool:
        mode, depth = state
        return mode == DONE or (mode == ATOM and depth == 0)
