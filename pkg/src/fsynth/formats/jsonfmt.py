"""Strict JSON (RFC 8259 value grammar, no comments, no trailing commas).

State is ``(mode, stack, aux)`` where ``stack`` is a string of ``a``/``o``
for the open arrays and objects.  String bodies are not UTF-8 validated,
mirroring cJSON; raw control bytes inside strings are rejected.
"""

from __future__ import annotations

from .base import Scanner

# modes
VALUE = 0          # expecting a value
VALUE_OR_CLOSE = 1  # just after '['
KEY = 2            # after ',' inside an object
KEY_OR_CLOSE = 3   # just after '{'
COLON = 4
AFTER = 5          # a value just ended
STRING = 6         # aux: 1 for object keys, 0 for values
ESCAPE = 7
UNICODE = 8        # aux: (is_key, hex digits left)
LITERAL = 9        # aux: remaining bytes of true/false/null
N_MINUS = 10
N_ZERO = 11
N_INT = 12
N_DOT = 13
N_FRAC = 14
N_EXP_MARK = 15
N_EXP_SIGN = 16
N_EXP = 17

WS = frozenset(b" \t\n\r")
DIGITS = frozenset(b"0123456789")
HEX = frozenset(b"0123456789abcdefABCDEF")
ESCAPES = frozenset(b'"\\/bfnrt')
NUMBER_END = frozenset((N_ZERO, N_INT, N_FRAC, N_EXP))
LITERALS = {ord("t"): b"rue", ord("f"): b"alse", ord("n"): b"ull"}


def _step(state, c):
    mode, stack, aux = state
    if mode == STRING:
        if c == 0x22:
            return (COLON, stack, 0) if aux else (AFTER, stack, 0)
        if c == 0x5C:
            return (ESCAPE, stack, aux)
        return None if c < 0x20 else state
    if mode == AFTER:
        if c in WS:
            return state
        if not stack:
            return None
        top = stack[-1]
        if c == 0x2C:
            return (VALUE, stack, 0) if top == "a" else (KEY, stack, 0)
        if (c == 0x5D and top == "a") or (c == 0x7D and top == "o"):
            return (AFTER, stack[:-1], 0)
        return None
    if mode == VALUE or mode == VALUE_OR_CLOSE:
        if c in WS:
            return state
        if c == 0x5D and mode == VALUE_OR_CLOSE:
            return (AFTER, stack[:-1], 0)
        return _value_start(stack, c)
    if mode == KEY or mode == KEY_OR_CLOSE:
        if c in WS:
            return state
        if c == 0x22:
            return (STRING, stack, 1)
        if c == 0x7D and mode == KEY_OR_CLOSE:
            return (AFTER, stack[:-1], 0)
        return None
    if mode == COLON:
        if c in WS:
            return state
        return (VALUE, stack, 0) if c == 0x3A else None
    if mode == ESCAPE:
        if c in ESCAPES:
            return (STRING, stack, aux)
        if c == 0x75:
            return (UNICODE, stack, (aux, 4))
        return None
    if mode == UNICODE:
        if c not in HEX:
            return None
        is_key, left = aux
        if left == 1:
            return (STRING, stack, is_key)
        return (UNICODE, stack, (is_key, left - 1))
    if mode == LITERAL:
        if c != aux[0]:
            return None
        if len(aux) == 1:
            return (AFTER, stack, 0)
        return (LITERAL, stack, aux[1:])
    return _number_step(mode, stack, state, c)


def _value_start(stack, c):
    if c == 0x22:
        return (STRING, stack, 0)
    if c == 0x7B:
        return (KEY_OR_CLOSE, stack + "o", 0)
    if c == 0x5B:
        return (VALUE_OR_CLOSE, stack + "a", 0)
    if c == 0x2D:
        return (N_MINUS, stack, 0)
    if c == 0x30:
        return (N_ZERO, stack, 0)
    if c in DIGITS:
        return (N_INT, stack, 0)
    rest = LITERALS.get(c)
    if rest is not None:
        return (LITERAL, stack, rest)
    return None


def _number_step(mode, stack, state, c):
    if mode == N_INT or mode == N_FRAC or mode == N_EXP:
        if c in DIGITS:
            return state
    if mode == N_MINUS:
        if c == 0x30:
            return (N_ZERO, stack, 0)
        return (N_INT, stack, 0) if c in DIGITS else None
    if mode == N_DOT:
        return (N_FRAC, stack, 0) if c in DIGITS else None
    if mode == N_EXP_MARK:
        if c == 0x2B or c == 0x2D:
            return (N_EXP_SIGN, stack, 0)
        return (N_EXP, stack, 0) if c in DIGITS else None
    if mode == N_EXP_SIGN:
        return (N_EXP, stack, 0) if c in DIGITS else None
    if mode == N_ZERO or mode == N_INT:
        if c == 0x2E:
            return (N_DOT, stack, 0)
    if mode != N_EXP and (c == 0x65 or c == 0x45):
        return (N_EXP_MARK, stack, 0)
    # the number ended; the byte belongs to whatever follows it
    return _step((AFTER, stack, 0), c)


class JsonScanner(Scanner):
    name = "json"

    def start(self):
        return (VALUE, "", 0)

    def at_end(self, state) -> bool:
        mode, stack, _ = state
        return not stack and (mode == AFTER or mode in NUMBER_END)

    step = staticmethod(_step)
