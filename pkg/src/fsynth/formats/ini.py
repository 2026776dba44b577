"""Line-oriented INI.

Accepted lines: blank, ``;``/``#`` comments, ``[section]`` headers with a
non-empty name (optionally followed by blanks and a comment) and
``key=value`` pairs with a non-empty key.  Keys may appear before the first
section.  The only way to be incomplete is an unfinished section header or
key on the last line; everything else either ends cleanly or is wrong.
"""

from __future__ import annotations

from .base import Scanner

LINE_START = 0
COMMENT = 1
SECTION_OPEN = 2   # right after '['
SECTION = 3
SECTION_DONE = 4   # after ']'
KEY = 5
VALUE = 6

BLANK = frozenset(b" \t\r")
NL = 0x0A
COMMENT_START = frozenset(b";#")
# control bytes other than tab, CR and LF are never accepted
CONTROL = frozenset(set(range(0x20)) - {0x09, 0x0A, 0x0D}) | {0x7F}
NOT_IN_KEY = frozenset(b"=[];#\n") | CONTROL
NOT_IN_SECTION = frozenset(b"[]\n") | CONTROL
COMPLETE_MODES = frozenset((LINE_START, COMMENT, SECTION_DONE, VALUE))


def _step(state, c):
    if state == VALUE or state == COMMENT:
        if c == NL:
            return LINE_START
        return None if c in CONTROL else state
    if state == LINE_START:
        if c in BLANK or c == NL:
            return LINE_START
        if c in COMMENT_START:
            return COMMENT
        if c == 0x5B:
            return SECTION_OPEN
        return None if c in NOT_IN_KEY else KEY
    if state == KEY:
        if c == 0x3D:
            return VALUE
        return None if c in NOT_IN_KEY else KEY
    if state == SECTION_OPEN or state == SECTION:
        if c == 0x5D:
            return SECTION_DONE if state == SECTION else None
        return None if c in NOT_IN_SECTION else SECTION
    # SECTION_DONE
    if c in BLANK:
        return state
    if c == NL:
        return LINE_START
    return COMMENT if c in COMMENT_START else None


class IniScanner(Scanner):
    name = "ini"

    def start(self):
        return LINE_START

    step = staticmethod(_step)

    def at_end(self, state) -> bool:
        return state in COMPLETE_MODES
