"""TinyC, the classic single-statement toy language.

    program    ::= statement
    statement  ::= "if" paren_expr statement ["else" statement]
                 | "while" paren_expr statement
                 | "do" statement "while" paren_expr ";"
                 | "{" statement* "}"
                 | expr ";"
                 | ";"
    paren_expr ::= "(" expr ")"
    expr       ::= test | id "=" expr
    test       ::= sum | sum "<" sum
    sum        ::= term | sum "+" term | sum "-" term
    term       ::= id | int | paren_expr

Identifiers are single lowercase letters; a longer run of letters must be a
keyword.  A program is exactly one statement, so ``;;`` is incorrect.

The scanner is an LL(1) predictive parser over tokens, fed by a lexer that
keeps an unfinished word or integer pending.  A pending word is kept alive
only while it can still become a token the parser accepts next.
"""

from __future__ import annotations

from functools import lru_cache

from .base import Scanner

KEYWORDS = ("do", "else", "if", "while")
PUNCT = frozenset("{}();=<+-")
WS = frozenset(b" \t\n\r")

STMT, STMTS, ELSE, PAREN, EXPR, EXPR_ID, SUM_TAIL, TEST_TAIL, SUM, TERM = (
    "<stmt>", "<stmts>", "<else>", "<paren>", "<expr>", "<expr-id>",
    "<sum-tail>", "<test-tail>", "<sum>", "<term>",
)
NULLABLE = frozenset((ELSE, EXPR_ID, SUM_TAIL, TEST_TAIL))
EXPR_FIRST = frozenset(("ID", "INT", "("))
STMT_FIRST = frozenset(("if", "while", "do", "{", ";")) | EXPR_FIRST

# productions are stored reversed, ready to be pushed onto the stack
_TABLE: dict[tuple[str, str], tuple[str, ...]] = {}


def _rule(nonterminal, lookaheads, *rhs):
    for tok in lookaheads:
        _TABLE[nonterminal, tok] = tuple(reversed(rhs))


_rule(STMT, ["if"], "if", PAREN, STMT, ELSE)
_rule(STMT, ["while"], "while", PAREN, STMT)
_rule(STMT, ["do"], "do", STMT, "while", PAREN, ";")
_rule(STMT, ["{"], "{", STMTS)
_rule(STMT, [";"], ";")
_rule(STMT, EXPR_FIRST, EXPR, ";")
_rule(STMTS, ["}"], "}")
_rule(STMTS, STMT_FIRST, STMT, STMTS)
_rule(ELSE, ["else"], "else", STMT)
_rule(PAREN, ["("], "(", EXPR, ")")
_rule(EXPR, ["ID"], "ID", EXPR_ID)
_rule(EXPR, ["INT"], "INT", SUM_TAIL, TEST_TAIL)
_rule(EXPR, ["("], PAREN, SUM_TAIL, TEST_TAIL)
_rule(EXPR_ID, ["="], "=", EXPR)
_rule(EXPR_ID, ["+", "-", "<"], SUM_TAIL, TEST_TAIL)
_rule(SUM_TAIL, ["+"], "+", TERM, SUM_TAIL)
_rule(SUM_TAIL, ["-"], "-", TERM, SUM_TAIL)
_rule(TEST_TAIL, ["<"], "<", SUM)
_rule(SUM, EXPR_FIRST, TERM, SUM_TAIL)
_rule(TERM, ["ID"], "ID")
_rule(TERM, ["INT"], "INT")
_rule(TERM, ["("], PAREN)

NONTERMINALS = frozenset(nt for nt, _ in _TABLE)


@lru_cache(maxsize=65536)
def feed(stack: tuple, tok: str):
    """Parser stack after consuming ``tok``, or None if it is rejected."""
    while stack:
        top = stack[-1]
        stack = stack[:-1]
        if top not in NONTERMINALS:
            return stack if top == tok else None
        rhs = _TABLE.get((top, tok))
        if rhs is None:
            if top in NULLABLE:
                continue
            return None
        stack = stack + rhs
    return None


def accepts(stack: tuple) -> bool:
    return all(sym in NULLABLE for sym in stack)


def _word_token(word: str):
    if word in KEYWORDS:
        return word
    return "ID" if len(word) == 1 else None


@lru_cache(maxsize=65536)
def _word_viable(stack: tuple, word: str) -> bool:
    if len(word) == 1 and feed(stack, "ID") is not None:
        return True
    return any(k.startswith(word) and feed(stack, k) is not None for k in KEYWORDS)


def _flush(stack, pending):
    if not pending:
        return stack
    tok = "INT" if pending[0].isdigit() else _word_token(pending)
    if tok is None:
        return None
    return feed(stack, tok)


def _step(state, c):
    stack, pending = state
    if 0x61 <= c <= 0x7A:
        if pending and pending[0].isdigit():
            stack = feed(stack, "INT")
            if stack is None:
                return None
            pending = ""
        word = pending + chr(c)
        return (stack, word) if _word_viable(stack, word) else None
    if 0x30 <= c <= 0x39:
        if pending and not pending[0].isdigit():
            stack = _flush(stack, pending)
            if stack is None:
                return None
            pending = ""
        if not pending and feed(stack, "INT") is None:
            return None
        return (stack, pending + chr(c))
    stack = _flush(stack, pending)
    if stack is None:
        return None
    if c in WS:
        return (stack, "")
    ch = chr(c)
    if ch not in PUNCT:
        return None
    stack = feed(stack, ch)
    return None if stack is None else (stack, "")


class TinyCScanner(Scanner):
    name = "tinyc"

    def start(self):
        return ((STMT,), "")

    step = staticmethod(_step)

    def at_end(self, state) -> bool:
        stack, pending = state
        stack = _flush(stack, pending)
        return stack is not None and accepts(stack)
