"""Seeded producers of valid inputs, one per format.

Used to build the shipped corpus and by the property tests.  Every
producer takes a :class:`random.Random` and a rough size hint in bytes.
"""

from __future__ import annotations

import random
import string

WORDS = (
    "alpha beta gamma delta name age item price city color value host port "
    "user path mode level count total debug enabled title note red blue"
).split()


def _word(rng: random.Random) -> str:
    return rng.choice(WORDS)


def _json_value(rng: random.Random, depth: int, budget: list[int]) -> str:
    budget[0] -= 1
    roll = rng.random()
    if depth > 0 and budget[0] > 0 and roll < 0.35:
        if rng.random() < 0.5:
            n = rng.randint(0, 4)
            items = [_json_value(rng, depth - 1, budget) for _ in range(n)]
            return "[" + rng.choice([",", ", "]).join(items) + "]"
        n = rng.randint(0, 4)
        sep = rng.choice([": ", ":"])
        pairs = [f'"{_word(rng)}"{sep}{_json_value(rng, depth - 1, budget)}' for _ in range(n)]
        return "{" + rng.choice([", ", ","]).join(pairs) + "}"
    if roll < 0.55:
        text = " ".join(_word(rng) for _ in range(rng.randint(1, 3)))
        if rng.random() < 0.2:
            text += rng.choice(["\\n", "\\\"", ",", "1,2,3", "\\u00e9"])
        return f'"{text}"'
    if roll < 0.75:
        return str(rng.randint(-500, 5000))
    if roll < 0.85:
        return f"{rng.uniform(-100, 100):.{rng.randint(1, 3)}f}"
    return rng.choice(["true", "false", "null"])


def gen_json(rng: random.Random, size: int = 120) -> bytes:
    budget = [max(2, size // 12)]
    pairs = []
    while budget[0] > 0 or not pairs:
        pairs.append(f'"{_word(rng)}": {_json_value(rng, 3, budget)}')
    text = "{" + ", ".join(pairs) + "}"
    if rng.random() < 0.3:
        text += "\n"
    return text.encode()


def gen_ini(rng: random.Random, size: int = 120) -> bytes:
    lines: list[str] = []
    total = 0
    if rng.random() < 0.3:
        lines.append(rng.choice(["; generated settings", "# config"]))
    while total < size or not lines:
        if rng.random() < 0.3 or not lines:
            line = f"[{_word(rng)}]"
        elif rng.random() < 0.1:
            line = rng.choice(["", "; " + _word(rng), "# " + _word(rng)])
        else:
            value = rng.choice([
                str(rng.randint(0, 9999)),
                _word(rng),
                " ".join(_word(rng) for _ in range(2)),
                "/" + "/".join(_word(rng) for _ in range(2)),
            ])
            eq = rng.choice(["=", " = ", "= "])
            line = f"{_word(rng)}{eq}{value}"
        lines.append(line)
        total += len(line) + 1
    return ("\n".join(lines) + "\n").encode()


def _sexp(rng: random.Random, depth: int, budget: list[int]) -> str:
    budget[0] -= 1
    if depth > 0 and budget[0] > 0 and rng.random() < 0.45:
        n = rng.randint(1, 4)
        return "(" + " ".join(_sexp(rng, depth - 1, budget) for _ in range(n)) + ")"
    roll = rng.random()
    if roll < 0.5:
        return _word(rng) + rng.choice(["", "", "-" + _word(rng), "?", "!"])
    if roll < 0.75:
        return str(rng.randint(-99, 999))
    return '"' + " ".join(_word(rng) for _ in range(rng.randint(1, 2))) + '"'


def gen_sexp(rng: random.Random, size: int = 120) -> bytes:
    budget = [max(3, size // 7)]
    items = [_word(rng)]
    while budget[0] > 0:
        items.append(_sexp(rng, 3, budget))
    return ("(" + " ".join(items) + ")").encode()


_IDS = string.ascii_lowercase


def _tc_term(rng, depth):
    roll = rng.random()
    if depth > 0 and roll < 0.15:
        return f"({_tc_expr(rng, depth - 1)})"
    if roll < 0.6:
        return rng.choice(_IDS)
    return str(rng.randint(0, 99))


def _tc_sum(rng, depth):
    out = _tc_term(rng, depth)
    for _ in range(rng.randint(0, 2)):
        out += rng.choice(["+", "-", " + ", " - "]) + _tc_term(rng, depth)
    return out


def _tc_test(rng, depth):
    if rng.random() < 0.4:
        return _tc_sum(rng, depth) + rng.choice(["<", " < "]) + _tc_sum(rng, depth)
    return _tc_sum(rng, depth)


def _tc_expr(rng, depth):
    if rng.random() < 0.3:
        return rng.choice(_IDS) + rng.choice(["=", " = "]) + _tc_test(rng, depth)
    return _tc_test(rng, depth)


def _tc_stmt(rng, depth, budget, indent):
    budget[0] -= 1
    pad = "  " * indent
    roll = rng.random()
    if depth > 0 and budget[0] > 0 and roll < 0.45:
        kind = rng.choice(["if", "ifelse", "while", "do", "block"])
        cond = _tc_expr(rng, 1)
        if kind == "if":
            return f"{pad}if ({cond})\n{_tc_stmt(rng, depth - 1, budget, indent + 1)}"
        if kind == "ifelse":
            a = _tc_stmt(rng, depth - 1, budget, indent + 1)
            b = _tc_stmt(rng, depth - 1, budget, indent + 1)
            return f"{pad}if ({cond})\n{a}\n{pad}else\n{b}"
        if kind == "while":
            return f"{pad}while ({cond})\n{_tc_stmt(rng, depth - 1, budget, indent + 1)}"
        if kind == "do":
            body = _tc_stmt(rng, depth - 1, budget, indent + 1)
            return f"{pad}do\n{body}\n{pad}while ({cond});"
        return _tc_block(rng, depth - 1, budget, indent)
    if roll < 0.95:
        return f"{pad}{rng.choice(_IDS)}={_tc_test(rng, 1)};"
    return f"{pad};"


def _tc_block(rng, depth, budget, indent):
    pad = "  " * indent
    body = []
    while budget[0] > 0 and len(body) < 6:
        body.append(_tc_stmt(rng, depth, budget, indent + 1))
        if rng.random() < 0.2:
            break
    if not body:
        body.append(_tc_stmt(rng, 0, budget, indent + 1))
    return pad + "{\n" + "\n".join(body) + "\n" + pad + "}"


def gen_tinyc(rng: random.Random, size: int = 120) -> bytes:
    budget = [max(2, size // 14)]
    return (_tc_block(rng, 3, budget, 0) + "\n").encode()


GENERATORS = {
    "json": gen_json,
    "ini": gen_ini,
    "sexp": gen_sexp,
    "tinyc": gen_tinyc,
}


def generate(fmt: str, rng: random.Random, size: int = 120) -> bytes:
    return GENERATORS[fmt](rng, size)
