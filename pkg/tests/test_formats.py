import json
import random
import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fsynth.formats import (
    FORMATS,
    classify_ini,
    classify_json,
    classify_sexp,
    classify_tinyc,
)
from fsynth.formats.generate import generate
from fsynth.oracle import COMPLETE, INCOMPLETE, INCORRECT

CASES = [
    (classify_json, b'{"ABCD":[', INCOMPLETE),
    (classify_json, b'{"ABCD":[*', INCORRECT),
    (classify_json, b'{"ABCD":["1,2,3,4,5,6"]}', COMPLETE),
    (classify_json, b"", INCOMPLETE),
    (classify_json, b"1", COMPLETE),
    (classify_json, b"12", COMPLETE),
    (classify_json, b"1*", INCORRECT),
    (classify_json, b"[1,]", INCORRECT),
    (classify_json, b'{"a":1,}', INCORRECT),
    (classify_json, b"// c", INCORRECT),
    (classify_json, b'"\\u00e', INCOMPLETE),
    (classify_json, b'"a\nb"', INCORRECT),
    (classify_json, b"-0.5e-3 ", COMPLETE),
    (classify_json, b"\xff", INCORRECT),
    (classify_json, b'"\xff\xfe"', COMPLETE),
    (classify_ini, b"", COMPLETE),
    (classify_ini, b"[sec", INCOMPLETE),
    (classify_ini, b"[]x=1", INCORRECT),
    (classify_ini, b"[s]\nk=v\n; note\n# x\n\n", COMPLETE),
    (classify_ini, b"k", INCOMPLETE),
    (classify_ini, b"k\n", INCORRECT),
    (classify_ini, b"=v", INCORRECT),
    (classify_ini, b"[s] junk", INCORRECT),
    (classify_ini, b"[s] ; fine", COMPLETE),
    (classify_ini, b"k=\x01", INCORRECT),
    (classify_sexp, b"(a (b c))", COMPLETE),
    (classify_sexp, b"(a (b", INCOMPLETE),
    (classify_sexp, b")", INCORRECT),
    (classify_sexp, b"", INCOMPLETE),
    (classify_sexp, b"atom", COMPLETE),
    (classify_sexp, b'("unterminated', INCOMPLETE),
    (classify_sexp, b"(a) (b)", INCORRECT),
    (classify_sexp, b"(a #)", INCORRECT),
    (classify_sexp, b'(a "x\\"y" -1.5)', COMPLETE),
    (classify_tinyc, b"{i=1;}", COMPLETE),
    (classify_tinyc, b"{i=1;", INCOMPLETE),
    (classify_tinyc, b";;", INCORRECT),
    (classify_tinyc, b";", COMPLETE),
    (classify_tinyc, b"", INCOMPLETE),
    (classify_tinyc, b"if (a<b) c=1; else c=2;", COMPLETE),
    (classify_tinyc, b"if (a<b) c=1; el", INCOMPLETE),
    (classify_tinyc, b"if (a<b) c=1; x", INCORRECT),
    (classify_tinyc, b"do i=i+1; while (i<10);", COMPLETE),
    (classify_tinyc, b"ab=1;", INCORRECT),
    (classify_tinyc, b"whilex", INCORRECT),
    (classify_tinyc, b"a<b<c;", INCORRECT),
    (classify_tinyc, b"a=b=(c+1)-2;", COMPLETE),
    (classify_tinyc, b"A=1;", INCORRECT),
]


@pytest.mark.parametrize("classify, data, verdict", CASES)
def test_examples(classify, data, verdict):
    assert classify(data) is verdict


# Incomplete fixtures paired with a suffix that completes them.
COMPLETIONS = [
    ("json", b'{"a": [1, {"b": "x', b'"}]}'),
    ("json", b"-", b"1"),
    ("json", b"1.", b"5"),
    ("json", b"tr", b"ue"),
    ("json", b'"\\u00', b'e9"'),
    ("ini", b"[sec", b"]"),
    ("ini", b"key", b"=v"),
    ("sexp", b'(a ("b', b'"))'),
    ("sexp", b"", b"x"),
    ("tinyc", b"{ if (a", b") b=1; }"),
    ("tinyc", b"do x=1; wh", b"ile (x);"),
    ("tinyc", b"", b";"),
]


@pytest.mark.parametrize("fmt, prefix, suffix", COMPLETIONS)
def test_incomplete_has_a_completion(fmt, prefix, suffix):
    scanner = FORMATS[fmt]
    assert scanner.classify(prefix) is INCOMPLETE
    assert scanner.classify(prefix + suffix) is COMPLETE


@pytest.mark.parametrize("fmt", sorted(FORMATS))
def test_prefixes_of_valid_inputs_are_never_incorrect(fmt):
    scanner = FORMATS[fmt]
    rng = random.Random(f"prefix:{fmt}")
    for _ in range(10_000):
        data = generate(fmt, rng, rng.randint(10, 200))
        state = scanner.start()
        for c in data:
            state = scanner.step(state, c)
            assert state is not None, data
        assert scanner.at_end(state), data


FUZZ_BYTES = {
    "json": b'{}[]",:0123456789-.eE+ \ntrufalsn\\u',
    "ini": b"[]=;#\n \tabck1",
    "sexp": b'() "\\ab1-#',
    "tinyc": b"{}();=<+- \nabdefhilosw01",
}


@settings(max_examples=400, deadline=None)
@given(data=st.data(), fmt=st.sampled_from(sorted(FORMATS)))
def test_incorrect_is_prefix_monotone(data, fmt):
    alphabet = st.sampled_from(list(FUZZ_BYTES[fmt]))
    head = bytes(data.draw(st.lists(alphabet, max_size=20)))
    tail = data.draw(st.binary(max_size=10) | st.lists(alphabet, max_size=10).map(bytes))
    scanner = FORMATS[fmt]
    if scanner.classify(head) is INCORRECT:
        assert scanner.classify(head + tail) is INCORRECT


def _json_loads_ok(data: bytes) -> bool:
    try:
        json.loads(data.decode("ascii"))
    except (ValueError, UnicodeDecodeError):
        return False
    return True


@settings(max_examples=2000, deadline=None)
@given(st.lists(st.sampled_from([bytes([c]) for c in FUZZ_BYTES["json"]] + [b"true", b"null", b'"k"']),
                max_size=14).map(b"".join))
def test_json_complete_agrees_with_stdlib(data):
    assert (classify_json(data) is COMPLETE) == _json_loads_ok(data)


# An independent recursive-descent recognizer for TinyC over tokens.
_TOKEN = re.compile(rb"\s*(?:([a-z]+)|([0-9]+)|([{}();=<+\-]))")


def _tokens(data):
    out, pos = [], 0
    while True:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if pos == len(data):
            return out
        m = _TOKEN.match(data, pos)
        if not m:
            return None
        word, num, punct = m.groups()
        if word is not None:
            if word.decode() in ("if", "else", "while", "do"):
                out.append(word.decode())
            elif len(word) == 1:
                out.append("ID")
            else:
                return None
        elif num is not None:
            out.append("INT")
        else:
            out.append(punct.decode())
        pos = m.end()


class _Reject(Exception):
    pass


def _tinyc_ok(data):
    toks = _tokens(data)
    if toks is None:
        return False
    pos = 0

    def peek(k=0):
        return toks[pos + k] if pos + k < len(toks) else None

    def eat(t):
        nonlocal pos
        if peek() != t:
            raise _Reject
        pos += 1

    def term():
        if peek() in ("ID", "INT"):
            eat(peek())
        elif peek() == "(":
            paren()
        else:
            raise _Reject

    def sum_():
        term()
        while peek() in ("+", "-"):
            eat(peek())
            term()

    def expr():
        if peek() == "ID" and peek(1) == "=":
            eat("ID")
            eat("=")
            expr()
            return
        sum_()
        if peek() == "<":
            eat("<")
            sum_()

    def paren():
        eat("(")
        expr()
        eat(")")

    def stmt():
        t = peek()
        if t == "if":
            eat("if")
            paren()
            stmt()
            if peek() == "else":
                eat("else")
                stmt()
        elif t == "while":
            eat("while")
            paren()
            stmt()
        elif t == "do":
            eat("do")
            stmt()
            eat("while")
            paren()
            eat(";")
        elif t == "{":
            eat("{")
            while peek() != "}":
                if peek() is None:
                    raise _Reject
                stmt()
            eat("}")
        elif t == ";":
            eat(";")
        else:
            expr()
            eat(";")

    try:
        stmt()
    except _Reject:
        return False
    return pos == len(toks)


TINYC_PIECES = [b"if", b"else", b"while", b"do", b"{", b"}", b"(", b")", b";", b"=", b"<",
                b"+", b"-", b"a", b"b", b"1", b"42", b" "]


@settings(max_examples=3000, deadline=None)
@given(st.lists(st.sampled_from(TINYC_PIECES), max_size=14).map(b" ".join))
def test_tinyc_complete_agrees_with_recursive_descent(data):
    assert (classify_tinyc(data) is COMPLETE) == _tinyc_ok(data)


def test_tinyc_generator_programs_pass_recursive_descent():
    rng = random.Random(7)
    for _ in range(300):
        assert _tinyc_ok(generate("tinyc", rng, 150))
