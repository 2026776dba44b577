"""Lexical maximizing delta debugging (the deletion-only baseline).

Grows a passing subsequence of the failing input.  Two corrections to the
textbook recursion are included: a base case once a single character is
left outside the passing set (otherwise ``1*1`` never terminates), and
granularity growth capped by the remaining characters rather than the
whole input (otherwise ``{*"":2}`` breaks ``n <= |delta|``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .oracle import OracleSession


class PreconditionViolated(Exception):
    pass


@dataclass
class DDMaxResult:
    kept: tuple[int, ...]
    output: bytes
    # (kept indices, granularity) at every entry of the recursion
    trace: list[tuple[tuple[int, ...], int]] = field(default_factory=list)


def partition(delta: list[int], n: int) -> list[list[int]]:
    """Split ``delta`` into ``n`` contiguous chunks; earlier chunks take the remainder."""
    if not 1 <= n <= len(delta):
        raise ValueError(f"cannot split {len(delta)} items into {n} chunks")
    size, extra = divmod(len(delta), n)
    chunks = []
    start = 0
    for i in range(n):
        end = start + size + (1 if i < extra else 0)
        chunks.append(delta[start:end])
        start = end
    return chunks


def _materialize(source: bytes, indices) -> bytes:
    return bytes(source[i] for i in sorted(indices))


def ddmax_run(session: OracleSession, data: bytes, check_empty: bool = False) -> DDMaxResult:
    """Run the maximizing search and return the passing subset with its trace.

    The empty input is assumed to pass, as the algorithm requires; with
    ``check_empty`` that assumption is verified first.  For formats whose
    empty input is incomplete the result may therefore be an empty,
    non-passing output.
    """
    data = bytes(data)
    if check_empty and not session.pass_fail(b""):
        raise PreconditionViolated("the empty input does not pass")
    if session.pass_fail(data):
        raise PreconditionViolated("the input already passes")
    everything = range(len(data))
    kept: set[int] = set()
    n = 2
    trace = []
    while True:
        delta = [i for i in everything if i not in kept]
        trace.append((tuple(sorted(kept)), n))
        if len(delta) == 1:
            break
        assert n <= len(delta), "recursion invariant n <= |delta| violated"
        chunks = partition(delta, n)
        for chunk in chunks:
            candidate = set(everything).difference(chunk)
            if session.pass_fail(_materialize(data, candidate)):
                kept, n = candidate, 2
                break
        else:
            for chunk in chunks:
                candidate = kept.union(chunk)
                if session.pass_fail(_materialize(data, candidate)):
                    kept, n = candidate, max(n - 1, 2)
                    break
            else:
                if n < len(delta):
                    n = min(len(delta), 2 * n)
                    continue
                break
    kept_sorted = tuple(sorted(kept))
    return DDMaxResult(kept_sorted, _materialize(data, kept_sorted), trace)


def ddmax(session: OracleSession, data: bytes, check_empty: bool = False) -> bytes:
    return ddmax_run(session, data, check_empty).output
