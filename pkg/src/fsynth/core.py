"""Feedback-driven repair by deletion and synthesis.

The search keeps a population of repair threads.  Each thread holds a
candidate byte string and its parse boundary: the length of the longest
prefix the oracle does not call incorrect.  Every generation each surviving
thread is edited right at its boundary, either by deleting the offending
byte or by inserting one alphabet byte, and the boundary is pushed forward
again.  The first generation that contains a complete candidate ends the
search.

Boundaries are prefix lengths throughout: ``content[:boundary]`` is the
valid prefix and ``content[boundary]``, if present, is the byte the oracle
rejects.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .oracle import COMPLETE, INCORRECT, OracleSession

DELETE = -1
"""Mask tag for a deletion; any other tag is the inserted byte value."""

DEFAULT_ALPHABET = bytes([0x09, 0x0A]) + bytes(range(0x20, 0x7F))


class RepairError(Exception):
    pass


class NothingToDelete(RepairError):
    pass


class IterationLimit(RepairError):
    pass


class Unrepairable(RepairError):
    """Every thread died before any candidate became complete."""


@dataclass(frozen=True)
class RepairThread:
    content: bytes
    boundary: int
    mask: tuple[int, ...] = ()
    # boundary after each step, starting with the initial search
    trail: tuple[int, ...] = field(default=(), compare=False)

    @property
    def edits(self) -> int:
        return len(self.mask)

    @property
    def inserts(self) -> int:
        return sum(1 for tag in self.mask if tag != DELETE)

    @property
    def deletes(self) -> int:
        return self.edits - self.inserts

    @property
    def kinds(self) -> str:
        return "".join("D" if tag == DELETE else "I" for tag in self.mask)

    def describe(self) -> list[str]:
        return ["delete" if t == DELETE else f"insert {bytes([t])!r}" for t in self.mask]

    def consumed(self) -> int:
        """Bytes of the original input covered by the valid prefix."""
        return self.boundary + self.deletes - self.inserts


@dataclass
class RepairConfig:
    last_insert_only: bool = True
    max_num_per_mask: int = 5
    max_simultaneous_corrections: int = 5
    alphabet: bytes = DEFAULT_ALPHABET
    rng_seed: int = 0
    max_iterations: int | None = None
    # False restricts the search to deletions
    insert: bool = True

    def __post_init__(self):
        self.alphabet = bytes(self.alphabet)
        if not self.alphabet:
            raise ValueError("alphabet must not be empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet contains duplicate bytes")
        if self.max_num_per_mask < 1:
            raise ValueError("max_num_per_mask must be positive")

    def iteration_limit(self, data: bytes) -> int:
        if self.max_iterations is not None:
            return self.max_iterations
        return 2 * len(data) + 64


def binary_search(session: OracleSession, data: bytes, lo: int = 0) -> int:
    """Largest ``b >= lo`` whose prefix is not incorrect.

    Assumes ``data[:lo]`` is not incorrect.  Costs one query for the whole
    input plus one per halving of ``len(data) - lo``.
    """
    hi = len(data)
    if session.check_prefix(data, hi) is not INCORRECT:
        return hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if session.check_prefix(data, mid) is INCORRECT:
            hi = mid
        else:
            lo = mid
    return lo


def linear_extend(session: OracleSession, data: bytes, start: int) -> int:
    """Walk forward one byte at a time from a valid prefix of length ``start``."""
    b = start
    n = len(data)
    while b < n and session.check_prefix(data, b + 1) is not INCORRECT:
        b += 1
    return b


def apply_delete(session: OracleSession, t: RepairThread) -> RepairThread:
    b = t.boundary
    if b >= len(t.content):
        raise NothingToDelete("boundary is at the end of the input")
    content = t.content[:b] + t.content[b + 1:]
    # the error byte is gone, so the next one may be far away
    nb = binary_search(session, content, b)
    return RepairThread(content, nb, t.mask + (DELETE,), t.trail + (nb,))


def insert_at(session: OracleSession, t: RepairThread, k: int, byte: int) -> RepairThread | None:
    """Insert ``byte`` at ``k``; keep the result only if it gets past ``k``."""
    content = t.content[:k] + bytes((byte,)) + t.content[k:]
    nb = linear_extend(session, content, k)
    if nb > k:
        return RepairThread(content, nb, t.mask + (byte,), t.trail + (nb,))
    return None


def insert_char(session: OracleSession, t: RepairThread, byte: int,
                cfg: RepairConfig) -> list[RepairThread]:
    positions = [t.boundary] if cfg.last_insert_only else range(t.boundary + 1)
    out = []
    for k in positions:
        child = insert_at(session, t, k, byte)
        if child is not None:
            out.append(child)
    return out


def apply_insert(session: OracleSession, t: RepairThread, cfg: RepairConfig) -> list[RepairThread]:
    out = []
    if not cfg.insert:
        return out
    for byte in cfg.alphabet:
        out.extend(insert_char(session, t, byte, cfg))
    return out


def repair_and_extend(session: OracleSession, t: RepairThread,
                      cfg: RepairConfig) -> list[RepairThread]:
    children = []
    if t.boundary < len(t.content):
        children.append(apply_delete(session, t))
    children.extend(apply_insert(session, t, cfg))
    return children


def _sample_key(t: RepairThread):
    last = t.content[t.boundary - 1] if t.boundary > 0 else -1
    return (t.deletes, t.inserts, t.boundary, last)


def sample_threads(threads: list[RepairThread], cfg: RepairConfig,
                   rng: random.Random) -> list[RepairThread]:
    """Drop redundant threads, then keep only the best boundaries.

    Threads agreeing on how many deletions and insertions they made, on
    their boundary and on the last byte of the valid prefix are treated as
    interchangeable; at most ``max_num_per_mask`` of each such group
    survive, picked at random.  Keying on the counts rather than the order
    of edits keeps the number of groups linear in the generation.
    """
    groups: dict[tuple, list[int]] = {}
    for i, t in enumerate(threads):
        groups.setdefault(_sample_key(t), []).append(i)
    keep: list[int] = []
    for members in groups.values():
        if len(members) > cfg.max_num_per_mask:
            members = rng.sample(members, cfg.max_num_per_mask)
        keep.extend(members)
    keep.sort()
    return filter_best([threads[i] for i in keep], cfg)


def filter_best(threads: list[RepairThread], cfg: RepairConfig) -> list[RepairThread]:
    limit = cfg.max_simultaneous_corrections
    if limit < 0:
        return list(threads)
    best = sorted({t.boundary for t in threads}, reverse=True)[:limit]
    return [t for t in threads if t.boundary in best]


def rank_key(t: RepairThread):
    # fewer edits first; among equals prefer deleting over synthesizing
    return (t.edits, t.inserts, -t.boundary, t.content)


def find_fixes(session: OracleSession, data: bytes, boundary: int,
               cfg: RepairConfig) -> list[RepairThread]:
    """Grow repair threads generation by generation until one is complete.

    Returns every distinct complete candidate of the first generation that
    has one, best first.
    """
    start = RepairThread(bytes(data), boundary, (), (boundary,))
    if boundary == len(data) and session.feedback(start.content) is COMPLETE:
        return [start]
    rng = random.Random(cfg.rng_seed)
    current = [start]
    for _ in range(cfg.iteration_limit(data)):
        upcoming: list[RepairThread] = []
        completed: dict[bytes, RepairThread] = {}
        for item in sample_threads(current, cfg, rng):
            for child in repair_and_extend(session, item, cfg):
                upcoming.append(child)
                if (child.boundary == len(child.content)
                        and child.content not in completed
                        and session.feedback(child.content) is COMPLETE):
                    completed[child.content] = child
        if completed:
            return sorted(completed.values(), key=rank_key)
        if not upcoming:
            raise Unrepairable("no repair thread can make progress")
        current = upcoming
    raise IterationLimit(f"no complete repair after {cfg.iteration_limit(data)} generations")


def repair(session: OracleSession, data: bytes, cfg: RepairConfig | None = None) -> list[RepairThread]:
    cfg = cfg or RepairConfig()
    data = bytes(data)
    return find_fixes(session, data, binary_search(session, data, 0), cfg)
