"""Mutation corpora and the repair benchmark.

Corpus layout on disk::

    <root>/<format>/valid/<id>.bin
    <root>/<format>/single/<id>.bin   + <id>.meta.json
    <root>/<format>/multi/<id>.bin    + <id>.meta.json

Each sidecar records the seed, the applied mutations and the valid file
the mutant was derived from.
"""

from __future__ import annotations

import base64
import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import core
from .ddmax import PreconditionViolated, ddmax
from .formats import FORMATS
from .formats.generate import generate
from .metrics import DEFAULT_CAP, levenshtein, recovery_pct
from .oracle import COMPLETE, BudgetExhausted, OracleSession

log = logging.getLogger(__name__)

MUTATION_KINDS = ("ByteFlip", "Insert", "Delete")
STRATEGIES = ("fsynth", "ddmax")
DEFAULT_TIMEOUT = 60.0
MAX_DRAWS = 100


class Unmutatable(Exception):
    pass


@dataclass(frozen=True)
class MutationSpec:
    kind: str
    position: int
    byte: int | None
    seed: int

    def apply(self, data: bytes) -> bytes:
        p = self.position
        if self.kind == "ByteFlip":
            if not 0 <= p < len(data):
                raise IndexError(p)
            return data[:p] + bytes((self.byte,)) + data[p + 1:]
        if self.kind == "Insert":
            if not 0 <= p <= len(data):
                raise IndexError(p)
            return data[:p] + bytes((self.byte,)) + data[p:]
        if self.kind == "Delete":
            if not 0 <= p < len(data):
                raise IndexError(p)
            return data[:p] + data[p + 1:]
        raise ValueError(f"unknown mutation kind {self.kind!r}")


def _draw(rng: random.Random, data: bytes, seed: int) -> MutationSpec:
    kinds = MUTATION_KINDS if data else ("Insert",)
    kind = rng.choice(kinds)
    if kind == "Insert":
        return MutationSpec(kind, rng.randint(0, len(data)), rng.randrange(256), seed)
    position = rng.randrange(len(data))
    if kind == "ByteFlip":
        # any byte other than the current one
        return MutationSpec(kind, position, data[position] ^ rng.randint(1, 255), seed)
    return MutationSpec(kind, position, None, seed)


def mutate(data: bytes, n_mutations: int, seed: int,
           fmt: str | None = None) -> tuple[bytes, list[MutationSpec]]:
    """Apply ``n_mutations`` random mutations; positions are uniform.

    With ``fmt`` given, draws are repeated until the mutant is not complete.
    """
    if n_mutations < 1:
        raise ValueError("n_mutations must be at least 1")
    if not data:
        raise ValueError("cannot mutate an empty input")
    scanner = FORMATS[fmt] if fmt is not None else None
    rng = random.Random(seed)
    for _ in range(MAX_DRAWS):
        out = bytes(data)
        specs = []
        for _ in range(n_mutations):
            spec = _draw(rng, out, seed)
            out = spec.apply(out)
            specs.append(spec)
        if scanner is None or scanner.classify(out) is not COMPLETE:
            return out, specs
    raise Unmutatable(f"no failing mutant in {MAX_DRAWS} draws")


@dataclass
class CorpusFile:
    file_id: str
    format: str
    data: bytes
    original: bytes | None = None
    meta: dict = field(default_factory=dict)


def make_corpus(root: Path, formats=tuple(FORMATS), per_format: int = 50, seed: int = 2022,
                size_range: tuple[int, int] = (60, 200)) -> list[Path]:
    """Write a seeded corpus of valid files plus single and multi mutants."""
    root = Path(root)
    written = []
    for fmt in formats:
        rng = random.Random(f"{seed}:{fmt}")
        dirs = {sub: root / fmt / sub for sub in ("valid", "single", "multi")}
        for d in dirs.values():
            d.mkdir(parents=True, exist_ok=True)
        for i in range(per_format):
            valid = generate(fmt, rng, rng.randint(*size_range))
            name = f"{fmt}-{i:03d}"
            vpath = dirs["valid"] / f"{name}.bin"
            vpath.write_bytes(valid)
            written.append(vpath)
            for sub, n in (("single", 1), ("multi", rng.randint(2, 16))):
                mseed = rng.randrange(2**31)
                mutant, specs = mutate(valid, n, mseed, fmt)
                path = dirs[sub] / f"{name}.bin"
                path.write_bytes(mutant)
                meta = {
                    "format": fmt,
                    "origin": f"valid/{name}.bin",
                    "seed": mseed,
                    "n_mutations": n,
                    "position_sampling": "uniform",
                    "mutations": [asdict(s) for s in specs],
                }
                path.with_suffix(".meta.json").write_text(json.dumps(meta, indent=2) + "\n")
                written.append(path)
    return written


def load_corpus(root: Path, formats=None, subsets=("single", "multi"),
                limit: int | None = None) -> list[CorpusFile]:
    root = Path(root)
    files = []
    for fmt_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        fmt = fmt_dir.name
        if fmt not in FORMATS or (formats and fmt not in formats):
            continue
        for sub in subsets:
            paths = sorted((fmt_dir / sub).glob("*.bin"))
            if limit is not None:
                paths = paths[:limit]
            for path in paths:
                meta_path = path.with_suffix(".meta.json")
                meta = json.loads(meta_path.read_text()) if meta_path.exists() else {}
                original = None
                if "origin" in meta:
                    original = (fmt_dir / meta["origin"]).read_bytes()
                files.append(CorpusFile(f"{fmt}/{sub}/{path.stem}", fmt, path.read_bytes(),
                                        original, meta))
    return files


@dataclass
class RepairReport:
    file_id: str
    strategy: str
    status: str
    edit_distance: int | str | None
    recovery_pct: float | None
    oracle_runs: int
    wall_ms: int
    # extension: distance from the repair to the uncorrupted original
    edit_distance_to_original: int | str | None = None
    edits: int | None = None
    repaired_b64: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=False)

    @property
    def repaired(self) -> bytes | None:
        return None if self.repaired_b64 is None else base64.b64decode(self.repaired_b64)


def run_one(item: CorpusFile, strategy: str, cfg: core.RepairConfig | None = None,
            timeout: float | None = DEFAULT_TIMEOUT, budget: int | None = None,
            cap: int = DEFAULT_CAP) -> RepairReport:
    session = OracleSession(item.format, budget=budget)
    session.set_timeout(timeout)
    started = time.perf_counter()
    repaired = None
    edits = None
    status = "Failed"
    try:
        if strategy == "fsynth":
            best = core.repair(session, item.data, cfg)[0]
            repaired, edits = best.content, best.edits
        elif strategy == "ddmax":
            repaired = ddmax(session, item.data)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
    except BudgetExhausted:
        status = "Timeout"
    except (core.RepairError, PreconditionViolated) as exc:
        log.debug("%s/%s: %s", item.file_id, strategy, exc)
    wall_ms = int((time.perf_counter() - started) * 1000)
    runs = session.run_count
    if repaired is not None and FORMATS[item.format].classify(repaired) is COMPLETE:
        status = "Repaired"
    else:
        repaired = None
    report = RepairReport(item.file_id, strategy, status, None, None, runs, wall_ms, edits=edits)
    if repaired is not None:
        report.edit_distance = levenshtein(item.data, repaired, cap)
        reference = item.original if item.original else item.data
        report.recovery_pct = round(recovery_pct(repaired, reference), 4)
        if item.original is not None:
            report.edit_distance_to_original = levenshtein(item.original, repaired, cap)
        report.repaired_b64 = base64.b64encode(repaired).decode("ascii")
    return report


def _run_job(args):
    return run_one(*args)


def run_bench(corpus: list[CorpusFile], strategies=STRATEGIES, cfg: core.RepairConfig | None = None,
              timeout_per_file: float | None = DEFAULT_TIMEOUT, budget: int | None = None,
              jobs: int = 1, cap: int = DEFAULT_CAP) -> list[RepairReport]:
    """One report per (file, strategy), sorted by file id then strategy."""
    work = [(item, s, cfg, timeout_per_file, budget, cap) for item in corpus for s in strategies]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_job, work, chunksize=1))
    else:
        reports = [_run_job(w) for w in work]
    reports.sort(key=lambda r: (r.file_id, STRATEGIES.index(r.strategy) if r.strategy in STRATEGIES else 99))
    return reports


def summarize(reports: list[RepairReport]) -> list[dict]:
    """Per (format, strategy) counts and means, shaped like the paper's tables."""
    rows: dict[tuple[str, str], list[RepairReport]] = {}
    for r in reports:
        rows.setdefault((r.file_id.split("/", 1)[0], r.strategy), []).append(r)
    out = []
    for (fmt, strategy), rs in sorted(rows.items()):
        repaired = [r for r in rs if r.status == "Repaired"]
        dists = [r.edit_distance for r in repaired if isinstance(r.edit_distance, int)]
        recov = [r.recovery_pct for r in repaired if r.recovery_pct is not None]
        out.append({
            "format": fmt,
            "strategy": strategy,
            "files": len(rs),
            "Repaired": len(repaired),
            "Timeout": sum(r.status == "Timeout" for r in rs),
            "Failed": sum(r.status == "Failed" for r in rs),
            "mean_recovery_pct": round(sum(recov) / len(recov), 1) if recov else None,
            "mean_edit_distance": round(sum(dists) / len(dists), 1) if dists else None,
            "mean_oracle_runs": round(sum(r.oracle_runs for r in rs) / len(rs)),
        })
    return out


def format_summary(rows: list[dict]) -> str:
    header = f"{'format':<7} {'strategy':<8} {'files':>5} {'Repaired':>8} {'Timeout':>7} {'Failed':>6} " \
             f"{'recov%':>7} {'edist':>6} {'runs':>8}"
    lines = [header, "-" * len(header)]
    for r in rows:
        lines.append(
            f"{r['format']:<7} {r['strategy']:<8} {r['files']:>5} {r['Repaired']:>8} {r['Timeout']:>7} "
            f"{r['Failed']:>6} {_fmt(r['mean_recovery_pct']):>7} {_fmt(r['mean_edit_distance']):>6} "
            f"{r['mean_oracle_runs']:>8}"
        )
    return "\n".join(lines)


def _fmt(v):
    return "-" if v is None else f"{v:.1f}"
