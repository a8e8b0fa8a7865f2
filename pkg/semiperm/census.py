"""
This module contains the census runner that splits the enumeration of one order into prefix
slices, runs registered checks over them in worker processes and collects counterexamples.
"""

import asyncio
import dataclasses
import logging
import pickle
import traceback
from collections.abc import Callable
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Any

from nanoid import generate

from .config import Settings, configure, get_settings
from .core import FiniteSemigroup
from .enumeration import Mode, canonical_form, enumerate_associative, prefixes
from .errors import BoundExceededError, CheckExecutionError
from .formats import dump_sgp
from .registry import Check, CheckRegistry, registry

logger = logging.getLogger(__name__)

RUN_ID_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
SLICES_PER_WORKER = 4


@dataclass(frozen=True)
class CensusConfig:
    """
    What to enumerate and which checks to run on it.

    Raises:
        BoundExceededError: If the order is not positive or above the max_census_order setting
    """

    order: int
    up_to: Mode = Mode.LABELED
    predicates: tuple[str, ...] = ()
    parallel_width: int | None = None
    dump_dir: Path | None = None

    def __post_init__(self):
        object.__setattr__(self, "up_to", Mode(self.up_to))
        object.__setattr__(self, "predicates", tuple(self.predicates))
        bound = get_settings().max_census_order
        if not 1 <= self.order <= bound:
            raise BoundExceededError(f"Census order must lie in [1, {bound}], got {self.order}")

    @property
    def width(self) -> int:
        return max(1, self.parallel_width or get_settings().parallel_width)


@dataclass(frozen=True)
class Counterexample:
    predicate: str
    index: int
    table: FiniteSemigroup
    error: str | None = None


@dataclass
class PredicateSummary:
    """Per-check counts; holds + failed + skipped + errors = checked."""

    name: str
    tally: bool
    checked: int = 0
    holds: int = 0
    failed: int = 0
    skipped: int = 0
    errors: int = 0


@dataclass
class CensusReport:
    run_id: str
    order: int
    mode: Mode
    total: int = 0
    summaries: dict[str, PredicateSummary] = field(default_factory=dict)
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, tally: "SliceTally") -> None:
        """Add the next slice of the stream; its local indices continue after the tables seen so far."""
        offset = self.total
        self.total += tally.size
        for name, part in tally.summaries.items():
            summary = self.summaries[name]
            summary.checked += part.checked
            summary.holds += part.holds
            summary.failed += part.failed
            summary.skipped += part.skipped
            summary.errors += part.errors
        self.counterexamples.extend(dataclasses.replace(c, index=c.index + offset) for c in tally.counterexamples)

    def lines(self) -> list[str]:
        """Line-oriented report, one line per check."""
        out = [f"census {self.run_id}: order {self.order}, mode {self.mode.value}, {self.total} semigroups"]
        for summary in self.summaries.values():
            if summary.tally:
                out.append(f"{summary.name}: {summary.holds} of {summary.checked}")
            else:
                out.append(
                    f"{summary.name}: {summary.holds} hold, {summary.skipped} skipped, "
                    f"{summary.failed} counterexamples, {summary.errors} errors"
                )
        return out

    def to_structured(self) -> dict[str, Any]:
        return {
            "run_id": self.run_id,
            "order": self.order,
            "mode": self.mode.value,
            "total": self.total,
            "checks": {
                name: {
                    "tally": s.tally,
                    "checked": s.checked,
                    "holds": s.holds,
                    "failed": s.failed,
                    "skipped": s.skipped,
                    "errors": s.errors,
                }
                for name, s in self.summaries.items()
            },
            "counterexamples": [
                {"predicate": c.predicate, "index": c.index, "table": [list(r) for r in c.table.rows], "error": c.error}
                for c in self.counterexamples
            ],
        }


@dataclass(frozen=True)
class Outcome:
    """One check evaluated on one semigroup: True, False, None (not applicable) or an error."""

    predicate: str
    value: bool | None
    error: str | None = None


def evaluate(S: FiniteSemigroup, checks: list[Check]) -> list[Outcome]:
    """Run each check on S, turning exceptions into error outcomes."""
    outcomes = []
    for entry in checks:
        try:
            value = entry.function(S)
            outcomes.append(Outcome(entry.name, None if value is None else bool(value)))
        except Exception as e:
            error = CheckExecutionError(f"Error executing check {entry.name}: {type(e).__name__}: {e}")
            logger.warning("%s on %s", error, [list(r) for r in S.rows])
            outcomes.append(Outcome(entry.name, False, f"{error}\n{traceback.format_exc()}"))
    return outcomes


@dataclass
class SliceTally:
    """Counts and counterexamples of one slice of the stream; indices are local to the slice."""

    size: int = 0
    summaries: dict[str, PredicateSummary] = field(default_factory=dict)
    counterexamples: list[Counterexample] = field(default_factory=list)

    @classmethod
    def of(cls, checks: list[Check]) -> "SliceTally":
        return cls(summaries={c.name: PredicateSummary(c.name, c.tally) for c in checks})

    def add(self, S: FiniteSemigroup, outcomes: list[Outcome]) -> None:
        index = self.size
        self.size += 1
        for outcome in outcomes:
            summary = self.summaries[outcome.predicate]
            summary.checked += 1
            if outcome.error is not None:
                summary.errors += 1
            elif outcome.value is None:
                summary.skipped += 1
            elif outcome.value:
                summary.holds += 1
            else:
                summary.failed += 1
            if outcome.error is not None or (outcome.value is False and not summary.tally):
                self.counterexamples.append(Counterexample(outcome.predicate, index, S, outcome.error))


# -- slice jobs, run in worker processes ----------------------------------------


def _adopt(settings: Settings) -> None:
    """Make a worker process resolve bounds the way the parent does."""
    if get_settings() != settings:
        configure(**dataclasses.asdict(settings))


def tally_slice(order: int, prefix: tuple[int, ...], checks: list[Check], settings: Settings) -> SliceTally:
    """Run the checks on every table whose first cells are prefix."""
    _adopt(settings)
    tally = SliceTally.of(checks)
    for S in enumerate_associative(order, prefix=prefix):
        tally.add(S, evaluate(S, checks))
    return tally


def forms_of_slice(order: int, mode: Mode, prefix: tuple[int, ...], settings: Settings) -> list[FiniteSemigroup]:
    """Canonical forms met in one slice, without repeats, in order of first appearance."""
    _adopt(settings)
    seen: dict[FiniteSemigroup, None] = {}
    for S in enumerate_associative(order, prefix=prefix):
        seen.setdefault(canonical_form(S, mode))
    return list(seen)


def tally_forms(forms: list[FiniteSemigroup], checks: list[Check], settings: Settings) -> SliceTally:
    _adopt(settings)
    tally = SliceTally.of(checks)
    for S in forms:
        tally.add(S, evaluate(S, checks))
    return tally


def stream_slices(order: int, width: int) -> list[tuple[int, ...]]:
    """
    Prefixes splitting the enumeration into at least four slices per worker where the order allows.

    The slices, taken in order, cover the full stream in stream order.
    """
    depth = 1
    found = prefixes(order, depth)
    while len(found) < SLICES_PER_WORKER * width and depth < order * order:
        depth += 1
        found = prefixes(order, depth)
    return found


def _picklable(checks: list[Check]) -> bool:
    try:
        pickle.dumps(checks)
    except (pickle.PicklingError, AttributeError, TypeError):
        return False
    return True


class CensusRunner:
    """
    Splits the enumeration of one census into prefix slices and drains them through an
    asyncio queue into worker tasks.

    Each worker hands its slice to a process pool. Slice results are merged in slice order
    as they arrive, so the report does not depend on the number of workers and only counts
    and counterexamples are kept.
    """

    def __init__(self, config: CensusConfig, checks: CheckRegistry | None = None):
        self.config = config
        self.checks = (checks or registry).require(config.predicates)
        self.settings = get_settings()
        self.run_id = generate(RUN_ID_ALPHABET, 10)
        self.queue: asyncio.Queue = asyncio.Queue()
        self.pending: dict[int, Any] = {}
        self.merged = 0

    def executor(self) -> Executor:
        """A process pool for several workers; threads when the checks cannot cross processes."""
        width = self.config.width
        if width > 1 and _picklable(self.checks):
            return ProcessPoolExecutor(max_workers=width)
        if width > 1:
            logger.info("Census %s: checks cannot be sent to worker processes, using threads", self.run_id)
        return ThreadPoolExecutor(max_workers=width)

    async def worker(self, executor: Executor, merge: Callable[[Any], None]) -> None:
        loop = asyncio.get_running_loop()
        while True:
            item = await self.queue.get()
            try:
                if item is None:
                    return
                index, job = item
                self.pending[index] = await loop.run_in_executor(executor, job)
                # Merge every result that is next in slice order
                while self.merged in self.pending:
                    merge(self.pending.pop(self.merged))
                    self.merged += 1
            finally:
                self.queue.task_done()

    async def drain(self, executor: Executor, jobs: list[Callable[[], Any]], merge: Callable[[Any], None]) -> None:
        """Run jobs on the executor and pass their results to merge in job order."""
        self.pending.clear()
        self.merged = 0
        for index, job in enumerate(jobs):
            self.queue.put_nowait((index, job))
        width = min(self.config.width, max(1, len(jobs)))
        for _ in range(width):
            self.queue.put_nowait(None)

        workers = [asyncio.create_task(self.worker(executor, merge)) for _ in range(width)]
        try:
            await asyncio.gather(*workers)
        finally:
            for task in workers:
                task.cancel()

    async def run(self) -> CensusReport:
        config = self.config
        logger.info(
            "Census %s: order %d, mode %s, checks %s, width %d",
            self.run_id,
            config.order,
            config.up_to.value,
            ",".join(c.name for c in self.checks) or "-",
            config.width,
        )

        report = CensusReport(run_id=self.run_id, order=config.order, mode=config.up_to)
        report.summaries = {c.name: PredicateSummary(c.name, c.tally) for c in self.checks}
        slices = stream_slices(config.order, config.width)
        logger.debug("Census %s: %d slices", self.run_id, len(slices))

        with self.executor() as executor:
            if config.up_to is Mode.LABELED:
                jobs = [partial(tally_slice, config.order, prefix, self.checks, self.settings) for prefix in slices]
            else:
                forms: dict[FiniteSemigroup, None] = {}

                def collect(found: list[FiniteSemigroup]) -> None:
                    for form in found:
                        forms.setdefault(form)

                jobs = [partial(forms_of_slice, config.order, config.up_to, prefix, self.settings) for prefix in slices]
                await self.drain(executor, jobs, collect)
                logger.debug("Census %s: %d classes", self.run_id, len(forms))

                ordered = list(forms)
                size = max(1, -(-len(ordered) // (SLICES_PER_WORKER * config.width)))
                chunks = [ordered[k : k + size] for k in range(0, len(ordered), size)]
                jobs = [partial(tally_forms, chunk, self.checks, self.settings) for chunk in chunks]
            await self.drain(executor, jobs, report.merge)

        for summary in report.summaries.values():
            if summary.failed and not summary.tally:
                logger.warning("Check %s has %d counterexamples", summary.name, summary.failed)
        if config.dump_dir is not None:
            dump_counterexamples(report, config.dump_dir)

        logger.info(
            "Census %s finished: %d semigroups, %d counterexamples",
            self.run_id,
            report.total,
            len(report.counterexamples),
        )
        return report


def dump_counterexamples(report: CensusReport, directory: Path) -> list[Path]:
    """Write each counterexample as ``<run_id>-<predicate>-<k>.sgp``; k counts per check."""
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    counts: dict[str, int] = {}
    for c in report.counterexamples:
        k = counts[c.predicate] = counts.get(c.predicate, 0) + 1
        path = directory / f"{report.run_id}-{c.predicate}-{k}.sgp"
        comment = f"census {report.run_id}, order {report.order}, check {c.predicate}, stream index {c.index}"
        path.write_text(dump_sgp(c.table, comment), encoding="utf-8")
        written.append(path)
    return written


async def census_verify(config: CensusConfig, checks: CheckRegistry | None = None) -> CensusReport:
    """
    Run the named checks over every semigroup of the configured order and mode.

    Raises:
        CheckRegistrationError: If a named check is not registered
    """
    return await CensusRunner(config, checks).run()
