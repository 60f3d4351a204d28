"""The promise oracle: unique-solution SAT with a pluggable tie-breaker.

A query is answered by its exact model count when that count is 0 or 1
(forced "no"/"yes"); any other count falls through to an arbitrary
predicate Q over the query's canonical DIMACS bytes.  The theorem under
test quantifies over all Q, so the predicates here form a small,
deterministic, replayable family: constants, a keyed-hash coin, a
satisfiability contrarian, and an explicit member list.

Batch answering appends one record per call to an append-only log, which
is how tests certify the reduction never adapts to earlier answers.
"""

from __future__ import annotations

import hashlib
import logging
import subprocess
from dataclasses import dataclass
from typing import Sequence

from .census import AnswerMap, Query
from .circuit import DEFAULT_CAP
from .cnf import CnfFormula, count_models, from_dimacs, to_dimacs
from .errors import ParcensusError, ResourceLimitError

logger = logging.getLogger(__name__)


class QPredicate:
    """Deterministic boolean predicate over canonical DIMACS bytes."""

    def __init__(self, name: str, kind: str, seed: int = 0,
                 members: frozenset[bytes] = frozenset()):
        self.name = name
        self.kind = kind
        self.seed = seed
        self.members = members

    def verdict(self, dimacs: bytes, cap: int = DEFAULT_CAP) -> int:
        if self.kind == "const_no":
            return 0
        if self.kind == "const_yes":
            return 1
        if self.kind == "seeded_random":
            digest = hashlib.blake2b(
                dimacs, key=self.seed.to_bytes(8, "big"), digest_size=8
            ).digest()
            return digest[0] & 1
        if self.kind == "anti_sat":
            formula = from_dimacs(dimacs)
            return int(count_models(formula, cap=cap) == 0)
        if self.kind == "member_list":
            return int(dimacs in self.members)
        raise ValueError(f"unknown predicate kind {self.kind}")

    def __repr__(self) -> str:
        return f"QPredicate({self.name!r})"


def const_no() -> QPredicate:
    return QPredicate("const-no", "const_no")


def const_yes() -> QPredicate:
    return QPredicate("const-yes", "const_yes")


def seeded_random(seed: int) -> QPredicate:
    """Keyed-hash coin over the formula bytes; same seed, same verdicts."""
    return QPredicate(f"random[{seed}]", "seeded_random", seed=seed)


def anti_sat() -> QPredicate:
    """Yes exactly on unsatisfiable formulas.

    Only consulted where the model count is at least 2, so through the
    oracle this predicate answers "no" on the whole ambiguous region,
    maximally contradicting satisfiability there.
    """
    return QPredicate("anti-sat", "anti_sat")


def member_list(members: Sequence[bytes]) -> QPredicate:
    return QPredicate("member-list", "member_list",
                      members=frozenset(members))


def q_family(seed: int = 0) -> list[QPredicate]:
    """The standard test family: constants, contrarian, three coins."""
    return [
        const_no(),
        const_yes(),
        anti_sat(),
        seeded_random(seed),
        seeded_random(seed + 1),
        seeded_random(seed + 2),
    ]


@dataclass(frozen=True)
class BatchRecord:
    """Canonical ids submitted in one parallel round, with their verdicts."""

    canonical_ids: tuple[str, ...]
    verdicts: tuple[int, ...]


class OracleLog:
    """Append-only record of query batches within a run."""

    def __init__(self):
        self.batches: list[BatchRecord] = []

    def record(self, ids: Sequence[str], verdicts: Sequence[int]) -> None:
        self.batches.append(BatchRecord(tuple(ids), tuple(verdicts)))

    def __len__(self) -> int:
        return len(self.batches)


class ExternalCounter:
    """Exact model counter run as a subprocess.

    The child reads DIMACS on stdin and prints the model count as a
    decimal integer.  Used only to cross-check the built-in enumerator.
    """

    def __init__(self, argv: Sequence[str], timeout: float = 60.0):
        self.argv = list(argv)
        self.timeout = timeout

    def count(self, dimacs: bytes) -> int:
        proc = subprocess.run(
            self.argv, input=dimacs, capture_output=True, timeout=self.timeout
        )
        if proc.returncode != 0:
            raise ParcensusError(
                f"external counter failed ({proc.returncode}): "
                f"{proc.stderr.decode(errors='replace').strip()}"
            )
        try:
            return int(proc.stdout.strip())
        except ValueError:
            raise ParcensusError(
                f"external counter printed non-integer: {proc.stdout!r}"
            )


def usatq_answer(
    formula: CnfFormula, predicate: QPredicate, cap: int = DEFAULT_CAP
) -> int:
    """Oracle verdict: forced by the model count at 0 or 1, else Q."""
    models = count_models(formula, cap=cap)
    if models == 0:
        return 0
    if models == 1:
        return 1
    return predicate.verdict(to_dimacs(formula), cap=cap)


class UsatQOracle:
    """Batch-answering oracle with a verdict log and optional cross-check.

    When a cross-check counter is attached, every queried formula is also
    counted externally; disagreements are recorded (and logged) but the
    built-in enumerator stays authoritative.
    """

    def __init__(
        self,
        predicate: QPredicate,
        cap: int = DEFAULT_CAP,
        log: OracleLog | None = None,
        cross_check: ExternalCounter | None = None,
    ):
        self.predicate = predicate
        self.cap = cap
        self.log = log if log is not None else OracleLog()
        self.cross_check = cross_check
        self.cross_check_failures: list[tuple[str, int, int]] = []

    def answer(self, formula: CnfFormula, canonical_id: str = "") -> int:
        try:
            models = count_models(formula, cap=self.cap)
        except ResourceLimitError as exc:
            raise ResourceLimitError(
                f"query {canonical_id or '<anonymous>'}: {exc}"
            ) from exc
        if self.cross_check is not None:
            external = self.cross_check.count(to_dimacs(formula))
            if external != models:
                self.cross_check_failures.append(
                    (canonical_id, models, external)
                )
                logger.warning(
                    "external counter disagrees on %s: internal %d, "
                    "external %d (internal kept)",
                    canonical_id or "<anonymous>", models, external,
                )
        if models == 0:
            return 0
        if models == 1:
            return 1
        return self.predicate.verdict(to_dimacs(formula), cap=self.cap)

    def answer_batch(self, queries: Sequence[Query]) -> AnswerMap:
        """Answer every query and log the round as a single batch."""
        verdicts = [
            self.answer(query.formula, query.canonical_id)
            for query in queries
        ]
        self.log.record(
            [query.canonical_id for query in queries], verdicts
        )
        return {
            query.key: verdict for query, verdict in zip(queries, verdicts)
        }
