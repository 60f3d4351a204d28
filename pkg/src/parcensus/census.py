"""Cardinality-guess instances, the parallel query battery, and decoding.

For each guess ``c`` of the census, a guess instance asserts that ``c``
strictly increasing accepting paths exist and that one addressed bit of
the ``j``-th of them has a given value.  Above the true census every
instance is unsatisfiable; exactly at it, each instance has zero or one
witness, so the oracle's answers are forced and spell out every path bit.
The decoder exploits that: it takes the largest guess that drew a "yes",
reads the path bits off the answers, validates what it read, and applies
the machine's decision predicate to the recovered census.

The battery for input x has p(|x|) * q(|x|) * (q(|x|)+1) queries: guesses
run over 1..q(|x|) (a guess of 0 has an empty position range and is
detected instead by the all-"no" rule), positions over 1..c, bit indices
over 1..p(|x|), and both bit values.  Every bit is probed at both values
on purpose; the redundancy is what separates "the lone path is all zeros"
from "there is no path", and it powers the decoder's validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .circuit import (
    BitString,
    Circuit,
    DEFAULT_CAP,
    build_bit_equals,
    build_less_than,
    conjoin,
    evaluate,
    remap_inputs,
)
from .cnf import CnfFormula, tseitin_parsimonious
from .errors import CircuitError, ProtocolError, ResourceLimitError
from .machines import FewLanguage

# (c, j, k, b) of one query; keys of the answer map.
QueryKey = tuple[int, int, int, int]
AnswerMap = Mapping[QueryKey, int]


def canonical_query_id(x: BitString, c: int, j: int, k: int, b: int) -> str:
    """Injective ASCII id: length-prefixed input bits, then fixed-width
    decimal c, j, k and the bit value.  Field width 4 covers desk scale."""
    return f"{len(x):04d}{x.to01()}{c:04d}{j:04d}{k:04d}{b}"


@dataclass(frozen=True)
class Query:
    """One oracle probe: the guess tuple plus its compiled formula."""

    c: int
    j: int
    k: int
    b: int
    formula: CnfFormula
    canonical_id: str

    @property
    def key(self) -> QueryKey:
        return (self.c, self.j, self.k, self.b)


@dataclass(frozen=True)
class CensusResult:
    """Decoded census, path list, and membership verdict.

    ``inconsistency`` is None when decoding validated cleanly; otherwise it
    carries the reason and the other fields are unset.
    """

    f_hat: int | None
    paths: tuple[BitString, ...] | None
    member: int | None
    inconsistency: str | None = None

    @property
    def ok(self) -> bool:
        return self.inconsistency is None

    def summary(self) -> str:
        if not self.ok:
            return f"inconsistent: {self.inconsistency}"
        path_text = " ".join(p.to01() for p in self.paths) if self.paths else "-"
        return f"f_hat={self.f_hat} paths=[{path_text}] member={self.member}"


def build_j_circuit(
    lang: FewLanguage, x: BitString, c: int, j: int, k: int, b: int
) -> Circuit:
    """Circuit over c*p(|x|) bits encoding one cardinality-guess instance.

    The witness is the concatenation of c candidate paths.  It must satisfy
    strict ordering between consecutive blocks, the machine's verifier on
    every block, and the addressed bit test.  At c equal to the true census
    the accepting witness, if any, is the sorted list of all accepting
    paths, so the count is 0 or 1.
    """
    width = lang.p(len(x))
    bound = lang.q(len(x))
    if not 1 <= c <= bound:
        raise CircuitError(f"guess c={c} outside 1..{bound}")
    if not 1 <= j <= c:
        raise CircuitError(f"position j={j} outside 1..{c}")
    if not 1 <= k <= width:
        raise CircuitError(f"bit index k={k} outside 1..{width}")
    if b not in (0, 1):
        raise CircuitError(f"bit value b={b} must be 0 or 1")

    total = c * width
    verifier = lang.verifier(x)

    def block(i: int) -> list[int]:
        start = (i - 1) * width
        return list(range(start + 1, start + width + 1))

    fragments = []
    for i in range(1, c):
        fragments.append(build_less_than(total, block(i), block(i + 1)))
    for i in range(1, c + 1):
        fragments.append(remap_inputs(verifier, total, block(i)))
    fragments.append(build_bit_equals(total, (j - 1) * width + k, b))
    return conjoin(fragments, input_count=total)


def generate_queries(
    lang: FewLanguage, x: BitString, cap: int = DEFAULT_CAP
) -> list[Query]:
    """The full battery in canonical (c, j, k, b) order."""
    width = lang.p(len(x))
    bound = lang.q(len(x))
    if width < 1:
        raise CircuitError(f"path length p({len(x)}) = {width} < 1")
    if width > cap or bound * width > cap:
        raise ResourceLimitError(
            f"battery needs up to {max(width, bound * width)} witness bits, "
            f"cap is {cap}"
        )
    queries = []
    for c in range(1, bound + 1):
        for j in range(1, c + 1):
            for k in range(1, width + 1):
                for b in (0, 1):
                    circuit = build_j_circuit(lang, x, c, j, k, b)
                    queries.append(
                        Query(
                            c, j, k, b,
                            tseitin_parsimonious(circuit),
                            canonical_query_id(x, c, j, k, b),
                        )
                    )
    return queries


def expected_keys(lang: FewLanguage, x: BitString) -> set[QueryKey]:
    width = lang.p(len(x))
    bound = lang.q(len(x))
    return {
        (c, j, k, b)
        for c in range(1, bound + 1)
        for j in range(1, c + 1)
        for k in range(1, width + 1)
        for b in (0, 1)
    }


def decode_answers(
    lang: FewLanguage, x: BitString, answers: AnswerMap
) -> CensusResult:
    """Turn the answer battery into census, paths, and membership.

    All answers "no" means census 0.  Otherwise the census estimate is the
    largest guess with a "yes"; its path bits are read off the per-bit
    probes.  Three checks must pass before the result is reported clean:
    every (position, bit) pair answered "yes" for exactly one bit value,
    the recovered paths are strictly increasing, and each one satisfies
    the verifier.  Coverage mismatches are protocol errors, not decoding
    inconsistencies.
    """
    width = lang.p(len(x))
    expected = expected_keys(lang, x)
    got = set(answers.keys())
    if got != expected:
        missing = len(expected - got)
        extra = len(got - expected)
        raise ProtocolError(
            f"answer map does not match battery: {missing} missing, "
            f"{extra} extra"
        )

    yes_guesses = [key[0] for key in expected if answers[key]]
    if not yes_guesses:
        return CensusResult(0, (), int(lang.predicate(x, 0)))

    census = max(yes_guesses)
    paths = []
    for j in range(1, census + 1):
        bits = []
        for k in range(1, width + 1):
            hits = [b for b in (0, 1) if answers[(census, j, k, b)]]
            if len(hits) == 2:
                return CensusResult(
                    None, None, None,
                    f"ambiguous bit at position {j}, index {k}",
                )
            if not hits:
                return CensusResult(
                    None, None, None,
                    f"unreadable bit at position {j}, index {k}",
                )
            bits.append(hits[0])
        paths.append(BitString(bits))
    for first, second in zip(paths, paths[1:]):
        if not first < second:
            return CensusResult(
                None, None, None,
                f"recovered paths not strictly increasing: "
                f"{first} !< {second}",
            )
    verifier = lang.verifier(x)
    for j, path in enumerate(paths, start=1):
        if not evaluate(verifier, path):
            return CensusResult(
                None, None, None,
                f"recovered path {j} ({path}) fails the verifier",
            )
    return CensusResult(census, tuple(paths), int(lang.predicate(x, census)))


def run_pipeline(lang: FewLanguage, x: BitString, oracle) -> CensusResult:
    """Generate the battery, ask the oracle once, decode the answers.

    The whole battery exists before any answer is consumed; the oracle's
    log will show exactly one batch per call.
    """
    queries = generate_queries(lang, x, cap=oracle.cap)
    answers = oracle.answer_batch(queries)
    return decode_answers(lang, x, answers)
