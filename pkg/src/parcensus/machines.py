"""Witness machines with polynomially bounded census functions.

A machine packages a verifier-circuit generator with two polynomial
bounds (path length ``p`` and census bound ``q``) and a decision predicate
applied to the input and its witness count.  The census bound is a
*promise*: machines that break it are constructible on purpose, and the
library below includes one designed to do so.

Built-in machines (CLI names, integer parameters in order):

==========  ==========================================================
const0      no accepting paths; params: path length (default 2),
            census bound (default 0)
exact1      exactly one accepting path, a fixed pattern; params:
            width (default 2), pattern value (default 2)
xor2        two accepting paths 01 and 10; params: census bound
            (default 2)
onehot      paths = one-hot strings of length |x|, so the census is
            |x|; params: census bound (default: |x|)
subsetsum   paths = subsets of the digits of x summing to a target;
            params: target (default 1), census bound (default: |x|)
==========  ==========================================================
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .circuit import (
    BitString,
    Circuit,
    CircuitBuilder,
    DEFAULT_CAP,
    build_exactly_k,
    count_witnesses,
    evaluate,
)
from .errors import MachineError, ResourceLimitError


@dataclass(frozen=True)
class PolyBound:
    """Polynomial with non-negative integer coefficients, constant first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("need at least one coefficient")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("coefficients must be non-negative")

    @classmethod
    def constant(cls, value: int) -> "PolyBound":
        return cls((value,))

    @classmethod
    def identity(cls) -> "PolyBound":
        return cls((0, 1))

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError("polynomial argument must be non-negative")
        total = 0
        power = 1
        for c in self.coefficients:
            total += c * power
            power *= n
        return total

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0 and len(self.coefficients) > 1:
                continue
            terms.append(str(c) if i == 0 else (f"{c}n^{i}" if i > 1 else f"{c}n"))
        return " + ".join(terms) or "0"


# Decision predicates applied to (input, census).  "fewp" is the plain
# nonemptiness test; with a census bound of 1 it gives the unambiguous
# special case.
R_PREDICATES: dict[str, Callable[[BitString, int], bool]] = {
    "fewp": lambda x, count: count > 0,
    "parity": lambda x, count: count % 2 == 1,
    "is-zero": lambda x, count: count == 0,
}

_SAMPLE_INPUTS = ("0", "10", "011")


@dataclass(frozen=True)
class FewLanguage:
    """A named machine: verifier generator, bounds p and q, predicate R."""

    name: str
    p: PolyBound
    q: PolyBound
    verifier_gen: Callable[[BitString], Circuit]
    predicate: Callable[[BitString, int], bool]
    predicate_name: str = "fewp"

    def __post_init__(self):
        for sample in _SAMPLE_INPUTS:
            self.verifier(BitString(sample))

    def verifier(self, x: BitString) -> Circuit:
        """Generate and contract-check the verifier circuit for ``x``."""
        width = self.p(len(x))
        if width < 1:
            raise MachineError(
                f"{self.name}: path length p({len(x)}) = {width} < 1"
            )
        circuit = self.verifier_gen(x)
        if circuit.input_count != width:
            raise MachineError(
                f"{self.name}: verifier has {circuit.input_count} inputs, "
                f"p({len(x)}) = {width}"
            )
        return circuit

    def with_predicate(self, name: str) -> "FewLanguage":
        if name not in R_PREDICATES:
            raise MachineError(f"unknown predicate {name!r}")
        return FewLanguage(
            self.name, self.p, self.q, self.verifier_gen,
            R_PREDICATES[name], name,
        )


@dataclass(frozen=True)
class PromiseCheck:
    ok: bool
    count: int
    bound: int

    def __str__(self) -> str:
        rel = "<=" if self.ok else ">"
        return f"census {self.count} {rel} bound {self.bound}"


def brute_force_f(lang: FewLanguage, x: BitString, cap: int = DEFAULT_CAP) -> int:
    """Census by exhaustive path enumeration; the independent count oracle."""
    return count_witnesses(lang.verifier(x), cap=cap)


def brute_force_paths(
    lang: FewLanguage, x: BitString, cap: int = DEFAULT_CAP
) -> list[BitString]:
    """All accepting paths in strictly increasing lexicographic order."""
    circuit = lang.verifier(x)
    width = circuit.input_count
    if width > cap:
        raise ResourceLimitError(
            f"{width} path bits exceed enumeration cap {cap}"
        )
    paths = []
    for value in range(1 << width):
        w = BitString.from_int(value, width)
        if evaluate(circuit, w):
            paths.append(w)
    return paths


def verify_promise(
    lang: FewLanguage, x: BitString, cap: int = DEFAULT_CAP
) -> PromiseCheck:
    """Check the census promise f(x) <= q(|x|) by brute force."""
    count = brute_force_f(lang, x, cap=cap)
    bound = lang.q(len(x))
    return PromiseCheck(count <= bound, count, bound)


def _const0_machine(plen: int = 2, qbound: int = 0) -> FewLanguage:
    if plen < 1:
        raise MachineError("const0: path length must be >= 1")

    def gen(x: BitString) -> Circuit:
        b = CircuitBuilder(plen)
        return b.build(b.const(0))

    return FewLanguage(
        "const0", PolyBound.constant(plen), PolyBound.constant(qbound),
        gen, R_PREDICATES["fewp"],
    )


def _exact1_machine(width: int = 2, value: int = 2) -> FewLanguage:
    if width < 1:
        raise MachineError("exact1: width must be >= 1")
    pattern = BitString.from_int(value, width)

    def gen(x: BitString) -> Circuit:
        b = CircuitBuilder(width)
        bits = []
        for k in range(1, width + 1):
            ref = b.input(k)
            bits.append(ref if pattern.bit(k) else b.not_(ref))
        return b.build(b.and_all(bits))

    return FewLanguage(
        "exact1", PolyBound.constant(width), PolyBound.constant(1),
        gen, R_PREDICATES["fewp"],
    )


def _xor2_machine(qbound: int = 2) -> FewLanguage:
    def gen(x: BitString) -> Circuit:
        b = CircuitBuilder(2)
        return b.build(b.xor(b.input(1), b.input(2)))

    return FewLanguage(
        "xor2", PolyBound.constant(2), PolyBound.constant(qbound),
        gen, R_PREDICATES["fewp"],
    )


def _onehot_machine(qbound: int | None = None) -> FewLanguage:
    def gen(x: BitString) -> Circuit:
        n = len(x)
        return build_exactly_k(n, list(range(1, n + 1)), 1)

    q = PolyBound.identity() if qbound is None else PolyBound.constant(qbound)
    return FewLanguage(
        "onehot", PolyBound.identity(), q, gen, R_PREDICATES["fewp"],
    )


def _subsetsum_machine(target: int = 1, qbound: int | None = None) -> FewLanguage:
    if target < 0:
        raise MachineError("subsetsum: target must be >= 0")

    def gen(x: BitString) -> Circuit:
        # Positions where x carries a 0 contribute nothing to the sum, so
        # those witness bits stay free: the census doubles per zero digit.
        ones = [k for k in range(1, len(x) + 1) if x.bit(k) == 1]
        return build_exactly_k(len(x), ones, target)

    q = PolyBound.identity() if qbound is None else PolyBound.constant(qbound)
    return FewLanguage(
        "subsetsum", PolyBound.identity(), q, gen, R_PREDICATES["fewp"],
    )


MACHINES: dict[str, Callable[..., FewLanguage]] = {
    "const0": _const0_machine,
    "exact1": _exact1_machine,
    "xor2": _xor2_machine,
    "onehot": _onehot_machine,
    "subsetsum": _subsetsum_machine,
}


def make_machine(name: str, params: Sequence[int] = ()) -> FewLanguage:
    """Instantiate a library machine by CLI name and integer parameters."""
    if name not in MACHINES:
        raise MachineError(
            f"unknown machine {name!r}; available: {', '.join(sorted(MACHINES))}"
        )
    try:
        return MACHINES[name](*params)
    except TypeError as exc:
        raise MachineError(f"bad parameters for {name}: {exc}") from exc
