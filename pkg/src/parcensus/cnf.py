"""CNF formulas, a parsimony-preserving circuit compiler, and DIMACS I/O.

The compiler's contract is exact solution-count preservation over *all*
declared variables: every auxiliary variable it introduces is functionally
determined by the witness bits, so each accepting witness extends to
exactly one model and each rejecting witness to none.  Serialization is
canonical down to the byte so formulas can double as deterministic oracle
inputs and file names.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .circuit import (
    Circuit,
    DEFAULT_CAP,
    OP_AND,
    OP_CONST0,
    OP_CONST1,
    OP_INPUT,
    OP_NOT,
    OP_OR,
    OP_XOR,
)
from .errors import CnfError, DimacsParseError, ResourceLimitError


@dataclass(frozen=True)
class CnfFormula:
    """Clause list over vars 1..var_count, witness variables first.

    The canonical constant-false formula is the single empty clause; it is
    the one case where an empty clause is produced by the compiler.
    """

    var_count: int
    witness_var_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.var_count < 0:
            raise CnfError("var_count must be non-negative")
        if not 0 <= self.witness_var_count <= self.var_count:
            raise CnfError(
                f"witness_var_count {self.witness_var_count} outside "
                f"0..{self.var_count}"
            )
        for clause in self.clauses:
            seen = set()
            for lit in clause:
                if lit == 0:
                    raise CnfError("literal 0 is not allowed in a clause")
                if abs(lit) > self.var_count:
                    raise CnfError(
                        f"literal {lit} references a variable above "
                        f"{self.var_count}"
                    )
                if -lit in seen:
                    raise CnfError(
                        f"tautological clause contains {lit} and {-lit}"
                    )
                seen.add(lit)

    @classmethod
    def constant_false(cls, witness_var_count: int) -> "CnfFormula":
        return cls(witness_var_count, witness_var_count, ((),))


_FOLD_CONST = "const"


def tseitin_parsimonious(circuit: Circuit) -> CnfFormula:
    """Compile a circuit to CNF with exactly as many models as witnesses.

    Witness bits become variables 1..input_count.  Gates are folded through
    constants and duplicate/complementary operands; each surviving binary
    gate gets one fresh auxiliary variable, numbered in gate order, pinned
    to its operands by biconditional clauses.  The output is asserted by a
    unit clause.  Circuits whose output folds to a constant compile to the
    canonical forms: no clauses (constant true) or the single empty clause
    (constant false); both keep only the witness variables declared.

    Deterministic: identical circuits give byte-identical DIMACS.
    """
    witness = circuit.input_count
    clauses: list[tuple[int, ...]] = []
    next_var = witness + 1
    # Per-gate representation: ("const", 0/1) or a signed literal.
    reps: list = []

    def alloc() -> int:
        nonlocal next_var
        var = next_var
        next_var += 1
        return var

    for gate in circuit.gates:
        if gate.op == OP_INPUT:
            reps.append(gate.args[0])
        elif gate.op == OP_CONST0:
            reps.append((_FOLD_CONST, 0))
        elif gate.op == OP_CONST1:
            reps.append((_FOLD_CONST, 1))
        elif gate.op == OP_NOT:
            a = reps[gate.args[0]]
            if isinstance(a, tuple):
                reps.append((_FOLD_CONST, 1 - a[1]))
            else:
                reps.append(-a)
        else:
            a = reps[gate.args[0]]
            b = reps[gate.args[1]]
            a_const = isinstance(a, tuple)
            b_const = isinstance(b, tuple)
            if gate.op == OP_AND:
                if a_const:
                    reps.append(b if a[1] else (_FOLD_CONST, 0))
                elif b_const:
                    reps.append(a if b[1] else (_FOLD_CONST, 0))
                elif a == b:
                    reps.append(a)
                elif a == -b:
                    reps.append((_FOLD_CONST, 0))
                else:
                    g = alloc()
                    clauses.append((-g, a))
                    clauses.append((-g, b))
                    clauses.append((g, -a, -b))
                    reps.append(g)
            elif gate.op == OP_OR:
                if a_const:
                    reps.append((_FOLD_CONST, 1) if a[1] else b)
                elif b_const:
                    reps.append((_FOLD_CONST, 1) if b[1] else a)
                elif a == b:
                    reps.append(a)
                elif a == -b:
                    reps.append((_FOLD_CONST, 1))
                else:
                    g = alloc()
                    clauses.append((-g, a, b))
                    clauses.append((g, -a))
                    clauses.append((g, -b))
                    reps.append(g)
            else:  # OP_XOR
                if a_const and b_const:
                    reps.append((_FOLD_CONST, a[1] ^ b[1]))
                elif a_const:
                    reps.append(-b if a[1] else b)
                elif b_const:
                    reps.append(-a if b[1] else a)
                elif a == b:
                    reps.append((_FOLD_CONST, 0))
                elif a == -b:
                    reps.append((_FOLD_CONST, 1))
                else:
                    g = alloc()
                    clauses.append((-g, a, b))
                    clauses.append((-g, -a, -b))
                    clauses.append((g, -a, b))
                    clauses.append((g, a, -b))
                    reps.append(g)

    out = reps[circuit.output]
    if isinstance(out, tuple):
        if out[1]:
            return CnfFormula(witness, witness, ())
        return CnfFormula.constant_false(witness)
    clauses.append((out,))
    return CnfFormula(next_var - 1, witness, tuple(clauses))


def count_models(formula: CnfFormula, cap: int = DEFAULT_CAP) -> int:
    """Exact model count over all declared variables, by enumeration."""
    if formula.var_count > cap:
        raise ResourceLimitError(
            f"{formula.var_count} variables exceed enumeration cap {cap}"
        )
    return kernels.count_models(formula.var_count, formula.clauses)


def to_dimacs(formula: CnfFormula) -> bytes:
    """Canonical DIMACS bytes, witness count carried in one comment line."""
    lines = [
        f"c witness {formula.witness_var_count}",
        f"p cnf {formula.var_count} {len(formula.clauses)}",
    ]
    for clause in formula.clauses:
        lines.append(" ".join(str(lit) for lit in clause + (0,)))
    return ("\n".join(lines) + "\n").encode("ascii")


def from_dimacs(data: bytes) -> CnfFormula:
    """Parse DIMACS produced by :func:`to_dimacs` (round-trip identity).

    Extra comment lines are tolerated; a missing witness comment defaults
    the witness count to the full variable count.
    """
    var_count = None
    clause_count = None
    witness: int | None = None
    clauses: list[tuple[int, ...]] = []
    header_line = 0
    for lineno, raw in enumerate(data.decode("ascii").splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split()
            if len(parts) == 3 and parts[1] == "witness":
                try:
                    witness = int(parts[2])
                except ValueError:
                    raise DimacsParseError("bad witness comment", lineno)
            continue
        if line.startswith("p"):
            if var_count is not None:
                raise DimacsParseError("duplicate header line", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsParseError(f"malformed header {line!r}", lineno)
            try:
                var_count = int(parts[2])
                clause_count = int(parts[3])
            except ValueError:
                raise DimacsParseError(f"malformed header {line!r}", lineno)
            if var_count < 0 or clause_count < 0:
                raise DimacsParseError("negative header counts", lineno)
            header_line = lineno
            continue
        if var_count is None:
            raise DimacsParseError("clause before header", lineno)
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError:
            raise DimacsParseError(f"non-integer literal in {line!r}", lineno)
        if not lits or lits[-1] != 0:
            raise DimacsParseError("clause line must end with 0", lineno)
        body = lits[:-1]
        if 0 in body:
            raise DimacsParseError("embedded clause terminator", lineno)
        for lit in body:
            if abs(lit) > var_count:
                raise DimacsParseError(
                    f"literal {lit} out of range 1..{var_count}", lineno
                )
        seen = set(body)
        for lit in body:
            if -lit in seen:
                raise DimacsParseError(
                    f"tautological clause contains {lit} and {-lit}", lineno
                )
        clauses.append(tuple(body))
    if var_count is None:
        raise DimacsParseError("missing header line", len(data.splitlines()) or 1)
    if len(clauses) != clause_count:
        raise DimacsParseError(
            f"header declares {clause_count} clauses, found {len(clauses)}",
            header_line,
        )
    if witness is None:
        witness = var_count
    if not 0 <= witness <= var_count:
        raise DimacsParseError(
            f"witness count {witness} outside 0..{var_count}", header_line
        )
    return CnfFormula(var_count, witness, tuple(clauses))
