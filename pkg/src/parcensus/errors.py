"""Exception types shared across the package."""


class ParcensusError(Exception):
    """Base class for all errors raised by this package."""


class CircuitError(ParcensusError):
    """Malformed circuit, bad construction parameters, or input-arity mismatch."""


class CnfError(ParcensusError):
    """CNF formula violates a structural invariant (bad literal, tautology, ...)."""


class DimacsParseError(CnfError):
    """Invalid DIMACS input.  Carries the 1-based line number of the offense."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MachineError(ParcensusError):
    """A witness machine broke its contract (e.g. verifier width != p(|x|))."""


class ProtocolError(ParcensusError):
    """Answer map does not cover exactly the generated query battery."""


class ResourceLimitError(ParcensusError):
    """Instance exceeds the enumeration cap; not desk scale."""
