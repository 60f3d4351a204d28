"""Witness-census recovery through one parallel batch of promise-SAT queries.

Given a machine whose accepting-path count is polynomially bounded, the
pipeline compiles every cardinality guess into a solution-count-preserving
CNF instance, asks a unique-solution SAT oracle about all of them in a
single parallel round, and decodes the answers into the exact census, the
complete sorted list of accepting paths, and the machine's membership
verdict — for every choice of the oracle's tie-breaking predicate.
"""

from .circuit import (
    BitString,
    Circuit,
    CircuitBuilder,
    DEFAULT_CAP,
    Gate,
    build_bit_equals,
    build_exactly_k,
    build_less_than,
    conjoin,
    count_witnesses,
    evaluate,
    remap_inputs,
)
from .cnf import (
    CnfFormula,
    count_models,
    from_dimacs,
    to_dimacs,
    tseitin_parsimonious,
)
from .machines import (
    FewLanguage,
    MACHINES,
    PolyBound,
    R_PREDICATES,
    brute_force_f,
    brute_force_paths,
    make_machine,
    verify_promise,
)
from .census import (
    CensusResult,
    Query,
    build_j_circuit,
    canonical_query_id,
    decode_answers,
    generate_queries,
    run_pipeline,
)
from .oracle import (
    ExternalCounter,
    OracleLog,
    QPredicate,
    UsatQOracle,
    anti_sat,
    const_no,
    const_yes,
    member_list,
    q_family,
    seeded_random,
    usatq_answer,
)
from .errors import (
    CircuitError,
    CnfError,
    DimacsParseError,
    MachineError,
    ParcensusError,
    ProtocolError,
    ResourceLimitError,
)
from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "BitString",
    "Circuit",
    "CircuitBuilder",
    "CensusResult",
    "CnfFormula",
    "CircuitError",
    "CnfError",
    "DEFAULT_CAP",
    "DimacsParseError",
    "ExternalCounter",
    "FewLanguage",
    "Gate",
    "KERNEL_BACKEND",
    "MACHINES",
    "MachineError",
    "OracleLog",
    "ParcensusError",
    "PolyBound",
    "ProtocolError",
    "QPredicate",
    "Query",
    "R_PREDICATES",
    "ResourceLimitError",
    "UsatQOracle",
    "anti_sat",
    "brute_force_f",
    "brute_force_paths",
    "build_bit_equals",
    "build_exactly_k",
    "build_j_circuit",
    "build_less_than",
    "canonical_query_id",
    "conjoin",
    "const_no",
    "const_yes",
    "count_models",
    "count_witnesses",
    "decode_answers",
    "evaluate",
    "from_dimacs",
    "generate_queries",
    "make_machine",
    "member_list",
    "q_family",
    "remap_inputs",
    "run_pipeline",
    "seeded_random",
    "to_dimacs",
    "tseitin_parsimonious",
    "usatq_answer",
    "verify_promise",
]
