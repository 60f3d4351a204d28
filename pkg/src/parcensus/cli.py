"""Command-line front end.

Subcommands:

    run          run the pipeline, print the decoded census report
    queries      list the query battery without touching the oracle
    emit-dimacs  write one .cnf file per query into an empty directory
    verify       differential check of the pipeline against brute force
    q-sweep      run the whole predicate family and compare results

Exit codes: 0 ok/match, 1 usage, 2 resource limit, 3 inconsistent or
promise violation, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .census import CensusResult, decode_answers, generate_queries, run_pipeline
from .circuit import BitString, DEFAULT_CAP
from .errors import (
    MachineError,
    ParcensusError,
    ProtocolError,
    ResourceLimitError,
)
from .machines import (
    FewLanguage,
    R_PREDICATES,
    brute_force_f,
    brute_force_paths,
    make_machine,
    verify_promise,
)
from . import oracle as oracle_mod

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_INCONSISTENT = 3
EXIT_MISMATCH = 4

Q_CHOICES = ("const-no", "const-yes", "anti-sat", "random")

TRACE_COLUMNS = ("c", "j", "k", "b", "cnf_vars", "cnf_clauses", "answer")


class UsageError(ParcensusError):
    pass


@dataclass
class RunConfig:
    mode: str
    machine: str = "xor2"
    params: list[int] = field(default_factory=list)
    input_bits: str = ""
    r_name: str = "fewp"
    q_name: str = "const-no"
    seed: int = 0
    cap: int = DEFAULT_CAP
    out_dir: str | None = None
    trace: str | None = None


def _parse_config_file(path: str) -> dict:
    """Plain key=value lines; '#' starts a comment; param may repeat."""
    values: dict = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "param":
            values.setdefault("param", []).extend(
                int(tok) for tok in value.replace(",", " ").split()
            )
        else:
            values[key] = value
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parcensus",
        description="Recover witness censuses and path lists through one "
        "parallel batch of unique-solution SAT queries.",
    )
    parser.add_argument(
        "mode",
        choices=("run", "queries", "emit-dimacs", "verify", "q-sweep"),
        help="subcommand",
    )
    parser.add_argument("--machine", help="machine name (default xor2)")
    parser.add_argument(
        "--param", action="append", type=int, default=None,
        metavar="N", help="machine parameter; repeatable",
    )
    parser.add_argument("--input", dest="input_bits", metavar="BITS",
                        help="input bit string")
    parser.add_argument("--r", dest="r_name", metavar="NAME",
                        help=f"decision predicate: {', '.join(sorted(R_PREDICATES))}")
    parser.add_argument("--q", dest="q_name", metavar="NAME",
                        help=f"oracle tie-breaker: {', '.join(Q_CHOICES)}")
    parser.add_argument("--seed", type=int, help="seed for --q random")
    parser.add_argument("--cap", type=int, help="enumeration cap (bits)")
    parser.add_argument("--out", dest="out_dir", metavar="DIR",
                        help="output directory for emit-dimacs")
    parser.add_argument("--trace", metavar="FILE", help="write a TSV trace")
    parser.add_argument("--config", metavar="FILE",
                        help="key=value file supplying defaults")
    return parser


def _merge_config(args: argparse.Namespace) -> RunConfig:
    from_file = _parse_config_file(args.config) if args.config else {}

    def pick(cli_value, key: str, default, convert=lambda v: v):
        if cli_value is not None:
            return cli_value
        if key in from_file:
            return convert(from_file[key])
        return default

    try:
        cfg = RunConfig(
            mode=args.mode,
            machine=pick(args.machine, "machine", "xor2"),
            params=pick(args.param, "param", []),
            input_bits=pick(args.input_bits, "input", ""),
            r_name=pick(args.r_name, "r", "fewp"),
            q_name=pick(args.q_name, "q", "const-no"),
            seed=pick(args.seed, "seed", 0, int),
            cap=pick(args.cap, "cap", DEFAULT_CAP, int),
            out_dir=pick(args.out_dir, "out", None),
            trace=pick(args.trace, "trace", None),
        )
    except ValueError as exc:
        raise UsageError(f"bad config value: {exc}")
    if not cfg.input_bits or any(ch not in "01" for ch in cfg.input_bits):
        raise UsageError("--input must be a nonempty string over 0/1")
    if cfg.cap <= 0:
        raise UsageError("--cap must be positive")
    if cfg.r_name not in R_PREDICATES:
        raise UsageError(
            f"unknown predicate {cfg.r_name!r}; "
            f"available: {', '.join(sorted(R_PREDICATES))}"
        )
    if cfg.q_name not in Q_CHOICES:
        raise UsageError(
            f"unknown oracle predicate {cfg.q_name!r}; "
            f"available: {', '.join(Q_CHOICES)}"
        )
    return cfg


def _make_language(cfg: RunConfig) -> FewLanguage:
    lang = make_machine(cfg.machine, cfg.params)
    return lang.with_predicate(cfg.r_name)


def _make_predicate(cfg: RunConfig) -> oracle_mod.QPredicate:
    if cfg.q_name == "const-no":
        return oracle_mod.const_no()
    if cfg.q_name == "const-yes":
        return oracle_mod.const_yes()
    if cfg.q_name == "anti-sat":
        return oracle_mod.anti_sat()
    return oracle_mod.seeded_random(cfg.seed)


def _write_trace(path: str, queries, answers) -> None:
    with open(path, "w") as fh:
        fh.write("\t".join(TRACE_COLUMNS) + "\n")
        for query in queries:
            answer = "" if answers is None else str(answers[query.key])
            fh.write(
                "\t".join(
                    (
                        str(query.c), str(query.j), str(query.k),
                        str(query.b), str(query.formula.var_count),
                        str(len(query.formula.clauses)), answer,
                    )
                )
                + "\n"
            )


def cmd_run(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    lang = _make_language(cfg)
    x = BitString(cfg.input_bits)
    oracle = oracle_mod.UsatQOracle(_make_predicate(cfg), cap=cfg.cap)
    queries = generate_queries(lang, x, cap=cfg.cap)
    answers = oracle.answer_batch(queries)
    result = decode_answers(lang, x, answers)
    if cfg.trace:
        _write_trace(cfg.trace, queries, answers)
    print(f"machine: {lang.name}  input: {x}", file=out)
    print(f"battery: {len(queries)} queries  Q: {oracle.predicate.name}",
          file=out)
    if result.ok:
        paths = " ".join(p.to01() for p in result.paths) or "-"
        print(f"f_hat: {result.f_hat}", file=out)
        print(f"paths: {paths}", file=out)
        print(f"member: {result.member} (R={lang.predicate_name})", file=out)
        print("consistent: ok", file=out)
        return EXIT_OK
    print(f"consistent: inconsistent ({result.inconsistency})", file=out)
    return EXIT_INCONSISTENT


def cmd_queries(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    lang = _make_language(cfg)
    x = BitString(cfg.input_bits)
    queries = generate_queries(lang, x, cap=cfg.cap)
    print("\t".join(("c", "j", "k", "b", "cnf_vars", "cnf_clauses")), file=out)
    for query in queries:
        print(
            "\t".join(
                (
                    str(query.c), str(query.j), str(query.k), str(query.b),
                    str(query.formula.var_count),
                    str(len(query.formula.clauses)),
                )
            ),
            file=out,
        )
    if cfg.trace:
        _write_trace(cfg.trace, queries, None)
    return EXIT_OK


def cmd_emit_dimacs(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    from .cnf import to_dimacs

    if not cfg.out_dir:
        raise UsageError("emit-dimacs needs --out DIR")
    target = Path(cfg.out_dir)
    if target.exists() and any(target.iterdir()):
        raise UsageError(f"refusing to write into non-empty {target}")
    target.mkdir(parents=True, exist_ok=True)
    lang = _make_language(cfg)
    x = BitString(cfg.input_bits)
    queries = generate_queries(lang, x, cap=cfg.cap)
    for query in queries:
        (target / f"{query.canonical_id}.cnf").write_bytes(
            to_dimacs(query.formula)
        )
    print(f"wrote {len(queries)} files to {target}", file=out)
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    lang = _make_language(cfg)
    x = BitString(cfg.input_bits)
    promise = verify_promise(lang, x, cap=cfg.cap)
    expected_f = brute_force_f(lang, x, cap=cfg.cap)
    expected_paths = brute_force_paths(lang, x, cap=cfg.cap)
    expected_member = int(lang.predicate(x, expected_f))

    oracle = oracle_mod.UsatQOracle(_make_predicate(cfg), cap=cfg.cap)
    result = run_pipeline(lang, x, oracle)

    print(f"machine: {lang.name}  input: {x}  Q: {oracle.predicate.name}",
          file=out)
    print(f"promise: {'ok' if promise.ok else 'VIOLATED'} ({promise})",
          file=out)
    if not result.ok:
        print(f"pipeline: inconsistent ({result.inconsistency})", file=out)
        print("verdict: PROMISE-VIOLATION" if not promise.ok
              else "verdict: INCONSISTENT", file=out)
        return EXIT_INCONSISTENT
    f_match = result.f_hat == expected_f
    paths_match = list(result.paths) == expected_paths
    member_match = result.member == expected_member
    print(f"census: pipeline={result.f_hat} brute={expected_f} "
          f"{'match' if f_match else 'MISMATCH'}", file=out)
    print(f"paths: {'match' if paths_match else 'MISMATCH'}", file=out)
    print(f"member: pipeline={result.member} expected={expected_member} "
          f"{'match' if member_match else 'MISMATCH'}", file=out)
    if not promise.ok:
        print("verdict: PROMISE-VIOLATION", file=out)
        return EXIT_INCONSISTENT
    if f_match and paths_match and member_match:
        print("verdict: MATCH", file=out)
        return EXIT_OK
    print("verdict: MISMATCH", file=out)
    return EXIT_MISMATCH


def cmd_q_sweep(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    lang = _make_language(cfg)
    x = BitString(cfg.input_bits)
    results: list[tuple[str, CensusResult]] = []
    for predicate in oracle_mod.q_family(cfg.seed):
        oracle = oracle_mod.UsatQOracle(predicate, cap=cfg.cap)
        result = run_pipeline(lang, x, oracle)
        results.append((predicate.name, result))
        print(f"{predicate.name}: {result.summary()}", file=out)
    all_equal = all(result == results[0][1] for _, result in results)
    print(f"Q-independent: {'yes' if all_equal else 'NO'}", file=out)
    if not all_equal:
        return EXIT_MISMATCH
    if not results[0][1].ok:
        return EXIT_INCONSISTENT
    return EXIT_OK


_COMMANDS = {
    "run": cmd_run,
    "queries": cmd_queries,
    "emit-dimacs": cmd_emit_dimacs,
    "verify": cmd_verify,
    "q-sweep": cmd_q_sweep,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors; remap per contract
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = _merge_config(args)
        return _COMMANDS[cfg.mode](cfg)
    except (UsageError, MachineError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ProtocolError as exc:
        print(f"protocol error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ParcensusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
