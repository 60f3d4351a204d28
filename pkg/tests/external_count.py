#!/usr/bin/env python3
"""Standalone exact model counter: DIMACS on stdin, count on stdout.

Exercises the subprocess cross-check interface.  Independent of the
package on purpose; parsing and counting are written from scratch.
Pass --off-by-one to make it deliberately wrong.
"""

import itertools
import sys


def main():
    broken = "--off-by-one" in sys.argv[1:]
    n_vars = 0
    clauses = []
    for line in sys.stdin.read().splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            n_vars = int(line.split()[2])
            continue
        lits = [int(tok) for tok in line.split()]
        assert lits[-1] == 0
        clauses.append(lits[:-1])
    count = 0
    for bits in itertools.product((0, 1), repeat=n_vars):
        if all(
            any(bits[abs(l) - 1] == (1 if l > 0 else 0) for l in clause)
            for clause in clauses
        ):
            count += 1
    print(count + (1 if broken else 0))


if __name__ == "__main__":
    main()
