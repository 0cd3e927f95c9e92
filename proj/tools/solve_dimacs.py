#!/usr/bin/env python3
# Copyright 2026 The Capset Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Runs a CDCL solver from python-sat on a DIMACS file.

Prints SAT-competition output ("s ..." and "v ..." lines) so that
`capset sat decode` can read it. Exit codes follow the competition
convention: 10 satisfiable, 20 unsatisfiable, 0 unknown.

    solve_dimacs.py instance.cnf [--solver cadical153] [-o model.txt]
"""

import argparse
import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("cnf")
    parser.add_argument("--solver", default="cadical153")
    parser.add_argument("-o", "--output", help="write output here, not stdout")
    args = parser.parse_args()

    formula = CNF(from_file=args.cnf)
    with Solver(name=args.solver, bootstrap_with=formula.clauses) as solver:
        satisfiable = solver.solve()
        model = solver.get_model() if satisfiable else None

    lines = [f"c solver {args.solver}"]
    if satisfiable is None:
        lines.append("s UNKNOWN")
    elif satisfiable:
        lines.append("s SATISFIABLE")
        assigned = {abs(lit): lit for lit in model}
        full = [assigned.get(v, -v) for v in range(1, formula.nv + 1)]
        for start in range(0, len(full), 20):
            lines.append("v " + " ".join(map(str, full[start:start + 20])))
        lines.append("v 0")
    else:
        lines.append("s UNSATISFIABLE")
    text = "\n".join(lines) + "\n"

    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    if satisfiable is None:
        return 0
    return 10 if satisfiable else 20


if __name__ == "__main__":
    sys.exit(main())
