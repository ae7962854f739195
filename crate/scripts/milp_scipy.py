#!/usr/bin/env python3
"""Solve an LP file written by `nanip ip-emit` with scipy's HiGHS MILP.

Usage: milp_scipy.py MODEL.lp SOLUTION.sol

Writes `name value` lines (or `status infeasible`) to SOLUTION.sol.
Only the subset of the LP format that nanip emits is understood.

    export NANIP_SOLVER_CMD='python3 scripts/milp_scipy.py {lp} {sol}'
"""

import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp
from scipy.sparse import lil_matrix


def parse_terms(tokens):
    terms, sign, i = [], 1.0, 0
    while i < len(tokens):
        tok = tokens[i]
        if tok in ("+", "-"):
            sign = -1.0 if tok == "-" else 1.0
            i += 1
            continue
        terms.append((tokens[i + 1], sign * float(tok)))
        sign = 1.0
        i += 2
    return terms


def parse(path):
    objective, rows, bounds, binaries = [], [], {}, set()
    order = []
    section = None
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("\\"):
                continue
            head = line.lower()
            if head in ("minimize", "subject to", "bounds", "binaries", "end"):
                section = head
                continue
            if section == "minimize":
                objective = parse_terms(line.split(":", 1)[1].split())
            elif section == "subject to":
                name, body = line.split(":", 1)
                tokens = body.split()
                sense, rhs = tokens[-2], float(tokens[-1])
                rows.append((name.strip(), parse_terms(tokens[:-2]), sense, rhs))
            elif section == "bounds":
                tokens = line.split()
                if len(tokens) == 5:
                    lo, name, hi = float(tokens[0]), tokens[2], float(tokens[4])
                else:
                    name, lo, hi = tokens[0], float(tokens[2]), np.inf
                bounds[name] = (lo, hi)
                order.append(name)
            elif section == "binaries":
                binaries.add(line)
    return objective, rows, bounds, binaries, order


def main():
    lp_path, sol_path = sys.argv[1], sys.argv[2]
    objective, rows, bounds, binaries, order = parse(lp_path)
    index = {name: i for i, name in enumerate(order)}
    n = len(order)

    c = np.zeros(n)
    for name, coef in objective:
        c[index[name]] += coef
    a = lil_matrix((max(len(rows), 1), n))
    lower = np.full(max(len(rows), 1), -np.inf)
    upper = np.full(max(len(rows), 1), np.inf)
    for r, (_, terms, sense, rhs) in enumerate(rows):
        for name, coef in terms:
            a[r, index[name]] += coef
        if sense in ("<=", "="):
            upper[r] = rhs
        if sense in (">=", "="):
            lower[r] = rhs
    integrality = np.array([1 if name in binaries else 0 for name in order])
    lo = np.array([bounds[name][0] for name in order])
    hi = np.array([bounds[name][1] for name in order])

    constraints = [LinearConstraint(a.tocsr(), lower, upper)] if rows else []
    result = milp(c, constraints=constraints, integrality=integrality, bounds=Bounds(lo, hi),
                  options={"mip_rel_gap": 0})
    with open(sol_path, "w") as out:
        if result.status == 2:
            out.write("status infeasible\n")
            return 0
        if result.x is None:
            sys.stderr.write(f"milp failed: {result.message}\n")
            return 2
        out.write("status optimal\n")
        for name, value in zip(order, result.x):
            if name in binaries:
                value = round(value)
            out.write(f"{name} {float(value)!r}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
