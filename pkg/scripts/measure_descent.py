#!/usr/bin/env python3
"""Tabulate the ordinal termination measure along unnested runs.

Usage: measure_descent.py [max_start] [max_steps]

For each start value the script walks the b-sequence, printing the
assignment at every materializable step; the strictly descending right
column is the whole termination argument, made visible.
"""

import sys

from ackgoodstein.ackmath import ExceedsBound
from ackgoodstein.goodstein import run
from ackgoodstein.ordinal_map import psi
from ackgoodstein.ordinals import format_ordinal


def main() -> None:
    max_start = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    max_steps = int(sys.argv[2]) if len(sys.argv) > 2 else 6
    for start in range(1, max_start + 1):
        trace = run("unnested", start, max_steps, bound=10**2000)
        row = []
        for record in trace.steps:
            if isinstance(record.value, ExceedsBound):
                row.append("(too large)")
                break
            text = format_ordinal(psi(record.base, record.value))
            if len(text) > 60:
                text = text[:57] + "..."
            row.append(text)
            if record.value == 0:
                break
        print(f"{start:3d}: " + "  >  ".join(row))


if __name__ == "__main__":
    main()
