#!/usr/bin/env python3
"""Print side-by-side Goodstein traces for one start value.

Usage: trace_demo.py [start] [max_steps]

Shows how the classic process churns through astronomically many steps
while the Ackermannian variants climb through normal forms whose ordinal
assignments visibly descend.
"""

import sys

from ackgoodstein.ackmath import ExceedsBound
from ackgoodstein.goodstein import run


def show(variant: str, start: int, max_steps: int) -> None:
    trace = run(variant, start, max_steps, with_ordinals=variant != "classic")
    print(f"--- {variant}, start {start} ---")
    for record in trace.steps:
        if isinstance(record.value, ExceedsBound):
            print(f"  k={record.k}: value exceeds bound, truncating")
            break
        value = str(record.value)
        if len(value) > 40:
            value = f"{value[:12]}...({len(value)} digits)"
        line = f"  k={record.k} base={record.base}: {value}"
        if record.ordinal is not None:
            ordinal = record.ordinal
            if len(ordinal) > 70:
                ordinal = ordinal[:67] + "..."
            line += f"   o = {ordinal}"
        print(line)
    if trace.terminated:
        print("  terminated")
    elif trace.truncated_reason:
        print(f"  truncated: {trace.truncated_reason}")


def main() -> None:
    start = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    max_steps = int(sys.argv[2]) if len(sys.argv) > 2 else 8
    for variant in ("classic", "unnested", "nested"):
        show(variant, start, max_steps)


if __name__ == "__main__":
    main()
