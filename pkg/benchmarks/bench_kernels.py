#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python fallback.

Both backends are imported directly, so no environment switch is needed.
Each workload is checked for equal results before it is timed.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import timeit
from itertools import permutations

from skewpat import _pykernels
from skewpat.core import SkewShape
from skewpat.enumeration import order_masks

try:
    from skewpat import _kernels
except ImportError:
    _kernels = None

PATTERNS = [(1, 2, 3), (3, 2, 1), (2, 1, 3), (1, 3, 2), (3, 1, 2), (2, 3, 1)]


def workloads():
    rng = random.Random(1)
    words = [tuple(rng.sample(range(1, 41), 40)) for _ in range(200)]
    small = list(permutations(range(1, 8)))
    masks = order_masks(SkewShape.parse("4,4,3,2/2,1"))
    sigs = ["".join(rng.choice("<>*") for _ in range(11)) for _ in range(20)]
    return {
        "lis_length (200 words of length 40)": lambda k: [k.lis_length(w) for w in words],
        "contains_pattern 2413 (all of S_7)": lambda k: [k.contains_pattern(w, (2, 4, 1, 3)) for w in small],
        "count_extensions 4,4,3,2/2,1 x 6 patterns": lambda k: k.count_extensions(masks, PATTERNS),
        "count_signature_123 (20 signatures, 12 letters)": lambda k: [k.count_signature_123(s) for s in sigs],
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; run pip install -e . --no-build-isolation", file=sys.stderr)
        return 1
    rows = []
    for name, job in workloads().items():
        if job(_kernels) != job(_pykernels):
            print(f"backends disagree on {name}", file=sys.stderr)
            return 1
        fast = min(timeit.repeat(lambda: job(_kernels), number=1, repeat=args.repeat))
        slow = min(timeit.repeat(lambda: job(_pykernels), number=1, repeat=args.repeat))
        rows.append({"workload": name, "compiled_s": fast, "python_s": slow, "speedup": slow / fast})
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        width = max(len(r["workload"]) for r in rows)
        print(f"{'workload':<{width}}  {'compiled':>10}  {'python':>10}  speedup")
        for r in rows:
            print(f"{r['workload']:<{width}}  {r['compiled_s']:>9.4f}s  {r['python_s']:>9.4f}s  {r['speedup']:6.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
