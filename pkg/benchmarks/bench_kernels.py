"""Compare the compiled kernels with the pure-Python reference.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same inputs under both backends; results must agree.
The last section times full skew brace enumeration in a subprocess per
backend (HOPFBRACE_PURE_PYTHON switches the import-time choice).
"""

from __future__ import annotations

import argparse
import itertools
import os
import random
import subprocess
import sys
import timeit
from array import array

from hopfbrace import _kernels_py as py
from hopfbrace.corpus import cyclic_table, groups, product_table

try:
    from hopfbrace import _kernels as cy
except ImportError:
    cy = None


def flat(t):
    return array("q", [x for r in t for x in r])


def cases():
    _, s3 = groups()["S3"]
    z6 = cyclic_table(6)
    z2z4 = product_table(cyclic_table(2), cyclic_table(4))
    n = 6
    inv = array("q", [next(b for b in range(n) if s3[a][b] == 0) for a in range(n)])
    perms = []
    for p in itertools.permutations(range(1, n)):
        perms.extend((0,) + p)
    rng = random.Random(0)
    mat = [rng.randrange(101) for _ in range(60 * 80)]
    r1 = array("q", [b for a in range(n) for b in range(n)])
    r2 = array("q", [a for a in range(n) for b in range(n)])
    return {
        "assoc_violation": lambda k: k.assoc_violation(flat(z2z4), 8),
        "is_latin": lambda k: k.is_latin(flat(s3), 6),
        "brace_violation": lambda k: k.brace_violation(flat(s3), flat(z6), inv, 6),
        "canonical_pair": lambda k: k.canonical_pair(flat(s3), flat(s3), 6, array("q", perms), len(perms) // 6),
        "set_braid_violation": lambda k: k.set_braid_violation(r1, r2, 6),
        "gfp_rref": lambda k: (lambda m: (k.gfp_rref(m, 60, 80, 101), list(m)))(array("q", mat)),
    }


def enumeration_time(pure: bool) -> float:
    env = dict(os.environ, HOPFBRACE_PURE_PYTHON="1" if pure else "0")
    code = ("import time; from hopfbrace.skew import enumerate_skew_braces as e; t=time.perf_counter(); "
            "[e(n) for n in range(1, 7)]; print(time.perf_counter()-t)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'kernel':<22}{'python (ms)':>14}{'compiled (ms)':>16}{'speedup':>10}")
    for name, call in cases().items():
        tp = min(timeit.repeat(lambda: call(py), number=1, repeat=args.repeat)) * 1e3
        if cy is None:
            print(f"{name:<22}{tp:>14.3f}{'-':>16}{'-':>10}")
            continue
        if call(py) != call(cy):
            print(f"{name}: backends disagree")
            return 1
        tc = min(timeit.repeat(lambda: call(cy), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<22}{tp:>14.3f}{tc:>16.3f}{tp / tc:>9.1f}x")
    tp = enumeration_time(True)
    line = f"{'enumerate orders 1-6':<22}{tp * 1e3:>14.1f}"
    if cy is not None:
        tc = enumeration_time(False)
        line += f"{tc * 1e3:>16.1f}{tp / tc:>9.1f}x"
    print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
