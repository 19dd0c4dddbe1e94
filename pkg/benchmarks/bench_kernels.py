#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Runs each batch kernel on identical inputs through both backends, checks the
outputs agree bitwise, and prints a timing table.

    python benchmarks/bench_kernels.py [--trials 50000] [--n-max 200]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from duodetect import _kernels_py as pyk
from duodetect.aggspace import exact_decision_law
from duodetect.cli import load_model
from duodetect.sim import _pad_beta_tables, batch_streams

try:
    from duodetect import _kernels as ck
except ImportError:
    ck = None


def timed(fn, *args, repeats=3):
    best = math.inf
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--model", default="indep3x4")
    parser.add_argument("--trials", type=int, default=50_000)
    parser.add_argument("--n-max", type=int, default=200)
    args = parser.parse_args()

    if ck is None:
        print("compiled kernels unavailable; build the extension first")
        return 1

    model = load_model(args.model)
    h, cells = batch_streams(model, 2024, (0, 0), args.trials, args.n_max)
    lj = model.llr_joint.ravel()
    dsd1 = exact_decision_law(model, 1, 1.0, 7)
    dsd2 = exact_decision_law(model, 2, 1.0, 7)
    bt1, bt2 = _pad_beta_tables(dsd1), _pad_beta_tables(dsd2)

    cases = {
        "fixed_n_decisions": (
            cells, model.s2_size, lj, model.llr1, model.llr2,
            min(20, args.n_max), -1.0, 0.0, 0.0,
        ),
        "basic_consensus": (cells, model.s2_size, model.llr1, model.llr2, 0.0, 0.0),
        "sprt": (
            cells, lj, math.log2(1 / 9), math.log2(9),
            math.log2(model.prior[0] / model.prior[1]),
        ),
        "accuracy_exchange": (
            cells, model.s2_size, model.llr1, model.llr2,
            model._m1, model._m2, bt1, bt2, 7, 0.0, 0.0, 0.3, 0.7, model.prior[1],
        ),
    }

    print(f"model={args.model} trials={args.trials} n_max={args.n_max}")
    print(f"{'kernel':22s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, case in cases.items():
        t_py, out_py = timed(getattr(pyk, name), *case)
        t_c, out_c = timed(getattr(ck, name), *case)
        outs_py = out_py if isinstance(out_py, tuple) else (out_py,)
        outs_c = out_c if isinstance(out_c, tuple) else (out_c,)
        ok = all(np.array_equal(a, b) for a, b in zip(outs_py, outs_c))
        flag = "" if ok else "  MISMATCH"
        print(f"{name:22s} {t_py:9.4f}s {t_c:9.4f}s {t_py / t_c:7.1f}x{flag}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
