"""Benchmark: compiled vs pure-Python minimum-weight enumeration kernels.

Runs identical full codeword sweeps through both backends, asserts they
return bit-identical (weight, visited) pairs, and prints a timing table.

    python3 benchmarks/bench_distance.py [--quick]

The pure-Python kernel is the reference implementation; the compiled
Cython kernel must agree exactly, so this doubles as a differential test.
"""

import argparse
import time

import numpy as np

from duadic._kernels import BACKEND, _distance_py
from duadic.codes import LinearCode
from duadic.constructions import build_cyclic_euclidean, mds_generator_code
from duadic.fields import make_field

try:
    from duadic._kernels import _distance_cy
except ImportError:
    _distance_cy = None


def _prime_inputs(code: LinearCode):
    field = code.field
    total = field.q**code.k - 1
    return ("prime", code.genmat, field.p, total)


def _table_inputs(code: LinearCode):
    field = code.field
    q = field.q
    total = q**code.k - 1
    idx = np.arange(q, dtype=np.int64)
    nxt = np.roll(idx, -1)
    diff = (field.index_to_planes(nxt) - field.index_to_planes(idx)) % field.p
    diffs = field.planes_to_index(diff)
    steps = field.mul_index_arrays(
        diffs[None, :, None], code.genmat[:, None, :]
    ).astype(np.int32)
    return ("table", steps, field.add_table(), total)


def _run(kernel_module, inputs):
    t0 = time.perf_counter()
    if inputs[0] == "prime":
        out = kernel_module.min_weight_prime(inputs[1], inputs[2], inputs[3])
    else:
        out = kernel_module.min_weight_table(inputs[1], inputs[2], inputs[3])
    return out, time.perf_counter() - t0


def workloads(quick: bool):
    (e1, _), _ = build_cyclic_euclidean(13, 3)
    yield "[4,2] / GF(13), 1.7e2 words", _prime_inputs(e1)
    gf81 = mds_generator_code(make_field(3, 4), 5, 3)
    yield "[5,3] / GF(81), 5.3e5 words", _table_inputs(gf81)
    if quick:
        return
    (e1, _), _ = build_cyclic_euclidean(29, 7)
    yield "[8,4] / GF(29), 7.1e5 words", _prime_inputs(e1)
    gf25 = mds_generator_code(make_field(5, 2), 8, 4)
    yield "[8,4] / GF(25), 3.9e5 words", _table_inputs(gf25)
    gf13 = mds_generator_code(make_field(13), 12, 5)
    yield "[12,5] / GF(13), 3.7e5 words", _prime_inputs(gf13)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="small cases only")
    args = parser.parse_args()

    print(f"default backend at import time: {BACKEND}")
    if _distance_cy is None:
        print("compiled kernel unavailable; timing the pure-Python kernel only\n")
    header = f"{'workload':<34} {'python':>10} {'compiled':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, inputs in workloads(args.quick):
        py_out, py_t = _run(_distance_py, inputs)
        if _distance_cy is None:
            print(f"{label:<34} {py_t:>9.3f}s {'—':>10} {'—':>9}")
            continue
        cy_out, cy_t = _run(_distance_cy, inputs)
        if py_out != cy_out:
            print(f"MISMATCH on {label}: python {py_out} vs compiled {cy_out}")
            return 1
        speedup = py_t / cy_t if cy_t > 0 else float("inf")
        print(
            f"{label:<34} {py_t:>9.3f}s {cy_t:>9.3f}s {speedup:>8.1f}x"
            f"   (d = {py_out[0]}, {py_out[1]} visited)"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
