"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot paths on the richest surface (n = 8, 240 generators):
cone-membership LPs, exit-threshold LPs, full Zariski decompositions and a
complete chamber-walk body.  Run after an editable install:

    python benchmarks/bench_kernels.py [repeats]
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction

from okbodies import kernels
from okbodies.bodies import okounkov_body
from okbodies.cones import cone_model
from okbodies.lattice import e0, uniform_class
from okbodies.simplex import cone_exit_threshold, cone_member
from okbodies.zariski import zariski_decompose


def _sample_classes(count, rng):
    gens = cone_model(8).generators
    out = []
    for _ in range(count):
        D = Fraction(rng.randint(1, 3), rng.randint(1, 2)) * e0(8)
        for g in rng.sample(gens, rng.randint(2, 5)):
            D = D + Fraction(rng.randint(0, 4), rng.randint(1, 3)) * g
        out.append(D)
    return out


def _time(label, fn, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    print(f"    {label:34s} {best * 1000:9.2f} ms")
    return best


def run(backend: str, repeats: int):
    kernels.use(backend)
    print(f"backend: {kernels.backend_name()}")
    rng = random.Random(20240)
    model = cone_model(8)
    classes = _sample_classes(40, rng)
    coords = [D.coords() for D in classes]
    flag = e0(8).coords()
    gens = model.generator_coords

    results = {}
    results["membership"] = _time(
        "40 membership LPs (n=8)",
        lambda: [cone_member(c, gens) for c in coords],
        repeats,
    )
    results["threshold"] = _time(
        "40 exit-threshold LPs (n=8)",
        lambda: [cone_exit_threshold(c, flag, gens) for c in coords],
        repeats,
    )
    results["zariski"] = _time(
        "40 Zariski decompositions (n=8)",
        lambda: [zariski_decompose(D) for D in classes],
        repeats,
    )
    results["body"] = _time(
        "chamber-walk body (n=8, eps=1/3)",
        lambda: okounkov_body(uniform_class(8, 1, Fraction(1, 3))),
        repeats,
    )
    return results


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    available = ["pure"]
    try:
        kernels.use("cython")
        available.append("cython")
    except (ImportError, ValueError):
        print("compiled kernels unavailable; benchmarking the pure backend only")
    timings = {}
    for backend in available:
        timings[backend] = run(backend, repeats)
    if len(timings) == 2:
        print("speedup (pure / cython):")
        for key in timings["pure"]:
            ratio = timings["pure"][key] / timings["cython"][key]
            print(f"    {key:12s} {ratio:5.2f}x")
    kernels.use("auto")


if __name__ == "__main__":
    main()
