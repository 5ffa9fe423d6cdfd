"""Compare the numba and numpy ascent backends.

Run with:  python benchmarks/bench_backends.py
The backend is chosen at import time from LAGLAB_BACKEND, so each backend
runs in a subprocess.
"""
import json
import math
import os
import subprocess
import sys
import textwrap
import time

CASES = [
    ("clique(10,3)", "L.clique(10, 3)"),
    ("colex(300,3)", "L.colex_segment(300, 3)"),
    ("colex tail t=30 a=3", "L.colex_segment(math.comb(30,3) - 3, 3).with_t(30)"),
]

WORKER = textwrap.dedent("""
    import json, math, sys, time
    import laglab as L
    from laglab import kernels
    from laglab.solver import SolverConfig

    expr = sys.argv[1]
    G = eval(expr)
    cfg = SolverConfig(starts=8, max_iters=20000, tol=1e-12)
    L.maximize_lagrangian(G, cfg)  # warm up (JIT compile)
    t0 = time.perf_counter()
    cert = L.maximize_lagrangian(G, cfg)
    dt = time.perf_counter() - t0
    print(json.dumps({"backend": kernels.backend_name(),
                      "value": cert.value, "seconds": dt}))
""")


def run(backend: str, expr: str) -> dict:
    env = dict(os.environ, LAGLAB_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", WORKER, expr],
                         capture_output=True, text=True, env=env, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> None:
    print(f"{'case':<24} {'numba [s]':>10} {'numpy [s]':>10} {'speedup':>8}")
    for name, expr in CASES:
        nb = run("numba", expr)
        np_ = run("numpy", expr)
        assert abs(nb["value"] - np_["value"]) < 1e-9, (name, nb, np_)
        speed = np_["seconds"] / nb["seconds"]
        print(f"{name:<24} {nb['seconds']:>10.3f} {np_['seconds']:>10.3f} "
              f"{speed:>7.1f}x")


if __name__ == "__main__":
    main()
