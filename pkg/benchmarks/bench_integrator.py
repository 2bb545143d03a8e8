#!/usr/bin/env python3
"""Time the EOM integrator's numba kernel against the pure-Python path.

The kernel path is chosen at import time by NUCLEOSIM_NO_NUMBA, so each
mode runs in a child process. Reports warm per-run times and checks the
two paths agree on the trajectory itself.

    python3 benchmarks/bench_integrator.py [--repeats N] [--m MASS]
"""

import argparse
import json
import os
import subprocess
import sys


def child(repeats: int, m: float) -> None:
    import time

    import numpy as np

    from nucleosim import _kernels
    from nucleosim.inflation import integrate_eom
    from nucleosim.potentials import ModelParams

    # track the post-roll oscillations too, so the stepping loop dominates
    p = ModelParams(m=m)
    span = (0.0, 20000.0)
    integrate_eom(3.1, 0.0, span, p)  # warmup (JIT compile on numba path)

    t0 = time.perf_counter()
    for _ in range(repeats):
        traj = integrate_eom(3.1, 0.0, span, p, stop_slow_roll=False)
    per_run = (time.perf_counter() - t0) / repeats

    print(json.dumps({
        "numba": _kernels.NUMBA_ENABLED,
        "per_run_s": per_run,
        "rows": int(traj.t.size),
        "n_end": float(traj.n_efolds[-1]),
        "phi_checksum": float(np.sum(traj.phi)),
    }))


def run_mode(no_numba: bool, repeats: int, m: float) -> dict:
    env = dict(os.environ)
    env["NUCLEOSIM_NO_NUMBA"] = "1" if no_numba else "0"
    out = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--child",
         "--repeats", str(repeats), "--m", str(m)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--child", action="store_true")
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--m", type=float, default=0.005)
    args = ap.parse_args()

    if args.child:
        child(args.repeats, args.m)
        return 0

    jit = run_mode(False, args.repeats, args.m)
    plain = run_mode(True, max(1, args.repeats // 5), args.m)

    assert jit["numba"] and not plain["numba"], "mode selection failed"
    assert jit["rows"] == plain["rows"], "paths disagree on step count"
    drift = abs(jit["phi_checksum"] - plain["phi_checksum"]) \
        / max(1.0, abs(jit["phi_checksum"]))
    assert drift < 1e-9, f"paths disagree on the trajectory ({drift:.2e})"

    speedup = plain["per_run_s"] / jit["per_run_s"]
    print(f"inflaton EOM, m={args.m}, {jit['rows']} accepted steps, "
          f"N_end={jit['n_end']:.2f}")
    print(f"  numba kernel : {jit['per_run_s'] * 1e3:9.2f} ms/run")
    print(f"  numpy/python : {plain['per_run_s'] * 1e3:9.2f} ms/run")
    print(f"  speedup      : {speedup:8.1f}x   "
          f"(trajectory drift {drift:.1e})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
