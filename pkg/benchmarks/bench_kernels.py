"""Time the compiled kernels against their numpy twins.

    python benchmarks/bench_kernels.py [--envs 64] [--repeat 200]

The numba variants are compiled (and warmed up) before timing; when numba is
unavailable or disabled with SKILLIMIT_NO_NUMBA=1 only the numpy rows print.
"""

import argparse
import time

import numpy as np

from skillimit import ppo, walker
from skillimit._accel import HAVE_NUMBA


def _walker_args(n, rng):
    st = walker.WalkerState.zeros(n)
    st.q[:] = rng.uniform(-1, 1, st.q.shape)
    action = rng.uniform(-1.2, 1.2, st.q.shape)
    cfg = walker.WalkerConfig()
    return st, action, walker.kernel_params(cfg)


def time_step(kernel, n, repeat, rng):
    st, action, params = _walker_args(n, rng)
    args = (st.v_x, st.omega, st.q, st.qdot, st.air_time, st.landed_air, st.armed, st.traction,
            action, params)
    kernel(*args)
    t0 = time.perf_counter()
    for _ in range(repeat):
        kernel(*args)
    return (time.perf_counter() - t0) / repeat


def time_gae(kernel, n, T, repeat, rng):
    r = rng.standard_normal((T, n))
    v = rng.standard_normal((T, n))
    d = (rng.random((T, n)) < 0.01).astype(float)
    last = rng.standard_normal(n)
    kernel(r, v, d, last, 0.99, 0.95)
    t0 = time.perf_counter()
    for _ in range(repeat):
        kernel(r, v, d, last, 0.99, 0.95)
    return (time.perf_counter() - t0) / repeat


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--envs", type=int, default=64)
    ap.add_argument("--steps", type=int, default=24)
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()
    rng = np.random.default_rng(0)

    rows = [("walker step", "numpy", time_step(walker._step_numpy, args.envs, args.repeat, rng)),
            ("gae", "numpy", time_gae(ppo._gae_numpy, args.envs, args.steps, args.repeat, rng))]
    if HAVE_NUMBA:
        rows.insert(1, ("walker step", "numba",
                        time_step(walker._step_jit, args.envs, args.repeat, rng)))
        rows.append(("gae", "numba",
                     time_gae(ppo._gae_jit, args.envs, args.steps, args.repeat, rng)))
    print(f"envs={args.envs} steps={args.steps} repeat={args.repeat}")
    print(f"{'kernel':<12} {'backend':<8} {'us/call':>10}")
    for name, be, sec in rows:
        print(f"{name:<12} {be:<8} {sec * 1e6:>10.1f}")
    if HAVE_NUMBA:
        for name in ("walker step", "gae"):
            t = {be: s for n, be, s in rows if n == name}
            print(f"{name}: numba speedup x{t['numpy'] / t['numba']:.1f}")


if __name__ == "__main__":
    main()
