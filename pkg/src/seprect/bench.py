"""Scaling benchmark for the vectorized solver.

Generates seeded random integer instances directly as numpy arrays, times
repeated solves, and writes a JSON report, a TSV table and a log-log PNG
plot into the output directory. Instances are hashed so a report can be
reproduced bit for bit from its config.
"""

from __future__ import annotations

import hashlib
import json
import os
import platform
import statistics
import sys
import time

import numpy as np

from .fastpath import solve_fast

DEFAULT_CONFIG = {
    "sizes": [2 ** k for k in range(18, 23)],
    "n": 1000,
    "seeds": [0, 1, 2],
    "reps": 3,
    "presorted": True,
    "coordinate_range": None,  # None: scale with m to keep the grid fine
    "out_dir": "bench_out",
}


def _gen_arrays(seed: int, m: int, n: int, half: int):
    rng = np.random.default_rng([seed, m, n])
    reds = rng.integers(-half, half + 1, size=(n, 2), dtype=np.int64)
    blues = rng.integers(-half, half + 1, size=(m, 2), dtype=np.int64)
    return reds, blues


def _hash_arrays(reds, blues, half) -> str:
    h = hashlib.sha256()
    h.update(b"seprect-bench v1 %d %d %d\n" % (reds.shape[0], blues.shape[0], half))
    h.update(np.ascontiguousarray(reds).tobytes())
    h.update(np.ascontiguousarray(blues).tobytes())
    return h.hexdigest()


def _noise_floor() -> float:
    overhead = []
    for _ in range(7):
        t0 = time.perf_counter()
        t1 = time.perf_counter()
        overhead.append(t1 - t0)
    res = time.get_clock_info("perf_counter").resolution
    return max(min(overhead), res)


def _plot(path, sizes, medians):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.loglog(sizes, medians, "o-", color="#1e8449", label="median solve time")
    ref = [medians[0] * s / sizes[0] for s in sizes]
    ax.loglog(sizes, ref, "--", color="#7f8c8d", label="linear reference")
    ax.set_xlabel("blue points (m)")
    ax.set_ylabel("seconds")
    ax.set_title("solve time vs input size")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def run_benchmark(config: dict | None = None) -> dict:
    """Run the configured sweep; write bench.json / bench.tsv / bench.png
    into out_dir and return the report dict."""
    cfg = dict(DEFAULT_CONFIG)
    cfg.update(config or {})
    sizes = [int(m) for m in cfg["sizes"]]
    if not sizes or any(m < 1 for m in sizes):
        raise ValueError("sizes must be positive")
    n = int(cfg["n"])
    reps = int(cfg["reps"])
    presorted = bool(cfg["presorted"])

    results = []
    for m in sizes:
        half = cfg["coordinate_range"] or max(1 << 21, 4 * m)
        runs = []
        for seed in cfg["seeds"]:
            reds, blues = _gen_arrays(int(seed), m, n, int(half))
            if presorted:
                blues = blues[np.lexsort((blues[:, 1], blues[:, 0]))]
            digest = _hash_arrays(reds, blues, int(half))
            times = []
            sol = None
            for _ in range(reps):
                t0 = time.perf_counter()
                sol = solve_fast(reds, blues, presorted=presorted)
                times.append(time.perf_counter() - t0)
            runs.append({
                "seed": int(seed),
                "instance_sha256": digest,
                "times_s": times,
                "status": sol.status,
                "area": str(sol.area) if sol.status == "bounded" else None,
                "forced_blue": sol.forced_blue,
            })
        all_times = [t for r in runs for t in r["times_s"]]
        results.append({
            "m": m, "n": n, "coordinate_range": int(half),
            "median_s": statistics.median(all_times),
            "min_s": min(all_times), "max_s": max(all_times),
            "runs": runs,
        })

    ratios = []
    for prev, cur in zip(results, results[1:]):
        ratios.append({
            "from_m": prev["m"], "to_m": cur["m"],
            "ratio": cur["median_s"] / prev["median_s"] if prev["median_s"] > 0
                     else None,
        })
    floor = _noise_floor()
    report = {
        "config": {k: cfg[k] for k in DEFAULT_CONFIG},
        "machine": {
            "platform": platform.platform(),
            "python": sys.version.split()[0],
            "numpy": np.__version__,
            "processor": platform.processor() or "unknown",
        },
        "timer_noise_floor_s": floor,
        "noise_note": ("medians within ~100x of the %.1e s timer floor are "
                       "noise-dominated; doubling ratios are only meaningful "
                       "above that" % floor),
        "results": results,
        "ratios": ratios,
    }

    out_dir = cfg["out_dir"]
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "bench.json"), "w", encoding="utf-8") as f:
        json.dump(report, f, indent=2)
        f.write("\n")
    lines = ["m\tn\tmedian_s\tmin_s\tmax_s\tratio_to_prev"]
    prev_median = None
    for r in results:
        ratio = ("%.3f" % (r["median_s"] / prev_median)
                 if prev_median else "-")
        lines.append("%d\t%d\t%.6f\t%.6f\t%.6f\t%s" %
                     (r["m"], r["n"], r["median_s"], r["min_s"], r["max_s"], ratio))
        prev_median = r["median_s"]
    with open(os.path.join(out_dir, "bench.tsv"), "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")
    _plot(os.path.join(out_dir, "bench.png"),
          [r["m"] for r in results], [r["median_s"] for r in results])
    return report
