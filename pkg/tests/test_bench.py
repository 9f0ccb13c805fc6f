"""Benchmark harness: report shape, determinism, output files."""

import json

from seprect.bench import run_benchmark


def test_report_shape_and_files(tmp_path):
    report = run_benchmark({
        "sizes": [32, 64],
        "n": 8,
        "seeds": [0, 1],
        "reps": 2,
        "coordinate_range": 1024,
        "out_dir": str(tmp_path),
    })
    assert [r["m"] for r in report["results"]] == [32, 64]
    for r in report["results"]:
        assert r["min_s"] <= r["median_s"] <= r["max_s"]
        assert len(r["runs"]) == 2
        for run in r["runs"]:
            assert len(run["times_s"]) == 2
            assert run["status"] in ("bounded", "unbounded")
    assert len(report["ratios"]) == 1
    assert report["timer_noise_floor_s"] > 0
    on_disk = json.loads((tmp_path / "bench.json").read_text())
    assert on_disk["results"][0]["m"] == 32
    assert (tmp_path / "bench.tsv").exists()
    assert (tmp_path / "bench.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_instances_deterministic_across_runs(tmp_path):
    cfg = {"sizes": [64], "n": 8, "seeds": [3], "reps": 1,
           "coordinate_range": 512, "out_dir": str(tmp_path)}
    a = run_benchmark(cfg)["results"][0]["runs"][0]
    b = run_benchmark(cfg)["results"][0]["runs"][0]
    assert a["instance_sha256"] == b["instance_sha256"]
    assert a["area"] == b["area"]


def test_solved_areas_recorded(tmp_path):
    report = run_benchmark({"sizes": [128], "n": 4, "seeds": [0], "reps": 1,
                            "coordinate_range": 64, "out_dir": str(tmp_path)})
    run = report["results"][0]["runs"][0]
    if run["status"] == "bounded":
        assert int(run["area"]) > 0
