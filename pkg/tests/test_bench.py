import pytest

import isingdos.bench as bench_mod
from isingdos import (
    DoSHistogram,
    LatticeSpec,
    ResultMismatchError,
    emit_scaling_report,
    parse_scaling_report,
    run_bench,
)
from isingdos.bench import BenchRecord


def test_single_worker_self_baseline():
    records = run_bench(LatticeSpec(3, 3), [1], repeats=3)
    assert len(records) == 1
    r = records[0]
    assert r.num_workers == 1
    assert r.speedup_vs_one == 1.0
    assert r.wall_seconds > 0
    assert len(r.per_worker_seconds) == 1


def test_multi_worker_records():
    records = run_bench(LatticeSpec(3, 3), [1, 2], repeats=2)
    assert [r.num_workers for r in records] == [1, 2]
    assert all(r.speedup_vs_one > 0 for r in records)
    assert len(records[1].per_worker_seconds) == 2


def test_baseline_without_explicit_one_worker():
    records = run_bench(LatticeSpec(2, 3), [2], repeats=1)
    assert records[0].speedup_vs_one > 0


def test_validates_arguments():
    spec = LatticeSpec(2, 2)
    with pytest.raises(ValueError):
        run_bench(spec, [], repeats=1)
    with pytest.raises(ValueError):
        run_bench(spec, [1, 0], repeats=1)
    with pytest.raises(ValueError):
        run_bench(spec, [1], repeats=0)


def test_mismatching_run_is_a_hard_error(monkeypatch):
    spec = LatticeSpec(2, 3)
    real = bench_mod.full_dos_timed

    def corrupted(spec_, workers=None, **kwargs):
        hist, wall, per = real(spec_, workers=workers, **kwargs)
        if workers == 2:
            bad = DoSHistogram(hist.spec, hist.counts.copy())
            bad.counts[0, 0] += 1
            return bad, wall, per
        return hist, wall, per

    monkeypatch.setattr(bench_mod, "full_dos_timed", corrupted)
    with pytest.raises(ResultMismatchError):
        run_bench(spec, [1, 2], repeats=1)


def test_report_round_trip():
    records = [
        BenchRecord(spec=LatticeSpec(4, 5), num_workers=2,
                    wall_seconds=0.25, per_worker_seconds=[0.2, 0.21],
                    speedup_vs_one=1.9),
        BenchRecord(spec=LatticeSpec(4, 4), num_workers=1,
                    wall_seconds=0.012345678901234567,
                    per_worker_seconds=[0.012], speedup_vs_one=1.0),
        BenchRecord(spec=LatticeSpec(4, 4), num_workers=4,
                    wall_seconds=0.004, per_worker_seconds=[0.004] * 4,
                    speedup_vs_one=3.0864),
    ]
    text = emit_scaling_report(records)
    lines = text.splitlines()
    assert lines[0] == "rows,cols,depth,N,workers,wall_seconds,speedup"
    assert len(lines) == 4

    rows = parse_scaling_report(text)
    # ordered by (N, workers): the two 4x4 records first
    assert [(r["N"], r["workers"]) for r in rows] == [(16, 1), (16, 4), (20, 2)]
    by_key = {(r["N"], r["workers"]): r for r in rows}
    for rec in records:
        row = by_key[(rec.spec.num_spins, rec.num_workers)]
        assert row["rows"] == rec.spec.rows
        assert row["cols"] == rec.spec.cols
        assert row["depth"] == rec.spec.depth
        assert row["wall_seconds"] == rec.wall_seconds
        assert row["speedup"] == rec.speedup_vs_one


def test_report_starts_speedup_at_one():
    records = run_bench(LatticeSpec(2, 3), [1, 2], repeats=1)
    rows = parse_scaling_report(emit_scaling_report(records))
    assert rows[0]["workers"] == 1
    assert rows[0]["speedup"] == 1.0


def test_empty_report_rejected():
    with pytest.raises(ValueError):
        emit_scaling_report([])


def test_parse_rejects_wrong_header():
    with pytest.raises(ValueError):
        parse_scaling_report("nope\n1,2,3\n")
