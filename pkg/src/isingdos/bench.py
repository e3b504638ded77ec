"""Wall-clock scaling of the sharded enumeration across worker counts.

One monotonic clock, minimum-of-repeats aggregation, and a hard identity
check: every benchmarked run's histogram must equal the 1-worker
reference, because the timing of a wrong answer is meaningless.
"""

from dataclasses import dataclass, field

from .enumeration import full_dos_timed
from .lattice import LatticeSpec


class ResultMismatchError(RuntimeError):
    """A benchmarked run produced a histogram different from the baseline."""


@dataclass
class BenchRecord:
    """Timing of one (lattice, worker count) measurement."""

    spec: LatticeSpec
    num_workers: int
    wall_seconds: float
    per_worker_seconds: list[float] = field(default_factory=list)
    speedup_vs_one: float = 0.0  # filled once the 1-worker baseline exists


def run_bench(spec: LatticeSpec, worker_counts, repeats: int = 3) -> list[BenchRecord]:
    """Measure full-enumeration wall time for each worker count.

    Each count runs `repeats` times; the minimum wall time wins (robust to
    scheduler noise).  A 1-worker reference histogram is computed first and
    every run is verified against it.

    Args:
        spec: lattice to enumerate.
        worker_counts: nonempty list of positive worker counts.
        repeats: runs per count, >= 1.

    Raises:
        ResultMismatchError: if any run's histogram differs from the reference.
    """
    counts = list(worker_counts)
    if not counts:
        raise ValueError("worker_counts must be nonempty")
    if any(not isinstance(p, int) or p < 1 for p in counts):
        raise ValueError(f"worker counts must be positive integers: {counts}")
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")

    reference, ref_wall, _ = full_dos_timed(spec, workers=1)

    records = []
    for p in counts:
        best_wall = None
        best_per = None
        for _ in range(repeats):
            hist, wall, per_worker = full_dos_timed(spec, workers=p)
            if hist != reference:
                raise ResultMismatchError(
                    f"{p}-worker run disagrees with the 1-worker result "
                    f"on {spec.rows}x{spec.cols}x{spec.depth}"
                )
            if best_wall is None or wall < best_wall:
                best_wall, best_per = wall, per_worker
        records.append(BenchRecord(spec=spec, num_workers=p,
                                   wall_seconds=best_wall,
                                   per_worker_seconds=best_per))

    baseline = next((r.wall_seconds for r in records if r.num_workers == 1),
                    ref_wall)
    for r in records:
        r.speedup_vs_one = baseline / r.wall_seconds
    return records


REPORT_HEADER = "rows,cols,depth,N,workers,wall_seconds,speedup"


def emit_scaling_report(records) -> str:
    """CSV text of the records, ordered by (N, workers).

    Floats are written with repr so the report parses back exactly.
    """
    records = list(records)
    if not records:
        raise ValueError("no records to report")
    rows = [REPORT_HEADER]
    for r in sorted(records, key=lambda r: (r.spec.num_spins, r.num_workers)):
        s = r.spec
        rows.append(f"{s.rows},{s.cols},{s.depth},{s.num_spins},"
                    f"{r.num_workers},{r.wall_seconds!r},{r.speedup_vs_one!r}")
    return "\n".join(rows) + "\n"


def parse_scaling_report(text: str) -> list[dict]:
    """Inverse of emit_scaling_report: list of typed row dicts."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != REPORT_HEADER:
        raise ValueError(f"expected header {REPORT_HEADER!r}")
    out = []
    for ln in lines[1:]:
        rows, cols, depth, n, workers, wall, speedup = ln.split(",")
        out.append({
            "rows": int(rows), "cols": int(cols), "depth": int(depth),
            "N": int(n), "workers": int(workers),
            "wall_seconds": float(wall), "speedup": float(speedup),
        })
    return out
