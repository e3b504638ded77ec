"""Exhaustive sharded walk of the configuration space and the g(M, E) histogram.

The 2^N indices are split into contiguous, near-equal shards; each shard is
classified in vectorized batches through the bit-word kernels and binned
into a dense (spin excess, exchange energy) histogram of exact integer
counts.  Shard results merge by elementwise addition, so the total is
bit-identical for any shard count or merge order.
"""

import math
import os
import time
from dataclasses import dataclass
from multiprocessing import Pool

import numpy as np

from .lattice import (
    TABLE_ROWS_CAP,
    KernelTables,
    LatticeSpec,
    build_tables,
)

# Batches must stay small enough that the live per-word arrays sit in L2;
# measured optimum on commodity cores (32 ns/config at 8k vs 160 ns at 64k).
DEFAULT_BATCH = 1 << 13


@dataclass(frozen=True)
class Shard:
    """Half-open range [start_index, end_index) of configuration indices."""

    shard_id: int
    num_shards: int
    start_index: int
    end_index: int

    @property
    def size(self) -> int:
        return self.end_index - self.start_index


def make_shards(spec: LatticeSpec, num_shards: int) -> list[Shard]:
    """Partition [0, 2^N) into num_shards contiguous ranges of near-equal size.

    Sizes differ by at most one; the first (2^N mod num_shards) shards get
    the extra index.  Deterministic for fixed inputs.
    """
    total = spec.num_configs
    if not 1 <= num_shards <= total:
        raise ValueError(
            f"num_shards must be in [1, 2^{spec.num_spins}], got {num_shards}"
        )
    base, extra = divmod(total, num_shards)
    shards = []
    start = 0
    for i in range(num_shards):
        size = base + (1 if i < extra else 0)
        shards.append(Shard(shard_id=i, num_shards=num_shards,
                            start_index=start, end_index=start + size))
        start += size
    return shards


class DoSHistogram:
    """Exact density of states g(M, E) on a dense (N+1) x (B+1) grid.

    Row m_idx = (M + N)/2 counts configurations with spin excess M; column
    e_idx holds exchange energy E = |J| * (2*e_idx - B).  Counts are int64,
    exact up to the 2^40 configuration cap.  Cells whose (M, E) parity is
    unreachable are structurally zero.
    """

    def __init__(self, spec: LatticeSpec, counts: np.ndarray | None = None):
        n, b = spec.num_spins, spec.num_bonds
        if counts is None:
            counts = np.zeros((n + 1, b + 1), dtype=np.int64)
        else:
            counts = np.asarray(counts, dtype=np.int64)
            if counts.shape != (n + 1, b + 1):
                raise ValueError(
                    f"counts shape {counts.shape} != {(n + 1, b + 1)}"
                )
        self.spec = spec
        self.counts = counts

    # -- index mapping ----------------------------------------------------

    @property
    def energy_scale(self):
        """|J|: spacing of the energy grid in physical units."""
        return abs(self.spec.coupling)

    def m_index(self, m: int) -> int:
        """Row of spin excess m; m must have the parity of N."""
        n = self.spec.num_spins
        if (m + n) % 2 or not -n <= m <= n:
            raise ValueError(f"spin excess {m} invalid for N={n}")
        return (m + n) // 2

    def e_index(self, energy) -> int:
        """Column of exchange energy; energy must sit on the |J| grid."""
        b = self.spec.num_bonds
        scale = self.energy_scale
        unit = energy if scale == 1 else energy / scale
        iu = int(round(unit))
        if abs(unit - iu) > 1e-9 or (iu + b) % 2 or not -b <= iu <= b:
            raise ValueError(
                f"energy {energy} not on the even grid within [-{b}, {b}] "
                f"(units of |J|={scale})"
            )
        return (iu + b) // 2

    def m_value(self, m_idx: int) -> int:
        return 2 * m_idx - self.spec.num_spins

    def e_value(self, e_idx: int):
        unit = 2 * e_idx - self.spec.num_bonds
        scale = self.energy_scale
        return unit if scale == 1 else scale * unit

    # -- queries -----------------------------------------------------------

    def total(self) -> int:
        """Sum of all counts; 2^N for a complete enumeration."""
        return int(self.counts.sum())

    def count(self, m: int, energy) -> int:
        """g(M, E) for one cell; off-grid (M, E) count zero configurations."""
        try:
            return int(self.counts[self.m_index(m), self.e_index(energy)])
        except ValueError:
            return 0

    def cells(self) -> list[tuple[int, int, int]]:
        """Nonzero (count, M, E) triples, sorted by M descending then E ascending."""
        out = []
        for m_idx in range(self.counts.shape[0] - 1, -1, -1):
            row = self.counts[m_idx]
            for e_idx in np.nonzero(row)[0]:
                out.append((int(row[e_idx]), self.m_value(m_idx),
                            self.e_value(int(e_idx))))
        return out

    def magnetization_marginal(self, m: int) -> int:
        """Total count at fixed spin excess, summed over energies."""
        return int(self.counts[self.m_index(m)].sum())

    def __eq__(self, other):
        if not isinstance(other, DoSHistogram):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self.counts, other.counts)

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, DoSHistogram):
            return NotImplemented
        if self.spec != other.spec:
            raise ValueError("cannot add histograms of different lattices")
        return DoSHistogram(self.spec, self.counts + other.counts)


# -- the vectorized walk ----------------------------------------------------

def _classify_batch(spec, tables, idx):
    """(ups, anti) per index: set-bit total and anti-aligned bond count.

    idx is a uint64 batch of configuration indices.  Every kernel
    evaluation (one per word for the shift kernel, one per neighboring
    word pair for the XOR kernel) covers `rows` bond slots, B in total,
    so aligned bonds = B - anti.
    """
    rows = spec.rows
    nwords = spec.num_words
    pairs = spec.word_neighbor_pairs()
    if tables is not None:
        mask = np.uint64(spec.word_mask)
        pc = tables.popcount_table
        sh = tables.shift_table
        words = [((idx >> np.uint64(w * rows)) & mask).astype(np.int64)
                 for w in range(nwords)]
        ups = pc[words[0]].copy()
        anti = pc[words[0] ^ sh[words[0]]].copy()
        for w in words[1:]:
            ups += pc[w]
            anti += pc[w ^ sh[w]]
        for a, b in pairs:
            anti += pc[words[a] ^ words[b]]
    else:
        # rows > 16: no tables; hardware popcount and computed shifts.
        mask = np.uint64(spec.word_mask)
        one = np.uint64(1)
        back = np.uint64(rows - 1)
        words = [(idx >> np.uint64(w * rows)) & mask for w in range(nwords)]
        ups = np.zeros(idx.shape, dtype=np.int64)
        anti = np.zeros(idx.shape, dtype=np.int64)
        for w in words:
            ups += np.bitwise_count(w).astype(np.int64)
            shifted = ((w << one) | (w >> back)) & mask
            anti += np.bitwise_count(w ^ shifted).astype(np.int64)
        for a, b in pairs:
            anti += np.bitwise_count(words[a] ^ words[b]).astype(np.int64)
    return ups, anti


def enumerate_shard(spec: LatticeSpec, tables: KernelTables | None,
                    shard: Shard, batch_size: int = DEFAULT_BATCH) -> DoSHistogram:
    """Classify every configuration index in the shard's range into g(M, E).

    Args:
        spec:   lattice geometry and coupling.
        tables: kernel tables for spec.rows, or None for the direct-popcount
                fallback (mandatory when rows > 16).
        shard:  half-open index range to walk.
        batch_size: indices classified per vectorized step.

    Returns:
        Partial histogram counting exactly the shard's configurations.
    """
    if not 0 <= shard.start_index <= shard.end_index <= spec.num_configs:
        raise ValueError(f"shard range [{shard.start_index}, {shard.end_index}) "
                         f"invalid for 2^{spec.num_spins} configurations")
    n, b = spec.num_spins, spec.num_bonds
    ferro = spec.coupling > 0
    flat = np.zeros((n + 1) * (b + 1), dtype=np.int64)
    for start in range(shard.start_index, shard.end_index, batch_size):
        stop = min(start + batch_size, shard.end_index)
        idx = np.arange(start, stop, dtype=np.uint64)
        ups, anti = _classify_batch(spec, tables, idx)
        # J > 0: e_idx = (E/|J| + B)/2 = B - En = anti; J < 0 mirrors it.
        e_idx = anti if ferro else b - anti
        flat += np.bincount(ups * (b + 1) + e_idx, minlength=flat.size)
    return DoSHistogram(spec, flat.reshape(n + 1, b + 1))


def merge(parts, spec: LatticeSpec | None = None) -> DoSHistogram:
    """Elementwise sum of shard histograms (order-independent).

    Args:
        parts: histograms sharing one spec.
        spec:  required when parts is empty (yields the zero histogram).
    """
    parts = list(parts)
    if not parts:
        if spec is None:
            raise ValueError("merge of no parts needs an explicit spec")
        return DoSHistogram(spec)
    if spec is not None and parts[0].spec != spec:
        raise ValueError("declared spec does not match the parts")
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out


# -- verification ------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def __str__(self):
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_names(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


def _clip(items, limit=8):
    items = list(items)
    shown = ", ".join(map(str, items[:limit]))
    if len(items) > limit:
        shown += f", ... ({len(items)} total)"
    return shown


def verify_dos(dos: DoSHistogram) -> VerificationReport:
    """Consistency checks a complete density of states must satisfy.

    total-count:        sum of counts equals 2^N.
    binomial-marginals: each per-M marginal equals C(N, (N+M)/2).
    flip-symmetry:      g(M, E) = g(-M, E) for every cell.
    energy-grid:        nonzero cells only at E with the parity of B,
                        within [-B, B] (even E for every 2D lattice).

    Failures are data, not errors; the report lists violating cells.
    """
    spec = dos.spec
    n, b = spec.num_spins, spec.num_bonds
    checks = []

    total = dos.total()
    checks.append(CheckResult(
        "total-count", total == spec.num_configs,
        f"{total} == 2^{n}" if total == spec.num_configs
        else f"{total} != 2^{n} = {spec.num_configs}"))

    bad_m = []
    for m_idx in range(n + 1):
        got = int(dos.counts[m_idx].sum())
        want = math.comb(n, m_idx)
        if got != want:
            bad_m.append(f"M={dos.m_value(m_idx)}: {got} != {want}")
    checks.append(CheckResult(
        "binomial-marginals", not bad_m,
        f"all {n + 1} marginals match" if not bad_m else _clip(bad_m)))

    asym = np.argwhere(dos.counts != dos.counts[::-1])
    bad_sym = [f"(M={dos.m_value(mi)}, E={dos.e_value(ei)})" for mi, ei in asym]
    checks.append(CheckResult(
        "flip-symmetry", not bad_sym,
        "symmetric under M -> -M" if not bad_sym else _clip(bad_sym)))

    # The dense grid can only hold on-grid energies, so this re-checks the
    # structural invariant cell by cell (it guards file-loaded data too).
    off = []
    for _, m, e in dos.cells():
        try:
            dos.e_index(e)
        except ValueError:
            off.append(f"(M={m}, E={e})")
    parity = "even" if b % 2 == 0 else "odd"
    checks.append(CheckResult(
        "energy-grid", not off,
        f"all E {parity}, within [-{b}, {b}]" if not off else _clip(off)))

    return VerificationReport(tuple(checks))


# -- parallel driver ---------------------------------------------------------

def available_parallelism() -> int:
    """Usable CPU count (affinity-aware where the platform reports it)."""
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def _shard_worker(args):
    # Runs in a worker process; each worker reports its own interval.
    spec, shard, batch_size = args
    tables = build_tables(spec.rows) if spec.rows <= TABLE_ROWS_CAP else None
    t0 = time.perf_counter()
    hist = enumerate_shard(spec, tables, shard, batch_size=batch_size)
    return hist.counts, time.perf_counter() - t0


def full_dos_timed(spec: LatticeSpec, workers: int | None = None,
                   batch_size: int = DEFAULT_BATCH):
    """Complete density of states plus timing.

    Returns:
        (histogram, wall_seconds, per_worker_seconds) where the per-worker
        list holds each worker's own enumeration interval.
    """
    if workers is None:
        # Auto mode never asks for more shards than there are configurations.
        workers = min(available_parallelism(), spec.num_configs)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    shards = make_shards(spec, workers)
    jobs = [(spec, s, batch_size) for s in shards]
    t0 = time.perf_counter()
    if workers == 1:
        results = [_shard_worker(jobs[0])]
    else:
        with Pool(processes=workers) as pool:
            results = pool.map(_shard_worker, jobs)
    wall = time.perf_counter() - t0
    total = results[0][0].copy()
    for counts, _ in results[1:]:
        total += counts
    return DoSHistogram(spec, total), wall, [secs for _, secs in results]


def full_dos(spec: LatticeSpec, workers: int | None = None) -> DoSHistogram:
    """Complete density of states using `workers` parallel shard processes."""
    hist, _, _ = full_dos_timed(spec, workers)
    return hist
