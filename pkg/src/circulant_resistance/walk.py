"""Hitting, commute and mean first-passage times of the simple random walk.

On a vertex-transitive graph the commute time 2|E| R(0,l) splits evenly
into the two hitting times, so H(0,l) = |E| R(0,l).  Closed forms are exact
``Fraction``s; spectral values are floats; the Monte Carlo estimator walks
the graph directly.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .circulant import CirculantSpec
from .closed_form import (
    UNREACHABLE,
    c12_resistance,
    exact_kirchhoff,
    exact_resistance,
    golden_ratio_factor,
    has_closed_form,
)
from .errors import Disconnected, StepCapExceeded, UnsupportedN
from .exact import fib
from .spectral import eigentime_mfpt, resistance_spectral

STEP_CAP = 10**9
BLOCK = 1024  # trials per RNG stream; fixed so results never depend on worker count
CHUNK = 64  # steps drawn per vectorized batch


def fpt_closed(N: int, l: int) -> Fraction:
    """H(0, l) on C_N(1,2): |E| R(l) with |E| = 2N."""
    if not 1 <= l < N:
        raise ValueError(f"target {l} outside [1, {N})")
    return 2 * N * c12_resistance(N, l)


def fpt_general(spec: CirculantSpec, l: int) -> float:
    if not 1 <= l < spec.n:
        raise ValueError(f"target {l} outside [1, {spec.n})")
    return spec.edge_count * resistance_spectral(spec, l)


def fpt_exact(spec: CirculantSpec, l: int):
    """|E| R(l) from the closed form of any supported spec."""
    r = exact_resistance(spec, l)
    return UNREACHABLE if r is UNREACHABLE else spec.edge_count * r


def mfpt_closed(N: int) -> Fraction:
    """Mean first-passage time of C_N(1,2) from the Fibonacci closed form."""
    if N < 5:
        raise UnsupportedN(f"jumps {{1,2}} closed forms need N >= 5, got {N}")
    g = golden_ratio_factor(N)
    f_n, f_nm1, f_2nm1 = fib(N), fib(N - 1), fib(2 * N - 1)
    base = Fraction(N * N - 1, 15)
    if N % 2 == 0:
        return base + Fraction(2, 5) * (f_2nm1 + 2 * N - 1) * g + Fraction(2, 5) * (f_nm1**2 - f_n**2 - 1)
    return base - Fraction(2, 5) * (f_2nm1 - 2 * N + 1) * g + Fraction(2, 5) * (f_n**2 - f_nm1**2 - 1)


def mfpt_exact(spec: CirculantSpec):
    """(d/N) times the exact Kirchhoff index."""
    if spec.jumps == (1, 2):
        return mfpt_closed(spec.n)
    k = exact_kirchhoff(spec)
    return UNREACHABLE if k is UNREACHABLE else Fraction(spec.degree, spec.n) * k


def mfpt(graph):
    """MFPT of an int N (exact, jumps {1,2}) or of a spec (eigentime sum)."""
    if isinstance(graph, CirculantSpec):
        return eigentime_mfpt(graph)
    return mfpt_closed(int(graph))


def commute(spec: CirculantSpec, l: int) -> float:
    """Commute time 2|E| R(0, l)."""
    return 2 * spec.edge_count * resistance_spectral(spec, l)


@dataclass
class WalkStats:
    n: int
    fpt: dict = field(default_factory=dict)
    commute: dict = field(default_factory=dict)
    mfpt: object = None


def walk_stats(spec: CirculantSpec, exact: bool = True) -> WalkStats:
    """FPT and commute time for every target plus the MFPT."""
    stats = WalkStats(spec.n)
    if exact and has_closed_form(spec):
        for l in range(1, spec.n):
            h = fpt_exact(spec, l)
            stats.fpt[l] = h
            stats.commute[l] = h if h is UNREACHABLE else 2 * h
        stats.mfpt = mfpt_exact(spec)
    else:
        for l in range(1, spec.n):
            stats.fpt[l] = fpt_general(spec, l)
            stats.commute[l] = 2 * stats.fpt[l]
        stats.mfpt = eigentime_mfpt(spec)
    return stats


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    trials: int
    seed: int


def _block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))


def _walk_block(offsets: np.ndarray, n: int, target: int, seed: int, block: int, used: int,
                step_cap: int) -> tuple[int, int]:
    """Run the first ``used`` walks of one block; return (sum, sum of squares).

    Every walk owns one column of the block's draw matrix, so a walk's
    trajectory depends only on (seed, block, column).
    """
    rng = _block_rng(seed, block)
    pos = np.zeros(BLOCK, dtype=np.int64)
    hit = np.zeros(BLOCK, dtype=np.int64)
    active = np.zeros(BLOCK, dtype=bool)
    active[:used] = True
    steps = 0
    deg = len(offsets)
    while active.any():
        if steps >= step_cap:
            raise StepCapExceeded(f"walk exceeded {step_cap} steps")
        draws = rng.integers(0, deg, size=(CHUNK, BLOCK))
        cols = np.flatnonzero(active)
        path = (pos[cols] + np.cumsum(offsets[draws[:, cols]], axis=0)) % n
        at_target = path == target
        reached = at_target.any(axis=0)
        first = at_target.argmax(axis=0)
        done = cols[reached]
        hit[done] = steps + first[reached] + 1
        active[done] = False
        pos[cols] = path[-1]
        steps += CHUNK
    h = hit[:used]
    return int(h.sum()), int((h * h).sum())


def simulate_fpt(spec: CirculantSpec, l: int, trials: int, seed: int, *, workers: int = 1,
                 step_cap: int = STEP_CAP) -> McEstimate:
    """Monte Carlo hitting time from vertex 0 to vertex ``l``.

    Walks move to a uniformly chosen neighbour each step.  The result is a
    function of ``(spec, l, trials, seed)`` alone.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 1 <= l < spec.n:
        raise ValueError(f"target {l} outside [1, {spec.n})")
    if not spec.is_connected:
        raise Disconnected(f"{spec.label()} is disconnected")
    offsets = np.array(spec.neighbour_offsets, dtype=np.int64)
    nblocks = -(-trials // BLOCK)
    jobs = [(b, min(BLOCK, trials - b * BLOCK)) for b in range(nblocks)]

    def run(job):
        return _walk_block(offsets, spec.n, l, seed, job[0], job[1], step_cap)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(run, jobs))
    else:
        parts = [run(j) for j in jobs]
    total = sum(p[0] for p in parts)
    total_sq = sum(p[1] for p in parts)
    mean = Fraction(total, trials)
    if trials > 1:
        var = (Fraction(total_sq) - trials * mean * mean) / (trials - 1)
        std_error = math.sqrt(var / trials)
    else:
        std_error = 0.0
    return McEstimate(float(mean), std_error, trials, seed)
