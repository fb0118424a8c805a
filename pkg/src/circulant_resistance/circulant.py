"""Circulant graphs C_N(s_1, ..., s_p), their Laplacians and spectra.

Vertices are labelled 0..N-1 and vertex ``i`` is joined to ``i +/- s`` (mod N)
for every jump ``s``.  When N is even and N/2 is a jump, the two offsets
``+N/2`` and ``-N/2`` name the same neighbour, so that jump contributes a
single edge per vertex (no parallel edges).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import InvalidJump, TooLarge, TooSmall

MAX_DENSE_ORDER = 10_000
ZERO_SNAP = 1e-12


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    jumps: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.jumps)

    @property
    def has_antipodal(self) -> bool:
        return self.n % 2 == 0 and (self.n // 2) in self.jumps

    @property
    def degree(self) -> int:
        return 2 * self.p - (1 if self.has_antipodal else 0)

    @property
    def edge_count(self) -> int:
        return self.n * self.p - (self.n // 2 if self.has_antipodal else 0)

    @property
    def neighbour_offsets(self) -> tuple[int, ...]:
        """Distinct offsets ``d`` such that ``i`` is adjacent to ``i + d``."""
        offs = []
        for s in self.jumps:
            offs.append(s)
            if 2 * s != self.n:
                offs.append(self.n - s)
        return tuple(sorted(offs))

    @property
    def component_count(self) -> int:
        return math.gcd(self.n, *self.jumps)

    @property
    def is_connected(self) -> bool:
        return self.component_count == 1

    def label(self) -> str:
        return f"C_{self.n}({','.join(map(str, self.jumps))})"

    @cached_property
    def _eigs(self) -> "EigenvalueTable":
        return _compute_eigenvalues(self)


def build_circulant(n: int, jumps: Iterable[int]) -> CirculantSpec:
    """Validate ``(n, jumps)`` and return a spec with sorted jumps.

    >>> build_circulant(6, [2, 1]).jumps
    (1, 2)
    """
    n = int(n)
    if n < 3:
        raise TooSmall(f"need n >= 3, got {n}")
    js = [int(j) for j in jumps]
    if not js:
        raise InvalidJump("jump set must be nonempty")
    if len(set(js)) != len(js):
        raise InvalidJump(f"duplicate jumps in {js}")
    for j in js:
        if not 1 <= j <= n // 2:
            raise InvalidJump(f"jump {j} outside [1, {n // 2}] for n={n}")
    return CirculantSpec(n, tuple(sorted(js)))


@dataclass(frozen=True)
class EigenvalueTable:
    values: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> float:
        return self.values[k]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    @property
    def zero_count(self) -> int:
        return sum(1 for v in self.values if v == 0.0)


def _compute_eigenvalues(spec: CirculantSpec) -> EigenvalueTable:
    n = spec.n
    k = np.arange(n)
    lam = np.zeros(n)
    for s in spec.jumps:
        if 2 * s == n:
            # single edge to the antipode: 1 - cos(pi k)
            lam += 1.0 - np.cos(np.pi * k)
        else:
            lam += 4.0 * np.sin(np.pi * k * s / n) ** 2
    lam[np.abs(lam) < ZERO_SNAP * 4 * spec.p] = 0.0
    lam[0] = 0.0
    return EigenvalueTable(tuple(float(x) for x in lam))


def eigenvalues(spec: CirculantSpec) -> EigenvalueTable:
    """Laplacian eigenvalues lambda_k = sum_s 4 sin^2(pi k s / N), k = 0..N-1."""
    return spec._eigs


@dataclass(frozen=True, eq=False)
class DenseLaplacian:
    order: int
    entries: np.ndarray
    spec: CirculantSpec | None = None

    def __post_init__(self):
        self.entries.setflags(write=False)

    def adjacency(self) -> np.ndarray:
        a = -self.entries.copy()
        np.fill_diagonal(a, 0)
        return a


def dense_laplacian(spec: CirculantSpec) -> DenseLaplacian:
    """Materialize L = D - A as an N x N integer matrix."""
    n = spec.n
    if n > MAX_DENSE_ORDER:
        raise TooLarge(f"n={n} exceeds dense limit {MAX_DENSE_ORDER}")
    L = np.zeros((n, n), dtype=np.int64)
    idx = np.arange(n)
    for d in spec.neighbour_offsets:
        L[idx, (idx + d) % n] = -1
    np.fill_diagonal(L, spec.degree)
    return DenseLaplacian(n, L, spec)


def components_by_search(spec: CirculantSpec) -> int:
    """Count connected components by breadth-first search over the offsets."""
    n = spec.n
    seen = [False] * n
    offs = spec.neighbour_offsets
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for d in offs:
                w = (v + d) % n
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return count
