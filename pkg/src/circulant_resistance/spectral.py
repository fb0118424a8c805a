"""Eigenvalue-sum formulas for circulant graphs.

The two-point resistance of a circulant graph follows from the Fourier basis:
``R(l) = (1/N) sum_{n=1}^{N-1} 4 sin^2(n l pi / N) / lambda_n``.  Terms ``n``
and ``N - n`` are equal, so they are folded together before an ``fsum``.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .circulant import CirculantSpec, eigenvalues
from .errors import BadPower, Disconnected


def _nonzero_spectrum(spec: CirculantSpec) -> np.ndarray:
    lam = eigenvalues(spec).as_array()
    if np.any(lam[1:] == 0.0):
        raise Disconnected(f"{spec.label()} has {spec.component_count} components")
    return lam


def _folded_weights(n: int) -> tuple[np.ndarray, np.ndarray]:
    # indices 1..floor(N/2) with multiplicity 2, except the self-paired n = N/2
    half = np.arange(1, n // 2 + 1)
    mult = np.full(half.shape, 2.0)
    if n % 2 == 0:
        mult[-1] = 1.0
    return half, mult


def resistance_spectral(spec: CirculantSpec, l: int) -> float:
    """Two-point resistance between vertex 0 and vertex ``l``."""
    n = spec.n
    lam = _nonzero_spectrum(spec)
    if not 0 <= l < n:
        raise ValueError(f"offset {l} outside [0, {n})")
    if l == 0:
        return 0.0
    idx, mult = _folded_weights(n)
    terms = mult * 4.0 * np.sin(np.pi * idx * l / n) ** 2 / lam[idx]
    return math.fsum(terms) / n


def resistance_profile_spectral(spec: CirculantSpec) -> np.ndarray:
    """R(l) for every l = 0..N-1 as a float array."""
    n = spec.n
    lam = _nonzero_spectrum(spec)
    idx, mult = _folded_weights(n)
    ls = np.arange(n)
    # reduce n*l mod 2N before scaling to keep the sine argument small
    phase = np.pi * ((np.outer(ls, idx)) % (2 * n)) / n
    terms = (mult * 4.0 / lam[idx]) * np.sin(phase) ** 2
    out = np.array([math.fsum(row) for row in terms]) / n
    out[0] = 0.0
    return out


def kirchhoff_spectral(spec: CirculantSpec) -> float:
    """Kirchhoff index N * sum_{n>=1} 1/lambda_n."""
    lam = _nonzero_spectrum(spec)
    idx, mult = _folded_weights(spec.n)
    return spec.n * math.fsum(mult / lam[idx])


def eigentime_mfpt(spec: CirculantSpec) -> float:
    """Mean first-passage time via the eigentime identity, d * sum 1/lambda_n.

    For jumps without an antipode this is ``p * sum (2 sum_m sin^2)^-1``.
    """
    lam = _nonzero_spectrum(spec)
    idx, mult = _folded_weights(spec.n)
    return spec.degree * math.fsum(mult / lam[idx])


def trig_power_sum_exact(N: int, J: int) -> Fraction:
    """Exact value of sum_{n=1}^{N-1} sin^{2J}(n pi / N).

    Binomial closed form with the wrap-around correction for every multiple
    ``pN <= J``; the sign ``(-1)^{pN}`` is kept even though it is always +1
    for even N.
    """
    if N < 2:
        raise ValueError(f"need N >= 2, got {N}")
    if J < 1:
        raise BadPower(f"power J must be >= 1, got {J}")
    head = Fraction(N * math.comb(2 * J, J), 4**J)
    corr = sum((-1) ** (p * N) * math.comb(2 * J, J - p * N) for p in range(1, J // N + 1))
    return head + Fraction(2 * N * corr, 4**J)


def trig_power_sum(N: int, J: int) -> float:
    return float(trig_power_sum_exact(N, J))


def trig_power_sum_direct(N: int, J: int) -> float:
    """Brute-force sum of sin^{2J}(n pi / N) over n = 1..N-1."""
    return math.fsum(math.sin(n * math.pi / N) ** (2 * J) for n in range(1, N))
