"""Ground truth by direct linear algebra on the dense Laplacian.

Nothing here touches the eigenvalue formulas or the Fibonacci closed forms:
resistances come from solving the grounded system ``L_g x = e_i - e_j`` with
the last vertex tied to zero potential.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np
from scipy import linalg
from scipy.sparse.csgraph import connected_components

from .circulant import CirculantSpec, DenseLaplacian, build_circulant, dense_laplacian
from .closed_form import UNREACHABLE, closed_form_profile
from .errors import Disconnected, Singular
from .report import VerificationReport
from .spectral import resistance_profile_spectral

RESISTANCE_RTOL = 1e-9
FOSTER_ATOL_PER_VERTEX = 1e-8


def component_labels(L: DenseLaplacian) -> np.ndarray:
    _, labels = connected_components(L.adjacency() != 0, directed=False)
    return labels


def _grounded_factor(L: DenseLaplacian):
    labels = component_labels(L)
    if labels.max() > 0:
        raise Disconnected(f"Laplacian of order {L.order} has {labels.max() + 1} components")
    Lg = np.asarray(L.entries[:-1, :-1], dtype=float)
    try:
        return linalg.cho_factor(Lg, lower=True, check_finite=False)
    except linalg.LinAlgError as exc:
        raise Singular(str(exc)) from exc


def _injection(n: int, i: int, j: int) -> np.ndarray:
    b = np.zeros(n)
    b[i] += 1.0
    b[j] -= 1.0
    return b[:-1]


def resistance_solve(L: DenseLaplacian, i: int, j: int) -> float:
    """Effective resistance between vertices ``i`` and ``j``.

    >>> from circulant_resistance.circulant import build_circulant, dense_laplacian
    >>> round(resistance_solve(dense_laplacian(build_circulant(4, [1])), 0, 2), 12)
    1.0
    """
    n = L.order
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"vertex out of range for order {n}")
    if i == j:
        raise ValueError("endpoints must differ")
    factor = _grounded_factor(L)
    x = np.append(linalg.cho_solve(factor, _injection(n, i, j)), 0.0)
    return float(x[i] - x[j])


def resistance_profile_solve(L: DenseLaplacian, source: int = 0) -> np.ndarray:
    """R(source, v) for every vertex v from one factorization."""
    n = L.order
    factor = _grounded_factor(L)
    B = np.zeros((n, n))
    B[source, :] += 1.0
    B[np.arange(n), np.arange(n)] -= 1.0
    X = np.vstack([linalg.cho_solve(factor, B[:-1]), np.zeros((1, n))])
    out = X[source, :] - X[np.arange(n), np.arange(n)]
    out[source] = 0.0
    return out


def resistance_matrix_solve(L: DenseLaplacian) -> np.ndarray:
    """All-pairs resistance matrix from the inverse of the grounded Laplacian."""
    n = L.order
    factor = _grounded_factor(L)
    G = np.zeros((n, n))
    G[:-1, :-1] = linalg.cho_solve(factor, np.eye(n - 1))
    d = np.diag(G)
    R = d[:, None] + d[None, :] - G - G.T
    np.fill_diagonal(R, 0.0)
    return R


def component_profile_solve(L: DenseLaplacian, source: int = 0) -> list:
    """Like :func:`resistance_profile_solve` but tolerant of disconnection.

    Vertices outside the source's component map to ``UNREACHABLE``.
    """
    labels = component_labels(L)
    members = np.flatnonzero(labels == labels[source])
    out: list = [UNREACHABLE] * L.order
    if len(members) == 1:
        out[source] = 0.0
        return out
    sub = DenseLaplacian(len(members), np.ascontiguousarray(L.entries[np.ix_(members, members)]))
    local = int(np.flatnonzero(members == source)[0])
    prof = resistance_profile_solve(sub, local)
    for k, v in enumerate(members):
        out[int(v)] = float(prof[k])
    return out


def foster_audit(spec: CirculantSpec) -> VerificationReport:
    """Sum of resistances over every edge must equal N - 1."""
    L = dense_laplacian(spec)
    R = resistance_matrix_solve(L)
    iu, ju = np.nonzero(np.triu(L.adjacency()))
    total = float(R[iu, ju].sum())
    rep = VerificationReport()
    rep.add(f"foster_solve[{spec.label()}]", total, spec.n - 1, FOSTER_ATOL_PER_VERTEX * spec.n)
    return rep


def _compare_profiles(rep, tag, a, b, n, rtol):
    for l in range(1, n):
        x, y = a[l], b[l]
        if x is UNREACHABLE or y is UNREACHABLE:
            rep.record(f"{tag}[l={l}]", x is y)
        else:
            rep.add(f"{tag}[l={l}]", float(x), float(y), rtol, relative=True)


def equivalence_sweep(
    n_range: Iterable[int],
    jump_sets: Iterable[Iterable[int]],
    rtol: float = RESISTANCE_RTOL,
) -> VerificationReport:
    """Compare closed-form, spectral and solve resistances for each graph.

    Disconnected graphs are checked component-wise: the spectral route must
    refuse them, and closed-form ``UNREACHABLE`` cells must coincide with
    the solver's component split.
    """
    rep = VerificationReport()
    jump_sets = [tuple(js) for js in jump_sets]
    for n in n_range:
        for js in jump_sets:
            spec = build_circulant(n, js)
            tag = spec.label()
            L = dense_laplacian(spec)
            closed = closed_form_profile(spec)
            if spec.is_connected:
                spectral = list(resistance_profile_spectral(spec))
                solve = list(resistance_profile_solve(L))
                _compare_profiles(rep, f"spectral_vs_solve[{tag}]", spectral, solve, n, rtol)
                if closed is not None:
                    _compare_profiles(rep, f"closed_vs_spectral[{tag}]", closed, spectral, n, rtol)
                    _compare_profiles(rep, f"closed_vs_solve[{tag}]", closed, solve, n, rtol)
            else:
                try:
                    resistance_profile_spectral(spec)
                    refused = False
                except Disconnected:
                    refused = True
                rep.record(f"spectral_refuses_disconnected[{tag}]", refused)
                solve = component_profile_solve(L)
                if closed is not None:
                    _compare_profiles(rep, f"closed_vs_solve[{tag}]", closed, solve, n, rtol)
    return rep
