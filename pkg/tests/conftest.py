from fractions import Fraction

import pytest

ACCEPTANCE_LINES: list[str] = []


def exact_grounded_resistance(n, jumps, i, j):
    """Resistance by Gaussian elimination over the rationals.

    Builds the Laplacian edge by edge from the adjacency rule and grounds
    vertex n-1; shares no code with the package.
    """
    nbrs = [set() for _ in range(n)]
    for v in range(n):
        for s in jumps:
            for w in ((v + s) % n, (v - s) % n):
                if w != v:
                    nbrs[v].add(w)
    m = n - 1
    A = [[Fraction(0)] * m + [Fraction(0)] for _ in range(m)]
    for v in range(m):
        A[v][v] = Fraction(len(nbrs[v]))
        for w in nbrs[v]:
            if w < m:
                A[v][w] -= 1
    if i < m:
        A[i][m] += 1
    if j < m:
        A[j][m] -= 1
    for c in range(m):
        piv = next(r for r in range(c, m) if A[r][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        for r in range(m):
            if r != c and A[r][c] != 0:
                f = A[r][c] / A[c][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    x = [A[r][m] / A[r][r] for r in range(m)] + [Fraction(0)]
    return x[i] - x[j]


@pytest.fixture
def exact_solve():
    return exact_grounded_resistance


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
