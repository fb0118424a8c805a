"""Exact effective resistances for C_N(1), C_N(1,2) and C_N(2).

All values are ``Fraction``.  For C_N(1,2) the irrational factor built from
beta = (3 - sqrt 5)/2 collapses, for either parity of N, to the rational
``L_N / (5 F_N)``; that ratio is the only place the graph size enters beyond
the cycle term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import fib, lucas
from .errors import UnsupportedN
from .report import VerificationReport


class _Unreachable:
    """Marker for an infinite resistance between different components."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __str__(self) -> str:
        return "unreachable"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


def _check_offset(N: int, l: int) -> None:
    if not 0 <= l < N:
        raise ValueError(f"offset {l} outside [0, {N})")


def _check_c12(N: int) -> None:
    if N < 5:
        raise UnsupportedN(f"jumps {{1,2}} closed forms need N >= 5, got {N}")


def golden_ratio_factor(N: int) -> Fraction:
    """L_N / (5 F_N), the rational value of the beta-ratio term."""
    return Fraction(lucas(N), 5 * fib(N))


def cycle_resistance(N: int, l: int) -> Fraction:
    """R(l) = l (N - l) / N on the N-cycle."""
    if N < 3:
        raise UnsupportedN(f"cycle needs N >= 3, got {N}")
    _check_offset(N, l)
    return Fraction(l * (N - l), N)


def c12_resistance(N: int, l: int) -> Fraction:
    """Exact resistance between vertices 0 and l of C_N(1,2).

    >>> c12_resistance(6, 1), c12_resistance(6, 3)
    (Fraction(5, 12), Fraction(1, 2))
    """
    _check_c12(N)
    _check_offset(N, l)
    if l == 0:
        return Fraction(0)
    sign = -1 if l % 2 else 1  # (-1)^l
    fl = fib(l)
    return (
        Fraction(l * (N - l), 5 * N)
        - sign * fl * fl * golden_ratio_factor(N)
        + Fraction(sign * fib(2 * l), 5)
    )


@dataclass(frozen=True)
class ResistanceProfile:
    """R(l) for l = 0..N-1 (index 0 holds the trivial zero)."""

    n: int
    values: tuple

    def __getitem__(self, l: int):
        return self.values[l]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def total(self):
        """Sum over l = 1..N-1."""
        return sum(self.values[1:], Fraction(0))

    def kirchhoff(self) -> Fraction:
        return Fraction(self.n, 2) * self.total()


def c12_profile(N: int) -> ResistanceProfile:
    _check_c12(N)
    return ResistanceProfile(N, tuple(c12_resistance(N, l) for l in range(N)))


def cycle_profile(N: int) -> ResistanceProfile:
    return ResistanceProfile(N, tuple(cycle_resistance(N, l) for l in range(N)))


def c12_kirchhoff(N: int) -> Fraction:
    """Kirchhoff index of C_N(1,2) from the alternating Fibonacci sums."""
    _check_c12(N)
    g = golden_ratio_factor(N)
    f_n, f_nm1, f_2nm1 = fib(N), fib(N - 1), fib(2 * N - 1)
    cubic = Fraction(N**3 - N, 60)
    half = Fraction(N, 10)
    if N % 2 == 0:
        return cubic + half * (f_2nm1 + 2 * N - 1) * g + half * (f_nm1**2 - f_n**2 - 1)
    return cubic - half * (f_2nm1 - 2 * N + 1) * g + half * (f_n**2 - f_nm1**2 - 1)


def c2_resistance(N: int, v: int):
    """Resistance from 0 to ``v`` in C_N(2) (C_N(1,2) with the ring edges removed).

    Returns :data:`UNREACHABLE` when N is even and ``v`` is odd, since the
    graph then splits into the even and odd vertex cycles.
    """
    if N < 5:
        raise UnsupportedN(f"C_N(2) closed form needs N >= 5, got {N}")
    _check_offset(N, v)
    if N % 2 == 0:
        if v % 2:
            return UNREACHABLE
        # v/2 steps on an N/2-cycle
        return Fraction(v, 2) * (1 - Fraction(v, N))
    if v % 2 == 0:
        return Fraction(v, 2) * (1 - Fraction(v, 2 * N))
    return Fraction(1, 4) * (N - Fraction(v * v, N))


def c2_profile(N: int) -> ResistanceProfile:
    return ResistanceProfile(N, tuple(c2_resistance(N, v) for v in range(N)))


def c2_kirchhoff(N: int):
    """Kirchhoff index of C_N(2); unreachable for even N."""
    prof = c2_profile(N)
    if N % 2 == 0:
        return UNREACHABLE
    return prof.kirchhoff()


def inverse_sine_square_sum(N: int) -> float:
    return math.fsum(1.0 / math.sin(n * math.pi / N) ** 2 for n in range(1, N))


def inverse_cosine_sum(N: int) -> float:
    """sum_{n=1}^{N-1} 1 / (1 + 4 cos^2(n pi / N))."""
    return math.fsum(1.0 / (1.0 + 4.0 * math.cos(n * math.pi / N) ** 2) for n in range(1, N))


def inverse_cosine_sum_fibonacci(N: int) -> Fraction:
    """Fibonacci closed form of :func:`inverse_cosine_sum` (parity dependent)."""
    if N < 2:
        raise ValueError(f"need N >= 2, got {N}")
    g = golden_ratio_factor(N)
    f_n, f_nm1, f_2nm1 = fib(N), fib(N - 1), fib(2 * N - 1)
    if N % 2 == 0:
        return Fraction(f_2nm1 + 2 * N - 1, 2) * g + Fraction(f_nm1**2 - f_n**2 - 1, 2)
    return -Fraction(f_2nm1 - 2 * N + 1, 2) * g + Fraction(f_n**2 - f_nm1**2 - 1, 2)


def symmetry_identity_sides(N: int, l: int) -> tuple[Fraction, Fraction]:
    """Both sides of the Fibonacci identity implied by R(l) = R(N - l).

    Even N: (F_{2(N-l)} - F_{2l})/5 = (F_{N-l}^2 - F_l^2) L_N/(5 F_N).
    Odd N uses plus signs on both sides.
    """
    s = -1 if N % 2 == 0 else 1
    lhs = Fraction(fib(2 * (N - l)) + s * fib(2 * l), 5)
    rhs = (fib(N - l) ** 2 + s * fib(l) ** 2) * golden_ratio_factor(N)
    return lhs, rhs


def trig_identity_report(N: int, tol: float = 1e-9) -> VerificationReport:
    """The two reciprocal trigonometric sums against their closed forms."""
    rep = VerificationReport()
    rep.add(f"inverse_sine_square_sum[N={N}]", inverse_sine_square_sum(N),
            Fraction(N * N - 1, 3), tol, relative=True)
    rep.add(f"inverse_cosine_sum[N={N}]", inverse_cosine_sum(N),
            inverse_cosine_sum_fibonacci(N), tol, relative=True)
    return rep


def identity_suite(N: int, tol: float = 1e-9) -> VerificationReport:
    """Exact symmetry identities for every l plus the two trigonometric sums.

    Failures are recorded in the report, never raised.
    """
    if N < 2:
        raise ValueError(f"need N >= 2, got {N}")
    rep = VerificationReport()
    for l in range(1, N):
        lhs, rhs = symmetry_identity_sides(N, l)
        rep.add(f"fibonacci_symmetry[N={N},l={l}]", lhs, rhs)
    rep.extend(trig_identity_report(N, tol))
    return rep


def has_closed_form(spec) -> bool:
    """True for C_N(1), and for C_N(1,2) and C_N(2) with N >= 5."""
    return spec.jumps == (1,) or (spec.jumps in ((1, 2), (2,)) and spec.n >= 5)


def exact_resistance(spec, l: int):
    """Closed-form resistance for a supported circulant spec."""
    if spec.jumps == (1,):
        return cycle_resistance(spec.n, l)
    if spec.jumps == (1, 2):
        return c12_resistance(spec.n, l)
    if spec.jumps == (2,):
        return c2_resistance(spec.n, l)
    raise UnsupportedN(f"no closed form for {spec.label()}")


def closed_form_profile(spec) -> ResistanceProfile | None:
    if not has_closed_form(spec):
        return None
    return ResistanceProfile(spec.n, tuple(exact_resistance(spec, l) for l in range(spec.n)))


def exact_kirchhoff(spec):
    """Closed-form Kirchhoff index, or ``UNREACHABLE`` for a split graph."""
    if spec.jumps == (1,):
        return Fraction(spec.n**3 - spec.n, 12)
    if spec.jumps == (1, 2):
        return c12_kirchhoff(spec.n)
    if spec.jumps == (2,):
        return c2_kirchhoff(spec.n)
    raise UnsupportedN(f"no closed form for {spec.label()}")
