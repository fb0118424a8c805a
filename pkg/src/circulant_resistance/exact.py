"""Exact integers and rationals, Fibonacci and Lucas numbers.

Python ``int`` is already arbitrary precision and ``fractions.Fraction`` keeps
itself reduced with a positive denominator, so those two serve as the exact
value types.  The only thing built here is the Fibonacci kernel.
"""

from __future__ import annotations

from fractions import Fraction

BigRational = Fraction


def _fib_pair(k: int) -> tuple[int, int]:
    # (F_k, F_{k+1}) by fast doubling, iterating over the bits of k
    a, b = 0, 1
    for bit in bin(k)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        a, b = (d, c + d) if bit == "1" else (c, d)
    return a, b


def fib(k: int) -> int:
    """F_k with F_0 = 0, F_1 = 1, in O(log k) multiplications.

    >>> [fib(i) for i in range(8)]
    [0, 1, 1, 2, 3, 5, 8, 13]
    """
    if k < 0:
        raise ValueError(f"negative Fibonacci index {k}")
    return _fib_pair(k)[0]


def lucas(k: int) -> int:
    """L_k = F_{k-1} + F_{k+1}, with L_0 = 2.

    >>> [lucas(i) for i in range(7)]
    [2, 1, 3, 4, 7, 11, 18]
    """
    if k < 0:
        raise ValueError(f"negative Lucas index {k}")
    if k == 0:
        return 2
    f, f1 = _fib_pair(k)
    # F_{k-1} = F_{k+1} - F_k
    return 2 * f1 - f


def format_exact(x: Fraction | int) -> str:
    """Render as ``"p/q"`` (or ``"p"`` when q = 1)."""
    return str(Fraction(x))


def parse_exact(text: str) -> Fraction:
    """Inverse of :func:`format_exact`; accepts ``"p"`` or ``"p/q"``."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if not sep:
            return Fraction(int(num))
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc
