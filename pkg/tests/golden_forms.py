"""High-precision evaluation of the C_N(1,2) formulas in their irrational form,
with beta = (3 - sqrt 5)/2 kept explicit.  Used only as an oracle for the
rational reduction L_N / (5 F_N)."""

from decimal import Decimal, localcontext

from circulant_resistance.exact import fib

DIGITS = 60


def _ratio(N):
    # (1/sqrt5) * (1 + b^N)/(1 - b^N) for even N, (1 - b^N)/(1 + b^N) for odd N
    s5 = Decimal(5).sqrt()
    b = (3 - s5) / 2
    bn = b**N
    r = (1 + bn) / (1 - bn) if N % 2 == 0 else (1 - bn) / (1 + bn)
    return r / s5


def resistance(N, l):
    with localcontext() as ctx:
        ctx.prec = DIGITS
        sign = -1 if l % 2 else 1
        return (
            Decimal(l * (N - l)) / (5 * N)
            - sign * fib(l) ** 2 * _ratio(N)
            + Decimal(sign * fib(2 * l)) / 5
        )


def fpt(N, l):
    with localcontext() as ctx:
        ctx.prec = DIGITS
        sign = -1 if l % 2 else 1
        return (
            Decimal(2 * l * (N - l)) / 5
            - sign * 2 * N * fib(l) ** 2 * _ratio(N)
            + Decimal(sign * 2 * N * fib(2 * l)) / 5
        )


def kirchhoff(N):
    with localcontext() as ctx:
        ctx.prec = DIGITS
        cubic = Decimal(N**3 - N) / 60
        half = Decimal(N) / 10
        fn, fn1, f2 = fib(N), fib(N - 1), fib(2 * N - 1)
        if N % 2 == 0:
            return cubic + half * (f2 + 2 * N - 1) * _ratio(N) + half * (fn1**2 - fn**2 - 1)
        return cubic - half * (f2 - 2 * N + 1) * _ratio(N) + half * (fn**2 - fn1**2 - 1)


def mfpt(N):
    with localcontext() as ctx:
        ctx.prec = DIGITS
        base = Decimal(4) / 5 * Decimal(N * N - 1) / 12
        two5 = Decimal(2) / 5
        fn, fn1, f2 = fib(N), fib(N - 1), fib(2 * N - 1)
        if N % 2 == 0:
            return base + two5 * (f2 + 2 * N - 1) * _ratio(N) + two5 * (fn1**2 - fn**2 - 1)
        return base - two5 * (f2 - 2 * N + 1) * _ratio(N) + two5 * (fn**2 - fn1**2 - 1)


def inverse_cosine_sum(N):
    with localcontext() as ctx:
        ctx.prec = DIGITS
        fn, fn1, f2 = fib(N), fib(N - 1), fib(2 * N - 1)
        half = Decimal(1) / 2
        if N % 2 == 0:
            return half * (f2 + 2 * N - 1) * _ratio(N) + half * (fn1**2 - fn**2 - 1)
        return -half * (f2 - 2 * N + 1) * _ratio(N) + half * (fn**2 - fn1**2 - 1)
