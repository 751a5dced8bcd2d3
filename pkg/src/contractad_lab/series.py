"""Exact rational power series in one variable t, truncated at order N."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .graph import cycle, path

MAX_ORDER = 30


class RationalSeries:
    """Coefficients c[0..N] of sum c_n t^n; nothing beyond t^N is ever reported."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable, N: int | None = None):
        c = [Fraction(x) for x in coeffs]
        if N is not None:
            c = (c + [Fraction(0)] * (N + 1))[: N + 1]
        if not c:
            raise ValueError("empty series")
        if len(c) - 1 > MAX_ORDER:
            raise ValueError(f"order limited to {MAX_ORDER}")
        self.c = c

    @property
    def N(self) -> int:
        return len(self.c) - 1

    @classmethod
    def t(cls, N: int) -> "RationalSeries":
        return cls([0, 1], N)

    @classmethod
    def const(cls, x, N: int) -> "RationalSeries":
        return cls([x], N)

    def __getitem__(self, n):
        return self.c[n]

    def __len__(self):
        return len(self.c)

    def _lift(self, other):
        if isinstance(other, RationalSeries):
            if other.N != self.N:
                raise ValueError("series must share the truncation order")
            return other
        return RationalSeries.const(other, self.N)

    def __add__(self, other):
        other = self._lift(other)
        return RationalSeries([a + b for a, b in zip(self.c, other.c)])

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries([-a for a in self.c])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, RationalSeries):
            return RationalSeries([a * other for a in self.c])
        other = self._lift(other)
        N = self.N
        out = [Fraction(0)] * (N + 1)
        for i, a in enumerate(self.c):
            if a:
                for j in range(N + 1 - i):
                    out[i + j] += a * other.c[j]
        return RationalSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RationalSeries):
            return RationalSeries([a / Fraction(other) for a in self.c])
        return self * reciprocal(self._lift(other))

    def __pow__(self, k: int):
        out = RationalSeries.const(1, self.N)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, RationalSeries):
            return self.c == other.c
        return NotImplemented

    def __repr__(self):
        return f"RationalSeries({[str(x) for x in self.c]})"

    def derivative(self) -> "RationalSeries":
        return RationalSeries([n * self.c[n] for n in range(1, self.N + 1)] + [0])

    def integral(self) -> "RationalSeries":
        return RationalSeries([0] + [self.c[n] / (n + 1) for n in range(self.N)])


def reciprocal(f: RationalSeries) -> RationalSeries:
    if f.c[0] == 0:
        raise ValueError("reciprocal needs a non-zero constant term")
    N = f.N
    out = [Fraction(0)] * (N + 1)
    out[0] = 1 / f.c[0]
    for n in range(1, N + 1):
        s = sum(f.c[k] * out[n - k] for k in range(1, n + 1))
        out[n] = -s / f.c[0]
    return RationalSeries(out)


def compose(outer: RationalSeries, inner: RationalSeries) -> RationalSeries:
    """outer(inner(t)) by Horner's rule; inner must vanish at 0."""
    if inner.c[0] != 0:
        raise ValueError("inner series must have zero constant term")
    if outer.N != inner.N:
        raise ValueError("series must share the truncation order")
    acc = RationalSeries.const(outer.c[-1], outer.N)
    for a in reversed(outer.c[:-1]):
        acc = acc * inner + a
    return acc


def sqrt(f: RationalSeries) -> RationalSeries:
    """Square root with constant term 1, by Newton iteration g <- (g + f/g)/2."""
    if f.c[0] != 1:
        raise ValueError("sqrt needs constant term 1")
    N = f.N
    g = RationalSeries.const(1, N)
    prec = 1
    while prec <= N:
        prec *= 2
        g = (g + f * reciprocal(g)) * Fraction(1, 2)
    return g


def log(f: RationalSeries) -> RationalSeries:
    """log f for constant term 1, as the integral of f'/f."""
    if f.c[0] != 1:
        raise ValueError("log needs constant term 1")
    return (f.derivative() * reciprocal(f)).integral()


# --- generating functions of path and cycle families -------------------------------

def ogf_path(f, N: int) -> RationalSeries:
    """sum_{n>=1} f(P_n) t^n."""
    return RationalSeries([0] + [f(path(n)) for n in range(1, N + 1)])


def ogf_cycle(f, N: int) -> RationalSeries:
    """sum_{n>=1} f(C_n) t^n / n, with C_1 = P_1 and C_2 = P_2."""
    return RationalSeries([0] + [Fraction(f(cycle(n)), n) for n in range(1, N + 1)])


def fp_omega_hp(N: int) -> RationalSeries:
    """(t - t^2) / (1 + t)."""
    t = RationalSeries.t(N)
    return (t - t * t) * reciprocal(1 + t)


def factorial_series(N: int, shift: int = 0) -> RationalSeries:
    """sum_{n>=1} (n - shift)! t^n."""
    return RationalSeries([0] + [math.factorial(n - shift) for n in range(1, N + 1)])


def hertzsprung(N: int) -> RationalSeries:
    """sum H_n t^n = sum n! ((t - t^2)/(1 + t))^n."""
    return compose(factorial_series(N), fp_omega_hp(N))


def cyclic_hertzsprung(N: int) -> RationalSeries:
    """sum CH_n t^n / n.

    3t^2/2 + sum_{n>=1} ((n-1)!/n) u^n + sum_{n>=3} (-1)^n 2 t^n / n,
    with u = (t - t^2)/(1 + t).
    """
    u = fp_omega_hp(N)
    outer = RationalSeries([0] + [Fraction(math.factorial(n - 1), n) for n in range(1, N + 1)])
    tail = RationalSeries([0, 0, Fraction(3, 2)] + [Fraction(2 * (-1) ** n, n) for n in range(3, N + 1)], N)
    return compose(outer, u) + tail


def cyclic_counts(f: RationalSeries) -> list[Fraction]:
    """Undo the 1/n weighting: [n * c_n for n >= 1]."""
    return [n * f.c[n] for n in range(1, f.N + 1)]


def schroder_series(N: int) -> RationalSeries:
    """(1 - t - sqrt(t^2 - 6t + 1)) / 2."""
    t = RationalSeries.t(N)
    return (1 - t - sqrt(t * t - 6 * t + 1)) * Fraction(1, 2)


def fc_pe_closed(N: int) -> RationalSeries:
    """(3t - t^2 - t sqrt(t^2 - 6t + 1)) / 2."""
    t = RationalSeries.t(N)
    return (3 * t - t * t - t * sqrt(t * t - 6 * t + 1)) * Fraction(1, 2)


def complement_cycles_combination(N: int) -> RationalSeries:
    """F_C(C)(F_P(w HP)) - F_P(w HP) + F_C(w HP) - F_C(w HC), from closed and swept parts.

    The last two terms come from graph sweeps over the cycle family.
    """
    from .graphic import HC, HP, omega

    u = fp_omega_hp(N)
    fc_c = RationalSeries([0] + [Fraction(math.factorial(n - 1), n) for n in range(1, N + 1)])
    return compose(fc_c, u) - u + ogf_cycle(omega(HP), N) - ogf_cycle(omega(HC), N)


NAMED = ("hertzsprung", "cyclic-hertzsprung", "schroder", "fp-hp", "fc-pe")


def named_series(name: str, N: int) -> RationalSeries:
    """The CLI's named series; fp-hp is sum HP(P_n) t^n, fc-pe the closed form of F_C(PE)."""
    if name == "hertzsprung":
        return hertzsprung(N)
    if name == "cyclic-hertzsprung":
        return cyclic_hertzsprung(N)
    if name == "schroder":
        return schroder_series(N)
    if name == "fp-hp":
        from .graphic import HP

        return ogf_path(HP, N)
    if name == "fc-pe":
        return fc_pe_closed(N)
    raise ValueError(f"unknown series {name!r}; choose from {', '.join(NAMED)}")
