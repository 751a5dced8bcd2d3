"""Truncated symmetric functions in the m- and p-bases, with an extra variable z.

A series is a dict ``{(k, lam): coeff}`` meaning ``coeff * z^k * b_lam``
where ``b`` is the basis named by ``basis``.  Terms with ``k + |lam| > N``
are dropped.  Products are taken in the p-basis, where
``p_lam * p_mu = p_(lam U mu)``; the m-basis is reached through the
transition numbers L.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from .graph import chromatic_polynomial, complete_multipartite

Partition = tuple[int, ...]

MAX_WEIGHT = 10


# --- partitions ------------------------------------------------------------------

def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, (n) first."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def weight(lam: Partition) -> int:
    return sum(lam)


def pfactorial(lam: Partition) -> int:
    """lam! = product of the factorials of the parts."""
    out = 1
    for x in lam:
        out *= math.factorial(x)
    return out


def epsilon(lam: Partition) -> int:
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def multiplicities(lam: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for x in lam:
        out[x] = out.get(x, 0) + 1
    return out


def multinomial(lam: Partition) -> int:
    """l(lam)! / prod_i m_i(lam)!."""
    out = math.factorial(len(lam))
    for m in multiplicities(lam).values():
        out //= math.factorial(m)
    return out


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (same weight assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def union(lam: Partition, mu: Partition) -> Partition:
    return tuple(sorted(lam + mu, reverse=True))


@lru_cache(maxsize=None)
def transition_L(mu: Partition, lam: Partition) -> int:
    """Number of ways to drop each part of mu into a row of lam, filling the rows exactly.

    Equivalently the N-matrices with one non-zero entry per column, column
    sums mu and row sums lam; ``p_mu = sum_lam L[mu, lam] m_lam``.
    """
    if sum(mu) != sum(lam):
        raise ValueError("partitions must have the same weight")

    @lru_cache(maxsize=None)
    def fill(i, caps):
        if i == len(mu):
            return 1 if not any(caps) else 0
        total = 0
        for r, c in enumerate(caps):
            if c >= mu[i]:
                total += fill(i + 1, caps[:r] + (c - mu[i],) + caps[r + 1:])
        return total

    return fill(0, tuple(lam))


@lru_cache(maxsize=None)
def _m_in_p(mu: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    # m_mu = (p_mu - sum_{lam > mu} L[mu,lam] m_lam) / L[mu,mu]
    acc: dict[Partition, Fraction] = {mu: Fraction(1)}
    for lam in partitions(sum(mu)):
        if lam == mu:
            continue
        c = transition_L(mu, lam)
        if c:
            for nu, x in _m_in_p(lam):
                acc[nu] = acc.get(nu, 0) - c * x
    d = transition_L(mu, mu)
    return tuple((nu, x / d) for nu, x in acc.items() if x)


# --- series ------------------------------------------------------------------------

class SymSeries:
    """Symmetric-function series with a formal variable z, truncated at weight N."""

    __slots__ = ("basis", "N", "terms")

    def __init__(self, basis: str, N: int, terms=None):
        if basis not in ("m", "p"):
            raise ValueError("basis must be 'm' or 'p'")
        if N > MAX_WEIGHT:
            raise ValueError(f"truncation weight limited to {MAX_WEIGHT}")
        self.basis = basis
        self.N = N
        self.terms: dict[tuple[int, Partition], Fraction] = {}
        for (k, lam), c in (terms or {}).items():
            lam = tuple(sorted(lam, reverse=True))
            if c and k + sum(lam) <= N:
                self.terms[(k, lam)] = self.terms.get((k, lam), 0) + Fraction(c)
        self.terms = {key: c for key, c in self.terms.items() if c}

    # constructors
    @classmethod
    def const(cls, c, N, basis="p"):
        return cls(basis, N, {(0, ()): c})

    @classmethod
    def z(cls, N, basis="p"):
        return cls(basis, N, {(1, ()): 1})

    @classmethod
    def p(cls, n, N):
        return cls("p", N, {(0, (n,)): 1})

    def __getitem__(self, key):
        k, lam = key
        return self.terms.get((k, tuple(lam)), Fraction(0))

    def _same(self, other):
        if self.basis != other.basis or self.N != other.N:
            raise ValueError("series must share basis and truncation")

    def __add__(self, other):
        if not isinstance(other, SymSeries):
            other = SymSeries.const(other, self.N, self.basis)
        self._same(other)
        t = dict(self.terms)
        for key, c in other.terms.items():
            t[key] = t.get(key, 0) + c
        return SymSeries(self.basis, self.N, t)

    __radd__ = __add__

    def __neg__(self):
        return SymSeries(self.basis, self.N, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return SymSeries(self.basis, self.N, {k: c * x for k, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SymSeries):
            return self.scale(Fraction(other))
        return multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymSeries):
            return NotImplemented
        a, b = self, other
        if a.basis != b.basis:
            a, b = to_p(a), to_p(b)
        return a.N == b.N and a.terms == b.terms

    def __repr__(self):
        inner = ", ".join(f"z^{k}{self.basis}{list(lam)}: {c}" for (k, lam), c in sorted(self.terms.items()))
        return f"SymSeries[{self.basis}, N={self.N}]({inner})"

    def low_weight(self) -> int:
        return min((k + sum(lam) for k, lam in self.terms), default=self.N + 1)


def multiply(f: SymSeries, h: SymSeries) -> SymSeries:
    """Product, computed in the p-basis; the result keeps the p-basis."""
    f, h = to_p(f), to_p(h)
    f._same(h)
    N = f.N
    out: dict[tuple[int, Partition], Fraction] = {}
    for (k1, l1), a in f.terms.items():
        w1 = k1 + sum(l1)
        for (k2, l2), b in h.terms.items():
            if w1 + k2 + sum(l2) > N:
                continue
            key = (k1 + k2, union(l1, l2))
            out[key] = out.get(key, 0) + a * b
    return SymSeries("p", N, out)


def to_m(f: SymSeries) -> SymSeries:
    """p-basis to m-basis through L."""
    if f.basis == "m":
        return f
    out: dict = {}
    for (k, mu), c in f.terms.items():
        for lam in partitions(sum(mu)):
            L = transition_L(mu, lam)
            if L:
                out[(k, lam)] = out.get((k, lam), 0) + c * L
    return SymSeries("m", f.N, out)


def to_p(f: SymSeries) -> SymSeries:
    """m-basis to p-basis by solving the triangular system."""
    if f.basis == "p":
        return f
    out: dict = {}
    for (k, mu), c in f.terms.items():
        for nu, x in _m_in_p(mu):
            out[(k, nu)] = out.get((k, nu), 0) + c * x
    return SymSeries("p", f.N, out)


p_to_m = to_m
m_to_p = to_p


def power_series(X: SymSeries, coeffs: Callable[[int], Fraction]) -> SymSeries:
    """sum_{k>=0} coeffs(k) X^k for X of positive low weight."""
    X = to_p(X)
    if X.low_weight() < 1:
        raise ValueError("argument must have no weight-0 term")
    acc = SymSeries.const(coeffs(0), X.N)
    power = SymSeries.const(1, X.N)
    for k in range(1, X.N + 1):
        power = multiply(power, X)
        if not power.terms:
            break
        c = coeffs(k)
        if c:
            acc = acc + power.scale(c)
    return acc


def geometric(X: SymSeries) -> SymSeries:
    """1 / (1 - X)."""
    return power_series(X, lambda k: Fraction(1))


def neg_log_one_minus(X: SymSeries) -> SymSeries:
    """-log(1 - X)."""
    return power_series(X, lambda k: Fraction(1, k) if k else Fraction(0))


def log_one_plus(X: SymSeries) -> SymSeries:
    """log(1 + X)."""
    return power_series(X, lambda k: Fraction((-1) ** (k - 1), k) if k else Fraction(0))


def substitute_z(outer: SymSeries, inner: SymSeries) -> SymSeries:
    """Replace z by ``inner`` in ``outer``, holding the power sums fixed."""
    outer, inner = to_p(outer), to_p(inner)
    outer._same(inner)
    if inner.low_weight() < 1:
        raise ValueError("inner series must have no weight-0 term")
    N = outer.N
    by_power: dict[int, dict] = {}
    for (k, lam), c in outer.terms.items():
        by_power.setdefault(k, {})[(0, lam)] = c
    acc = SymSeries("p", N)
    power = SymSeries.const(1, N)
    for k in range(0, N + 1):
        if k:
            power = multiply(power, inner)
        if k in by_power:
            acc = acc + multiply(SymSeries("p", N, by_power[k]), power)
    return acc


def negate_alphabet(f: SymSeries) -> SymSeries:
    """-F(-x, -z): p_n -> (-1)^n p_n and z -> -z, with an overall minus sign."""
    f = to_p(f)
    return SymSeries(
        "p", f.N, {(k, lam): -c * (-1) ** (k + sum(lam)) for (k, lam), c in f.terms.items()}
    )


def alternating_power_sums(N: int) -> SymSeries:
    """sum_{n>=1} (-1)^(n-1) p_n."""
    return SymSeries("p", N, {(0, (n,)): (-1) ** (n - 1) for n in range(1, N + 1)})


# --- Young generating functions ---------------------------------------------------

def multipartite_graph(k: int, lam: Partition):
    """K_{(1^k) U lam}."""
    return complete_multipartite(tuple(lam) + (1,) * k)


def young_generating(f, N: int) -> SymSeries:
    """sum f(K_{(1^n) U lam}) z^n/n! m_lam/lam!, without n = 0, l(lam) < 2 terms."""
    terms = {}
    for n in range(N + 1):
        for w in range(N - n + 1):
            for lam in partitions(w):
                if n == 0 and len(lam) < 2:
                    continue
                val = f(multipartite_graph(n, lam))
                if val:
                    terms[(n, lam)] = Fraction(val) / (math.factorial(n) * pfactorial(lam))
    return SymSeries("m", N, terms)


def hp_series_closed(N: int) -> SymSeries:
    """1 / (1 - (z + sum (-1)^(n-1) p_n)), in the m-basis."""
    X = SymSeries.z(N) + alternating_power_sums(N)
    return to_m(geometric(X))


def hc_series_closed(N: int) -> SymSeries:
    """-log(1 - (z + sum (-1)^(n-1) p_n)) + sum (-1)^n p_n / n, in the m-basis."""
    X = SymSeries.z(N) + alternating_power_sums(N)
    tail = SymSeries("p", N, {(0, (n,)): Fraction((-1) ** n, n) for n in range(1, N + 1)})
    return to_m(neg_log_one_minus(X) + tail)


def p_series_closed(N: int) -> SymSeries:
    """Young series of n!: 1/(1 - (z + p_1)) - (1 + sum p_n)."""
    X = SymSeries.z(N) + SymSeries.p(1, N)
    tail = SymSeries("p", N, {(0, (n,)): 1 for n in range(1, N + 1)})
    return to_m(geometric(X) - 1 - tail)


def c_series_closed(N: int) -> SymSeries:
    """Young series of (n-1)!: -log(1 - (p_1 + z)) - sum p_n / n."""
    X = SymSeries.z(N) + SymSeries.p(1, N)
    tail = SymSeries("p", N, {(0, (n,)): Fraction(1, n) for n in range(1, N + 1)})
    return to_m(neg_log_one_minus(X) - tail)


# --- closed multipartite counts -------------------------------------------------

def _multipartite_sum(k: int, lam: Partition, cyclic: bool) -> Fraction:
    lam = tuple(sorted(lam, reverse=True))
    total = Fraction(0)
    for mu in partitions(sum(lam)):
        L = transition_L(mu, lam)
        if not L:
            continue
        l = len(mu)
        term = Fraction(epsilon(mu) * multinomial(mu) * math.comb(l + k, l) * L)
        if cyclic:
            term /= k + l
        total += term
    return math.factorial(k) * pfactorial(lam) * total


def hp_multipartite(k: int, lam: Partition) -> int:
    """Directed Hamiltonian paths of K_{(1^k) U lam} from the closed formula."""
    if k < 0 or k + sum(lam) > 12:
        raise ValueError("need 0 <= k and k + |lam| <= 12")
    v = _multipartite_sum(k, lam, False)
    assert v.denominator == 1
    return int(v)


def hc_multipartite(k: int, lam: Partition) -> int:
    """Directed Hamiltonian cycles of K_{(1^k) U lam}; needs k + l(lam) >= 2."""
    if k + len(lam) < 2:
        raise ValueError("need k + l(lam) >= 2")
    if k < 0 or k + sum(lam) > 12:
        raise ValueError("need 0 <= k and k + |lam| <= 12")
    v = _multipartite_sum(k, lam, True)
    assert v.denominator == 1
    return int(v)


# --- chromatic generating function -------------------------------------------------

def chromatic_generating_check(q: int, N: int) -> bool:
    """sum chi_{K_lam}(q) m_lam/lam! == (1 + sum p_n/n!)^q up to weight N."""
    if not 0 <= q <= 4 or N > 6:
        raise ValueError("need 0 <= q <= 4 and N <= 6")
    lhs = {}
    for w in range(N + 1):
        for lam in partitions(w):
            chi = chromatic_polynomial(complete_multipartite(lam))(q) if lam else 1
            lhs[(0, lam)] = Fraction(chi, pfactorial(lam))
    lhs = SymSeries("m", N, lhs)
    base = SymSeries("p", N, {(0, (n,)): Fraction(1, math.factorial(n)) for n in range(1, N + 1)}) + 1
    rhs = SymSeries.const(1, N)
    for _ in range(q):
        rhs = multiply(rhs, base)
    return to_m(rhs) == lhs
