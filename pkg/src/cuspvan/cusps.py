"""Cusp combinatorics for X_0(N): denominators, widths, periods, scalings.

A cusp is written a/L with L | N and gcd(a, N) = 1; L is its denominator.
Two cusps a1/L and a2/L coincide on X_0(N) exactly when a1 = a2 modulo
gcd(L, N/L), so each denominator carries phi(gcd(L, N/L)) cusps.  The
scaling matrix sigma sends a/L to infinity and is pinned down here by the
minimal-|b| convention so that output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .errors import BadMatrix, DomainMismatch, NotADivisor


def euler_phi(n):
    """Euler's totient by trial-division factorization."""
    assert n >= 1
    out = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


def _check_divisor(N, L):
    if N < 1 or L < 1 or N % L != 0:
        raise NotADivisor(f"{L} does not divide {N}")


@dataclass(frozen=True)
class Cusp:
    """The cusp a/L of X_0(N), with gcd(a, N) = 1 and L | N."""

    a: int
    L: int
    N: int

    def __post_init__(self):
        _check_divisor(self.N, self.L)
        if gcd(self.a, self.N) != 1:
            raise BadMatrix(f"numerator {self.a} not coprime to N={self.N}")

    def __str__(self):
        return f"{self.a}/{self.L}"


@dataclass(frozen=True)
class ScalingMatrix:
    """sigma^-1 = [[a, b], [L, d]] in SL_2(Z); sigma moves a/L to infinity."""

    a: int
    b: int
    L: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.L != 1:
            raise BadMatrix("determinant of [[a,b],[L,d]] is not 1")

    def sigma(self):
        """Entries of sigma itself, row-major."""
        return (self.d, -self.b, -self.L, self.a)

    def apply_sigma(self, num, den):
        """sigma acting on the rational num/den as a column vector."""
        return (self.d * num - self.b * den, -self.L * num + self.a * den)


def width(N, L):
    """Width N/gcd(L^2, N) of any cusp of denominator L."""
    _check_divisor(N, L)
    return N // gcd(L * L, N)


def delta(N, M, L):
    """Fourier period lcm(L^2, N, L*M)/L^2 at denominator L, nebentypus conductor M."""
    _check_divisor(N, L)
    _check_divisor(N, M)
    return lcm(L * L, N, L * M) // (L * L)


def cusps_of_denominator(N, L):
    """Inequivalent cusps a/L, smallest positive a per class, gcd(a, N) = 1."""
    _check_divisor(N, L)
    g = gcd(L, N // L)
    out = []
    for c in range(1, g + 1):
        if gcd(c, g) != 1:
            continue
        a = c
        while gcd(a, N) != 1:
            a += g
        out.append(Cusp(a, L, N))
    out.sort(key=lambda cusp: cusp.a)
    return out


def are_equivalent(c1, c2):
    """Whether two cusps coincide on X_0(N)."""
    if c1.N != c2.N:
        raise DomainMismatch(f"cusps on different levels {c1.N} != {c2.N}")
    if c1.L != c2.L:
        return False
    g = gcd(c1.L, c1.N // c1.L)
    return (c1.a - c2.a) % g == 0


def cusp_count(N):
    """Number of cusps of X_0(N)."""
    assert N >= 1
    total = 0
    L = 1
    while L * L <= N:
        if N % L == 0:
            total += euler_phi(gcd(L, N // L))
            if L != N // L:
                total += euler_phi(gcd(N // L, L))
        L += 1
    return total


def scaling_matrix(c):
    """Scaling matrix of the cusp, (b, d) solved with minimal |b|."""
    # Solve a*d - b*L = 1; gcd(a, L) = 1 since gcd(a, N) = 1 and L | N.
    a, L = c.a, c.L
    d0, b0 = _bezout(a, L)
    # General solution (b, d) = (b0 + t*a, d0 + t*L); minimize |b|.
    t = round(-b0 / a) if a else 0
    best = None
    for tt in (t - 1, t, t + 1):
        b = b0 + tt * a
        d = d0 + tt * L
        key = (abs(b), b)
        if best is None or key < best[0]:
            best = (key, b, d)
    return ScalingMatrix(a, best[1], L, best[2])


def _bezout(a, L):
    """(d, b) with a*d - b*L = 1."""
    # Extended gcd on (a, L): find x, y with a*x + L*y = 1, then d=x, b=-y.
    old_r, r = a, L
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    assert old_r == 1 or old_r == -1
    s = old_r  # sign
    return s * old_x, -s * old_y
