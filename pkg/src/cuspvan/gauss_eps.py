"""Additive character of Q_p, unit-interval Gauss sums, GL(1) epsilon factors.

The additive character used throughout is psi(x) = exp(-2*pi*i*{x}_p), where
{x}_p is the p-adic fractional part; it is trivial on Z_p and its conductor
exponent is 0.  Gauss sums are *averages* over units,

    G(v * p^(-r), mu) = phi(p^R)^(-1) * sum_u psi(v p^(-r) u) mu(u),

with u over (Z/p^R)^x and R = max(r, a(mu), 1), so |G| <= 1 always.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import DomainError
from .padic_chars import (
    PadicCharacter,
    _dlog_table,
    _phi_pk,
    _vp,
    char_inv,
    conductor,
    reduce_to_conductor,
    strip_varpi,
    unit_group_structure,
    unit_rotation,
)

_TWO_PI = 2.0 * cmath.pi


@dataclass(frozen=True)
class AdditiveCharSpec:
    """Standard additive character data: psi(x) = exp(sign*2*pi*i*{x}_p)."""

    p: int
    sign: int = -1


def psi(p, x, sign=-1):
    """psi(x) for x in Q with denominator a power of p."""
    x = Fraction(x)
    den = x.denominator
    m = _vp(den, p) if den > 1 else 0
    if den != p**m:
        raise DomainError(
            f"psi over Q_{p} needs a p-power denominator, got {den}"
        )
    if m == 0:
        return 1.0 + 0.0j
    frac = x.numerator % den
    if frac == 0:
        return 1.0 + 0.0j
    return cmath.exp(sign * 1j * _TWO_PI * frac / den)


def zeta_local(p, s):
    """Local zeta factor zeta_p(s) = 1 / (1 - p^(-s))."""
    return 1.0 / (1.0 - float(p) ** (-s))


@dataclass(frozen=True)
class GaussSumValue:
    value: complex
    p: int
    r: int
    mu_conductor: int


@lru_cache(maxsize=None)
def _dlog_arrays(p, k):
    """Generator exponents of every residue mod p^k as int arrays.

    Non-unit slots hold 0 and must never be read.
    """
    st = unit_group_structure(p, k)
    m = p**k
    cols = [np.zeros(m, dtype=np.int64) for _ in st.orders]
    for u, exps in _dlog_table(p, k).items():
        for col, e in zip(cols, exps):
            col[u] = e
    return tuple(st.orders), tuple(cols)


def _rotation_array(p, k, exponents):
    """Rotation numbers of the character, indexed by residue mod p^k.

    Non-unit slots hold 0.0 and must never be read.
    """
    orders, cols = _dlog_arrays(p, k)
    rots = np.zeros(p**k, dtype=np.float64)
    for e, n, col in zip(exponents, orders, cols):
        rots += (e * col % n) / n
    return rots


def _unit_values(mu, units):
    """mu(u) for an integer array of unit representatives."""
    mu = reduce_to_conductor(strip_varpi(mu))
    if mu.k == 0:
        return np.ones(len(units), dtype=np.complex128)
    m = mu.p**mu.k
    rots = _rotation_array(mu.p, mu.k, mu.exponents)
    return np.exp(1j * _TWO_PI * rots[units % m])


def gauss_sum(p, v, r, mu):
    """Average Gauss sum G(v * p^(-r), mu) over units mod p^R.

    v must be prime to p; mu is evaluated through its unit restriction.
    """
    if mu.p != p:
        raise DomainError(f"mu lives over p={mu.p}, not {p}")
    v = int(v)
    if gcd(v, p) != 1:
        raise DomainError(f"v = {v} is not a unit at p = {p}")
    r = int(r)
    a = conductor(mu)
    R = max(r, a, 1)
    m = p**R
    units = np.arange(m, dtype=np.int64)
    units = units[units % p != 0]
    total = _unit_values(mu, units)
    if r > 0:
        q = p**r
        total = total * np.exp(-1j * _TWO_PI * ((v * units) % q) / q)
    value = complex(total.sum()) / _phi_pk(p, R)
    return GaussSumValue(value, p, r, a)


def classify_gauss(p, v, r, mu):
    """Name of the closed-form branch the Gauss sum falls into."""
    a = conductor(mu)
    if a == 0:
        if r <= 0:
            return "unramified-nonnegative (value 1)"
        if r == 1:
            return "unramified-shallow (value -1/(p-1))"
        return "unramified-deep (value 0)"
    if r != a:
        return "ramified-mismatch (value 0)"
    return "ramified-critical (modulus zeta(1) * p^(-r/2))"


def epsilon_gl1(mu):
    """eps(1/2, mu^{-1}, psi) for the unit restriction of mu.

    Trivial-on-units characters give 1; otherwise the value is the critical
    Gauss sum renormalized to unit modulus,

        eps(1/2, mu^{-1}, psi) = G(p^{-a(mu)}, mu) * p^{a(mu)/2} / zeta_p(1).
    """
    a = conductor(mu)
    if a == 0:
        return 1.0 + 0.0j
    p = mu.p
    g = gauss_sum(p, 1, a, mu).value
    return g * p ** (a / 2.0) / zeta_local(p, 1)


def epsilon_factor(nu):
    """Full Tate eps(1/2, nu, psi), including the varpi_value dependence.

    For ramified nu of conductor r this is nu(p)^r times the epsilon factor
    of the unit restriction; unramified nu give 1 because psi has conductor
    exponent 0.
    """
    r = conductor(nu)
    if r == 0:
        return 1.0 + 0.0j
    return nu.varpi_value**r * epsilon_gl1(char_inv(nu))
