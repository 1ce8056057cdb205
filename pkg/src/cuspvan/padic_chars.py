"""Characters of Q_p^x through their restriction to units.

A character chi is stored as a vector of exponents against a fixed
generating set of (Z/p^k)^x together with its value at the uniformizer p.
Values on units are roots of unity and every structural question
(triviality, conductor, products, twists) is settled in exact integer
arithmetic on rotation numbers; floating point appears only when a complex
value is requested.

Generator conventions, fixed once and for all so exponent vectors are
portable across levels:

* odd p, k >= 1: the single generator is the smallest primitive root mod
  p^2, reduced mod p^k (a primitive root at every level k >= 1);
* p = 2: level k <= 1 has the trivial group (no generators), k = 2 uses
  (-1 mod 4) of order 2, and k >= 3 uses (-1 mod 2^k, 5 mod 2^k) of orders
  (2, 2^(k-2)).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _iproduct
from math import gcd

from .errors import (
    DomainError,
    DomainMismatch,
    InvalidPrime,
    UnsupportedLevel,
)

_TWO_PI = 2.0 * cmath.pi


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _check_prime(p):
    if not isinstance(p, int) or not _is_prime(p):
        raise InvalidPrime(f"p = {p!r} is not a prime")


def _phi_pk(p, k):
    """Euler phi of p^k."""
    return 1 if k == 0 else p ** (k - 1) * (p - 1)


def _vp(n, p):
    """p-adic valuation of a nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def _primitive_root_mod_p2(p):
    """Smallest primitive root modulo p^2 (p an odd prime)."""
    m = p * p
    order = p * (p - 1)
    qs = _prime_factors(order)
    g = 2
    while True:
        if gcd(g, p) == 1 and all(pow(g, order // q, m) != 1 for q in qs):
            return g
        g += 1


@dataclass(frozen=True)
class UnitGroupStructure:
    """Fixed generators and their orders for (Z/p^k)^x."""

    p: int
    k: int
    generators: tuple
    orders: tuple


@lru_cache(maxsize=None)
def unit_group_structure(p, k):
    """Generators/orders of (Z/p^k)^x under the package-wide conventions."""
    _check_prime(p)
    if k < 0:
        raise DomainError(f"level k must be >= 0, got {k}")
    if k == 0:
        return UnitGroupStructure(p, 0, (), ())
    if p != 2:
        g = _primitive_root_mod_p2(p) % p**k
        return UnitGroupStructure(p, k, (g,), (_phi_pk(p, k),))
    if k == 1:
        return UnitGroupStructure(2, 1, (), ())
    if k == 2:
        return UnitGroupStructure(2, 2, (3,), (2,))
    return UnitGroupStructure(2, k, (2**k - 1, 5), (2, 2 ** (k - 2)))


@lru_cache(maxsize=None)
def _dlog_table(p, k):
    """Map unit residue mod p^k -> exponent tuple against the fixed generators."""
    st = unit_group_structure(p, k)
    m = p**k
    table = {}
    for exps in _iproduct(*(range(o) for o in st.orders)):
        u = 1
        for g, e in zip(st.generators, exps):
            u = u * pow(g, e, m) % m
        table[u] = exps
    if len(table) != _phi_pk(p, k):
        raise InvalidPrime(f"generators do not generate (Z/{p}^{k})^x")
    return table


@dataclass(frozen=True)
class PadicCharacter:
    """A character of Q_p^x: unit-group exponents plus the value at p.

    ``exponents[j]`` is taken against the j-th fixed generator of
    (Z/p^k)^x and is stored reduced mod that generator's order.
    ``varpi_value`` is chi(p); the unit-group data never depends on it.
    """

    p: int
    k: int
    exponents: tuple
    varpi_value: complex = 1.0 + 0.0j

    def __post_init__(self):
        st = unit_group_structure(self.p, self.k)
        if len(self.exponents) != len(st.orders):
            raise DomainError(
                f"expected {len(st.orders)} exponents at (p, k) = "
                f"({self.p}, {self.k}), got {len(self.exponents)}"
            )
        exps = tuple(int(e) % o for e, o in zip(self.exponents, st.orders))
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "varpi_value", complex(self.varpi_value))

    def __mul__(self, other):
        return char_mul(self, other)

    def inverse(self):
        return char_inv(self)

    def __call__(self, x):
        return evaluate(self, x)


def trivial_char(p, k=0, varpi_value=1.0):
    """The character that is trivial on units, with a chosen value at p."""
    st = unit_group_structure(p, k)
    return PadicCharacter(p, k, (0,) * len(st.orders), varpi_value)


def conductor(chi):
    """Exponent a(chi): least c >= 0 with chi trivial on 1 + p^c Z_p.

    Closed form in the exponent valuations; the definitional enumeration
    over 1 + p^c Z_p is kept as an independent check in the test suite.
    """
    p, k, e = chi.p, chi.k, chi.exponents
    if k == 0 or all(x == 0 for x in e):
        return 0
    if p != 2:
        return k - _vp(e[0], p)
    if k == 2:
        return 2
    e1, e2 = e
    if e2 == 0:
        return 2 if e1 else 0
    return k - _vp(e2, 2)


def is_trivial_on_units(chi):
    return all(x == 0 for x in chi.exponents)


def unit_rotation(chi, u):
    """Exact t in [0, 1) with chi(u) = exp(2*pi*i*t), u a unit (mod p^k)."""
    p, k = chi.p, chi.k
    if k == 0:
        return Fraction(0)
    m = p**k
    u = u % m
    if gcd(u, p) != 1:
        raise DomainError(f"{u} is not a unit mod {p}^{k}")
    st = unit_group_structure(p, k)
    exps_u = _dlog_table(p, k)[u]
    t = Fraction(0)
    for e, mu, o in zip(chi.exponents, exps_u, st.orders):
        t += Fraction(e * mu, o)
    return t % 1


def evaluate(chi, x):
    """Value chi(x) for nonzero x in Z or Q with denominator prime to junk.

    Splits x = p^v * u and returns varpi_value^v times the root of unity
    chi takes on the unit part u.
    """
    p, k = chi.p, chi.k
    x = Fraction(x)
    if x == 0:
        raise DomainError("chi(0) is undefined")
    num, den = x.numerator, x.denominator
    v = _vp(num, p) - _vp(den, p)
    num //= p ** max(_vp(num, p), 0)
    den //= p ** max(_vp(den, p), 0)
    unit_value = 1.0 + 0.0j
    if k > 0:
        m = p**k
        u = num * pow(den, -1, m) % m
        t = unit_rotation(chi, u)
        if t:
            unit_value = cmath.exp(1j * _TWO_PI * float(t))
    return chi.varpi_value**v * unit_value


def lift(chi, K):
    """The same character viewed at level K >= chi.k."""
    p, k = chi.p, chi.k
    if K < k:
        raise DomainError(f"cannot lift level {k} down to {K}")
    if K == k:
        return chi
    st_K = unit_group_structure(p, K)
    if k == 0 or (p == 2 and k == 1):
        exps = (0,) * len(st_K.orders)
    elif p != 2:
        exps = (chi.exponents[0] * p ** (K - k),)
    elif k == 2:
        exps = (chi.exponents[0], 0) if K >= 3 else chi.exponents
    else:
        exps = (chi.exponents[0], chi.exponents[1] * 2 ** (K - k))
    return PadicCharacter(p, K, exps, chi.varpi_value)


def reduce_to_conductor(chi):
    """Canonical copy of chi at level max(a(chi), 0)."""
    c = conductor(chi)
    if c == chi.k:
        return chi
    st = unit_group_structure(chi.p, c)
    exps = []
    for g, o in zip(st.generators, st.orders):
        # chi(g) is well defined on any integer lift of g since a(chi) <= c.
        t = unit_rotation(chi, g) * o
        if t.denominator != 1:
            raise DomainError("character does not factor through level c")
        exps.append(int(t) % o)
    return PadicCharacter(chi.p, c, tuple(exps), chi.varpi_value)


def char_mul(a, b):
    """Pointwise product of two characters of Q_p^x."""
    if a.p != b.p:
        raise DomainMismatch(f"characters live over p={a.p} and p={b.p}")
    K = max(a.k, b.k)
    a, b = lift(a, K), lift(b, K)
    exps = tuple(x + y for x, y in zip(a.exponents, b.exponents))
    return PadicCharacter(a.p, K, exps, a.varpi_value * b.varpi_value)


def char_inv(a):
    """Pointwise inverse of a character."""
    w = a.varpi_value
    return PadicCharacter(a.p, a.k, tuple(-x for x in a.exponents), 1.0 / w)


def strip_varpi(chi):
    """Copy of chi with varpi_value reset to 1 (an element of the set X)."""
    if chi.varpi_value == 1.0 + 0.0j:
        return chi
    return PadicCharacter(chi.p, chi.k, chi.exponents, 1.0)


def enumerate_chars(p, k, exact=False):
    """All characters of (Z/p^k)^x (varpi fixed to 1), lexicographic order.

    With exact=True keeps only those of conductor exactly k.
    """
    _check_prime(p)
    if k < 0:
        raise DomainError(f"level k must be >= 0, got {k}")
    st = unit_group_structure(p, k)
    chars = [
        PadicCharacter(p, k, exps)
        for exps in _iproduct(*(range(o) for o in st.orders))
    ]
    if exact:
        chars = [c for c in chars if conductor(c) == k]
    return chars


def best_joint_twist(chi1, chi2, k):
    """Max of a(mu*chi1) (+ a(mu*chi2)) over mu of conductor exactly k.

    chi2 may be None for the single-character version.  Returns
    (best value, first mu attaining it in enumeration order).
    """
    if k < 2:
        raise UnsupportedLevel(f"joint twists need level k >= 2, got {k}")
    p = chi1.p
    if chi2 is not None and chi2.p != p:
        raise DomainMismatch(f"characters live over p={p} and p={chi2.p}")
    if conductor(chi1) != k or (chi2 is not None and conductor(chi2) != k):
        raise DomainError("best_joint_twist expects characters of conductor k")
    best, best_mu = -1, None
    for mu in enumerate_chars(p, k, exact=True):
        s = conductor(char_mul(mu, chi1))
        if chi2 is not None:
            s += conductor(char_mul(mu, chi2))
        if s > best:
            best, best_mu = s, mu
    return best, best_mu


def char_to_json(chi):
    """JSON-friendly dict for a character."""
    d = {"p": chi.p, "k": chi.k, "exponents": list(chi.exponents)}
    w = chi.varpi_value
    if w != 1.0 + 0.0j:
        d["varpi_value"] = {"re": w.real, "im": w.imag}
    return d


def char_from_json(d):
    """Inverse of char_to_json; varpi_value defaults to 1."""
    try:
        p, k = int(d["p"]), int(d["k"])
        exps = tuple(int(e) for e in d["exponents"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed character JSON: {exc}") from exc
    w = d.get("varpi_value", 1.0)
    if isinstance(w, dict):
        w = complex(float(w.get("re", 0.0)), float(w.get("im", 0.0)))
    try:
        w = complex(w)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"malformed character JSON: {exc}") from exc
    return PadicCharacter(p, k, exps, w)
