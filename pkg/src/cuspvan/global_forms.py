"""Global layer: cusp vanishing orders of newforms from local data.

A newform of weight k, level N = prod p^{n_p} and nebentypus conductor M is
modeled by the multiset of its ramified local descriptors.  The order of
vanishing at a cusp of denominator L is controlled prime by prime:

    e_f(L) = prod_p p^{e_p},  e_p = e_{pi_p}(v_p(L)),

which is the quantity this module assembles.  For elliptic curves (k = 2,
M = 1, rational coefficients) the closed five-case table gives each e_p
directly and is cross-checked against the general route.  Per-cusp Fourier
coefficients are exposed through fourier_at_cusp, which multiplies local
Whittaker newform values; it needs principal-series locals since those are
the ones whittaker_eval can reconstruct.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from enum import Enum
from math import gcd, lcm

from .cusps import Cusp, ScalingMatrix, delta
from .errors import (
    AmbiguousBound,
    BadMatrix,
    DomainMismatch,
    InternalInconsistency,
    InvalidDescriptor,
    NotADivisor,
    NotElliptic,
    Unsupported,
)
from .local_reps import (
    AbstractLocalData,
    PrincipalSeries,
    SteinbergTwist,
    Supercuspidal,
    abstract_profile,
    central_char_conductor,
    conductor,
    d_pi,
    descriptor_from_json,
    descriptor_to_json,
    vanishing_index_table,
)
from .padic_chars import char_mul, conductor as char_conductor
from .whittaker_eval import whittaker_value


class Rationality(Enum):
    """What is assumed about the coefficient field (never computed here)."""

    RATIONAL_COEFFICIENTS = "rational"
    ASSUME_UNIFORM = "assume_uniform"
    UNKNOWN = "unknown"


def _vp(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _factor(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class NewformLocalData:
    """Weight, level, character conductor, and the local descriptors at p | N."""

    k: int
    N: int
    M: int
    locals: dict
    rationality: Rationality = Rationality.UNKNOWN

    def __post_init__(self):
        if self.k < 2:
            raise InvalidDescriptor("weight must be at least 2")
        if self.N < 1 or self.M < 1 or self.N % self.M != 0:
            raise InvalidDescriptor("need M | N with both positive")
        fac = _factor(self.N)
        if set(fac) != set(self.locals):
            raise InvalidDescriptor(
                f"locals cover {sorted(self.locals)} but N has primes {sorted(fac)}"
            )
        for p, n_p in fac.items():
            d = self.locals[p]
            if not isinstance(d, AbstractLocalData) and d.p != p:
                raise InvalidDescriptor(f"descriptor at {p} lives over p={d.p}")
            if conductor(d) != n_p:
                raise InvalidDescriptor(
                    f"descriptor at {p} has conductor {conductor(d)}, level wants {n_p}"
                )
            m_p = _vp(self.M, p)
            try:
                m_known = central_char_conductor(d)
            except AmbiguousBound as e:
                if m_p > e.bound:
                    raise InvalidDescriptor(
                        f"v_{p}(M) = {m_p} exceeds the central character bound {e.bound}"
                    )
                continue
            except Unsupported:
                continue
            if m_known != m_p:
                raise InvalidDescriptor(
                    f"central character at {p} has conductor {m_known}, M wants {m_p}"
                )

    @property
    def level_exponents(self):
        return _factor(self.N)


@dataclass(frozen=True)
class CuspVanishingReport:
    """e_f at one denominator: per-prime exponents and the uniformity flag."""

    N: int
    L: int
    exponents: dict
    e_f: int
    uniform: str  # "all", "unknown", or "counterexample-possible"


def e_f(data, L):
    """Vanishing order e_f(L) = prod_p p^{e_p} at cusps of denominator L."""
    if L < 1 or data.N % L != 0:
        raise NotADivisor(f"{L} does not divide {data.N}")
    exps = {}
    value = 1
    for p, n_p in sorted(data.level_exponents.items()):
        e_p = vanishing_index_table(data.locals[p], p, _vp(L, p))
        exps[p] = e_p
        value *= p**e_p
    uniform = "unknown"
    if data.rationality in (Rationality.RATIONAL_COEFFICIENTS, Rationality.ASSUME_UNIFORM):
        uniform = "all"
    else:
        g = gcd(L, data.N // L)
        if all(data.level_exponents[p] <= 1 for p in _factor(g)):
            # Q(zeta_g) can only meet Q(f) through primes with p^2 | N.
            uniform = "all"
    return CuspVanishingReport(data.N, L, exps, value, uniform)


# Realizable local profiles for elliptic curves (k=2, trivial character).
# Principal series are chi |+| chi^{-1}; Steinberg twists need chi quadratic;
# supercuspidal (n, a_min) pairs are pinned down by the conductor-of-square
# arithmetic over Q_p together with the Atkin-Li minimality criterion at p=2.


def _square_conductor(p, c):
    """a(chi^2) for a character of Q_p^x with a(chi) = c, when determined."""
    if c == 0:
        return 0
    if p == 2:
        return 0 if c <= 3 else c - 1
    # odd p: squaring preserves the p-part of the order, so the conductor
    # drops only for quadratic chi, which forces c = 1.
    return c if c > 1 else None  # None: both 0 (quadratic) and 1 occur


def elliptic_local_profiles(p, max_n):
    """AbstractLocalData profiles that can occur for an elliptic curve at p."""
    out = []
    st_a = {2: (0, 2, 3), 3: (0, 1)}.get(p, (0, 1))
    for a in st_a:
        n = max(1, 2 * a)
        if n <= max_n:
            out.append(AbstractLocalData("steinberg", a_chi=a))
    ps = []
    if p == 2:
        ps = [(2, 0), (3, 0), (4, 3)]
    elif p == 3:
        ps = [(1, 1), (2, 2)]
    else:
        ps = [(1, 0), (1, 1)]
    for c, s in ps:
        if 2 * c <= max_n:
            out.append(AbstractLocalData("principal_series", a1=c, a2=c, a12inv=s))
    if p == 2:
        sc = [(2, 2), (3, 3), (5, 5), (7, 7),
              (4, 2), (4, 3), (6, 2), (6, 3), (6, 5), (8, 6), (8, 7)]
    else:
        sc = [(n, n) for n in range(2, max_n + 1)]
    for n, a_min in sc:
        if n <= max_n:
            out.append(AbstractLocalData("supercuspidal", n=n, a_min=a_min))
    return out


_LEVEL_BOUND = {2: 8, 3: 5}


def _elliptic_bound(p):
    return _LEVEL_BOUND.get(p, 2)


def _check_elliptic_local(p, d):
    """Raise NotElliptic unless d can be a local component of an elliptic curve."""
    n = conductor(d)
    if n > _elliptic_bound(p):
        raise NotElliptic(f"v_{p}(N) = {n} exceeds the bound {_elliptic_bound(p)}")
    if isinstance(d, PrincipalSeries):
        omega = char_mul(d.chi1, d.chi2)
        if char_conductor(omega) != 0 or abs(omega.varpi_value - 1) > 1e-9:
            raise NotElliptic(f"principal series at {p} is not chi |+| chi^-1")
    elif isinstance(d, SteinbergTwist):
        sq = char_mul(d.chi, d.chi)
        if char_conductor(sq) != 0 or abs(sq.varpi_value - 1) > 1e-9:
            raise NotElliptic(f"Steinberg twist at {p} has nontrivial chi^2")
    elif isinstance(d, Supercuspidal):
        if d.m0 != char_conductor(char_mul(d.chi, d.chi)):
            raise NotElliptic(
                f"supercuspidal at {p}: a(chi^2) != m0 contradicts trivial nebentypus"
            )
    profile = abstract_profile(d)
    if profile not in elliptic_local_profiles(p, _elliptic_bound(p)):
        raise NotElliptic(f"profile {profile} at p={p} is not elliptic-realizable")


def _elliptic_e_p(profile, p, n, l):
    """The per-prime exponent of the five-case elliptic ramification list."""
    if p >= 5:
        return 0
    if p == 3:
        if n == 2 * l == 4 and profile.kind == "principal_series":
            return 1
        return 0
    if n <= 2 or n != 2 * l:
        return 0
    if profile.kind == "supercuspidal" and profile.a_min == n - 1:
        return 1
    if n == 8 and profile.kind == "principal_series":
        return 3
    return 2


def elliptic_ramification(data, L):
    """Ramification index of the modular parametrization at denominator L."""
    if data.k != 2 or data.M != 1:
        raise NotElliptic("elliptic data must have k = 2 and trivial character")
    if L < 1 or data.N % L != 0:
        raise NotADivisor(f"{L} does not divide {data.N}")
    for p, d in data.locals.items():
        _check_elliptic_local(p, d)
    value = 1
    for p, n_p in sorted(data.level_exponents.items()):
        l_p = _vp(L, p)
        profile = abstract_profile(data.locals[p])
        e_p = _elliptic_e_p(profile, p, n_p, l_p)
        e_general = vanishing_index_table(profile, p, l_p)
        if e_p != e_general:
            raise InternalInconsistency(
                f"case list gives e_{p} = {e_p} but the general table gives "
                f"{e_general} for {profile} at l = {l_p}"
            )
        value *= p**e_p
    return value


def fourier_at_cusp(data, r, c, sigma, a_r0):
    """Normalized Fourier coefficient a_f(r; a/L) / r^{k/2} at the cusp c.

    a_r0 is the coefficient a_f(r0) at the prime-to-N part r0 of r, supplied
    by the caller; the product of local Whittaker values contributes the
    ramified part.
    """
    if not isinstance(c, Cusp) or c.N != data.N:
        raise DomainMismatch("cusp and form live on different levels")
    if not isinstance(sigma, ScalingMatrix) or (sigma.a, sigma.L) not in (
        (c.a, c.L),
        (-c.a, -c.L),
    ):
        raise BadMatrix(f"{sigma!r} does not scale the cusp {c}")
    if r < 1:
        raise DomainMismatch("r must be a positive integer")
    k, N, M, L = data.k, data.N, data.M, c.L
    dl = delta(N, M, L)
    lam = lcm(L, M, N // L)
    r0 = r
    local_product = 1 + 0j
    for p, n_p in sorted(data.level_exponents.items()):
        d = data.locals[p]
        if not isinstance(d, PrincipalSeries):
            raise Unsupported(f"local component at {p} is not a principal series")
        r_p = _vp(r, p)
        r0 //= p**r_p
        l_p = _vp(L, p)
        d_p = d_pi(d, l_p)
        if _vp(lam, p) != d_p - l_p:
            raise InternalInconsistency(
                f"v_{p}(lcm(L,M,N/L)) = {_vp(lam, p)} != d_pi - l = {d_p - l_p}"
            )
        if l_p == 0:
            u_p = 1
        else:
            mod = p**l_p
            unit = (lam // p ** (d_p - l_p)) % mod
            u_p = (-c.a * pow(r // p**r_p, -1, mod) * unit) % mod
        t = r_p - d_p
        w = whittaker_value(d, t, l_p, u_p, t_max=max(t, d_p + 8))
        local_product *= w
        if local_product == 0:
            break
    phase = cmath.exp(2j * cmath.pi * ((r * sigma.d) % (dl * L)) / (dl * L))
    return (a_r0 / r0 ** (k / 2)) * phase * local_product / dl ** (k / 2)


@dataclass
class BrunaultReport:
    """Outcome of sweeping the elliptic-admissible space of local data."""

    cases: int = 0
    max_e: int = 1
    e_values: set = field(default_factory=set)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def brunault_checks(max_n2=8, max_n3=5):
    """Check the four divisibility observations over the elliptic space.

    Sweeps all (profile, l) choices at p = 2 and p = 3 within the level
    bounds (a p >= 5 factor never contributes), forms e = 2^{e_2} 3^{e_3},
    and records any violation with its witness.
    """
    report = BrunaultReport()

    def _local_cases(p, max_n):
        cases = [(None, 0, 0, 0)]  # p absent from N
        for profile in elliptic_local_profiles(p, max_n):
            n = conductor(profile)
            for l in range(0, n + 1):
                cases.append((profile, n, l, vanishing_index_table(profile, p, l)))
        return cases

    for prof2, n2, l2, e2 in _local_cases(2, max_n2):
        for prof3, n3, l3, e3 in _local_cases(3, max_n3):
            report.cases += 1
            e = 2**e2 * 3**e3
            report.e_values.add(e)
            report.max_e = max(report.max_e, e)
            witness = (prof2, l2, prof3, l3)
            if 24 % e != 0:
                report.failures.append(("divides-24", e, witness))
            if e % 2 == 0 and not (l2 in (2, 3, 4) and n2 == 2 * l2):
                report.failures.append(("even-forces-v2", e, witness))
            if e % 8 == 0 and not (l2 == 4 and n2 == 8):
                report.failures.append(("eight-forces-v2", e, witness))
            if e % 3 == 0 and not (l3 == 2 and n3 == 4):
                report.failures.append(("three-forces-v3", e, witness))
    return report


def newform_to_json(data):
    return {
        "k": data.k,
        "N": data.N,
        "M": data.M,
        "rationality": data.rationality.value,
        "locals": {str(p): descriptor_to_json(d) for p, d in data.locals.items()},
    }


def newform_from_json(obj):
    try:
        locals_ = {int(p): descriptor_from_json(d) for p, d in obj["locals"].items()}
        return NewformLocalData(
            k=int(obj["k"]),
            N=int(obj["N"]),
            M=int(obj.get("M", 1)),
            locals=locals_,
            rationality=Rationality(obj.get("rationality", "unknown")),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidDescriptor(f"bad newform record: {e}")
