"""Local GL2(Q_p) representation descriptors and their vanishing indices.

Three kinds of irreducible admissible pi with a(pi) >= 1 are modeled:

* SteinbergTwist(chi): chi * St;
* PrincipalSeries(chi1, chi2): the irreducible induced chi1 |+| chi2;
* Supercuspidal(a0, m0, chi): chi * pi0 with pi0 minimal supercuspidal of
  conductor exponent a0 and central character conductor m0 <= a0/2.  The
  descriptor deliberately carries no model of pi0 itself: every exposed
  quantity below depends only on (a0, m0) and twists of chi, which is what
  makes dichotomy-style results computable.

AbstractLocalData carries just the conductor-profile invariants that the
closed-form case table reads (enough for newform tables where only the
profile is published).

The central computation is e_pi(l), the order of vanishing attached to pi
at a cusp parameter 0 <= l <= a(pi).  Two independent routes are provided:
``vanishing_index_oracle`` searches characters of conductor exactly l
directly, and ``vanishing_index_table`` evaluates the closed-form case
table; their agreement over the full concrete space is part of the
verification suite.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import (
    AmbiguousBound,
    DomainError,
    InvalidDescriptor,
    InvalidPrime,
    LevelOutOfRange,
    Unsupported,
)
from .padic_chars import (
    PadicCharacter,
    char_from_json,
    char_inv,
    char_mul,
    char_to_json,
    conductor as char_conductor,
    enumerate_chars,
    _check_prime,
    strip_varpi,
    trivial_char,
)


@dataclass(frozen=True)
class SteinbergTwist:
    """chi * Steinberg."""

    chi: PadicCharacter

    @property
    def p(self):
        return self.chi.p

    @property
    def kind(self):
        return "steinberg"


@dataclass(frozen=True)
class PrincipalSeries:
    """Irreducible principal series chi1 |+| chi2."""

    chi1: PadicCharacter
    chi2: PadicCharacter

    def __post_init__(self):
        if self.chi1.p != self.chi2.p:
            raise InvalidDescriptor("principal series characters over different p")
        ratio = char_mul(self.chi1, char_inv(self.chi2))
        if char_conductor(ratio) == 0:
            w = ratio.varpi_value
            p = float(self.chi1.p)
            if min(abs(w - p), abs(w - 1.0 / p)) < 1e-12:
                raise InvalidDescriptor(
                    "chi1/chi2 = |.|^(+-1): induced representation is reducible"
                )

    @property
    def p(self):
        return self.chi1.p

    @property
    def kind(self):
        return "principal_series"


@dataclass(frozen=True)
class Supercuspidal:
    """chi * pi0, pi0 minimal supercuspidal with a(pi0)=a0, a(omega_pi0)=m0."""

    a0: int
    m0: int
    chi: PadicCharacter

    def __post_init__(self):
        if self.a0 < 2:
            raise InvalidDescriptor(f"supercuspidal conductor a0 >= 2, got {self.a0}")
        if not 0 <= self.m0 * 2 <= self.a0:
            raise InvalidDescriptor(
                f"central conductor m0 = {self.m0} violates m0 <= a0/2 = {self.a0 / 2}"
            )
        if self.p == 2 and self.m0 * 2 < self.a0 and self.a0 > 2 and self.a0 % 2 == 0:
            warnings.warn(
                "minimal supercuspidal over Q_2 with m0 < a0/2 needs odd "
                "conductor or a0 = 2; descriptor kept but may be vacuous",
                stacklevel=2,
            )

    @property
    def p(self):
        return self.chi.p

    @property
    def kind(self):
        return "supercuspidal"


@dataclass(frozen=True)
class AbstractLocalData:
    """Conductor-profile invariants, enough to drive the case table.

    kind "steinberg": a_chi; "principal_series": a1 >= a2 and the ratio
    conductor a12inv = a(chi1 * chi2^{-1}); "supercuspidal": n and the
    minimal twist conductor a_min.
    """

    kind: str
    a_chi: int | None = None
    a1: int | None = None
    a2: int | None = None
    a12inv: int | None = None
    n: int | None = None
    a_min: int | None = None

    def __post_init__(self):
        if self.kind == "steinberg":
            if self.a_chi is None or self.a_chi < 0:
                raise InvalidDescriptor("steinberg needs a_chi >= 0")
        elif self.kind == "principal_series":
            if self.a1 is None or self.a2 is None or self.a12inv is None:
                raise InvalidDescriptor("principal series needs a1, a2, a12inv")
            if self.a1 < self.a2:
                raise InvalidDescriptor("order the profile so a1 >= a2")
            if self.a1 != self.a2 and self.a12inv != self.a1:
                raise InvalidDescriptor(
                    "distinct conductors force a12inv = max(a1, a2)"
                )
            if self.a1 == self.a2 and self.a12inv > self.a1:
                raise InvalidDescriptor("a12inv cannot exceed a1 = a2")
        elif self.kind == "supercuspidal":
            if self.n is None or self.a_min is None:
                raise InvalidDescriptor("supercuspidal needs n and a_min")
            if not 2 <= self.a_min <= self.n:
                raise InvalidDescriptor("need 2 <= a_min <= n")
        else:
            raise InvalidDescriptor(f"unknown kind {self.kind!r}")


def classify(d):
    """Coarse type of pi: 'one', 'two', '3a', '3b', '3c', or 'unramified'."""
    if isinstance(d, SteinbergTwist):
        return "one" if char_conductor(d.chi) == 0 else "3a"
    if isinstance(d, PrincipalSeries):
        a1, a2 = char_conductor(d.chi1), char_conductor(d.chi2)
        if a1 == 0 and a2 == 0:
            return "unramified"
        if a1 > 0 and a2 > 0:
            return "3b"
        return "two"
    if isinstance(d, Supercuspidal):
        return "3c"
    raise Unsupported(f"not a concrete descriptor: {d!r}")


def conductor(d):
    """Conductor exponent n = a(pi)."""
    if isinstance(d, SteinbergTwist):
        c = char_conductor(d.chi)
        return 1 if c == 0 else 2 * c
    if isinstance(d, PrincipalSeries):
        return char_conductor(d.chi1) + char_conductor(d.chi2)
    if isinstance(d, Supercuspidal):
        c = char_conductor(d.chi)
        return max(d.a0, d.m0 + c, 2 * c)
    if isinstance(d, AbstractLocalData):
        if d.kind == "steinberg":
            return 1 if d.a_chi == 0 else 2 * d.a_chi
        if d.kind == "principal_series":
            return d.a1 + d.a2
        return d.n
    raise Unsupported(f"not a descriptor: {d!r}")


def central_char_conductor(d):
    """a(omega_pi), or AmbiguousBound when the data cannot decide it."""
    if isinstance(d, SteinbergTwist):
        return char_conductor(char_mul(d.chi, d.chi))
    if isinstance(d, PrincipalSeries):
        return char_conductor(char_mul(d.chi1, d.chi2))
    if isinstance(d, Supercuspidal):
        a_chi2 = char_conductor(char_mul(d.chi, d.chi))
        if char_conductor(d.chi) == 0 or a_chi2 != d.m0:
            return max(d.m0, a_chi2)
        raise AmbiguousBound(
            "a(omega_pi0 * chi^2) is only bounded by m0 when a(chi^2) = m0",
            bound=d.m0,
        )
    raise Unsupported(f"central character undetermined for {d!r}")


def twist_conductor(d, mu):
    """Conductor exponent of mu * pi."""
    if isinstance(d, SteinbergTwist):
        return conductor(SteinbergTwist(char_mul(mu, d.chi)))
    if isinstance(d, PrincipalSeries):
        return char_conductor(char_mul(mu, d.chi1)) + char_conductor(
            char_mul(mu, d.chi2)
        )
    if isinstance(d, Supercuspidal):
        # pi0 is minimal with a(omega_pi0) <= a0/2, so the twist bound is an
        # equality for every twist and no AmbiguousBound can arise here.
        c = char_conductor(char_mul(mu, d.chi))
        return max(d.a0, d.m0 + c, 2 * c)
    raise Unsupported(f"not a concrete descriptor: {d!r}")


def is_minimal(d):
    """Whether a(pi) <= a(mu * pi) for every character twist mu."""
    t = classify(d)
    if t in ("one", "two", "unramified"):
        return True
    if t in ("3a", "3b"):
        return False
    return conductor(d) == d.a0


def contragredient(d):
    """Descriptor of the contragredient representation."""
    if isinstance(d, SteinbergTwist):
        return SteinbergTwist(char_inv(d.chi))
    if isinstance(d, PrincipalSeries):
        return PrincipalSeries(char_inv(d.chi1), char_inv(d.chi2))
    if isinstance(d, Supercuspidal):
        return Supercuspidal(d.a0, d.m0, char_inv(d.chi))
    raise Unsupported(f"not a concrete descriptor: {d!r}")


def normalize_unramified_twist(d):
    """Unramified twist of pi with omega(p) = 1 (unit-group data unchanged).

    Supercuspidal descriptors are returned as-is: omega_pi0(p) is not part
    of the data, and nothing downstream of a supercuspidal needs it.
    """
    if isinstance(d, SteinbergTwist):
        w = d.chi.varpi_value**2
        if abs(w - 1.0) < 1e-14:
            return d
        s = _inverse_sqrt_phase(w)
        return SteinbergTwist(_rescale_varpi(d.chi, s))
    if isinstance(d, PrincipalSeries):
        w = d.chi1.varpi_value * d.chi2.varpi_value
        if abs(w - 1.0) < 1e-14:
            return d
        s = _inverse_sqrt_phase(w)
        return PrincipalSeries(_rescale_varpi(d.chi1, s), _rescale_varpi(d.chi2, s))
    if isinstance(d, Supercuspidal):
        return d
    raise Unsupported(f"not a concrete descriptor: {d!r}")


def _inverse_sqrt_phase(w):
    import cmath

    if abs(abs(w) - 1.0) > 1e-9:
        raise DomainError(f"central character value at p not unitary: {w}")
    return cmath.exp(-0.5j * cmath.phase(w))


def _rescale_varpi(chi, s):
    return PadicCharacter(chi.p, chi.k, chi.exponents, chi.varpi_value * s)


def abstract_profile(d):
    """Forget a concrete descriptor down to its AbstractLocalData."""
    if isinstance(d, AbstractLocalData):
        return d
    if isinstance(d, SteinbergTwist):
        return AbstractLocalData("steinberg", a_chi=char_conductor(d.chi))
    if isinstance(d, PrincipalSeries):
        a1 = char_conductor(d.chi1)
        a2 = char_conductor(d.chi2)
        a12 = char_conductor(char_mul(d.chi1, char_inv(d.chi2)))
        if a1 < a2:
            a1, a2 = a2, a1
        return AbstractLocalData("principal_series", a1=a1, a2=a2, a12inv=a12)
    if isinstance(d, Supercuspidal):
        return AbstractLocalData("supercuspidal", n=conductor(d), a_min=d.a0)
    raise Unsupported(f"not a descriptor: {d!r}")


def d_pi(d, l):
    """Valuation offset d_pi(l) = max(n, l + a(omega), 2l).

    For supercuspidal data a(omega) <= n/2 makes the middle term redundant,
    so no central-character ambiguity can leak out.
    """
    n = conductor(d)
    _check_level(l, n)
    if isinstance(d, (Supercuspidal,)) or (
        isinstance(d, AbstractLocalData) and d.kind == "supercuspidal"
    ):
        return max(n, 2 * l)
    if isinstance(d, AbstractLocalData):
        raise Unsupported("d_pi needs a concrete descriptor outside the sc case")
    m = central_char_conductor(d)
    return max(n, l + m, 2 * l)


def toral_whittaker(d, r):
    """Whittaker value at diag(p^r, 1), normalized so W(1) = 1.

    Steinberg: (chi(p)/p)^r; one-ramified principal series:
    (chi_ram(p) p^(-1/2))^r; everything else is delta_{r,0}.  Negative r
    give 0.  Unramified principal series are not modeled here.
    """
    r = int(r)
    t = classify(d)
    if t == "unramified":
        raise Unsupported("toral values of unramified principal series")
    if r < 0:
        return 0.0 + 0.0j
    if r == 0:
        return 1.0 + 0.0j
    if t == "one":
        return (d.chi.varpi_value / d.p) ** r
    if t == "two":
        ram = d.chi1 if char_conductor(d.chi1) > 0 else d.chi2
        return (ram.varpi_value * float(d.p) ** -0.5) ** r
    return 0.0 + 0.0j


def _check_level(l, n):
    if not 0 <= l <= n:
        raise LevelOutOfRange(f"need 0 <= l <= n = {n}, got l = {l}")


def vanishing_index_oracle(d, l):
    """e_pi(l) by direct search over characters of conductor exactly l.

    Computes d_pi(l) - max over mu of (deg L(s, mu pi) + a(mu pi)) where mu
    runs over conductor-l characters; the L-degree term counts unramified
    constituents of mu pi.  Types with a one-dimensional or unramified
    piece vanish to order 0 at every l.
    """
    t = classify(d)
    n = conductor(d)
    _check_level(l, n)
    if t in ("one", "two", "unramified") or l <= 1:
        return 0
    dl = d_pi(d, l)
    best = -1
    for mu in enumerate_chars(d.p, l, exact=True):
        if isinstance(d, SteinbergTwist):
            a = char_conductor(char_mul(mu, d.chi))
            cand = 2 if a == 0 else 2 * a
        elif isinstance(d, PrincipalSeries):
            a1 = char_conductor(char_mul(mu, d.chi1))
            a2 = char_conductor(char_mul(mu, d.chi2))
            cand = a1 + a2 + (a1 == 0) + (a2 == 0)
        else:
            cand = twist_conductor(d, mu)
        if cand > best:
            best = cand
    return dl - best


def vanishing_index_table(a, p, l):
    """e_pi(l) from the closed-form case table on profile invariants."""
    _check_prime(p)
    if isinstance(a, (SteinbergTwist, PrincipalSeries, Supercuspidal)):
        a = abstract_profile(a)
    n = conductor(a)
    _check_level(l, n)
    if p > 3:
        return 0
    if p == 3:
        if (
            a.kind == "principal_series"
            and n == 2 * l
            and n >= 4
            and a.a1 == a.a2 == l
            and a.a12inv == l
        ):
            return 1
        return 0
    # p = 2 cases, in the order they are stated.
    if a.kind == "principal_series" and a.a2 >= 2 and a.a1 != a.a2 and l in (a.a1, a.a2):
        return 1
    if a.kind == "supercuspidal" and n == 2 * l and n >= 4 and a.a_min == n - 1:
        return 1
    if a.kind == "steinberg" and a.a_chi >= 2 and n == 2 * l:
        return 2
    if (
        a.kind == "principal_series"
        and n == 2 * l
        and n >= 4
        and a.a1 == a.a2 == l
        and a.a12inv < l - 1
    ):
        return 2
    if a.kind == "supercuspidal" and n == 2 * l and n >= 4 and a.a_min <= n - 2:
        return 2
    if (
        a.kind == "principal_series"
        and n == 2 * l
        and n >= 6
        and a.a1 == a.a2 == l
        and a.a12inv == l - 1
    ):
        return 3
    return 0


def descriptor_to_json(d):
    """JSON-friendly dict for a concrete or abstract descriptor."""
    if isinstance(d, SteinbergTwist):
        return {"kind": "steinberg", "chi": char_to_json(d.chi)}
    if isinstance(d, PrincipalSeries):
        return {
            "kind": "principal_series",
            "chi1": char_to_json(d.chi1),
            "chi2": char_to_json(d.chi2),
        }
    if isinstance(d, Supercuspidal):
        return {
            "kind": "supercuspidal",
            "a0": d.a0,
            "m0": d.m0,
            "chi": char_to_json(d.chi),
        }
    if isinstance(d, AbstractLocalData):
        out = {"abstract": True, "kind": d.kind}
        for f in ("a_chi", "a1", "a2", "a12inv", "n", "a_min"):
            v = getattr(d, f)
            if v is not None:
                out[f] = v
        return out
    raise Unsupported(f"not a descriptor: {d!r}")


def descriptor_from_json(obj):
    """Parse a descriptor dict; presence of character fields means concrete."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InvalidDescriptor(f"descriptor JSON needs a 'kind': {obj!r}")
    kind = obj["kind"]
    abstract = obj.get("abstract", False) or not (
        "chi" in obj or "chi1" in obj
    )
    if abstract:
        fields = {
            f: int(obj[f])
            for f in ("a_chi", "a1", "a2", "a12inv", "n", "a_min")
            if f in obj
        }
        return AbstractLocalData(kind, **fields)
    if kind == "steinberg":
        return SteinbergTwist(char_from_json(obj["chi"]))
    if kind == "principal_series":
        return PrincipalSeries(char_from_json(obj["chi1"]), char_from_json(obj["chi2"]))
    if kind == "supercuspidal":
        return Supercuspidal(int(obj["a0"]), int(obj["m0"]), char_from_json(obj["chi"]))
    raise InvalidDescriptor(f"unknown kind {kind!r}")
