"""Whittaker newform values W_pi(g_{t,l,v}) for ramified principal series.

The values are reconstructed through the finite Fourier expansion
W_pi(g_{t,l,v}) = sum over mu in X_l of c_{t,l}(mu) mu(v), where the
coefficient column of each mu is solved from the local functional equation

    eps(1/2, mu pi) * sum_t q^((t+a)(1/2-s)) c_{t,l}(mu) / L(s, mu pi)
      = omega(-1) * sum_{r>=0} q^(-r(1/2-s)) W_pi(a(p^r))
          * G(p^(r-l), mu^{-1}) / L(1-s, mu^{-1} omega^{-1} pi),

an identity of Laurent polynomials in X = q^(-s).  The right side is finite
up to a geometrically damped toral tail; dividing by the epsilon factor and
multiplying back by L(s, mu pi) as a power series yields every c_{t,l}(mu)
in a chosen window.  Everything here assumes omega_pi(p) = 1, arranged by an
unramified twist that leaves all vanishing data unchanged.

Steinberg twists and supercuspidals are out of scope; their vanishing
indices come from the character-search oracle in local_reps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    InternalInconsistency,
    LevelOutOfRange,
    Unsupported,
    WindowError,
)
from .gauss_eps import epsilon_factor, gauss_sum, zeta_local
from .local_reps import (
    PrincipalSeries,
    classify,
    conductor,
    d_pi,
    normalize_unramified_twist,
    toral_whittaker,
)
from .padic_chars import (
    PadicCharacter,
    _dlog_table,
    _phi_pk,
    char_inv,
    char_mul,
    conductor as char_conductor,
    enumerate_chars,
    evaluate,
    lift,
    reduce_to_conductor,
    strip_varpi,
    unit_group_structure,
)
from .tolerances import zero_tol

# Terms of the type-2 toral tail kept past the Gauss support; the induced
# error in any windowed coefficient is below q^(-_GEOM_TAIL/2).
_GEOM_TAIL = 120


class LaurentPoly:
    """Finitely supported map exponent -> coefficient in X = q^(-s)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {t: complex(c) for t, c in (coeffs or {}).items() if c != 0}

    def __getitem__(self, t):
        return self.coeffs.get(t, 0j)

    def __mul__(self, other):
        out = {}
        for t1, c1 in self.coeffs.items():
            for t2, c2 in other.coeffs.items():
                t = t1 + t2
                out[t] = out.get(t, 0j) + c1 * c2
        return LaurentPoly(out)

    def scaled(self, c):
        return LaurentPoly({t: c * v for t, v in self.coeffs.items()})

    def times_geometric(self, w, top):
        """Product with sum_{j>=0} w^j X^j, truncated to exponents <= top."""
        if not self.coeffs:
            return LaurentPoly()
        lo = min(self.coeffs)
        out = {}
        acc = 0j
        for t in range(lo, top + 1):
            acc = acc * w + self.coeffs.get(t, 0j)
            out[t] = acc
        return LaurentPoly(out)

    def support(self):
        return sorted(self.coeffs)

    def __repr__(self):
        terms = ", ".join(f"{t}: {c:.6g}" for t, c in sorted(self.coeffs.items()))
        return f"LaurentPoly({{{terms}}})"


@lru_cache(maxsize=None)
def _unit_layout(p, l):
    """Units mod p^l in increasing order plus their generator exponents."""
    table = _dlog_table(p, l)
    units = tuple(sorted(table))
    orders = tuple(unit_group_structure(p, l).orders)
    return units, tuple(table[v] for v in units), orders


def _flat(exponents, orders):
    """Flat index of an exponent tuple in the product-major enumeration."""
    if not orders:
        return 0
    return int(np.ravel_multi_index(tuple(exponents), orders))


@lru_cache(maxsize=None)
def _char_grids(p, k):
    """Per-character arrays over all of X_k, indexed like enumerate_chars.

    A[i] is the conductor, GC[i] the average Gauss sum G(p^{-a(i)}, mu_i)
    at the critical depth, EPS[i] the Tate epsilon factor of the varpi = 1
    lift, and INV[i] the index of mu_i^{-1}.  The Gauss sums come from one
    FFT over the unit-group exponent lattice per conductor level.
    """
    chars = enumerate_chars(p, k)
    orders = tuple(unit_group_structure(p, k).orders)
    size = len(chars)
    A = np.array([char_conductor(c) for c in chars], dtype=np.int64)
    crit = {}
    for a in range(1, k + 1):
        units, dlogs, o_a = _unit_layout(p, a)
        if not o_a:
            continue
        gv = np.zeros(o_a, dtype=complex)
        m = p**a
        for v, dd in zip(units, dlogs):
            gv[dd] = np.exp(-2j * np.pi * v / m)
        crit[a] = (np.fft.ifftn(gv) * gv.size).ravel() / _phi_pk(p, a)
    GC = np.ones(size, dtype=complex)
    for i, c in enumerate(chars):
        a = int(A[i])
        if a:
            red = reduce_to_conductor(c)
            o_a = tuple(unit_group_structure(p, a).orders)
            GC[i] = crit[a][_flat(red.exponents, o_a)]
    if orders:
        digits = np.array(np.unravel_index(np.arange(size), orders))
        o_col = np.array(orders, dtype=np.int64)[:, None]
        INV = np.ravel_multi_index(tuple((-digits) % o_col), orders)
    else:
        INV = np.zeros(1, dtype=np.int64)
    EPS = np.ones(size, dtype=complex)
    nz = A > 0
    EPS[nz] = GC[INV[nz]] * float(p) ** (A[nz] / 2.0) / zeta_local(p, 1)
    return orders, A, GC, EPS, INV


@lru_cache(maxsize=None)
def _lift_flat(p, l, lam):
    """Flat index of each character of X_l inside X_lam, or None.

    Only valid when both levels share the same generator tuple shape;
    callers fall back to the scalar path otherwise.
    """
    o_l = tuple(unit_group_structure(p, l).orders)
    o_lam = tuple(unit_group_structure(p, lam).orders)
    if len(o_l) != len(o_lam) or not o_l:
        return None
    size = 1
    for n in o_l:
        size *= n
    digits = np.array(np.unravel_index(np.arange(size), o_l))
    ratios = np.array([b // a for a, b in zip(o_l, o_lam)], dtype=np.int64)
    return np.ravel_multi_index(tuple(digits * ratios[:, None]), o_lam)


@lru_cache(maxsize=None)
def _gauss_unit(p, r, k, exponents):
    """Cached G(p^(-r), mu) for mu given by reduced unit data."""
    mu = PadicCharacter(p, k, exponents)
    return gauss_sum(p, 1, r, mu).value


def _gauss_of(p, r, mu):
    mu = reduce_to_conductor(strip_varpi(mu))
    return _gauss_unit(p, r, mu.k, mu.exponents)


@lru_cache(maxsize=None)
def _eps_cached(nu):
    return epsilon_factor(nu)


def _ramified_ps(d):
    """Normalize and classify, rejecting anything this module cannot do."""
    if not isinstance(d, PrincipalSeries):
        raise Unsupported("Whittaker reconstruction covers principal series only")
    t = classify(d)
    if t == "unramified":
        raise Unsupported("unramified principal series have no newform data here")
    return normalize_unramified_twist(d), t


def rhs_series(d, mu, l):
    """Right side of the functional equation as a Laurent polynomial.

    Combines toral Whittaker values, the Gauss factor G(p^(r-l), mu^{-1})
    and the inverse dual L-factor.  Finite except for the type-2 trivial-mu
    toral tail, which is truncated far below every tolerance.
    """
    d, t = _ramified_ps(d)
    p = d.p
    mu = strip_varpi(mu)
    a_mu = char_conductor(mu)
    if a_mu > 0:
        supports = [l - a_mu] if l - a_mu >= 0 else []
    elif t == "two":
        supports = ([l - 1] if l >= 1 else []) + list(range(l, l + _GEOM_TAIL))
    else:
        # type 3.b toral values are supported at r = 0 only
        supports = [r for r in ([l - 1] if l >= 1 else []) + [l] if r == 0]
    terms = {}
    for r in supports:
        tor = toral_whittaker(d, r)
        if tor == 0:
            continue
        g = _gauss_of(p, l - r, char_inv(mu))
        if g == 0:
            continue
        terms[-r] = terms.get(-r, 0j) + p ** (-r / 2.0) * tor * g
    poly = LaurentPoly(terms)
    omega_minus1 = evaluate(d.chi1, -1) * evaluate(d.chi2, -1)
    for chi in (d.chi1, d.chi2):
        nu = char_inv(char_mul(mu, chi))
        if char_conductor(nu) == 0:
            poly = poly * LaurentPoly({0: 1.0, -1: -nu.varpi_value / p})
    return poly.scaled(omega_minus1)


@dataclass(frozen=True)
class WhittakerTable:
    """Coefficients c_{t,l}(mu) for one descriptor and level.

    ``mus`` is enumerate_chars(p, l); ``columns[i]`` maps t to c_{t,l}(mu_i)
    (absent keys are zero).  The window covers t in [-d_l, t_max].
    """

    descriptor: PrincipalSeries
    l: int
    t_min: int
    t_max: int
    d_l: int
    mus: tuple
    columns: tuple
    fast: bool = False

    @property
    def p(self):
        return self.descriptor.p

    def _check_window(self, t):
        """Values below -d_pi(l) are exactly zero; above t_max is an error."""
        if t > self.t_max:
            raise WindowError(f"t = {t} above window [{self.t_min}, {self.t_max}]")
        return t >= self.t_min

    def coeff(self, i, t):
        if not self._check_window(t):
            return 0j
        return self.columns[i].get(t, 0j)

    def value(self, t, v):
        """W_pi(g_{t,l,v}) = sum_mu c_{t,l}(mu) mu(v)."""
        if not self._check_window(t):
            return 0j
        total = 0j
        for mu, col in zip(self.mus, self.columns):
            c = col.get(t)
            if c:
                total += c * evaluate(mu, v)
        return total

    def column_norm_sq(self, t):
        """sum_mu |c_{t,l}(mu)|^2, the mean of |W(g_{t,l,v})|^2 over v."""
        if not self._check_window(t):
            return 0.0
        return sum(abs(col.get(t, 0j)) ** 2 for col in self.columns)

    def column_values(self, t):
        """W_pi(g_{t,l,v}) for every unit v mod p^l at once.

        The sum over mu is a discrete Fourier transform on the exponent
        lattice of the unit group, so one ifftn covers the whole column.
        Returns (units, values) with units sorted increasingly.
        """
        units, dlogs, orders = _unit_layout(self.p, self.l)
        if not self._check_window(t):
            return units, np.zeros(len(units), dtype=complex)
        if not orders:
            c = self.columns[0].get(t, 0j) if self.columns else 0j
            return units, np.full(len(units), c, dtype=complex)
        grid = np.zeros(orders, dtype=complex)
        for mu, col in zip(self.mus, self.columns):
            c = col.get(t)
            if c:
                grid[mu.exponents] = c
        big = np.fft.ifftn(grid) * grid.size
        return units, np.array([big[d] for d in dlogs])

    def self_check(self, sample=24):
        """Max residual of the functional equation over the mu columns.

        Rebuilds the left side from the stored coefficients (multiplying by
        the finite polynomial L(s, mu pi)^{-1}) and compares with
        rhs_series coefficient by coefficient inside the trusted window.
        Array-built tables re-derive the generic stratum in one vector pass
        and still put every scalar-path column, plus a deterministic stride
        of about `sample` others, through the full polynomial rebuild.
        """
        d = normalize_unramified_twist(self.descriptor)
        worst = 0.0
        idx = range(len(self.mus))
        if self.fast:
            ft = _fast_terms(d, classify(d), self.l, self.t_max, self.d_l, zero_tol())
            if ft is not None:
                fmask, keep, t_arr, c_arr = ft
                for i in np.nonzero(fmask)[0]:
                    col = self.columns[i]
                    ti = int(t_arr[i])
                    if keep[i]:
                        worst = max(worst, abs(col.get(ti, 0j) - c_arr[i]))
                        stray = [abs(v) for t, v in col.items() if t != ti]
                    else:
                        stray = [abs(v) for v in col.values()]
                    if stray:
                        worst = max(worst, max(stray))
                stride = max(1, len(self.mus) // max(sample, 1))
                idx = sorted(
                    set(range(0, len(self.mus), stride))
                    | set(np.nonzero(~fmask)[0].tolist())
                )
        p = float(self.p)
        for i in idx:
            mu, col = self.mus[i], self.columns[i]
            chi1p = char_mul(mu, d.chi1)
            chi2p = char_mul(mu, d.chi2)
            a = char_conductor(chi1p) + char_conductor(chi2p)
            eps = _eps_cached(chi1p) * _eps_cached(chi2p)
            lhs = LaurentPoly(
                {t + a: p ** ((t + a) / 2.0) * c for t, c in col.items()}
            )
            for chi in (chi1p, chi2p):
                if char_conductor(chi) == 0:
                    lhs = lhs * LaurentPoly({0: 1.0, 1: -chi.varpi_value})
            lhs = lhs.scaled(eps)
            rhs = rhs_series(d, mu, l=self.l)
            top = self.t_max + a - 2
            for t in range(min([*lhs.coeffs, *rhs.coeffs, 0]), top + 1):
                worst = max(worst, abs(lhs[t] - rhs[t]))
        return worst

    def orthogonality_residual(self, t):
        """|mean_v |W(g_{t,l,v})|^2 - sum_mu |c|^2| at one t."""
        _, vals = self.column_values(t)
        mean = float(np.mean(np.abs(vals) ** 2))
        return abs(mean - self.column_norm_sq(t))


def _scalar_column(d, mu, l, t_max, dl, tol):
    """One mu column by direct functional-equation inversion."""
    rhs = rhs_series(d, mu, l)
    if not rhs.coeffs:
        return {}
    p = d.p
    chi1p = char_mul(mu, d.chi1)
    chi2p = char_mul(mu, d.chi2)
    a = char_conductor(chi1p) + char_conductor(chi2p)
    eps = _eps_cached(chi1p) * _eps_cached(chi2p)
    top = t_max + a
    P = rhs
    for chi in (chi1p, chi2p):
        if char_conductor(chi) == 0:
            P = P.times_geometric(chi.varpi_value, top)
    col = {}
    floor = -dl + a  # X-exponent matching t = -d_pi(l)
    for u, cval in P.coeffs.items():
        if u > top:
            continue
        c = cval / eps * p ** (-u / 2.0)
        if u < floor:
            if abs(c) > tol:
                raise InternalInconsistency(
                    f"coefficient at t = {u - a} below -d_pi(l) = {-dl}: {c}"
                )
            continue
        if abs(c) > 1e-16:
            col[u - a] = c
    return col


def _fast_terms(d, t_kind, l, t_max, dl, tol):
    """Vectorized single-term columns over the generic mu stratum.

    Where a(mu) > 0 and both mu chi_i stay ramified, the right side of the
    functional equation collapses to one critical Gauss term, so the whole
    level reduces to array lookups in the cached character grids.  Returns
    (fast_mask, keep_mask, t, c) or None when the exponent lattices of the
    two levels do not line up (tiny levels go scalar anyway).
    """
    if t_kind not in ("two", "3b"):
        return None
    p = d.p
    k1 = char_conductor(d.chi1)
    k2 = char_conductor(d.chi2)
    lam = max(l, k1, k2)
    lf = _lift_flat(p, l, lam)
    if lf is None or len(lf) < 8:
        return None
    o_lam, A_lam, _, EPS_lam, _ = _char_grids(p, lam)
    _, A_l, GC_l, _, INV_l = _char_grids(p, l)
    o_col = np.array(o_lam, dtype=np.int64)[:, None]
    dig = np.array(np.unravel_index(lf, o_lam))
    e1 = np.array(lift(d.chi1, lam).exponents, dtype=np.int64)[:, None]
    e2 = np.array(lift(d.chi2, lam).exponents, dtype=np.int64)[:, None]
    i1 = np.ravel_multi_index(tuple((dig + e1) % o_col), o_lam)
    i2 = np.ravel_multi_index(tuple((dig + e2) % o_col), o_lam)
    a1 = A_lam[i1]
    a2 = A_lam[i2]
    fast = (A_l > 0) & (a1 > 0) & (a2 > 0)
    sup = fast & (A_l == l) if t_kind == "3b" else fast
    pf = float(p)
    r0 = l - A_l
    tor = np.zeros(len(lf), dtype=complex)
    if t_kind == "two":
        ram = d.chi1 if k1 > 0 else d.chi2
        tor[sup] = np.power(complex(ram.varpi_value) / pf**0.5, r0[sup])
    else:
        tor[sup] = 1.0
    cval = pf ** (-r0 / 2.0) * tor * GC_l[INV_l]
    omega_m1 = evaluate(d.chi1, -1) * evaluate(d.chi2, -1)
    eps = (
        np.power(complex(d.chi1.varpi_value), a1)
        * EPS_lam[i1]
        * np.power(complex(d.chi2.varpi_value), a2)
        * EPS_lam[i2]
    )
    u = -r0
    c = omega_m1 * cval / eps * pf ** (-u / 2.0)
    t = u - (a1 + a2)
    viol = sup & (t < -dl) & (np.abs(c) > tol)
    if viol.any():
        i = int(np.nonzero(viol)[0][0])
        raise InternalInconsistency(
            f"coefficient at t = {int(t[i])} below -d_pi(l) = {-dl}: {c[i]}"
        )
    keep = sup & (np.abs(c) > 1e-16) & (t <= t_max) & (t >= -dl)
    return fast, keep, t, c


def c_table(d, l, t_max=None):
    """Solve the functional equation for every mu in X_l at once.

    The generic stratum goes through _fast_terms in one array pass; the
    few mu with an unramified product fall back to the scalar route.
    """
    d_raw = d
    d, t_kind = _ramified_ps(d)
    n = conductor(d)
    if not 0 <= l <= n:
        raise LevelOutOfRange(f"need 0 <= l <= n = {n}, got l = {l}")
    dl = d_pi(d, l)
    if t_max is None:
        t_max = dl + 8
    if t_max < -dl:
        raise WindowError(f"t_max = {t_max} below support floor {-dl}")
    tol = zero_tol()
    mus = enumerate_chars(d.p, l)
    ft = _fast_terms(d, t_kind, l, t_max, dl, tol)
    if ft is None:
        columns = [_scalar_column(d, mu, l, t_max, dl, tol) for mu in mus]
    else:
        fast, keep, t, c = ft
        columns = [{} for _ in mus]
        for i in np.nonzero(keep)[0]:
            columns[int(i)] = {int(t[i]): complex(c[i])}
        for i in np.nonzero(~fast)[0]:
            columns[int(i)] = _scalar_column(d, mus[int(i)], l, t_max, dl, tol)
    return WhittakerTable(
        descriptor=d_raw if isinstance(d_raw, PrincipalSeries) else d,
        l=l,
        t_min=-dl,
        t_max=t_max,
        d_l=dl,
        mus=tuple(mus),
        columns=tuple(columns),
        fast=ft is not None,
    )


@lru_cache(maxsize=16)
def _cached_table(d, l, t_max):
    return c_table(d, l, t_max)


def whittaker_value(d, t, l, v, t_max=None):
    """W_pi(g_{t,l,v}) from a cached coefficient table."""
    table = _cached_table(d, l, t_max)
    return table.value(t, v)


def vanishing_index_definitional(d, l, t_max=None):
    """Least r >= 0 with some |W_pi(g_{r - d_pi(l), l, v})| above tolerance.

    Columns that vanish identically are skipped through the orthogonality
    identity mean_v |W|^2 = sum_mu |c|^2, so the v-scan only runs where a
    witness is guaranteed to exist.
    """
    table = _cached_table(d, l, t_max)
    tol = zero_tol()
    for r in range(table.t_max - table.t_min + 1):
        t = table.t_min + r
        if table.column_norm_sq(t) <= tol * tol:
            continue
        _, vals = table.column_values(t)
        if np.abs(vals).max() > tol:
            return r
        raise InternalInconsistency(
            f"column t = {t} has positive norm but no witness v"
        )
    raise WindowError(
        f"no nonzero Whittaker value found for t in [{table.t_min}, {table.t_max}]"
    )
