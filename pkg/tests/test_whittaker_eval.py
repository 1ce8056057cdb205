"""Whittaker coefficient tables: functional equation, shapes, and the index."""

from fractions import Fraction

import numpy as np
import pytest

from cuspvan import (
    LevelOutOfRange,
    PadicCharacter,
    PrincipalSeries,
    SteinbergTwist,
    Unsupported,
    WindowError,
    c_table,
    conductor,
    enumerate_chars,
    evaluate,
    normalize_unramified_twist,
    psi,
    toral_whittaker,
    trivial_char,
    vanishing_index_definitional,
    vanishing_index_oracle,
    vanishing_index_table,
    whittaker_value,
    zero_tol,
)
from cuspvan.whittaker_eval import _scalar_column


def chi_of(p, k, e=1, w=1.0):
    exps = (e,) if p != 2 or k < 3 else (1, e)
    if p == 2 and k < 2:
        exps = ()
    return PadicCharacter(p, k, exps, varpi_value=w)


def p_pow(p, m):
    return p**m if m >= 0 else Fraction(1, p ** (-m))


def test_basic_identity_against_toral_values():
    # W(g_{r-2n, n, 1}) = omega(-1) psi(p^{r-n})^{-1} W_toral(r), with the
    # toral side taken for the omega(p) = 1 twist that c_table fixes.
    for d in (
        PrincipalSeries(chi_of(2, 2, w=1j), trivial_char(2)),
        PrincipalSeries(chi_of(3, 2, w=-1.0), chi_of(3, 1, w=0.6 + 0.8j)),
        PrincipalSeries(chi_of(5, 1), chi_of(5, 1, 2)),
    ):
        p, n = d.p, conductor(d)
        dn = normalize_unramified_twist(d)
        om1 = evaluate(dn.chi1, -1) * evaluate(dn.chi2, -1)
        for r in range(0, n + 5):
            w = whittaker_value(d, r - 2 * n, n, 1)
            rhs = om1 * psi(p, p_pow(p, r - n)).conjugate() * toral_whittaker(dn, r)
            assert abs(w - rhs) < 1e-12, (d, r)


def test_self_check_and_orthogonality():
    for d, l in (
        (PrincipalSeries(chi_of(2, 3), chi_of(2, 2)), 2),
        (PrincipalSeries(chi_of(3, 2), chi_of(3, 1)), 2),
        (PrincipalSeries(chi_of(3, 2), chi_of(3, 2, 2)), 2),
        (PrincipalSeries(chi_of(5, 2), trivial_char(5)), 2),
    ):
        tab = c_table(d, l)
        assert tab.self_check() < 1e-8
        worst = max(
            tab.orthogonality_residual(t) for t in range(tab.t_min, tab.t_max + 1)
        )
        assert worst < 1e-8


def test_window_behavior():
    d = PrincipalSeries(chi_of(3, 2), chi_of(3, 2, 2))
    tab = c_table(d, 1)
    assert tab.coeff(0, tab.t_min - 3) == 0j
    assert tab.value(tab.t_min - 1, 1) == 0j
    with pytest.raises(WindowError):
        tab.value(tab.t_max + 1, 1)
    with pytest.raises(WindowError):
        c_table(d, 1, t_max=-20)
    with pytest.raises(LevelOutOfRange):
        c_table(d, 5)


def test_unsupported_descriptors():
    with pytest.raises(Unsupported):
        c_table(SteinbergTwist(trivial_char(3)), 0)
    with pytest.raises(Unsupported):
        c_table(PrincipalSeries(trivial_char(3), trivial_char(3, 0, -1.0)), 0)


def test_low_level_columns_concentrate_at_minus_n():
    # both chi_i ramified: for l <= 1 each mu column is a single coefficient
    # at t = -n, and the column there has unit mean square.
    d = PrincipalSeries(chi_of(3, 2), chi_of(3, 2, 2))
    n = conductor(d)
    for l in (0, 1):
        tab = c_table(d, l)
        support = sorted({t for col in tab.columns for t in col})
        assert support == [-n]
        assert abs(tab.column_norm_sq(-n) - 1.0) < 1e-12


def test_type_two_middle_level_single_support():
    d = PrincipalSeries(chi_of(3, 3), trivial_char(3))
    n = conductor(d)
    l = 2
    tab = c_table(d, l)
    live = [
        t
        for t in range(tab.t_min, tab.t_max + 1)
        if tab.column_norm_sq(t) > 1e-20
    ]
    assert live == [-(n + l)]
    assert tab.d_l == n + l


def test_fast_path_matches_scalar_route():
    tol = zero_tol()
    for d, l in (
        (PrincipalSeries(chi_of(3, 3), chi_of(3, 2)), 3),
        (PrincipalSeries(chi_of(5, 2), trivial_char(5)), 2),
    ):
        dn = normalize_unramified_twist(d)
        tab = c_table(d, l)
        assert tab.fast
        for mu, col in zip(tab.mus, tab.columns):
            ref = _scalar_column(dn, mu, l, tab.t_max, tab.d_l, tol)
            assert set(col) == set(ref), mu
            for t in col:
                assert abs(col[t] - ref[t]) < 1e-12, (mu, t)


def test_column_values_match_pointwise_eval():
    d = PrincipalSeries(chi_of(2, 3), chi_of(2, 2))
    tab = c_table(d, 2)
    for t in range(tab.t_min, tab.t_min + 6):
        units, vals = tab.column_values(t)
        direct = np.array([tab.value(t, v) for v in units])
        assert np.abs(vals - direct).max() < 1e-12


def test_definitional_frozen_cases():
    d3 = PrincipalSeries(chi_of(3, 2), chi_of(3, 2, 2))
    assert vanishing_index_definitional(d3, 2) == 1
    d2 = PrincipalSeries(chi_of(2, 2), chi_of(2, 2))
    assert vanishing_index_definitional(d2, 2) == 2
    d5 = PrincipalSeries(chi_of(5, 1), chi_of(5, 1, 2))
    assert vanishing_index_definitional(d5, 1) == 0


def test_definitional_matches_table_and_oracle_spot():
    for d in (
        PrincipalSeries(chi_of(2, 3), chi_of(2, 2)),
        PrincipalSeries(chi_of(3, 2), chi_of(3, 1)),
        PrincipalSeries(chi_of(3, 2, w=1j), chi_of(3, 2, 2, w=-1j)),
        PrincipalSeries(chi_of(2, 3), chi_of(2, 3)),
    ):
        n = conductor(d)
        for l in range(n + 1):
            e = vanishing_index_definitional(d, l)
            assert e == vanishing_index_table(d, d.p, l), (d, l)
            assert e == vanishing_index_oracle(d, l), (d, l)
