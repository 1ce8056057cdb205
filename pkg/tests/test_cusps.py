"""Cusp bookkeeping for X_0(N): counts, widths, periods, scaling matrices."""

from math import gcd, lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspvan import (
    BadMatrix,
    Cusp,
    DomainMismatch,
    NotADivisor,
    ScalingMatrix,
    are_equivalent,
    cusp_count,
    cusps_of_denominator,
    delta,
    euler_phi,
    scaling_matrix,
    width,
)


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_euler_phi():
    assert [euler_phi(n) for n in range(1, 13)] == [
        1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4,
    ]
    assert euler_phi(3**5) == 2 * 3**4


def test_cusp_count_examples_and_oracle():
    assert cusp_count(1) == 1
    assert cusp_count(4) == 3
    assert cusp_count(567) == 24
    for N in range(1, 400):
        expect = sum(euler_phi(gcd(L, N // L)) for L in divisors(N))
        assert cusp_count(N) == expect, N


def test_enumeration_matches_count():
    for N in (12, 16, 36, 48, 567):
        per_L = [cusps_of_denominator(N, L) for L in divisors(N)]
        assert sum(len(c) for c in per_L) == cusp_count(N)
        for L, cs in zip(divisors(N), per_L):
            assert len(cs) == euler_phi(gcd(L, N // L))
            for c in cs:
                assert gcd(c.a, N) == 1
                assert c.L == L
            for i in range(len(cs)):
                for j in range(i + 1, len(cs)):
                    assert not are_equivalent(cs[i], cs[j])
                assert are_equivalent(cs[i], cs[i])


def test_equivalence_rules():
    a = Cusp(1, 4, 16)
    b = Cusp(5, 4, 16)
    assert are_equivalent(a, b)  # 5 - 1 divisible by gcd(4, 4)
    assert not are_equivalent(a, Cusp(3, 4, 16))
    assert not are_equivalent(a, Cusp(1, 2, 16))
    with pytest.raises(DomainMismatch):
        are_equivalent(a, Cusp(1, 4, 32))


def test_width_and_delta_examples():
    assert width(36, 6) == 1
    assert width(16, 4) == 1
    assert width(16, 1) == 16
    assert width(16, 16) == 1
    assert delta(16, 8, 4) == 2
    assert delta(36, 1, 6) == 1
    assert delta(567, 7, 9) == 7


def test_delta_equals_width_for_trivial_nebentypus():
    for N in range(1, 200):
        for L in divisors(N):
            assert delta(N, 1, L) == width(N, L)


@given(st.integers(min_value=1, max_value=5000), st.data())
@settings(max_examples=120, deadline=None)
def test_delta_formula_property(N, data):
    L = data.draw(st.sampled_from(divisors(N)))
    M = data.draw(st.sampled_from(divisors(N)))
    d = delta(N, M, L)
    assert d == lcm(L * L, N, L * M) // (L * L)
    assert d % width(N, L) == 0
    assert width(N, L) * gcd(L * L, N) == N


def test_validation_errors():
    with pytest.raises(NotADivisor):
        width(12, 5)
    with pytest.raises(NotADivisor):
        delta(12, 5, 2)
    with pytest.raises(NotADivisor):
        Cusp(1, 5, 12)
    with pytest.raises(BadMatrix):
        Cusp(2, 4, 16)
    with pytest.raises(BadMatrix):
        ScalingMatrix(1, 1, 1, 1)


def test_scaling_matrix():
    for N in (16, 36, 567):
        for L in divisors(N):
            for c in cusps_of_denominator(N, L):
                s = scaling_matrix(c)
                assert s.a * s.d - s.b * s.L == 1
                assert (s.a, s.L) == (c.a, c.L)
                num, den = s.apply_sigma(c.a, c.L)
                assert (num, den) == (1, 0)  # sigma sends the cusp to infinity
    s = scaling_matrix(Cusp(1, 1, 1))
    assert s.sigma() == (s.d, -s.b, -s.L, s.a)
