"""Character arithmetic against definitional oracles and known group facts."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspvan import (
    DomainError,
    DomainMismatch,
    InvalidPrime,
    PadicCharacter,
    UnsupportedLevel,
    char_conductor,
    char_from_json,
    char_inv,
    char_mul,
    char_to_json,
    enumerate_chars,
    evaluate,
    lift,
    reduce_to_conductor,
    trivial_char,
    unit_group_structure,
    unit_rotation,
)
from cuspvan.padic_chars import best_joint_twist

SMALL = [(p, k) for p in (2, 3, 5) for k in range(0, 5)]


def units_mod(p, k):
    m = p**k
    return [u for u in range(1, m + 1) if u % p != 0] if k else [1]


def conductor_oracle(chi):
    """Smallest c with chi trivial on 1 + p^c Z (definition, by direct scan)."""
    p, k = chi.p, chi.k
    for c in range(k + 1):
        ok = all(
            abs(evaluate(chi, u) - 1) < 1e-12
            for u in units_mod(p, k)
            if (u - 1) % p**c == 0
        )
        if ok:
            return c
    raise AssertionError("no conductor <= k, impossible")


def test_conductor_matches_definition_exhaustively():
    for p, k in SMALL:
        for chi in enumerate_chars(p, k):
            assert char_conductor(chi) == conductor_oracle(chi)


def test_unit_group_structure_examples():
    st32 = unit_group_structure(3, 2)
    assert st32.generators == (2,) and st32.orders == (6,)
    st22 = unit_group_structure(2, 2)
    assert st22.generators == (3,) and st22.orders == (2,)
    st24 = unit_group_structure(2, 4)
    assert st24.generators == (15, 5) and st24.orders == (2, 4)
    for p, k in SMALL:
        stp = unit_group_structure(p, k)
        assert math.prod(stp.orders) == (p**k - p ** (k - 1) if k else 1)
        # generators really generate: count distinct products of powers
        seen = set()
        exps = [0] * len(stp.orders)
        total = math.prod(stp.orders)
        for flat in range(total):
            rem, val = flat, 1
            for g, o in zip(stp.generators, stp.orders):
                val = val * pow(g, rem % o, p**k) % p**k if k else 1
                rem //= o
            seen.add(val)
        assert len(seen) == total


def test_invalid_prime_rejected():
    with pytest.raises(InvalidPrime):
        unit_group_structure(4, 2)
    with pytest.raises(InvalidPrime):
        enumerate_chars(1, 2)


def test_cardinalities_match_closed_forms():
    for p in (2, 3, 5, 7):
        for k in range(0, 6):
            full = len(enumerate_chars(p, k))
            exact = len(enumerate_chars(p, k, exact=True))
            assert full == (p ** (k - 1) * (p - 1) if k >= 1 else 1)
            if k == 0:
                assert exact == 1
            elif k == 1:
                assert exact == p - 2
            else:
                assert exact == p ** (k - 2) * (p - 1) ** 2


def test_conductor_examples():
    assert char_conductor(trivial_char(3, 2)) == 0
    assert char_conductor(PadicCharacter(2, 2, (1,))) == 2
    chi6 = PadicCharacter(3, 2, (1,))  # order 6 generator character mod 9
    assert char_conductor(chi6) == 2
    assert char_conductor(char_mul(chi6, chi6)) == 2
    cube = char_mul(chi6, char_mul(chi6, chi6))
    assert char_conductor(cube) == 1  # the lifted Legendre character


def test_evaluate_examples():
    for u in units_mod(5, 2):
        assert evaluate(trivial_char(5, 2), u) == 1
    assert abs(evaluate(PadicCharacter(2, 2, (1,)), 3) + 1) < 1e-15
    chi = PadicCharacter(3, 3, (5,), varpi_value=1j)
    assert char_conductor(char_mul(chi, char_inv(chi))) == 0
    # evaluate at a non-unit picks up the varpi factor
    assert abs(evaluate(chi, 3) - 1j * evaluate(chi, 1)) < 1e-15


def test_evaluate_respects_lifts():
    chi = PadicCharacter(3, 2, (1,))
    chi5 = lift(chi, 4)
    assert chi5.k == 4 and char_conductor(chi5) == 2
    for u in units_mod(3, 4):
        assert abs(evaluate(chi5, u) - evaluate(chi, u % 9)) < 1e-12
    red = reduce_to_conductor(chi5)
    assert red.k == 2 and red.exponents == chi.exponents


def test_rotation_is_exact_order():
    for p, k in SMALL:
        for chi in enumerate_chars(p, k, exact=True):
            rot = unit_rotation(chi, 1)
            assert rot == 0
            for u in units_mod(p, k)[:6]:
                r = unit_rotation(chi, u)
                assert 0 <= r < 1 and r.denominator <= p**k


@given(
    st.sampled_from([(p, k) for p in (2, 3, 5) for k in range(1, 5)]),
    st.data(),
)
@settings(max_examples=60, deadline=None)
def test_group_law_subadditivity(pk, data):
    p, k = pk
    chars = enumerate_chars(p, k)
    c1 = data.draw(st.sampled_from(chars))
    c2 = data.draw(st.sampled_from(chars))
    a1, a2 = char_conductor(c1), char_conductor(c2)
    a = char_conductor(char_mul(c1, c2))
    assert a <= max(a1, a2)
    if a1 != a2:
        assert a == max(a1, a2)


@given(st.sampled_from([(p, k) for p in (2, 3, 5) for k in range(1, 5)]), st.data())
@settings(max_examples=40, deadline=None)
def test_mul_inverse_commute(pk, data):
    p, k = pk
    chars = enumerate_chars(p, k)
    c1 = data.draw(st.sampled_from(chars))
    c2 = data.draw(st.sampled_from(chars))
    assert char_mul(c1, c2) == char_mul(c2, c1)
    assert char_conductor(char_mul(c1, char_inv(c1))) == 0
    u = data.draw(st.sampled_from(units_mod(p, k)))
    lhs = evaluate(char_mul(c1, c2), u)
    assert abs(lhs - evaluate(c1, u) * evaluate(c2, u)) < 1e-12


def test_mismatched_p_rejected():
    with pytest.raises(DomainMismatch):
        char_mul(trivial_char(2, 2), trivial_char(3, 2))


def test_best_joint_twist_examples():
    chi5 = enumerate_chars(5, 2, exact=True)[0]
    best, mu = best_joint_twist(chi5, None, 2)
    assert best == 2 and char_conductor(mu) == 2

    # p=3, k=2: a pair with ratio conductor 2 tops out at 2k-1 = 3
    x3 = enumerate_chars(3, 2, exact=True)
    pair = next(
        (c1, c2)
        for c1 in x3
        for c2 in x3
        if char_conductor(char_mul(c1, char_inv(c2))) == 2
    )
    best, _ = best_joint_twist(pair[0], pair[1], 2)
    assert best == 3

    # p=2, k=3, ratio conductor 2: every mu lands on {2, 0}
    x2 = enumerate_chars(2, 3, exact=True)
    c1, c2 = next(
        (c1, c2)
        for c1 in x2
        for c2 in x2
        if char_conductor(char_mul(c1, char_inv(c2))) == 2
    )
    for mu in x2:
        pair_a = {
            char_conductor(char_mul(mu, c1)),
            char_conductor(char_mul(mu, c2)),
        }
        assert pair_a == {2, 0}
    best, _ = best_joint_twist(c1, c2, 3)
    assert best == 2

    with pytest.raises(UnsupportedLevel):
        best_joint_twist(chi5, None, 1)
    with pytest.raises(DomainError):
        best_joint_twist(trivial_char(5, 2), None, 2)


def test_no_q2_char_with_a3_and_square_a2():
    for chi in enumerate_chars(2, 3):
        if char_conductor(chi) == 3:
            assert char_conductor(char_mul(chi, chi)) != 2


def test_json_roundtrip():
    chi = PadicCharacter(3, 3, (7,), varpi_value=complex(0, 1))
    back = char_from_json(char_to_json(chi))
    assert back == chi
    assert char_from_json(char_to_json(trivial_char(2))) == trivial_char(2)
    with pytest.raises(DomainError):
        char_from_json({"p": 3})
