"""Global assembly: e_f at cusps, elliptic ramification, Fourier expansions."""

import pytest

from cuspvan import (
    AbstractLocalData,
    BadMatrix,
    Cusp,
    DomainMismatch,
    InvalidDescriptor,
    NewformLocalData,
    NotADivisor,
    NotElliptic,
    PadicCharacter,
    PrincipalSeries,
    Rationality,
    SteinbergTwist,
    Unsupported,
    brunault_checks,
    conductor,
    e_f,
    elliptic_local_profiles,
    elliptic_ramification,
    fourier_at_cusp,
    newform_from_json,
    newform_to_json,
    normalize_unramified_twist,
    scaling_matrix,
    toral_whittaker,
    trivial_char,
    vanishing_index_table,
)


def chi_of(p, k, e=1, w=1.0):
    exps = (e,) if p != 2 or k < 3 else (1, e)
    if p == 2 and k < 2:
        exps = ()
    return PadicCharacter(p, k, exps, varpi_value=w)


def vp(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def data_567():
    return NewformLocalData(
        k=2,
        N=567,
        M=9,
        locals={
            3: AbstractLocalData("principal_series", a1=2, a2=2, a12inv=2),
            7: AbstractLocalData("steinberg", a_chi=0),
        },
    )


def test_e_f_at_567():
    rep = e_f(data_567(), 9)
    assert rep.e_f == 3
    assert rep.exponents == {3: 1, 7: 0}
    assert rep.uniform == "unknown"
    assert e_f(data_567(), 63).e_f == 3
    assert e_f(data_567(), 27).e_f == 1
    assert e_f(data_567(), 1).e_f == 1
    with pytest.raises(NotADivisor):
        e_f(data_567(), 5)


def test_uniformity_flag():
    d = data_567()
    import dataclasses

    rat = dataclasses.replace(d, rationality=Rationality.RATIONAL_COEFFICIENTS)
    assert e_f(rat, 9).uniform == "all"
    # gcd(L, N/L) = 1 makes the flag unconditional
    assert e_f(d, 567).uniform == "all"
    assert e_f(d, 7).uniform == "all"


def test_newform_validation():
    with pytest.raises(InvalidDescriptor):
        NewformLocalData(k=1, N=4, M=1, locals={2: chi_of(2, 2)})
    with pytest.raises(InvalidDescriptor):
        NewformLocalData(k=2, N=12, M=8, locals={})
    # locals must cover exactly the primes of N
    with pytest.raises(InvalidDescriptor):
        NewformLocalData(
            k=2, N=12, M=1, locals={2: AbstractLocalData("steinberg", a_chi=1)}
        )
    # conductor must match v_p(N)
    with pytest.raises(InvalidDescriptor):
        NewformLocalData(
            k=2,
            N=8,
            M=1,
            locals={2: SteinbergTwist(trivial_char(2))},
        )
    # central character conductor must match v_p(M)
    with pytest.raises(InvalidDescriptor):
        NewformLocalData(
            k=2,
            N=4,
            M=4,
            locals={2: PrincipalSeries(chi_of(2, 2), chi_of(2, 2))},
        )


def test_elliptic_ramification_profiles():
    st16 = NewformLocalData(
        k=2,
        N=16,
        M=1,
        locals={2: SteinbergTwist(chi_of(2, 2))},
        rationality=Rationality.RATIONAL_COEFFICIENTS,
    )
    assert {L: elliptic_ramification(st16, L) for L in (1, 2, 4, 8, 16)} == {
        1: 1,
        2: 1,
        4: 4,
        8: 1,
        16: 1,
    }
    sc48 = NewformLocalData(
        k=2,
        N=48,
        M=1,
        locals={
            2: AbstractLocalData("supercuspidal", n=4, a_min=3),
            3: AbstractLocalData("steinberg", a_chi=0),
        },
        rationality=Rationality.RATIONAL_COEFFICIENTS,
    )
    values = {L: elliptic_ramification(sc48, L) for L in (1, 2, 3, 4, 6, 8, 12, 16, 24, 48)}
    assert values == {1: 1, 2: 1, 3: 1, 4: 2, 6: 1, 8: 1, 12: 2, 16: 1, 24: 1, 48: 1}


def test_not_elliptic():
    good = NewformLocalData(
        k=2, N=16, M=1, locals={2: SteinbergTwist(chi_of(2, 2))}
    )
    import dataclasses

    with pytest.raises(NotElliptic):
        elliptic_ramification(dataclasses.replace(good, k=4), 4)
    with pytest.raises(NotElliptic):
        elliptic_ramification(data_567(), 9)  # nontrivial nebentypus
    # omega is unramified but omega(p) != 1, so pi is not chi |+| chi^-1
    bad_omega = NewformLocalData(
        k=2,
        N=9,
        M=1,
        locals={3: PrincipalSeries(chi_of(3, 1, w=1j), chi_of(3, 1, w=1j))},
    )
    with pytest.raises(NotElliptic):
        elliptic_ramification(bad_omega, 3)
    # conductor above the elliptic bound
    deep = NewformLocalData(
        k=2, N=3**6, M=1, locals={3: AbstractLocalData("supercuspidal", n=6, a_min=5)}
    )
    with pytest.raises(NotElliptic):
        elliptic_ramification(deep, 27)
    # a(chi) = 1 never happens over Q_2, so this profile is unrealizable
    fake = NewformLocalData(
        k=2, N=4, M=1, locals={2: AbstractLocalData("steinberg", a_chi=1)}
    )
    with pytest.raises(NotElliptic):
        elliptic_ramification(fake, 2)
    with pytest.raises(NotADivisor):
        elliptic_ramification(good, 3)


def test_elliptic_profiles_agree_with_table():
    for p, max_n in ((2, 8), (3, 5), (5, 2)):
        for prof in elliptic_local_profiles(p, max_n):
            n = conductor(prof)
            assert n <= max_n
            for l in range(n + 1):
                assert vanishing_index_table(prof, p, l) >= 0


def test_brunault_report():
    rep = brunault_checks()
    assert rep.ok
    assert rep.cases == 3392
    assert rep.max_e == 24
    assert sorted(rep.e_values) == [1, 2, 3, 4, 6, 8, 12, 24]
    assert all(24 % e == 0 for e in rep.e_values)


def fourier_data():
    return NewformLocalData(
        k=2,
        N=12,
        M=12,
        locals={
            2: PrincipalSeries(chi_of(2, 2), trivial_char(2)),
            3: PrincipalSeries(chi_of(3, 1), trivial_char(3)),
        },
    )


def test_fourier_at_width_one_cusp():
    data = fourier_data()
    c = Cusp(1, 12, 12)
    s = scaling_matrix(c)
    for r in (1, 2, 6, 12, 5, 36):
        got = abs(fourier_at_cusp(data, r, c, s, 1.0))
        expect = 1.0
        r0 = r
        for p, d in data.locals.items():
            rp = vp(r, p)
            r0 //= p**rp
            expect *= abs(toral_whittaker(normalize_unramified_twist(d), rp))
        expect /= r0 ** (data.k / 2)
        assert abs(got - expect) < 1e-12, r


def test_fourier_argument_validation():
    data = fourier_data()
    c = Cusp(1, 12, 12)
    s = scaling_matrix(c)
    with pytest.raises(DomainMismatch):
        fourier_at_cusp(data, 0, c, s, 1.0)
    with pytest.raises(DomainMismatch):
        fourier_at_cusp(data, 1, Cusp(1, 4, 4), scaling_matrix(Cusp(1, 4, 4)), 1.0)
    with pytest.raises(BadMatrix):
        fourier_at_cusp(data, 1, c, scaling_matrix(Cusp(5, 12, 12)), 1.0)
    st_data = NewformLocalData(
        k=2, N=2, M=1, locals={2: SteinbergTwist(trivial_char(2))}
    )
    with pytest.raises(Unsupported):
        fourier_at_cusp(st_data, 1, Cusp(1, 2, 2), scaling_matrix(Cusp(1, 2, 2)), 1.0)


def test_newform_json_roundtrip():
    for data in (data_567(), fourier_data()):
        j = newform_to_json(data)
        back = newform_from_json(j)
        assert back == data
    with pytest.raises(InvalidDescriptor):
        newform_from_json({"k": 2, "N": 4})
    with pytest.raises(InvalidDescriptor):
        newform_from_json({"k": "x", "N": 4, "M": 1, "locals": {}})
