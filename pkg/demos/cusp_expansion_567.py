"""The level 567 = 3^4 * 7 configuration, cusp by cusp.

The form has a twin ramified pair at 3 (both conductors 2, ratio still
conductor 2) and a plain Steinberg component at 7.  Denominator 9 is the
interesting one: the local table forces vanishing order 3 there, for
every newform with these local invariants.  Per-cusp splitting beyond
that (different orders at 1/9, 2/9, 4/9) is invisible to local data, so
the uniformity flag stays "unknown" wherever Q(zeta) can act.
"""

from cuspvan import (
    AbstractLocalData,
    NewformLocalData,
    cusp_count,
    cusps_of_denominator,
    delta,
    e_f,
    width,
)


def main():
    data = NewformLocalData(
        k=2,
        N=567,
        M=9,
        locals={
            3: AbstractLocalData("principal_series", a1=2, a2=2, a12inv=2),
            7: AbstractLocalData("steinberg", a_chi=0),
        },
    )
    N = data.N
    print(f"N = {N}, {cusp_count(N)} cusps")
    print("L    #cusps  width  delta  e_f  uniform")
    for L in sorted(d for d in range(1, N + 1) if N % d == 0):
        cs = cusps_of_denominator(N, L)
        rep = e_f(data, L)
        print(f"{L:<4} {len(cs):>6} {width(N, L):>6} {delta(N, data.M, L):>6}"
              f" {rep.e_f:>4}  {rep.uniform}")
    print()
    rep = e_f(data, 9)
    print(f"cusps of denominator 9: {[str(c) for c in cusps_of_denominator(N, 9)]}")
    print(f"e_f(9) = {rep.e_f} with per-prime exponents {rep.exponents};")
    print("the flag above says whether that value is known to hold at every")
    print("cusp of the denominator, not just one representative.")


if __name__ == "__main__":
    main()
