"""Fourier coefficients of a small form, read off at each cusp.

Builds concrete principal-series data for N = 12, then walks the cusps
and prints the normalized coefficient moduli |a_f(r; a/L)| / r^{k/2}
coming out of the local Whittaker values.
"""

import cmath

from cuspvan import (
    NewformLocalData,
    PadicCharacter,
    PrincipalSeries,
    cusps_of_denominator,
    delta,
    fourier_at_cusp,
    scaling_matrix,
    trivial_char,
)


def main():
    data = NewformLocalData(
        k=2,
        N=12,
        M=12,
        locals={
            2: PrincipalSeries(PadicCharacter(2, 2, (1,)), trivial_char(2)),
            3: PrincipalSeries(PadicCharacter(3, 1, (1,)), trivial_char(3)),
        },
    )
    # pretend coefficient data at the prime-to-N part; any unit-modulus
    # phase works, the cusp expansion only reorganizes it
    a = {1: 1.0, 5: 0.7 * cmath.exp(0.4j), 7: -1.2, 11: 0.3j, 25: 0.49}
    print(f"N = {data.N}, M = {data.M}, k = {data.k}")
    for L in (1, 2, 3, 4, 6, 12):
        for c in cusps_of_denominator(data.N, L):
            s = scaling_matrix(c)
            row = []
            for r in (1, 2, 3, 5, 6, 12):
                r0 = r
                for p in (2, 3):
                    while r0 % p == 0:
                        r0 //= p
                try:
                    v = fourier_at_cusp(data, r, c, s, a.get(r0, 1.0))
                    row.append(f"{abs(v):.4f}")
                except Exception as e:
                    row.append("!")
            print(f"cusp {str(c):>5} (delta {delta(data.N, data.M, L)}): "
                  + "  ".join(row))
    print()
    print("columns are r = 1, 2, 3, 5, 6, 12; the 1/12 row carries the")
    print("plain coefficient moduli, other denominators mix in the local")
    print("Whittaker mass at the matching congruence levels.")


if __name__ == "__main__":
    main()
