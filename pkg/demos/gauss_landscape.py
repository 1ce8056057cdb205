"""Moduli of averaged Gauss sums G(p^-r, mu) over the (r, a(mu)) grid.

The ramified sums live on the critical line r = a(mu) with modulus
zeta_p(1) p^{-r/2}; everything else is either the unramified staircase
(1, -1/(p-1), 0) or exactly zero.
"""

from cuspvan import classify_gauss, enumerate_chars, gauss_sum, trivial_char, zeta_local


def main():
    p = 3
    print(f"p = {p}, zeta(1) = {zeta_local(p, 1)}")
    mus = [trivial_char(p)]
    for k in (1, 2, 3):
        chis = enumerate_chars(p, k, exact=True)
        mus.append(chis[0])
    header = "r\\a(mu)" + "".join(f"{a:>12}" for a in range(len(mus)))
    print(header)
    for r in range(-1, 5):
        cells = []
        for mu in mus:
            g = gauss_sum(p, 1, r, mu)
            cells.append(f"{abs(g.value):>12.6f}")
        print(f"{r:>7}" + "".join(cells))
    print()
    for r in (0, 1, 2, 3):
        mu = mus[2]
        print(f"r={r}, a(mu)=2: {classify_gauss(p, 1, r, mu)}")


if __name__ == "__main__":
    main()
