"""Census of character-twist behavior at small p, k.

For a primitive chi mod p^k, how does the conductor of mu*chi move as mu
runs over the primitive characters?  The census shows the split between
q > 3 (a joint-conductor partner always exists), q = 3 (pairs can be
forced one notch down), and q = 2 (whole strata collapse).
"""

from collections import Counter

from cuspvan import char_conductor, char_mul, enumerate_chars


def census(p, k):
    prims = [c for c in enumerate_chars(p, k) if char_conductor(c) == k]
    mus = [c for c in enumerate_chars(p, k) if char_conductor(c) == k]
    rows = Counter()
    for chi in prims:
        best = max(char_conductor(char_mul(mu, chi)) for mu in mus) if mus else 0
        rows[best] += 1
    return len(prims), rows


def main():
    for p in (2, 3, 5, 7):
        for k in (2, 3, 4):
            prims, rows = census(p, k)
            if prims == 0:
                print(f"p={p} k={k}: no primitive characters")
                continue
            profile = ", ".join(
                f"max a(mu chi)={a}: {m}" for a, m in sorted(rows.items())
            )
            print(f"p={p} k={k}: {prims} primitive chi; {profile}")
        print()


if __name__ == "__main__":
    main()
