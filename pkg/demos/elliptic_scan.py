"""Ramification indices of modular parametrizations, swept over local data.

Reproduces the global statistics (every index divides 24, and 24 itself
is attained) and lists the level/denominator pairs where the index at a
cusp can exceed 1.
"""

from collections import Counter

from cuspvan import brunault_checks, conductor, elliptic_local_profiles, vanishing_index_table


def main():
    rep = brunault_checks()
    print(f"swept {rep.cases} local configurations")
    print(f"indices seen: {sorted(rep.e_values)} (max {rep.max_e})")
    assert rep.ok

    hist = Counter()
    nontrivial = []
    for p, max_n in ((2, 8), (3, 5)):
        for prof in elliptic_local_profiles(p, max_n):
            n = conductor(prof)
            for l in range(n + 1):
                e = vanishing_index_table(prof, p, l)
                hist[(p, e)] += 1
                if e > 0:
                    nontrivial.append((p, n, l, prof.kind, e))
    print()
    print("per-prime exponent histogram:", dict(sorted(hist.items())))
    print()
    print("p  v_p(N)  v_p(L)  kind                e_p")
    for p, n, l, kind, e in sorted(nontrivial):
        print(f"{p}  {n:>6}  {l:>6}  {kind:<18}  {e}")


if __name__ == "__main__":
    main()
