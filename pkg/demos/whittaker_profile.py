"""Support profile of a p-adic Whittaker newform across levels.

For one ramified principal series this prints, per level l, the window
floor -d_pi(l), the t values carrying mass, and the residual of the
functional equation that produced the coefficients.
"""

import numpy as np

from cuspvan import PadicCharacter, PrincipalSeries, c_table, conductor, d_pi


def main():
    d = PrincipalSeries(PadicCharacter(3, 2, (1,)), PadicCharacter(3, 2, (2,)))
    n = conductor(d)
    print(f"principal series over Q_3, n = {n}")
    for l in range(n + 1):
        tab = c_table(d, l)
        live = [t for t in range(tab.t_min, tab.t_max + 1)
                if tab.column_norm_sq(t) > 1e-20]
        resid = tab.self_check()
        shown = f"{live}" if len(live) <= 4 else f"[{live[0]}, {live[1]}, ..{live[-1]}]"
        print(f"l={l}: d_pi={d_pi(d, l)}, mass at t in {shown}, "
              f"FE residual {resid:.2e}, fast path {tab.fast}")
        if not live:
            continue
        t0 = live[0]
        units, vals = tab.column_values(t0)
        mods = [round(float(m), 6) for m in np.abs(vals)][:8]
        print(f"      |W(g_{{{t0},{l},v}})| at the first units: {mods}")
    print()
    print("extra vanishing e(l) = first live t minus the floor:")
    for l in range(n + 1):
        tab = c_table(d, l)
        live = [t for t in range(tab.t_min, tab.t_max + 1)
                if tab.column_norm_sq(t) > 1e-20]
        print(f"  l={l}: e = {live[0] - tab.t_min}")


if __name__ == "__main__":
    main()
