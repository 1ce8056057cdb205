"""One witness per nonzero row of the local vanishing table.

Each witness is checked three ways where possible: the closed-form table,
the brute-force character search, and (for principal series) the value
reconstructed from the functional equation.
"""

from cuspvan import (
    AbstractLocalData,
    PadicCharacter,
    PrincipalSeries,
    conductor,
    descriptor_to_json,
    vanishing_index_definitional,
    vanishing_index_oracle,
    vanishing_index_table,
)

WITNESSES = [
    ("q=3, twin ramified pair, ratio still primitive",
     AbstractLocalData("principal_series", a1=2, a2=2, a12inv=2), 3, 2),
    ("q=2, unbalanced principal series",
     AbstractLocalData("principal_series", a1=3, a2=2, a12inv=3), 2, 2),
    ("q=2, supercuspidal with a_min = n-1",
     AbstractLocalData("supercuspidal", n=4, a_min=3), 2, 2),
    ("q=2, ramified Steinberg twist",
     AbstractLocalData("steinberg", a_chi=2), 2, 2),
    ("q=2, twin pair with deep ratio collapse",
     AbstractLocalData("principal_series", a1=2, a2=2, a12inv=0), 2, 2),
    ("q=2, supercuspidal away from the edge",
     AbstractLocalData("supercuspidal", n=4, a_min=2), 2, 2),
    ("q=2, twin pair with ratio one notch down",
     AbstractLocalData("principal_series", a1=3, a2=3, a12inv=2), 2, 3),
]

CONCRETE = {
    (3, 2, 2, 2): PrincipalSeries(
        PadicCharacter(3, 2, (1,)), PadicCharacter(3, 2, (2,))
    ),
    (2, 2, 2, 0): PrincipalSeries(
        PadicCharacter(2, 2, (1,)), PadicCharacter(2, 2, (1,))
    ),
}


def main():
    for label, prof, p, l in WITNESSES:
        e_table = vanishing_index_table(prof, p, l)
        line = f"{label}\n  {descriptor_to_json(prof)}  l={l}  e={e_table}"
        key = (p, getattr(prof, "a1", -1), getattr(prof, "a2", -1),
               getattr(prof, "a12inv", -1))
        d = CONCRETE.get(key)
        if d is not None:
            e_orc = vanishing_index_oracle(d, l)
            e_def = vanishing_index_definitional(d, l)
            line += f"  (oracle {e_orc}, reconstruction {e_def})"
            assert e_table == e_orc == e_def
        print(line)
        print()
    # and the silent majority: q > 3 never contributes
    quiet = AbstractLocalData("principal_series", a1=2, a2=2, a12inv=2)
    print("same twin pair at p=5:",
          [vanishing_index_table(quiet, 5, l) for l in range(conductor(quiet) + 1)])


if __name__ == "__main__":
    main()
