"""Walk one profile through every layer of the package.

The profile (-1, -1, 1) directs a closed chain of four interlacing
partition diagonals (the last equals the first).  This script shows, for
that single profile:

  1. the smallest objects, listed explicitly;
  2. the generating function computed by brute-force enumeration;
  3. the exponent-multiset product formula and its expansion;
  4. the coupled functional-equation system the profile generates;
  5. the graded fixed-point solution of that system;
  6. agreement of all of the above, coefficient by coefficient.

Run:  python3 demos/explore_a_profile.py
"""

from cylq import (
    Window,
    build_system,
    cp_product_spec,
    enumerate_objects,
    genfun_by_enumeration,
    poch_infinite,
    solve_fixed_point,
    w3_multiset,
    zf,
)

PROFILE = (-1, -1, 1)
N = 13  # coefficients below q^13 are exact


def main() -> int:
    window = Window(N, N)

    print("profile:", PROFILE)
    entries, modulus = w3_multiset(PROFILE)
    print(
        "pair-exponent multiset: {%s} mod %s"
        % (", ".join(str(e) for e in sorted(entries)), modulus)
    )
    print()

    print("objects of weighted size <= 3 (diagonals, last = first):")
    for obj in enumerate_objects("cylindric", PROFILE, max_weighted_size=3):
        diagonals = " ; ".join(
            ",".join(str(part) for part in diag) or "-" for diag in obj.diagonals
        )
        print("   size %s:  %s" % (obj.weighted_size(), diagonals))
    print()

    enum = genfun_by_enumeration("cylindric", PROFILE, window=window).collapse_z()
    print("enumeration generating function:")
    print("  ", " + ".join("%dq^%s" % (c, e) for _, e, c in enum.items()))
    print()

    spec = cp_product_spec(PROFILE)
    print("product formula: 1 /", " ".join(
        "(q^%s;q^%s)_inf" % (e, m) for e, m in spec.den))
    product = spec.expand(Window(N))
    print("  expansion matches enumeration:", enum == product)
    print()

    system = build_system("cylindric", PROFILE)
    print("coupled system (normalized; one unknown per reachable profile):")
    print(system.pretty())
    print()

    solved = solve_fixed_point(system, window)
    print("fixed-point solution for the starting profile, at z = 1,")
    print("multiplied back by the 1/(zq;q)_inf normalization:")
    g = solved[PROFILE] * poch_infinite(zf(1, 1, 1), window).invert()
    solver_series = g.collapse_z()
    print("  matches enumeration:", solver_series == enum)
    print()

    diff = solver_series.first_difference(product)
    print("first difference vs product:", "none" if diff is None else diff)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
