"""Digitally convex sets of K_n x K_m are rectangles (plus the trivia).

In the product of two complete graphs, a proper nonempty convex set must
factor as S1 x S2 with both factors proper and nonempty, which gives the
closed form 2 + (2^n - 2)(2^m - 2). This script prints the whole family
for a small product so the rectangle shape is visible, then checks the
formula against brute force.
"""

from digicon import (
    cartesian_product,
    count_complete_product,
    count_digitally_convex,
    enumerate_digitally_convex,
    make_complete,
)


def picture(s, n, m):
    rows = []
    for r in range(n):
        rows.append("".join("x" if r * m + c in s else "." for c in range(m)))
    return "  ".join(rows)


def main():
    n, m = 3, 2
    g = cartesian_product(make_complete(n), make_complete(m))
    print(f"K_{n} x K_{m}: columns are rows of the {n} x {m} vertex grid\n")
    for s in enumerate_digitally_convex(g):
        kind = "empty" if len(s) == 0 else "full" if len(s) == n * m else "rectangle"
        print(f"  {picture(s, n, m)}   ({kind})")
    print()

    print(f"{'n':>3} {'m':>3} {'formula':>9} {'bruteforce':>11}")
    for a in range(1, 5):
        for b in range(1, 5):
            formula = count_complete_product(a, b)
            brute = count_digitally_convex(
                cartesian_product(make_complete(a), make_complete(b))
            )
            assert formula == brute
            print(f"{a:>3} {b:>3} {formula:>9} {brute:>11}")


if __name__ == "__main__":
    main()
