"""Counting the digitally convex sets of cycle powers, three ways.

A set S of vertices is digitally convex when every vertex outside S still
has a private neighbour: some vertex of its closed neighbourhood that
N[S] does not reach. This script counts those sets for C_n^k by

  1. sweeping all 2^n subsets and testing the definition,
  2. evaluating the closed-form linear recurrence, and
  3. expanding the rational generating function,

and shows that the three answers never disagree.
"""

from digicon import (
    a_series,
    count_cycle_power,
    count_digitally_convex,
    graph_power,
    make_cycle,
)


def main():
    for k in (1, 2, 3):
        print(f"k = {k}  (each vertex sees {k} steps around the cycle)")
        print(f"{'n':>4} {'bruteforce':>12} {'recurrence':>12} {'series':>12}")
        series = a_series(k + 1, 20)
        for n in range(3, 15):
            brute = count_digitally_convex(graph_power(make_cycle(n), k))
            fast = count_cycle_power(k, n)
            assert brute == fast == series[n]
            print(f"{n:>4} {brute:>12} {fast:>12} {series[n]:>12}")
        print()

    print("The recurrence keeps going long after brute force becomes silly:")
    for n in (50, 100, 200):
        print(f"  n = {n:>3}: {count_cycle_power(1, n)}")


if __name__ == "__main__":
    main()
