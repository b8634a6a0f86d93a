"""Digital convex hulls as a picture.

The digital convex hull of a pixel set adds every pixel whose whole
closed neighbourhood is already reachable from the set, until nothing
more can be added. On a grid graph that behaves like a discrete version
of filling in a shape. This renders a 5 x 5 example before and after.
"""

from digicon import (
    VertexSet,
    cartesian_product,
    digital_convex_hull,
    is_digitally_convex,
    make_path,
)

SIDE = 5


def render(s, marked=()):
    for r in range(SIDE):
        row = []
        for c in range(SIDE):
            v = SIDE * r + c
            if v in marked:
                row.append("+")
            elif v in s:
                row.append("#")
            else:
                row.append(".")
        print("   " + " ".join(row))
    print()


def main():
    g = cartesian_product(make_path(SIDE), make_path(SIDE))
    at = lambda r, c: SIDE * r + c
    seed = VertexSet.from_indices(
        SIDE * SIDE,
        [at(1, 0), at(1, 1), at(3, 1), at(4, 2), at(2, 3), at(3, 3), at(2, 4)],
    )
    print("seed pixels (# = in the set):")
    render(seed)
    print(f"seed is digitally convex already? {is_digitally_convex(g, seed)}\n")

    hull = digital_convex_hull(g, seed)
    gained = set(hull.indices()) - set(seed.indices())
    print("hull (+ = pixels the closure added):")
    render(seed, marked=gained)

    assert is_digitally_convex(g, hull)
    assert digital_convex_hull(g, hull) == hull
    print(f"{len(seed)} seed pixels grew to {len(hull)}; the hull is stable.")


if __name__ == "__main__":
    main()
