"""Regenerate the bundled grid-count sequence snapshot.

Writes src/digicon/data/A217637.txt: the numbers of digitally convex sets
of P_n x P_m for every cell with n*m <= 20, laid out by antidiagonals with
the standard index (n+m-1)(n+m-2)/2 + n, so (1,1) -> 1, (1,2) -> 2,
(2,1) -> 3, and so on.  Values come from the exhaustive subset sweep (the
brute-force oracle), deliberately not from the array-transform route that
the comparison tooling exercises, so the two sides of the diff stay
independent.  Cells beyond the n*m cap are simply absent, which the parser
and comparison tolerate.

Run from the repository root:  python3 tools/regen_bfile.py
"""

from pathlib import Path

from digicon import cartesian_product, count_digitally_convex, make_path

MAX_CELLS = 20


def antidiagonal_index(n: int, m: int) -> int:
    d = n + m
    return (d - 1) * (d - 2) // 2 + n


def main():
    rows = []
    for n in range(1, MAX_CELLS + 1):
        for m in range(1, MAX_CELLS // n + 1):
            grid = cartesian_product(make_path(n), make_path(m))
            rows.append((antidiagonal_index(n, m), count_digitally_convex(grid), n, m))
    rows.sort()
    out = Path(__file__).resolve().parent.parent / "src" / "digicon" / "data" / "A217637.txt"
    with out.open("w") as fh:
        fh.write("# Numbers of digitally convex sets of P_n x P_m, read by antidiagonals:\n")
        fh.write("# index (n+m-1)(n+m-2)/2 + n; computed by exhaustive subset enumeration\n")
        fh.write(f"# for every cell with n*m <= {MAX_CELLS} (larger cells are absent).\n")
        for index, value, n, m in rows:
            fh.write(f"{index} {value}  # ({n},{m})\n")
    print(f"wrote {len(rows)} entries to {out}")


if __name__ == "__main__":
    main()
