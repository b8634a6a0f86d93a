"""Cyclic block strings and the bijection with convex sets of cycle powers.

The convex sets of C_n^k correspond one-to-one with cyclic binary strings
whose maximal constant blocks all have length at least k+1. This walks
through the correspondence on a concrete example and then checks it in
bulk for a small cycle.
"""

from digicon import (
    CyclicBinaryString,
    VertexSet,
    convex_set_from_string,
    cyclic_blocks,
    enumerate_B,
    is_member_B,
    string_from_convex_set,
)


def main():
    # The worked example: S = {v1, v7} inside the squared 7-cycle.
    s = VertexSet.from_indices(7, [0, 6])
    image = string_from_convex_set(2, 7, s)
    print(f"S = {{v1, v7}} in C_7^2 maps to the string {image}")
    print("each member vertex v stamps ones on positions v..v+2 (mod 7)")

    profile = cyclic_blocks(image)
    print(f"cyclic blocks of {image}: {profile.runs}")
    print("every block has length >= 3, so the string is in the family")
    assert is_member_B(3, image)

    back = convex_set_from_string(2, 7, image)
    print(f"decoding the string recovers {sorted(back.indices())}\n")
    assert back == s

    # A string that fails the block condition has no convex preimage.
    stray = CyclicBinaryString.from_text("1111110")
    print(f"{stray} has blocks {cyclic_blocks(stray).runs}; the lone zero")
    print("is a too-short block, so no convex set maps there\n")
    assert not is_member_B(3, stray)

    print("the family B(3, 9), one string per line:")
    for member in enumerate_B(3, 9):
        print(f"  {member}  blocks {cyclic_blocks(member).runs}")


if __name__ == "__main__":
    main()
