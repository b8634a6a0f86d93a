"""Cyclic binary strings with minimum block lengths, and the bijection with
digitally convex sets of cycle powers.

A string is read cyclically, so a run of equal bits touching both ends is a
single block.  For k >= 2, the family of interest is the length-n strings
whose cyclic blocks all have length >= k (when n < k only the two constant
strings qualify).  Its cardinality a_count(k, n) satisfies a short linear
recurrence, and for k+1 these strings are exactly the indicator strings of
the digitally convex sets of the k-th power of an n-cycle, with vertex x
contributing ones at positions x..x+k (mod n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .convexity import EnumerationBudget, is_digitally_convex
from .errors import BudgetExceededError, InvalidParameterError, NotConvexError, NotMemberError
from .graphs import VertexSet, graph_power, make_cycle
from .sequences import LinearRecurrence, PowerSeries, eval_recurrence, expand_rational


@dataclass(frozen=True)
class CyclicBinaryString:
    """A cyclically-read bit string; position 0 prints leftmost."""

    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if len(self.bits) < 1:
            raise InvalidParameterError("string must have length >= 1")
        if any(b not in (0, 1) for b in self.bits):
            raise InvalidParameterError("bits must be 0 or 1")

    @classmethod
    def from_text(cls, text: str) -> "CyclicBinaryString":
        if not text or any(c not in "01" for c in text):
            raise InvalidParameterError(f"string text must be nonempty over 0/1, got {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_code(cls, n: int, code: int) -> "CyclicBinaryString":
        """Decode an n-bit integer; position 0 is the most significant bit."""
        if n < 1:
            raise InvalidParameterError(f"length must be >= 1, got {n}")
        if not 0 <= code < 1 << n:
            raise InvalidParameterError(f"code {code} out of range for length {n}")
        return cls(tuple(code >> (n - 1 - i) & 1 for i in range(n)))

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def code(self) -> int:
        """The integer whose most significant bit is position 0."""
        value = 0
        for b in self.bits:
            value = value << 1 | b
        return value

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class BlockProfile:
    """Maximal cyclic runs as (bit, length) pairs.

    The run containing position 0 (wraparound merged) comes first, the rest
    follow in increasing position order; lengths sum to the string length.
    """

    runs: tuple[tuple[int, int], ...]


def _cyclic_runs(bits) -> list[tuple[int, int, int]]:
    """Cyclic run decomposition as (start, bit, length) triples.

    The first triple is the run containing position 0; a wraparound run
    starts at its true cyclic start near the end of the string.
    """
    n = len(bits)
    first = bits[0]
    if all(b == first for b in bits):
        return [(0, first, n)]
    start = n
    while bits[start - 1] == first:
        start -= 1
    start %= n
    runs = []
    i, consumed = start, 0
    while consumed < n:
        b = bits[i]
        length = 1
        while length < n - consumed and bits[(i + length) % n] == b:
            length += 1
        runs.append((i, b, length))
        i = (i + length) % n
        consumed += length
    return runs


def cyclic_blocks(s: CyclicBinaryString) -> BlockProfile:
    """The cyclic run decomposition, wraparound run (if any) reported first."""
    return BlockProfile(tuple((b, length) for _, b, length in _cyclic_runs(s.bits)))


def _blocks_ok(bits, k: int) -> bool:
    """Every cyclic block has length >= k (n >= k), or the string is constant (n < k).

    Single pass with early exit; the run containing position 0 is checked
    last, after its wraparound half is known.
    """
    n = len(bits)
    first = bits[0]
    if n < k:
        return all(b == first for b in bits)
    i = 1
    while i < n and bits[i] == first:
        i += 1
    if i == n:
        return True
    cur = bits[i]
    length = 1
    for j in range(i + 1, n):
        if bits[j] == cur:
            length += 1
        else:
            if length < k:
                return False
            cur = bits[j]
            length = 1
    if cur == first:
        return length + i >= k
    return length >= k and i >= k


def is_member_B(k: int, s: CyclicBinaryString) -> bool:
    """Membership in the family of strings with all cyclic blocks >= k."""
    if k < 2:
        raise InvalidParameterError(f"k must be >= 2, got {k}")
    return _blocks_ok(s.bits, k)


def enumerate_B(k: int, n: int, budget: EnumerationBudget | None = None) -> Iterator[CyclicBinaryString]:
    """Yield all members of length n in increasing code order.

    Position 0 is the most significant bit of the code, and rotations are
    distinct members (no necklace quotienting).
    """
    if k < 2:
        raise InvalidParameterError(f"k must be >= 2, got {k}")
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if budget is None:
        budget = EnumerationBudget()
    required = 1 << n
    if required > budget.max_subsets:
        raise BudgetExceededError(required, budget.max_subsets, what="strings")
    top = n - 1
    for code in range(required):
        bits = tuple(code >> (top - i) & 1 for i in range(n))
        if _blocks_ok(bits, k):
            yield CyclicBinaryString(bits)


def _a_recurrence(k: int) -> LinearRecurrence:
    """The order-2k recurrence f(n) = 2f(n-1) - f(n-2) + f(n-2k) with its
    initial band: 2 up to n = 2k-1, then 2 + n(n-2k+1) through n = 2k+2."""
    initial = {1: 2, 2: 2}
    for i in range(3, 2 * k):
        initial[i] = 2
    for j in range(2 * k, 2 * k + 3):
        initial[j] = 2 + j * (j - 2 * k + 1)
    return LinearRecurrence(
        taps=((1, 2), (2, -1), (2 * k, 1)),
        initial_terms=initial,
        first_recurrent_index=2 * k + 3,
    )


def a_count(k: int, n: int) -> int:
    """Number of length-n cyclic strings with all blocks >= k, via recurrence."""
    if k < 2:
        raise InvalidParameterError(f"k must be >= 2, got {k}")
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    return eval_recurrence(_a_recurrence(k), n)


def a_series(k: int, terms: int) -> PowerSeries:
    """Coefficients x^0..x^terms of the counting series
    (2x - 2x^2 + 2k x^{2k}) / (1 - 2x + x^2 - x^{2k})."""
    if k < 2:
        raise InvalidParameterError(f"k must be >= 2, got {k}")
    numerator = [0, 2, -2] + [0] * (2 * k - 3) + [2 * k]
    denominator = [1, -2, 1] + [0] * (2 * k - 3) + [-1]
    return expand_rational(numerator, denominator, terms)


def string_from_convex_set(k: int, n: int, s: VertexSet) -> CyclicBinaryString:
    """Indicator string of a digitally convex set of the k-th power of C_n.

    Each member vertex x sets positions x..x+k (mod n) to 1; the result has
    every cyclic block of length >= k+1.  Only defined on digitally convex
    inputs (checked).
    """
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    if n < 3:
        raise InvalidParameterError(f"n must be >= 3, got {n}")
    if s.universe != n:
        raise InvalidParameterError(f"set universe {s.universe} != cycle length {n}")
    g = graph_power(make_cycle(n), k)
    if not is_digitally_convex(g, s):
        raise NotConvexError(
            f"set {list(s.indices())} is not digitally convex in the power-{k} {n}-cycle"
        )
    bits = [0] * n
    for x in s:
        for j in range(k + 1):
            bits[(x + j) % n] = 1
    return CyclicBinaryString(tuple(bits))


def convex_set_from_string(k: int, n: int, s: CyclicBinaryString) -> VertexSet:
    """Inverse of string_from_convex_set.

    A block of L >= k+1 ones starting at position p yields the vertices
    p..p+L-k-1 (mod n); the constant strings map to the empty and full sets.
    Only defined on strings with all cyclic blocks >= k+1 (checked).
    """
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    if n < 3:
        raise InvalidParameterError(f"n must be >= 3, got {n}")
    if s.length != n:
        raise InvalidParameterError(f"string length {s.length} != n = {n}")
    if not _blocks_ok(s.bits, k + 1):
        raise NotMemberError(
            f"string {s} has a cyclic block shorter than {k + 1}; it matches no convex set"
        )
    if all(b == 1 for b in s.bits):
        return VertexSet.full(n)
    mask = 0
    for start, bit, length in _cyclic_runs(s.bits):
        if bit == 1:
            for t in range(length - k):
                mask |= 1 << (start + t) % n
    return VertexSet(n, mask)


def count_cycle_power(k: int, n: int) -> int:
    """Number of digitally convex sets of the k-th power of an n-cycle.

    Equals the block-string count with threshold k+1: the indicator map
    above is a bijection onto those strings.
    """
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    if n < 3:
        raise InvalidParameterError(f"n must be >= 3, got {n}")
    return a_count(k + 1, n)
