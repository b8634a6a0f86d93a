"""Recurrence evaluation, series expansion, and sequence-file comparison."""

import json

import pytest
from hypothesis import given, strategies as st

from digicon import (
    BfileParseError,
    EmptyOverlapError,
    InvalidParameterError,
    LinearRecurrence,
    PowerSeries,
    compare_with_bfile,
    eval_recurrence,
    expand_rational,
    parse_bfile,
)


# --- recurrence evaluation ---


def test_identity_recurrence_is_constant():
    rec = LinearRecurrence(taps=((1, 1),), initial_terms={0: 7}, first_recurrent_index=1)
    assert eval_recurrence(rec, 0) == 7
    assert eval_recurrence(rec, 100) == 7


def test_three_term_ladder_recurrence():
    rec = LinearRecurrence(
        taps=((1, 1), (2, 3), (3, 2)),
        initial_terms={1: 2, 2: 6, 3: 16},
        first_recurrent_index=4,
    )
    assert eval_recurrence(rec, 4) == 38
    assert eval_recurrence(rec, 5) == 98
    assert eval_recurrence(rec, 6) == 244


def test_recurrence_big_integers_stay_exact():
    fib = LinearRecurrence(
        taps=((1, 1), (2, 1)), initial_terms={0: 0, 1: 1}, first_recurrent_index=2
    )
    f300 = eval_recurrence(fib, 300)
    f299 = eval_recurrence(fib, 299)
    f298 = eval_recurrence(fib, 298)
    assert f300 == f299 + f298
    assert f300 > 10**60


def test_recurrence_rejects_index_below_range():
    rec = LinearRecurrence(taps=((1, 1),), initial_terms={1: 2}, first_recurrent_index=2)
    with pytest.raises(InvalidParameterError):
        eval_recurrence(rec, 0)


def test_recurrence_rejects_gap_in_initials():
    rec = LinearRecurrence(
        taps=((1, 1),), initial_terms={1: 2, 3: 4}, first_recurrent_index=4
    )
    with pytest.raises(InvalidParameterError):
        eval_recurrence(rec, 2)


def test_recurrence_rejects_missing_back_reference():
    rec = LinearRecurrence(
        taps=((3, 1),), initial_terms={1: 1, 2: 1}, first_recurrent_index=3
    )
    with pytest.raises(InvalidParameterError):
        eval_recurrence(rec, 3)  # would need term 0


def test_recurrence_validation():
    with pytest.raises(InvalidParameterError):
        LinearRecurrence(taps=(), initial_terms={0: 1}, first_recurrent_index=1)
    with pytest.raises(InvalidParameterError):
        LinearRecurrence(taps=((0, 1),), initial_terms={0: 1}, first_recurrent_index=1)
    with pytest.raises(InvalidParameterError):
        LinearRecurrence(taps=((1, 1),), initial_terms={}, first_recurrent_index=1)


# --- power series ---


def test_power_series_basics():
    series = PowerSeries((1, 2, 3))
    assert len(series) == 3
    assert series[2] == 3


def test_expand_geometric_series():
    assert tuple(expand_rational([1], [1, -1], 6).coefficients) == (1,) * 7


def test_expand_squared_geometric_counts():
    got = expand_rational([1], [1, -2, 1], 6)
    assert [got[i] for i in range(7)] == [1, 2, 3, 4, 5, 6, 7]


def test_expand_handles_minus_one_constant():
    got = expand_rational([1], [-1, 1], 4)
    assert tuple(got.coefficients) == (-1, -1, -1, -1, -1)


def test_expand_accepts_power_series_input():
    num = PowerSeries((0, 2, -2, 0, 4))
    den = PowerSeries((1, -2, 1, 0, -1))
    got = expand_rational(num, den, 6)
    assert [got[i] for i in range(7)] == [0, 2, 2, 2, 6, 12, 20]


def test_expand_zero_terms_is_the_constant():
    assert tuple(expand_rational([3], [1, -1], 0).coefficients) == (3,)


def test_expand_validation():
    with pytest.raises(InvalidParameterError):
        expand_rational([1], [2], 3)
    with pytest.raises(InvalidParameterError):
        expand_rational([1], [], 3)
    with pytest.raises(InvalidParameterError):
        expand_rational([1], [1, -1], -1)


@given(
    st.lists(st.integers(-9, 9), min_size=1, max_size=6),
    st.lists(st.integers(-9, 9), min_size=0, max_size=5),
    st.sampled_from([1, -1]),
)
def test_expansion_satisfies_the_convolution_identity(num, den_tail, lead):
    """den * expansion == num through the requested order."""
    den = [lead] + den_tail
    series = expand_rational(num, den, 25)
    for i in range(26):
        acc = sum(den[j] * series[i - j] for j in range(min(i, len(den) - 1) + 1))
        expected = num[i] if i < len(num) else 0
        assert acc == expected


@given(st.data())
def test_expansion_matches_recurrence_evaluation(data):
    """A rational series and its companion recurrence give the same terms."""
    offsets = sorted(data.draw(st.sets(st.integers(1, 4), min_size=1, max_size=3)))
    taps = tuple(
        (o, data.draw(st.integers(-3, 3).filter(lambda c: c != 0))) for o in offsets
    )
    depth = max(offsets)
    initials = {i: data.draw(st.integers(-5, 5)) for i in range(depth)}
    rec = LinearRecurrence(taps=taps, initial_terms=initials, first_recurrent_index=depth)
    den = [1] + [0] * depth
    for o, c in taps:
        den[o] -= c
    num = [
        sum(den[j] * initials.get(i - j, 0) for j in range(min(i, depth) + 1))
        for i in range(depth)
    ] or [initials.get(0, 0)]
    series = expand_rational(num, den, 30)
    for n in range(31):
        assert series[n] == eval_recurrence(rec, n)


# --- b-file parsing ---


def test_parse_bfile_from_lines():
    lines = [
        "# header comment",
        "",
        "1 2",
        "  2 6   ",
        "3 16  # trailing note",
    ]
    assert parse_bfile(lines) == [(1, 2), (2, 6), (3, 16)]


def test_parse_bfile_from_path(tmp_path):
    path = tmp_path / "b.txt"
    path.write_text("# c\n1 5\n2 -7\n")
    assert parse_bfile(path) == [(1, 5), (2, -7)]
    assert parse_bfile(str(path)) == [(1, 5), (2, -7)]


def test_parse_bfile_reports_line_numbers():
    with pytest.raises(BfileParseError) as exc:
        parse_bfile(["1 2", "3 x"])
    assert exc.value.line_number == 2
    assert "line 2" in str(exc.value)

    with pytest.raises(BfileParseError) as exc:
        parse_bfile(["1 2 3"])
    assert exc.value.line_number == 1

    with pytest.raises(BfileParseError) as exc:
        parse_bfile(["7"])
    assert exc.value.line_number == 1


def test_parse_bfile_rejects_duplicate_index():
    with pytest.raises(BfileParseError) as exc:
        parse_bfile(["1 2", "# skip", "1 3"])
    assert exc.value.line_number == 3
    assert "duplicate" in str(exc.value)


# --- comparison reports ---


def test_compare_all_match():
    report = compare_with_bfile([(1, 2), (2, 6)], ["1 2", "2 6"])
    assert report.matched == 2
    assert report.all_match
    assert report.mismatches == []
    assert report.only_left == []
    assert report.only_right == []


def test_compare_single_perturbation():
    values = [(1, 2), (2, 6), (3, 16)]
    report = compare_with_bfile(values, ["1 2", "2 7", "3 16"])
    assert not report.all_match
    assert report.matched == 2
    assert report.mismatches == [(2, 7, 6)]  # index, file value, computed value


def test_compare_tracks_one_sided_indices():
    report = compare_with_bfile([(1, 2), (5, 9)], ["1 2", "8 3"])
    assert report.only_left == [5]
    assert report.only_right == [8]
    assert report.matched == 1


def test_compare_accepts_mapping_values():
    report = compare_with_bfile({1: 2, 2: 6}, ["1 2", "2 6"])
    assert report.all_match


def test_compare_requires_overlap():
    with pytest.raises(EmptyOverlapError):
        compare_with_bfile([(1, 2)], ["9 9"])
    with pytest.raises(EmptyOverlapError):
        compare_with_bfile([(1, 2)], ["# nothing but comments"])


def test_report_serializes_counts_as_strings():
    report = compare_with_bfile([(1, 2), (2, 7)], ["1 2", "2 6"])
    doc = json.loads(report.to_json())
    assert doc["matched"] == 1
    assert doc["mismatches"] == [{"index": 2, "expected": "6", "found": "7"}]
