import pytest
from hypothesis import given, settings

from conftest import genperms, iet_perms, raw_tables

from rauzy import GenPerm, PermKind, format_perm, is_irreducible, parse, reduce, row_swap
from rauzy.combinat import all_reduced_tables, reduce_with_map
from rauzy.errors import EmptyRow, NotReduced, NotTwoToOne


class TestParse:
    def test_worked_example(self):
        p = parse("1 2 3 2 4 / 4 5 1 3 5")
        assert p.shape == (5, 5)
        assert p.d == 5
        assert p.kind is PermKind.QUADRATIC

    def test_smallest_iet(self):
        p = parse("1 2 / 2 1")
        assert p.d == 2
        assert p.kind is PermKind.IET

    def test_rejects_non_reduced(self):
        with pytest.raises(NotReduced):
            parse("2 1 / 1 2")

    def test_rejects_bad_counts(self):
        with pytest.raises(NotTwoToOne):
            parse("1 1 / 1 2 2")
        with pytest.raises(NotTwoToOne):
            parse("1 2 / 3 4")

    def test_rejects_missing_row(self):
        with pytest.raises(EmptyRow):
            parse("1 2 2 1")
        with pytest.raises(EmptyRow):
            parse("1 2 / ")

    def test_json_round_trip(self):
        p = parse("1 1 2 / 2 3 3")
        assert GenPerm.from_dict(p.to_dict()) == p


class TestReduce:
    def test_worked_example(self):
        got = reduce((1, 3, 2, 3, 4), (2, 4, 5, 5, 1))
        assert format_perm(got) == "1 2 3 2 4 / 3 4 5 5 1"

    def test_already_reduced(self):
        assert format_perm(reduce((1, 2), (2, 1))) == "1 2 / 2 1"

    def test_doubled_rows(self):
        assert format_perm(reduce((3, 3), (1, 1, 2, 2))) == "1 1 / 2 2 3 3"

    def test_map_is_consistent(self):
        perm, relabel = reduce_with_map((2, 4, 5, 5, 1), (1, 3, 2, 3, 4))
        assert sorted(relabel) == [1, 2, 3, 4, 5]
        assert sorted(relabel.values()) == [1, 2, 3, 4, 5]
        renamed_top = tuple(relabel[s] for s in (2, 4, 5, 5, 1))
        assert renamed_top == perm.top

    @given(raw_tables(max_d=5))
    @settings(max_examples=100, deadline=None)
    def test_idempotent(self, rows):
        once = reduce(*rows)
        assert reduce(once.top, once.bottom) == once

    @given(genperms(max_d=5))
    @settings(max_examples=100, deadline=None)
    def test_parse_format_round_trip(self, p):
        assert parse(format_perm(p)) == p


class TestRowSwap:
    def test_simple(self):
        assert row_swap(parse("1 2 / 2 1")) == ((2, 1), (1, 2))
        assert row_swap(parse("1 1 / 2 2 3 3")) == ((2, 2, 3, 3), (1, 1))

    @given(genperms(max_d=5))
    @settings(max_examples=50, deadline=None)
    def test_involution(self, p):
        assert row_swap(row_swap(p)) == (p.top, p.bottom)

    @given(genperms(min_d=2, max_d=5))
    @settings(max_examples=60, deadline=None)
    def test_irreducibility_invariant(self, p):
        swapped = reduce(*row_swap(p))
        assert is_irreducible(swapped) == is_irreducible(p)


class TestIrreducible:
    def test_torus(self):
        assert is_irreducible(parse("1 2 / 2 1"))

    def test_doubled_pair_is_reducible(self):
        assert not is_irreducible(parse("1 1 / 2 2"))

    def test_identity_iet_is_reducible(self):
        assert not is_irreducible(parse("1 2 3 / 1 2 3"))

    def test_paper_example_is_irreducible(self):
        assert is_irreducible(parse("1 2 3 2 4 / 4 5 1 3 5"))


def _prefix_irreducible(bottom):
    """Classical test for tables with top row 1..d."""
    seen = set()
    for k, b in enumerate(bottom[:-1], start=1):
        seen.add(b)
        if seen == set(range(1, k + 1)):
            return False
    return True


@pytest.mark.parametrize("d,expected", [(2, 1), (3, 3), (4, 13), (5, 71)])
def test_iet_irreducible_counts_match_classical(d, expected):
    from itertools import permutations

    top = tuple(range(1, d + 1))
    classical = feasibility = 0
    for bottom in permutations(top):
        if _prefix_irreducible(bottom):
            classical += 1
        if is_irreducible(GenPerm(top, bottom)):
            feasibility += 1
    assert classical == expected
    assert feasibility == expected


@given(iet_perms(max_d=6))
@settings(max_examples=150, deadline=None)
def test_feasibility_matches_classical_criterion(p):
    assert is_irreducible(p) == _prefix_irreducible(p.bottom)


def test_all_reduced_tables_counts():
    # (2d-1) row splits, double-factorial pairings each, no duplicates.
    for d, pairings in [(1, 1), (2, 3), (3, 15)]:
        tables = list(all_reduced_tables(d))
        assert len(tables) == (2 * d - 1) * pairings
        assert len(set(tables)) == len(tables)
        for top, bottom in tables:
            q = reduce(top, bottom)
            assert (q.top, q.bottom) == (top, bottom)
