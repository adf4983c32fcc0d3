from fractions import Fraction

from hypothesis import given, settings, strategies as st

from rauzy.linprog import canonical_choice, feasible, solve


def test_infeasible_pair():
    # x >= 1 and -x >= 0
    rows = [((1,), -1), ((-1,), 0)]
    assert not feasible(1, rows)
    assert solve(1, rows) is None


def test_simple_interval():
    rows = [((1,), -1), ((-1,), 5)]  # 1 <= x <= 5
    assert feasible(1, rows)
    assert solve(1, rows) == [Fraction(1)]


def test_equality_substitution():
    # x + y = 4, x >= 1, y >= 1
    rows = [((1, 0), -1), ((0, 1), -1)]
    eqs = [((1, 1), -4)]
    sol = solve(2, rows, eqs)
    assert sol is not None
    assert sol[0] + sol[1] == 4 and sol[0] >= 1 and sol[1] >= 1


def test_equality_contradiction():
    eqs = [((0, 0), 3)]
    assert not feasible(2, [], eqs)
    assert solve(2, [], eqs) is None


def test_canonical_prefers_zero():
    assert canonical_choice(0, None, None) == 0
    assert canonical_choice(0, Fraction(-3), Fraction(7)) == 0
    assert canonical_choice(0, Fraction(2), None) == 2
    assert canonical_choice(0, None, Fraction(-5)) == -5


@given(
    st.lists(
        st.tuples(
            st.lists(st.integers(-4, 4), min_size=3, max_size=3).map(tuple),
            st.integers(-6, 6),
        ),
        max_size=6,
    )
)
@settings(max_examples=200, deadline=None)
def test_solution_satisfies_all_rows(rows):
    sol = solve(3, rows)
    if sol is None:
        assert not feasible(3, rows)
    else:
        assert feasible(3, rows)
        for coeffs, const in rows:
            assert sum(c * x for c, x in zip(coeffs, sol)) + const >= 0


@given(
    st.lists(
        st.tuples(
            st.lists(st.integers(-3, 3), min_size=3, max_size=3).map(tuple),
            st.integers(-5, 5),
        ),
        max_size=4,
    ),
    st.tuples(
        st.lists(st.integers(-3, 3), min_size=3, max_size=3).map(tuple),
        st.integers(-5, 5),
    ),
)
@settings(max_examples=150, deadline=None)
def test_solution_satisfies_equalities(rows, eq):
    sol = solve(3, rows, [eq])
    if sol is not None:
        coeffs, const = eq
        assert sum(c * x for c, x in zip(coeffs, sol)) + const == 0
        for coeffs, const in rows:
            assert sum(c * x for c, x in zip(coeffs, sol)) + const >= 0
