"""Exact feasibility and witness extraction for small rational linear systems.

Systems are lists of inequality rows ``(coeffs, const)`` meaning
``sum(coeffs[i] * x[i]) + const >= 0`` with integer entries, plus optional
equality rows with the analogous meaning.  Feasibility is decided by
Fourier-Motzkin elimination over the integers (rows are gcd-normalised and
deduplicated after every round), which is exact and fast at the dimensions
used here (at most a couple dozen variables).

Witness extraction runs one elimination pass recording the intermediate
projections, then assigns variables forward: at each step the recorded
projection yields the exact feasible interval for the next variable given
the values already chosen, and a caller-supplied rule picks a value in it.
With the default rule the witness is deterministic and preferentially built
from small integers.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Optional, Sequence

Row = tuple[tuple[int, ...], int]
IntervalChooser = Callable[[int, Optional[Fraction], Optional[Fraction]], Fraction]


class _Contradiction(Exception):
    pass


def _norm(coeffs: Sequence[int], const: int) -> Row | None:
    """gcd-normalise; return None for tautologies, raise on contradictions."""
    g = 0
    for a in coeffs:
        g = gcd(g, a)
    if g == 0:
        if const < 0:
            raise _Contradiction
        return None
    g = gcd(g, const)
    if g > 1:
        coeffs = [a // g for a in coeffs]
        const //= g
    return (tuple(coeffs), const)


def _combine(pos: Row, neg: Row, j: int) -> Row | None:
    """Eliminate variable ``j`` from a (positive, negative) coefficient pair."""
    a = pos[0][j]
    b = -neg[0][j]
    coeffs = [b * p + a * n for p, n in zip(pos[0], neg[0])]
    return _norm(coeffs, b * pos[1] + a * neg[1])


def _eliminate(rows: set[Row], j: int) -> set[Row]:
    pos = [r for r in rows if r[0][j] > 0]
    neg = [r for r in rows if r[0][j] < 0]
    out = {r for r in rows if r[0][j] == 0}
    for p in pos:
        for n in neg:
            row = _combine(p, n, j)
            if row is not None:
                out.add(row)
    return out


def _reduce_equalities(
    nvars: int,
    ineqs: Sequence[Row],
    eqs: Sequence[Row],
) -> tuple[list[Row], list[int], list[tuple[int, tuple[Fraction, ...], Fraction]]]:
    """Solve the equality rows by exact Gaussian elimination.

    Returns inequality rows rewritten over the free variables, the list of
    free variable indices, and the pivot substitutions
    ``(var, coeffs_over_free, const)`` with ``x[var] = sum(c*x_free) + const``.
    """
    work = [
        ([Fraction(a) for a in coeffs], Fraction(const)) for coeffs, const in eqs
    ]
    pivots: list[tuple[int, list[Fraction], Fraction]] = []
    pivot_vars: set[int] = set()
    for coeffs, const in work:
        for done_var, expr, c0 in pivots:
            f = coeffs[done_var]
            if f:
                coeffs[done_var] = Fraction(0)
                for k in range(nvars):
                    coeffs[k] += f * expr[k]
                const += f * c0
        var = max((k for k in range(nvars) if coeffs[k]), default=-1)
        if var < 0:
            if const != 0:
                raise _Contradiction
            continue
        lead = coeffs[var]
        expr_row = [-coeffs[k] / lead for k in range(nvars)]
        expr_row[var] = Fraction(0)
        pivots.append((var, expr_row, -const / lead))
        pivot_vars.add(var)
    # Back-substitute so every pivot expression mentions free variables only.
    for i in range(len(pivots) - 1, -1, -1):
        var, expr, c0 = pivots[i]
        for j in range(i + 1, len(pivots)):
            var_j, expr_j, c0_j = pivots[j]
            f = expr[var_j]
            if f:
                expr[var_j] = Fraction(0)
                for k in range(nvars):
                    expr[k] += f * expr_j[k]
                c0 += f * c0_j
        pivots[i] = (var, expr, c0)
    free = [k for k in range(nvars) if k not in pivot_vars]

    out_rows: list[Row] = []
    for coeffs, const in ineqs:
        acc = [Fraction(a) for a in coeffs]
        c = Fraction(const)
        for var, expr, c0 in pivots:
            f = acc[var]
            if f:
                acc[var] = Fraction(0)
                for k in range(nvars):
                    acc[k] += f * expr[k]
                c += f * c0
        packed = [acc[v] for v in free]
        denom = 1
        for val in packed + [c]:
            denom = denom * val.denominator // gcd(denom, val.denominator)
        row = _norm([int(v * denom) for v in packed], int(c * denom))
        if row is not None:
            out_rows.append(row)
    frozen = [
        (var, tuple(expr[v] for v in free), c0) for var, expr, c0 in pivots
    ]
    return out_rows, free, frozen


def feasible(nvars: int, ineqs: Sequence[Row], eqs: Sequence[Row] = ()) -> bool:
    """Exact feasibility of the closed system over the rationals."""
    try:
        if eqs:
            rows_list, free, _ = _reduce_equalities(nvars, ineqs, eqs)
            rows = set(rows_list)
            width = len(free)
        else:
            rows = set()
            for coeffs, const in ineqs:
                row = _norm(coeffs, const)
                if row is not None:
                    rows.add(row)
            width = nvars
        remaining = list(range(width))
        while remaining:
            # Cheapest variable first keeps intermediate systems small.
            counts = []
            for j in remaining:
                p = sum(1 for r in rows if r[0][j] > 0)
                n = sum(1 for r in rows if r[0][j] < 0)
                counts.append((p * n, j))
            _, j = min(counts)
            rows = _eliminate(rows, j)
            remaining.remove(j)
    except _Contradiction:
        return False
    return True


def canonical_choice(
    index: int, lo: Optional[Fraction], hi: Optional[Fraction]
) -> Fraction:
    """Smallest-magnitude preference: 0 when allowed, else the nearer bound."""
    del index
    if (lo is None or lo <= 0) and (hi is None or hi >= 0):
        return Fraction(0)
    if lo is not None and lo > 0:
        return lo
    assert hi is not None
    return hi


def solve(
    nvars: int,
    ineqs: Sequence[Row],
    eqs: Sequence[Row] = (),
    choose: IntervalChooser = canonical_choice,
) -> list[Fraction] | None:
    """Return an exact solution vector, or None when infeasible.

    ``choose(var_index, lo, hi)`` picks a value in the (possibly unbounded)
    exact feasible interval for that variable; the projection guarantees any
    value in the interval extends to a full solution.
    """
    try:
        rows_list, free, pivots = _reduce_equalities(nvars, ineqs, eqs)
    except _Contradiction:
        return None
    rows = set(rows_list)
    width = len(free)

    stack: list[set[Row]] = []
    try:
        for j in range(width - 1, -1, -1):
            stack.append(rows)
            rows = _eliminate(rows, j)
    except _Contradiction:
        return None

    values: list[Fraction] = []
    for j in range(width):
        system = stack.pop() if stack else set()
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for coeffs, const in system:
            a = coeffs[j]
            if a == 0:
                continue
            rest = Fraction(const)
            for k in range(j):
                rest += coeffs[k] * values[k]
            bound = -rest / a
            if a > 0:
                if lo is None or bound > lo:
                    lo = bound
            else:
                if hi is None or bound < hi:
                    hi = bound
        if lo is not None and hi is not None and lo > hi:
            return None
        values.append(choose(free[j], lo, hi))

    full = [Fraction(0)] * nvars
    for idx, v in enumerate(free):
        full[v] = values[idx]
    for var, expr, c0 in pivots:
        full[var] = sum(
            (f * values[k] for k, f in enumerate(expr) if f), start=Fraction(0)
        ) + c0
    return full
