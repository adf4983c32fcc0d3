from hypothesis import strategies as st

from rauzy import GenPerm


@st.composite
def raw_tables(draw, min_d=1, max_d=5):
    """Random two-to-one tables (not necessarily reduced)."""
    d = draw(st.integers(min_d, max_d))
    positions = draw(st.permutations(list(range(2 * d))))
    l = draw(st.integers(1, 2 * d - 1))
    cells = [0] * (2 * d)
    for sym in range(1, d + 1):
        cells[positions[2 * sym - 2]] = sym
        cells[positions[2 * sym - 1]] = sym
    return tuple(cells[:l]), tuple(cells[l:])


@st.composite
def genperms(draw, min_d=1, max_d=5):
    """Random reduced generalized permutations."""
    from rauzy import reduce

    top, bottom = draw(raw_tables(min_d, max_d))
    return reduce(top, bottom)


_POOLS: dict[int, list[GenPerm]] = {}


def _irreducible_pool(d: int) -> list[GenPerm]:
    from rauzy import PermKind, enumerate_irreducible

    if d not in _POOLS:
        pool = list(enumerate_irreducible(d, PermKind.IET))
        if d >= 3:
            pool += list(enumerate_irreducible(d, PermKind.QUADRATIC))
        _POOLS[d] = pool
    return _POOLS[d]


@st.composite
def irreducible_genperms(draw, min_d=2, max_d=5):
    """Random irreducible permutation or generalized permutation."""
    d = draw(st.integers(min_d, max_d))
    pool = _irreducible_pool(d)
    return pool[draw(st.integers(0, len(pool) - 1))]


@st.composite
def iet_perms(draw, min_d=2, max_d=6):
    d = draw(st.integers(min_d, max_d))
    bottom = tuple(draw(st.permutations(list(range(1, d + 1)))))
    return GenPerm(tuple(range(1, d + 1)), bottom)
