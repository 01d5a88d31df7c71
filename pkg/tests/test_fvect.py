import itertools
import math

import pytest
from hypothesis import given, strategies as st

from fonerep.errors import DimMismatch, GroupMismatch, NonInjective, NotEpi, NotMono
from fonerep.fvect import (
    TRIVIAL, Matrix, PointedGroup, Space, cokernel, compose, count_submonomial, direct_sum,
    enumerate_idempotents, enumerate_invertible, enumerate_matrices, image, kernel, orbit_space,
    pullback, pushout, scalar_extend, split_exact, star, submonomial,
)

GROUPS = [PointedGroup([]), PointedGroup([2]), PointedGroup([3]), PointedGroup([2, 2])]


@st.composite
def matrices(draw, group=None, rows=None, cols=None):
    G = group if group is not None else draw(st.sampled_from(GROUPS))
    m = rows if rows is not None else draw(st.integers(0, 4))
    n = cols if cols is not None else draw(st.integers(0, 4))
    targets = draw(st.permutations(list(range(max(m, n)))))
    entries = []
    for j in range(n):
        r = targets[j]
        if r >= m or draw(st.booleans()) and draw(st.booleans()):
            entries.append(None)
        else:
            entries.append((r, draw(st.integers(0, G.size - 1))))
    return Matrix(G, m, n, entries)


@st.composite
def composable(draw, k=3):
    G = draw(st.sampled_from(GROUPS))
    dims = [draw(st.integers(0, 4)) for _ in range(k + 1)]
    return [draw(matrices(G, dims[i], dims[i + 1])) for i in range(k)]


def brute_count(n, G):
    return sum(1 for _ in enumerate_matrices(G, n, n))


# -- group ------------------------------------------------------------------

def test_group_encoding_round_trip():
    G = PointedGroup([2, 3])
    assert G.size == 6
    for g in G.elements:
        assert G.encode(G.decode(g)) == g
    assert G.exponent == 6


def test_group_axioms():
    for G in GROUPS:
        for a, b, c in itertools.product(G.elements, repeat=3):
            assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
        for a in G.elements:
            assert G.mul(a, G.inv(a)) == 0
            assert G.mul(a, None) is None


# -- counting ---------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("order", [1, 2, 3])
def test_count_matches_enumeration(n, order):
    G = PointedGroup([order] if order > 1 else [])
    assert count_submonomial(n, order) == brute_count(n, G)


def test_known_counts():
    assert count_submonomial(2, 1) == 7
    assert count_submonomial(2, 2) == 17
    assert count_submonomial(3, 1) == 34


def test_enumerations_are_distinct_and_typed():
    G = PointedGroup([2])
    inv = list(enumerate_invertible(G, 3))
    assert len(inv) == len(set(inv)) == math.factorial(3) * 8
    assert all(A.is_invertible() for A in inv)
    idem = list(enumerate_idempotents(G, 3))
    assert len(idem) == 8
    assert all(compose(E, E) == E for E in idem)


# -- basic operations -------------------------------------------------------

def test_submonomial_builds_expected_columns():
    A = submonomial(TRIVIAL, 3, 3, [0, 2], {0: 1, 2: 0}, {1: 0, 0: 0})
    assert A.entries == ((1, 0), None, (0, 0))
    with pytest.raises(NonInjective):
        submonomial(TRIVIAL, 3, 3, [0, 2], {0: 1, 2: 1}, {1: 0})


def test_constructor_validation():
    with pytest.raises(NonInjective):
        Matrix(TRIVIAL, 2, 2, [(0, 0), (0, 0)])
    with pytest.raises(DimMismatch):
        Matrix(TRIVIAL, 2, 2, [(0, 0)])
    with pytest.raises(DimMismatch):
        compose(Matrix.identity(TRIVIAL, 2), Matrix.identity(TRIVIAL, 3))
    with pytest.raises(GroupMismatch):
        compose(Matrix.identity(TRIVIAL, 2), Matrix.identity(PointedGroup([2]), 2))


@given(composable())
def test_compose_associative(ms):
    A, B, C = ms
    assert compose(compose(A, B), C) == compose(A, compose(B, C))


@given(matrices())
def test_star_is_generalized_inverse(A):
    assert star(star(A)) == A
    assert compose(compose(A, star(A)), A) == A
    assert compose(compose(star(A), A), star(A)) == star(A)


@given(composable(2))
def test_star_reverses_products(ms):
    A, B = ms
    assert star(compose(A, B)) == compose(star(B), star(A))


@given(matrices())
def test_apply_agrees_with_compose(A):
    for j in range(A.cols):
        for g in A.group.elements:
            v = (g, j)
            col = Matrix(A.group, A.cols, 1, [(j, g)])
            out = compose(A, col).entries[0]
            assert A.apply(v) == (None if out is None else (out[1], out[0]))


@given(matrices())
def test_kernel_image_cokernel(A):
    K = kernel(A)
    assert compose(A, K).is_zero()
    assert K.is_injective()
    I = image(A)
    assert I.cols == A.rank
    C = cokernel(A)
    assert compose(C, A).is_zero()
    assert C.is_surjective()
    assert A.rank + K.cols == A.cols


@given(matrices(), matrices())
def test_direct_sum_blocks(A, B):
    if A.group != B.group:
        with pytest.raises(GroupMismatch):
            direct_sum(A, B)
        return
    S = direct_sum(A, B)
    assert (S.rows, S.cols) == (A.rows + B.rows, A.cols + B.cols)
    assert S.rank == A.rank + B.rank


@given(matrices())
def test_json_round_trip(A):
    assert Matrix.from_json(A.to_json(), A.group) == A


@given(matrices(group=TRIVIAL))
def test_scalar_extension_and_orbit_space(A):
    G = PointedGroup([3])
    B = scalar_extend(A, G)
    assert B.group == G and orbit_space(B) == A
    assert scalar_extend(Space(TRIVIAL, 3), G) == Space(G, 3)


# -- proto-abelian constructions --------------------------------------------

def _monos(G, a, b):
    return [M for M in enumerate_matrices(G, b, a) if M.is_injective()]


def _epis(G, a, c):
    return [P for P in enumerate_matrices(G, c, a) if P.is_surjective()]


@pytest.mark.parametrize("G", GROUPS[:2], ids=["F1", "Z2"])
def test_pushout_universal_property(G):
    checked = 0
    for a, b, c in itertools.product(range(3), repeat=3):
        if a > b or c > a:
            continue
        for i in _monos(G, a, b):
            for p in _epis(G, a, c):
                D, pB, iC = pushout(i, p)
                assert compose(pB, i) == compose(iC, p)
                for x in range(3):
                    maps = list(enumerate_matrices(G, x, D.dim))
                    for f in enumerate_matrices(G, x, b):
                        for g in enumerate_matrices(G, x, c):
                            if compose(f, i) != compose(g, p):
                                continue
                            mediating = [u for u in maps if compose(u, pB) == f and compose(u, iC) == g]
                            assert len(mediating) == 1
                            checked += 1
    assert checked > 0


@pytest.mark.parametrize("G", GROUPS[:2], ids=["F1", "Z2"])
def test_pullback_universal_property(G):
    checked = 0
    for b, c, d in itertools.product(range(3), repeat=3):
        if d > b or c > d:
            continue
        for p in _epis(G, b, d):
            for i in _monos(G, c, d):
                A, iB, pC = pullback(p, i)
                assert compose(p, iB) == compose(i, pC)
                for y in range(3):
                    maps = list(enumerate_matrices(G, A.dim, y))
                    for f in enumerate_matrices(G, b, y):
                        for g in enumerate_matrices(G, c, y):
                            if compose(p, f) != compose(i, g):
                                continue
                            mediating = [u for u in maps if compose(iB, u) == f and compose(pC, u) == g]
                            assert len(mediating) == 1
                            checked += 1
    assert checked > 0


def test_pushout_rejects_non_mono_and_non_epi():
    z = Matrix.zero(TRIVIAL, 1, 1)
    one = Matrix.identity(TRIVIAL, 1)
    with pytest.raises(NotMono):
        pushout(z, one)
    with pytest.raises(NotEpi):
        pushout(one, z)


def test_pushout_example():
    # A = 1, B = 2 (A -> e1), C = 0: D = B / A
    i = Matrix(TRIVIAL, 2, 1, [(0, 0)])
    p = Matrix(TRIVIAL, 0, 1, [None])
    D, pB, iC = pushout(i, p)
    assert D.dim == 1 and pB.entries == (None, (0, 0))


def test_split_exact():
    G = PointedGroup([2])
    i = Matrix(G, 3, 1, [(1, 1)])
    p = Matrix(G, 2, 3, [(1, 1), None, (0, 0)])
    phi = split_exact(i, p)
    assert phi.is_invertible()
    assert compose(phi, i) == Matrix(G, 3, 1, [(0, 0)])
    with pytest.raises(DimMismatch):
        split_exact(i, Matrix(G, 2, 3, [(1, 1), (0, 0), None]))
