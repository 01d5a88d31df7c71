import itertools
from functools import lru_cache

import pytest

from conftest import PATHS, load
from fonerep import cmp, monoid, rep
from fonerep.errors import (
    BaseNotSimple, FreenessViolated, GroupMismatch, GroupTooLarge, NotLeftInductive, NotNormal,
    ScalarMismatch, ValidationError,
)
from fonerep.fvect import Matrix, PointedGroup, compose

INDUCTIVE = ["i1_f1", "i1_z2", "i2_f1", "i2_z2", "i3_f1"] + PATHS


@lru_cache(maxsize=None)
def simples(name):
    return tuple(cmp.all_simples(load(name)))


def dims(name):
    return sorted(s.dim for s in simples(name))


# -- restriction and induction ----------------------------------------------

def test_all_simples_dims():
    assert dims("i1_f1") == [1]
    assert dims("i2_f1") == [1, 2, 2]
    assert dims("i2_z2") == [2, 2, 2, 4]
    assert dims("i3_f1") == [1, 2, 3, 3, 3, 6, 6]
    # path algebras: one simple per vertex plus the top
    assert dims("path_a2") == [1, 1, 1]


@pytest.mark.parametrize("name", INDUCTIVE)
def test_simples_are_simple_with_apex(name):
    M = load(name)
    for s in simples(name):
        rep.validate_rep(M, s.rep.action)
        assert rep.is_simple(s.rep)
        assert rep.apex(s.rep).index == s.apex


@pytest.mark.parametrize("name", INDUCTIVE)
def test_cmp_round_trips(name):
    for s in simples(name):
        e = s.idempotent
        W = cmp.restrict(s.rep, e)
        # restrict o cmp_simple = id on group simples
        assert rep.are_isomorphic(cmp.restrict(cmp.cmp_simple(W, e), e), W) is not None
        # cmp_simple o restrict = id on apex-J simples
        assert rep.are_isomorphic(cmp.cmp_simple(W, e, check=True), s.rep) is not None


@pytest.mark.parametrize("name", INDUCTIVE)
def test_pe_e_is_free(name):
    M = load(name)
    for cls in M.jreport.regular_classes:
        for e in cls.idempotents:
            GJ = monoid.maximal_subgroup(M, e)
            pe = cmp.pe_basis(M, e)
            units = [(g, a) for a in range(GJ.dim) for g in M.group.elements]
            for k in pe:
                orbit = [M.mul((0, k), GJ.embedding[a] if g == 0 else M.mul((g, M.one), GJ.embedding[a]))
                         for g, a in units]
                assert None not in orbit and len(set(orbit)) == len(units)
            # P(e)e is G_J^{(+) d}: orbit count times |G_J| recovers the size
            assert (len(pe) * M.group.size) % (GJ.dim * M.group.size) == 0


def test_induce_errors():
    M = load("i2_f1")
    e = M.jreport.regular_classes[0].idempotents[0]
    other = [c for c in M.jreport.regular_classes if c.idempotents[0] != e][0].idempotents[0]
    W = cmp.restrict(rep.defining_rep(M), e)
    with pytest.raises(GroupMismatch):
        cmp.induce(W, other)
    band = load("band_left_zero")
    be = (0, band.index("e"))
    bW = cmp.restrict(rep.Representation(band, 1, tuple(Matrix.identity(band.group, 1) for _ in range(band.dim))), be)
    with pytest.raises(NotLeftInductive):
        cmp.induce(bW, be)


def test_radical_needs_simple_base():
    M = load("i2_f1")
    e = (0, M.one)
    GJ = monoid.maximal_subgroup(M, e)
    T = cmp.group_table(GJ)
    one = cmp.coset_rep(GJ, frozenset(range(T.order)))
    W = rep.direct_sum_rep(one, one)
    assert not rep.is_simple(W)
    with pytest.raises(BaseNotSimple):
        cmp.radical(cmp.induce(W, e))


def test_union_find_conflict_is_zero():
    uf = cmp._LabeledUnionFind(2, PointedGroup([2]))
    uf.union(0, 1, 0)
    uf.union(0, 1, 1)
    assert uf.zero[uf.find(0)]


# -- group simples ----------------------------------------------------------

def _subgroup_count_oracle(T):
    """Free subgroups by brute force over all subsets closed under products."""
    out = 0
    for r in range(1, T.order + 1):
        for S in itertools.combinations(range(T.order), r):
            S = set(S)
            if T.identity not in S or S & T.diag != {T.identity}:
                continue
            if all(T.mul[a][b] in S for a in S for b in S):
                out += 1
    return out


def test_free_subgroups_match_oracle():
    for name in ("i2_f1", "i2_z2", "i3_f1"):
        M = load(name)
        for cls in M.jreport.regular_classes:
            T = cmp.group_table(monoid.maximal_subgroup(M, cls.idempotents[0]))
            if T.order <= 8:
                assert len(cmp.free_subgroups(T)) == _subgroup_count_oracle(T)


def test_group_simples_are_simple_and_distinct():
    M = load("i2_z2")
    e = (0, M.one)
    GJ = monoid.maximal_subgroup(M, e)
    reps = [gs.rep() for gs in cmp.group_simples(GJ)]
    assert all(rep.is_simple(V) for V in reps)
    for V, W in itertools.combinations(reps, 2):
        assert rep.are_isomorphic(V, W) is None


def test_coset_rep_freeness():
    M = load("i1_z2")
    GJ = monoid.maximal_subgroup(M, (0, M.one))
    T = cmp.group_table(GJ)
    with pytest.raises(FreenessViolated):
        cmp.coset_rep(GJ, T.diag)


def test_group_table_cap():
    M = load("i3_z2")
    GJ = monoid.maximal_subgroup(M, (0, M.one))
    with pytest.raises(GroupTooLarge):
        cmp.group_table(GJ, max_order=10)


def test_all_simples_matches_oracle_small():
    for name in ("i1_z2", "i2_f1", "path_a2"):
        M = load(name)
        oracle = cmp.oracle_simples(M, max_dim=3)
        ours = [s.rep for s in simples(name) if s.dim <= 3]
        assert len(oracle) == len(ours)
        for V in oracle:
            assert sum(rep.are_isomorphic(V, W) is not None for W in ours) == 1


# -- V_{S,H} ------------------------------------------------------------------

def test_vsh_examples():
    G = PointedGroup([])
    S = [0, 1]
    trivial = [Matrix.idempotent(G, 2, S)]
    V = cmp.v_sh(2, G, S, trivial)
    assert V.dim == 2 and rep.is_simple(V)
    full = cmp.gamma_elements(2, G, S)
    assert cmp.v_sh(2, G, S, full).dim == 1
    assert cmp.v_sh(2, G, [0], [Matrix.idempotent(G, 2, [0])]).dim == 2
    with pytest.raises(ValidationError):
        cmp.v_sh(2, G, [], [])


def test_vsh_freeness_enforced():
    G = PointedGroup([2])
    S = [0]
    diag = [Matrix.idempotent(G, 1, S), Matrix.idempotent(G, 1, S).scale(1)]
    with pytest.raises(FreenessViolated):
        cmp.v_sh(1, G, S, diag)


def test_f_psi_t_identity_is_identity():
    G = PointedGroup([2])
    S = [0, 1]
    for h in cmp.gamma_elements(2, G, S):
        assert cmp.f_psi_t(h, {0: 0, 1: 1}, {0: 0, 1: 0}) == h


def test_f_psi_t_is_conjugation():
    # F_{psi,t}(h) = T h T^-1 where T = M_{T, psi^-1, t^-1}, checked against compose
    G = PointedGroup([3])
    S = [0, 1]
    for psi_img in itertools.permutations(S):
        psi = dict(zip(S, psi_img))
        inv_psi = {s: y for y, s in psi.items()}
        for labels in itertools.product(G.elements, repeat=2):
            t = dict(zip(S, labels))
            P = Matrix(G, 2, 2, [(inv_psi[s], G.inv(t[s])) for s in S])
            for h in cmp.gamma_elements(2, G, S):
                conj = compose(compose(P, h), P.star())
                assert cmp.f_psi_t(h, psi, t) == conj


# -- semisimplicity ---------------------------------------------------------

def _verify_witness(v):
    V, W = v.witness, v.sub
    rep.validate_rep(V.monoid, V.action)
    assert rep.is_closed(V, W)
    # no complement: the only candidate is the complementary coordinate set
    assert not rep.is_closed(V, set(range(V.dim)) - set(W))


@pytest.mark.parametrize("name", ["null1", "null2", "null3", "path_a2", "path_a3", "path_kronecker", "path_a3_zero"])
def test_not_semisimple_with_witness(name):
    v = cmp.is_semisimple(load(name))
    assert v.status == "NotSemisimple"
    _verify_witness(v)


@pytest.mark.parametrize("name", ["i1_f1", "i2_f1", "i2_z2", "i3_f1", "i3_z2", "path_point"])
def test_semisimple(name):
    assert cmp.is_semisimple(load(name)).status == "Semisimple"


def test_nil_ideal():
    M = load("null2")
    assert cmp.nil_ideal(M) == frozenset(b for b in range(M.dim) if b != M.one)
    assert cmp.nil_ideal(load("i2_f1")) == frozenset()


def test_zero_band_counterexample():
    """Regular, left inductive, not inverse, yet Rep is completely reducible."""
    M = load("band_right_zero")
    assert monoid.is_regular(M) and monoid.is_left_inductive(M)
    assert not monoid.is_inverse(M) and not monoid.is_right_inductive(M)
    for d in range(1, 5):
        for V in rep.enumerate_reps(M, d):
            assert cmp.uncomplemented_subrep(V) is None
    v = cmp.is_semisimple(M)
    assert v.status == "Unknown"


# -- phi_H ----------------------------------------------------------------------

def test_phi_h_examples():
    V = cmp.phi_h_rep(3, PointedGroup([]), "A3")
    assert V.dim == 2
    assert cmp.phi_h_rep(3, PointedGroup([]), "S3").dim == 1
    assert cmp.phi_h_rep(3, PointedGroup([]), "1").dim == 6
    assert cmp.phi_h_rep(3, PointedGroup([2]), "A3").dim == 2  # g^2 = 1


def test_normal_subgroups():
    assert [len(H) for H in cmp.normal_subgroups(3)] == [1, 3, 6]
    assert [len(H) for H in cmp.normal_subgroups(4)] == [1, 4, 12, 24]


def test_phi_h_rejects_non_normal():
    H = [(0, 1, 2), (1, 0, 2)]
    with pytest.raises(NotNormal):
        cmp.phi_h_rep(3, PointedGroup([]), H)
    with pytest.raises(ValidationError):
        cmp.phi_h_rep(3, PointedGroup([]), [(1, 0, 2)])


def test_phi_h_scalar_mismatch():
    with pytest.raises(ScalarMismatch) as info:
        cmp.phi_h_rep(3, PointedGroup([3]), "A3")
    assert info.value.witness == {"exponent": 3, "n": 3}
    V = cmp.phi_h_rep(3, PointedGroup([3]), "A3", check_scalars=False)
    M = V.monoid
    # still multiplicative on the underlying monoid, with g acting by g^3
    for a, b in itertools.product(range(M.dim), repeat=2):
        r = M.table[a][b]
        want = Matrix.zero(M.group, V.dim, V.dim) if r is None else V.action[r[1]].scale(M.group.power(r[0], 3))
        assert compose(V.action[a], V.action[b]) == want
