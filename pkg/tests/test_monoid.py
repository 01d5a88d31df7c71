import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from conftest import FIXTURES, load
from fonerep import monoid
from fonerep.errors import (
    CyclicQuiver, IncompleteTable, NoIdentity, NotAssociative, NotIdempotent, NotInverse,
    RelationInconsistent, ValidationError, ZeroElement,
)
from fonerep.fvect import Matrix, PointedGroup, compose, count_submonomial


def elements_of(M):
    return list(M.elements())


def ideal_oracle(M, x):
    """MxM by brute force over all elements."""
    els = elements_of(M)
    return frozenset(M.product(a, x, b) for a in els for b in els)


def j_oracle(M):
    """Partition of nonzero elements by their principal two-sided ideal."""
    classes = {}
    for x in M.nonzero_elements():
        classes.setdefault(ideal_oracle(M, x), set()).add(x)
    return classes


# -- construction -----------------------------------------------------------

@pytest.mark.parametrize("n,order", [(n, o) for n in (1, 2, 3) for o in (1, 2, 3)])
def test_symmetric_inverse_size(n, order):
    G = PointedGroup([order] if order > 1 else [])
    name = f"i{n}_{['f1', 'z2', 'z3'][order - 1]}"
    M = load(name)
    assert M.size == count_submonomial(n, order)
    assert M.group == G


def test_size_examples():
    assert monoid.symmetric_inverse_monoid(1).size == 2
    assert load("i2_f1").size == 7
    assert load("i2_z2").size == 17
    assert load("i3_f1").size == 34


def test_realization_is_closed_and_faithful():
    M = load("i2_z2")
    mats = {x: M.matrix_of(x) for x in M.nonzero_elements()}
    assert len(set(mats.values())) == len(mats)
    for x, y in itertools.product(mats, repeat=2):
        z = M.mul(x, y)
        prod = compose(mats[x], mats[y])
        assert (prod.is_zero() and z is None) or mats.get(z) == prod


def test_orbit_representatives_normalized():
    M = load("i2_z3")
    for A in M.realization:
        occupied = [e for e in A.entries if e is not None]
        assert occupied[0][1] == 0


def test_in_zero_rejected():
    with pytest.raises(ValueError):
        monoid.symmetric_inverse_monoid(0)


def test_json_round_trip(small_monoid):
    data = small_monoid.to_json()
    again = monoid.monoid_from_json(json.loads(json.dumps(data)))
    assert again.same_table(small_monoid)
    assert again.to_json() == data


def _two_element_json():
    return {"group": [], "basis": ["1", "x"], "one": "1",
            "mult": [{"l": "1", "r": "1", "res": "1"}, {"l": "1", "r": "x", "res": "x"},
                     {"l": "x", "r": "1", "res": "x"}, {"l": "x", "r": "x", "res": None}]}


def test_missing_pair_rejected():
    data = _two_element_json()
    data["mult"].pop()
    with pytest.raises(IncompleteTable):
        monoid.monoid_from_json(data)


def test_duplicate_pair_rejected():
    data = _two_element_json()
    data["mult"].append({"l": "x", "r": "x", "res": "x"})
    with pytest.raises(IncompleteTable):
        monoid.monoid_from_json(data)


def test_missing_identity_rejected():
    data = _two_element_json()
    del data["one"]
    with pytest.raises(NoIdentity):
        monoid.monoid_from_json(data)


def test_bad_identity_rejected():
    data = _two_element_json()
    data["one"] = "x"
    with pytest.raises(NoIdentity):
        monoid.monoid_from_json(data)


def test_non_associative_rejected_with_witness():
    # x y = x, y x = y, x x = y: (x x) x = y x = y but x (x x) = x y = x
    names = ["1", "x", "y"]
    res = {("x", "y"): "x", ("y", "x"): "y", ("x", "x"): "y", ("y", "y"): "y"}
    mult = []
    for a in names:
        for b in names:
            r = b if a == "1" else a if b == "1" else res[(a, b)]
            mult.append({"l": a, "r": b, "res": r})
    with pytest.raises(NotAssociative) as info:
        monoid.monoid_from_json({"group": [], "basis": names, "one": "1", "mult": mult})
    assert len(info.value.witness) == 3


def test_bad_realization_rejected():
    data = load("i2_f1").to_json()
    names = sorted(data["matrices"])
    data["matrices"][names[0]], data["matrices"][names[1]] = data["matrices"][names[1]], data["matrices"][names[0]]
    with pytest.raises(ValidationError):
        monoid.monoid_from_json(data)


# -- path monoids -----------------------------------------------------------

def test_path_monoid_sizes():
    # elements: 0, 1, vertices, nontrivial paths
    assert load("path_point").size == 3
    assert load("path_a2").size == 5
    assert load("path_a3").size == 8
    assert load("path_a3_zero").size == 7
    assert load("path_kronecker").size == 6


def test_path_composition_is_left_to_right():
    M = load("path_a3")
    ab = M.mul((0, M.index("a")), (0, M.index("b")))
    assert ab is not None and M.element_name(ab) == "a.b"
    assert M.mul((0, M.index("b")), (0, M.index("a"))) is None
    e = (0, M.index("e"))
    a = (0, M.index("a"))
    assert M.mul(e, a) == a and M.mul(a, e) is None


def test_cyclic_quiver_without_relations_rejected():
    q = monoid.Quiver(("v",), (("loop", "v", "v"),), ())
    with pytest.raises(CyclicQuiver):
        monoid.path_monoid(q)


def test_cyclic_quiver_with_nilpotent_relation():
    q = monoid.Quiver(("v",), (("t", "v", "v"),), ((("t", "t"), None),))
    M = monoid.path_monoid(q)
    assert M.size == 4  # 0, 1, v, t


@pytest.mark.parametrize("name", ["brandt_ce", "lr_ce"])
def test_audited_counterexamples_are_inconsistent(name):
    q = monoid.Quiver.from_json(json.loads((FIXTURES / f"quiver_{name}.json").read_text()))
    with pytest.raises(RelationInconsistent) as info:
        monoid.path_monoid(q)
    audit = json.loads((FIXTURES / f"audit_{name}.json").read_text())
    assert audit["error"]["witness"] == info.value.witness


def test_brandt_witness_is_genuine():
    # alpha (beta alpha) = 0 but (alpha beta) alpha = f alpha = alpha
    q = monoid.Quiver.from_json(json.loads((FIXTURES / "quiver_brandt_ce.json").read_text()))
    with pytest.raises(RelationInconsistent) as info:
        monoid.path_monoid(q)
    assert info.value.witness == ["alpha", "beta", "alpha"]


# -- J-classes and regularity -----------------------------------------------

def test_j_classes_match_oracle(small_monoid):
    M = small_monoid
    report = M.jreport
    oracle = j_oracle(M)
    ours = {}
    for x in M.nonzero_elements():
        ours.setdefault(report.class_of_element(x), set()).add(x)
    assert sorted(map(frozenset, ours.values()), key=sorted) == sorted(map(frozenset, oracle.values()), key=sorted)


def test_j_order_respects_products(small_monoid):
    M = small_monoid
    r = M.jreport
    for x, y in itertools.product(M.nonzero_elements(), repeat=2):
        z = M.mul(x, y)
        cz = r.class_of_element(z)
        assert r.leq(cz, r.class_of_element(x)) and r.leq(cz, r.class_of_element(y))


def test_regularity_conditions_agree(small_monoid):
    M = small_monoid
    for cls in M.jreport.classes[1:]:
        conds = monoid.regularity_conditions(M, cls)
        assert len(set(conds)) == 1
        assert conds[0] == cls.regular


def test_regularity_oracle(small_monoid):
    M = small_monoid
    els = elements_of(M)
    oracle = all(any(M.product(x, y, x) == x for y in els) for x in M.nonzero_elements())
    assert monoid.is_regular(M) == oracle


@pytest.mark.parametrize("n", [1, 2, 3])
def test_in_structure(n):
    M = load(f"i{n}_f1")
    assert len(M.jreport.classes) == n + 1
    assert all(c.regular for c in M.jreport.classes)
    assert monoid.is_inverse(M)
    assert monoid.is_left_inductive(M) and monoid.is_right_inductive(M)
    assert len(monoid.idempotents(M)) == 2 ** n


def test_null_monoid_not_regular():
    for n in (1, 2, 3):
        M = load(f"null{n}")
        assert not monoid.is_regular(M)
        assert not monoid.is_inverse(M)


def test_principal_factor_kinds(small_monoid):
    M = small_monoid
    for x in M.nonzero_elements():
        pf = monoid.principal_factor(M, x)
        assert pf.kind in ("null", "zero-simple")
        assert (pf.kind == "zero-simple") == M.jreport.classes[pf.jclass].regular
    with pytest.raises(ZeroElement):
        monoid.principal_factor(M, None)


def test_inductive_equivalences_on_regular_fixtures(small_monoid):
    M = small_monoid
    if not monoid.is_regular(M):
        return
    assert monoid.is_left_inductive(M) == monoid.is_right_inductive(M) == monoid.is_inverse(M)


def test_star_inverse_is_involutive_antihomomorphism():
    for name in ["i2_f1", "i2_z2", "i3_f1"]:
        M = load(name)
        star = {x: monoid.star_inverse(M, x) for x in M.elements()}
        for x in M.elements():
            assert star[star[x]] == x
            if x is not None:
                assert M.matrix_of(star[x]) == M.matrix_of(x).star()
        for x, y in itertools.product(M.elements(), repeat=2):
            assert star[M.mul(x, y)] == M.mul(star[y], star[x])


def test_star_inverse_requires_inverse():
    with pytest.raises(NotInverse):
        monoid.star_inverse(load("null2"), (0, 1))


def test_maximal_subgroup():
    M = load("i3_z2")
    for cls in M.jreport.regular_classes:
        e = cls.idempotents[0]
        GJ = monoid.maximal_subgroup(M, e)
        rank = M.matrix_of(e).rank
        # G^d x| S_d
        assert GJ.dim * M.group.size == 2 ** rank * [1, 1, 2, 6][rank]
        assert GJ.embedding[0] == e
        for x in GJ.embedding:
            assert M.mul(e, x) == x == M.mul(x, e)
    with pytest.raises(NotIdempotent):
        monoid.check_idempotent(M, (1, M.one))


def test_submonoid_and_opposite():
    M = load("i2_f1")
    idem = [x[1] for x in monoid.idempotents(M, include_zero=False)]
    E = monoid.submonoid(M, idem)
    assert E.dim == 3 and E.size == 4 and monoid.is_inverse(E)
    op = monoid.opposite(M)
    for a, b in itertools.product(range(M.dim), repeat=2):
        assert op.table[a][b] == M.table[b][a]


# -- Wagner-Preston ---------------------------------------------------------

def test_wagner_preston_examples():
    V = monoid.wagner_preston(monoid.trivial_monoid())
    assert V.dim == 1 and V.action[0].is_identity()
    M = load("i1_z2")
    V = monoid.wagner_preston(M)
    assert V.dim == 1
    assert V.matrix((1, M.one)) == Matrix.identity(M.group, 1).scale(1)
    M = load("i2_f1")
    V = monoid.wagner_preston(M)
    assert V.dim == 6
    for x in M.elements():
        assert V.matrix(monoid.star_inverse(M, x)) == V.matrix(x).star()
    with pytest.raises(NotInverse):
        monoid.wagner_preston(load("null2"))


@pytest.mark.parametrize("name", ["i1_f1", "i1_z3", "i2_f1", "i2_z2", "i2_z3", "i3_f1"])
def test_wagner_preston_faithful_homomorphism(name):
    M = load(name)
    V = monoid.wagner_preston(M)
    mats = {x: V.matrix(x) for x in M.elements()}
    assert len(set(mats.values())) == M.size
    for x, y in itertools.product(M.elements(), repeat=2):
        assert compose(mats[x], mats[y]) == mats[M.mul(x, y)]


# -- random tables via hypothesis -------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.sampled_from([[], [2], [3]]), st.data())
def test_random_submonoids_of_in(n, orders, data):
    M = monoid.symmetric_inverse_monoid(n, PointedGroup(orders))
    gens = data.draw(st.lists(st.integers(0, M.dim - 1), max_size=3))
    S = monoid.submonoid(M, gens)
    again = monoid.validate_monoid(S.group, S.basis, S.one, S.table)
    assert again.same_table(S)
    # a submonoid of an inverse monoid is inverse iff closed under *
    closed = all(monoid.normalize_matrix(A.star())[1] in set(S.realization) for A in S.realization)
    assert monoid.is_inverse(S) == closed
