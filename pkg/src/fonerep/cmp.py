"""Induction, restriction and the classification of simple representations.

For an idempotent ``e`` with J-class ``J`` and maximal subgroup ``G_J``:

* ``restrict(V, e)`` is ``eV`` as a ``G_J``-representation;
* ``induce(W, e)`` is ``P(e)e (x)_{G_J} W`` with ``M`` acting on the left;
* ``cmp_simple(W, e)`` is the induced representation modulo its radical.

Simple ``G_J``-representations are transitive free ``G``-sets ``Gamma/H`` for
the group ``Gamma = G_J \\ {0}``, classified by conjugacy classes of subgroups
``H`` meeting the central copy of ``G`` trivially.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    BaseNotSimple,
    FreenessViolated,
    GroupMismatch,
    GroupTooLarge,
    NotLeftInductive,
    NotNormal,
    ScalarMismatch,
    ValidationError,
)
from .fvect import Matrix, PointedGroup, compose
from .monoid import (
    GLinearMonoid,
    check_idempotent,
    idempotents,
    is_inverse,
    is_left_inductive,
    maximal_subgroup,
    symmetric_inverse_monoid,
)
from .rep import (
    MAX_ENUM_DIM,
    MAX_SUBREP_DIM,
    Representation,
    SubRep,
    all_subreps,
    apex,
    are_isomorphic,
    enumerate_reps,
    is_closed,
    is_simple,
    quotient,
    validate_rep,
)

MAX_SUBGROUP_ORDER = 5040


# ---------------------------------------------------------------------------
# restriction


def restrict(V: Representation, e) -> Representation:
    """``eV`` as a representation of ``maximal_subgroup(M, e)``."""
    M = V.monoid
    check_idempotent(M, e)
    GJ = maximal_subgroup(M, e)
    E = V.matrix(e)
    coords = list(E.image_rows)
    action = []
    pos = {c: k for k, c in enumerate(coords)}
    for x in GJ.embedding:
        X = V.matrix(x)
        entries = []
        for c in coords:
            t = X.entries[c]
            entries.append(None if t is None else (pos[t[0]], t[1]))
        action.append(Matrix(M.group, len(coords), len(coords), entries))
    return Representation(GJ, len(coords), tuple(action))


# ---------------------------------------------------------------------------
# induction


class _LabeledUnionFind:
    """Union-find over ``G``-labelled nodes: ``node = label * parent``."""

    def __init__(self, n: int, group: PointedGroup):
        self.parent = list(range(n))
        self.label = [0] * n
        self.zero = [False] * n
        self.G = group

    def find(self, x: int):
        mul = self.G._mul
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # compress, accumulating labels from the top down
        acc = 0
        for node in reversed(path):
            acc = mul[self.label[node]][acc]
            self.label[node] = acc
            self.parent[node] = root
        return root

    def get(self, x: int):
        r = self.find(x)
        return r, (self.label[x] if x != r else 0)

    def set_zero(self, x: int):
        r = self.find(x)
        self.zero[r] = True

    def union(self, x: int, y: int, t: int):
        """Impose ``x = t * y``."""
        G = self.G
        rx, lx = self.get(x)
        ry, ly = self.get(y)
        # lx rx = t ly ry  =>  rx = lx^-1 t ly ry
        s = G._mul[G._mul[G._inv[lx]][t]][ly]
        if rx == ry:
            if s != 0:
                # a non-free orbit cannot survive in a G-hat-vector space
                self.zero[rx] = True
            return
        self.parent[rx] = ry
        self.label[rx] = s
        self.zero[ry] = self.zero[ry] or self.zero[rx]


@dataclass(frozen=True, eq=False)
class InducedRep:
    rep: Representation
    base: Representation
    e: tuple
    pe: tuple  # basis indices of P(e)e
    classes: tuple  # per carrier coordinate, the least (k, i) pair
    locate: dict = field(repr=False)  # (k, i) -> None | (coordinate, label)

    @property
    def dim(self) -> int:
        return self.rep.dim


def pe_basis(M: GLinearMonoid, e) -> tuple:
    """Basis indices of ``P(e)e = {x in J_e : xe = x}``."""
    report = M.jreport
    cls = report.classes[report.class_of[e[1]]]
    return tuple(k for k in cls.members if M.mul((0, k), e) == (0, k))


def induce(W: Representation, e) -> InducedRep:
    GJ = W.monoid
    M = GJ.ambient
    if M is None or GJ.embedding is None or GJ.embedding[0] != e:
        raise GroupMismatch("W must be a representation of maximal_subgroup(M, e)")
    if maximal_subgroup(M, e) is not GJ:
        raise GroupMismatch("W is over a different copy of the maximal subgroup")
    if not is_left_inductive(M):
        raise NotLeftInductive("induction needs a left inductive monoid")
    G = M.group
    pe = pe_basis(M, e)
    pos = {k: i for i, k in enumerate(pe)}
    dw = W.dim
    uf = _LabeledUnionFind(len(pe) * dw, G)

    def node(k, i):
        return pos[k] * dw + i

    for k in pe:
        for a, alpha in enumerate(GJ.embedding):
            xa = M.mul((0, k), alpha)
            for i in range(dw):
                aw = W.action[a].entries[i]
                # (x alpha) (x) e_i  ~  x (x) (alpha e_i)
                if xa is None and aw is None:
                    continue
                if xa is None:
                    uf.set_zero(node(k, aw[0]))
                elif aw is None:
                    uf.set_zero(node(xa[1], i))
                else:
                    # g1 [k1, i] = h1 [k, i1]  =>  [k1, i] = g1^-1 h1 [k, i1]
                    uf.union(node(xa[1], i), node(k, aw[0]), G._mul[G._inv[xa[0]]][aw[1]])

    n = len(pe) * dw
    least = {}
    for x in range(n):
        r = uf.find(x)
        if uf.zero[r]:
            continue
        if r not in least:
            least[r] = x
    reps = sorted(least.values())
    coord_of_root = {uf.find(x): c for c, x in enumerate(reps)}
    locate = {}
    for x in range(n):
        r, lx = uf.get(x)
        k, i = pe[x // dw], x % dw
        if uf.zero[r]:
            locate[(k, i)] = None
            continue
        m = least[r]
        _, lm = uf.get(m)
        # x = lx r,  m = lm r  =>  x = lx lm^-1 m
        locate[(k, i)] = (coord_of_root[r], G._mul[lx][G._inv[lm]])

    d = len(reps)
    action = []
    for b in range(M.dim):
        entries = []
        for m in reps:
            k, i = pe[m // dw], m % dw
            y = M.mul((0, b), (0, k))
            if y is None or y[1] not in pos:
                entries.append(None)
                continue
            loc = locate[(y[1], i)]
            entries.append(None if loc is None else (loc[0], G._mul[y[0]][loc[1]]))
        action.append(Matrix(G, d, d, entries))
    rep = validate_rep(M, action)
    classes = tuple((pe[m // dw], m % dw) for m in reps)
    return InducedRep(rep, W, e, pe, classes, locate)


def radical(ind: InducedRep, check_simple: bool = True) -> SubRep:
    """``N = {v : eMv = 0}``, the unique maximal subrep when ``W`` is simple."""
    if check_simple and not is_simple(ind.base):
        raise BaseNotSimple("the radical is defined for simple W")
    V = ind.rep
    M = V.monoid
    E = V.matrix(ind.e)
    coords = set()
    for c in range(V.dim):
        dead = True
        for b in range(M.dim):
            t = V.action[b].entries[c]
            if t is not None and E.entries[t[0]] is not None:
                dead = False
                break
        if dead:
            coords.add(c)
    return SubRep(V, frozenset(coords))


def cmp_simple(W: Representation, e, check: bool = False) -> Representation:
    """``Q(W) = W^e / N(W^e)``; with ``check`` the defining properties are asserted."""
    ind = induce(W, e)
    N = radical(ind)
    Q = quotient(ind.rep, N)
    if check:
        M = Q.monoid
        if not is_simple(Q):
            raise AssertionError("Q(W) is not simple")
        ap = apex(Q)
        if ap is None or ap.index != M.jreport.class_of[e[1]]:
            raise AssertionError("Q(W) has the wrong apex")
        if are_isomorphic(restrict(Q, e), W, max_dim=max(Q.dim, W.dim)) is None:
            raise AssertionError("restrict(Q(W), e) is not isomorphic to W")
    return Q


# ---------------------------------------------------------------------------
# pointed groups and their simple representations


@dataclass(frozen=True)
class GroupTable:
    """``Gamma = G_J \\ {0}`` with elements ``a * |G| + g`` for ``(g, a)``."""

    GJ: GLinearMonoid
    mul: tuple
    inv: tuple
    identity: int
    diag: frozenset

    @property
    def order(self) -> int:
        return len(self.mul)

    def element(self, x: int):
        n = self.GJ.group.size
        return (x % n, x // n)

    def code(self, el) -> int:
        return el[1] * self.GJ.group.size + el[0]


def group_table(GJ: GLinearMonoid, max_order: int = MAX_SUBGROUP_ORDER) -> GroupTable:
    key = ("group_table",)
    if key in GJ._cache:
        return GJ._cache[key]
    n = GJ.group.size
    order = n * GJ.dim
    if order > max_order:
        raise GroupTooLarge(f"|G_J| = {order} exceeds cap {max_order}")
    elems = [(g, a) for a in range(GJ.dim) for g in range(n)]
    code = {el: i for i, el in enumerate(elems)}
    mul = []
    for x in elems:
        row = []
        for y in elems:
            r = GJ.mul(x, y)
            if r is None:
                raise ValidationError("G_J has zero divisors: not a pointed group")
            row.append(code[r])
        mul.append(tuple(row))
    ident = code[(0, GJ.one)]
    inv = []
    for x in range(order):
        inv.append(next(y for y in range(order) if mul[x][y] == ident))
    diag = frozenset(code[(g, GJ.one)] for g in range(n))
    T = GroupTable(GJ, tuple(mul), tuple(inv), ident, diag)
    GJ._cache[key] = T
    return T


def generate_subgroup(T: GroupTable, gens: Iterable[int]) -> frozenset:
    H = {T.identity}
    frontier = [T.identity]
    gens = list(gens)
    while frontier:
        new = []
        for h in frontier:
            for g in gens:
                x = T.mul[h][g]
                if x not in H:
                    H.add(x)
                    new.append(x)
        frontier = new
    return frozenset(H)


def free_subgroups(T: GroupTable) -> list:
    """All subgroups ``H`` with ``H n G_diag = {1}``, sorted by (order, elements)."""
    ident = {T.identity}
    cyclic = {}
    for x in range(T.order):
        C = generate_subgroup(T, [x])
        if C & T.diag <= ident:
            cyclic.setdefault(C, x)
    found = set(cyclic)
    frontier = list(found)
    gens = list(cyclic.values())
    while frontier:
        new = []
        for H in frontier:
            for g in gens:
                if g in H:
                    continue
                K = generate_subgroup(T, set(H) | {g})
                if K in found or not (K & T.diag <= ident):
                    continue
                found.add(K)
                new.append(K)
        frontier = new
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def conjugacy_key(T: GroupTable, H: frozenset) -> tuple:
    return min(tuple(sorted(T.mul[T.mul[g][h]][T.inv[g]] for h in H)) for g in range(T.order))


@dataclass(frozen=True)
class GroupSimple:
    GJ: GLinearMonoid
    subgroup: frozenset  # codes in the group table

    def elements(self) -> list:
        T = group_table(self.GJ)
        return [T.element(x) for x in sorted(self.subgroup)]

    def rep(self) -> Representation:
        return coset_rep(self.GJ, self.subgroup)


def group_simples(GJ: GLinearMonoid, max_order: int = MAX_SUBGROUP_ORDER) -> list:
    """One ``GroupSimple`` per conjugacy class of free subgroups."""
    T = group_table(GJ, max_order)
    seen = {}
    for H in free_subgroups(T):
        seen.setdefault(conjugacy_key(T, H), H)
    return [GroupSimple(GJ, H) for H in seen.values()]


def coset_rep(GJ: GLinearMonoid, H: frozenset) -> Representation:
    """``Gamma / H u {0}`` with ``Gamma`` acting by left translation."""
    T = group_table(GJ)
    if not (H & T.diag <= {T.identity}):
        raise FreenessViolated("H meets the central G", witness=[list(T.element(x)) for x in sorted(H & T.diag)])
    G = GJ.group
    cosets = {}
    for x in range(T.order):
        c = frozenset(T.mul[x][h] for h in H)
        cosets.setdefault(c, min(c))
    # basis: G-orbits of cosets, each represented by the coset with least element
    scal = [T.code((g, GJ.one)) for g in range(G.size)]
    basis = []
    where = {}
    for c in sorted(cosets, key=min):
        if c in where:
            continue
        k = len(basis)
        basis.append(c)
        for g in range(G.size):
            gc = frozenset(T.mul[scal[g]][x] for x in c)
            where[gc] = (k, g)
    action = []
    for a in range(GJ.dim):
        x = T.code((0, a))
        entries = []
        for c in basis:
            entries.append(where[frozenset(T.mul[x][y] for y in c)])
        action.append(Matrix(G, len(basis), len(basis), entries))
    return Representation(GJ, len(basis), tuple(action))


# ---------------------------------------------------------------------------
# all simples


@dataclass(frozen=True)
class SimpleRecord:
    apex: int
    idempotent: tuple
    subgroup: frozenset
    rep: Representation

    @property
    def dim(self) -> int:
        return self.rep.dim


def all_simples(M: GLinearMonoid, max_subgroup_order: int = MAX_SUBGROUP_ORDER,
                max_dim: int = 64) -> list:
    """Every simple representation up to isomorphism, grouped by apex."""
    if not is_left_inductive(M):
        raise NotLeftInductive("the classification needs a left inductive monoid")
    out = []
    for cls in M.jreport.regular_classes:
        e = cls.idempotents[0]
        GJ = maximal_subgroup(M, e)
        found = []
        for gs in group_simples(GJ, max_subgroup_order):
            Q = cmp_simple(gs.rep(), e)
            if any(W.dim == Q.dim and are_isomorphic(W, Q, max_dim=max_dim) is not None for W in found):
                continue
            found.append(Q)
            out.append(SimpleRecord(cls.index, e, gs.subgroup, Q))
    return out


def oracle_simples(M: GLinearMonoid, max_dim: int = MAX_ENUM_DIM) -> list:
    """Brute force: simple reps of dim <= max_dim up to isomorphism."""
    from .rep import iso_classes

    out = []
    for d in range(1, max_dim + 1):
        out.extend(V for V in iso_classes(enumerate_reps(M, d, max_dim)) if is_simple(V))
    return out


# ---------------------------------------------------------------------------
# the symmetric inverse monoid: V_{S,H}


def gamma_elements(n: int, group: PointedGroup, S: Sequence[int]) -> list:
    """``G^S x| Symm(S)`` as ``n x n`` matrices ``M_{S, sigma, c}``."""
    S = sorted(S)
    out = []
    for perm in itertools.permutations(S):
        for labels in itertools.product(group.elements, repeat=len(S)):
            entries = [None] * n
            for j, r, g in zip(S, perm, labels):
                entries[j] = (r, g)
            out.append(Matrix(group, n, n, entries, check=False))
    return out


def subgroup_closure(gens: Iterable[Matrix], n: int, group: PointedGroup, S: Sequence[int]) -> frozenset:
    ident = Matrix.idempotent(group, n, S)
    H = {ident}
    frontier = [ident]
    gens = list(gens)
    while frontier:
        new = []
        for h in frontier:
            for g in gens:
                x = compose(h, g)
                if x not in H:
                    H.add(x)
                    new.append(x)
        frontier = new
    return frozenset(H)


def _check_gamma_subgroup(n: int, group: PointedGroup, S, H) -> frozenset:
    S = sorted(S)
    H = frozenset(H)
    ident = Matrix.idempotent(group, n, S)
    for h in H:
        if set(h.support) != set(S) or set(h.image_rows) != set(S):
            raise ValidationError("subgroup element is not supported on S")
    if ident not in H or any(compose(a, b) not in H for a in H for b in H):
        raise ValidationError("H is not a subgroup of G^S x| Symm(S)")
    bad = [g for g in group.elements if g != 0 and ident.scale(g) in H]
    if bad:
        raise FreenessViolated("H meets the diagonal copy of G", witness=[list(group.decode(g)) for g in bad])
    return H


def v_sh(n: int, group: PointedGroup, S: Sequence[int], H: Iterable[Matrix],
         M: Optional[GLinearMonoid] = None) -> Representation:
    """Rank-``|S|`` matrices supported on columns ``S`` modulo right multiplication by ``H``."""
    S = sorted(S)
    if not S:
        raise ValidationError("S must be nonempty")
    H = _check_gamma_subgroup(n, group, S, H)
    if M is None:
        M = symmetric_inverse_monoid(n, group)
    d = len(S)
    carrier = []
    for rows in itertools.permutations(range(n), d):
        for labels in itertools.product(group.elements, repeat=d):
            entries = [None] * n
            for j, r, g in zip(S, rows, labels):
                entries[j] = (r, g)
            carrier.append(Matrix(group, n, n, entries, check=False))
    carrier.sort()
    cls_of = {}
    classes = []
    for X in carrier:
        if X in cls_of:
            continue
        members = frozenset(compose(X, h) for h in H)
        for Y in members:
            cls_of[Y] = len(classes)
        classes.append(members)
    where = {}
    basis = []
    for c, members in enumerate(classes):
        if c in where:
            continue
        X = min(members)
        k = len(basis)
        basis.append(c)
        for g in group.elements:
            where[cls_of[X.scale(g)]] = (k, g)
    action = []
    for b in range(M.dim):
        A = M.realization[b]
        entries = []
        for c in basis:
            X = min(classes[c])
            AX = compose(A, X)
            entries.append(where[cls_of[AX]] if AX.rank == d else None)
        action.append(Matrix(group, len(basis), len(basis), entries))
    return Representation(M, len(basis), tuple(action))


def f_psi_t(h: Matrix, psi: dict, t: dict) -> Matrix:
    """The map ``F_{psi,t}: G^S x| Symm(S) -> G^T x| Symm(T)``.

    ``psi: T -> S`` is a bijection and ``t: S -> G``.  An element ``(c, f)``
    is the matrix with column ``j`` carrying ``(f(j), c(f(j)))``; the image
    is ``(c', psi^-1 f psi)`` with ``c'(y) = t(f^-1 psi y) / t(psi y) * c(psi y)``.
    """
    G = h.group
    mul, inv = G._mul, G._inv
    inv_psi = {s: y for y, s in psi.items()}
    f = {j: e[0] for j, e in enumerate(h.entries) if e is not None}
    c = {e[0]: e[1] for e in h.entries if e is not None}
    finv = {r: j for j, r in f.items()}
    entries = [None] * h.cols
    for y, s in psi.items():
        # column psi^-1 f psi: y -> psi^-1(f(psi(y)))
        target = inv_psi[f[s]]
        ty = target
        label = mul[mul[t[finv[psi[ty]]]][inv[t[psi[ty]]]]][c[psi[ty]]]
        entries[y] = (target, label)
    return Matrix(G, h.rows, h.cols, entries, check=False)


def vsh_isomorphic(n: int, group: PointedGroup, SH, TK) -> bool:
    """The ``F_{psi,t}`` criterion: some bijection ``psi: T -> S`` and ``t in G^S``
    carry ``H`` onto ``K``."""
    (S, H), (T, K) = SH, TK
    S, T = sorted(S), sorted(T)
    if len(S) != len(T):
        return False
    H = _check_gamma_subgroup(n, group, S, H)
    K = _check_gamma_subgroup(n, group, T, K)
    if len(H) != len(K):
        return False
    for image in itertools.permutations(S):
        psi = dict(zip(T, image))
        for labels in itertools.product(group.elements, repeat=len(S)):
            t = dict(zip(S, labels))
            if all(f_psi_t(h, psi, t) in K for h in H):
                return True
    return False


def free_gamma_subgroups(n: int, group: PointedGroup, S: Sequence[int]) -> list:
    """Every subgroup of ``G^S x| Symm(S)`` meeting the diagonal ``G`` trivially."""
    elems = gamma_elements(n, group, S)
    ident = Matrix.idempotent(group, n, S)
    diag = {ident.scale(g) for g in group.elements}
    cyclic = {}
    for x in elems:
        C = subgroup_closure([x], n, group, S)
        if C & diag <= {ident}:
            cyclic.setdefault(C, x)
    found = set(cyclic)
    frontier = list(found)
    while frontier:
        new = []
        for Hs in frontier:
            for g in cyclic.values():
                if g in Hs:
                    continue
                K = subgroup_closure(list(Hs) + [g], n, group, S)
                if K in found or not (K & diag <= {ident}):
                    continue
                found.add(K)
                new.append(K)
        frontier = new
    return sorted(found, key=lambda Hs: (len(Hs), sorted(Hs)))


# ---------------------------------------------------------------------------
# semisimplicity


@dataclass(frozen=True)
class Verdict:
    status: str  # "Semisimple", "NotSemisimple" or "Unknown"
    reason: str
    witness: Optional[Representation] = None
    sub: Optional[frozenset] = None

    def __bool__(self):
        return self.status == "Semisimple"


def complement(V: Representation, W) -> Optional[SubRep]:
    """A complementary subrep to ``W`` or None.

    Subreps are coordinate sets, so the only candidate is the complementary
    coordinate set; for inverse monoids it is always closed.
    """
    wc = W.coords if isinstance(W, SubRep) else frozenset(W)
    rest = frozenset(range(V.dim)) - wc
    if is_closed(V, rest):
        return SubRep(V, rest)
    return None


def uncomplemented_subrep(V: Representation, max_dim: int = MAX_SUBREP_DIM) -> Optional[frozenset]:
    """Some subrep with no complement, or None if ``V`` is completely reducible."""
    for W in all_subreps(V, max_dim):
        if complement(V, W) is None:
            return W.coords
    return None


def nil_ideal(M: GLinearMonoid) -> frozenset:
    """Basis elements ``x`` whose ideal ``MxM`` holds no nonzero idempotent.

    This is the largest ideal without nonzero idempotents; it is nilpotent.
    """
    from .monoid import idempotent_in_orbit

    idem = {b for b in range(M.dim) if idempotent_in_orbit(M, b) is not None}
    return frozenset(b for b in range(M.dim) if not (M.ideal(b) & idem))


def _ideal_power_chain(M: GLinearMonoid, ideal: frozenset) -> frozenset:
    """The last nonzero power ``J^d`` of a nilpotent ideal ``J``."""
    cur = ideal
    while True:
        nxt = frozenset(r[1] for a in cur for b in ideal if (r := M.table[a][b]) is not None)
        if not nxt:
            return cur
        if nxt == cur:
            raise ValidationError("ideal is not nilpotent")
        cur = nxt


def nilideal_witness(M: GLinearMonoid, ideal: frozenset) -> Optional[Representation]:
    """``J^d (x) V (+) V`` with ``V = M / N(M)`` (units and zero), or None if invalid.

    Coordinates: first ``J^d (x) V`` (pairs, ``V``-index fastest), then ``V``.
    """
    from .errors import FoneRepError

    Jd = sorted(_ideal_power_chain(M, ideal))
    units = list(M.jreport.classes[M.jreport.class_of[M.one]].members)
    G = M.group
    upos = {u: i for i, u in enumerate(units)}
    jpos = {j: i for i, j in enumerate(Jd)}
    nv = len(units)
    top = len(Jd) * nv
    d = top + nv
    Jset = set(Jd)

    def act_v(x, v):
        r = M.table[x][units[v]]
        if r is None or r[1] not in upos:
            return None
        return (upos[r[1]], r[0])

    action = []
    for x in range(M.dim):
        entries = [None] * d
        for j in Jd:
            for v in range(nv):
                col = jpos[j] * nv + v
                if x in Jset:
                    continue
                t = act_v(x, v)
                entries[col] = None if t is None else (jpos[j] * nv + t[0], t[1])
        for v in range(nv):
            col = top + v
            if x in Jset:
                # x (1 (x) v) = x (x) v
                entries[col] = (jpos[x] * nv + v, 0)
            else:
                t = act_v(x, v)
                entries[col] = None if t is None else (top + t[0], t[1])
        action.append(entries)
    try:
        return validate_rep(M, [Matrix(G, d, d, e) for e in action])
    except FoneRepError:
        return None


def translation_candidates(M: GLinearMonoid) -> list:
    """Left translation reps on left ideals ``M a`` that happen to be G-hat-linear."""
    from .errors import FoneRepError

    out = []
    seen = set()
    for a in range(M.dim):
        left = sorted(M.left_ideal(a))
        key = tuple(left)
        if key in seen:
            continue
        seen.add(key)
        pos = {k: i for i, k in enumerate(left)}
        try:
            action = []
            for x in range(M.dim):
                entries = []
                for k in left:
                    r = M.table[x][k]
                    entries.append(None if r is None else (pos[r[1]], r[0]))
                action.append(Matrix(M.group, len(left), len(left), entries))
            out.append(validate_rep(M, action))
        except FoneRepError:
            continue
    return out


def star_witness(M: GLinearMonoid) -> Optional[tuple]:
    """Embed ``M`` faithfully via ``(+) P(e)`` and find ``x`` with ``x* not in M``.

    Returns ``(V, W)``: ``V`` is the span of ``M x`` and ``x* x`` inside the
    rank-``d`` layer of ``I_k``, ``W`` the coordinates of ``M x``.
    """
    from .errors import FoneRepError
    from .fvect import direct_sum
    from .monoid import normalize_matrix as normalize_label
    from .rep import rep_from_principal_factor

    idems = idempotents(M, include_zero=False)
    try:
        parts = [rep_from_principal_factor(M, e) for e in idems]
    except FoneRepError:
        return None
    G = M.group
    mats = []
    for b in range(M.dim):
        A = parts[0].action[b]
        for P in parts[1:]:
            A = direct_sum(A, P.action[b])
        mats.append(A)
    if len(set(mats)) != M.dim:
        return None  # not faithful
    image = {}
    for b, A in enumerate(mats):
        for g in G.elements:
            image[A.scale(g)] = (g, b)
    for b, A in enumerate(mats):
        As = A.star()
        if As in image:
            continue
        dr = A.rank
        start = [A, compose(As, A)]
        seen = {}
        order = []
        stack = list(start)
        while stack:
            X = stack.pop()
            g, N = normalize_label(X)
            if N in seen:
                continue
            seen[N] = len(order)
            order.append(N)
            for B in mats:
                Y = compose(B, N)
                if Y.rank == dr:
                    stack.append(Y)
        mx = set()
        stack = [A]
        while stack:
            X = stack.pop()
            _, N = normalize_label(X)
            if N in mx:
                continue
            mx.add(N)
            for B in mats:
                Y = compose(B, N)
                if Y.rank == dr:
                    stack.append(Y)
        action = []
        for B in mats:
            entries = []
            for N in order:
                Y = compose(B, N)
                if Y.rank != dr:
                    entries.append(None)
                else:
                    g, Z = normalize_label(Y)
                    entries.append((seen[Z], g))
            action.append(Matrix(G, len(order), len(order), entries))
        V = validate_rep(M, action)
        return V, frozenset(seen[N] for N in mx)
    return None


def is_semisimple(M: GLinearMonoid, max_dim: int = 3) -> Verdict:
    """Decide whether every representation is completely reducible.

    Left inductive inverse monoids are semisimple.  Negative answers always
    carry a representation with an uncomplemented subrep; when no witness is
    found a bounded search runs over all representations up to ``max_dim`` and
    the verdict is Unknown if that finds none.
    """
    inductive = is_left_inductive(M)
    if inductive and is_inverse(M):
        return Verdict("Semisimple", "left inductive and inverse")
    candidates = []
    nil = nil_ideal(M)
    if nil:
        V = nilideal_witness(M, nil)
        if V is not None:
            candidates.append((V, "nilpotent ideal construction"))
    for V in translation_candidates(M):
        candidates.append((V, "left translation on a left ideal"))
    if inductive and not nil:
        sw = star_witness(M)
        if sw is not None:
            V, W = sw
            if complement(V, W) is None:
                return Verdict("NotSemisimple", "x* missing from the faithful image", V, W)
    for V, why in candidates:
        if V.dim > MAX_SUBREP_DIM:
            continue
        W = uncomplemented_subrep(V)
        if W is not None:
            return Verdict("NotSemisimple", why, V, W)
    # No witness yet.  The inverse criterion is not relied on here: regular,
    # left inductive, non-inverse monoids with semisimple Rep exist (zero bands).
    for d in range(1, max_dim + 1):
        for V in enumerate_reps(M, d, max_dim=max_dim):
            W = uncomplemented_subrep(V)
            if W is not None:
                return Verdict("NotSemisimple", "bounded search", V, W)
    why = "left inductive, not inverse" if inductive else "not left inductive"
    return Verdict("Unknown", f"{why}; all reps up to dim {max_dim} completely reducible")


# ---------------------------------------------------------------------------
# phi_H


def _compose_perm(p: tuple, q: tuple) -> tuple:
    """``p o q``."""
    return tuple(p[q[i]] for i in range(len(q)))


def _invert_perm(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def named_subgroup(n: int, name: str) -> frozenset:
    """``1``/``trivial``, ``A<n>``, ``S<n>``, ``V4`` (n = 4) as permutation tuples."""
    perms = list(itertools.permutations(range(n)))
    name = name.strip()
    if name in ("1", "trivial", "e"):
        return frozenset([tuple(range(n))])
    if name == f"S{n}":
        return frozenset(perms)
    if name == f"A{n}":
        return frozenset(p for p in perms if _sign(p) == 1)
    if name == "V4" and n == 4:
        return frozenset([(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)])
    raise ValidationError(f"unknown subgroup name {name!r} for n = {n}")


def _sign(p: tuple) -> int:
    s = 1
    seen = set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def normal_subgroups(n: int) -> list:
    """All normal subgroups of ``S_n`` (brute force over generated subgroups)."""
    perms = list(itertools.permutations(range(n)))
    ident = tuple(range(n))
    subs = set()
    for k in (1, 2):
        for gens in itertools.combinations(perms, k):
            H = {ident}
            frontier = [ident]
            while frontier:
                new = []
                for h in frontier:
                    for g in gens:
                        x = _compose_perm(h, g)
                        if x not in H:
                            H.add(x)
                            new.append(x)
                frontier = new
            subs.add(frozenset(H))
    subs.add(frozenset([ident]))
    out = [H for H in subs if _is_normal(H, perms)]
    return sorted(out, key=lambda H: (len(H), sorted(H)))


def _is_normal(H: frozenset, perms) -> bool:
    return all(_compose_perm(_compose_perm(g, h), _invert_perm(g)) in H for g in perms for h in H)


def _cosets(n: int, H: frozenset) -> list:
    perms = sorted(itertools.permutations(range(n)))
    seen = {}
    out = []
    for p in perms:
        c = frozenset(_compose_perm(p, h) for h in H)
        if c not in seen:
            seen[c] = len(out)
            out.append(c)
    return out


def phi_h_matrix(A: Matrix, H: frozenset) -> Matrix:
    """Closed form of ``phi_H`` at a point.

    A full-rank ``A`` with permutation ``pi`` and labels ``c`` sends coset
    ``bH`` to ``(prod c) * pi b H``; lower rank gives 0.
    """
    n = A.rows
    cosets = _cosets(n, H)
    index = {}
    for i, c in enumerate(cosets):
        for p in c:
            index[p] = i
    d = len(cosets)
    if not A.is_invertible():
        return Matrix.zero(A.group, d, d)
    pi = A.permutation()
    lab = A.label_product()
    entries = []
    for c in cosets:
        b = min(c)
        entries.append((index[_compose_perm(pi, b)], lab))
    return Matrix(A.group, d, d, entries)


def phi_h_polynomial(A: Matrix, H: frozenset) -> Matrix:
    """Direct evaluation of ``sum_{sigma in P(ab^-1)} prod_k A_{sigma(k) k}``.

    The group ``G^n x| S_n`` and its normal subgroup ``G^n x| H`` are built
    explicitly; ``P`` collects the ``sigma`` whose whole fibre lies in the coset.
    """
    G = A.group
    n = A.rows
    perms = sorted(itertools.permutations(range(n)))
    labels = list(itertools.product(G.elements, repeat=n))
    mul, inv = G._mul, G._inv

    def gmul(x, y):
        # (c, s)(d, t) = (c * (d o s^-1), s t)
        c, s = x
        dd, t = y
        sinv = _invert_perm(s)
        return (tuple(mul[c[i]][dd[sinv[i]]] for i in range(n)), _compose_perm(s, t))

    def ginv(x):
        c, s = x
        # (c, s)^-1 = (c^-1 o s, s^-1)
        return (tuple(inv[c[s[i]]] for i in range(n)), _invert_perm(s))

    N = {(c, h) for c in labels for h in H}
    cosets = []
    seen = set()
    for s in perms:
        a = (tuple([0] * n), s)
        if a in seen:
            continue
        coset = frozenset(gmul(a, x) for x in N)
        seen |= coset
        cosets.append((a, coset))
    d = len(cosets)
    entries = [None] * d
    for bi, (b, _) in enumerate(cosets):
        for ai, (a, _) in enumerate(cosets):
            ab = gmul(a, ginv(b))
            coset = frozenset(gmul(ab, x) for x in N)
            P = [s for s in perms if all((c, s) in coset for c in labels)]
            total = None
            for s in P:
                term = 0
                for k in range(n):
                    e = A.entries[k]
                    if e is None or e[0] != s[k]:
                        term = None
                        break
                    term = mul[term][e[1]]
                if term is None:
                    continue
                if total is not None:
                    raise AssertionError("two nonzero monomials in one entry")
                total = term
            if total is not None:
                if entries[bi] is not None:
                    raise AssertionError("column with two nonzero entries")
                entries[bi] = (ai, total)
    return Matrix(G, d, d, entries)


def phi_h_rep(n: int, group: PointedGroup, H, M: Optional[GLinearMonoid] = None,
              check_scalars: bool = True) -> Representation:
    """``phi_H`` as a representation of ``I_n(G-hat)`` of dimension ``[S_n : H]``.

    Scalars ``g * 1`` act by ``g^n``, so the result is G-hat-linear only when
    ``g^(n-1) = 1`` for all ``g``; otherwise ScalarMismatch is raised (pass
    ``check_scalars=False`` to get the underlying monoid homomorphism anyway).
    """
    if isinstance(H, str):
        H = named_subgroup(n, H)
    H = frozenset(tuple(p) for p in H)
    perms = list(itertools.permutations(range(n)))
    ident = tuple(range(n))
    if ident not in H or any(_compose_perm(a, b) not in H for a in H for b in H):
        raise ValidationError("H is not a subgroup of S_n")
    if not _is_normal(H, perms):
        raise NotNormal("H is not normal in S_n")
    if check_scalars and any(group.power(g, n - 1) != 0 for g in group.elements):
        raise ScalarMismatch(f"phi_H sends g to g^{n}, which differs from g unless g^{n - 1} = 1",
                             witness={"exponent": group.exponent, "n": n})
    if M is None:
        M = symmetric_inverse_monoid(n, group)
    action = tuple(phi_h_matrix(A, H) for A in M.realization)
    V = Representation(M, action[0].rows, action)
    if check_scalars:
        return validate_rep(M, action)
    return V
