"""Representations of G-hat-linear monoids on G-hat^{(+)d}.

A representation stores one submonomial matrix per basis element of the
monoid; ``rho(g b) = g rho(b)`` and ``rho(0) = 0`` are implicit.  Every
subrepresentation is spanned by a set of coordinates (subspaces are unions of
G-orbits), so the lattice of subreps is a lattice of coordinate sets.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import (
    BadIdentity,
    DimMismatch,
    DimTooLarge,
    GroupMismatch,
    NonInjective,
    NotFunctorial,
    NotInductiveHere,
    ValidationError,
)
from .fvect import Matrix, compose
from .monoid import GLinearMonoid, JClass, check_idempotent, opposite

MAX_SUBREP_DIM = 16
MAX_ISO_DIM = 8
KEY_BUDGET = 50_000


@dataclass(frozen=True, eq=False)
class Representation:
    monoid: GLinearMonoid
    dim: int
    action: tuple  # basis index -> Matrix

    def matrix(self, x) -> Matrix:
        if x is None:
            return Matrix.zero(self.monoid.group, self.dim, self.dim)
        return self.action[x[1]].scale(x[0])

    def __getitem__(self, name: str) -> Matrix:
        return self.action[self.monoid.index(name)]

    def successors(self) -> tuple:
        """``succ[i]``: coordinates hit by some ``rho(b) e_i``."""
        return self._succ

    @cached_property
    def _succ(self) -> tuple:
        out = [set() for _ in range(self.dim)]
        for A in self.action:
            for j, e in enumerate(A.entries):
                if e is not None:
                    out[j].add(e[0])
        return tuple(frozenset(s) for s in out)

    def same_action(self, other: "Representation") -> bool:
        return self.monoid is other.monoid and self.action == other.action

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "action": {name: self.action[i].to_json() for i, name in enumerate(self.monoid.basis)}}

    def __repr__(self):
        return f"Representation(dim={self.dim}, monoid={self.monoid!r})"


def validate_rep(M: GLinearMonoid, action) -> Representation:
    """Check ``rho(1) = I`` and ``rho(a) rho(b) = rho(ab)`` on all basis pairs.

    ``action`` is a sequence indexed by basis, or a mapping from basis names.
    """
    if isinstance(action, Mapping):
        missing = [name for name in M.basis if name not in action]
        if missing:
            raise ValidationError(f"action missing basis elements {missing}", witness=missing)
        extra = sorted(set(action) - set(M.basis))
        if extra:
            raise ValidationError(f"unknown basis elements {extra}", witness=extra)
        action = [action[name] for name in M.basis]
    action = tuple(action)
    if len(action) != M.dim:
        raise ValidationError(f"expected {M.dim} matrices, got {len(action)}")
    d = action[M.one].rows
    for name, A in zip(M.basis, action):
        if A.group != M.group:
            raise GroupMismatch(f"matrix for {name!r} is over the wrong group")
        if A.rows != d or A.cols != d:
            raise DimMismatch(f"matrix for {name!r} is {A.rows}x{A.cols}, expected {d}x{d}")
    if not action[M.one].is_identity():
        raise BadIdentity("rho(1) is not the identity", witness=action[M.one].to_json())
    zero = Matrix.zero(M.group, d, d)
    for a in range(M.dim):
        for b in range(M.dim):
            r = M.table[a][b]
            want = zero if r is None else action[r[1]].scale(r[0])
            if compose(action[a], action[b]) != want:
                raise NotFunctorial(f"rho({M.basis[a]}) rho({M.basis[b]}) != rho({M.basis[a]} {M.basis[b]})",
                                    witness=[M.basis[a], M.basis[b]])
    return Representation(M, d, action)


def rep_from_json(M: GLinearMonoid, data: Mapping) -> Representation:
    d = int(data["dim"])
    action = {}
    for name, mat in data["action"].items():
        A = Matrix.from_json(mat, M.group)
        if A.rows != d or A.cols != d:
            raise DimMismatch(f"matrix for {name!r} is not {d}x{d}")
        action[name] = A
    return validate_rep(M, action)


def zero_rep(M: GLinearMonoid) -> Representation:
    return Representation(M, 0, tuple(Matrix.zero(M.group, 0, 0) for _ in range(M.dim)))


def regular_rep(M: GLinearMonoid) -> Representation:
    """``M`` acting on itself by left multiplication."""
    action = []
    for a in range(M.dim):
        entries = []
        for x in range(M.dim):
            r = M.table[a][x]
            entries.append(None if r is None else (r[1], r[0]))
        action.append(Matrix(M.group, M.dim, M.dim, entries))
    return Representation(M, M.dim, tuple(action))


def defining_rep(M: GLinearMonoid) -> Representation:
    """For monoids realized by matrices (e.g. ``I_n``): the inclusion."""
    return Representation(M, M.realization[0].rows, tuple(M.realization))


def direct_sum_rep(V: Representation, W: Representation) -> Representation:
    from .fvect import direct_sum

    if V.monoid is not W.monoid:
        raise ValidationError("direct sum of representations of different monoids")
    return Representation(V.monoid, V.dim + W.dim,
                          tuple(direct_sum(A, B) for A, B in zip(V.action, W.action)))


def change_basis(V: Representation, P: Matrix) -> Representation:
    """``P rho P^-1`` for an invertible submonomial ``P``."""
    if not P.is_invertible() or P.rows != V.dim:
        raise DimMismatch("change of basis needs an invertible d x d matrix")
    Pinv = P.star()
    return Representation(V.monoid, V.dim, tuple(compose(compose(P, A), Pinv) for A in V.action))


def rep_from_principal_factor(M: GLinearMonoid, e, side: str = "left") -> Representation:
    """Translation representation on the carrier of ``P(e)``.

    ``side="right"`` returns a representation of the opposite monoid.
    """
    from .monoid import principal_factor

    check_idempotent(M, e)
    pf = principal_factor(M, e)
    table = pf.left if side == "left" else pf.right
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    action = []
    for x in range(M.dim):
        try:
            action.append(Matrix(M.group, pf.dim, pf.dim, table[x]))
        except NonInjective:
            raise NotInductiveHere(f"{side} translation by {M.basis[x]} is not G-hat-linear on P(e)",
                                   witness=M.basis[x]) from None
    target = M if side == "left" else opposite(M)
    return Representation(target, pf.dim, tuple(action))


# ---------------------------------------------------------------------------
# subrepresentations


@dataclass(frozen=True)
class SubRep:
    parent: Representation
    coords: frozenset

    @property
    def dim(self) -> int:
        return len(self.coords)

    def as_rep(self) -> Representation:
        return restrict_coords(self.parent, sorted(self.coords))

    def inclusion(self) -> Matrix:
        cs = sorted(self.coords)
        return Matrix(self.parent.monoid.group, self.parent.dim, len(cs), [(c, 0) for c in cs])


def _coord(v) -> int:
    return v if isinstance(v, int) else v[1]


def closure(V: Representation, coords: Iterable[int]) -> frozenset:
    succ = V.successors()
    seen = set(coords)
    stack = list(seen)
    while stack:
        i = stack.pop()
        for j in succ[i]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return frozenset(seen)


def is_closed(V: Representation, coords: Iterable[int]) -> bool:
    S = set(coords)
    succ = V.successors()
    return all(succ[i] <= S for i in S)


def sub_generated(V: Representation, vectors: Iterable = ()) -> SubRep:
    """Smallest subrep containing the given vectors (``(g, i)`` pairs or indices)."""
    return SubRep(V, closure(V, (_coord(v) for v in vectors if v is not None)))


def all_subreps(V: Representation, max_dim: int = MAX_SUBREP_DIM) -> list:
    """Every subrep, coordinate sets in binary-counter order."""
    if V.dim > max_dim:
        raise DimTooLarge(f"all_subreps on dim {V.dim} exceeds cap {max_dim}")
    succ = [sum(1 << j for j in s) for s in V.successors()]
    out = []
    for mask in range(1 << V.dim):
        ok = True
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if succ[i] & ~mask:
                ok = False
                break
            m ^= low
        if ok:
            out.append(SubRep(V, frozenset(i for i in range(V.dim) if mask >> i & 1)))
    return out


def restrict_coords(V: Representation, coords: Sequence[int]) -> Representation:
    """Action on the span of ``coords`` (must be closed) in the given order."""
    pos = {c: k for k, c in enumerate(coords)}
    action = []
    for A in V.action:
        entries = []
        for c in coords:
            e = A.entries[c]
            if e is None:
                entries.append(None)
            elif e[0] not in pos:
                raise ValidationError("coordinate set is not action-closed")
            else:
                entries.append((pos[e[0]], e[1]))
        action.append(Matrix(A.group, len(coords), len(coords), entries, check=False))
    return Representation(V.monoid, len(coords), tuple(action))


def quotient(V: Representation, W) -> Representation:
    """``V / W``: the complementary coordinates, with entries landing in ``W`` zeroed."""
    wc = W.coords if isinstance(W, SubRep) else frozenset(W)
    if not is_closed(V, wc):
        raise ValidationError("quotient by a non-closed coordinate set")
    keep = [c for c in range(V.dim) if c not in wc]
    pos = {c: k for k, c in enumerate(keep)}
    action = []
    for A in V.action:
        entries = []
        for c in keep:
            e = A.entries[c]
            entries.append(None if e is None or e[0] in wc else (pos[e[0]], e[1]))
        action.append(Matrix(A.group, len(keep), len(keep), entries, check=False))
    return Representation(V.monoid, len(keep), tuple(action))


def is_simple(V: Representation) -> bool:
    if V.dim == 0:
        return False
    return all(len(closure(V, [i])) == V.dim for i in range(V.dim))


def components(V: Representation) -> list:
    """Connected components of the coordinate graph (the indecomposable summands)."""
    adj = [set() for _ in range(V.dim)]
    for i, s in enumerate(V.successors()):
        for j in s:
            adj[i].add(j)
            adj[j].add(i)
    seen = set()
    out = []
    for i in range(V.dim):
        if i in seen:
            continue
        comp = {i}
        stack = [i]
        while stack:
            k = stack.pop()
            for j in adj[k]:
                if j not in comp:
                    comp.add(j)
                    stack.append(j)
        seen |= comp
        out.append(tuple(sorted(comp)))
    return out


def is_indecomposable(V: Representation) -> bool:
    return V.dim > 0 and len(components(V)) == 1


# ---------------------------------------------------------------------------
# morphisms


def _intertwiners(V: Representation, W: Representation, invertible: bool) -> Iterator[Matrix]:
    """All ``F: V -> W`` with ``F rho_V(b) = rho_W(b) F``, by propagation search."""
    G = V.monoid.group
    mul, inv = G._mul, G._inv
    dv, dw = V.dim, W.dim
    va = [A.entries for A in V.action]
    wa = [A.entries for A in W.action]
    nb = len(va)

    def wapply(b, w):
        if w is None:
            return None
        e = wa[b][w[0]]
        return None if e is None else (e[0], mul[e[1]][w[1]])

    def assign(F, used, j, w):
        """Set ``F(e_j) = w`` and propagate; returns the list of set columns or None."""
        trail = []
        queue = [(j, w)]
        while queue:
            j, w = queue.pop()
            cur = F[j]
            if cur is not _UNSET:
                if cur != w:
                    _undo(F, used, trail)
                    return None
                continue
            if w is not None:
                if w[0] in used:
                    _undo(F, used, trail)
                    return None
                used.add(w[0])
            elif invertible:
                _undo(F, used, trail)
                return None
            F[j] = w
            trail.append(j)
            for b in range(nb):
                e = va[b][j]
                target = wapply(b, w)
                if e is None:
                    if target is not None:
                        _undo(F, used, trail)
                        return None
                    continue
                k, h = e
                # F(h e_k) = rho_W(b) F(e_j)
                queue.append((k, None if target is None else (target[0], mul[inv[h]][target[1]])))
        return trail

    candidates = [None] if not invertible else []
    candidates += [(r, g) for r in range(dw) for g in G.elements]

    F = [_UNSET] * dv
    used = set()

    def rec():
        try:
            j = F.index(_UNSET)
        except ValueError:
            yield Matrix(G, dw, dv, list(F), check=False)
            return
        for w in candidates:
            if w is not None and w[0] in used:
                continue
            trail = assign(F, used, j, w)
            if trail is None:
                continue
            yield from rec()
            _undo(F, used, trail)

    yield from rec()


_UNSET = object()


def _undo(F, used, trail):
    for j in trail:
        if F[j] is not None:
            used.discard(F[j][0])
        F[j] = _UNSET
    trail.clear()


def hom(V: Representation, W: Representation) -> list:
    return list(_intertwiners(V, W, invertible=False))


def endomorphisms(V: Representation, max_dim: int = MAX_ISO_DIM) -> list:
    """Every submonomial ``F`` commuting with all ``rho(b)``."""
    if V.dim > max_dim:
        raise DimTooLarge(f"endomorphisms on dim {V.dim} exceeds cap {max_dim}")
    return hom(V, V)


def _profile(V: Representation) -> tuple:
    return tuple(A.rank for A in V.action)


def are_isomorphic(V: Representation, W: Representation, max_dim: int = MAX_ISO_DIM) -> Optional[Matrix]:
    """An invertible intertwiner ``P`` with ``P rho_V = rho_W P``, or None."""
    if V.dim != W.dim or _profile(V) != _profile(W):
        return None
    if V.dim > max_dim:
        raise DimTooLarge(f"are_isomorphic on dim {V.dim} exceeds cap {max_dim}")
    return next(_intertwiners(V, W, invertible=True), None)


# ---------------------------------------------------------------------------
# canonical keys


def _serialize(V: Representation, order: Sequence[int], labels: Sequence[int]) -> tuple:
    G = V.monoid.group
    mul, inv = G._mul, G._inv
    pos = {c: k for k, c in enumerate(order)}
    out = []
    for A in V.action:
        for c in order:
            e = A.entries[c]
            if e is None:
                out.append(-1)
            else:
                # new basis f_k = labels[k] e_{order[k]}
                r, g = e
                out.append(pos[r] * G.size + mul[mul[g][labels[c]]][inv[labels[r]]])
    return tuple(out)


def _sequences(V: Representation, budget: int):
    """Deterministic relabelings: BFS discovery from chosen starts.

    Yields ``(order, labels)``; raises StopIteration early via budget.
    """
    G = V.monoid.group
    mul = G._mul
    d = V.dim
    count = [0]

    def rec(order, labels, first):
        if len(order) == d:
            count[0] += 1
            if count[0] > budget:
                raise _BudgetExceeded
            yield list(order), dict(labels)
            return
        for s in range(d):
            if s in labels:
                continue
            for g in ([0] if first else G.elements):
                order2 = order + [s]
                labels2 = dict(labels)
                labels2[s] = g
                k = len(order)
                while k < len(order2):
                    c = order2[k]
                    for A in V.action:
                        e = A.entries[c]
                        if e is not None and e[0] not in labels2:
                            labels2[e[0]] = mul[e[1]][labels2[c]]
                            order2.append(e[0])
                    k += 1
                yield from rec(order2, labels2, False)

    yield from rec([], {}, True)


class _BudgetExceeded(Exception):
    pass


def iso_key(V: Representation, budget: int = KEY_BUDGET) -> tuple:
    """Isomorphism-invariant key.

    ``("canon", dim, serialization)`` is a complete invariant; when the search
    budget is exhausted, ``("inv", ...)`` is only a partial invariant and
    equality must be confirmed with :func:`are_isomorphic`.
    """
    best = None
    try:
        for order, labels in _sequences(V, budget):
            s = _serialize(V, order, labels)
            if best is None or s < best:
                best = s
    except _BudgetExceeded:
        return ("inv", V.dim, tuple(sorted(annihilator(V))), _profile(V))
    return ("canon", V.dim, best or ())


def key_digest(key: tuple) -> str:
    return hashlib.sha1(repr(key).encode()).hexdigest()[:16]


def canonical_form(V: Representation) -> Representation:
    best = None
    for order, labels in _sequences(V, KEY_BUDGET):
        s = _serialize(V, order, labels)
        if best is None or s < best[0]:
            best = (s, order, labels)
    if best is None:
        return V
    _, order, labels = best
    G = V.monoid.group
    # P e_{order[k]} = labels^-1 f_k
    entries = [None] * V.dim
    for k, c in enumerate(order):
        entries[c] = (k, G._inv[labels[c]])
    P = Matrix(G, V.dim, V.dim, entries)
    return change_basis(V, P)


def same_iso_multiset(keys_a: Sequence, reps_a: Sequence, keys_b: Sequence, reps_b: Sequence) -> bool:
    """Compare two multisets of iso classes, resolving partial keys by search."""
    if len(reps_a) != len(reps_b):
        return False
    pool = list(range(len(reps_b)))
    for ka, va in zip(keys_a, reps_a):
        for idx in pool:
            kb = keys_b[idx]
            if ka[0] == "canon" and kb[0] == "canon":
                match = ka == kb
            else:
                match = ka[1] == kb[1] and are_isomorphic(va, reps_b[idx]) is not None
            if match:
                pool.remove(idx)
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# decompositions


@dataclass(frozen=True)
class Summand:
    coords: tuple
    key: tuple
    rep: Representation


@dataclass(frozen=True)
class Decomposition:
    summands: tuple

    def keys(self) -> list:
        return sorted(s.key for s in self.summands)


def krull_schmidt(V: Representation) -> Decomposition:
    """Split ``V`` into indecomposable coordinate blocks."""
    out = []
    for comp in components(V):
        W = restrict_coords(V, comp)
        out.append(Summand(comp, iso_key(W), W))
    return Decomposition(tuple(out))


@dataclass(frozen=True)
class CompositionSeries:
    chain: tuple  # frozensets, 0 = V_0 < ... < V_n = V
    factors: tuple  # Representations V_i / V_{i-1}
    keys: tuple


def jordan_holder(V: Representation, tie_break: str = "low") -> CompositionSeries:
    """A maximal chain of subreps; ``tie_break`` picks among covers ("low" or "high")."""
    current = frozenset()
    chain = [current]
    factors = []
    order = range(V.dim) if tie_break == "low" else range(V.dim - 1, -1, -1)
    while len(current) < V.dim:
        covers = []
        for i in order:
            if i in current:
                continue
            C = closure(V, current | {i})
            if C not in covers:
                covers.append(C)
        minimal = [C for C in covers if not any(D < C for D in covers)]
        nxt = minimal[0]
        sub = restrict_coords(V, sorted(nxt))
        pos = {c: k for k, c in enumerate(sorted(nxt))}
        factors.append(quotient(sub, [pos[c] for c in current]))
        chain.append(nxt)
        current = nxt
    return CompositionSeries(tuple(chain), tuple(factors), tuple(iso_key(F) for F in factors))


# ---------------------------------------------------------------------------
# annihilators and apexes


def annihilator(V: Representation) -> frozenset:
    return frozenset(b for b, A in enumerate(V.action) if A.is_zero())


def ideal_below(M: GLinearMonoid, cls: JClass) -> frozenset:
    """``I_J``: basis elements whose J-class is not above ``J``."""
    report = M.jreport
    return frozenset(b for b in range(M.dim) if not report.leq(cls.index, report.class_of[b]))


def apex(V: Representation) -> Optional[JClass]:
    """The regular nonzero J-class ``J`` with ``Ann(V) = I_J``, if any."""
    M = V.monoid
    ann = annihilator(V)
    for cls in M.jreport.regular_classes:
        if ideal_below(M, cls) == ann:
            return cls
    return None


# ---------------------------------------------------------------------------
# brute-force enumeration (oracle)

MAX_ENUM_DIM = 4


def _oracle_generators(M: GLinearMonoid) -> list:
    """Generators chosen top-down through the J-order, idempotents preferred."""
    from .monoid import idempotent_in_orbit

    rank = {b: (-len(M.ideal(b)), idempotent_in_orbit(M, b) is None) for b in range(M.dim)}
    gens = []
    reached = {M.one}
    while len(reached) < M.dim:
        # highest unreached layer first; within it, the element reaching the most
        top = min(rank[b] for b in range(M.dim) if b not in reached)
        best, best_reach = None, None
        for b in range(M.dim):
            if b in reached or rank[b] != top:
                continue
            r = _reach(M, gens + [b])
            if best is None or len(r) > len(best_reach):
                best, best_reach = b, r
        gens.append(best)
        reached = best_reach
    return gens


def _reach(M: GLinearMonoid, gens: Sequence[int]) -> set:
    reached = {M.one}
    stack = [M.one]
    while stack:
        a = stack.pop()
        for k in gens:
            r = M.table[a][k]
            if r is not None and r[1] not in reached:
                reached.add(r[1])
                stack.append(r[1])
    return reached


def _consistent_closure(M: GLinearMonoid, gens: Sequence[int], images: Sequence[Matrix], d: int):
    """Extend ``gen -> image`` multiplicatively; None on any clash."""
    G = M.group
    rho = {M.one: Matrix.identity(G, d)}
    stack = [M.one]
    while stack:
        a = stack.pop()
        A = rho[a]
        for k, K in zip(gens, images):
            X = compose(A, K)
            r = M.table[a][k]
            if r is None:
                if not X.is_zero():
                    return None
                continue
            Y = X.scale(G.inv(r[0]))
            old = rho.get(r[1])
            if old is None:
                rho[r[1]] = Y
                stack.append(r[1])
            elif old != Y:
                return None
    return rho


def enumerate_reps(M: GLinearMonoid, d: int, max_dim: int = MAX_ENUM_DIM) -> Iterator[Representation]:
    """Every representation of dimension ``d`` (not up to isomorphism).

    Generators are assigned one at a time; each partial assignment is pruned
    by checking that it extends consistently to the submonoid it generates.
    """
    from .fvect import enumerate_idempotents, enumerate_invertible, enumerate_matrices
    from .monoid import idempotent_in_orbit

    if d > max_dim:
        raise DimTooLarge(f"rep enumeration in dim {d} exceeds cap {max_dim}")
    G = M.group
    gens = _oracle_generators(M)
    units = set(M.jreport.classes[M.jreport.class_of[M.one]].members)
    pools = []
    for k in gens:
        e = idempotent_in_orbit(M, k)
        if k in units:
            pool = list(enumerate_invertible(G, d))
        elif e is not None:
            # rho(e) is idempotent; the orbit representative is g^-1 e
            pool = [E.scale(G.inv(e[0])) for E in enumerate_idempotents(G, d)]
        else:
            pool = list(enumerate_matrices(G, d, d))
        pools.append(pool)

    def cheap_ok(k, X, rho, images):
        # products among assigned generators whose value is already known
        pairs = [(k, X, k, X)] + [(k, X, g, Y) for g, Y in zip(gens, images)] \
            + [(g, Y, k, X) for g, Y in zip(gens, images)]
        for a, A, b, B in pairs:
            r = M.table[a][b]
            if r is None:
                if not compose(A, B).is_zero():
                    return False
            elif r[1] in rho and compose(A, B) != rho[r[1]].scale(r[0]):
                return False
        return True

    def rec(i, images, rho):
        if i == len(gens):
            yield Representation(M, d, tuple(rho[b] for b in range(M.dim)))
            return
        for X in pools[i]:
            if not cheap_ok(gens[i], X, rho, images):
                continue
            images.append(X)
            nxt = _consistent_closure(M, gens[:i + 1], images, d)
            if nxt is not None:
                yield from rec(i + 1, images, nxt)
            images.pop()

    yield from rec(0, [], {M.one: Matrix.identity(G, d)})


def iso_classes(reps: Iterable[Representation]) -> list:
    """Representatives of the isomorphism classes among ``reps``."""
    out = {}
    partial = []
    for V in reps:
        k = iso_key(V)
        if k[0] == "canon":
            out.setdefault(k, V)
        elif not any(are_isomorphic(V, W, max_dim=V.dim) for W in partial):
            partial.append(V)
    return list(out.values()) + partial
