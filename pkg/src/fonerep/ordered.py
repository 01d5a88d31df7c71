"""Ordered G-hat-linear monoids and join-respecting representations.

The natural order on ``I_n(G-hat)`` is extension of partial maps: ``A <= B``
when ``B`` agrees with ``A`` wherever ``A`` is nonzero.  Joins are compatible
unions; compatibility is pairwise, so iterated pairwise joins compute the
join of any finite set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import AxiomViolated, DimMismatch, ValidationError
from .fvect import Matrix
from .monoid import GLinearMonoid
from .rep import Representation

MAX_SUBSET = 3


def natural_leq(A: Matrix, B: Matrix) -> bool:
    if (A.rows, A.cols) != (B.rows, B.cols):
        raise DimMismatch("natural order compares matrices of equal shape")
    return all(a is None or a == b for a, b in zip(A.entries, B.entries))


def join(mats: Iterable[Matrix]) -> Optional[Matrix]:
    """Least upper bound in the natural order, or None if it does not exist."""
    mats = list(mats)
    if not mats:
        raise ValueError("join of an empty family needs a shape; use the zero matrix")
    first = mats[0]
    entries = list(first.entries)
    for A in mats[1:]:
        if (A.rows, A.cols) != (first.rows, first.cols):
            raise DimMismatch("join of matrices of different shapes")
        for j, e in enumerate(A.entries):
            if e is None:
                continue
            if entries[j] is None:
                entries[j] = e
            elif entries[j] != e:
                return None
    rows = [e[0] for e in entries if e is not None]
    if len(rows) != len(set(rows)):
        return None
    return Matrix(first.group, first.rows, first.cols, entries, check=False)


def meet(mats: Iterable[Matrix]) -> Matrix:
    mats = list(mats)
    if not mats:
        raise ValueError("meet of an empty family is undefined")
    first = mats[0]
    entries = [e if all(A.entries[j] == e for A in mats[1:]) else None
               for j, e in enumerate(first.entries)]
    return Matrix(first.group, first.rows, first.cols, entries, check=False)


@dataclass(frozen=True, eq=False)
class OrderedMonoid:
    """A monoid with a partial order on its elements (``None`` is zero).

    ``pairs`` is the reflexive-transitive relation as a set of element pairs.
    ``natural`` marks the natural order on a matrix monoid, where joins of
    arbitrary sets reduce to pairwise joins.
    """

    monoid: GLinearMonoid
    pairs: frozenset
    natural: bool = False

    def leq(self, x, y) -> bool:
        return (x, y) in self.pairs

    @cached_property
    def elements(self) -> list:
        return list(self.monoid.elements())

    @cached_property
    def _up(self) -> dict:
        up = {x: set() for x in self.elements}
        for x, y in self.pairs:
            up[x].add(y)
        return up

    @cached_property
    def _down(self) -> dict:
        down = {x: set() for x in self.elements}
        for x, y in self.pairs:
            down[y].add(x)
        return down

    def join(self, xs: Iterable):
        """Least upper bound, or ``_NONE`` when it does not exist."""
        xs = list(xs)
        if not xs:
            bounds = set(self.elements)
        else:
            bounds = set.intersection(*(self._up[x] for x in xs))
        least = [z for z in bounds if all(self.leq(z, w) for w in bounds)]
        return least[0] if least else NONE

    def meet(self, xs: Iterable):
        xs = list(xs)
        if not xs:
            bounds = set(self.elements)
        else:
            bounds = set.intersection(*(self._down[x] for x in xs))
        greatest = [z for z in bounds if all(self.leq(w, z) for w in bounds)]
        return greatest[0] if greatest else NONE


class _Missing:
    def __repr__(self):
        return "NONE"


NONE = _Missing()


def natural_order(M: GLinearMonoid) -> OrderedMonoid:
    """The natural order on a monoid realized by matrices (e.g. ``I_n``)."""
    if M.realization is None:
        raise ValidationError("natural order needs a matrix realization")
    elems = list(M.elements())
    mats = {x: M.matrix_of(x) for x in elems}
    pairs = frozenset((x, y) for x in elems for y in elems if natural_leq(mats[x], mats[y]))
    return OrderedMonoid(M, pairs, natural=True)


def flat_order(M: GLinearMonoid) -> OrderedMonoid:
    """``0`` below everything, all nonzero elements incomparable."""
    elems = list(M.elements())
    pairs = {(x, x) for x in elems} | {(None, x) for x in elems}
    return OrderedMonoid(M, frozenset(pairs))


def order_from_pairs(M: GLinearMonoid, pairs: Iterable) -> OrderedMonoid:
    """Reflexive-transitive closure of the given ``(x, y)`` pairs; rejects cycles."""
    elems = list(M.elements())
    up = {x: {x} for x in elems}
    for x, y in pairs:
        up[x].add(y)
    changed = True
    while changed:
        changed = False
        for x in elems:
            new = set().union(*(up[y] for y in up[x]))
            if new != up[x]:
                up[x] = new
                changed = True
    for x in elems:
        for y in up[x]:
            if y != x and x in up[y]:
                raise ValidationError("order relation has a cycle",
                                      witness=[M.element_name(x), M.element_name(y)])
    return OrderedMonoid(M, frozenset((x, y) for x in elems for y in up[x]))


def order_from_json(M: GLinearMonoid, data) -> OrderedMonoid:
    def elem(v):
        if v == "0" or v is None:
            return None
        return M.element_from_json(v)

    return order_from_pairs(M, [(elem(a), elem(b)) for a, b in data])


def _subsets(elements: Sequence, max_size: int):
    for k in range(max_size + 1):
        yield from itertools.combinations(elements, k)


@dataclass(frozen=True)
class OrderVerdict:
    ok: bool
    complete: bool
    witness: Optional[dict] = None

    def __bool__(self):
        return self.ok


def validate_ordered(OM: OrderedMonoid, max_size: int = MAX_SUBSET, raise_on_failure: bool = False) -> OrderVerdict:
    """Check the ordered-monoid axioms.

    ``0`` must be the unique minimal element, and multiplication on either side
    must distribute over existing joins and meets.  Subsets up to ``max_size``
    are checked; for the natural order this is complete (pairwise reduction).
    """
    M = OM.monoid
    elems = OM.elements

    def fail(msg, witness):
        if raise_on_failure:
            raise AxiomViolated(msg, witness=witness)
        return OrderVerdict(False, True, witness)

    names = M.element_name
    for x in elems:
        if not OM.leq(None, x):
            return fail("0 is not below every element", {"axiom": 1, "element": names(x)})
    for x in elems:
        for y in elems:
            if x != y and OM.leq(x, y) and OM.leq(y, x):
                return fail("relation is not antisymmetric", {"elements": [names(x), names(y)]})
    nonzero = [x for x in elems if x is not None]
    size = min(max_size, 2) if OM.natural else max_size
    for kind, op in (("join", OM.join), ("meet", OM.meet)):
        for I in _subsets(nonzero, size):
            if kind == "meet" and not I:
                continue
            u = op(I)
            if u is NONE:
                continue
            for x in elems:
                left = op([M.mul(x, a) for a in I])
                right = op([M.mul(a, x) for a in I])
                if left is NONE or left != M.mul(x, u) or right is NONE or right != M.mul(u, x):
                    return fail(f"multiplication does not distribute over a {kind}",
                                {"axiom": 2 if kind == "join" else 3, "x": names(x),
                                 "subset": [names(a) for a in I]})
    complete = OM.natural or len(nonzero) <= max_size
    return OrderVerdict(True, complete)


def complete_orthogonal_systems(OM: OrderedMonoid) -> list:
    """All sets of nonzero elements with ``e_i e_j = delta_ij e_j`` whose join is 1.

    Zero is dropped from systems (it is join-neutral).  Only idempotents can
    occur since ``e_i e_i = e_i`` is part of the orthogonality condition.
    """
    M = OM.monoid
    cands = [x for x in OM.elements if x is not None and M.mul(x, x) == x]
    out = []

    def rec(start, chosen):
        if chosen and OM.join(chosen) == M.unit:
            out.append(tuple(chosen))
        for i in range(start, len(cands)):
            e = cands[i]
            if all(M.mul(e, f) is None and M.mul(f, e) is None for f in chosen):
                chosen.append(e)
                rec(i + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out


@dataclass(frozen=True)
class JoinVerdict:
    ok: bool
    complete: bool
    witness: Optional[list] = None

    def __bool__(self):
        return self.ok


def respects_joins(V: Representation, OM: OrderedMonoid, max_size: int = MAX_SUBSET) -> JoinVerdict:
    """Whether ``V(join I) = join V(I)`` whenever ``join I`` exists.

    For the natural order, pairs suffice; otherwise subsets up to ``max_size``
    are checked and the verdict is flagged incomplete if that is not all.
    """
    M = OM.monoid
    if V.monoid is not M:
        raise ValidationError("representation and ordered monoid use different monoids")
    nonzero = [x for x in OM.elements if x is not None]
    size = 2 if OM.natural else max_size
    mats = {x: V.matrix(x) for x in OM.elements}
    for I in _subsets(nonzero, size):
        if len(I) < 2:
            continue
        u = OM.join(I)
        if u is NONE:
            continue
        j = join(mats[a] for a in I)
        if j is None or j != mats[u]:
            return JoinVerdict(False, True, [M.element_name(a) for a in I])
    complete = OM.natural or len(nonzero) <= max_size
    return JoinVerdict(True, complete)
