"""Finite G-hat-linear monoids.

A monoid is stored by its basis (one representative per nonzero G-orbit) and a
``basis x basis`` table whose entries are ``None`` (zero) or ``(g, k)`` meaning
``g * basis[k]``.  Elements are ``None`` or ``(g, b)``; the product
``(g1 b1)(g2 b2) = g1 g2 (b1 b2)`` is forced by the encoding, so centrality
and freeness of the G-action cannot be violated.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import (
    CyclicQuiver,
    IncompleteTable,
    NoIdentity,
    NotAssociative,
    NotIdempotent,
    NotInverse,
    RelationInconsistent,
    ValidationError,
    ZeroElement,
)
from .fvect import Matrix, PointedGroup, TRIVIAL, compose, enumerate_matrices

Element = Optional[tuple]  # None or (g, basis index)


@dataclass(frozen=True, eq=False)
class GLinearMonoid:
    group: PointedGroup
    basis: tuple
    one: int
    table: tuple
    # matrices realizing the basis, for submonoids of I_n(G-hat)
    realization: Optional[tuple] = None
    # ambient elements, for monoids carved out of a larger one
    embedding: Optional[tuple] = None
    ambient: Optional["GLinearMonoid"] = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 + self.dim * self.group.size

    @cached_property
    def _cache(self) -> dict:
        return {}

    @cached_property
    def _names(self) -> dict:
        return {name: i for i, name in enumerate(self.basis)}

    def index(self, name: str) -> int:
        try:
            return self._names[name]
        except KeyError:
            raise ValidationError(f"unknown basis element {name!r}", witness=name) from None

    def mul(self, x: Element, y: Element) -> Element:
        if x is None or y is None:
            return None
        r = self.table[x[1]][y[1]]
        if r is None:
            return None
        mul = self.group._mul
        return (mul[mul[x[0]][y[0]]][r[0]], r[1])

    def product(self, *xs: Element) -> Element:
        out = self.unit
        for x in xs:
            out = self.mul(out, x)
        return out

    @property
    def unit(self) -> Element:
        return (0, self.one)

    def scalar(self, g: int) -> Element:
        return (g, self.one)

    def elements(self) -> Iterator[Element]:
        yield None
        for b in range(self.dim):
            for g in self.group.elements:
                yield (g, b)

    def nonzero_elements(self) -> Iterator[Element]:
        for b in range(self.dim):
            for g in self.group.elements:
                yield (g, b)

    def element_name(self, x: Element) -> str:
        if x is None:
            return "0"
        g, b = x
        if g == 0:
            return self.basis[b]
        return f"{'.'.join(map(str, self.group.decode(g)))}*{self.basis[b]}"

    def element_json(self, x: Element):
        if x is None:
            return None
        return {"g": list(self.group.decode(x[0])), "b": self.basis[x[1]]}

    def element_from_json(self, data) -> Element:
        if data is None:
            return None
        if isinstance(data, str):
            return (0, self.index(data))
        return (self.group.encode(data.get("g", [0] * len(self.group.orders))), self.index(data["b"]))

    def matrix_of(self, x: Element) -> Matrix:
        """The realizing matrix of ``x`` (only for monoids built from matrices)."""
        if self.realization is None:
            raise ValueError("monoid has no matrix realization")
        n = self.realization[0].rows
        if x is None:
            return Matrix.zero(self.group, n, n)
        return self.realization[x[1]].scale(x[0])

    # ideals
    @cached_property
    def _right_ideals(self) -> tuple:
        return tuple(
            frozenset(r[1] for r in self.table[a] if r is not None) for a in range(self.dim)
        )

    @cached_property
    def _left_ideals(self) -> tuple:
        return tuple(
            frozenset(self.table[x][a][1] for x in range(self.dim) if self.table[x][a] is not None)
            for a in range(self.dim)
        )

    @cached_property
    def _ideals(self) -> tuple:
        out = []
        for a in range(self.dim):
            members = set()
            for l in self._left_ideals[a]:
                members |= self._right_ideals[l]
            out.append(frozenset(members))
        return tuple(out)

    def ideal(self, b: int) -> frozenset:
        """Basis indices of the nonzero orbits in ``M b M``."""
        return self._ideals[b]

    def right_ideal(self, b: int) -> frozenset:
        """Basis indices of the nonzero orbits in ``b M``."""
        return self._right_ideals[b]

    def left_ideal(self, b: int) -> frozenset:
        return self._left_ideals[b]

    @cached_property
    def jreport(self) -> "JClassReport":
        return _compute_j_classes(self)

    def to_json(self) -> dict:
        mult = []
        for i, j in itertools.product(range(self.dim), repeat=2):
            r = self.table[i][j]
            res = None if r is None else {"g": list(self.group.decode(r[0])), "b": self.basis[r[1]]}
            mult.append({"l": self.basis[i], "r": self.basis[j], "res": res})
        out = {"group": self.group.to_json(), "basis": list(self.basis),
               "one": self.basis[self.one], "mult": mult}
        if self.realization is not None:
            out["matrices"] = {name: A.to_json() for name, A in zip(self.basis, self.realization)}
        return out

    def same_table(self, other: "GLinearMonoid") -> bool:
        return (self.group == other.group and self.basis == other.basis
                and self.one == other.one and self.table == other.table)

    def __repr__(self):
        return f"GLinearMonoid(group={list(self.group.orders)}, dim={self.dim}, size={self.size})"


# ---------------------------------------------------------------------------
# validation and JSON


def validate_monoid(group: PointedGroup, basis: Sequence[str], one, table, **extra) -> GLinearMonoid:
    """Check completeness, identity and associativity; return the monoid.

    ``one`` may be a basis name or an index; ``table[i][j]`` is ``None`` or
    ``(g, k)``.  Raises on the first violated axiom with a witness.
    """
    basis = tuple(basis)
    n = len(basis)
    if len(set(basis)) != n:
        raise ValidationError("duplicate basis names")
    if n == 0:
        raise NoIdentity("a monoid needs a nonzero identity")
    if isinstance(one, str):
        if one not in basis:
            raise NoIdentity(f"identity {one!r} is not a basis element")
        one = basis.index(one)
    rows = []
    if len(table) != n:
        raise IncompleteTable(f"table has {len(table)} rows, expected {n}")
    for i, row in enumerate(table):
        if len(row) != n:
            raise IncompleteTable(f"row {basis[i]!r} has {len(row)} entries, expected {n}")
        out = []
        for j, r in enumerate(row):
            if r is not None:
                g, k = int(r[0]), int(r[1])
                if not (0 <= g < group.size and 0 <= k < n):
                    raise ValidationError(f"bad table entry at ({basis[i]}, {basis[j]})")
                r = (g, k)
            out.append(r)
        rows.append(tuple(out))
    table = tuple(rows)
    for b in range(n):
        if table[one][b] != (0, b) or table[b][one] != (0, b):
            raise NoIdentity(f"{basis[one]!r} is not a two-sided identity",
                             witness={"one": basis[one], "b": basis[b]})
    M = GLinearMonoid(group, basis, one, table, **extra)
    witness = associativity_witness(M)
    if witness is not None:
        raise NotAssociative("multiplication is not associative",
                             witness=[basis[i] for i in witness])
    return M


def associativity_witness(M: GLinearMonoid):
    """First basis triple ``(a, b, c)`` with ``(ab)c != a(bc)``, or None."""
    t = M.table
    mul = M.group._mul
    n = M.dim
    for a in range(n):
        ta = t[a]
        for b in range(n):
            ab = ta[b]
            for c in range(n):
                bc = t[b][c]
                if ab is None:
                    left = None
                else:
                    r = t[ab[1]][c]
                    left = None if r is None else (mul[ab[0]][r[0]], r[1])
                if bc is None:
                    right = None
                else:
                    r = ta[bc[1]]
                    right = None if r is None else (mul[bc[0]][r[0]], r[1])
                if left != right:
                    return (a, b, c)
    return None


def monoid_from_json(data: Mapping) -> GLinearMonoid:
    group = PointedGroup(data.get("group", []))
    basis = list(data["basis"])
    idx = {name: i for i, name in enumerate(basis)}
    n = len(basis)
    table = [[_MISSING] * n for _ in range(n)]
    for entry in data.get("mult", []):
        try:
            i, j = idx[entry["l"]], idx[entry["r"]]
        except KeyError as exc:
            raise ValidationError(f"unknown basis element {exc.args[0]!r} in mult") from None
        if table[i][j] is not _MISSING:
            raise IncompleteTable(f"pair ({entry['l']}, {entry['r']}) listed twice",
                                  witness=[entry["l"], entry["r"]])
        res = entry.get("res")
        if res is None:
            table[i][j] = None
        else:
            if isinstance(res, str):
                res = {"b": res}
            if res.get("b") not in idx:
                raise ValidationError(f"unknown basis element {res.get('b')!r} in mult")
            table[i][j] = (group.encode(res.get("g", [0] * len(group.orders))), idx[res["b"]])
    for i, j in itertools.product(range(n), repeat=2):
        if table[i][j] is _MISSING:
            raise IncompleteTable(f"missing product ({basis[i]}, {basis[j]})",
                                  witness=[basis[i], basis[j]])
    if "one" not in data:
        raise NoIdentity("no identity declared")
    M = validate_monoid(group, basis, data["one"], table)
    if "matrices" in data:
        mats = data["matrices"]
        if set(mats) != set(basis):
            raise ValidationError("matrices must be given for every basis element")
        real = tuple(Matrix.from_json(mats[name], group) for name in basis)
        M = GLinearMonoid(M.group, M.basis, M.one, M.table, realization=real)
        _check_realization(M)
    return M


def _check_realization(M: GLinearMonoid) -> None:
    """The matrices must multiply like the table and be pairwise distinct up to G."""
    n = M.realization[0].rows
    seen = set()
    for b, A in enumerate(M.realization):
        if A.rows != n or A.cols != n or A.is_zero():
            raise ValidationError(f"bad matrix for {M.basis[b]!r}")
        for g in M.group.elements:
            if A.scale(g) in seen:
                raise ValidationError("matrix realization is not faithful", witness=M.basis[b])
        seen.add(A)
    for a in range(M.dim):
        for b in range(M.dim):
            if compose(M.realization[a], M.realization[b]) != M.matrix_of(M.table[a][b]):
                raise ValidationError("matrices do not multiply like the table",
                                      witness=[M.basis[a], M.basis[b]])


_MISSING = object()


# ---------------------------------------------------------------------------
# constructions


def _label_name(group: PointedGroup, g: int) -> str:
    return ".".join(map(str, group.decode(g)))


def matrix_name(A: Matrix) -> str:
    """Readable name: one token per column, ``-`` for empty, ``r`` or ``r^g``."""
    cells = []
    for e in A.entries:
        if e is None:
            cells.append("-")
        elif e[1] == 0:
            cells.append(str(e[0] + 1))
        else:
            cells.append(f"{e[0] + 1}^{_label_name(A.group, e[1])}")
    return " ".join(cells)


def normalize_matrix(A: Matrix):
    """Split a nonzero matrix as ``g * B`` with the label on B's least occupied column trivial."""
    for e in A.entries:
        if e is not None:
            g = e[1]
            return g, A.scale(A.group.inv(g))
    raise ZeroElement("the zero matrix has no orbit representative")


def monoid_from_matrices(group: PointedGroup, matrices: Sequence[Matrix], validate: bool = True,
                         names: Optional[Sequence[str]] = None) -> GLinearMonoid:
    """The monoid spanned by normalized matrices closed under composition.

    The first matrix must be the identity.
    """
    index = {A: i for i, A in enumerate(matrices)}
    if len(index) != len(matrices):
        raise ValidationError("duplicate matrices")
    table = []
    for A in matrices:
        row = []
        for B in matrices:
            P = compose(A, B)
            if P.is_zero():
                row.append(None)
                continue
            g, N = normalize_matrix(P)
            if N not in index:
                raise ValidationError(f"matrix set not closed: {matrix_name(A)} * {matrix_name(B)}")
            row.append((g, index[N]))
        table.append(tuple(row))
    names = tuple(names) if names is not None else tuple(matrix_name(A) for A in matrices)
    if validate:
        return validate_monoid(group, names, 0, table, realization=tuple(matrices))
    return GLinearMonoid(group, names, 0, tuple(table), realization=tuple(matrices))


def symmetric_inverse_monoid(n: int, group: PointedGroup = TRIVIAL, validate: bool = False) -> GLinearMonoid:
    """``I_n(G-hat)``: all ``n x n`` submonomial matrices.

    Basis: nonzero matrices whose least occupied column has label 1, sorted by
    decreasing rank (the identity comes first).
    """
    if n < 1:
        raise ValueError("I_0 has 0 = 1 and is not a G-hat-linear monoid with nonzero identity")
    mats = []
    for A in enumerate_matrices(group, n, n):
        if A.is_zero():
            continue
        first = next(e for e in A.entries if e is not None)
        if first[1] == 0:
            mats.append(A)
    mats.sort(key=lambda A: (-A.rank, A))
    return monoid_from_matrices(group, mats, validate=validate)


def null_monoid(n: int, group: PointedGroup = TRIVIAL) -> GLinearMonoid:
    """Basis ``{1, x1, ..., xn}`` with ``xi xj = 0``."""
    if n < 1:
        raise ValueError("null_monoid needs n >= 1")
    basis = ["1"] + [f"x{i}" for i in range(1, n + 1)]
    table = [[None] * (n + 1) for _ in range(n + 1)]
    for b in range(n + 1):
        table[0][b] = (0, b)
        table[b][0] = (0, b)
    return validate_monoid(group, basis, 0, table)


def trivial_monoid(group: PointedGroup = TRIVIAL) -> GLinearMonoid:
    return validate_monoid(group, ["1"], 0, [[(0, 0)]])


def submonoid(M: GLinearMonoid, generators: Iterable[int]) -> GLinearMonoid:
    """Submonoid generated by basis elements (plus the identity and G)."""
    keep = {M.one} | set(generators)
    frontier = list(keep)
    while frontier:
        new = []
        for a in list(keep):
            for b in frontier:
                for r in (M.table[a][b], M.table[b][a]):
                    if r is not None and r[1] not in keep:
                        keep.add(r[1])
                        new.append(r[1])
        frontier = new
    order = [M.one] + sorted(keep - {M.one})
    pos = {b: i for i, b in enumerate(order)}
    table = [[None if M.table[a][b] is None else (M.table[a][b][0], pos[M.table[a][b][1]])
              for b in order] for a in order]
    real = None if M.realization is None else tuple(M.realization[b] for b in order)
    return GLinearMonoid(M.group, tuple(M.basis[b] for b in order), 0,
                         tuple(tuple(r) for r in table), realization=real,
                         embedding=tuple((0, b) for b in order), ambient=M)


def opposite(M: GLinearMonoid) -> GLinearMonoid:
    table = tuple(tuple(M.table[j][i] for j in range(M.dim)) for i in range(M.dim))
    return GLinearMonoid(M.group, M.basis, M.one, table)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple  # (name, source, target)
    relations: tuple = ()  # (lhs word, rhs) with rhs None | vertex name | word

    @classmethod
    def from_json(cls, data: Mapping) -> "Quiver":
        arrows = []
        for a in data.get("arrows", []):
            if isinstance(a, Mapping):
                arrows.append((a["name"], a["source"], a["target"]))
            else:
                arrows.append(tuple(a))
        rels = []
        for r in data.get("relations", []):
            lhs = tuple(r["lhs"])
            rhs = r.get("rhs")
            rels.append((lhs, tuple(rhs) if isinstance(rhs, list) else rhs))
        return cls(tuple(data["vertices"]), tuple(arrows), tuple(rels))

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"name": n, "source": s, "target": t} for n, s, t in self.arrows],
            "relations": [{"lhs": list(l), "rhs": list(r) if isinstance(r, tuple) else r}
                          for l, r in self.relations],
        }


def _has_cycle(vertices, arrows) -> bool:
    succ = {v: [] for v in vertices}
    for _, s, t in arrows:
        succ[s].append(t)
    state = {}

    def visit(v):
        state[v] = 1
        for w in succ[v]:
            if state.get(w) == 1 or (w not in state and visit(w)):
                return True
        state[v] = 2
        return False

    return any(v not in state and visit(v) for v in vertices)


def path_monoid(quiver: Quiver, group: PointedGroup = TRIVIAL, max_paths: int = 10000) -> GLinearMonoid:
    """The G-hat-linear path monoid of a quiver, optionally modulo relations.

    Paths compose left to right: ``ab`` is ``a`` followed by ``b``.  Relations
    rewrite their left side (an arrow word) to a word, a vertex, or zero, using
    leftmost-first rewriting; the finished table is audited for associativity
    and rejected with a witness triple if the relations are inconsistent.
    """
    verts = tuple(quiver.vertices)
    if "1" in verts:
        raise ValidationError("vertex name '1' is reserved for the identity")
    arrows = {name: (s, t) for name, s, t in quiver.arrows}
    for name, (s, t) in arrows.items():
        if s not in verts or t not in verts:
            raise ValidationError(f"arrow {name!r} has an unknown endpoint")
    if not quiver.relations and _has_cycle(verts, quiver.arrows):
        raise CyclicQuiver("quiver has an oriented cycle and no relations")

    def composable(word):
        return all(arrows[a][1] == arrows[b][0] for a, b in zip(word, word[1:]))

    rules = []
    for lhs, rhs in quiver.relations:
        if not lhs or not composable(lhs):
            raise ValidationError(f"relation lhs {list(lhs)} is not a path")
        s, t = arrows[lhs[0]][0], arrows[lhs[-1]][1]
        if isinstance(rhs, tuple):
            if not composable(rhs) or arrows[rhs[0]][0] != s or arrows[rhs[-1]][1] != t:
                raise ValidationError(f"relation {list(lhs)} = {list(rhs)} changes endpoints")
        elif rhs is not None:
            if rhs != s or rhs != t:
                raise ValidationError(f"relation {list(lhs)} = {rhs} changes endpoints")
        rules.append((tuple(lhs), rhs))

    def normal_form(word):
        """``None`` (zero), a vertex name, or a tuple of arrows."""
        word = tuple(word)
        for _ in range(10 * max_paths):
            hit = None
            for start in range(len(word)):
                for lhs, rhs in rules:
                    if word[start:start + len(lhs)] == lhs:
                        hit = (start, lhs, rhs)
                        break
                if hit:
                    break
            if hit is None:
                return word
            start, lhs, rhs = hit
            if rhs is None:
                return None
            if isinstance(rhs, tuple):
                word = word[:start] + rhs + word[start + len(lhs):]
            else:
                word = word[:start] + word[start + len(lhs):]
                if not word:
                    return rhs
        raise CyclicQuiver("rewriting does not terminate")

    paths = []
    seen = set()
    queue = deque()
    for name in arrows:
        nf = normal_form((name,))
        if isinstance(nf, tuple) and nf not in seen:
            seen.add(nf)
            queue.append(nf)
    while queue:
        p = queue.popleft()
        paths.append(p)
        if len(paths) > max_paths:
            raise CyclicQuiver(f"more than {max_paths} paths: relations do not bound path length")
        t = arrows[p[-1]][1]
        for name, (s, _) in arrows.items():
            if s != t:
                continue
            nf = normal_form(p + (name,))
            if isinstance(nf, tuple) and nf not in seen:
                seen.add(nf)
                queue.append(nf)
    paths.sort(key=lambda p: (len(p), p))

    basis = ["1"] + list(verts) + [".".join(p) for p in paths]
    idx = {name: i for i, name in enumerate(basis)}

    def ends(item):
        if isinstance(item, tuple):
            return arrows[item[0]][0], arrows[item[-1]][1]
        return item, item

    items = [None] + list(verts) + paths  # None stands for the identity

    def as_entry(nf):
        if nf is None:
            return None
        if isinstance(nf, tuple):
            return (0, idx[".".join(nf)])
        return (0, idx[nf])

    table = []
    for x in items:
        row = []
        for y in items:
            if x is None:
                row.append(as_entry(y) if y is not None else (0, 0))
            elif y is None:
                row.append(as_entry(x))
            elif ends(x)[1] != ends(y)[0]:
                row.append(None)
            elif not isinstance(x, tuple):
                row.append(as_entry(y))
            elif not isinstance(y, tuple):
                row.append(as_entry(x))
            else:
                row.append(as_entry(normal_form(x + y)))
        table.append(row)
    try:
        return validate_monoid(group, basis, 0, table)
    except NotAssociative as exc:
        raise RelationInconsistent("relations are inconsistent with associativity",
                                   witness=exc.witness) from None


# ---------------------------------------------------------------------------
# Green's J-relation


@dataclass(frozen=True)
class JClass:
    index: int
    members: tuple  # basis indices; empty for the zero class
    regular: bool
    idempotents: tuple  # elements

    @property
    def is_zero(self) -> bool:
        return not self.members


@dataclass(frozen=True)
class JClassReport:
    classes: tuple
    class_of: tuple  # basis index -> class index
    order: frozenset  # pairs (i, j) with J_i <= J_j

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self.order

    def class_of_element(self, x: Element) -> int:
        return 0 if x is None else self.class_of[x[1]]

    @property
    def regular_classes(self) -> tuple:
        return tuple(c for c in self.classes if c.regular and not c.is_zero)


def _compute_j_classes(M: GLinearMonoid) -> JClassReport:
    groups = {}
    for b in range(M.dim):
        groups.setdefault(M.ideal(b), []).append(b)
    keys = sorted(groups, key=lambda I: (len(I), min(groups[I])))
    class_of = [0] * M.dim
    classes = [JClass(0, (), True, (None,))]
    ideals = [frozenset()]
    for k, I in enumerate(keys, start=1):
        members = tuple(sorted(groups[I]))
        for b in members:
            class_of[b] = k
        idems = tuple(x for b in members if (x := idempotent_in_orbit(M, b)) is not None)
        classes.append(JClass(k, members, bool(idems), idems))
        ideals.append(I)
    order = frozenset(
        (i, j) for i in range(len(ideals)) for j in range(len(ideals)) if ideals[i] <= ideals[j]
    )
    report = JClassReport(tuple(classes), tuple(class_of), order)
    for c in classes[1:]:
        conds = regularity_conditions(M, c, report)
        if len(set(conds)) != 1:
            raise AssertionError(f"regularity conditions disagree on class {c.index}: {conds}")
    return report


def j_classes(M: GLinearMonoid) -> JClassReport:
    return M.jreport


def idempotent_in_orbit(M: GLinearMonoid, b: int) -> Element:
    """The unique idempotent in the G-orbit of ``b``, if any."""
    r = M.table[b][b]
    if r is None or r[1] != b:
        return None
    return (M.group.inv(r[0]), b)


def regularity_conditions(M: GLinearMonoid, cls: JClass, report: Optional[JClassReport] = None) -> tuple:
    """The four equivalent regularity conditions on a nonzero J-class:
    (contains idempotent, contains regular element, all regular, J^2 meets J)."""
    report = report or M.jreport
    members = set(cls.members)
    has_idem = any(idempotent_in_orbit(M, b) is not None for b in cls.members)
    regs = [is_regular_basis(M, b) for b in cls.members]
    square = any(
        (r := M.table[a][b]) is not None and r[1] in members for a in cls.members for b in cls.members
    )
    return (has_idem, any(regs), all(regs), square)


def is_regular_basis(M: GLinearMonoid, b: int) -> bool:
    """Whether ``b`` (hence its whole orbit) has some ``y`` with ``b y b = b``."""
    for y in range(M.dim):
        r = M.table[b][y]
        if r is None:
            continue
        s = M.table[r[1]][b]
        if s is not None and s[1] == b:
            return True
    return False


def idempotents(M: GLinearMonoid, include_zero: bool = True) -> list:
    """All idempotents (``0`` first unless excluded), then basis order."""
    out = [None] if include_zero else []
    return out + [x for b in range(M.dim) if (x := idempotent_in_orbit(M, b)) is not None]


def is_regular(M: GLinearMonoid) -> bool:
    return all(is_regular_basis(M, b) for b in range(M.dim))


def is_inverse(M: GLinearMonoid) -> bool:
    if not is_regular(M):
        return False
    idems = idempotents(M, include_zero=False)
    return all(M.mul(e, f) == M.mul(f, e) for e, f in itertools.combinations(idems, 2))


def star_inverse(M: GLinearMonoid, x: Element) -> Element:
    """The unique ``y`` with ``x y x = x`` and ``y x y = y``."""
    if not is_inverse(M):
        raise NotInverse("monoid is not inverse")
    if x is None:
        return None
    g, b = x
    cands = [y for y in M.nonzero_elements()
             if M.product(x, y, x) == x and M.product(y, x, y) == y]
    if len(cands) != 1:
        raise AssertionError(f"expected a unique *-inverse, found {len(cands)}")
    return cands[0]


# ---------------------------------------------------------------------------
# principal factors and inductivity


@dataclass(frozen=True)
class PrincipalFactor:
    monoid: GLinearMonoid
    element: Element
    jclass: int
    carrier: tuple  # basis indices of the J-class
    left: tuple  # left[x][i]: x * carrier[i] as (g, carrier position) or None
    right: tuple  # right[x][i]: carrier[i] * x
    kind: str  # "null" or "zero-simple"

    @property
    def dim(self) -> int:
        return len(self.carrier)


def _translations(M: GLinearMonoid, members: Sequence[int], side: str) -> tuple:
    pos = {b: i for i, b in enumerate(members)}
    out = []
    for x in range(M.dim):
        row = []
        for b in members:
            r = M.table[x][b] if side == "left" else M.table[b][x]
            row.append(None if r is None or r[1] not in pos else (pos[r[1]], r[0]))
        out.append(tuple(row))
    return tuple(out)


def principal_factor(M: GLinearMonoid, a: Element) -> PrincipalFactor:
    if a is None:
        raise ZeroElement("principal factor of 0 is not defined")
    report = M.jreport
    k = report.class_of[a[1]]
    members = report.classes[k].members
    mset = set(members)
    null = not any((r := M.table[x][y]) is not None and r[1] in mset for x in members for y in members)
    return PrincipalFactor(M, a, k, members, _translations(M, members, "left"),
                           _translations(M, members, "right"), "null" if null else "zero-simple")


def translation_is_linear(M: GLinearMonoid, members: Sequence[int], side: str) -> bool:
    for row in _translations(M, members, side):
        rows = [e[0] for e in row if e is not None]
        if len(rows) != len(set(rows)):
            return False
    return True


def is_left_inductive(M: GLinearMonoid) -> bool:
    return all(translation_is_linear(M, c.members, "left") for c in M.jreport.regular_classes)


def is_right_inductive(M: GLinearMonoid) -> bool:
    return all(translation_is_linear(M, c.members, "right") for c in M.jreport.regular_classes)


# ---------------------------------------------------------------------------
# maximal subgroups


def check_idempotent(M: GLinearMonoid, e: Element) -> None:
    if e is None:
        raise ZeroElement("expected a nonzero idempotent")
    if M.mul(e, e) != e:
        raise NotIdempotent(f"{M.element_name(e)} is not idempotent")


def maximal_subgroup(M: GLinearMonoid, e: Element) -> GLinearMonoid:
    """``(eMe n J_e) u {0}`` as a G-hat-linear monoid with identity ``e``.

    ``embedding[i]`` is the ambient element represented by basis ``i``.
    """
    check_idempotent(M, e)
    key = ("maximal_subgroup", e)
    if key in M._cache:
        return M._cache[key]
    cls = M.jreport.classes[M.jreport.class_of[e[1]]]
    reps = [e]
    for k in cls.members:
        if k == e[1]:
            continue
        x = (0, k)
        if M.product(e, x, e) == x:
            reps.append(x)
    pos = {x[1]: i for i, x in enumerate(reps)}
    G = M.group
    table = []
    for x in reps:
        row = []
        for y in reps:
            r = M.mul(x, y)
            if r is None or r[1] not in pos:
                raise AssertionError("eMe n J is not closed")
            rep = reps[pos[r[1]]]
            row.append((G._mul[r[0]][G._inv[rep[0]]], pos[r[1]]))
        table.append(tuple(row))
    names = tuple(M.element_name(x) for x in reps)
    real = None
    if M.realization is not None:
        real = tuple(M.matrix_of(x) for x in reps)
    GJ = GLinearMonoid(G, names, 0, tuple(table), realization=real,
                       embedding=tuple(reps), ambient=M)
    M._cache[key] = GJ
    return GJ


def generators(M: GLinearMonoid) -> list:
    """A generating set of basis indices, chosen greedily from the top J-classes down."""
    order = sorted(range(M.dim), key=lambda b: (-len(M.ideal(b)), b))
    gens = []
    reached = {M.one}
    for b in order:
        if b in reached:
            continue
        gens.append(b)
        reached = _closure(M, reached, gens)
    return gens


def _closure(M: GLinearMonoid, start: set, gens: Sequence[int]) -> set:
    reached = set(start) | {M.one}
    queue = deque(reached)
    while queue:
        a = queue.popleft()
        for g in gens:
            r = M.table[a][g]
            if r is not None and r[1] not in reached:
                reached.add(r[1])
                queue.append(r[1])
    return reached


def wagner_preston(M: GLinearMonoid):
    """The faithful representation ``a -> lambda_a`` of an inverse monoid on itself.

    ``lambda_a(x) = a x`` for ``x`` in ``a* M`` and ``0`` otherwise.
    """
    from .rep import validate_rep

    if not is_inverse(M):
        raise NotInverse("Wagner-Preston needs an inverse monoid")
    action = []
    for a in range(M.dim):
        astar = star_inverse(M, (0, a))
        domain = M.right_ideal(astar[1])
        entries = []
        for x in range(M.dim):
            if x in domain:
                r = M.table[a][x]
                entries.append((r[1], r[0]))
            else:
                entries.append(None)
        action.append(Matrix(M.group, M.dim, M.dim, entries))
    return validate_rep(M, action)
