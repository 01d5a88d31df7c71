"""Linear algebra over a pointed abelian group G-hat = G u {0}.

Group elements are encoded as integers ``0 .. |G|-1`` (mixed radix over the
cyclic factors, first factor most significant; ``0`` is the identity).  A
scalar is either ``None`` (zero) or such a code.

Vector spaces are ``G-hat^{(+)n}``: a nonzero vector is a pair ``(g, i)`` with
``i`` a 0-based basis index.  Linear maps are submonomial matrices, stored
column-major: ``entries[j]`` is ``None`` or ``(row, g)``.  Composition is
right-to-left, ``compose(A, B)`` applies ``B`` first.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import BadDomain, DimMismatch, GroupMismatch, NonInjective, NotEpi, NotMono

Scalar = Optional[int]
Vector = Optional[tuple]  # None or (g, index)


class PointedGroup:
    """A finite abelian group Z/m1 x ... x Z/mk with an absorbing zero adjoined."""

    def __init__(self, orders: Iterable[int] = ()):
        orders = tuple(int(m) for m in orders)
        if any(m < 1 for m in orders):
            raise ValueError(f"cyclic orders must be >= 1, got {list(orders)}")
        self.orders = orders
        self.size = math.prod(orders)
        elems = [self.decode(c) for c in range(self.size)]
        self._mul = tuple(
            tuple(self.encode([(x + y) % m for x, y, m in zip(a, b, orders)]) for b in elems)
            for a in elems
        )
        self._inv = tuple(self.encode([(-x) % m for x, m in zip(a, orders)]) for a in elems)

    identity = 0

    def encode(self, residues: Sequence[int]) -> int:
        if len(residues) != len(self.orders):
            raise ValueError(f"expected {len(self.orders)} residues, got {list(residues)}")
        code = 0
        for r, m in zip(residues, self.orders):
            if not 0 <= r < m:
                raise ValueError(f"residue {r} out of range for Z/{m}")
            code = code * m + r
        return code

    def decode(self, code: int) -> tuple:
        out = []
        for m in reversed(self.orders):
            code, r = divmod(code, m)
            out.append(r)
        return tuple(reversed(out))

    @property
    def elements(self) -> range:
        return range(self.size)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if a is None or b is None:
            return None
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def power(self, a: int, k: int) -> int:
        out = 0
        for _ in range(k % max(self.size, 1)):
            out = self._mul[out][a]
        return out

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders) if self.orders else 1

    @property
    def is_trivial(self) -> bool:
        return self.size == 1

    def __eq__(self, other):
        return isinstance(other, PointedGroup) and self.orders == other.orders

    def __hash__(self):
        return hash(("PointedGroup", self.orders))

    def __repr__(self):
        return f"PointedGroup({list(self.orders)})"

    def to_json(self) -> list:
        return list(self.orders)

    @classmethod
    def from_json(cls, data) -> "PointedGroup":
        return cls(data)


TRIVIAL = PointedGroup(())


@dataclass(frozen=True)
class Space:
    """The space G-hat^{(+)dim}."""

    group: PointedGroup
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")

    @property
    def size(self) -> int:
        return 1 + self.dim * self.group.size

    def vectors(self) -> Iterator[Vector]:
        yield None
        for i in range(self.dim):
            for g in self.group.elements:
                yield (g, i)


class Matrix:
    """A submonomial ``rows x cols`` matrix over G-hat (a G-hat-linear map)."""

    __slots__ = ("group", "rows", "cols", "entries", "_hash")

    def __init__(self, group: PointedGroup, rows: int, cols: int, entries: Sequence, check: bool = True):
        entries = tuple(None if e is None else (int(e[0]), int(e[1])) for e in entries)
        if check:
            if len(entries) != cols:
                raise DimMismatch(f"expected {cols} column entries, got {len(entries)}")
            seen = set()
            for j, e in enumerate(entries):
                if e is None:
                    continue
                r, g = e
                if not 0 <= r < rows:
                    raise DimMismatch(f"row {r} out of range in column {j}")
                if not 0 <= g < group.size:
                    raise ValueError(f"label {g} is not an element of {group!r}")
                if r in seen:
                    raise NonInjective(f"row {r} used twice", witness={"row": r + 1})
                seen.add(r)
        self.group = group
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    # constructors
    @classmethod
    def identity(cls, group: PointedGroup, n: int) -> "Matrix":
        return cls(group, n, n, [(i, 0) for i in range(n)], check=False)

    @classmethod
    def zero(cls, group: PointedGroup, rows: int, cols: int) -> "Matrix":
        return cls(group, rows, cols, [None] * cols, check=False)

    @classmethod
    def unit(cls, group: PointedGroup, n: int, i: int, j: int, g: int = 0) -> "Matrix":
        """``g E_{ij}`` (0-based): sends basis vector ``j`` to ``g * e_i``."""
        entries = [None] * n
        entries[j] = (i, g)
        return cls(group, n, n, entries)

    @classmethod
    def idempotent(cls, group: PointedGroup, n: int, subset: Iterable[int]) -> "Matrix":
        subset = set(subset)
        return cls(group, n, n, [(i, 0) if i in subset else None for i in range(n)], check=False)

    # basic queries
    def apply(self, v: Vector) -> Vector:
        if v is None:
            return None
        g, i = v
        e = self.entries[i]
        if e is None:
            return None
        return (self.group._mul[e[1]][g], e[0])

    def __call__(self, v: Vector) -> Vector:
        return self.apply(v)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return compose(self, other)

    @property
    def support(self) -> tuple:
        return tuple(j for j, e in enumerate(self.entries) if e is not None)

    @property
    def image_rows(self) -> tuple:
        return tuple(sorted(e[0] for e in self.entries if e is not None))

    @property
    def rank(self) -> int:
        return sum(1 for e in self.entries if e is not None)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(e is None for e in self.entries)

    def is_injective(self) -> bool:
        return all(e is not None for e in self.entries)

    def is_surjective(self) -> bool:
        return self.rank == self.rows

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.is_injective()

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(e == (j, 0) for j, e in enumerate(self.entries))

    def scale(self, g: Scalar) -> "Matrix":
        """Scalar multiple ``g * A``."""
        if g is None:
            return Matrix.zero(self.group, self.rows, self.cols)
        mul = self.group._mul[g]
        return Matrix(
            self.group, self.rows, self.cols,
            [None if e is None else (e[0], mul[e[1]]) for e in self.entries], check=False,
        )

    def star(self) -> "Matrix":
        return star(self)

    def label_product(self) -> int:
        """Product of all nonzero labels."""
        out = 0
        for e in self.entries:
            if e is not None:
                out = self.group._mul[out][e[1]]
        return out

    def permutation(self) -> tuple:
        """For an invertible matrix, the column -> row permutation."""
        return tuple(e[0] for e in self.entries)

    # dunder
    def _key(self):
        return (self.group.orders, self.rows, self.cols, self.entries)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self._key() == other._key()

    def __lt__(self, other):
        return _sort_key(self) < _sort_key(other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        cells = ["-" if e is None else f"{e[0] + 1}^{e[1]}" if e[1] else f"{e[0] + 1}" for e in self.entries]
        return f"Matrix({self.rows}x{self.cols}: {' '.join(cells) or 'empty'})"

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [
                None if e is None else {"row": e[0] + 1, "g": list(self.group.decode(e[1]))}
                for e in self.entries
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping, group: PointedGroup) -> "Matrix":
        entries = []
        for e in data["entries"]:
            if e is None:
                entries.append(None)
            else:
                entries.append((int(e["row"]) - 1, group.encode(e.get("g", [0] * len(group.orders)))))
        return cls(group, int(data["rows"]), int(data["cols"]), entries)


def _sort_key(A: Matrix):
    return tuple((-1, -1) if e is None else e for e in A.entries)


def submonomial(group: PointedGroup, rows: int, cols: int, S: Iterable[int],
                f: Mapping[int, int], c: Mapping[int, int]) -> Matrix:
    """Build ``M_{S,f,c}``: column ``j in S`` carries ``c(f(j)) e_{f(j)}``.

    ``f`` must be injective on ``S`` and ``c`` defined exactly on ``f(S)``.
    Indices are 0-based.
    """
    S = sorted(set(S))
    image = [f[j] for j in S]
    if len(set(image)) != len(image):
        raise NonInjective("f repeats a row", witness=sorted(image))
    if set(c) != set(image):
        raise BadDomain("c must be defined exactly on f(S)",
                        witness={"domain": sorted(c), "image": sorted(image)})
    entries = [None] * cols
    for j in S:
        entries[j] = (f[j], c[f[j]])
    return Matrix(group, rows, cols, entries)


def compose(A: Matrix, B: Matrix) -> Matrix:
    """``A o B``: apply ``B`` then ``A``."""
    if A.group != B.group:
        raise GroupMismatch("matrices over different groups")
    if B.rows != A.cols:
        raise DimMismatch(f"cannot compose {A.rows}x{A.cols} after {B.rows}x{B.cols}")
    mul = A.group._mul
    a = A.entries
    out = []
    for e in B.entries:
        if e is None:
            out.append(None)
            continue
        f = a[e[0]]
        out.append(None if f is None else (f[0], mul[f[1]][e[1]]))
    return Matrix(A.group, A.rows, B.cols, out, check=False)


def star(A: Matrix) -> Matrix:
    """The *-inverse ``M_{f(S), f^-1, 1/(c o f)}``."""
    inv = A.group._inv
    entries = [None] * A.rows
    for j, e in enumerate(A.entries):
        if e is not None:
            entries[e[0]] = (j, inv[e[1]])
    return Matrix(A.group, A.cols, A.rows, entries, check=False)


def rank(A: Matrix) -> int:
    return A.rank


def kernel(A: Matrix) -> Matrix:
    """Inclusion of the kernel (span of the empty columns) into the domain."""
    cols = [j for j, e in enumerate(A.entries) if e is None]
    return Matrix(A.group, A.cols, len(cols), [(j, 0) for j in cols], check=False)


def image(A: Matrix) -> Matrix:
    """Inclusion of the image (span of the occupied rows) into the codomain."""
    rows = A.image_rows
    return Matrix(A.group, A.rows, len(rows), [(r, 0) for r in rows], check=False)


def cokernel(A: Matrix) -> Matrix:
    """Projection of the codomain onto ``codomain / image(A)``."""
    hit = set(A.image_rows)
    entries = []
    k = 0
    for r in range(A.rows):
        if r in hit:
            entries.append(None)
        else:
            entries.append((k, 0))
            k += 1
    return Matrix(A.group, k, A.rows, entries, check=False)


def direct_sum(A: Matrix, B: Matrix) -> Matrix:
    """Block-diagonal sum ``A (+) B``."""
    if A.group != B.group:
        raise GroupMismatch("direct sum over different groups")
    entries = list(A.entries) + [None if e is None else (e[0] + A.rows, e[1]) for e in B.entries]
    return Matrix(A.group, A.rows + B.rows, A.cols + B.cols, entries, check=False)


def direct_sum_spaces(V: Space, W: Space) -> Space:
    if V.group != W.group:
        raise GroupMismatch("direct sum over different groups")
    return Space(V.group, V.dim + W.dim)


def pushout(i: Matrix, p: Matrix):
    """Pushout of ``C <<-p- A -i->> B`` with ``i`` mono and ``p`` epi.

    Returns ``(D, p_B, i_C)``.  The basis of ``D`` lists the basis vectors of
    ``B`` outside ``i(A)`` (in ``B`` order) followed by the basis of ``C``.
    """
    if i.group != p.group:
        raise GroupMismatch("pushout over different groups")
    if i.cols != p.cols:
        raise DimMismatch("i and p must share their domain")
    if not i.is_injective():
        raise NotMono("i has nonzero kernel", witness=[j + 1 for j in kernel(i).image_rows])
    if not p.is_surjective():
        raise NotEpi("p is not surjective")
    G = i.group
    hit = {e[0]: (a, e[1]) for a, e in enumerate(i.entries)}
    free_b = [b for b in range(i.rows) if b not in hit]
    dim_c = p.rows
    D = Space(G, len(free_b) + dim_c)
    pos = {b: k for k, b in enumerate(free_b)}
    pb = []
    for b in range(i.rows):
        if b in pos:
            pb.append((pos[b], 0))
            continue
        a, h = hit[b]
        # e_b = h^-1 i(e_a) ~ h^-1 p(e_a)
        q = p.entries[a]
        pb.append(None if q is None else (len(free_b) + q[0], G._mul[G._inv[h]][q[1]]))
    p_B = Matrix(G, D.dim, i.rows, pb)
    i_C = Matrix(G, D.dim, dim_c, [(len(free_b) + c, 0) for c in range(dim_c)])
    return D, p_B, i_C


def pullback(p: Matrix, i: Matrix):
    """Pullback of ``B -p->> D <<-i- C`` with ``p`` epi and ``i`` mono.

    Returns ``(A, i_B, p_C)`` where ``A = {(b, c) : p(b) = i(c)}``; its basis is
    ordered lexicographically by ``(b-index, c-index)``.
    """
    if i.group != p.group:
        raise GroupMismatch("pullback over different groups")
    if i.rows != p.rows:
        raise DimMismatch("p and i must share their codomain")
    if not p.is_surjective():
        raise NotEpi("p is not surjective")
    if not i.is_injective():
        raise NotMono("i has nonzero kernel")
    G = i.group
    i_of_row = {e[0]: (c, e[1]) for c, e in enumerate(i.entries)}
    pairs = []
    for b, e in enumerate(p.entries):
        if e is None:
            pairs.append((b, None))
            continue
        d, k = e
        if d in i_of_row:
            c, h = i_of_row[d]
            # i(k h^-1 e_c) = k e_d = p(e_b)
            pairs.append((b, (G._mul[k][G._inv[h]], c)))
        # otherwise no c matches a nonzero multiple of e_b
    A = Space(G, len(pairs))
    i_B = Matrix(G, p.cols, A.dim, [(b, 0) for b, _ in pairs])
    p_C = Matrix(G, i.cols, A.dim, [None if c is None else (c[1], c[0]) for _, c in pairs])
    return A, i_B, p_C


def split_exact(i: Matrix, p: Matrix) -> Matrix:
    """For an admissible short exact sequence ``A -i-> E -p-> B`` return the
    isomorphism ``E -> A (+) B``; raises if the sequence is not exact."""
    if i.group != p.group:
        raise GroupMismatch("sequence over different groups")
    if i.rows != p.cols:
        raise DimMismatch("i must land in the domain of p")
    if not i.is_injective():
        raise NotMono("i has nonzero kernel")
    if not p.is_surjective():
        raise NotEpi("p is not surjective")
    if set(i.image_rows) != set(kernel(p).image_rows):
        raise DimMismatch("image(i) != kernel(p)")
    G = i.group
    hit = {e[0]: (a, e[1]) for a, e in enumerate(i.entries)}
    entries = []
    for j in range(i.rows):
        if j in hit:
            a, h = hit[j]
            entries.append((a, G._inv[h]))
        else:
            l, h = p.entries[j]
            entries.append((i.cols + l, h))
    return Matrix(G, i.cols + p.rows, i.rows, entries)


def scalar_extend(x, group: PointedGroup):
    """Extension of scalars from F1 to ``group``: labels become the identity."""
    if isinstance(x, Space):
        return Space(group, x.dim)
    if not x.group.is_trivial:
        raise GroupMismatch("scalar extension expects data over F1")
    return Matrix(group, x.rows, x.cols, [None if e is None else (e[0], 0) for e in x.entries], check=False)


def orbit_space(x):
    """The G-orbit functor: forget labels, landing over F1."""
    if isinstance(x, Space):
        return Space(TRIVIAL, x.dim)
    return Matrix(TRIVIAL, x.rows, x.cols, [None if e is None else (e[0], 0) for e in x.entries], check=False)


def enumerate_matrices(group: PointedGroup, rows: int, cols: int) -> Iterator[Matrix]:
    """Every submonomial ``rows x cols`` matrix (exhaustive, row-injective)."""
    labels = list(group.elements)

    def rec(j, used, acc):
        if j == cols:
            yield Matrix(group, rows, cols, acc, check=False)
            return
        acc.append(None)
        yield from rec(j + 1, used, acc)
        acc.pop()
        for r in range(rows):
            if r in used:
                continue
            used.add(r)
            for g in labels:
                acc.append((r, g))
                yield from rec(j + 1, used, acc)
                acc.pop()
            used.discard(r)

    yield from rec(0, set(), [])


def enumerate_invertible(group: PointedGroup, n: int) -> Iterator[Matrix]:
    for perm in itertools.permutations(range(n)):
        for labels in itertools.product(group.elements, repeat=n):
            yield Matrix(group, n, n, list(zip(perm, labels)), check=False)


def enumerate_idempotents(group: PointedGroup, n: int) -> Iterator[Matrix]:
    for bits in itertools.product((False, True), repeat=n):
        yield Matrix.idempotent(group, n, [i for i, b in enumerate(bits) if b])


def count_submonomial(n: int, group_size: int, m: Optional[int] = None) -> int:
    """Closed-form count of ``m x n`` submonomial matrices (``m = n`` by default)."""
    m = n if m is None else m
    return sum(math.comb(n, d) * math.comb(m, d) * math.factorial(d) * group_size ** d
               for d in range(min(m, n) + 1))
