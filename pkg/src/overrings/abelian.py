"""Finitely generated abelian groups ``Z^r + Z/d1 + ... + Z/dm``.

Elements are stored as a free integer vector followed by torsion residues
reduced into ``[0, d)``.  Integers are Python ints, so nothing overflows;
the Smith normal form below keeps full unimodular transforms and is meant
for the small matrices that come out of class-group presentations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidModulus, ShapeError

Matrix = list[list[int]]

INFINITE = math.inf


@dataclass(frozen=True)
class GroupElement:
    free: tuple[int, ...]
    torsion: tuple[int, ...] = ()

    def to_list(self) -> list[int]:
        return list(self.free) + list(self.torsion)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.to_list()) + ")"


@dataclass(frozen=True)
class FgAbelianGroup:
    rank: int
    torsion_moduli: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ShapeError(f"rank must be nonnegative, got {self.rank}")
        for d in self.torsion_moduli:
            if d < 2:
                raise InvalidModulus(f"torsion modulus must be >= 2, got {d}")

    @property
    def ngens(self) -> int:
        """Length of the flat element encoding."""
        return self.rank + len(self.torsion_moduli)

    @property
    def moduli(self) -> tuple[int, ...]:
        """Per-coordinate moduli of the flat encoding (0 for free coordinates)."""
        return (0,) * self.rank + self.torsion_moduli

    def element(self, coords: Iterable[int]) -> GroupElement:
        """Build an element from its flat encoding, reducing torsion residues."""
        coords = [int(c) for c in coords]
        if len(coords) != self.ngens:
            raise ShapeError(
                f"element has {len(coords)} coordinates, group {self} needs {self.ngens}"
            )
        r = self.rank
        return GroupElement(
            tuple(coords[:r]),
            tuple(c % d for c, d in zip(coords[r:], self.torsion_moduli)),
        )

    def contains(self, x: GroupElement) -> bool:
        return (
            len(x.free) == self.rank
            and len(x.torsion) == len(self.torsion_moduli)
            and all(0 <= t < d for t, d in zip(x.torsion, self.torsion_moduli))
        )

    def order(self) -> int | float:
        """Number of elements (``INFINITE`` when rank > 0)."""
        if self.rank:
            return INFINITE
        return math.prod(self.torsion_moduli)

    def __str__(self) -> str:
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion_moduli]
        return " + ".join(parts) if parts else "0"


def make_group(rank: int, torsion_moduli: Sequence[int] = ()) -> FgAbelianGroup:
    """Group ``Z^rank + Z/d1 + ...``; the moduli keep the given order."""
    return FgAbelianGroup(int(rank), tuple(int(d) for d in torsion_moduli))


def _check(G: FgAbelianGroup, *xs: GroupElement) -> None:
    for x in xs:
        if not G.contains(x):
            raise ShapeError(f"{x} is not an element of {G}")


def zero(G: FgAbelianGroup) -> GroupElement:
    return GroupElement((0,) * G.rank, (0,) * len(G.torsion_moduli))


def add(G: FgAbelianGroup, x: GroupElement, y: GroupElement) -> GroupElement:
    _check(G, x, y)
    return GroupElement(
        tuple(a + b for a, b in zip(x.free, y.free)),
        tuple((a + b) % d for a, b, d in zip(x.torsion, y.torsion, G.torsion_moduli)),
    )


def neg(G: FgAbelianGroup, x: GroupElement) -> GroupElement:
    _check(G, x)
    return GroupElement(
        tuple(-a for a in x.free),
        tuple(-a % d for a, d in zip(x.torsion, G.torsion_moduli)),
    )


def sub(G: FgAbelianGroup, x: GroupElement, y: GroupElement) -> GroupElement:
    return add(G, x, neg(G, y))


def scalar_mul(G: FgAbelianGroup, n: int, x: GroupElement) -> GroupElement:
    _check(G, x)
    return GroupElement(
        tuple(n * a for a in x.free),
        tuple(n * a % d for a, d in zip(x.torsion, G.torsion_moduli)),
    )


def linear_combination(
    G: FgAbelianGroup, coefficients: Sequence[int], elements: Sequence[GroupElement]
) -> GroupElement:
    """``sum(c_i * x_i)`` in G."""
    if len(coefficients) != len(elements):
        raise ShapeError(
            f"{len(coefficients)} coefficients for {len(elements)} elements"
        )
    _check(G, *elements)
    free = [0] * G.rank
    tors = [0] * len(G.torsion_moduli)
    for c, x in zip(coefficients, elements):
        for i, a in enumerate(x.free):
            free[i] += c * a
        for j, a in enumerate(x.torsion):
            tors[j] += c * a
    return G.element(free + tors)


def element_order(G: FgAbelianGroup, x: GroupElement) -> int | float:
    """Smallest ``n >= 1`` with ``n*x = 0``, or ``INFINITE`` for non-torsion x."""
    _check(G, x)
    if any(x.free):
        return INFINITE
    n = 1
    for t, d in zip(x.torsion, G.torsion_moduli):
        n = math.lcm(n, d // math.gcd(t, d))
    return n


def is_torsion_group(G: FgAbelianGroup) -> bool:
    return G.rank == 0


# -- Smith normal form -------------------------------------------------------


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix, inner: int | None = None) -> Matrix:
    """Integer matrix product; ``inner`` fixes the shared dimension for empty factors."""
    if inner is None:
        inner = len(B)
    ncols = len(B[0]) if B else 0
    return [
        [sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(ncols)]
        for i in range(len(A))
    ]


def determinant(A: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(
    M: Sequence[Sequence[int]], ncols: int | None = None
) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    U and V are unimodular, D is diagonal with nonnegative entries forming a
    divisibility chain (zeros last).  ``ncols`` is only needed when M has no
    rows.
    """
    D = [[int(v) for v in row] for row in M]
    p = len(D)
    q = len(D[0]) if p else (ncols or 0)
    if ncols is not None and p and q != ncols:
        raise ShapeError(f"matrix has {q} columns, expected {ncols}")
    if any(len(row) != q for row in D):
        raise ShapeError("ragged matrix")
    U = identity(p)
    V = identity(q)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(min(p, q)):
        while True:
            pivot = None
            for i in range(t, p):
                for j in range(t, q):
                    if D[i][j] and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            a = D[t][t]
            for i in range(t + 1, p):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // a))
            for j in range(t + 1, q):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // a))
            if any(D[i][t] for i in range(t + 1, p)) or any(D[t][j] for j in range(t + 1, q)):
                continue
            bad = next(
                (i for i in range(t + 1, p) for j in range(t + 1, q) if D[i][j] % a),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            U[t] = [-v for v in U[t]]
    return U, D, V


def diagonal(D: Matrix, n: int | None = None) -> list[int]:
    """Diagonal of D padded with zeros up to length ``n`` (default: column count)."""
    q = len(D[0]) if D else 0
    n = q if n is None else n
    return [D[i][i] if i < len(D) and i < q else 0 for i in range(n)]


# -- presentations -----------------------------------------------------------


@dataclass(frozen=True)
class Projection:
    """The quotient map ``Z^n -> Z^n / rowspan(relations)`` in canonical coordinates."""

    group: FgAbelianGroup
    change_of_basis: tuple[tuple[int, ...], ...]
    invariants: tuple[int, ...]

    def __call__(self, exponents: Sequence[int]) -> GroupElement:
        n = len(self.invariants)
        if len(exponents) != n:
            raise ShapeError(f"expected {n} exponents, got {len(exponents)}")
        V = self.change_of_basis
        y = [sum(exponents[k] * V[k][i] for k in range(n)) for i in range(n)]
        tors = [y[i] % d for i, d in enumerate(self.invariants) if d >= 2]
        free = [y[i] for i, d in enumerate(self.invariants) if d == 0]
        return GroupElement(tuple(free), tuple(tors))


def group_from_relations(
    num_generators: int, relations: Sequence[Sequence[int]]
) -> tuple[FgAbelianGroup, Projection]:
    """Present ``Z^num_generators / rowspan(relations)`` in invariant-factor form.

    >>> G, proj = group_from_relations(2, [[2, 0]])
    >>> str(G)
    'Z + Z/2'
    """
    for row in relations:
        if len(row) != num_generators:
            raise ShapeError(
                f"relation {list(row)} has {len(row)} entries, expected {num_generators}"
            )
    _, D, V = smith_normal_form(relations, ncols=num_generators)
    diag = diagonal(D, num_generators)
    G = FgAbelianGroup(
        rank=sum(1 for d in diag if d == 0),
        torsion_moduli=tuple(d for d in diag if d >= 2),
    )
    return G, Projection(G, tuple(tuple(row) for row in V), tuple(diag))


def relation_matrix(G: FgAbelianGroup) -> Matrix:
    """Rows ``d_j * e_{rank+j}`` presenting G on its flat generators."""
    n = G.ngens
    rows = []
    for j, d in enumerate(G.torsion_moduli):
        row = [0] * n
        row[G.rank + j] = d
        rows.append(row)
    return rows


def normalize(G: FgAbelianGroup) -> tuple[FgAbelianGroup, Projection]:
    """Canonical (divisibility-chain) form of G and the isomorphism onto it."""
    return group_from_relations(G.ngens, relation_matrix(G))


def canonical_generators(G: FgAbelianGroup) -> list[GroupElement]:
    """``e_1, -e_1, ..., e_r, -e_r`` for the free part, then one generator per torsion factor."""
    gens = []
    n = G.ngens
    for i in range(G.rank):
        e = [0] * n
        e[i] = 1
        gens.append(G.element(e))
        e[i] = -1
        gens.append(G.element(e))
    for j in range(len(G.torsion_moduli)):
        e = [0] * n
        e[G.rank + j] = 1
        gens.append(G.element(e))
    return gens
