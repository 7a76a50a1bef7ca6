"""Nonnegative integer solutions of linear Diophantine systems.

The kernel is the Contejean-Devie completion procedure: starting from the
unit vectors, a frontier of partial solutions is grown one unit at a time,
only in directions that move the defect ``A v`` back towards zero
(``<A v, A e_j> < 0``), and never past an already found solution.  It
returns the Hilbert basis, i.e. the componentwise-minimal nonzero solutions.

Only exact rows go through that procedure.  Congruence rows
``a.v = 0 (mod d)`` are imposed afterwards on its output: they only see
residues in a finite group, where a zero-sum search (for bases) or a
subgroup test (for feasibility) finishes the job.  Integer-valued variables
are split into a difference of two nonnegative ones.  Feasibility, monoid
membership and positive multiples are all homogenized with one extra
variable and read off the basis of the exact rows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from . import abelian
from .abelian import FgAbelianGroup, GroupElement
from .errors import ResourceExceeded, ShapeError

DEFAULT_BUDGET = 10**7

NONNEGATIVE = "nonneg"
FREE_INTEGER = "free"


@dataclass(frozen=True)
class LinearSystem:
    """``coeffs . v = target`` row-wise, each row exact (modulus 0) or mod d."""

    coeffs: tuple[tuple[int, ...], ...]
    num_vars: int
    row_moduli: tuple[int, ...] = ()
    var_domains: tuple[str, ...] = ()
    target: tuple[int, ...] = ()

    def __post_init__(self):
        p = len(self.coeffs)
        for row in self.coeffs:
            if len(row) != self.num_vars:
                raise ShapeError(f"row {list(row)} has {len(row)} entries, expected {self.num_vars}")
        if len(self.row_moduli) != p:
            raise ShapeError(f"{len(self.row_moduli)} row moduli for {p} rows")
        if len(self.target) != p:
            raise ShapeError(f"target has {len(self.target)} entries for {p} rows")
        if len(self.var_domains) != self.num_vars:
            raise ShapeError(f"{len(self.var_domains)} variable domains for {self.num_vars} variables")
        for d in self.row_moduli:
            if d != 0 and d < 2:
                raise ShapeError(f"row modulus must be 0 or >= 2, got {d}")
        for dom in self.var_domains:
            if dom not in (NONNEGATIVE, FREE_INTEGER):
                raise ShapeError(f"unknown variable domain {dom!r}")

    @classmethod
    def build(cls, coeffs, num_vars=None, row_moduli=None, var_domains=None, target=None):
        coeffs = tuple(tuple(int(a) for a in row) for row in coeffs)
        if num_vars is None:
            if not coeffs:
                raise ShapeError("num_vars is required for a system without rows")
            num_vars = len(coeffs[0])
        p = len(coeffs)
        return cls(
            coeffs,
            num_vars,
            tuple(row_moduli) if row_moduli is not None else (0,) * p,
            tuple(var_domains) if var_domains is not None else (NONNEGATIVE,) * num_vars,
            tuple(int(t) for t in target) if target is not None else (0,) * p,
        )

    @property
    def is_homogeneous(self) -> bool:
        return not any(self.target)

    def residual(self, v: Sequence[int]) -> list[int]:
        """Row values of ``coeffs . v - target``, reduced mod the row modulus."""
        out = []
        for row, t, d in zip(self.coeffs, self.target, self.row_moduli):
            r = sum(a * x for a, x in zip(row, v)) - t
            out.append(r % d if d else r)
        return out

    def is_solution(self, v: Sequence[int]) -> bool:
        if len(v) != self.num_vars:
            return False
        for x, dom in zip(v, self.var_domains):
            if dom == NONNEGATIVE and x < 0:
                return False
        return not any(self.residual(v))


@dataclass(frozen=True)
class HilbertBasis:
    generators: tuple[tuple[int, ...], ...]
    expansions: int = field(default=0, compare=False)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def _contejean_devie(
    A: list[list[int]], budget: int, last_cap: int | None = None
) -> tuple[list[tuple[int, ...]], int]:
    """Minimal nonzero ``v >= 0`` with ``A v = 0``, plus the number of expansions used.

    With ``last_cap`` only the minimal solutions whose last coordinate is at
    most ``last_cap`` are produced (coordinates never decrease along the
    search, so larger ones are cut off early).
    """
    q = len(A[0]) if A else 0
    cols = [tuple(row[j] for row in A) for j in range(q)]
    basis: list[tuple[int, ...]] = []
    frontier: dict[tuple[int, ...], tuple[int, ...]] = {}
    for j in range(q):
        e = [0] * q
        e[j] = 1
        frontier[tuple(e)] = cols[j]
    expansions = 0
    while frontier:
        pending = []
        for v, defect in frontier.items():
            if any(defect):
                pending.append((v, defect))
            else:
                basis.append(v)
        found = len(basis)
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for v, defect in pending:
            for j in range(q):
                if sum(a * b for a, b in zip(defect, cols[j])) >= 0:
                    continue
                expansions += 1
                if expansions > budget:
                    raise ResourceExceeded(budget)
                if last_cap is not None and j == q - 1 and v[j] >= last_cap:
                    continue
                w = list(v)
                w[j] += 1
                w = tuple(w)
                if w in nxt:
                    continue
                if any(all(x >= y for x, y in zip(w, b)) for b in basis[:found]):
                    continue
                nxt[w] = tuple(a + b for a, b in zip(defect, cols[j]))
        frontier = nxt
    return basis, expansions


def _minimal(vectors) -> list[tuple[int, ...]]:
    vecs = sorted(set(v for v in vectors if any(v)), key=lambda v: (sum(v), v))
    out: list[tuple[int, ...]] = []
    for v in vecs:
        if not any(all(x >= y for x, y in zip(v, b)) for b in out):
            out.append(v)
    return out


def _zero_sum_basis(
    residues: list[tuple[int, ...]], moduli: Sequence[int], budget: int
) -> tuple[list[tuple[int, ...]], int]:
    """Minimal nonzero ``c >= 0`` with ``sum(c_i residues_i) = 0`` in ``prod Z/d``.

    Level-by-level search in total weight, pruned at found solutions.  A
    sequence longer than the group order always contains a zero-sum
    subsequence, so the frontier dies out by that level.
    """
    m = len(residues)
    basis: list[tuple[int, ...]] = []
    frontier: dict[tuple[int, ...], tuple[int, ...]] = {}
    for j in range(m):
        e = [0] * m
        e[j] = 1
        frontier[tuple(e)] = residues[j]
    expansions = 0
    while frontier:
        pending = []
        for c, r in frontier.items():
            if any(r):
                pending.append((c, r))
            else:
                basis.append(c)
        found = len(basis)
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for c, r in pending:
            for j in range(m):
                expansions += 1
                if expansions > budget:
                    raise ResourceExceeded(budget)
                w = list(c)
                w[j] += 1
                w = tuple(w)
                if w in nxt or any(all(x >= y for x, y in zip(w, b)) for b in basis[:found]):
                    continue
                nxt[w] = tuple((a + b) % d for a, b, d in zip(r, residues[j], moduli))
        frontier = nxt
    return basis, expansions


def _split_rows(sys: LinearSystem):
    eq = [list(row) for row, d in zip(sys.coeffs, sys.row_moduli) if d == 0]
    cong = [list(row) for row, d in zip(sys.coeffs, sys.row_moduli) if d]
    moduli = [d for d in sys.row_moduli if d]
    return eq, cong, moduli


def _equation_basis(
    eq: list[list[int]], q: int, budget: int, last_cap: int | None = None
) -> tuple[list[tuple[int, ...]], int]:
    if not eq:
        return [tuple(int(i == j) for i in range(q)) for j in range(q)], 0
    return _contejean_devie(eq, budget, last_cap)


def _residue(cong, moduli, v) -> tuple[int, ...]:
    return tuple(sum(a * x for a, x in zip(row, v)) % d for row, d in zip(cong, moduli))


def hilbert_basis(sys: LinearSystem, budget: int = DEFAULT_BUDGET) -> HilbertBasis:
    """Minimal generating set of ``{v in N^q : coeffs . v = 0 row-wise}``.

    The exact rows go to the completion procedure; the monoid it returns is
    then cut down by the congruence rows through a zero-sum search over
    its generators, and the images are reduced to the minimal ones.

    >>> sys = LinearSystem.build([[1, 1, -2]])
    >>> hilbert_basis(sys).generators
    ((0, 2, 1), (1, 1, 1), (2, 0, 1))
    """
    if not sys.is_homogeneous:
        raise ShapeError("hilbert_basis needs a homogeneous system (zero target)")
    if any(d != NONNEGATIVE for d in sys.var_domains):
        raise ShapeError("hilbert_basis needs nonnegative variables; sign-split free ones first")
    q = sys.num_vars
    eq, cong, moduli = _split_rows(sys)
    W, expansions = _equation_basis(eq, q, budget)
    if cong and W:
        residues = [_residue(cong, moduli, w) for w in W]
        C, more = _zero_sum_basis(residues, moduli, budget - expansions)
        expansions += more
        W = [tuple(sum(c[k] * W[k][i] for k in range(len(W))) for i in range(q)) for c in C]
    return HilbertBasis(tuple(sorted(_minimal(W))), expansions)


def _finite_order(residue, moduli) -> int:
    n = 1
    for t, d in zip(residue, moduli):
        n = math.lcm(n, d // math.gcd(t, d))
    return n


def _solve_last_one(sys: LinearSystem, budget: int) -> tuple[int, ...] | None:
    """Solution of a homogeneous nonnegative system whose last coordinate is 1.

    Solutions of the exact rows are sums of their Hilbert basis elements,
    exactly one of which carries the last coordinate.  The congruence rows
    then ask whether that element's residue lies in minus the subgroup
    spanned by the residues of the others (nonnegative multiples of a
    finite-order residue already span its cyclic subgroup).
    """
    q = sys.num_vars
    eq, cong, moduli = _split_rows(sys)
    W, _ = _equation_basis(eq, q, budget, last_cap=1)
    heads = sorted(w for w in W if w[-1] == 1)
    if not heads:
        return None
    if not cong:
        return heads[0]
    tails = sorted(w for w in W if w[-1] == 0)
    F = abelian.make_group(0, moduli)
    tail_res = [F.element(_residue(cong, moduli, w)) for w in tails]
    for head in heads:
        target = abelian.neg(F, F.element(_residue(cong, moduli, head)))
        coeffs = subgroup_membership(F, tail_res, target)
        if coeffs is None:
            continue
        v = list(head)
        for a, w, r in zip(coeffs, tails, tail_res):
            n = a % _finite_order(r.torsion, moduli)
            for i in range(q):
                v[i] += n * w[i]
        return tuple(v)
    return None


def _split_free(sys: LinearSystem) -> tuple[list[list[int]], list[tuple[int, ...]]]:
    """Columns of the sign-split system and, per original variable, its split column indices."""
    cols: list[list[int]] = []
    owners = []
    for j, dom in enumerate(sys.var_domains):
        col = [row[j] for row in sys.coeffs]
        if dom == FREE_INTEGER:
            owners.append((len(cols), len(cols) + 1))
            cols.append(col)
            cols.append([-a for a in col])
        else:
            owners.append((len(cols),))
            cols.append(col)
    return cols, owners


def _recombine(v: Sequence[int], owners) -> tuple[int, ...]:
    return tuple(v[o[0]] - v[o[1]] if len(o) == 2 else v[o[0]] for o in owners)


def _from_columns(cols: list[list[int]], nrows: int, row_moduli) -> LinearSystem:
    rows = tuple(tuple(col[i] for col in cols) for i in range(nrows))
    return LinearSystem(rows, len(cols), tuple(row_moduli), (NONNEGATIVE,) * len(cols), (0,) * nrows)


def solve_nonneg(sys: LinearSystem, budget: int = DEFAULT_BUDGET) -> tuple[int, ...] | None:
    """A solution respecting ``var_domains``, or None when none exists.

    Decided exactly: the homogenizing variable ``h`` (column ``-target``) is
    adjoined and the system is feasible iff some Hilbert basis element has
    ``h = 1`` -- a solution with ``h = 1`` decomposes into basis elements of
    which exactly one carries the ``h``.
    """
    cols, owners = _split_free(sys)
    cols.append([-t for t in sys.target])
    g = _solve_last_one(_from_columns(cols, len(sys.coeffs), sys.row_moduli), budget)
    if g is None:
        return None
    v = _recombine(g, owners)
    assert sys.is_solution(v)
    return v


# -- questions over a finitely generated abelian group ----------------------


def _group_columns(G: FgAbelianGroup, elements: Sequence[GroupElement]) -> list[list[int]]:
    return [x.to_list() for x in elements]


def _check_elements(G: FgAbelianGroup, *xs: GroupElement) -> None:
    for x in xs:
        if not G.contains(x):
            raise ShapeError(f"{x} is not an element of {G}")


def monoid_membership(
    G: FgAbelianGroup,
    T: Sequence[GroupElement],
    x: GroupElement,
    budget: int = DEFAULT_BUDGET,
) -> tuple[int, ...] | None:
    """Exponents ``e >= 0`` with ``sum(e_i T_i) = x``, or None if x is not in M(T)."""
    _check_elements(G, x, *T)
    cols = _group_columns(G, T)
    cols.append([-a for a in x.to_list()])
    g = _solve_last_one(_from_columns(cols, G.ngens, G.moduli), budget)
    return None if g is None else g[:-1]


def subgroup_membership(
    G: FgAbelianGroup, T: Sequence[GroupElement], x: GroupElement
) -> tuple[int, ...] | None:
    """Integer coefficients ``a`` with ``sum(a_i T_i) = x``, or None if x is not in G(T).

    Solved by Smith normal form of ``[T | torsion relations]``.
    """
    _check_elements(G, x, *T)
    n = G.ngens
    cols = _group_columns(G, T)
    for row in abelian.relation_matrix(G):
        cols.append(row)
    k = len(cols)
    if n == 0:
        return (0,) * len(T)
    M = [[col[i] for col in cols] for i in range(n)]
    U, D, V = abelian.smith_normal_form(M, ncols=k)
    rhs = [sum(U[i][j] * c for j, c in enumerate(x.to_list())) for i in range(n)]
    z = [0] * k
    for i in range(n):
        d = D[i][i] if i < k else 0
        if d == 0:
            if rhs[i]:
                return None
        elif rhs[i] % d:
            return None
        else:
            z[i] = rhs[i] // d
    y = [sum(V[r][c] * z[c] for c in range(k)) for r in range(k)]
    coeffs = tuple(y[: len(T)])
    assert abelian.linear_combination(G, coeffs, T) == x
    return coeffs


def intersection_basis(
    G: FgAbelianGroup,
    S1: Sequence[GroupElement],
    S2: Sequence[GroupElement],
    budget: int = DEFAULT_BUDGET,
) -> list[tuple[tuple[int, ...], GroupElement]]:
    """Pairs ``(u, sum(u_i S1_i))`` whose images generate ``M(S1) & G(S2)``.

    The u run over the Hilbert basis of ``{u in N^|S1| : sum(u_i S1_i) in G(S2)}``,
    computed in the quotient ``G / G(S2)``.  Zero images are dropped; the list
    is sorted by image, then by u.
    """
    _check_elements(G, *S1, *S2)
    relations = abelian.relation_matrix(G) + [s.to_list() for s in S2]
    H, proj = abelian.group_from_relations(G.ngens, relations)
    cols = [proj(s.to_list()).to_list() for s in S1]
    if not cols:
        return []
    hb = hilbert_basis(_from_columns(cols, H.ngens, H.moduli), budget)
    out = {}
    for u in hb:
        img = abelian.linear_combination(G, u, S1)
        if img == abelian.zero(G):
            continue
        if img not in out:
            out[img] = u
    return sorted(((u, g) for g, u in out.items()), key=lambda p: (p[1].to_list(), p[0]))


def intersection_generators(
    G: FgAbelianGroup,
    S1: Sequence[GroupElement],
    S2: Sequence[GroupElement],
    budget: int = DEFAULT_BUDGET,
) -> list[GroupElement]:
    """Monoid generators of ``M(S1) & G(S2)`` (an empty list generates ``{0}``)."""
    return [g for _, g in intersection_basis(G, S1, S2, budget)]


def exists_positive_multiple_in_monoid(
    G: FgAbelianGroup,
    T: Sequence[GroupElement],
    x: GroupElement,
    budget: int = DEFAULT_BUDGET,
) -> tuple[int, tuple[int, ...]] | None:
    """``(n, e)`` with ``n >= 1`` and ``n*x = sum(e_i T_i)``, or None if no multiple of x is in M(T).

    The multiplier is one more nonnegative variable.  Multiplying by the
    exponent of the torsion part kills every congruence, so only the free
    coordinates matter: a multiple exists iff some Hilbert basis element of
    ``sum(e_i free(T_i)) = n free(x)`` has ``n >= 1``, and that element
    scaled by the order of its torsion residue is a certificate.  Among
    these the smallest n is reported.
    """
    _check_elements(G, x, *T)
    cols = _group_columns(G, T)
    cols.append([-a for a in x.to_list()])
    sys = _from_columns(cols, G.ngens, G.moduli)
    eq, cong, moduli = _split_rows(sys)
    W, _ = _equation_basis(eq, sys.num_vars, budget)
    best = None
    for w in W:
        if w[-1] < 1:
            continue
        m = _finite_order(_residue(cong, moduli, w), moduli)
        cand = tuple(m * a for a in w)
        if best is None or (cand[-1], cand) < (best[-1], best):
            best = cand
    if best is None:
        return None
    return best[-1], best[:-1]
