"""Matrices over GF(q)[z]: rank, minors, Smith normal form, basicness,
canonical (minimal basic) reduction, Forney indices and parity checks.

All row/column operations inside the Smith reduction stay over GF(q)[z];
rational elimination is confined to rank_rational so module-level
information is never lost.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .errors import FullRate, NotBasic, RankDeficient
from .finite_field import FieldElement, FieldTable
from .polynomial import MINUS_INFINITY, Poly

# Direct minor enumeration is used while the number of order-k minors
# stays below this; beyond it the SNF invariant factors take over.
MINOR_ENUMERATION_LIMIT = 10_000


class PolyMatrix:
    """Immutable rectangular matrix of Poly entries over one field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Poly]]):
        rows = [tuple(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        field = rows[0][0].field
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged rows")
            for e in r:
                if e.field.key != field.key:
                    raise ValueError("entries over different fields")
        self.field = field
        self.rows = len(rows)
        self.cols = width
        self.entries = tuple(rows)

    # -- constructors ----------------------------------------------------------

    @classmethod
    def identity(cls, field: FieldTable, k: int) -> "PolyMatrix":
        one, zero = Poly.one(field), Poly.zero(field)
        return cls([[one if i == j else zero for j in range(k)] for i in range(k)])

    @classmethod
    def zero(cls, field: FieldTable, rows: int, cols: int) -> "PolyMatrix":
        z = Poly.zero(field)
        return cls([[z] * cols for _ in range(rows)])

    @classmethod
    def from_text(cls, field: FieldTable, rows: Sequence[Sequence[str]]) -> "PolyMatrix":
        from .polynomial import parse_poly

        return cls([[parse_poly(field, e) for e in r] for r in rows])

    # -- structure ---------------------------------------------------------------

    def entry(self, i: int, j: int) -> Poly:
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[Poly, ...]:
        return self.entries[i]

    def row_degree(self, i: int):
        return max((e.degree for e in self.entries[i]), default=MINUS_INFINITY)

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for r in self.entries for e in r)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for i in range(self.rows)]
                           for j in range(self.cols)])

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        zero = Poly.zero(self.field)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for t in range(self.cols):
                    a = self.entries[i][t]
                    b = other.entries[t][j]
                    if not (a.is_zero or b.is_zero):
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyMatrix)
            and other.entries == self.entries
        )

    def __hash__(self) -> int:
        return hash(self.entries)

    # -- rendering -----------------------------------------------------------------

    def to_text(self) -> str:
        """One line per row, entries separated by ' ; '."""
        return "\n".join(" ; ".join(str(e) for e in r) for r in self.entries)

    def to_text_rows(self) -> List[List[str]]:
        return [[str(e) for e in r] for r in self.entries]

    def to_log_arrays(self) -> List[List[List[int]]]:
        """row -> col -> degree -> generator log (-1 for zero coefficient)."""
        return [[list(e.to_logs()) for e in r] for r in self.entries]

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols} over GF({self.field.q}))\n{self.to_text()}"


@dataclass(frozen=True)
class SnfDecomposition:
    """U*M*V = D with U, V unimodular and a monic divisibility chain."""

    U: PolyMatrix
    D: PolyMatrix
    V: PolyMatrix
    u_inv: PolyMatrix
    v_inv: PolyMatrix
    invariant_factors: Tuple[Poly, ...]


@dataclass(frozen=True)
class EncoderProfile:
    """Invariants read off a canonical encoder."""

    forney_indices: Tuple[int, ...]
    degree: int
    memory: int
    is_basic: bool
    is_canonical: bool


# -- rational rank -------------------------------------------------------------


def rank_rational(M: PolyMatrix) -> int:
    """Rank of M over the fraction field GF(q)(z), by fraction-free elimination."""
    work = [list(r) for r in M.entries]
    k, n = M.rows, M.cols
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, k):
            if not work[i][c].is_zero:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        p = work[r][c]
        for i in range(r + 1, k):
            f = work[i][c]
            if f.is_zero:
                continue
            work[i] = [work[i][j] * p - work[r][j] * f for j in range(n)]
        r += 1
        if r == k:
            break
    return r


# -- determinants and minors -----------------------------------------------------


def determinant(M: PolyMatrix) -> Poly:
    """Determinant of a square polynomial matrix (cofactor expansion)."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    field = M.field
    n = M.rows
    memo = {}

    def rec(row: int, col_mask: int) -> Poly:
        if row == n:
            return Poly.one(field)
        key = (row, col_mask)
        if key in memo:
            return memo[key]
        acc = Poly.zero(field)
        pos = 0
        for j in range(n):
            if not (col_mask >> j) & 1:
                continue
            e = M.entries[row][j]
            if not e.is_zero:
                term = e * rec(row + 1, col_mask & ~(1 << j))
                acc = acc + term if pos % 2 == 0 else acc - term
            pos += 1
        memo[key] = acc
        return acc

    return rec(0, (1 << n) - 1)


def _order_k_minors(M: PolyMatrix, order: int):
    for cols in combinations(range(M.cols), order):
        for rows in combinations(range(M.rows), order):
            sub = PolyMatrix([[M.entries[i][j] for j in cols] for i in rows])
            yield determinant(sub)


def _num_minors(M: PolyMatrix, order: int) -> int:
    from math import comb

    return comb(M.cols, order) * comb(M.rows, order)


def minors_gcd(M: PolyMatrix, order: int) -> Poly:
    """Monic gcd of all order-k minors."""
    if order > min(M.rows, M.cols):
        raise ValueError("order exceeds matrix dimensions")
    if rank_rational(M) != order:
        raise RankDeficient(f"rational rank differs from requested order {order}")
    if _num_minors(M, order) <= MINOR_ENUMERATION_LIMIT:
        g = None
        for minor in _order_k_minors(M, order):
            if minor.is_zero:
                continue
            g = minor if g is None else _gcd2(g, minor)
            if g.degree == 0:
                break
        return g.monic()
    snf = smith_normal_form(M)
    prod = Poly.one(M.field)
    for f in snf.invariant_factors[:order]:
        prod = prod * f
    return prod.monic()


def _gcd2(a: Poly, b: Poly) -> Poly:
    while not b.is_zero:
        a, b = b, a % b
    return a


def is_basic(M: PolyMatrix) -> bool:
    """True iff the gcd of the order-k minors is 1 (k = row count)."""
    g = minors_gcd(M, M.rows)
    return g.degree == 0


def code_degree(M: PolyMatrix) -> int:
    """Maximum degree over the order-k minors of a basic encoder."""
    if not is_basic(M):
        raise NotBasic("degree is defined via a basic encoder; reduce first")
    best = 0
    for minor in _order_k_minors(M, M.rows):
        d = minor.degree
        if d is not MINUS_INFINITY and d > best:
            best = d
    return best


# -- Smith normal form --------------------------------------------------------------


def smith_normal_form(M: PolyMatrix) -> SnfDecomposition:
    """Deterministic Smith normal form over GF(q)[z].

    Pivoting picks the lowest-degree nonzero entry of the working
    submatrix, ties broken in row-major order.
    """
    field = M.field
    k, n = M.rows, M.cols
    S = [list(r) for r in M.entries]
    one, zero = Poly.one(field), Poly.zero(field)
    U = [[one if i == j else zero for j in range(k)] for i in range(k)]
    Ui = [[one if i == j else zero for j in range(k)] for i in range(k)]
    V = [[one if i == j else zero for j in range(n)] for i in range(n)]
    Vi = [[one if i == j else zero for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]
        for r in range(k):
            Ui[r][i], Ui[r][j] = Ui[r][j], Ui[r][i]

    def swap_cols(i, j):
        for r in range(k):
            S[r][i], S[r][j] = S[r][j], S[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q: Poly):
        # row_dst += q * row_src
        if q.is_zero:
            return
        S[dst] = [S[dst][j] + q * S[src][j] for j in range(n)]
        U[dst] = [U[dst][j] + q * U[src][j] for j in range(k)]
        for r in range(k):
            Ui[r][src] = Ui[r][src] - q * Ui[r][dst]

    def add_col(dst, src, q: Poly):
        # col_dst += q * col_src
        if q.is_zero:
            return
        for r in range(k):
            S[r][dst] = S[r][dst] + q * S[r][src]
        for r in range(n):
            V[r][dst] = V[r][dst] + q * V[r][src]
        Vi[src] = [Vi[src][j] - q * Vi[dst][j] for j in range(n)]

    def find_pivot(t):
        best = None
        for i in range(t, k):
            for j in range(t, n):
                e = S[i][j]
                if e.is_zero:
                    continue
                if best is None or e.degree < S[best[0]][best[1]].degree:
                    best = (i, j)
        return best

    t = 0
    lim = min(k, n)
    while t < lim:
        pos = find_pivot(t)
        if pos is None:
            break
        if pos[0] != t:
            swap_rows(t, pos[0])
        if pos[1] != t:
            swap_cols(t, pos[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, k):
                if S[i][t].is_zero:
                    continue
                q, r = divmod(S[i][t], S[t][t])
                add_row(i, t, -q)
                if not r.is_zero:
                    swap_rows(t, i)  # smaller-degree remainder becomes pivot
                    dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, n):
                if S[t][j].is_zero:
                    continue
                q, r = divmod(S[t][j], S[t][t])
                add_col(j, t, -q)
                if not r.is_zero:
                    swap_cols(t, j)
                    dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            offender = None
            for i in range(t + 1, k):
                for j in range(t + 1, n):
                    if not (S[i][j] % S[t][t]).is_zero:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, Poly.one(field))
        t += 1

    # monic normalization of the diagonal via unit row scalings
    for i in range(lim):
        d = S[i][i]
        if d.is_zero or d.lc.val == 1:
            continue
        c_inv = d.lc.inverse()
        c = d.lc
        S[i] = [e.scale(c_inv) for e in S[i]]
        U[i] = [e.scale(c_inv) for e in U[i]]
        for r in range(k):
            Ui[r][i] = Ui[r][i].scale(c)

    factors = tuple(S[i][i] for i in range(lim) if not S[i][i].is_zero)
    return SnfDecomposition(
        U=PolyMatrix(U),
        D=PolyMatrix(S),
        V=PolyMatrix(V),
        u_inv=PolyMatrix(Ui),
        v_inv=PolyMatrix(Vi),
        invariant_factors=factors,
    )


# -- encoders --------------------------------------------------------------------


def basic_encoder(M: PolyMatrix) -> Tuple[PolyMatrix, bool]:
    """Basic matrix with the same GF(q)(z)-row span as M.

    The boolean reports whether the generated GF(q)[z]-module was
    enlarged (true iff some invariant factor of M is non-constant).
    """
    if rank_rational(M) != M.rows:
        raise RankDeficient("basic_encoder requires full row rank")
    snf = smith_normal_form(M)
    enlarged = any(f.degree != 0 for f in snf.invariant_factors)
    B = PolyMatrix(snf.v_inv.entries[: M.rows])
    return B, enlarged


def row_module_basis(M: PolyMatrix) -> PolyMatrix:
    """Full-row-rank matrix generating the same GF(q)[z]-row module as M."""
    snf = smith_normal_form(M)
    r = len(snf.invariant_factors)
    if r == 0:
        raise RankDeficient("zero matrix generates the trivial module")
    rows = []
    for i in range(r):
        d = snf.invariant_factors[i]
        rows.append([d * e for e in snf.v_inv.entries[i]])
    return PolyMatrix(rows)


def _leading_coefficient_matrix(rows: Sequence[Sequence[Poly]], nus: Sequence[int]):
    return [[e.coeff_val(nu) for e in row] for row, nu in zip(rows, nus)]


def _left_null_combination(field: FieldTable, L: Sequence[Sequence[int]]):
    """Nonzero c with sum_i c_i * L_i = 0 over GF(q), or None if full rank."""
    k = len(L)
    basis = []  # (reduced_row, combo, pivot_col)
    for i in range(k):
        row = list(L[i])
        combo = [0] * k
        combo[i] = 1
        for brow, bcombo, piv in basis:
            f = field.mul_val(row[piv], field.inv_val(brow[piv]))
            if f:
                row = [field.sub_val(a, field.mul_val(f, b)) for a, b in zip(row, brow)]
                combo = [field.sub_val(a, field.mul_val(f, b)) for a, b in zip(combo, bcombo)]
        if any(row):
            piv = next(j for j, v in enumerate(row) if v)
            basis.append((row, combo, piv))
        else:
            return combo
    return None


def to_canonical(M: PolyMatrix) -> Tuple[PolyMatrix, EncoderProfile]:
    """Minimal basic (canonical) encoder of the code generated by M.

    An already-canonical input is returned unchanged.  The reduction
    repeatedly cancels dependencies of the high-order coefficient matrix
    into the highest-degree participating row (ties to the lowest index).
    """
    if rank_rational(M) != M.rows:
        raise RankDeficient("to_canonical requires full row rank")
    if is_basic(M):
        B = M
    else:
        B, _ = basic_encoder(M)
    field = M.field
    rows = [list(r) for r in B.entries]
    while True:
        nus = [max(e.degree for e in row if not e.is_zero) for row in rows]
        L = _leading_coefficient_matrix(rows, nus)
        combo = _left_null_combination(field, L)
        if combo is None:
            break
        support = [i for i, c in enumerate(combo) if c]
        target = max(support, key=lambda i: (nus[i], -i))
        new_row = [Poly.zero(field)] * len(rows[0])
        for i in support:
            c = FieldElement(field, combo[i])
            shift = nus[target] - nus[i]
            for j, e in enumerate(rows[i]):
                new_row[j] = new_row[j] + e.scale(c).shift(shift)
        rows[target] = new_row
    C = PolyMatrix(rows) if rows != [list(r) for r in B.entries] else B
    nus = [C.row_degree(i) for i in range(C.rows)]
    nus = [0 if d is MINUS_INFINITY else d for d in nus]
    profile = EncoderProfile(
        forney_indices=tuple(sorted(nus)),
        degree=sum(nus),
        memory=max(nus),
        is_basic=True,
        is_canonical=True,
    )
    return C, profile


def encoder_profile(M: PolyMatrix) -> EncoderProfile:
    """Profile of the code generated by M (reduces to canonical form)."""
    _, profile = to_canonical(M)
    return profile


def parity_check(G: PolyMatrix) -> PolyMatrix:
    """Basic (n-k) x n matrix H with G * H^T = 0."""
    if G.rows == G.cols:
        raise FullRate("full-rate codes have no parity-check matrix")
    if rank_rational(G) != G.rows:
        raise RankDeficient("parity_check requires full row rank")
    if not is_basic(G):
        raise NotBasic("parity_check requires a basic encoder")
    snf = smith_normal_form(G)
    n, k = G.cols, G.rows
    H = PolyMatrix([[snf.V.entries[i][j] for i in range(n)] for j in range(k, n)])
    if not (G * H.transpose()).is_zero:
        raise AssertionError("internal error: parity candidate does not annihilate G")
    return H
