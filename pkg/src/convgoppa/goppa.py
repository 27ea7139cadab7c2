"""Convolutional Goppa codes from the trivial fibration P^m x A^1 -> A^1.

Monomial sections of the r-fold twist are evaluated at n affine-linear
sections p(z) = (alpha_1 z + beta_1, ..., alpha_m z + beta_m, z); the
resulting k x n matrix over GF(q)[z] generates the code, and every
classical invariant is computed from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb
from typing import List, Optional, Sequence, Tuple

from .errors import DimensionMismatch, DuplicateSections, EmptyGamma
from .finite_field import FieldElement, FieldTable
from .free_distance import build_state_space, free_distance_bruteforce, free_distance_search, max_guarded_deg_bound
from .polymat import (
    EncoderProfile,
    PolyMatrix,
    parity_check,
    rank_rational,
    row_module_basis,
    to_canonical,
)
from .polynomial import Poly


@dataclass(frozen=True)
class Section:
    """Affine-linear section z -> (a_1 z + b_1, ..., a_m z + b_m, z)."""

    coords: Tuple[Tuple[FieldElement, FieldElement], ...]

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def coordinate_poly(self, r: int) -> Poly:
        alpha, beta = self.coords[r]
        return Poly(alpha.field, (beta.val, alpha.val))

    def parameter_vector(self) -> Tuple[int, ...]:
        out: List[int] = []
        for alpha, beta in self.coords:
            out.extend((alpha.val, beta.val))
        return tuple(out)


@dataclass(frozen=True)
class SectionSet:
    """n pairwise-distinct sections with a common fiber dimension."""

    sections: Tuple[Section, ...]

    def __post_init__(self):
        if not self.sections:
            raise DuplicateSections("at least one section is required")
        m = self.sections[0].dimension
        seen = set()
        for i, sec in enumerate(self.sections):
            if sec.dimension != m:
                raise DimensionMismatch(f"section {i} has dimension {sec.dimension}, expected {m}")
            key = sec.parameter_vector()
            if key in seen:
                raise DuplicateSections(f"section {i} repeats an earlier section")
            seen.add(key)

    def __len__(self) -> int:
        return len(self.sections)

    @property
    def dimension(self) -> int:
        return self.sections[0].dimension


@dataclass(frozen=True)
class GammaGenerator:
    """Element of the section module: sum of coeff(z) * prod_r x_r^{e_r} terms."""

    terms: Tuple[Tuple[Tuple[int, ...], Poly], ...]

    def __post_init__(self):
        if not self.terms or all(c.is_zero for _, c in self.terms):
            raise EmptyGamma("generator must have a term with nonzero coefficient")

    @property
    def dimension(self) -> int:
        return len(self.terms[0][0])

    def max_total_degree(self) -> int:
        return max(sum(e) for e, c in self.terms if not c.is_zero)


@dataclass
class CodeReport:
    """All computed invariants of a constructed code plus provenance."""

    n: int
    k: int
    degree: int
    memory: int
    forney_indices: Tuple[int, ...]
    singleton_bound: int
    generator_matrix: PolyMatrix
    canonical_matrix: PolyMatrix
    parity_matrix: Optional[PolyMatrix]
    free_distance: Optional[int] = None
    free_distance_method: Optional[str] = None
    bruteforce_distance: Optional[int] = None
    bruteforce_deg_bound: Optional[int] = None
    is_mds: Optional[bool] = None
    warnings: List[str] = dc_field(default_factory=list)

    def to_dict(self) -> dict:
        def mat(M: Optional[PolyMatrix]):
            if M is None:
                return None
            return {"text": M.to_text_rows(), "logs": M.to_log_arrays()}

        return {
            "n": self.n,
            "k": self.k,
            "degree": self.degree,
            "memory": self.memory,
            "forney_indices": list(self.forney_indices),
            "singleton_bound": self.singleton_bound,
            "free_distance": self.free_distance,
            "free_distance_method": self.free_distance_method,
            "bruteforce_distance": self.bruteforce_distance,
            "bruteforce_deg_bound": self.bruteforce_deg_bound,
            "is_mds": self.is_mds,
            "generator_matrix": mat(self.generator_matrix),
            "canonical_matrix": mat(self.canonical_matrix),
            "parity_matrix": mat(self.parity_matrix),
            "warnings": list(self.warnings),
        }


def monomial_basis(m: int, r: int) -> List[Tuple[int, ...]]:
    """Exponent vectors e with |e| <= r, graded lexicographic order."""
    if m < 1:
        raise ValueError("fiber dimension must be >= 1")
    if r < 0:
        raise ValueError("twist degree must be >= 0")
    exps: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...], remaining: int):
        if len(prefix) == m:
            exps.append(prefix)
            return
        for e in range(remaining, -1, -1):
            extend(prefix + (e,), remaining - e)

    for total in range(r + 1):
        block: List[Tuple[int, ...]] = []

        def gen(prefix: Tuple[int, ...], left: int):
            if len(prefix) == m - 1:
                block.append(prefix + (left,))
                return
            for e in range(left, -1, -1):
                gen(prefix + (e,), left - e)

        gen((), total)
        exps.extend(block)
    assert len(exps) == comb(m + r, m)
    return exps


def evaluate_generator(g: GammaGenerator, p: Section) -> Poly:
    """Evaluate sum_t coeff_t(z) * prod_r (alpha_r z + beta_r)^{e_r} at p."""
    if g.dimension != p.dimension:
        raise DimensionMismatch(
            f"generator dimension {g.dimension} != section dimension {p.dimension}"
        )
    field = p.coords[0][0].field
    acc = Poly.zero(field)
    for exps, coeff in g.terms:
        if coeff.is_zero:
            continue
        term = coeff
        for r, e in enumerate(exps):
            if e:
                lin = p.coordinate_poly(r)
                for _ in range(e):
                    term = term * lin
        acc = acc + term
    return acc


def build_generator_matrix(gammas: Sequence[GammaGenerator], D: SectionSet) -> PolyMatrix:
    """The |Gamma| x n evaluation matrix, rows in generator order."""
    if not gammas:
        raise EmptyGamma("at least one generator is required")
    return PolyMatrix(
        [[evaluate_generator(g, p) for p in D.sections] for g in gammas]
    )


def singleton_bound(n: int, k: int, delta: int) -> int:
    """Generalized Singleton bound (n-k)(floor(delta/k)+1) + delta + 1."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if delta < 0:
        raise ValueError("degree must be nonnegative")
    return (n - k) * (delta // k + 1) + delta + 1


def parameter_bounds(q: int, m: int, r: int) -> Tuple[int, int, int, int]:
    """(n_max, k_max, memory_max, degree_max) for GF(q), fiber dim m, twist r.

    n is bounded by the number of affine-linear sections q^(2m); k by the
    count of monomials of total degree <= r; memory by r; and the degree
    by the sum over monomials of their total degree.
    """
    if m < 1 or r < 0:
        raise ValueError("need m >= 1 and r >= 0")
    n_max = q ** (2 * m)
    k_max = comb(m + r, m)
    delta_max = sum(comb(i + m - 1, m - 1) * i for i in range(r + 1))
    return n_max, k_max, r, delta_max


def _sections_collinear(D: SectionSet) -> bool:
    """Parameter vectors affinely dependent (span of differences has dim <= 1)."""
    field = D.sections[0].coords[0][0].field
    vecs = [s.parameter_vector() for s in D.sections]
    base = vecs[0]
    diffs = [
        [field.sub_val(a, b) for a, b in zip(v, base)] for v in vecs[1:]
    ]
    # rank over GF(q) of the difference matrix
    rank = 0
    work = [list(d) for d in diffs if any(d)]
    width = 2 * D.dimension
    for c in range(width):
        piv = next((i for i in range(rank, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = field.inv_val(work[rank][c])
        for i in range(rank + 1, len(work)):
            f = field.mul_val(work[i][c], inv)
            if f:
                work[i] = [
                    field.sub_val(x, field.mul_val(f, y))
                    for x, y in zip(work[i], work[rank])
                ]
        rank += 1
        if rank > 1:
            return False
    return rank <= 1


def build_code(
    field: FieldTable,
    gammas: Sequence[GammaGenerator],
    D: SectionSet,
    compute_distance: bool = True,
    bruteforce_crosscheck: bool = False,
) -> CodeReport:
    """Construct the code and compute all requested invariants."""
    if not gammas:
        raise EmptyGamma("at least one generator is required")
    G = build_generator_matrix(gammas, D)
    if G.field.key != field.key:
        raise DimensionMismatch("section/generator data does not live in the given field")
    warnings: List[str] = []
    n = len(D)
    requested_k = len(gammas)
    rank = rank_rational(G)
    if rank == 0:
        raise EmptyGamma("every generator evaluates to zero on the chosen sections")
    effective = G
    if rank < requested_k:
        warnings.append(
            f"evaluation map has a nontrivial kernel: effective dimension {rank} < {requested_k}"
        )
        effective = row_module_basis(G)
    k = rank

    if all(not alpha for sec in D.sections for alpha, _ in sec.coords):
        warnings.append("degenerate: block code (all sections are constant in z)")
    if D.dimension >= 2 and len(D) >= 2 and _sections_collinear(D):
        warnings.append("sections collinear: code factors through the P^1 case")

    canonical, profile = to_canonical(effective)
    parity = parity_check(canonical) if k < n else None
    bound = singleton_bound(n, k, profile.degree)

    report = CodeReport(
        n=n,
        k=k,
        degree=profile.degree,
        memory=profile.memory,
        forney_indices=profile.forney_indices,
        singleton_bound=bound,
        generator_matrix=G,
        canonical_matrix=canonical,
        parity_matrix=parity,
        warnings=warnings,
    )
    if compute_distance:
        space = build_state_space(canonical)
        report.free_distance = free_distance_search(space)
        report.free_distance_method = "trellis"
        report.is_mds = report.free_distance == bound
        if bruteforce_crosscheck:
            deg_bound = min(
                profile.degree + profile.memory + 2,
                max_guarded_deg_bound(field.q, k),
            )
            report.bruteforce_distance = free_distance_bruteforce(canonical, deg_bound)
            report.bruteforce_deg_bound = deg_bound
    return report
