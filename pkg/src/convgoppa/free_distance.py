"""Exact free distance of a convolutional code.

The primary method realizes the canonical encoder as a bank of shift
registers (one per input, length equal to that row's Forney index) and
runs a lowest-cost-first search over the q^delta states for the cheapest
nonzero loop at the zero state.  An independent brute-force enumeration
over bounded-degree information words serves as a cross-check oracle.
"""

from __future__ import annotations

import heapq
from itertools import product
from typing import Dict, List, Sequence, Tuple

from .errors import NotCanonical, SearchSpaceTooLarge
from .polymat import PolyMatrix, is_basic, rank_rational
from .polynomial import MINUS_INFINITY, Poly

BRUTEFORCE_GUARD = 10 ** 8


class StateSpace:
    """Shift-register realization of a canonical encoder.

    State cells are ordered register-by-register (row i contributes
    nu_i cells, most recent input first) and packed into a single
    integer in mixed radix q.
    """

    def __init__(self, encoder: PolyMatrix):
        field = encoder.field
        k, n = encoder.rows, encoder.cols
        if rank_rational(encoder) != k:
            raise NotCanonical("encoder must have full row rank")
        if not is_basic(encoder):
            raise NotCanonical("encoder must be basic")
        nus = []
        for i in range(k):
            d = encoder.row_degree(i)
            nus.append(0 if d is MINUS_INFINITY else d)
        lead = [[encoder.entry(i, j).coeff_val(nus[i]) for j in range(n)] for i in range(k)]
        from .polymat import _left_null_combination

        if _left_null_combination(field, lead) is not None:
            raise NotCanonical("high-order coefficient matrix is row-dependent")

        self.field = field
        self.encoder = encoder
        self.k = k
        self.n = n
        self.forney_indices = tuple(nus)
        self.delta = sum(nus)
        self.num_states = field.q ** self.delta
        # taps[i][d][j]: coefficient of z^d in entry (i, j)
        self.taps = [
            [[encoder.entry(i, j).coeff_val(d) for j in range(n)] for d in range(nus[i] + 1)]
            for i in range(k)
        ]
        self._transitions = None

    # -- state packing ---------------------------------------------------------

    def _decode_state(self, state: int) -> List[List[int]]:
        q = self.field.q
        regs = []
        for nu in self.forney_indices:
            cells = []
            for _ in range(nu):
                cells.append(state % q)
                state //= q
            regs.append(cells)
        return regs

    def _encode_state(self, regs: Sequence[Sequence[int]]) -> int:
        q = self.field.q
        state = 0
        mult = 1
        for reg in regs:
            for c in reg:
                state += c * mult
                mult *= q
        return state

    # -- dynamics ----------------------------------------------------------------

    def step(self, state: int, u: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
        """One clock tick: returns (next_state, output block of n values)."""
        f = self.field
        regs = self._decode_state(state)
        out = [0] * self.n
        for i in range(self.k):
            taps = self.taps[i]
            ui = u[i]
            if ui:
                row0 = taps[0]
                for j in range(self.n):
                    if row0[j]:
                        out[j] = f.add_val(out[j], f.mul_val(ui, row0[j]))
            for d, cell in enumerate(regs[i], start=1):
                if cell:
                    rowd = taps[d]
                    for j in range(self.n):
                        if rowd[j]:
                            out[j] = f.add_val(out[j], f.mul_val(cell, rowd[j]))
        next_regs = [[u[i]] + regs[i][:-1] if regs[i] else [] for i in range(self.k)]
        return self._encode_state(next_regs), tuple(out)

    def encode_stream(self, blocks: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
        """Feed input blocks (plus a flushing tail of zeros) through the registers."""
        state = 0
        out = []
        flush = max(self.forney_indices, default=0)
        zero_block = (0,) * self.k
        for u in list(blocks) + [zero_block] * flush:
            state, c = self.step(state, tuple(u))
            out.append(c)
        return out

    def encode_poly_vector(self, u_polys: Sequence[Poly]) -> List[Poly]:
        """Codeword u(z) * G computed through the register realization."""
        deg = 0
        for p in u_polys:
            if not p.is_zero:
                deg = max(deg, p.degree)
        blocks = [[p.coeff_val(t) for p in u_polys] for t in range(deg + 1)]
        outputs = self.encode_stream(blocks)
        return [
            Poly(self.field, [c[j] for c in outputs]) for j in range(self.n)
        ]

    # -- transition table ----------------------------------------------------------

    def transitions(self):
        """Per-state list of (next_state, branch_weight) indexed by input.

        Built lazily; exploits linearity of the branch map so only
        q^delta + q^k raw steps are needed.
        """
        if self._transitions is not None:
            return self._transitions
        f = self.field
        zero_input = (0,) * self.k
        inputs = list(product(range(f.q), repeat=self.k))
        input_effects = []
        for u in inputs:
            ns, out = self.step(0, u)
            input_effects.append((ns, out))
        state_effects = []
        for s in range(self.num_states):
            ns, out = self.step(s, zero_input)
            state_effects.append((ns, out))
        add = f.add_val
        table = []
        for s in range(self.num_states):
            s_next, s_out = state_effects[s]
            row = []
            for u_next, u_out in input_effects:
                # register cells written by the input and by the shift are disjoint
                ns = s_next + u_next
                w = 0
                for a, b in zip(s_out, u_out):
                    if add(a, b):
                        w += 1
                row.append((ns, w))
            table.append(row)
        self._transitions = (inputs, table)
        return self._transitions


def build_state_space(G: PolyMatrix) -> StateSpace:
    return StateSpace(G)


def free_distance_search(space: StateSpace) -> int:
    """Minimum accumulated weight over nonzero loops at the zero state."""
    q = space.field.q
    inputs, table = space.transitions()
    best = None
    dist: Dict[int, int] = {}
    heap = []
    # first step must use a nonzero input block
    for idx in range(1, len(inputs)):
        ns, w = table[0][idx]
        if ns == 0:
            if best is None or w < best:
                best = w
        elif ns not in dist or w < dist[ns]:
            dist[ns] = w
            heapq.heappush(heap, (w, ns))
    while heap:
        w, s = heapq.heappop(heap)
        if best is not None and w >= best:
            break
        if dist.get(s, -1) != w:
            continue
        for ns, bw in table[s]:
            w2 = w + bw
            if ns == 0:
                if best is None or w2 < best:
                    best = w2
            elif (best is None or w2 < best) and (ns not in dist or w2 < dist[ns]):
                dist[ns] = w2
                heapq.heappush(heap, (w2, ns))
    if best is None or best == 0:
        raise AssertionError("internal error: no weight-positive loop found")
    return best


def max_guarded_deg_bound(q: int, k: int) -> int:
    """Largest deg_bound the brute-force enumeration guard permits."""
    d = 0
    while q ** (k * (d + 2)) <= BRUTEFORCE_GUARD:
        d += 1
    return d


def free_distance_bruteforce(G: PolyMatrix, deg_bound: int) -> int:
    """Minimum weight of u(z)*G over nonzero u with deg u_i <= deg_bound.

    Exhaustive branch-and-bound over input blocks in time order.  Two
    exact reductions shrink the space without affecting the minimum:
    shifting u by powers of z preserves weight (so the first block may
    be taken nonzero) and scalar multiples preserve weight (so the first
    nonzero symbol of the first block may be taken to be 1).
    """
    if deg_bound < 0:
        raise ValueError("deg_bound must be nonnegative")
    field = G.field
    q, k, n = field.q, G.rows, G.cols
    if q ** (k * (deg_bound + 1)) > BRUTEFORCE_GUARD:
        raise SearchSpaceTooLarge(
            f"q^(k*(deg_bound+1)) = {q ** (k * (deg_bound + 1))} exceeds {BRUTEFORCE_GUARD}"
        )
    max_deg = 0
    for i in range(k):
        d = G.row_degree(i)
        if d is not MINUS_INFINITY:
            max_deg = max(max_deg, d)
    coeff = [[[G.entry(i, j).coeff_val(d) for j in range(n)] for i in range(k)]
             for d in range(max_deg + 1)]
    blocks = list(product(range(q), repeat=k))
    add, mul = field.add_val, field.mul_val
    # contribution of an input block applied d ticks ago to the current output
    contrib: List[List[Tuple[int, ...]]] = []
    for d in range(max_deg + 1):
        per_block = []
        for u in blocks:
            out = [0] * n
            for i, ui in enumerate(u):
                if ui:
                    row = coeff[d][i]
                    for j in range(n):
                        if row[j]:
                            out[j] = add(out[j], mul(ui, row[j]))
            per_block.append(tuple(out))
        contrib.append(per_block)

    first_indices = [
        idx for idx, u in enumerate(blocks)
        if any(u) and next(v for v in u if v) == 1
    ]
    best = [None]

    def output_weight(chosen: List[int], t: int) -> int:
        out = [0] * n
        for d in range(min(t, max_deg) + 1):
            idx = chosen[t - d] if t - d < len(chosen) else 0
            if idx:
                c = contrib[d][idx]
                for j in range(n):
                    if c[j]:
                        out[j] = add(out[j], c[j])
        return sum(1 for v in out if v)

    def dfs(chosen: List[int], acc: int):
        t = len(chosen) - 1
        acc += output_weight(chosen, t)
        if best[0] is not None and acc >= best[0]:
            return
        if t == deg_bound:
            for tail in range(t + 1, t + max_deg + 1):
                acc += output_weight(chosen, tail)
                if best[0] is not None and acc >= best[0]:
                    return
            best[0] = acc
            return
        for idx in range(len(blocks)):
            chosen.append(idx)
            dfs(chosen, acc)
            chosen.pop()

    for idx in first_indices:
        dfs([idx], 0)
    assert best[0] is not None
    return best[0]
