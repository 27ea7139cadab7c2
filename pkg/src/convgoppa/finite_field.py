"""Exact arithmetic in GF(p^s) via log/antilog tables.

Elements are residue polynomials of degree < s over Z/p, encoded as a
single integer whose base-p digits are the coefficients (low degree
first).  Multiplication, inversion and powers go through log/antilog
tables with respect to a distinguished primitive element, so the
canonical display is the power notation ``a^k`` used for printed
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from .errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotPrimitive,
    ReducibleModulus,
)

TABLE_LIMIT = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_divmod_gfp(num: Sequence[int], den: Sequence[int], p: int):
    """Long division of coefficient lists (low->high) over Z/p."""
    num = list(num)
    dd = len(den) - 1
    lead_inv = pow(den[-1], -1, p)
    quot = [0] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = (num[i] * lead_inv) % p
        if c:
            quot[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - c * dc) % p
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def _monic_polys_of_degree(d: int, p: int) -> Iterator[Tuple[int, ...]]:
    """All monic degree-d coefficient tuples over Z/p, low->high."""
    total = p ** d
    for v in range(total):
        coeffs = []
        x = v
        for _ in range(d):
            coeffs.append(x % p)
            x //= p
        yield tuple(coeffs) + (1,)


@dataclass(frozen=True)
class FieldSpec:
    """Construction data for GF(p^s).

    ``modulus`` lists s+1 coefficients over Z/p, low degree to high,
    with leading coefficient 1.  ``generator`` gives the coefficients
    of an element asserted primitive; None selects the class of x.
    """

    p: int
    s: int
    modulus: Tuple[int, ...]
    generator: Optional[Tuple[int, ...]] = None


class FieldElement:
    """Element of a FieldTable; rejects mixed-field arithmetic."""

    __slots__ = ("field", "val")

    def __init__(self, field: "FieldTable", val: int):
        self.field = field
        self.val = val

    def _coerce(self, other) -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field.key != self.field.key:
            raise FieldMismatch(
                f"elements of GF({self.field.q}) and GF({other.field.q}) "
                "with different construction cannot be combined"
            )
        return other.val

    def __add__(self, other):
        return FieldElement(self.field, self.field.add_val(self.val, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub_val(self.val, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_val(self.val))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul_val(self.val, self._coerce(other)))

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.mul_val(self.val, self.field.inv_val(o)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_val(self.val, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_val(self.val))

    @property
    def log(self) -> int:
        """Discrete log w.r.t. the generator; -1 for zero."""
        return self.field.log_table[self.val]

    def coeffs(self) -> Tuple[int, ...]:
        x, p = self.val, self.field.p
        out = []
        for _ in range(self.field.s):
            out.append(x % p)
            x //= p
        return tuple(out)

    def __bool__(self) -> bool:
        return self.val != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and other.field.key == self.field.key
            and other.val == self.val
        )

    def __hash__(self) -> int:
        return hash((self.field.key, self.val))

    def __str__(self) -> str:
        k = self.log
        if k == -1:
            return "0"
        if k == 0:
            return "1"
        if k == 1:
            return "a"
        return f"a^{k}"

    def poly_str(self) -> str:
        """Debug rendering as a polynomial in the residue class of x."""
        terms = []
        for i, c in enumerate(self.coeffs()):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xpart = "x" if i == 1 else f"x^{i}"
                terms.append(xpart if c == 1 else f"{c}{xpart}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"FieldElement(GF({self.field.q}), {self})"


class FieldTable:
    """Precomputed arithmetic for GF(p^s).

    Immutable after construction; all operations are pure.  Raw ``*_val``
    methods operate on integer encodings and back the performance-critical
    paths (matrix reduction, trellis search).
    """

    def __init__(self, p: int, s: int, modulus: Sequence[int],
                 generator: Optional[Sequence[int]] = None):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if s < 1:
            raise ValueError(f"extension degree must be >= 1, got {s}")
        q = p ** s
        if q > TABLE_LIMIT:
            raise FieldTooLarge(f"p^s = {q} exceeds the table limit {TABLE_LIMIT}")
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != s + 1:
            raise ValueError(f"modulus must have {s + 1} coefficients, got {len(modulus)}")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.p = p
        self.s = s
        self.q = q
        self.modulus = modulus
        self._check_irreducible()

        if generator is None:
            if s == 1:
                gen_val = (p - modulus[0]) % p  # class of x is the root of x + m0
            else:
                gen_val = p  # the class of x
        else:
            gen_val = self._encode(generator)
            if gen_val == 0:
                raise NotPrimitive("generator must be nonzero")
        self.generator_val = gen_val
        self.key = (p, s, modulus, gen_val)
        self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _encode(self, coeffs: Sequence[int]) -> int:
        val = 0
        for c in reversed(list(coeffs)):
            val = val * self.p + (c % self.p)
        return val

    def _decode(self, val: int) -> list:
        out = []
        for _ in range(self.s):
            out.append(val % self.p)
            val //= self.p
        return out

    def _check_irreducible(self) -> None:
        for d in range(1, self.s // 2 + 1):
            for cand in _monic_polys_of_degree(d, self.p):
                _, rem = _poly_divmod_gfp(self.modulus, cand, self.p)
                if not rem:
                    raise ReducibleModulus(
                        f"modulus {list(self.modulus)} is divisible by a degree-{d} factor"
                    )

    def _raw_mul(self, a: int, b: int) -> int:
        """Product of residue classes, computed without tables."""
        p, s = self.p, self.s
        ac, bc = self._decode(a), self._decode(b)
        prod = [0] * (2 * s - 1)
        for i, ai in enumerate(ac):
            if ai:
                for j, bj in enumerate(bc):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        _, rem = _poly_divmod_gfp(prod, self.modulus, p)
        rem += [0] * (s - len(rem))
        return self._encode(rem)

    def _build_tables(self) -> None:
        q = self.q
        antilog = [1]
        cur = 1
        for k in range(1, q - 1):
            cur = self._raw_mul(cur, self.generator_val)
            if cur == 1:
                raise NotPrimitive(
                    f"generator has multiplicative order {k}, expected {q - 1}"
                )
            antilog.append(cur)
        if self._raw_mul(cur, self.generator_val) != 1:
            raise NotPrimitive("generator order does not divide q - 1 cleanly")
        self.antilog_table = antilog
        log = [-1] * q
        for k, v in enumerate(antilog):
            log[v] = k
        self.log_table = log

    # -- raw integer operations ----------------------------------------------

    def add_val(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, mult = 0, 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg_val(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out, mult = 0, 1
        while a:
            out += ((p - a % p) % p) * mult
            a //= p
            mult *= p
        return out

    def sub_val(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add_val(a, self.neg_val(b))

    def mul_val(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.antilog_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv_val(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        return self.antilog_table[(-self.log_table[a]) % (self.q - 1)]

    def pow_val(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        return self.antilog_table[(self.log_table[a] * e) % (self.q - 1)]

    # -- element-level API -----------------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        return FieldElement(self, self.generator_val)

    def element(self, val: int) -> FieldElement:
        if not 0 <= val < self.q:
            raise ValueError(f"encoded value {val} out of range [0, {self.q})")
        return FieldElement(self, val)

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) > self.s:
            raise ValueError("too many coefficients for this field")
        return FieldElement(self, self._encode(list(coeffs) + [0] * (self.s - len(coeffs))))

    def from_log(self, k: int) -> FieldElement:
        """Element a^k; k = -1 denotes zero."""
        if k == -1:
            return self.zero
        return FieldElement(self, self.antilog_table[k % (self.q - 1)])

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.q):
            yield FieldElement(self, v)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldTable) and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FieldTable(p={self.p}, s={self.s}, q={self.q}, modulus={list(self.modulus)})"


def build_field(spec: FieldSpec) -> FieldTable:
    """Build the arithmetic table for a field specification."""
    return FieldTable(spec.p, spec.s, spec.modulus, spec.generator)


def gf8() -> FieldTable:
    """GF(8) with modulus x^3 + x^2 + 1 and generator a = class of x."""
    return FieldTable(2, 3, (1, 0, 1, 1))
