"""Univariate polynomials over GF(q) in the indeterminate z.

Coefficients are stored as raw integer encodings (see finite_field) in a
normalized tuple, low degree first, with no trailing zeros.  The zero
polynomial has an empty coefficient tuple and the distinguished degree
MINUS_INFINITY.
"""

from __future__ import annotations

import re
from typing import Sequence, Tuple, Union

from .errors import BothZero, DivisionByZero, FieldMismatch
from .finite_field import FieldElement, FieldTable


class _MinusInfinity:
    """Degree of the zero polynomial; compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("MINUS_INFINITY")

    def __repr__(self):
        return "MINUS_INFINITY"


MINUS_INFINITY = _MinusInfinity()


class Poly:
    """Immutable polynomial over a single FieldTable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldTable, coeffs: Sequence[int] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldTable) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldTable) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def variable(cls, field: FieldTable) -> "Poly":
        """The polynomial z."""
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, elem: FieldElement) -> "Poly":
        return cls(elem.field, (elem.val,))

    @classmethod
    def from_elements(cls, field: FieldTable, elems: Sequence[FieldElement]) -> "Poly":
        for e in elems:
            if e.field.key != field.key:
                raise FieldMismatch("coefficient from a different field")
        return cls(field, [e.val for e in elems])

    @classmethod
    def from_logs(cls, field: FieldTable, logs: Sequence[int]) -> "Poly":
        """Coefficients given as generator logs, -1 for zero."""
        return cls(field, [field.from_log(k).val for k in logs])

    # -- structure -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def weight(self) -> int:
        """Number of nonzero coefficients."""
        return sum(1 for c in self.coeffs if c)

    def coefficient(self, i: int) -> FieldElement:
        val = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FieldElement(self.field, val)

    def coeff_val(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def lc(self) -> FieldElement:
        """Leading coefficient; zero for the zero polynomial."""
        return FieldElement(self.field, self.coeffs[-1] if self.coeffs else 0)

    def to_logs(self) -> Tuple[int, ...]:
        log = self.field.log_table
        return tuple(log[c] for c in self.coeffs)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"cannot combine Poly with {type(other).__name__}")
        if other.field.key != self.field.key:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add_val(out[i], c)
        return Poly(f, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = f.sub_val(out[i], c)
        return Poly(f, out)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, [f.neg_val(c) for c in self.coeffs])

    def __mul__(self, other: Union["Poly", FieldElement]) -> "Poly":
        if isinstance(other, FieldElement):
            return self.scale(other)
        self._check(other)
        f = self.field
        if self.is_zero or other.is_zero:
            return Poly.zero(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        add, mul = f.add_val, f.mul_val
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(other.coeffs):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(f, out)

    def scale(self, elem: FieldElement) -> "Poly":
        if elem.field.key != self.field.key:
            raise FieldMismatch("scalar from a different field")
        f = self.field
        return Poly(f, [f.mul_val(c, elem.val) for c in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by z^k."""
        if self.is_zero:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dd = len(other.coeffs) - 1
        lead_inv = f.inv_val(other.coeffs[-1])
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = f.mul_val(rem[i], lead_inv)
            if c:
                quot[i - dd] = c
                for j, dc in enumerate(other.coeffs):
                    rem[i - dd + j] = f.sub_val(rem[i - dd + j], f.mul_val(c, dc))
        return Poly(f, quot), Poly(f, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.lc.inverse())

    def evaluate(self, x: FieldElement) -> FieldElement:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + FieldElement(self.field, c)
        return acc

    # -- identity ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and other.field.key == self.field.key
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.key, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            cstr = str(FieldElement(self.field, c))
            if j == 0:
                terms.append(cstr)
                continue
            zpart = "z" if j == 1 else f"z^{j}"
            terms.append(zpart if cstr == "1" else f"{cstr} {zpart}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly(GF({self.field.q}), {self})"


def poly_gcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """Extended gcd: returns monic g and u, v with g = u*a + v*b."""
    a._check(b)
    if a.is_zero and b.is_zero:
        raise BothZero("gcd of two zero polynomials is undefined")
    f = a.field
    r0, r1 = a, b
    u0, u1 = Poly.one(f), Poly.zero(f)
    v0, v1 = Poly.zero(f), Poly.one(f)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    c_inv = r0.lc.inverse()
    return r0.scale(c_inv), u0.scale(c_inv), v0.scale(c_inv)


def vec_weight(vec: Sequence[Poly]) -> int:
    """Overall Hamming weight: total nonzero coefficients across entries."""
    return sum(p.weight for p in vec)


_TERM_RE = re.compile(
    r"^\s*(?:(?P<coeff>0|1|a(?:\^(?P<k>\d+))?)\s*)?(?P<z>z(?:\^(?P<j>\d+))?)?\s*$"
)


def parse_poly(field: FieldTable, text: str) -> Poly:
    """Parse the power-notation rendering produced by Poly.__str__."""
    text = text.strip()
    if text == "0":
        return Poly.zero(field)
    coeff_by_deg = {}
    for raw in text.split("+"):
        m = _TERM_RE.match(raw)
        if not m or (m.group("coeff") is None and m.group("z") is None):
            raise ValueError(f"cannot parse polynomial term {raw!r}")
        coeff = m.group("coeff")
        if coeff is None or coeff == "1":
            elem = field.one
        elif coeff == "0":
            elem = field.zero
        elif coeff == "a":
            elem = field.gen
        else:
            elem = field.from_log(int(m.group("k")))
        if m.group("z") is None:
            deg = 0
        elif m.group("j") is None:
            deg = 1
        else:
            deg = int(m.group("j"))
        prev = coeff_by_deg.get(deg, field.zero)
        coeff_by_deg[deg] = prev + elem
    size = max(coeff_by_deg) + 1
    vals = [0] * size
    for d, e in coeff_by_deg.items():
        vals[d] = e.val
    return Poly(field, vals)
