import random

import pytest

from convgoppa import FieldTable, Poly, PolyMatrix, gf8
from convgoppa.polymat import smith_normal_form


@pytest.fixture(scope="session")
def f8():
    return gf8()


@pytest.fixture(scope="session")
def f2():
    return FieldTable(2, 1, (1, 1))


@pytest.fixture(scope="session")
def f4():
    return FieldTable(2, 2, (1, 1, 1))


@pytest.fixture(scope="session")
def small_fields(f2, f4, f8):
    return {2: f2, 4: f4, 8: f8}


def random_poly(rng: random.Random, field, max_deg: int, nonzero: bool = False) -> Poly:
    while True:
        d = rng.randint(0, max_deg)
        p = Poly(field, [rng.randrange(field.q) for _ in range(d + 1)])
        if not nonzero or not p.is_zero:
            return p


def random_matrix(rng: random.Random, field, rows: int, cols: int, max_deg: int) -> PolyMatrix:
    return PolyMatrix(
        [[random_poly(rng, field, max_deg) for _ in range(cols)] for _ in range(rows)]
    )


def random_unimodular(rng: random.Random, field, k: int, ops: int = 6) -> PolyMatrix:
    """Product of elementary row operations applied to the identity."""
    rows = [list(r) for r in PolyMatrix.identity(field, k).entries]
    for _ in range(ops):
        choice = rng.randrange(3)
        if choice == 0 and k > 1:
            i, j = rng.sample(range(k), 2)
            rows[i], rows[j] = rows[j], rows[i]
        elif choice == 1:
            c = field.element(rng.randrange(1, field.q))
            i = rng.randrange(k)
            rows[i] = [e.scale(c) for e in rows[i]]
        elif k > 1:
            i, j = rng.sample(range(k), 2)
            q = random_poly(rng, field, 2)
            rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
    return PolyMatrix(rows)


def same_row_module(A: PolyMatrix, B: PolyMatrix) -> bool:
    """A and B generate the same GF(q)[z]-submodule of GF(q)[z]^n."""
    if A.cols != B.cols:
        return False
    stacked = PolyMatrix(list(A.entries) + list(B.entries))
    fa = smith_normal_form(A).invariant_factors
    fb = smith_normal_form(B).invariant_factors
    fs = smith_normal_form(stacked).invariant_factors
    return fa == fb == fs
