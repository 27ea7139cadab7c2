"""Acceptance suite: one pass/fail line per criterion, exact tolerances."""

import functools
import random
import time

import pytest

from convgoppa import (
    Poly,
    PolyMatrix,
    build_state_space,
    free_distance_bruteforce,
    free_distance_search,
    minors_gcd,
    parameter_bounds,
    rank_rational,
    singleton_bound,
    smith_normal_form,
    to_canonical,
)
from convgoppa.free_distance import max_guarded_deg_bound
from convgoppa.polymat import determinant
from convgoppa.reference_codes import (
    REFERENCE_CODES,
    field_from_config,
    load_reference_config,
    realize,
)
from conftest import random_matrix, random_poly, random_unimodular


def criterion(number):
    """Print one ACCEPTANCE line per criterion, pass or fail."""

    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE {number}: FAIL")
                raise
            print(f"ACCEPTANCE {number}: PASS")

        return wrapper

    return decorate


def build_reference(index):
    ref = REFERENCE_CODES[index]
    cfg = load_reference_config(ref)
    return ref, field_from_config(cfg), realize(cfg)


def check_example(index, *, time_limit, bruteforce_bound=None):
    start = time.perf_counter()
    ref, field, report = build_reference(index)
    assert report.generator_matrix.to_text_rows() == [
        list(row) for row in ref.generator_rows
    ]
    assert (report.n, report.k, report.degree, report.memory) == (
        ref.n, ref.k, ref.degree, ref.memory)
    assert report.forney_indices == ref.forney_indices
    assert report.free_distance == ref.free_distance
    assert report.free_distance == singleton_bound(ref.n, ref.k, ref.degree)
    assert report.is_mds is True
    if bruteforce_bound is not None:
        assert free_distance_bruteforce(
            report.canonical_matrix, bruteforce_bound) == ref.free_distance
    elapsed = time.perf_counter() - start
    assert elapsed < time_limit, f"took {elapsed:.2f}s"


@criterion(1)
def test_acceptance_1_rate_1_3():
    check_example(0, time_limit=1.0, bruteforce_bound=4)


@criterion(2)
def test_acceptance_2_rate_2_3():
    check_example(1, time_limit=1.0)


@criterion(3)
def test_acceptance_3_rate_1_4():
    check_example(2, time_limit=1.0)


@criterion(4)
def test_acceptance_4_rate_2_4():
    check_example(3, time_limit=5.0)


@criterion(5)
def test_acceptance_5_control_matrices():
    for index in range(4):
        ref, field, report = build_reference(index)
        H = PolyMatrix.from_text(field, ref.control_rows)
        assert (report.generator_matrix * H.transpose()).is_zero
        assert rank_rational(H) == ref.n - ref.k


@criterion(6)
def test_acceptance_6_canonicality():
    for index in (0, 1):
        ref, field, report = build_reference(index)
        G = report.generator_matrix
        C, _ = to_canonical(G)
        # equality up to unit row scaling
        for i in range(G.rows):
            row_g, row_c = G.row(i), C.row(i)
            lead = next(j for j in range(G.cols) if not row_g[j].is_zero)
            unit = row_c[lead].lc / row_g[lead].lc
            assert all(g.scale(unit) == c for g, c in zip(row_g, row_c))


@criterion(7)
def test_acceptance_7_bounds():
    assert parameter_bounds(8, 2, 2) == (4096, 6, 2, 8)
    rng = random.Random(101)
    for _ in range(100):
        k = rng.randint(1, 6)
        n = rng.randint(k, k + 6)
        delta = rng.randint(0, 12)
        independent = (n - k) * (delta // k + 1) + delta + 1
        assert singleton_bound(n, k, delta) == independent


@criterion(8)
def test_acceptance_8_property_suite(small_fields):
    start = time.perf_counter()
    rng = random.Random(103)

    for _ in range(500):
        f = small_fields[rng.choice([2, 4, 8])]
        rows, cols = rng.randint(1, 4), rng.randint(1, 6)
        M = random_matrix(rng, f, rows, cols, 4)
        snf = smith_normal_form(M)
        assert snf.U * M * snf.V == snf.D
        assert determinant(snf.U).degree == 0
        assert determinant(snf.V).degree == 0
        r = rank_rational(M)
        if r:
            prod = Poly.one(f)
            for fac in snf.invariant_factors[:r]:
                prod = prod * fac
            assert minors_gcd(M, r) == prod.monic()

    done = 0
    while done < 50:
        f = small_fields[rng.choice([2, 4, 8])]
        k = rng.randint(1, 2)
        n = rng.randint(k + 1, 4)
        M = random_matrix(rng, f, k, n, 2)
        if rank_rational(M) != k:
            continue
        C, profile = to_canonical(M)
        if profile.degree > 3:
            continue
        d_trellis = free_distance_search(build_state_space(C))
        bound = min(profile.degree + profile.memory + 2,
                    max_guarded_deg_bound(f.q, k))
        assert d_trellis == free_distance_bruteforce(C, bound)
        assert d_trellis <= singleton_bound(n, k, profile.degree)

        U = random_unimodular(rng, f, k)
        C2, profile2 = to_canonical(U * M)
        assert profile2 == profile
        assert free_distance_search(build_state_space(C2)) == d_trellis
        done += 1

    elapsed = time.perf_counter() - start
    assert elapsed < 120.0, f"took {elapsed:.2f}s"


@criterion(9)
def test_acceptance_9_field_axioms(f8):
    import itertools

    a = f8.gen
    assert a ** 3 == a ** 2 + f8.one
    elems = list(f8.elements())
    for x in elems:
        assert x ** 8 == x
    for x, y, w in itertools.product(elems, repeat=3):
        assert (x + y) + w == x + (y + w)
        assert (x * y) * w == x * (y * w)
        assert x * (y + w) == x * y + x * w
