"""Built-in reference codes over GF(8) used as a regression suite.

Four published MDS convolutional Goppa codes (rates 1/3, 2/3, 1/4 and
2/4) with their generator matrices, control matrices and parameters in
power notation.  ``verify_reference_code`` rebuilds each one from its
bundled configuration and reports every mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import List, Tuple

from .config import CodeConfig, field_from_config, parse_config, realize
from .free_distance import free_distance_bruteforce, max_guarded_deg_bound
from .polymat import PolyMatrix, rank_rational


@dataclass(frozen=True)
class ReferenceCode:
    name: str
    config_file: str
    generator_rows: Tuple[Tuple[str, ...], ...]
    control_rows: Tuple[Tuple[str, ...], ...]
    n: int
    k: int
    degree: int
    memory: int
    forney_indices: Tuple[int, ...]
    free_distance: int


REFERENCE_CODES: Tuple[ReferenceCode, ...] = (
    ReferenceCode(
        name="rate 1/3",
        config_file="rate_1_3.cfg",
        generator_rows=(
            ("a^6 + a z + a^4 z^2", "a^5 + a^2 z + a z^2", "a^3 + a^4 z + a^2 z^2"),
        ),
        control_rows=(
            ("a^5 + a^2 z + a z^2", "a^6 + a z + a^4 z^2", "0"),
            ("a^3 + a^4 z + a^2 z^2", "0", "a^6 + a z + a^4 z^2"),
        ),
        n=3, k=1, degree=2, memory=2, forney_indices=(2,), free_distance=9,
    ),
    ReferenceCode(
        name="rate 2/3",
        config_file="rate_2_3.cfg",
        generator_rows=(
            ("a^2 + a z", "a^4 + a^2 z", "a + a^4 z"),
            ("a + a^4 z^2", "a^2 + a z^2", "a^4 + a^2 z^2"),
        ),
        control_rows=(
            ("a^4 + a z^2 + a^2 z^3", "a + a^2 z^2 + a^4 z^3", "a^2 + a^4 z^2 + a z^3"),
        ),
        n=3, k=2, degree=3, memory=2, forney_indices=(1, 2), free_distance=6,
    ),
    ReferenceCode(
        name="rate 1/4",
        config_file="rate_1_4.cfg",
        generator_rows=(
            ("a^3 + a^3 z + z^2", "a^6 + a^6 z + z^2", "a^6 + a^2 z + z^2", "a^5 + a^5 z + z^2"),
        ),
        control_rows=(
            ("a^6 + a^6 z + z^2", "a^3 + a^3 z + z^2", "0", "0"),
            ("a^6 + a^2 z + z^2", "0", "a^3 + a^3 z + z^2", "0"),
            ("a^5 + a^5 z + z^2", "0", "0", "a^3 + a^3 z + z^2"),
        ),
        n=4, k=1, degree=2, memory=2, forney_indices=(2,), free_distance=12,
    ),
    ReferenceCode(
        name="rate 2/4",
        config_file="rate_2_4.cfg",
        generator_rows=(
            ("a + a^3 z", "a^2 + a^6 z", "a^3 + a^2 z", "a^4 + a^5 z"),
            ("a^4 + z^2", "a + z^2", "a^5 + z^2", "a^2 + z^2"),
        ),
        control_rows=(
            ("a^6 + a z + z^2 + a z^3", "a^4 + a^2 z + a^4 z^2 + z^3",
             "a + a z + a^6 z^2 + a^5 z^3", "0"),
            ("a^2 + a^2 z + a^5 z^2 + a^3 z^3", "a^4 + a^4 z + a^3 z^2 + a^6 z^3",
             "0", "a + a z + a^6 z^2 + a^5 z^3"),
        ),
        n=4, k=2, degree=3, memory=2, forney_indices=(1, 2), free_distance=8,
    ),
)


def load_reference_config(ref: ReferenceCode) -> CodeConfig:
    text = resources.files("convgoppa.data").joinpath(ref.config_file).read_text()
    return parse_config(text)


def verify_reference_code(ref: ReferenceCode, bruteforce: bool = False) -> List[str]:
    """Rebuild one reference code; returns a list of mismatch descriptions."""
    mismatches: List[str] = []
    cfg = load_reference_config(ref)
    field = field_from_config(cfg)
    report = realize(cfg, field=field)

    got_rows = report.generator_matrix.to_text_rows()
    for i, expected_row in enumerate(ref.generator_rows):
        for j, expected in enumerate(expected_row):
            if got_rows[i][j] != expected:
                mismatches.append(
                    f"{ref.name} entry ({i + 1},{j + 1}): expected {expected!r}, got {got_rows[i][j]!r}"
                )

    for attr, expected in (
        ("n", ref.n), ("k", ref.k), ("degree", ref.degree),
        ("memory", ref.memory), ("forney_indices", ref.forney_indices),
        ("free_distance", ref.free_distance),
    ):
        got = getattr(report, attr)
        if got != expected:
            mismatches.append(f"{ref.name} {attr}: expected {expected}, got {got}")

    if report.free_distance != report.singleton_bound or report.is_mds is not True:
        mismatches.append(
            f"{ref.name}: expected MDS (d_free = {report.singleton_bound}), "
            f"got d_free = {report.free_distance}"
        )

    H = PolyMatrix.from_text(field, ref.control_rows)
    if not (report.generator_matrix * H.transpose()).is_zero:
        mismatches.append(f"{ref.name}: published control matrix does not annihilate G")
    if rank_rational(H) != ref.n - ref.k:
        mismatches.append(f"{ref.name}: published control matrix is not of rank n - k")

    if bruteforce:
        deg_bound = min(
            report.degree + report.memory + 2,
            max_guarded_deg_bound(field.q, report.k),
        )
        d_bf = free_distance_bruteforce(report.canonical_matrix, deg_bound)
        if d_bf != ref.free_distance:
            mismatches.append(
                f"{ref.name}: brute-force distance {d_bf} (deg_bound {deg_bound}) "
                f"!= {ref.free_distance}"
            )
    return mismatches


def verify_all(bruteforce: bool = False):
    """Verify every reference code; returns {name: mismatch list}."""
    return {ref.name: verify_reference_code(ref, bruteforce) for ref in REFERENCE_CODES}
