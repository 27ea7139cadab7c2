"""Code-specification files: parse, validate, render, realize.

Sectioned key-value text with blocks [field], [geometry], [sections],
[gamma] and [options].  Field elements are written as generator
log-indices (-1 for zero), matching the power notation used everywhere
else in the package.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import ConfigSyntaxError, InvariantViolation, SchemaError
from .finite_field import FieldSpec, FieldTable, build_field
from .goppa import CodeReport, GammaGenerator, Section, SectionSet, build_code
from .polynomial import Poly

# sections: per section, per coordinate, (alpha_log, beta_log)
SectionLogs = Tuple[Tuple[int, int], ...]
# gamma: per generator, per term, (exponent vector, coefficient logs low->high)
GammaLogs = Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]


@dataclass(frozen=True)
class CodeConfig:
    p: int
    s: int
    modulus: Tuple[int, ...]
    generator: Optional[Tuple[int, ...]]
    m: int
    r: int
    sections: Tuple[SectionLogs, ...]
    gamma: Tuple[GammaLogs, ...]
    compute_distance: bool = True
    bruteforce_crosscheck: bool = False
    output_format: str = "human"


def _parse_int(section: str, key: str, raw: str) -> int:
    try:
        return int(raw.strip())
    except ValueError:
        raise SchemaError(f"[{section}] {key}: expected an integer, got {raw!r}") from None


def _parse_int_list(section: str, key: str, raw: str) -> Tuple[int, ...]:
    items = [x for x in raw.replace(",", " ").split() if x]
    if not items:
        raise SchemaError(f"[{section}] {key}: expected a list of integers")
    try:
        return tuple(int(x) for x in items)
    except ValueError:
        raise SchemaError(f"[{section}] {key}: expected integers, got {raw!r}") from None


def _parse_bool(section: str, key: str, raw: str) -> bool:
    val = raw.strip().lower()
    if val in ("true", "yes", "1", "on"):
        return True
    if val in ("false", "no", "0", "off"):
        return False
    raise SchemaError(f"[{section}] {key}: expected a boolean, got {raw!r}")


def parse_config(text: str) -> CodeConfig:
    """Parse and fully validate a code-specification document."""
    parser = configparser.ConfigParser(interpolation=None, delimiters=("=",))
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigSyntaxError(str(exc)) from None

    for block in ("field", "geometry", "sections", "gamma"):
        if not parser.has_section(block):
            raise SchemaError(f"missing required block [{block}]")

    fld = parser["field"]
    for key in ("p", "s", "modulus"):
        if key not in fld:
            raise SchemaError(f"[field] missing required key {key!r}")
    p = _parse_int("field", "p", fld["p"])
    s = _parse_int("field", "s", fld["s"])
    modulus = _parse_int_list("field", "modulus", fld["modulus"])
    generator = (
        _parse_int_list("field", "generator", fld["generator"])
        if "generator" in fld
        else None
    )
    if len(modulus) != s + 1:
        raise InvariantViolation(
            f"[field] modulus: expected {s + 1} coefficients for degree {s}, got {len(modulus)}"
        )

    geo = parser["geometry"]
    for key in ("m", "r"):
        if key not in geo:
            raise SchemaError(f"[geometry] missing required key {key!r}")
    m = _parse_int("geometry", "m", geo["m"])
    r = _parse_int("geometry", "r", geo["r"])
    if m < 1:
        raise InvariantViolation("[geometry] m: fiber dimension must be >= 1")
    if r < 0:
        raise InvariantViolation("[geometry] r: twist degree must be >= 0")

    q = p ** s

    def check_log(section: str, key: str, value: int) -> int:
        if not -1 <= value <= q - 2:
            raise InvariantViolation(
                f"[{section}] {key}: log index {value} outside [-1, {q - 2}]"
            )
        return value

    sections = []
    for key, raw in parser.items("sections"):
        coords = []
        for part in raw.split(";"):
            pair = _parse_int_list("sections", key, part)
            if len(pair) != 2:
                raise SchemaError(
                    f"[sections] {key}: each coordinate needs exactly (alpha_log, beta_log)"
                )
            coords.append((check_log("sections", key, pair[0]),
                           check_log("sections", key, pair[1])))
        if len(coords) != m:
            raise InvariantViolation(
                f"[sections] {key}: got {len(coords)} coordinates, geometry says m = {m}"
            )
        sections.append(tuple(coords))
    if not sections:
        raise SchemaError("[sections] block lists no sections")

    gamma = []
    for key, raw in parser.items("gamma"):
        terms = []
        for part in raw.split(";"):
            if ":" not in part:
                raise SchemaError(
                    f"[gamma] {key}: each term must be 'exponents : coefficient logs'"
                )
            exp_raw, coeff_raw = part.split(":", 1)
            exps = _parse_int_list("gamma", key, exp_raw)
            if len(exps) != m:
                raise InvariantViolation(
                    f"[gamma] {key}: exponent vector has length {len(exps)}, expected m = {m}"
                )
            if any(e < 0 for e in exps):
                raise InvariantViolation(f"[gamma] {key}: exponents must be nonnegative")
            if sum(exps) > r:
                raise InvariantViolation(
                    f"[gamma] {key}: total degree {sum(exps)} exceeds twist degree r = {r}"
                )
            logs = tuple(check_log("gamma", key, v)
                         for v in _parse_int_list("gamma", key, coeff_raw))
            terms.append((exps, logs))
        gamma.append(tuple(terms))
    if not gamma:
        raise SchemaError("[gamma] block lists no generators")

    compute_distance = True
    bruteforce = False
    output_format = "human"
    if parser.has_section("options"):
        opts = parser["options"]
        known = {"compute_distance", "bruteforce_crosscheck", "output_format"}
        for key in opts:
            if key not in known:
                raise SchemaError(f"[options] unknown key {key!r}")
        if "compute_distance" in opts:
            compute_distance = _parse_bool("options", "compute_distance", opts["compute_distance"])
        if "bruteforce_crosscheck" in opts:
            bruteforce = _parse_bool("options", "bruteforce_crosscheck", opts["bruteforce_crosscheck"])
        if "output_format" in opts:
            output_format = opts["output_format"].strip()
            if output_format not in ("human", "machine"):
                raise SchemaError(
                    f"[options] output_format: expected 'human' or 'machine', got {output_format!r}"
                )

    return CodeConfig(
        p=p,
        s=s,
        modulus=modulus,
        generator=generator,
        m=m,
        r=r,
        sections=tuple(sections),
        gamma=tuple(gamma),
        compute_distance=compute_distance,
        bruteforce_crosscheck=bruteforce,
        output_format=output_format,
    )


def render_config(cfg: CodeConfig) -> str:
    """Canonical text form; parse(render(cfg)) round-trips exactly."""
    lines = ["[field]"]
    lines.append(f"p = {cfg.p}")
    lines.append(f"s = {cfg.s}")
    lines.append("modulus = " + ", ".join(str(c) for c in cfg.modulus))
    if cfg.generator is not None:
        lines.append("generator = " + ", ".join(str(c) for c in cfg.generator))
    lines.append("")
    lines.append("[geometry]")
    lines.append(f"m = {cfg.m}")
    lines.append(f"r = {cfg.r}")
    lines.append("")
    lines.append("[sections]")
    for i, coords in enumerate(cfg.sections, start=1):
        rendered = " ; ".join(f"{a}, {b}" for a, b in coords)
        lines.append(f"{i} = {rendered}")
    lines.append("")
    lines.append("[gamma]")
    for i, terms in enumerate(cfg.gamma, start=1):
        rendered = " ; ".join(
            ", ".join(str(e) for e in exps) + " : " + ", ".join(str(c) for c in logs)
            for exps, logs in terms
        )
        lines.append(f"{i} = {rendered}")
    lines.append("")
    lines.append("[options]")
    lines.append(f"compute_distance = {'true' if cfg.compute_distance else 'false'}")
    lines.append(f"bruteforce_crosscheck = {'true' if cfg.bruteforce_crosscheck else 'false'}")
    lines.append(f"output_format = {cfg.output_format}")
    lines.append("")
    return "\n".join(lines)


def field_from_config(cfg: CodeConfig) -> FieldTable:
    return build_field(FieldSpec(cfg.p, cfg.s, cfg.modulus, cfg.generator))


def realize(cfg: CodeConfig, field: Optional[FieldTable] = None,
            compute_distance: Optional[bool] = None,
            bruteforce_crosscheck: Optional[bool] = None) -> CodeReport:
    """Build the code described by a validated configuration."""
    if field is None:
        field = field_from_config(cfg)
    sections = SectionSet(tuple(
        Section(tuple(
            (field.from_log(a), field.from_log(b)) for a, b in coords
        ))
        for coords in cfg.sections
    ))
    gammas = [
        GammaGenerator(tuple(
            (tuple(exps), Poly.from_logs(field, logs)) for exps, logs in terms
        ))
        for terms in cfg.gamma
    ]
    return build_code(
        field,
        gammas,
        sections,
        compute_distance=cfg.compute_distance if compute_distance is None else compute_distance,
        bruteforce_crosscheck=(
            cfg.bruteforce_crosscheck if bruteforce_crosscheck is None else bruteforce_crosscheck
        ),
    )
