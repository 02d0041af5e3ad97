"""File formats: JSON documents with exact rationals, and GAP-style text.

Rational numbers are encoded as strings ("-3", "1/2") so that every value
round-trips exactly; matrices are row-major lists of such strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .exact import Matrix, Vector, freeze
from .hyperbolic import DeepHoleInput
from .leech import ConstructedLattice

FORMAT_VERSION = 1


class FormatError(ValueError):
    """A document is malformed or has an unsupported version."""


def encode_value(x) -> str:
    return str(Fraction(x))


def decode_value(s: str) -> Fraction:
    return Fraction(s)


def encode_vector(v: Sequence) -> list:
    return [encode_value(x) for x in v]


def decode_vector(v: Sequence) -> Vector:
    return tuple(decode_value(x) for x in v)


def encode_matrix(m: Sequence[Sequence]) -> list:
    return [encode_vector(row) for row in m]


def decode_matrix(rows: Sequence[Sequence]) -> Matrix:
    return freeze(decode_vector(row) for row in rows)


def decode_int_matrix(rows: Sequence[Sequence]) -> Matrix:
    m = decode_matrix(rows)
    if any(x.denominator != 1 for row in m for x in row):
        raise FormatError("expected an integer matrix")
    return freeze(tuple(int(x) for x in row) for row in m)


def decode_int_vector(v: Sequence) -> Vector:
    w = decode_vector(v)
    if any(x.denominator != 1 for x in w):
        raise FormatError("expected an integer vector")
    return tuple(int(x) for x in w)


# --- constructed lattices ---------------------------------------------------


def export_constructed(c: ConstructedLattice) -> dict:
    return {
        "format": "constructed-lattice",
        "version": FORMAT_VERSION,
        "label": c.label,
        "codeword": [encode_vector(cls) for cls in c.gamma],
        "v_rep": encode_vector(c.v_rep),
        "n_gamma": c.n_gamma,
        "a_gamma": c.a_gamma,
        "h": c.h,
        "index": c.index,
        "basis": encode_matrix(c.basis),
        "gram": encode_matrix(c.gram),
    }


def import_constructed(doc: dict) -> ConstructedLattice:
    _expect(doc, "constructed-lattice")
    return ConstructedLattice(
        label=doc["label"],
        gamma=tuple(decode_vector(cls) for cls in doc["codeword"]),
        v_rep=decode_int_vector(doc["v_rep"]),
        n_gamma=int(doc["n_gamma"]),
        a_gamma=int(doc["a_gamma"]),
        h=int(doc["h"]),
        basis=decode_int_matrix(doc["basis"]),
        gram=decode_int_matrix(doc["gram"]),
        index=int(doc["index"]),
    )


# --- deep-hole inputs -------------------------------------------------------


def export_deep_hole(d: DeepHoleInput) -> dict:
    doc = {
        "format": "deep-hole-input",
        "version": FORMAT_VERSION,
        "gram": encode_matrix(d.gram),
        "center": encode_vector(d.center),
    }
    if d.declared_type is not None:
        doc["type"] = d.declared_type
    if d.declared_h is not None:
        doc["h"] = d.declared_h
    return doc


def import_deep_hole(doc: dict) -> DeepHoleInput:
    _expect(doc, "deep-hole-input")
    return DeepHoleInput(
        gram=decode_int_matrix(doc["gram"]),
        center=decode_vector(doc["center"]),
        declared_type=doc.get("type"),
        declared_h=int(doc["h"]) if "h" in doc else None,
    )


def _expect(doc: dict, fmt: str) -> None:
    if not isinstance(doc, dict) or doc.get("format") != fmt:
        raise FormatError(f"not a {fmt} document")
    if doc.get("version") != FORMAT_VERSION:
        raise FormatError(f"unsupported version {doc.get('version')!r}")


# --- files ------------------------------------------------------------------


def save_json(doc: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


# --- GAP-style text ---------------------------------------------------------


def gap_matrix(m: Sequence[Sequence]) -> str:
    rows = ", ".join(
        "[ " + ", ".join(str(Fraction(x)) for x in row) + " ]" for row in m
    )
    return "[ " + rows + " ]"


def gap_text(c: ConstructedLattice) -> str:
    lines = [
        f"# {c.label}, a = {c.a_gamma}, h = {c.h}, index = {c.index}",
        "gram := " + gap_matrix(c.gram) + ";;",
        "basis := " + gap_matrix(c.basis) + ";;",
    ]
    return "\n".join(lines) + "\n"
