"""JSON encoding and decoding for certificates, reports and proofs.

The certificate layout is a fixed contract: key order and shape are
stable, payloads carry no timestamps, and serializing the same value
twice yields identical bytes.  Reports prepend a small header object
with tool metadata; parsers ignore it.
"""

from __future__ import annotations

import json
from typing import Any

from .criterion import Certificate, ConeProblem, Verdict, Witness
from .curve import CurveModel, PointMode
from .dimension import DimValue
from .search import (
    ClosedFormCase,
    ClosedFormNonexistence,
    SearchReport,
    SearchVerdict,
)
from .surface import SurfaceClass

TOOL_NAME = "ratcone"


def header(command: str) -> dict[str, Any]:
    from . import __version__

    return {"tool": TOOL_NAME, "version": __version__, "command": command}


def dim_to_json(value: DimValue) -> dict[str, Any]:
    if value.is_exact:
        return {"exact": value.lo}
    return {"range": [value.lo, value.hi]}


def dim_from_json(obj: dict[str, Any]) -> DimValue:
    if "exact" in obj:
        return DimValue.exact(obj["exact"])
    lo, hi = obj["range"]
    return DimValue.between(lo, hi)


def problem_to_json(problem: ConeProblem) -> dict[str, Any]:
    return {
        "genus": problem.model.genus,
        "mode": problem.model.point_mode.value,
        "L": [problem.polarization.a, problem.polarization.b],
        "D": [problem.divisor.a, problem.divisor.b],
    }


def problem_from_json(obj: dict[str, Any]) -> ConeProblem:
    model = CurveModel(obj["genus"], PointMode(obj["mode"]))
    return ConeProblem(model, SurfaceClass(*obj["L"]), SurfaceClass(*obj["D"]))


def certificate_to_json(cert: Certificate) -> dict[str, Any]:
    witness = None
    if cert.witness is not None:
        witness = {
            "i": cert.witness.i,
            "m": cert.witness.m,
            "dim": dim_to_json(cert.witness.dim),
        }
    return {
        "problem": problem_to_json(cert.problem),
        "verdict": cert.verdict.value,
        "witness": witness,
        "bound_m0": cert.bound_m0,
        "assumptions": list(cert.assumptions),
    }


def certificate_from_json(obj: dict[str, Any]) -> Certificate:
    witness = None
    if obj["witness"] is not None:
        witness = Witness(
            obj["witness"]["i"], obj["witness"]["m"], dim_from_json(obj["witness"]["dim"])
        )
    return Certificate(
        problem=problem_from_json(obj["problem"]),
        verdict=Verdict(obj["verdict"]),
        witness=witness,
        bound_m0=obj["bound_m0"],
        assumptions=tuple(obj["assumptions"]),
    )


def closed_form_to_json(proof: ClosedFormNonexistence) -> dict[str, Any]:
    return {
        "genus": proof.genus,
        "L": [proof.polarization.a, proof.polarization.b],
        "valid_for_all_genus": proof.valid_for_all_genus,
        "cases": [
            {
                "label": case.label,
                "d_min": case.d_min,
                "d_max": case.d_max,
                "witness_offset": case.witness_offset,
                "formula": case.formula,
                "min_value": case.min_value,
                "justification": case.justification,
            }
            for case in proof.cases
        ],
    }


def closed_form_from_json(obj: dict[str, Any]) -> ClosedFormNonexistence:
    cases = tuple(
        ClosedFormCase(
            label=c["label"],
            d_min=c["d_min"],
            d_max=c["d_max"],
            witness_offset=c["witness_offset"],
            formula=c["formula"],
            min_value=c["min_value"],
            justification=c["justification"],
        )
        for c in obj["cases"]
    )
    return ClosedFormNonexistence(
        genus=obj["genus"],
        polarization=SurfaceClass(*obj["L"]),
        cases=cases,
        valid_for_all_genus=obj["valid_for_all_genus"],
    )


def report_to_json(report: SearchReport, with_header: bool = True) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if with_header:
        out["header"] = header("search")
    out.update(
        {
            "model": {"genus": report.model.genus, "mode": report.model.point_mode.value},
            "L": [report.polarization.a, report.polarization.b],
            "grid": [report.grid_limits[0], report.grid_limits[1]],
            "verdict": report.verdict.value,
            "rationalizer": (
                None
                if report.rationalizer is None
                else [report.rationalizer.a, report.rationalizer.b]
            ),
            "closed_form": (
                None if report.closed_form is None else closed_form_to_json(report.closed_form)
            ),
            "cells": [
                {
                    "a": a,
                    "b": b,
                    "pattern_match": report.pattern_check[(a, b)],
                    "certificate": certificate_to_json(cert),
                }
                for (a, b), cert in report.certificates.items()
            ],
        }
    )
    return out


def report_from_json(obj: dict[str, Any]) -> SearchReport:
    model = CurveModel(obj["model"]["genus"], PointMode(obj["model"]["mode"]))
    certificates: dict[tuple[int, int], Certificate] = {}
    pattern: dict[tuple[int, int], bool] = {}
    for cell in obj["cells"]:
        key = (cell["a"], cell["b"])
        certificates[key] = certificate_from_json(cell["certificate"])
        pattern[key] = cell["pattern_match"]
    return SearchReport(
        model=model,
        polarization=SurfaceClass(*obj["L"]),
        grid_limits=(obj["grid"][0], obj["grid"][1]),
        certificates=certificates,
        pattern_check=pattern,
        verdict=SearchVerdict(obj["verdict"]),
        rationalizer=(
            None if obj["rationalizer"] is None else SurfaceClass(*obj["rationalizer"])
        ),
        closed_form=(
            None if obj["closed_form"] is None else closed_form_from_json(obj["closed_form"])
        ),
    )


def dumps(payload: dict[str, Any]) -> str:
    """Canonical JSON text: two-space indent, insertion order, one trailing newline."""
    return json.dumps(payload, indent=2) + "\n"


_PAIR = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}

_DIM = {
    "oneOf": [
        {
            "type": "object",
            "properties": {"exact": {"type": "integer", "minimum": 0}},
            "required": ["exact"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "range": {
                    "type": "array",
                    "items": {"type": "integer", "minimum": 0},
                    "minItems": 2,
                    "maxItems": 2,
                }
            },
            "required": ["range"],
            "additionalProperties": False,
        },
    ]
}

CERTIFICATE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "problem": {
            "type": "object",
            "properties": {
                "genus": {"type": "integer", "minimum": 0},
                "mode": {"enum": ["generic", "arbitrary"]},
                "L": _PAIR,
                "D": _PAIR,
            },
            "required": ["genus", "mode", "L", "D"],
            "additionalProperties": False,
        },
        "verdict": {"enum": ["all_vanish", "witness", "indeterminate"]},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "properties": {
                        "i": {"enum": [1, 2]},
                        "m": {"type": "integer", "minimum": 0},
                        "dim": _DIM,
                    },
                    "required": ["i", "m", "dim"],
                    "additionalProperties": False,
                },
            ]
        },
        "bound_m0": {"type": "integer", "minimum": 0},
        "assumptions": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["problem", "verdict", "witness", "bound_m0", "assumptions"],
    "additionalProperties": False,
}

REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "header": {"type": "object"},
        "model": {
            "type": "object",
            "properties": {
                "genus": {"type": "integer", "minimum": 0},
                "mode": {"enum": ["generic", "arbitrary"]},
            },
            "required": ["genus", "mode"],
            "additionalProperties": False,
        },
        "L": _PAIR,
        "grid": _PAIR,
        "verdict": {"enum": ["nonexistence_proved", "rationalizer_found", "grid_only"]},
        "rationalizer": {"oneOf": [{"type": "null"}, _PAIR]},
        "closed_form": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "properties": {
                        "genus": {"type": "integer", "minimum": 2},
                        "L": _PAIR,
                        "valid_for_all_genus": {"type": "boolean"},
                        "cases": {
                            "type": "array",
                            "items": {
                                "type": "object",
                                "properties": {
                                    "label": {"type": "string"},
                                    "d_min": {"oneOf": [{"type": "null"}, {"type": "integer"}]},
                                    "d_max": {"oneOf": [{"type": "null"}, {"type": "integer"}]},
                                    "witness_offset": {"type": "integer"},
                                    "formula": {"type": "string"},
                                    "min_value": {"type": "integer"},
                                    "justification": {"type": "string"},
                                },
                                "required": [
                                    "label",
                                    "d_min",
                                    "d_max",
                                    "witness_offset",
                                    "formula",
                                    "min_value",
                                    "justification",
                                ],
                                "additionalProperties": False,
                            },
                        },
                    },
                    "required": ["genus", "L", "valid_for_all_genus", "cases"],
                    "additionalProperties": False,
                },
            ]
        },
        "cells": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "a": {"type": "integer", "minimum": 0},
                    "b": {"type": "integer", "minimum": 0},
                    "pattern_match": {"type": "boolean"},
                    "certificate": CERTIFICATE_SCHEMA,
                },
                "required": ["a", "b", "pattern_match", "certificate"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["model", "L", "grid", "verdict", "rationalizer", "closed_form", "cells"],
    "additionalProperties": False,
}
