"""Command-line front end: schema-validated requests, exact-string output.

Every request is a (command, payload) pair; payloads are validated against
per-command JSON schemas before any computation runs, and all rationals in
responses are rendered as "p/q" strings, never floating point.  Table mode
renders the same data as JSON mode, flattened to name/value rows, so the
two modes cannot drift apart.

Exit codes: 0 ok, 1 domain error (or a failing verification suite),
2 schema error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

import jsonschema

from .chow import (
    CurveClass,
    DivClass,
    Threefold,
    pair_div_curve,
    threefold_from_json,
    threefold_to_json,
)
from .ci import (
    CIPreset,
    PRESET_CATALOG,
    build_ci,
    classify,
    format_preset,
    parse_preset,
    tangent_chern,
)
from .dzero import (
    DZeroProblem,
    DZeroReport,
    PaperClaimsReport,
    solve_dzero,
    verify_paper_claims,
)
from .errors import Chern3Error, SchemaError
from .moduli import (
    CohomologyLedger,
    ext1_ledger,
    ext_euler,
    expected_dim,
    serre_c3,
    serre_genus,
)
from .rationals import rat, rat_str
from .sheaf import (
    ChernData,
    chern_from_json,
    chern_to_json,
    discriminant,
    dual,
    rr_intersections,
    rr_terms,
    tensor,
    twist,
)
from .splitting import TensorFormulaReport, verify_tensor_formulas

SCHEMA_VERSION = "1"

_RAT = {"type": ["integer", "string"], "pattern": "^-?[0-9]+(/[1-9][0-9]*)?$"}
_RAT_VEC = {"type": "array", "items": _RAT, "minItems": 1}
_RANGE = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}
_VERSION = {"const": SCHEMA_VERSION}

_CHERN_DOC = {
    "type": "object",
    "properties": {
        "rank": {"type": "integer", "minimum": 1},
        "c1": _RAT_VEC,
        "c2": _RAT_VEC,
        "c3": _RAT,
    },
    "required": ["rank", "c1", "c2", "c3"],
    "additionalProperties": False,
}

_THREEFOLD_DOC = {
    "type": "object",
    "properties": {
        "schema": _VERSION,
        "generators": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "T": {"type": "array", "items": {"type": "array", "items": _RAT_VEC}},
        "c1X": _RAT_VEC,
        "c2X": _RAT_VEC,
        "curve_lattice": {"type": "array", "items": _RAT_VEC, "minItems": 1},
    },
    "required": ["generators", "T", "c1X", "c2X"],
    "additionalProperties": False,
}

_TARGET_ONE_OF = [{"required": ["preset"]}, {"required": ["threefold"]}]

PAYLOAD_SCHEMAS: dict[str, dict] = {
    "threefold": {
        "type": "object",
        "properties": {
            "schema": _VERSION,
            "ambient": {"type": "integer", "minimum": 3},
            "degrees": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        },
        "required": ["ambient", "degrees"],
        "additionalProperties": False,
    },
    "chern": {
        "type": "object",
        "properties": {
            "schema": _VERSION,
            "op": {"enum": ["tensor", "dual", "twist", "delta"]},
            "preset": {"type": "string"},
            "threefold": _THREEFOLD_DOC,
            "E": _CHERN_DOC,
            "F": _CHERN_DOC,
            "L": _RAT_VEC,
        },
        "required": ["op", "F"],
        "additionalProperties": False,
        "oneOf": _TARGET_ONE_OF,
        "allOf": [
            {"if": {"properties": {"op": {"const": "tensor"}}}, "then": {"required": ["E"]}},
            {"if": {"properties": {"op": {"const": "twist"}}}, "then": {"required": ["L"]}},
        ],
    },
    "chi": {
        "type": "object",
        "properties": {
            "schema": _VERSION,
            "preset": {"type": "string"},
            "threefold": _THREEFOLD_DOC,
            "rank": {"type": "integer", "minimum": 1},
            "c1": _RAT_VEC,
            "c2": _RAT_VEC,
            "c3": _RAT,
        },
        "required": ["rank", "c1", "c2", "c3"],
        "additionalProperties": False,
        "oneOf": _TARGET_ONE_OF,
    },
    "moduli-dim": {
        "type": "object",
        "properties": {
            "schema": _VERSION,
            "preset": {"type": "string"},
            "threefold": _THREEFOLD_DOC,
            "rank": {"type": "integer", "minimum": 1},
            "c1": _RAT_VEC,
            "c2": _RAT_VEC,
            "c3": _RAT,
        },
        "required": ["rank", "c1", "c2", "c3"],
        "additionalProperties": False,
        "oneOf": _TARGET_ONE_OF,
    },
    "serre": {
        "type": "object",
        "properties": {
            "schema": _VERSION,
            "preset": {"type": "string"},
            "threefold": _THREEFOLD_DOC,
            "direction": {"enum": ["to-c3", "to-genus"]},
            "det": _RAT_VEC,
            "c2": _RAT_VEC,
            "genus": _RAT,
            "c3": _RAT,
        },
        "required": ["direction", "det", "c2"],
        "additionalProperties": False,
        "oneOf": _TARGET_ONE_OF,
        "allOf": [
            {"if": {"properties": {"direction": {"const": "to-c3"}}}, "then": {"required": ["genus"]}},
            {"if": {"properties": {"direction": {"const": "to-genus"}}}, "then": {"required": ["c3"]}},
        ],
    },
    "ledger": {
        "type": "object",
        "properties": {
            "schema": _VERSION,
            "h0_N": {"type": "integer", "minimum": 0},
            "h0_F": {"type": "integer", "minimum": 0},
            "h0_IF": {"type": "integer", "minimum": 0},
            "h1_IC_zero": {"type": "boolean"},
        },
        "required": ["h0_N", "h0_F"],
        "additionalProperties": False,
    },
    "dzero": {
        "type": "object",
        "properties": {
            "schema": _VERSION,
            "preset": {"type": "string"},
            "threefold": _THREEFOLD_DOC,
            "k_range": _RANGE,
            "c_range": _RANGE,
            "verify_paper": {"type": "boolean"},
        },
        "additionalProperties": False,
        "anyOf": [{"required": ["verify_paper"]}] + _TARGET_ONE_OF,
    },
    "verify": {
        "type": "object",
        "properties": {
            "schema": _VERSION,
            "suite": {"const": "paper"},
            "tensor_formulas": {"type": "boolean"},
            "max_rank": {"type": "integer", "minimum": 1, "maximum": 6},
            "trials": {"type": "integer", "minimum": 1},
            "seed": {"type": "integer"},
        },
        "additionalProperties": False,
        "anyOf": [{"required": ["suite"]}, {"required": ["tensor_formulas"]}],
    },
}

REQUEST_SCHEMA = {
    "type": "object",
    "properties": {
        "schema": _VERSION,
        "command": {"enum": sorted(PAYLOAD_SCHEMAS)},
        "payload": {"type": "object"},
        "output_mode": {"enum": ["table", "json"]},
    },
    "required": ["command", "payload"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class Request:
    command: str
    payload: dict
    output_mode: str = "table"


@dataclass(frozen=True)
class Response:
    status: str
    command: str
    data: dict
    audit: tuple[tuple[str, str], ...]


def _schema_message(exc: jsonschema.ValidationError) -> str:
    path = "/".join(str(p) for p in exc.absolute_path)
    return f"{exc.message}" + (f" (at {path})" if path else "")


def validate_payload(command: str, payload: dict) -> None:
    if command not in PAYLOAD_SCHEMAS:
        raise SchemaError(f"unknown command {command!r}")
    try:
        jsonschema.validate(payload, PAYLOAD_SCHEMAS[command])
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"{command}: {_schema_message(exc)}") from None


def load_config(path: str | Path) -> Request:
    """Parse a request document from a JSON file, rejecting unknown keys."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        jsonschema.validate(doc, REQUEST_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"{path}: {_schema_message(exc)}") from None
    request = Request(doc["command"], doc["payload"], doc.get("output_mode", "table"))
    validate_payload(request.command, request.payload)
    return request


def _resolve_threefold(payload: dict) -> tuple[Threefold, str]:
    if "preset" in payload:
        preset = parse_preset(payload["preset"])
        return build_ci(preset), format_preset(preset)
    return threefold_from_json(payload["threefold"]), "custom threefold"


def _sheaf_from_flat(payload: dict) -> ChernData:
    return ChernData(payload["rank"], payload["c1"], payload["c2"], payload["c3"])


def _handle_threefold(payload: dict) -> tuple[dict, list[tuple[str, str]]]:
    preset = CIPreset(payload["ambient"], tuple(payload["degrees"]))
    chern = tangent_chern(preset)
    X = build_ci(preset)
    data = {
        "preset": format_preset(preset),
        "classification": classify(preset).value,
        "tangent_chern": {
            "c1": rat_str(chern.c1),
            "c2": rat_str(chern.c2),
            "c3": rat_str(chern.c3),
        },
        "threefold": threefold_to_json(X),
    }
    return data, []


def _handle_chern(payload: dict) -> tuple[dict, list[tuple[str, str]]]:
    X, label = _resolve_threefold(payload)
    F = chern_from_json(payload["F"])
    op = payload["op"]
    if op == "tensor":
        result = tensor(X, chern_from_json(payload["E"]), F)
        return {"threefold": label, "op": op, "result": chern_to_json(result)}, []
    if op == "dual":
        return {"threefold": label, "op": op, "result": chern_to_json(dual(X, F))}, []
    if op == "twist":
        result = twist(X, F, DivClass(tuple(payload["L"])))
        return {"threefold": label, "op": op, "result": chern_to_json(result)}, []
    delta = discriminant(X, F)
    return {
        "threefold": label,
        "op": op,
        "delta": [rat_str(x) for x in delta.pairings],
    }, []


def _handle_chi(payload: dict) -> tuple[dict, list[tuple[str, str]]]:
    X, label = _resolve_threefold(payload)
    F = _sheaf_from_flat(payload)
    numbers = rr_intersections(X, F)
    terms = rr_terms(X, F)
    total = sum((v for _, v in terms), start=rat(0))
    audit = [(name, rat_str(v)) for name, v in numbers]
    audit += [(name, rat_str(v)) for name, v in terms]
    audit.append(("chi", rat_str(total)))
    data = {
        "threefold": label,
        "sheaf": chern_to_json(F),
        "terms": {name: rat_str(v) for name, v in terms},
        "chi": rat_str(total),
    }
    return data, audit


def _handle_moduli_dim(payload: dict) -> tuple[dict, list[tuple[str, str]]]:
    X, label = _resolve_threefold(payload)
    F = _sheaf_from_flat(payload)
    delta = discriminant(X, F)
    c1c2 = pair_div_curve(X, X.c1X, X.c2X).value
    c1_delta = pair_div_curve(X, X.c1X, delta).value
    chi_ext = ext_euler(X, F)
    dim = expected_dim(X, F)
    audit = [("c1(X).c2(X)", rat_str(c1c2))]
    audit += [
        (f"Delta(F).{X.generator_names[i]}", rat_str(delta.pairings[i]))
        for i in range(X.m)
    ]
    audit += [
        ("c1(X).Delta(F)", rat_str(c1_delta)),
        ("ext_euler", rat_str(chi_ext)),
        ("expected_dim", rat_str(dim)),
    ]
    data = {
        "threefold": label,
        "sheaf": chern_to_json(F),
        "ext_euler": rat_str(chi_ext),
        "expected_dim": rat_str(dim),
        "note": "expected dimension under the stable rank-2 hypotheses",
    }
    return data, audit


def _handle_serre(payload: dict) -> tuple[dict, list[tuple[str, str]]]:
    X, label = _resolve_threefold(payload)
    det = DivClass(tuple(payload["det"]))
    c2F = CurveClass(tuple(payload["c2"]))
    if payload["direction"] == "to-c3":
        value = serre_c3(X, det, c2F, rat(payload["genus"]))
        return {"threefold": label, "direction": "to-c3", "c3": rat_str(value)}, []
    value = serre_genus(X, det, c2F, rat(payload["c3"]))
    return {"threefold": label, "direction": "to-genus", "genus": rat_str(value)}, []


def _handle_ledger(payload: dict) -> tuple[dict, list[tuple[str, str]]]:
    ledger = CohomologyLedger(
        payload["h0_N"],
        payload["h0_F"],
        payload.get("h0_IF"),
        payload.get("h1_IC_zero", False),
    )
    return {"ext1": ext1_ledger(ledger)}, []


def _dzero_report_json(report: DZeroReport) -> dict:
    a, b, e = report.condition
    doc: dict[str, Any] = {
        "condition": {"a": rat_str(a), "b": rat_str(b), "e": rat_str(e)},
        "normalized": {
            "A": report.normalized[0],
            "B": report.normalized[1],
            "E": report.normalized[2],
        },
        "relation": report.relation,
        "solvable": report.solvable,
        "modulus": report.modulus,
        "residues": list(report.residues) if report.residues is not None else None,
        "obstruction": (
            {
                "kind": report.obstruction.kind,
                "modulus": report.obstruction.modulus,
                "description": report.obstruction.description,
            }
            if report.obstruction is not None
            else None
        ),
        "witnesses": [[k, c] for k, c in report.witnesses],
        "k_range": list(report.k_range),
        "c_range": list(report.c_range),
        "grid_checked": report.grid_checked,
    }
    return doc


def _claims_json(claims: PaperClaimsReport) -> dict:
    return {
        "presets": [
            {
                "preset": entry.preset,
                "solvable": entry.report.solvable,
                "relation": entry.report.relation,
                "obstruction": (
                    entry.report.obstruction.description
                    if entry.report.obstruction is not None
                    else None
                ),
                "witnesses": [[k, c] for k, c in entry.report.witnesses[:8]],
            }
            for entry in claims.entries
        ],
        "solvable_count": claims.solvable_count,
        "certificate_count": claims.certificate_count,
    }


def _handle_dzero(payload: dict) -> tuple[dict, list[tuple[str, str]]]:
    if payload.get("verify_paper"):
        claims = verify_paper_claims()
        return {"verify_paper": True, "claims": _claims_json(claims), "ok": True}, []
    X, label = _resolve_threefold(payload)
    k_range = tuple(payload.get("k_range", (-50, 50)))
    c_range = tuple(payload.get("c_range", (-50, 50)))
    report = solve_dzero(DZeroProblem(X, k_range, c_range))
    data = {"threefold": label}
    data.update(_dzero_report_json(report))
    return data, []


def _tensor_report_json(report: TensorFormulaReport) -> dict:
    return {
        "max_rank": report.max_rank,
        "trials": report.trials,
        "seed": report.seed,
        "ok": report.ok,
        "pairs": [
            {
                "r1": pair.r1,
                "r2": pair.r2,
                "passed": pair.passed,
                "grid_checks": pair.grid_checks,
                "counterexample": (
                    {
                        "rootsE": [rat_str(r) for r in pair.counterexample.spec.rootsE],
                        "rootsF": [rat_str(r) for r in pair.counterexample.spec.rootsF],
                    }
                    if pair.counterexample is not None
                    else None
                ),
            }
            for pair in report.pairs
        ],
    }


def _handle_verify(payload: dict) -> tuple[dict, list[tuple[str, str]]]:
    if "suite" in payload and payload.get("tensor_formulas"):
        raise SchemaError("verify: choose either suite or tensor_formulas, not both")
    if payload.get("suite") == "paper":
        claims = verify_paper_claims()
        formulas = verify_tensor_formulas(
            max_rank=payload.get("max_rank", 4),
            trials=payload.get("trials", 100),
            seed=payload.get("seed", 42),
        )
        ok = formulas.ok
        data = {
            "suite": "paper",
            "ok": ok,
            "claims": _claims_json(claims),
            "tensor_formulas": _tensor_report_json(formulas),
        }
        return data, []
    formulas = verify_tensor_formulas(
        max_rank=payload.get("max_rank", 4),
        trials=payload.get("trials", 100),
        seed=payload.get("seed", 42),
    )
    return {"ok": formulas.ok, "tensor_formulas": _tensor_report_json(formulas)}, []


_HANDLERS: dict[str, Callable[[dict], tuple[dict, list[tuple[str, str]]]]] = {
    "threefold": _handle_threefold,
    "chern": _handle_chern,
    "chi": _handle_chi,
    "moduli-dim": _handle_moduli_dim,
    "serre": _handle_serre,
    "ledger": _handle_ledger,
    "dzero": _handle_dzero,
    "verify": _handle_verify,
}


def run(request: Request) -> Response:
    """Validate, dispatch, and collect warnings into the response data."""
    validate_payload(request.command, request.payload)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        data, audit = _HANDLERS[request.command](request.payload)
    messages = sorted({str(w.message) for w in caught})
    if messages:
        data["warnings"] = messages
    return Response("ok", request.command, data, tuple(audit))


def response_json(response: Response) -> str:
    doc = {
        "schema": SCHEMA_VERSION,
        "status": response.status,
        "command": response.command,
        "data": response.data,
        "audit": [{"name": n, "value": v} for n, v in response.audit],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def _flatten(prefix: str, value: Any, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for key in value:
            _flatten(f"{prefix}.{key}" if prefix else str(key), value[key], rows)
    elif isinstance(value, list):
        for i, item in enumerate(value):
            _flatten(f"{prefix}[{i}]", item, rows)
    elif isinstance(value, bool):
        rows.append((prefix, "true" if value else "false"))
    else:
        rows.append((prefix, "null" if value is None else str(value)))


def response_table(response: Response) -> str:
    rows: list[tuple[str, str]] = []
    _flatten("", response.data, rows)
    lines = [f"{response.command}: {response.status}"]
    width = max((len(name) for name, _ in rows), default=0)
    lines += [f"  {name.ljust(width)}  {value}" for name, value in rows]
    if response.audit:
        lines.append("audit:")
        audit_width = max(len(name) for name, _ in response.audit)
        lines += [f"  {name.ljust(audit_width)}  {value}" for name, value in response.audit]
    return "\n".join(lines)


_RANGE_FLAG = re.compile(r"^-?\d+\.\.-?\d+$")
_VALUE_FLAGS = {
    "--k",
    "--c",
    "--c1",
    "--c2",
    "--c3",
    "--det",
    "--genus",
    "--l",
    "--degrees",
}


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Turn "--k -10..10" into "--k=-10..10" so argparse keeps the value."""
    merged = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            merged.append(f"{token}={argv[i + 1]}")
            skip = True
        else:
            merged.append(token)
    return merged


def _parse_range(text: str) -> list[int]:
    if not _RANGE_FLAG.match(text):
        raise SchemaError(f"range {text!r} must look like -10..10")
    lo, hi = text.split("..")
    return [int(lo), int(hi)]


def _parse_vector(text: str) -> list[str]:
    return [piece.strip() for piece in text.split(",") if piece.strip()]


def _parse_json_flag(text: str, label: str) -> dict:
    raw = text
    if not text.lstrip().startswith("{"):
        raw = Path(text).read_text(encoding="utf-8")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{label}: {exc.msg} at line {exc.lineno}") from None
    if not isinstance(doc, dict):
        raise SchemaError(f"{label}: expected a JSON object")
    return doc


def _build_parser() -> argparse.ArgumentParser:
    # Output flags live on a parent parser with SUPPRESS defaults so they are
    # accepted on either side of the subcommand without clobbering each other.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="emit JSON instead of a table",
    )
    common.add_argument(
        "--out", default=argparse.SUPPRESS,
        help="write the report to this path instead of stdout",
    )
    common.add_argument(
        "--seed", type=int, default=argparse.SUPPRESS,
        help="seed for randomized verification",
    )

    parser = argparse.ArgumentParser(
        prog="chern3",
        description="Exact characteristic-class calculator for sheaves on threefolds",
        parents=[common],
    )
    parser.set_defaults(json=False, out=None, seed=None)
    parser.add_argument("--config", help="read a full request document from a JSON file")
    sub = parser.add_subparsers(dest="command", parser_class=argparse.ArgumentParser)

    def add_parser(name: str, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("threefold", help="build a complete-intersection threefold model")
    p.add_argument("--preset", help="preset name; catalogued: " + ", ".join(PRESET_CATALOG))
    p.add_argument("--ambient", type=int)
    p.add_argument("--degrees", default=None, help="comma-separated degrees, empty for none")

    p = add_parser("chern", help="sheaf Chern-class operations")
    chern_sub = p.add_subparsers(dest="op", required=True)
    for op in ("tensor", "dual", "twist", "delta"):
        q = chern_sub.add_parser(op, parents=[common])
        q.add_argument("--preset")
        q.add_argument("--threefold", help="threefold JSON document or a path to one")
        q.add_argument("--f", required=True, help="sheaf JSON document or path", dest="f_doc")
        if op == "tensor":
            q.add_argument("--e", required=True, help="second sheaf JSON document", dest="e_doc")
        if op == "twist":
            q.add_argument("--l", required=True, help="comma-separated divisor class")

    for name in ("chi", "moduli-dim"):
        p = add_parser(name, help="Riemann-Roch / expected-dimension evaluation")
        p.add_argument("--preset")
        p.add_argument("--threefold")
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--c1", required=True)
        p.add_argument("--c2", required=True)
        p.add_argument("--c3", default="0")

    p = add_parser("serre", help="curve genus and c3 conversions")
    direction = p.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to-c3", action="store_true")
    direction.add_argument("--to-genus", action="store_true")
    p.add_argument("--preset")
    p.add_argument("--threefold")
    p.add_argument("--det", required=True)
    p.add_argument("--c2", required=True)
    p.add_argument("--genus")
    p.add_argument("--c3")

    p = add_parser("ledger", help="Ext^1 dimension count from cohomology values")
    p.add_argument("--h0-n", type=int, required=True)
    p.add_argument("--h0-f", type=int, required=True)
    p.add_argument("--h0-if", type=int, default=None)
    p.add_argument("--h1-ic-zero", action="store_true")

    p = add_parser("dzero", help="expected-dimension-zero search")
    p.add_argument("--preset")
    p.add_argument("--threefold")
    p.add_argument("--k", default="-50..50", help="twist range lo..hi")
    p.add_argument("--c", default="-50..50", help="curve-coordinate range lo..hi")
    p.add_argument("--verify-paper", action="store_true")

    p = add_parser("verify", help="verification suites")
    p.add_argument("--suite", choices=["paper"])
    p.add_argument("--tensor-formulas", action="store_true")
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--trials", type=int, default=100)

    return parser


def _payload_from_args(args: argparse.Namespace) -> Request:
    command = args.command
    payload: dict[str, Any] = {}

    def put_target() -> None:
        if getattr(args, "preset", None):
            payload["preset"] = args.preset
        elif getattr(args, "threefold", None):
            payload["threefold"] = _parse_json_flag(args.threefold, "--threefold")
        else:
            raise SchemaError(f"{command}: provide --preset or --threefold")

    if command == "threefold":
        if args.preset:
            preset = parse_preset(args.preset)
            payload = {"ambient": preset.ambient, "degrees": list(preset.degrees)}
        else:
            if args.ambient is None:
                raise SchemaError("threefold: provide --preset or --ambient/--degrees")
            degrees = [int(d) for d in _parse_vector(args.degrees or "")]
            payload = {"ambient": args.ambient, "degrees": degrees}
    elif command == "chern":
        payload = {"op": args.op, "F": _parse_json_flag(args.f_doc, "--f")}
        put_target()
        if args.op == "tensor":
            payload["E"] = _parse_json_flag(args.e_doc, "--e")
        if args.op == "twist":
            payload["L"] = _parse_vector(args.l)
    elif command in ("chi", "moduli-dim"):
        payload = {
            "rank": args.rank,
            "c1": _parse_vector(args.c1),
            "c2": _parse_vector(args.c2),
            "c3": args.c3,
        }
        put_target()
    elif command == "serre":
        payload = {
            "direction": "to-c3" if args.to_c3 else "to-genus",
            "det": _parse_vector(args.det),
            "c2": _parse_vector(args.c2),
        }
        if args.to_c3:
            if args.genus is None:
                raise SchemaError("serre --to-c3 needs --genus")
            payload["genus"] = args.genus
        else:
            if args.c3 is None:
                raise SchemaError("serre --to-genus needs --c3")
            payload["c3"] = args.c3
        put_target()
    elif command == "ledger":
        payload = {"h0_N": args.h0_n, "h0_F": args.h0_f}
        if args.h0_if is not None:
            payload["h0_IF"] = args.h0_if
        if args.h1_ic_zero:
            payload["h1_IC_zero"] = True
    elif command == "dzero":
        if args.verify_paper:
            payload = {"verify_paper": True}
        else:
            payload = {"k_range": _parse_range(args.k), "c_range": _parse_range(args.c)}
            put_target()
    elif command == "verify":
        if args.suite == "paper":
            payload = {"suite": "paper"}
        elif args.tensor_formulas:
            payload = {"tensor_formulas": True, "max_rank": args.max_rank, "trials": args.trials}
        else:
            raise SchemaError("verify: provide --suite paper or --tensor-formulas")
        if args.seed is not None:
            payload["seed"] = args.seed
    else:
        raise SchemaError("no command given (try --help)")

    return Request(command, payload, "json" if args.json else "table")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(_merge_negative_values(argv))

    try:
        if args.config:
            request = load_config(args.config)
            if args.json:
                request = Request(request.command, request.payload, "json")
        else:
            if not args.command:
                parser.print_help()
                return 2
            request = _payload_from_args(args)
        response = run(request)
    except SchemaError as exc:
        print(f"SchemaError: {exc}", file=sys.stderr)
        return 2
    except Chern3Error as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"IOError: {exc}", file=sys.stderr)
        return 1

    rendered = (
        response_json(response) if request.output_mode == "json" else response_table(response)
    )
    if args.out:
        Path(args.out).write_text(rendered + "\n", encoding="utf-8")
    else:
        print(rendered)

    if response.data.get("ok") is False:
        return 1
    return 0


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
