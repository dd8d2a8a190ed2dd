"""JSON documents for structures, presentations, modules and reports.

Every document is an object with ``schema_version``, ``field`` and ``type``.
Scalars are exact strings (``"3/7"``, ``"5 mod 11"``); matrices are lists of
``[row, col, scalar]`` triples; output is byte-deterministic (sorted keys,
fixed indentation, trailing newline).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .constructors import (
    BigroupoidPresentation, GroupoidPresentation, LoopTable, from_bigroupoid,
    from_groupoid, from_loop,
)
from .errors import FieldError, ParseError, WeakHopfError
from .exact_linear import QQ, Field, LinMap, flip
from .hopf_modules import HopfModule, regular_module
from .structure import WHQ
from .verdicts import Report, Verdict

SCHEMA_VERSION = 1
PAYLOAD_TYPES = ("whq_raw", "loop_table", "groupoid", "bigroupoid", "hopf_module")


def _inline(value) -> str:
    return json.dumps(value, sort_keys=True, ensure_ascii=True)


def _render(value, depth: int) -> str:
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(value, dict) and value:
        body = ",\n".join(f"{inner}{_inline(k)}: {_render(value[k], depth + 1)}"
                          for k in sorted(value))
        return "{\n" + body + "\n" + pad + "}"
    if isinstance(value, list) and value and any(isinstance(x, (list, dict)) for x in value):
        body = ",\n".join(inner + _render(x, depth + 1) for x in value)
        return "[\n" + body + "\n" + pad + "]"
    return _inline(value)


def dumps(doc: dict) -> str:
    """Sorted keys, one matrix entry or verdict per line, trailing newline."""
    return _render(doc, 0) + "\n"


# -- fields and matrices ----------------------------------------------------

def field_to_json(F: Field) -> dict:
    if F.is_prime:
        return {"kind": "prime", "p": F.characteristic}
    return {"kind": "rationals"}


def field_from_json(spec: Any) -> Field:
    if spec is None:
        return QQ
    if isinstance(spec, str):
        s = spec.strip()
        if s in ("QQ", "rationals"):
            return QQ
        if s.startswith("GF(") and s.endswith(")"):
            return _prime(s[3:-1])
        raise ParseError(f"unknown field {spec!r}")
    if isinstance(spec, dict):
        kind = spec.get("kind")
        if kind == "rationals":
            return QQ
        if kind == "prime":
            return _prime(spec.get("p"))
    raise ParseError(f"unknown field {spec!r}")


def _prime(p) -> Field:
    try:
        return Field.prime(int(p))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad field characteristic {p!r}: {exc}") from None


def scalar(F: Field, value) -> Any:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(f"scalar must be an integer or a string, got {value!r}")
    try:
        return F(value)
    except FieldError as exc:
        raise ParseError(str(exc)) from None


def matrix_to_json(f: LinMap) -> list:
    F = f.field
    return [[r, c, F.format(v)] for r, c, v in f.triples()]


def matrix_from_json(F: Field, rows: int, cols: int, entries: Any, what: str) -> LinMap:
    if not isinstance(entries, list):
        raise ParseError(f"{what}: expected a list of [row, col, scalar] triples")
    triples = []
    for e in entries:
        if not (isinstance(e, list) and len(e) == 3 and all(
                isinstance(x, int) and not isinstance(x, bool) for x in e[:2])):
            raise ParseError(f"{what}: malformed entry {e!r}")
        triples.append((e[0], e[1], scalar(F, e[2])))
    try:
        return LinMap.from_triples(rows, cols, triples, F)
    except WeakHopfError as exc:
        raise ParseError(f"{what}: {exc}") from None


def vector_to_json(f: LinMap) -> list[str]:
    """Dense list for a ``dim x 1`` or ``1 x dim`` map."""
    F = f.field
    dense = f.to_dense()
    flat = [row[0] for row in dense] if f.domain_dim == 1 else dense[0]
    return [F.format(F(v)) for v in flat]


def _vector(F: Field, values: Any, n: int, what: str) -> list:
    if not isinstance(values, list) or len(values) != n:
        raise ParseError(f"{what}: expected a list of {n} scalars")
    return [scalar(F, v) for v in values]


# -- structures -------------------------------------------------------------

def whq_to_json(H: WHQ) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "field": field_to_json(H.field),
        "type": "whq_raw",
        "dim": H.dim,
        "unit": vector_to_json(H.unit),
        "counit": vector_to_json(H.counit),
        "mul": matrix_to_json(H.mul),
        "comul": matrix_to_json(H.comul),
        "antipode": matrix_to_json(H.antipode),
    }
    if H.labels is not None:
        doc["basis_labels"] = list(H.labels)
    if H.braiding != flip(H.dim, H.dim, H.field):
        doc["braiding"] = matrix_to_json(H.braiding)
        doc["braiding_inv"] = matrix_to_json(H.braiding_inv)
    return doc


def whq_from_json(doc: dict, F: Field) -> WHQ:
    n = doc.get("dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("whq_raw: dim must be a positive integer")
    unit = _vector(F, doc.get("unit"), n, "unit")
    counit = _vector(F, doc.get("counit"), n, "counit")
    kw = dict(
        unit=LinMap(F, n, 1, [{r: v for r, v in enumerate(unit)}]),
        counit=LinMap(F, 1, n, [{0: v} for v in counit]),
        mul=matrix_from_json(F, n, n * n, doc.get("mul"), "mul"),
        comul=matrix_from_json(F, n * n, n, doc.get("comul"), "comul"),
        antipode=matrix_from_json(F, n, n, doc.get("antipode"), "antipode"),
        labels=doc.get("basis_labels"),
    )
    if "braiding" in doc:
        kw["braiding"] = matrix_from_json(F, n * n, n * n, doc["braiding"], "braiding")
        if "braiding_inv" in doc:
            kw["braiding_inv"] = matrix_from_json(F, n * n, n * n, doc["braiding_inv"],
                                                  "braiding_inv")
    return WHQ(**kw)


def _cells(doc: dict, key: str) -> tuple[list[str], dict, dict]:
    items = doc.get(key)
    if not isinstance(items, list):
        raise ParseError(f"{key}: expected a list of {{name, source, target}} objects")
    names, src, tgt = [], {}, {}
    for item in items:
        try:
            name, s, t = str(item["name"]), str(item["source"]), str(item["target"])
        except (KeyError, TypeError):
            raise ParseError(f"{key}: malformed entry {item!r}") from None
        names.append(name)
        src[name], tgt[name] = s, t
    return sorted(names), src, tgt


def _composition(doc: dict) -> dict:
    comp = {}
    for e in doc.get("composition", []):
        if not (isinstance(e, list) and len(e) == 3):
            raise ParseError(f"composition: malformed entry {e!r}")
        key = (str(e[0]), str(e[1]))
        if key in comp:
            raise ParseError(f"composition: duplicate entry for {key}")
        comp[key] = str(e[2])
    return comp


def _str_map(doc: dict, key: str) -> dict:
    m = doc.get(key, {})
    if not isinstance(m, dict):
        raise ParseError(f"{key}: expected an object")
    return {str(k): str(v) for k, v in m.items()}


def loop_from_json(doc: dict) -> LoopTable:
    table = doc.get("table")
    if not (isinstance(table, list) and all(isinstance(r, list) for r in table)):
        raise ParseError("loop_table: table must be a list of rows")
    n = len(table)
    for row in table:
        if any(not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n
               for x in row):
            raise ParseError("loop_table: entries must be indices in range")
    return LoopTable(table, int(doc.get("identity", 0)), doc.get("labels"))


def groupoid_from_json(doc: dict) -> GroupoidPresentation:
    arrows, src, tgt = _cells(doc, "arrows")
    return GroupoidPresentation(sorted(map(str, doc.get("objects", []))), arrows,
                                src, tgt, _str_map(doc, "identities"),
                                _composition(doc), _str_map(doc, "inverse"))


def bigroupoid_from_json(doc: dict) -> BigroupoidPresentation:
    cells, src, tgt = _cells(doc, "one_cells")
    extra = doc.get("extra_inverses", {})
    if not isinstance(extra, dict):
        raise ParseError("extra_inverses: expected an object")
    return BigroupoidPresentation(
        sorted(map(str, doc.get("zero_cells", []))), cells, src, tgt,
        _str_map(doc, "identities"), _composition(doc), _str_map(doc, "inv"),
        {str(k): tuple(map(str, v)) for k, v in extra.items()})


# -- documents --------------------------------------------------------------

def load(path: str | Path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ParseError(f"{path}: unsupported schema_version "
                         f"{doc.get('schema_version')!r}")
    if doc.get("type") not in PAYLOAD_TYPES:
        raise ParseError(f"{path}: unknown document type {doc.get('type')!r}")
    return doc


def build(doc: dict) -> WHQ:
    """Construct the WHQ described by a structure or presentation document.

    Presentations are canonicalized by sorting cell names, so the basis of a
    built algebra is ordered by class-representative name.
    """
    F = field_from_json(doc.get("field"))
    kind = doc.get("type")
    if kind == "whq_raw":
        return whq_from_json(doc, F)
    if kind == "loop_table":
        return from_loop(loop_from_json(doc), F)
    if kind == "groupoid":
        return from_groupoid(groupoid_from_json(doc), F)
    if kind == "bigroupoid":
        return from_bigroupoid(bigroupoid_from_json(doc), F).whq
    if kind == "hopf_module":
        raise ParseError("a hopf_module document does not describe an algebra")
    raise ParseError(f"unknown document type {kind!r}")


def module_from_json(doc: dict, base: Path | None = None) -> HopfModule:
    over = doc.get("over")
    if isinstance(over, str):
        path = Path(over)
        if base is not None and not path.is_absolute():
            path = base / path
        H = build(load(path))
    elif isinstance(over, dict):
        H = build(over)
    else:
        raise ParseError("hopf_module: 'over' must be a path or an embedded document")
    if doc.get("module") == "regular":
        return regular_module(H)
    m = doc.get("dim")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ParseError("hopf_module: dim must be a positive integer")
    F, n = H.field, H.dim
    return HopfModule(H, matrix_from_json(F, m, m * n, doc.get("action"), "action"),
                      matrix_from_json(F, m * n, m, doc.get("coaction"), "coaction"),
                      doc.get("labels"))


# -- reports ----------------------------------------------------------------

def verdict_to_json(v: Verdict, F: Field) -> dict:
    out = {"id": v.id, "group": v.group, "anchor": v.anchor, "passed": v.passed,
           "conditional": v.conditional}
    if not v.passed:
        out["witness"] = v.witness
        out["difference"] = [[r, F.format(x)] for r, x in v.difference]
    return out


def report_to_json(report: Report, F: Field, **extra) -> dict:
    first = report.first_failure()
    doc = {
        "schema_version": SCHEMA_VERSION,
        "field": field_to_json(F),
        "type": "report",
        "passed": report.passed,
        "first_failure": None if first is None else first.id,
        "flags": dict(report.flags),
        "dimensions": dict(report.dimensions),
        "verdicts": [verdict_to_json(v, F) for v in report.verdicts],
    }
    doc.update(extra)
    return doc


def error_to_json(exc: BaseException) -> dict:
    return {"schema_version": SCHEMA_VERSION, "type": "error",
            "error": type(exc).__name__, "message": str(exc)}
