"""JSON documents: Hopf algebras over Q, run configurations and canonical dumps.

Hopf document layout (dense, rationals as "p/q" strings):
  mult_constants[i][j][k]  coefficient of b_k in b_i b_j
  comult[i][a*n + b]       coefficient of b_a (x) b_b in Delta(b_i)
  antipode[i][j]           coefficient of b_i in S(b_j)
"""
from __future__ import annotations

import json
from fractions import Fraction

from .exactnum import (FieldEmbedding, NFElement, element_from_json, extension_from_json,
                       field_to_json, format_rational, parse_rational, RATIONALS)
from .findim import CoalgebraData, HopfAlgebraData, StructureAlgebra

HOPF_KIND = "hopf_algebra"


class DocumentError(ValueError):
    """A malformed document; ``path`` locates the offending entry."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _render(obj, depth: int) -> str:
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        pad = "  " * (depth + 1)
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_render(obj[k], depth + 1)}"
                 for k in sorted(obj, key=str)]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            return json.dumps(list(obj), ensure_ascii=False, separators=(", ", ": "))
        pad = "  " * (depth + 1)
        return "[\n" + ",\n".join(pad + _render(x, depth + 1) for x in obj) + "\n" + "  " * depth + "]"
    return json.dumps(obj, ensure_ascii=False)


def canonical_json(obj) -> str:
    """Sorted keys, two-space indent, arrays of scalars on one line."""
    return _render(obj, 0) + "\n"


def _q(x) -> str:
    if isinstance(x, NFElement):
        return format_rational(x.rational())
    return format_rational(x)


def hopf_to_json(H: HopfAlgebraData) -> dict:
    if H.base_field is not None and H.base_field.degree != 1:
        raise ValueError("only Hopf algebras over Q are serialized densely")
    n = H.dim
    A, C = H.algebra, H.coalgebra
    zero = "0"
    mult = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for (i, j), m in A.mult.items():
        for k, c in m.items():
            mult[i][j][k] = _q(c)
    comult = [[zero] * (n * n) for _ in range(n)]
    for i, d in enumerate(C.comult):
        for (a, b), c in d.items():
            comult[i][a * n + b] = _q(c)
    antipode = [[zero] * n for _ in range(n)]
    for j, col in enumerate(H.antipode):
        for i, c in col.items():
            antipode[i][j] = _q(c)
    return {
        "kind": HOPF_KIND,
        "base_field": field_to_json(RATIONALS),
        "dim": n,
        "basis_labels": list(A.basis_labels),
        "mult_constants": mult,
        "unit": [_q(A.unit.get(i, 0)) for i in range(n)],
        "comult": comult,
        "counit": [_q(C.counit.get(i, 0)) for i in range(n)],
        "antipode": antipode,
    }


def _rat(x, path):
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if not isinstance(x, str):
        raise DocumentError(path, f"expected a rational string, got {x!r}")
    try:
        return parse_rational(x)
    except ValueError as exc:
        raise DocumentError(path, f"malformed rational {x!r} ({exc})") from None


def _array(x, length, path):
    if not isinstance(x, list) or len(x) != length:
        raise DocumentError(path, f"expected an array of length {length}")
    return x


def require(doc, key, path):
    if not isinstance(doc, dict) or key not in doc:
        raise DocumentError(path, f"missing key {key!r}")
    return doc[key]


def hopf_from_json(doc: dict) -> HopfAlgebraData:
    if require(doc, "kind", "$") != HOPF_KIND:
        raise DocumentError("$.kind", f"expected {HOPF_KIND!r}")
    n = require(doc, "dim", "$")
    if not isinstance(n, int) or n < 1:
        raise DocumentError("$.dim", "dimension must be a positive integer")
    base = require(doc, "base_field", "$")
    if require(base, "minimal_polynomial", "$.base_field") not in (["0", "1"], [0, 1]):
        raise DocumentError("$.base_field", "only Q is supported")
    labels = _array(require(doc, "basis_labels", "$"), n, "$.basis_labels")
    mult = {}
    rows = _array(require(doc, "mult_constants", "$"), n, "$.mult_constants")
    for i in range(n):
        _array(rows[i], n, f"$.mult_constants[{i}]")
        for j in range(n):
            entries = _array(rows[i][j], n, f"$.mult_constants[{i}][{j}]")
            m = {}
            for k in range(n):
                c = _rat(entries[k], f"$.mult_constants[{i}][{j}][{k}]")
                if c:
                    m[k] = c
            if m:
                mult[(i, j)] = m
    unit = {i: c for i, x in enumerate(_array(require(doc, "unit", "$"), n, "$.unit"))
            if (c := _rat(x, f"$.unit[{i}]"))}
    comult = []
    crow = _array(require(doc, "comult", "$"), n, "$.comult")
    for i in range(n):
        entries = _array(crow[i], n * n, f"$.comult[{i}]")
        d = {}
        for idx, x in enumerate(entries):
            c = _rat(x, f"$.comult[{i}][{idx}]")
            if c:
                d[divmod(idx, n)] = c
        comult.append(d)
    counit = {i: c for i, x in enumerate(_array(require(doc, "counit", "$"), n, "$.counit"))
              if (c := _rat(x, f"$.counit[{i}]"))}
    arows = _array(require(doc, "antipode", "$"), n, "$.antipode")
    antipode = [dict() for _ in range(n)]
    for i in range(n):
        entries = _array(arows[i], n, f"$.antipode[{i}]")
        for j in range(n):
            c = _rat(entries[j], f"$.antipode[{i}][{j}]")
            if c:
                antipode[j][i] = c
    A = StructureAlgebra(n, mult, unit, None, [str(x) for x in labels])
    return HopfAlgebraData(A, CoalgebraData(comult, counit), antipode)


def matrix_to_json(columns: list, nrows: int) -> list:
    out = [["0"] * len(columns) for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, c in col.items():
            out[i][j] = _q(c)
    return out


# ---------------------------------------------------------------------------
# configuration blocks

def _wrap(fn, path, *args):
    try:
        return fn(*args)
    except DocumentError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise DocumentError(path, str(exc)) from None


def _elements(F, data, path):
    if not isinstance(data, list):
        raise DocumentError(path, "expected an array of field elements")
    out = []
    for i, x in enumerate(data):
        if not isinstance(x, list):
            x = [x]
        for a, c in enumerate(x):
            _rat(c, f"{path}[{i}][{a}]")
        out.append(_wrap(element_from_json, f"{path}[{i}]", F, x))
    return out


def extension_block(block, path):
    require(block, "minimal_polynomial", path)
    require(block, "automorphisms", path)
    for a, c in enumerate(block["minimal_polynomial"]):
        _rat(c, f"{path}.minimal_polynomial[{a}]")
    return _wrap(extension_from_json, path, block)


def cocycle_block(ext, data, path):
    n = ext.order
    _array(data, n, path)
    return [_elements(ext.field, _array(row, n, f"{path}[{g}]"), f"{path}[{g}]")
            for g, row in enumerate(data)]


def witness_block(ext, block, path):
    from .construct.cocycles import FinitizationWitness

    m = require(block, "m", path)
    if not isinstance(m, int) or m < 1:
        raise DocumentError(f"{path}.m", "m must be a positive integer")
    K = extension_block(require(block, "K", path), f"{path}.K")
    f = _elements(ext.field, _array(require(block, "f", path), ext.order, f"{path}.f"), f"{path}.f")
    img = _elements(K.field, [require(block, "embedding", path)], f"{path}.embedding")[0]
    emb = _wrap(FieldEmbedding, f"{path}.embedding", ext.field, K.field, img)
    roots = _elements(K.field, _array(require(block, "roots", path), ext.order, f"{path}.roots"),
                      f"{path}.roots")
    proj = _array(require(block, "projection", path), K.order, f"{path}.projection")
    if not all(isinstance(x, int) and 0 <= x < ext.order for x in proj):
        raise DocumentError(f"{path}.projection", "entries must be automorphism indices of L")
    return FinitizationWitness(m, f, K, emb, roots, list(proj))


def load_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"not valid JSON ({exc.msg} at line {exc.lineno})") from None
