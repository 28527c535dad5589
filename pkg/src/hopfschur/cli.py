"""Batch front end: hopfschur {pipeline,forms,field-quotient,finitize,verify,dump}.

Exit status: 0 every check passed, 1 some check failed (report still written),
2 unreadable or malformed input, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .construct.cocycles import (CocycleError, Cocycle, WitnessError, cocycle_identity_failure,
                                 finitize)
from .construct.pipeline import (PipelineError, endomorphism_ring_check,
                                 group_algebra_form_check, pipeline)
from .descent import (action_from_group_map, classify_action, field_as_quotient,
                      form_decomposition, forms_family_certificate, invariants,
                      quadratic_extension, speiser_check, verify_hopf_semilinear)
from .groups import (GroupAction, GroupError, galois_as_group, group_from_table,
                     verify_action)
from .exactnum import FieldError, element_to_json, is_root_of_unity, poly_to_json, poly_str
from .findim import verify_hopf
from .serialize import (DocumentError, canonical_json, cocycle_block, extension_block,
                        hopf_from_json, hopf_to_json, load_json, matrix_to_json, witness_block,
                        HOPF_KIND, require)
from .verdicts import Report

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_MAX_DIM = 1024


class UsageError(Exception):
    pass


class Run:
    """Collects checks, dims, artifacts and timings for one invocation."""

    def __init__(self, command: str, input_path: str, flags: dict):
        self.command = command
        self.input_path = input_path
        self.flags = flags
        with open(input_path, "rb") as fh:
            self.digest = hashlib.sha256(fh.read()).hexdigest()
        self.report = Report()
        self.dims = {}
        self.results = {}
        self.artifacts = {}
        self.timings = {}
        self._t0 = time.perf_counter()

    def timed(self, name, fn, *args, **kw):
        t = time.perf_counter()
        try:
            return fn(*args, **kw)
        finally:
            self.timings[name] = round(time.perf_counter() - t, 6)

    def document(self) -> dict:
        self.timings["total"] = round(time.perf_counter() - self._t0, 6)
        return {
            "tool": f"hopfschur {__version__}",
            "command": {"name": self.command, "input": os.path.basename(self.input_path),
                        "flags": self.flags},
            "config_digest": "sha256:" + self.digest,
            "status": "pass" if self.report.passed and self.report.checks else "fail",
            "checks": self.report.to_json(),
            "dims": self.dims,
            "results": self.results,
            "timings": self.timings,
        }


def _strip_timings(doc):
    if isinstance(doc, dict):
        return {k: v for k, v in doc.items() if k != "timings"}
    return doc


# ---------------------------------------------------------------------------
# commands

def _load_cocycle_config(cfg, run: Run):
    ext = extension_block(require(cfg, "field", "$"), "$.field")
    values = cocycle_block(ext, require(cfg, "cocycle", "$"), "$.cocycle")
    witness = witness_block(ext, cfg["witness"], "$.witness") if "witness" in cfg else None
    return ext, values, witness


def _check_cocycle(ext, values, run: Run, prefix="cocycle: ") -> Cocycle | None:
    zero = next(((g, h) for g, row in enumerate(values) for h, x in enumerate(row) if not x), None)
    run.report.add(prefix + "values nonzero", zero is None, zero, anchor="cocycle values lie in L*")
    if zero is not None:
        return None
    bad = cocycle_identity_failure(ext, values)
    run.report.add(prefix + "2-cocycle identity", bad is None, bad,
                   anchor="g1(a(g2,g3)) a(g1,g2g3) = a(g1,g2) a(g1g2,g3)")
    e = ext.identity_index
    nbad = next(((g, h) for g in range(ext.order) for h in range(ext.order)
                 if (g == e or h == e) and values[g][h] != 1), None)
    run.report.add(prefix + "normalized", nbad is None, nbad, anchor="a(1,g) = a(g,1) = 1")
    if bad is not None or nbad is not None:
        return None
    return Cocycle(ext, values)


def _finitize_stage(ext, alpha, witness, run: Run):
    try:
        beta = run.timed("finitize", finitize, alpha, witness)
    except WitnessError as exc:
        run.report.add("finitize: witness", False, str(exc), anchor="witness equations hold")
        return None
    run.report.extend(beta.certificate, prefix="finitize: ")
    run.results["finitized_cocycle"] = [[element_to_json(x) for x in row] for row in beta.values]
    run.dims["N"] = beta.extension.order
    run.dims["K"] = beta.extension.degree
    return beta


def cmd_pipeline(cfg, run: Run, max_dim: int):
    ext, values, witness = _load_cocycle_config(cfg, run)
    alpha = _check_cocycle(ext, values, run)
    if alpha is None:
        return
    if witness is not None:
        alpha = _finitize_stage(ext, alpha, witness, run)
        if alpha is None:
            return
        ext = alpha.extension
    bad = next(((g, h) for g in range(ext.order) for h in range(ext.order)
                if is_root_of_unity(alpha(g, h)) is None), None)
    run.report.add("cocycle values are roots of unity", bad is None, bad,
                   anchor="the cocycle is finite")
    if bad is not None:
        return
    dim_x = (1 << ext.order) * ext.order * _mu_bound(alpha)
    if dim_x > max_dim:
        raise UsageError(f"bicrossed dimension {dim_x} exceeds --max-dim {max_dim}")
    try:
        res = run.timed("pipeline", pipeline, ext, alpha)
    except PipelineError as exc:
        if exc.report is not None:
            run.report.extend(exc.report)
        run.report.add(f"stage {exc.stage}", False, str(exc), anchor="pipeline stage completed")
        return
    run.report.extend(res.report)
    run.timings.update({f"stage {k}": v for k, v in res.timings.items()})
    fc = run.timed("form check", group_algebra_form_check, res.X)
    run.report.extend(fc.report, prefix="group algebra form: ")
    run.report.extend(run.timed("endomorphism ring", endomorphism_ring_check, res),
                      prefix="End_H(A): ")
    run.dims.update(res.dims)
    run.dims["semidirect_group"] = fc.group.order
    run.results["Ghat_cyclic"] = res.ghat.ghat.is_cyclic()
    run.results["A_labels"] = res.A.algebra.basis_labels
    run.artifacts["H.json"] = hopf_to_json(res.H)
    run.artifacts["surjection.json"] = {"kind": "algebra_map", "source_dim": res.H.dim,
                                        "target_dim": res.A.algebra.dim,
                                        "matrix": matrix_to_json(res.composite.columns,
                                                                 res.A.algebra.dim)}


def _mu_bound(alpha) -> int:
    return math.lcm(*[is_root_of_unity(alpha(g, h)) for g in range(alpha.order) for h in range(alpha.order)])


def cmd_finitize(cfg, run: Run):
    ext, values, witness = _load_cocycle_config(cfg, run)
    if witness is None:
        raise DocumentError("$", "missing key 'witness'")
    alpha = _check_cocycle(ext, values, run)
    if alpha is not None:
        _finitize_stage(ext, alpha, witness, run)


def cmd_field_quotient(cfg, run: Run):
    ext = extension_block(require(cfg, "field", "$"), "$.field")
    sub = require(cfg, "subgroup", "$")
    if not isinstance(sub, list) or not all(isinstance(x, int) and 0 <= x < ext.order for x in sub):
        raise DocumentError("$.subgroup", "expected automorphism indices")
    try:
        fq = run.timed("field quotient", field_as_quotient, ext, sub)
    except FieldError as exc:
        raise DocumentError("$.subgroup", str(exc)) from None
    run.report.extend(fq.report)
    decomp = run.timed("decomposition", form_decomposition, fq.action, fq.phi, fq.invariants)
    run.report.add("decomposition is an algebra isomorphism", decomp.verdict.is_bijective,
                   anchor="the invariants are a product of fixed fields")
    run.dims.update({"H": fq.hopf.dim, "T": fq.T.order, "field": fq.field.degree})
    run.results["quotient_field"] = {"minimal_polynomial": poly_to_json(fq.field.minimal_polynomial),
                                     "display": poly_str(fq.field.minimal_polynomial, "x")}
    run.results["component_degrees"] = [c.degree for c in decomp.components]
    run.artifacts["hopf.json"] = hopf_to_json(fq.hopf)
    run.artifacts["quotient_map.json"] = {"kind": "algebra_map", "source_dim": fq.hopf.dim,
                                          "target_dim": fq.field.degree,
                                          "matrix": matrix_to_json(fq.morphism.columns, fq.field.degree)}


def _forms_entry(d):
    cert = forms_family_certificate([quadratic_extension(d)])
    return d, cert.report.to_json(), cert.invariants[0], \
        [c.degree for c in cert.forms[0][1].components], cert.forms[0][0].hopf.dim


def cmd_group_map_form(cfg, run: Run):
    """The form of L[T] given by an explicit action of Gal(L/k) on T."""
    ext = extension_block(require(cfg, "field", "$"), "$.field")
    gdoc = require(cfg, "group", "$")
    try:
        T = group_from_table(require(gdoc, "table", "$.group"), gdoc.get("labels"))
    except GroupError as exc:
        raise DocumentError("$.group.table", str(exc)) from None
    maps = require(cfg, "action", "$")
    for i, p in enumerate(_array_of(maps, ext.order, "$.action")):
        if not isinstance(p, list) or len(p) != T.order:
            raise DocumentError(f"$.action[{i}]", f"expected a permutation of length {T.order}")
    phi = GroupAction(galois_as_group(ext), T, [tuple(p) for p in maps])
    bad = verify_action(phi)
    if bad is not None:
        raise DocumentError("$.action", f"not an action by automorphisms: {bad[0]} at {bad[1]}")
    action = action_from_group_map(ext, T, phi)
    run.report.extend(verify_hopf_semilinear(action))
    inv = run.timed("invariants", invariants, action)
    run.report.extend(speiser_check(action, inv))
    back = classify_action(action, T)
    run.report.add("classification round trip", back.maps == phi.maps,
                   anchor="Hopf-semilinear actions on L[T] correspond to actions on T")
    decomp = run.timed("decomposition", form_decomposition, action, phi, inv)
    run.report.add("decomposition is an algebra isomorphism", decomp.verdict.is_bijective,
                   anchor="the invariants are a product of fixed fields")
    run.dims.update({"H": inv.hopf.dim, "T": T.order, "L": ext.degree})
    run.results["component_degrees"] = [c.degree for c in decomp.components]
    run.results["commutative"] = inv.hopf.algebra.is_commutative()
    run.results["cocommutative"] = inv.hopf.coalgebra.is_cocommutative()
    run.artifacts["hopf.json"] = hopf_to_json(inv.hopf)


def _array_of(x, n, path):
    if not isinstance(x, list) or len(x) != n:
        raise DocumentError(path, f"expected an array of length {n}")
    return x


def cmd_forms(cfg, run: Run, jobs: int):
    if isinstance(cfg, dict) and "action" in cfg:
        return cmd_group_map_form(cfg, run)
    ds = require(cfg, "quadratic_d", "$")
    if not isinstance(ds, list) or not all(isinstance(d, int) for d in ds):
        raise DocumentError("$.quadratic_d", "expected a list of integers")
    for i, d in enumerate(ds):
        try:
            quadratic_extension(d)
        except FieldError as exc:
            raise DocumentError(f"$.quadratic_d[{i}]", str(exc)) from None
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = run.timed("forms", lambda: list(pool.map(_forms_entry, ds)))
    else:
        entries = run.timed("forms", lambda: [_forms_entry(d) for d in ds])
    keys = {}
    for d, checks, key, degrees, dim in entries:
        for c in checks:
            run.report.add(c["name"], c["passed"], c.get("counterexample"), c.get("anchor", ""),
                           c.get("detail", ""))
        keys[d] = key
        run.results[f"d={d}"] = {"component_degrees": degrees, "quadratic_discriminants": key, "dim": dim}
    clash = next(((a, b) for i, a in enumerate(ds) for b in ds[:i] if keys[a] == keys[b]), None)
    run.report.add("pairwise nonisomorphic", clash is None, clash,
                   anchor="distinct squarefree discriminants of the quadratic components")


def cmd_verify(doc, run: Run):
    kind = require(doc, "kind", "$")
    if kind == HOPF_KIND:
        H = hopf_from_json(doc)
        run.report.extend(run.timed("verify", verify_hopf, H))
        run.dims["H"] = H.dim
    elif kind == "cocycle":
        ext = extension_block(require(doc, "field", "$"), "$.field")
        values = cocycle_block(ext, require(doc, "cocycle", "$"), "$.cocycle")
        _check_cocycle(ext, values, run, prefix="")
    else:
        raise DocumentError("$.kind", f"unknown document kind {kind!r}")


def cmd_dump(doc) -> str:
    if isinstance(doc, dict) and doc.get("kind") == HOPF_KIND:
        return canonical_json(hopf_to_json(hopf_from_json(doc)))
    return canonical_json(doc)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfschur", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"hopfschur {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("pipeline", "forms", "field-quotient", "finitize"):
        s = sub.add_parser(name)
        s.add_argument("--config", required=True)
        s.add_argument("--out")
    for name in ("verify", "dump"):
        s = sub.add_parser(name)
        s.add_argument("--in", dest="input", required=True)
        if name == "verify":
            s.add_argument("--out")
    for s in sub.choices.values():
        s.add_argument("--jobs", type=int, default=1)
        s.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)
        s.add_argument("--golden")
    return p


def _compare_golden(run: Run, report_doc: dict, golden_dir: str):
    files = {"report.json": report_doc, **run.artifacts}
    found = 0
    for name, doc in sorted(files.items()):
        path = os.path.join(golden_dir, name)
        if not os.path.exists(path):
            continue
        found += 1
        with open(path, encoding="utf-8") as fh:
            expected = json.load(fh)
        same = _strip_timings(expected) == _strip_timings(json.loads(canonical_json(doc)))
        run.report.add(f"golden {name}", same, None if same else name,
                       anchor="output matches the committed expectation")
    if not found:
        run.report.add("golden expectations present", False, golden_dir,
                       anchor="output matches the committed expectation")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    path = args.input if args.command in ("verify", "dump") else args.config
    try:
        if not os.path.exists(path):
            raise DocumentError("$", f"no such file {path}")
        doc = load_json(path)
        if args.command == "dump":
            sys.stdout.write(cmd_dump(doc))
            return EXIT_OK
        flags = {"max_dim": args.max_dim}
        run = Run(args.command, path, flags)
        if args.command == "pipeline":
            cmd_pipeline(doc, run, args.max_dim)
        elif args.command == "forms":
            cmd_forms(doc, run, args.jobs)
        elif args.command == "field-quotient":
            cmd_field_quotient(doc, run)
        elif args.command == "finitize":
            cmd_finitize(doc, run)
        elif args.command == "verify":
            cmd_verify(doc, run)
    except (DocumentError, CocycleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.golden:
        _compare_golden(run, run.document(), args.golden)
    report_doc = run.document()
    out = getattr(args, "out", None)
    if out:
        os.makedirs(out, exist_ok=True)
        for name, d in sorted({"report.json": report_doc, **run.artifacts}.items()):
            with open(os.path.join(out, name), "w", encoding="utf-8") as fh:
                fh.write(canonical_json(d))
    sys.stdout.write(canonical_json(report_doc))
    return EXIT_OK if report_doc["status"] == "pass" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
