"""Acceptance criteria, one test each.  All arithmetic is exact, so every tolerance is zero;
the only numeric bounds are the wall-clock budgets passed to ``criterion.finish``."""
import json
import re

from hopfschur.cli import main
from hopfschur.construct import (cocycle_verify, endomorphism_ring_check, finitize,
                                 group_algebra_form_check, pipeline)
from hopfschur.descent import (field_as_quotient, form_decomposition, forms_family_certificate,
                               quadratic_extension)
from hopfschur.findim import is_cosemisimple, is_semisimple, verify_hopf, verify_morphism
from hopfschur.serialize import cocycle_block, extension_block, witness_block

import test_oracle_suites as suites
from conftest import CONFIGS, FIXTURES, config, gaussian_ext, zeta5_ext
from oracles import radical_dimension, realified_invariant_dimension


def quaternion_cocycle():
    ext = gaussian_ext()
    one = ext.field.one()
    return ext, cocycle_verify([[one, one], [one, -one]], ext)


def hamilton_relations(A, ext):
    alg = A.algebra
    i, j = A.element(ext.field.gen(), 0), A.element(ext.field.one(), 1)
    minus_one = {0: -1}
    ij, ji = alg.mul(i, j), alg.mul(j, i)
    return (alg.mul(i, i) == minus_one and alg.mul(j, j) == minus_one
            and ji == {k: -c for k, c in ij.items()} and bool(ij))


def biquadratic_beta():
    cfg = config("finitize_biquadratic.json")
    ext = extension_block(cfg["field"], "$")
    alpha = cocycle_verify(cocycle_block(ext, cfg["cocycle"], "$"), ext)
    return finitize(alpha, witness_block(ext, cfg["witness"], "$"))


def test_criterion_1_quaternion_pipeline(criterion):
    ext, alpha = quaternion_cocycle()
    run = pipeline(ext, alpha)
    H = run.H
    v = verify_morphism(run.composite)
    criterion.finish(1, "quaternion pipeline H(16) onto Hamilton quaternions", 10, {
        "all pipeline verdicts": run.passed,
        "dim H = 16": H.dim == 16,
        "H Hopf axioms": verify_hopf(H).passed,
        "H semisimple": is_semisimple(H.algebra),
        "H cosemisimple": is_cosemisimple(H),
        "Ghat cyclic of order 4": run.ghat.ghat.order == 4 and run.ghat.ghat.is_cyclic(),
        "dim H1 = dim B = 8": run.dims["H1"] == run.B.dim == 8,
        "H -> A onto algebra map": v.is_algebra_map and v.is_onto and v.rank == 4,
        "A Hamilton relations": hamilton_relations(run.A, ext),
        "A central simple": run.A.is_central_simple,
    })


def test_criterion_2_endomorphism_ring(criterion):
    ext, alpha = quaternion_cocycle()
    run = pipeline(ext, alpha)
    report = endomorphism_ring_check(run)
    criterion.finish(2, "A^op -> End_H(A) bijective algebra map", 5, {
        "all checks": report.passed,
        "dim A = 4": run.A.algebra.dim == 4,
    })


def test_criterion_3_zeta5_field_quotient(criterion):
    ext = zeta5_ext()
    z = ext.field.gen()
    conj = next(k for k in range(ext.order) if ext[k](z) == z ** 4)
    fq = field_as_quotient(ext, [ext.identity_index, conj])
    v = verify_morphism(fq.morphism)
    dec = form_decomposition(fq.action, fq.phi, fq.invariants)
    criterion.finish(3, "Q(zeta5) form onto x^2 + x - 1", 5, {
        "report": fq.report.passed,
        "dim 4": fq.hopf.dim == 4,
        "commutative": fq.hopf.algebra.is_commutative(),
        "semisimple": is_semisimple(fq.hopf.algebra),
        "cosemisimple": is_cosemisimple(fq.hopf),
        "onto algebra map": v.is_algebra_map and v.is_onto,
        "target x^2 + x - 1": fq.field.minimal_polynomial == (-1, 1, 1),
        "degrees 1, 2, 1": [c.degree for c in dec.components] == [1, 2, 1],
    })


def test_criterion_4_quadratic_family(criterion):
    cert = forms_family_certificate([quadratic_extension(d) for d in (2, 3, 5)])
    forms = [fq.hopf for fq, _ in cert.forms]
    criterion.finish(4, "pairwise nonisomorphic forms for d = 2, 3, 5", 5, {
        "report": cert.report.passed,
        "pairwise distinct": cert.pairwise_distinct,
        "discriminants": cert.invariants == [[2], [3], [5]],
        "dim 4": all(H.dim == 4 for H in forms),
        "commutative": all(H.algebra.is_commutative() for H in forms),
        "semisimple": all(is_semisimple(H.algebra) for H in forms),
        "cosemisimple": all(is_cosemisimple(H) for H in forms),
    })


def test_criterion_5_finitization(criterion):
    beta = biquadratic_beta()
    values = [x for row in beta.values for x in row]
    certificate = beta.certificate
    criterion.finish(5, "finitized cocycle with values +-1", 5, {
        "group of order 4": beta.extension.order == 4,
        "16 values": len(values) == 16,
        "values in {1, -1}": all(x == 1 or x == -1 for x in values),
        "squares are 1": all(x * x == 1 for x in values),
        "beta . dc = inflation of alpha": certificate["beta . dc = inflation of alpha"].passed,
        "certificate": certificate.passed,
    })


def test_criterion_6_finitized_pipeline(criterion):
    beta = biquadratic_beta()
    run = pipeline(beta.extension, beta)
    v = verify_morphism(run.composite)
    criterion.finish(6, "pipeline at scale: H(128) onto A(16)", 600, {
        "all verdicts": run.passed,
        "dim H = 128": run.H.dim == 128,
        "dim A = 16": run.A.algebra.dim == 16,
        "onto": v.is_algebra_map and v.is_onto and v.rank == 16,
    })


def test_criterion_7_oracle_suites(criterion):
    from hopfschur.construct import bicrossed
    from hopfschur.descent import action_from_group_map, classify_action, invariants

    speiser, round_trip = True, True
    for _, ext, T, phi in suites.GROUP_MAPS:
        action = action_from_group_map(ext, T, phi)
        speiser &= invariants(action).hopf.dim == T.order == realified_invariant_dimension(action)
        round_trip &= classify_action(action, T).maps == phi.maps
    radical = all(is_semisimple(A) == (radical_dimension(A) == 0) for _, A in suites.ALGEBRAS)
    axioms = all(verify_hopf(bicrossed(T, N, psi)).passed for _, T, N, psi in suites.BICROSSED)
    criterion.finish(7, "oracle suites (Speiser, radical, bicrossed axioms, round trip)", 120, {
        "speiser": speiser,
        "radical": radical,
        "bicrossed axioms": axioms,
        "round trip": round_trip,
    })


def test_criterion_8_group_algebra_form(criterion):
    ext, alpha = quaternion_cocycle()
    run = pipeline(ext, alpha)
    fc = group_algebra_form_check(run.X)
    criterion.finish(8, "X is the group algebra of an order-16 group", 5, {
        "report": fc.report.passed,
        "order 16": fc.group.order == 16,
        "Hopf axioms of target": verify_hopf(fc.group_hopf).passed,
    })


TIMINGS = re.compile(r'"timings": \{[^}]*\}')


def _cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_criterion_9_negative_paths(criterion, capsys):
    checks = {}
    cases = {
        "corrupted antipode": (["verify", "--in", str(FIXTURES / "corrupted_antipode.json")],
                               {"antipode (S (x) id)": 1, "antipode (id (x) S)": 1}),
        "non-cocycle": (["verify", "--in", str(CONFIGS / "non_cocycle.json")],
                        {"2-cocycle identity": [1, 1, 1]}),
    }
    for label, (argv, expected) in cases.items():
        code1, out1 = _cli(capsys, argv)
        code2, out2 = _cli(capsys, argv)
        failing = {c["name"]: c.get("counterexample") for c in json.loads(out1)["checks"]
                   if not c["passed"]}
        checks[f"{label}: exit 1"] = code1 == code2 == 1
        checks[f"{label}: locators"] = failing == expected
        checks[f"{label}: byte stable"] = TIMINGS.sub("", out1) == TIMINGS.sub("", out2)
    criterion.finish(9, "negative paths exit 1 with stable locators", 5, checks)
