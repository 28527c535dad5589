"""Cross-checks of the library against independent brute-force oracles over a fixed corpus."""
from itertools import combinations

import pytest

from hopfschur.construct import (bicrossed, cocycle_verify, crossed_product, function_algebra,
                                 group_algebra)
from hopfschur.construct.pipeline import b_algebra
from hopfschur.descent import action_from_group_map, classify_action, invariants, speiser_check
from hopfschur.findim import direct_sum, field_algebra, is_semisimple, matrix_algebra, verify_hopf
from hopfschur.groups import (cyclic_group, direct_product, extension_group, galois_as_group,
                              group_action, left_cosets, trivial_action, z2_span)

import algebras
from conftest import biquadratic_ext, gaussian_ext, zeta5_ext
from oracles import radical_dimension, realified_invariant_dimension

EXTENSIONS = {"Q(i)": gaussian_ext(), "Q(zeta5)": zeta5_ext(), "Q(sqrt2,i)": biquadratic_ext()}


def subgroups(G):
    for r in range(1, G.order + 1):
        for s in combinations(range(G.order), r):
            if G.is_subgroup(s):
                yield list(s)


def inversion_through(G, H, T):
    """G acts on abelian T by inversion through G/H, H of index 2."""
    ident = tuple(range(T.order))
    return group_action(G, T, [ident if g in H else tuple(T.inverse) for g in range(G.order)])


def group_map_corpus():
    """(extension, T, phi) with |T| <= 8 built from coset spans, inversions and trivial actions."""
    for name, ext in EXTENSIONS.items():
        G = galois_as_group(ext)
        for H in subgroups(G):
            _, perms = left_cosets(G, H)
            if 2 ** len(perms[0]) <= 8:
                T, phi = z2_span(G, perms)
                yield f"{name}:span{H}", ext, T, phi
            if 2 * len(H) == G.order:
                # the two cosets plus a fixed third point: an action on (Z/2)^3
                T, phi = z2_span(G, [tuple(p) + (2,) for p in perms])
                yield f"{name}:span{H}+fixed", ext, T, phi
                for n in (3, 4, 5, 8):
                    T = cyclic_group(n)
                    yield f"{name}:inv{H}:Z{n}", ext, T, inversion_through(G, H, T)
        for n in (2, 3):
            T = cyclic_group(n)
            yield f"{name}:trivial:Z{n}", ext, T, trivial_action(G, T)


GROUP_MAPS = list(group_map_corpus())
IDS = [c[0] for c in GROUP_MAPS]


@pytest.mark.parametrize("name,ext,T,phi", GROUP_MAPS, ids=IDS)
def test_speiser_dimension_law(name, ext, T, phi):
    action = action_from_group_map(ext, T, phi)
    inv = invariants(action)
    assert inv.hopf.dim == T.order == realified_invariant_dimension(action)
    assert speiser_check(action, inv).passed
    assert verify_hopf(inv.hopf).passed


@pytest.mark.parametrize("name,ext,T,phi", GROUP_MAPS, ids=IDS)
def test_classify_inverts_construct(name, ext, T, phi):
    assert classify_action(action_from_group_map(ext, T, phi), T).maps == phi.maps


def test_corpus_covers_all_three_extensions():
    assert {c[0].split(":")[0] for c in GROUP_MAPS} == set(EXTENSIONS)
    assert max(c[2].order for c in GROUP_MAPS) == 8


# -- semisimplicity against the radical ---------------------------------------------------------

def algebra_corpus():
    qi = EXTENSIONS["Q(i)"]
    one = qi.field.one()
    quaternion = cocycle_verify([[one, one], [one, -one]], qi)
    yield "dual numbers", algebras.dual_numbers()
    yield "Q+Q", algebras.q_plus_q()
    yield "Q", algebras.rationals()
    yield "Hamilton", algebras.hamilton()
    yield "upper triangular", algebras.upper_triangular_2()
    for n in range(2, 6):
        yield f"Q[x]/x^{n}", algebras.truncated_polynomials(n)
    for n in range(1, 9):
        yield f"Q[Z{n}]", group_algebra(cyclic_group(n)).algebra
    yield "Q[S3]", group_algebra(algebras.symmetric_group_3()).algebra
    yield "Q^S3", function_algebra(algebras.symmetric_group_3()).algebra
    yield "Q[Z2xZ2]", group_algebra(direct_product(cyclic_group(2), cyclic_group(2))).algebra
    yield "M2", matrix_algebra(2)
    for name, ext in EXTENSIONS.items():
        yield name, field_algebra(ext.field)
    yield "Hamilton + dual numbers", direct_sum([algebras.hamilton(), algebras.dual_numbers()])
    for s in (1, -1, -2):
        yield f"crossed {s}", crossed_product(cocycle_verify([[one, one], [one, s * one]], qi)).algebra
    yield "B quaternion", b_algebra(qi, extension_group(quaternion))


ALGEBRAS = list(algebra_corpus())


@pytest.mark.parametrize("name,A", ALGEBRAS, ids=[a[0] for a in ALGEBRAS])
def test_semisimplicity_matches_radical(name, A):
    assert A.dim <= 8
    assert is_semisimple(A) == (radical_dimension(A) == 0)


def test_corpus_has_both_verdicts():
    verdicts = {is_semisimple(A) for _, A in ALGEBRAS}
    assert verdicts == {True, False}


# -- bicrossed products ------------------------------------------------------------------------------

def bicrossed_corpus():
    for n in (1, 2, 3, 4):
        N = cyclic_group(n)
        for r in (1, 2, 3):
            T = z2_span(cyclic_group(1), [tuple(range(r))])[0]
            yield f"Z{n} trivial on 2^{r}", T, N, trivial_action(N, T)
        _, perms = left_cosets(N, [0] if n <= 3 else [0, 2])
        T, psi = z2_span(N, perms)
        yield f"Z{n} on span of cosets", T, N, psi
    S3 = algebras.symmetric_group_3()
    T, psi = z2_span(S3, left_cosets(S3, [0, 1])[1])
    yield "S3 permuting 3 bits", T, S3, psi
    for n in (3, 4, 5, 6, 8):
        T = cyclic_group(n)
        N = cyclic_group(2)
        yield f"Z2 inverting Z{n}", T, N, inversion_through(N, [0], T)
    T, N = cyclic_group(5), cyclic_group(4)
    yield "Z4 squaring-type on Z5", T, N, group_action(N, T, [tuple((2 ** g * t) % 5 for t in range(5))
                                                           for g in range(4)])


BICROSSED = list(bicrossed_corpus())


@pytest.mark.parametrize("name,T,N,psi", BICROSSED, ids=[b[0] for b in BICROSSED])
def test_bicrossed_hopf_axioms(name, T, N, psi):
    assert N.order <= 8 and T.order <= 8
    report = verify_hopf(bicrossed(T, N, psi))
    assert report.passed, report
