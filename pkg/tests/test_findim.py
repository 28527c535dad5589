from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfschur.construct import function_algebra, group_algebra
from hopfschur.findim import (AlgebraError, AlgebraMorphism, HopfAlgebraData, base_change,
                              center, centralizer_in_endomorphisms, direct_sum, dual_hopf,
                              is_central_simple, is_cosemisimple, is_semisimple,
                              left_regular_representation, opposite, quotient_algebra,
                              right_multiplication_map, verify_hopf, verify_morphism)
from hopfschur.groups import cyclic_group
from hopfschur.linalg import ExactMatrix, LinearAlgebraError, solve_exact

from algebras import (dual_numbers, hamilton, q_plus_q, rationals, symmetric_group_3,
                      truncated_polynomials, upper_triangular_2)
from conftest import gaussian_ext
from oracles import dense_kernel, dense_rank

ONE = Fraction(1)


# -- exact linear algebra ----------------------------------------------------------

def test_identity_rank():
    assert solve_exact(ExactMatrix.identity(3), "rank") == 3


def test_zero_matrix_kernel():
    Z = ExactMatrix.from_dense([[0, 0], [0, 0]])
    assert solve_exact(Z, "rank") == 0
    assert solve_exact(Z, "kernel_basis") == [{0: 1}, {1: 1}]


def test_rank_one_kernel():
    M = ExactMatrix.from_dense([[1, 2], [2, 4]])
    assert solve_exact(M, "rank") == 1
    assert solve_exact(M, "kernel_basis") == [{0: -2, 1: 1}]


def test_solve_and_inverse():
    M = ExactMatrix.from_dense([[2, 1], [1, 1]])
    assert solve_exact(M, "solve", [3, 2]) == [1, 1]
    assert solve_exact(M, "inverse").to_dense() == [[1, -1], [-1, 2]]
    with pytest.raises(LinearAlgebraError):
        solve_exact(ExactMatrix.from_dense([[1, 2], [2, 4]]), "solve", [1, 0])
    with pytest.raises(LinearAlgebraError):
        solve_exact(ExactMatrix.from_dense([[1, 2], [2, 4]]), "inverse")


small = st.integers(-4, 4)


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_rank_and_kernel_match_dense_oracle(r, c, data):
    rows = data.draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    M = ExactMatrix.from_dense(rows)
    assert M.rank() == dense_rank(rows, c)
    ker = M.kernel()
    assert len(ker) == len(dense_kernel(rows, c))
    for v in ker:
        assert M.apply(v) == {}


def test_matrix_over_number_field():
    L = gaussian_ext().field
    i = L.gen()
    M = ExactMatrix.from_dense([[1, i], [i, -1]], L)
    assert M.rank() == 1
    assert M.apply(M.kernel()[0]) == {}


# -- Hopf verifiers ------------------------------------------------------------------

def test_group_algebra_z2_passes():
    assert verify_hopf(group_algebra(cyclic_group(2))).passed


def test_function_algebra_z2_passes():
    H = function_algebra(cyclic_group(2))
    assert verify_hopf(H).passed
    assert H.algebra.unit == {0: ONE, 1: ONE}
    assert H.coalgebra.comult[1] == {(0, 1): ONE, (1, 0): ONE}


def test_antipode_identity_fails_on_z3():
    H = group_algebra(cyclic_group(3))
    broken = HopfAlgebraData(H.algebra, H.coalgebra, [{i: ONE} for i in range(3)])
    report = verify_hopf(broken)
    # m (S (x) id) Delta(g) = g^2, not eps(g) 1
    assert not report["antipode (S (x) id)"].passed
    assert report["antipode (S (x) id)"].counterexample == 1
    assert not report["antipode (id (x) S)"].passed
    assert report["associativity"].passed and report["coassociativity"].passed


def test_every_check_has_an_anchor():
    report = verify_hopf(group_algebra(cyclic_group(2)))
    assert all(c.anchor for c in report.checks)
    names = {c.name for c in report.checks}
    assert {"associativity", "unit", "coassociativity", "counit",
            "comultiplication multiplicative", "counit multiplicative",
            "comultiplication unital", "counit unital"} <= names


# -- duals ---------------------------------------------------------------------------

def _structure(H):
    return (H.algebra.mult, H.algebra.unit, H.coalgebra.comult, H.coalgebra.counit, H.antipode)


def test_dual_of_group_algebra_is_function_algebra():
    D = dual_hopf(group_algebra(cyclic_group(2)))
    assert verify_hopf(D).passed
    assert D.algebra.is_commutative()
    F = function_algebra(cyclic_group(2))
    assert _structure(D) == _structure(F)


@pytest.mark.parametrize("G", [cyclic_group(3), cyclic_group(4), symmetric_group_3()],
                         ids=["Z3", "Z4", "S3"])
def test_dual_is_involution(G):
    for H in (group_algebra(G), function_algebra(G)):
        assert _structure(dual_hopf(dual_hopf(H))) == _structure(H)


def test_dual_of_s3_group_algebra_is_commutative():
    H = group_algebra(symmetric_group_3())
    assert not H.algebra.is_commutative()
    D = dual_hopf(H)
    assert D.dim == 6
    assert D.algebra.is_commutative()
    assert verify_hopf(D).passed


def test_function_algebra_pairs_with_group_algebra():
    # <e_t, g> = delta: the dual of k[Z3] equals the function algebra structure exactly
    G = cyclic_group(3)
    assert _structure(dual_hopf(group_algebra(G))) == _structure(function_algebra(G))


# -- semisimplicity and centers -----------------------------------------------------

def test_semisimplicity_examples():
    assert not is_semisimple(dual_numbers())
    assert is_semisimple(q_plus_q())
    assert is_semisimple(group_algebra(cyclic_group(3)).algebra)


def test_cosemisimplicity_examples():
    assert is_cosemisimple(group_algebra(cyclic_group(2)))
    assert is_cosemisimple(function_algebra(cyclic_group(3)))


def test_centers():
    assert len(center(group_algebra(cyclic_group(4)).algebra)) == 4
    assert len(center(hamilton())) == 1
    assert center(hamilton()) == [{0: 1}]
    assert len(center(q_plus_q())) == 2
    assert len(center(group_algebra(symmetric_group_3()).algebra)) == 3


def test_central_simple():
    assert is_central_simple(hamilton())
    assert not is_central_simple(q_plus_q())
    assert not is_central_simple(dual_numbers())


# -- morphisms and quotients ------------------------------------------------------------

def test_counit_is_onto_algebra_map():
    H = group_algebra(cyclic_group(2))
    eps = AlgebraMorphism(H.algebra, rationals(), [{0: ONE}, {0: ONE}])
    v = verify_morphism(eps)
    assert v.is_algebra_map and v.is_onto and v.kernel_dim == 1


def test_diagonal_inclusion_not_onto():
    f = AlgebraMorphism(rationals(), q_plus_q(), [{0: ONE, 1: ONE}])
    v = verify_morphism(f)
    assert v.is_algebra_map and not v.is_onto and v.is_injective


def test_non_multiplicative_map_names_pair():
    f = AlgebraMorphism(q_plus_q(), q_plus_q(), [{0: ONE}, {0: ONE}])
    v = verify_morphism(f)
    assert not v.is_algebra_map


def test_quotients():
    Q, pi = quotient_algebra(q_plus_q(), [{1: ONE}])
    assert Q.dim == 1
    v = verify_morphism(pi)
    assert v.is_algebra_map and v.is_onto and v.kernel_dim == 1
    Q, pi = quotient_algebra(dual_numbers(), [{1: ONE}])
    assert Q.dim == 1 and verify_morphism(pi).is_onto


def test_quotient_rejects_non_ideal():
    with pytest.raises(AlgebraError, match="not an ideal"):
        quotient_algebra(upper_triangular_2(), [{0: ONE}])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_quotient_kernel_equals_ideal(n):
    A = truncated_polynomials(n)
    ideal = [{k: ONE} for k in range(1, n)]
    Q, pi = quotient_algebra(A, ideal)
    v = verify_morphism(pi)
    assert v.is_algebra_map and v.is_onto and v.kernel_dim == len(ideal)


def test_composition_of_algebra_maps():
    G = cyclic_group(4)
    A = group_algebra(G).algebra
    Q1, p1 = quotient_algebra(A, [{0: ONE, 2: -ONE}, {1: ONE, 3: -ONE}])
    _, p2 = quotient_algebra(Q1, [{0: ONE, 1: -ONE}])
    v = verify_morphism(p2.compose(p1))
    assert v.is_algebra_map and v.is_onto and v.kernel_dim == 3


# -- centralizers ---------------------------------------------------------------------

def test_centralizer_of_rationals():
    C, _ = centralizer_in_endomorphisms(rationals(), left_regular_representation(rationals()))
    assert C.dim == 1


def test_centralizer_of_quaternions_is_right_multiplication():
    Hq = hamilton()
    rep = left_regular_representation(Hq)
    C, incl = centralizer_in_endomorphisms(Hq, rep)
    assert C.dim == 4
    R = right_multiplication_map(Hq, rep.target)
    v = verify_morphism(R)
    assert v.is_algebra_map and v.is_injective
    assert R.source.mult == opposite(Hq).mult
    from hopfschur.linalg import coordinates_in, rref
    span = rref(incl.columns)
    assert all(coordinates_in(span, c) is not None for c in R.columns)


def test_centralizer_of_q_plus_q():
    A = q_plus_q()
    C, _ = centralizer_in_endomorphisms(A, left_regular_representation(A))
    assert C.dim == 2


# -- base change ------------------------------------------------------------------------

def test_base_change():
    ext = gaussian_ext()
    assert base_change(rationals(), ext).dim == 1
    HL = base_change(group_algebra(cyclic_group(2)), ext)
    assert HL.dim == 2 and HL.base_field is ext.field
    assert verify_hopf(HL).passed


def test_direct_sum_is_semisimple():
    A = direct_sum([rationals(), hamilton(), q_plus_q()])
    assert A.dim == 7 and is_semisimple(A) and len(center(A)) == 4
