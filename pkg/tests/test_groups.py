from itertools import product

import pytest

from hopfschur.construct import cocycle_verify
from hopfschur.groups import (GroupError, character_group, cyclic_group, direct_product,
                              dual_action, extension_group, galois_as_group,
                              group_from_table, left_cosets, orbits_stabilizers,
                              regular_left_perms, semidirect_product_group, trivial_action,
                              z2_span)

from conftest import gaussian_ext
from oracles import naive_orbits


# -- tables ------------------------------------------------------------------------------

def test_trivial_group():
    G = group_from_table([[0]])
    assert G.order == 1 and G.identity == 0


def test_cyclic_four():
    G = group_from_table([[(a + b) % 4 for b in range(4)] for a in range(4)])
    assert G.order == 4 and G.is_cyclic() and G.inverse == [0, 3, 2, 1]


def test_non_associative_table_names_triple():
    with pytest.raises(GroupError, match=r"associativity fails at \(\d+, \d+, \d+\)"):
        group_from_table([[0, 1, 2], [1, 2, 0], [2, 1, 0]])


def test_table_without_inverses():
    with pytest.raises(GroupError):
        group_from_table([[0, 1], [1, 1]])


# -- Z/2-spans of coset spaces --------------------------------------------------------------

def test_span_of_a_single_coset():
    G = cyclic_group(3)
    _, perms = left_cosets(G, range(3))
    T, act = z2_span(G, perms)
    assert T.order == 2
    assert all(p == (0, 1) for p in act.maps)


def test_span_of_z2_acting_on_itself():
    G = cyclic_group(2)
    T, act = z2_span(G, regular_left_perms(G))
    assert T.order == 4
    assert T.labels == ["00", "01", "10", "11"]
    # the nonidentity element swaps the two basis bits: 01 <-> 10
    assert act.maps[1] == (0, 2, 1, 3)


def test_span_through_index_two_quotient():
    G = cyclic_group(4)
    _, perms = left_cosets(G, [0, 2])
    T, act = z2_span(G, perms)
    assert T.order == 4
    assert act.maps[1] == act.maps[3] == (0, 2, 1, 3)
    assert act.maps[2] == (0, 1, 2, 3)


def test_span_rejects_non_permutation():
    with pytest.raises(GroupError, match="does not permute"):
        z2_span(cyclic_group(2), [(0, 1), (0, 0)])


# -- orbits -----------------------------------------------------------------------------------

def test_trivial_action_orbits():
    G, T = cyclic_group(3), cyclic_group(4)
    orbs = orbits_stabilizers(trivial_action(G, T))
    assert [o.elements for o in orbs] == [[0], [1], [2], [3]]
    assert all(o.stabilizer == [0, 1, 2] for o in orbs)


def test_orbits_through_index_two_quotient():
    G = cyclic_group(4)
    _, perms = left_cosets(G, [0, 2])
    _, act = z2_span(G, perms)
    orbs = orbits_stabilizers(act)
    assert [o.elements for o in orbs] == [[0], [1, 2], [3]]
    assert [len(o.stabilizer) for o in orbs] == [4, 2, 4]


def test_regular_action_single_orbit():
    G = cyclic_group(5)
    orbs = orbits_stabilizers(_regular_as_permutation_action(G))
    assert len(orbs) == 1 and orbs[0].stabilizer == [0]


def _regular_as_permutation_action(G):
    # left translation is not by automorphisms, so build the action record directly
    from hopfschur.groups import GroupAction, verify_action

    act = GroupAction(G, G, regular_left_perms(G))
    assert verify_action(act, require_automorphisms=False) is None
    return act


def _all_coset_actions(max_order=6):
    for n in range(1, max_order + 1):
        G = cyclic_group(n)
        for k in range(1, n + 1):
            if n % k == 0:
                H = sorted({(k * j) % n for j in range(n)})
                yield f"Z{n}/<{k}>", G, H
    S3 = _s3()
    for H in ([0], [0, 1], list(range(6))):
        if S3.is_subgroup(H):
            yield f"S3/{H}", S3, H


def _s3():
    from algebras import symmetric_group_3

    return symmetric_group_3()


@pytest.mark.parametrize("name,G,H", list(_all_coset_actions()), ids=lambda x: x if isinstance(x, str) else "")
def test_orbit_stabilizer_law(name, G, H):
    _, perms = left_cosets(G, H)
    if len(perms[0]) > 6:
        pytest.skip("span too large")
    T, act = z2_span(G, perms)
    orbs = orbits_stabilizers(act)
    assert sum(len(o.elements) for o in orbs) == T.order
    for o in orbs:
        assert len(o.elements) * len(o.stabilizer) == G.order
        assert G.is_subgroup(o.stabilizer)
    assert sorted(o.elements for o in orbs) == sorted(naive_orbits(act.maps, T.order))


# -- the extension group ------------------------------------------------------------------------

def _check_extension_laws(data, ext):
    mu, Gh = data.mu, data.ghat
    assert Gh.order == mu.order * ext.order
    for a, b in product(range(mu.order), repeat=2):
        assert data.scalar_of[mu.table[a][b]] == data.scalar_of[a] * data.scalar_of[b]
    assert [data.projection[data.section[g]] for g in range(ext.order)] == list(range(ext.order))
    assert data.scalar_of[0] == 1


def test_trivial_cocycle_gives_direct_product():
    ext = gaussian_ext()
    one = ext.field.one()
    data = extension_group(cocycle_verify([[one, one], [one, one]], ext))
    _check_extension_laws(data, ext)
    assert data.mu.order == 1
    assert data.ghat.table == galois_as_group(ext).table


def test_quaternion_extension_is_cyclic_of_order_four():
    ext = gaussian_ext()
    one = ext.field.one()
    data = extension_group(cocycle_verify([[one, one], [one, -one]], ext))
    _check_extension_laws(data, ext)
    assert data.mu.order == 2 and data.ghat.order == 4
    assert data.ghat.is_cyclic()
    s = data.index(0, 1)
    assert data.ghat.mul(s, s) == data.index(1, 0)
    assert data.scalar_of[1] == -1


def test_finitized_biquadratic_extension_has_order_eight():
    from conftest import config
    from hopfschur.construct import finitize
    from hopfschur.serialize import cocycle_block, extension_block, witness_block

    cfg = config("finitize_biquadratic.json")
    ext = extension_block(cfg["field"], "$")
    alpha = cocycle_verify(cocycle_block(ext, cfg["cocycle"], "$"), ext)
    beta = finitize(alpha, witness_block(ext, cfg["witness"], "$"))
    data = extension_group(beta)
    _check_extension_laws(data, beta.extension)
    assert data.ghat.order == 8


def test_non_root_of_unity_rejected():
    from hopfschur.construct import Cocycle

    ext = gaussian_ext()
    one = ext.field.one()
    with pytest.raises(GroupError, match="not a root of unity"):
        extension_group(Cocycle(ext, [[one, one], [one, -2 * one]]))


# -- characters and semidirect products ------------------------------------------------------------

def test_characters_of_z2():
    T = z2_span(cyclic_group(1), [(0,)])[0]
    Ts, pairing = character_group(T)
    assert Ts.order == 2 and pairing[1][1] == -1 and pairing[0][1] == 1


def _gf2_rank(rows):
    vecs = [int("".join(map(str, r)), 2) for r in rows]
    rank = 0
    for bit in reversed(range(len(rows[0]))):
        pivot = next((v for v in vecs if v >> bit & 1), None)
        if pivot is None:
            continue
        vecs.remove(pivot)
        vecs = [v ^ pivot if v >> bit & 1 else v for v in vecs]
        rank += 1
    return rank


def test_pairing_of_order_four_is_nondegenerate():
    G = cyclic_group(2)
    T, _ = z2_span(G, regular_left_perms(G))
    _, pairing = character_group(T)
    bits = [[(1 - p) // 2 for p in row] for row in pairing]
    assert _gf2_rank(bits) == 2
    for s in range(1, 4):
        assert any(pairing[s][t] == -1 for t in range(4))


def test_characters_reject_cyclic_four():
    with pytest.raises(GroupError):
        character_group(cyclic_group(4))


def test_dual_action_identity():
    G = cyclic_group(4)
    _, perms = left_cosets(G, [0])
    T, act = z2_span(G, perms)
    Ts, pairing = character_group(T)
    dual = dual_action(act, Ts, pairing)
    for a, s, t in product(range(G.order), range(Ts.order), range(T.order)):
        assert pairing[dual.maps[a][s]][t] == pairing[s][act.maps[G.inverse[a]][t]]


def test_semidirect_with_trivial_action_is_direct():
    A, S = cyclic_group(3), cyclic_group(2)
    P = semidirect_product_group(A, S, trivial_action(A, S))
    assert P.table == direct_product(A, S).table


def _is_dihedral_of_order_eight(P):
    if P.order != 8:
        return False
    for r, s in product(range(8), repeat=2):
        if P.element_order(r) != 4 or P.element_order(s) != 2:
            continue
        powers = [P.power(r, k) for k in range(4)]
        if s in powers:
            continue
        if P.mul(P.mul(s, r), s) != P.inverse[r]:
            continue
        elements = powers + [P.mul(s, x) for x in powers]
        if sorted(elements) == list(range(8)):
            return True
    return False


def test_swap_semidirect_is_dihedral():
    G = cyclic_group(2)
    T, act = z2_span(G, regular_left_perms(G))
    P = semidirect_product_group(G, T, act)
    assert not P.is_abelian()
    assert _is_dihedral_of_order_eight(P)
    involutions = sum(1 for x in range(8) if P.element_order(x) == 2)
    assert involutions == 5
