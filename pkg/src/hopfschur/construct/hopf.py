"""Group algebras, function algebras and the bicrossed product k[T] # kN."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..findim import (AlgebraError, CoalgebraData, HopfAlgebraData, StructureAlgebra,
                      verify_hopf)
from ..groups import FiniteGroup, GroupAction, orbits_stabilizers, verify_action

ONE = Fraction(1)


def group_algebra(N: FiniteGroup, base_field=None) -> HopfAlgebraData:
    n = N.order
    mult = {(a, b): {N.table[a][b]: ONE} for a in range(n) for b in range(n)}
    A = StructureAlgebra(n, mult, {N.identity: ONE}, base_field, list(N.labels))
    C = CoalgebraData([{(a, a): ONE} for a in range(n)], {a: ONE for a in range(n)})
    return HopfAlgebraData(A, C, [{N.inverse[a]: ONE} for a in range(n)])


def function_algebra(T: FiniteGroup, base_field=None) -> HopfAlgebraData:
    """Functions on T in the idempotent basis e_t, with Delta(e_t) = sum_{rs=t} e_r (x) e_s."""
    n = T.order
    mult = {(t, t): {t: ONE} for t in range(n)}
    comult = [dict() for _ in range(n)]
    for r in range(n):
        for s in range(n):
            comult[T.table[r][s]][(r, s)] = ONE
    labels = [f"e[{lab}]" for lab in T.labels]
    A = StructureAlgebra(n, mult, {t: ONE for t in range(n)}, base_field, labels)
    C = CoalgebraData(comult, {T.identity: ONE})
    return HopfAlgebraData(A, C, [{T.inverse[t]: ONE} for t in range(n)])


class BicrossedProduct(HopfAlgebraData):
    """k[T] # kN on the basis e_t (x) n at index t*|N| + n."""

    def __init__(self, algebra, coalgebra, antipode, T, N, psi):
        super().__init__(algebra, coalgebra, antipode)
        self.T, self.N, self.psi = T, N, psi

    def index(self, t, n) -> int:
        return t * self.N.order + n

    def split(self, x) -> tuple[int, int]:
        return divmod(x, self.N.order)


def bicrossed(T: FiniteGroup, N: FiniteGroup, psi: GroupAction, base_field=None,
              verify: bool = True) -> BicrossedProduct:
    """(e_t1 (x) n1)(e_t2 (x) n2) = [t1 = psi(n1) t2] e_t1 (x) n1 n2, tensor coalgebra,
    S(e_t (x) n) = e_{psi(n^-1)(t^-1)} (x) n^-1."""
    if psi.group is not N or psi.space is not T:
        if psi.group.order != N.order or psi.space.order != T.order:
            raise AlgebraError("action does not match the groups")
    bad = verify_action(psi)
    if bad is not None:
        raise AlgebraError(f"psi is not an action by automorphisms: {bad}")
    nT, nN = T.order, N.order
    idx = lambda t, n: t * nN + n  # noqa: E731
    mult = {}
    for t1 in range(nT):
        for n1 in range(nN):
            t2 = psi.maps[N.inverse[n1]][t1]
            for n2 in range(nN):
                mult[(idx(t1, n1), idx(t2, n2))] = {idx(t1, N.table[n1][n2]): ONE}
    unit = {idx(t, N.identity): ONE for t in range(nT)}
    comult = [dict() for _ in range(nT * nN)]
    for r in range(nT):
        for s in range(nT):
            t = T.table[r][s]
            for n in range(nN):
                comult[idx(t, n)][(idx(r, n), idx(s, n))] = ONE
    counit = {idx(T.identity, n): ONE for n in range(nN)}
    antipode = []
    for t in range(nT):
        for n in range(nN):
            ninv = N.inverse[n]
            antipode.append({idx(psi.maps[ninv][T.inverse[t]], ninv): ONE})
    labels = [f"e[{T.labels[t]}]⊗{N.labels[n]}" for t in range(nT) for n in range(nN)]
    A = StructureAlgebra(nT * nN, mult, unit, base_field, labels)
    X = BicrossedProduct(A, CoalgebraData(comult, counit), antipode, T, N, psi)
    if verify:
        report = verify_hopf(X)
        if not report.passed:
            c = report.failures()[0]
            raise AlgebraError(f"bicrossed product fails {c.name} at {c.counterexample}")
    return X


@dataclass
class Block:
    orbit: list
    stabilizer: list
    idempotent: dict
    basis: list  # indices e_t (x) n with t in the orbit
    dim: int


def bicrossed_block_decomposition(X: BicrossedProduct) -> list[Block]:
    """Two-sided ideals cut out by the central idempotents sum_{t in O} e_t (x) 1."""
    A = X.algebra
    N = X.N
    blocks = []
    for orb in orbits_stabilizers(X.psi):
        z = {X.index(t, N.identity): ONE for t in orb.elements}
        if A.mul(z, z) != z:
            raise AlgebraError(f"orbit idempotent for {orb.representative} is not idempotent")
        for i in range(A.dim):
            e = {i: ONE}
            if A.mul(z, e) != A.mul(e, z):
                raise AlgebraError(f"orbit idempotent for {orb.representative} is not central (b_{i})")
        members = set(orb.elements)
        basis = [i for i in range(A.dim) if X.split(i)[0] in members]
        span = set()
        for i in range(A.dim):
            span.update(A.mul({i: ONE}, z))
        if sorted(span) != basis:
            raise AlgebraError("block ideal does not match the orbit support")
        blocks.append(Block(orb.elements, orb.stabilizer, z, basis, len(basis)))
    if sum(b.dim for b in blocks) != A.dim:
        raise AlgebraError("block dimensions do not add up")
    return blocks
