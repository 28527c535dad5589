"""2-cocycles G x G -> L*, crossed products and finitization of cocycle classes."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from ..exactnum import FieldEmbedding, GaloisExtension, NFElement, is_root_of_unity
from ..findim import StructureAlgebra, is_central_simple
from ..verdicts import Report

ONE = Fraction(1)


class CocycleError(ValueError):
    pass


class WitnessError(ValueError):
    pass


@dataclass(eq=False)
class Cocycle:
    extension: GaloisExtension
    values: list  # values[g][h] = alpha(g, h), an element of L
    certificate: Report | None = field(default=None, repr=False)

    def __call__(self, g, h):
        return self.values[g][h]

    @property
    def order(self) -> int:
        return self.extension.order

    def is_finite(self) -> bool:
        return all(is_root_of_unity(x) is not None for row in self.values for x in row)

    def value_orders(self) -> list:
        return [[is_root_of_unity(x) for x in row] for row in self.values]


def _as_field(ext, x):
    L = ext.field
    if isinstance(x, NFElement):
        if x.field != L:
            raise CocycleError("cocycle value lies in another field")
        return x
    return L.scalar(x)


def cocycle_identity_failure(ext: GaloisExtension, values) -> tuple | None:
    """First (g1, g2, g3) with g1(a(g2,g3)) a(g1,g2g3) != a(g1,g2) a(g1g2,g3), else None."""
    n = ext.order
    t = ext.table
    for g1, g2, g3 in product(range(n), repeat=3):
        lhs = ext[g1](values[g2][g3]) * values[g1][t[g2][g3]]
        rhs = values[g1][g2] * values[t[g1][g2]][g3]
        if lhs != rhs:
            return (g1, g2, g3)
    return None


def cocycle_verify(values, ext: GaloisExtension) -> Cocycle:
    n = ext.order
    if len(values) != n or any(len(r) != n for r in values):
        raise CocycleError(f"cocycle table must be {n}x{n}")
    vals = [[_as_field(ext, x) for x in row] for row in values]
    for g, h in product(range(n), repeat=2):
        if not vals[g][h]:
            raise CocycleError(f"cocycle value at ({g}, {h}) is zero")
    bad = cocycle_identity_failure(ext, vals)
    if bad is not None:
        raise CocycleError(f"2-cocycle identity fails at triple {bad}")
    e = ext.identity_index
    if vals[e][e] != 1:
        raise CocycleError(f"cocycle is not normalized: alpha(1,1) = {vals[e][e]}; divide the table by it")
    for g in range(n):
        if vals[e][g] != 1 or vals[g][e] != 1:
            raise CocycleError(f"cocycle is not normalized at {g}")
    return Cocycle(ext, vals)


def coboundary(f, ext: GaloisExtension) -> Cocycle:
    """(df)(g1, g2) = f(g1) g1(f(g2)) f(g1 g2)^-1."""
    n = ext.order
    fs = [_as_field(ext, x) for x in f]
    if len(fs) != n:
        raise CocycleError("one value of f per group element required")
    for g, x in enumerate(fs):
        if not x:
            raise CocycleError(f"f vanishes at {g}")
    if fs[ext.identity_index] != 1:
        raise CocycleError("f(1) must be 1")
    vals = [[fs[g1] * ext[g1](fs[g2]) / fs[ext.table[g1][g2]] for g2 in range(n)] for g1 in range(n)]
    return cocycle_verify(vals, ext)


# ---------------------------------------------------------------------------
# crossed products

def crossed_product_algebra(ext: GaloisExtension, values) -> StructureAlgebra:
    """theta^a U_g at index g*[L:k] + a with x U_g . y U_h = x g(y) a(g,h) U_gh.

    No cocycle check here, so mutated tables can be fed to the associativity test.
    """
    L = ext.field
    d, n = L.degree, ext.order
    powers = L.power_basis()
    moved = [[ext[g](p) for p in powers] for g in range(n)]
    mult = {}
    for g, h in product(range(n), repeat=2):
        gh = ext.table[g][h]
        for a, b in product(range(d), repeat=2):
            z = powers[a] * moved[g][b] * values[g][h]
            m = {gh * d + c: x for c, x in enumerate(z.coeffs) if x}
            if m:
                mult[(g * d + a, h * d + b)] = m
    e = ext.identity_index
    u = 1 / values[e][e]
    u = u if isinstance(u, NFElement) else L.scalar(u)
    unit = {e * d + c: x for c, x in enumerate(u.coeffs) if x}
    labels = []
    for g in range(n):
        for a in range(d):
            x = "" if a == 0 else ("θ" if a == 1 else f"θ^{a}")
            labels.append(f"{x}U{g}" if x else f"U{g}")
    return StructureAlgebra(d * n, mult, unit, None, labels)


@dataclass(eq=False)
class CrossedProduct:
    algebra: StructureAlgebra
    u_basis: list  # index of U_g for each g
    cocycle: Cocycle
    report: Report

    def element(self, x, g) -> dict:
        """x U_g in k-coordinates."""
        d = self.cocycle.extension.degree
        return {g * d + c: v for c, v in enumerate(x.coeffs) if v}

    @property
    def is_central_simple(self) -> bool:
        return self.report["central simple"].passed


def crossed_product(alpha: Cocycle) -> CrossedProduct:
    ext = alpha.extension
    A = crossed_product_algebra(ext, alpha.values)
    report = Report()
    assoc = A.check_associativity()
    report.add("associativity", assoc is None, assoc, anchor="crossed product is associative")
    bad = cocycle_identity_failure(ext, alpha.values)
    report.add("2-cocycle identity", bad is None, bad, anchor="associativity is the 2-cocycle identity")
    unit = A.check_unit()
    report.add("unit", unit is None, unit, anchor="U_1 is the unit")
    report.add("central simple", is_central_simple(A), anchor="crossed products are central simple")
    d = ext.degree
    return CrossedProduct(A, [g * d for g in range(ext.order)], alpha, report)


# ---------------------------------------------------------------------------
# finitization

@dataclass(eq=False)
class FinitizationWitness:
    """Data making alpha cohomologous to a cocycle with root-of-unity values.

    f satisfies df = alpha^m, roots[h] is an m-th root of embed(f(h)) in K, and
    projection sends each automorphism of K to its restriction to L.
    """

    m: int
    f: list
    K: GaloisExtension
    embedding: FieldEmbedding
    roots: list       # indexed by G
    projection: list  # automorphisms of K -> automorphisms of L


def verify_witness(alpha: Cocycle, w: FinitizationWitness) -> Report:
    ext, K, emb = alpha.extension, w.K, w.embedding
    n, N = ext.order, K.order
    report = Report()
    if w.m < 1:
        raise WitnessError("m must be a positive integer")
    fs = [_as_field(ext, x) for x in w.f]
    bad = None
    for g1, g2 in product(range(n), repeat=2):
        df = fs[g1] * ext[g1](fs[g2]) / fs[ext.table[g1][g2]]
        if df != alpha(g1, g2) ** w.m:
            bad = (g1, g2)
            break
    report.add("df = alpha^m", bad is None, bad, anchor="f(g1) g1(f(g2)) f(g1g2)^-1 = alpha(g1,g2)^m")
    bad = next((g for g in range(n) if w.roots[g] ** w.m != emb(fs[g])), None)
    report.add("r_g^m = f(g)", bad is None, bad, anchor="each r_g is an m-th root of f(g) in K")
    report.add("r_1 = 1", w.roots[ext.identity_index] == 1, anchor="the root at the identity is 1")
    pi = w.projection
    bad = None
    if len(pi) != N or sorted(set(pi)) != list(range(n)):
        bad = "surjectivity"
    else:
        for a, b in product(range(N), repeat=2):
            if pi[K.table[a][b]] != ext.table[pi[a]][pi[b]]:
                bad = (a, b)
                break
    report.add("projection is a surjective homomorphism", bad is None, bad,
               anchor="restriction N -> G is onto")
    theta = ext.field.gen()
    bad = next((h for h in range(N) if K[h](emb(theta)) != emb(ext[pi[h]](theta))), None)
    report.add("projection is restriction to L", bad is None, bad,
               anchor="h(embed(l)) = embed(pi(h)(l))")
    return report


def finitize(alpha: Cocycle, w: FinitizationWitness) -> Cocycle:
    """beta(h1,h2) = a(pi h1, pi h2) r_{pi h1}^-1 h1(r_{pi h2}^-1) r_{pi(h1 h2)} over K."""
    wrep = verify_witness(alpha, w)
    if not wrep.passed:
        c = wrep.failures()[0]
        raise WitnessError(f"witness fails {c.anchor} at {c.counterexample}")
    K, emb, pi, r = w.K, w.embedding, w.projection, w.roots
    N = K.order
    rinv = [x.inverse() for x in r]
    beta = [[None] * N for _ in range(N)]
    for h1, h2 in product(range(N), repeat=2):
        g1, g2 = pi[h1], pi[h2]
        beta[h1][h2] = emb(alpha(g1, g2)) * rinv[g1] * K[h1](rinv[g2]) * r[pi[K.table[h1][h2]]]
    report = Report()
    report.extend(wrep)
    bad = None
    for h1, h2 in product(range(N), repeat=2):
        o = is_root_of_unity(beta[h1][h2])
        if o is None or w.m % o:
            bad = (h1, h2)
            break
    if bad is not None:
        raise WitnessError(f"finitized value at {bad} is not a root of unity of order dividing {w.m}")
    report.add("values are roots of unity of order dividing m", True,
               anchor="the finitized cocycle takes root-of-unity values")
    bad = next(((h1, h2) for h1, h2 in product(range(N), repeat=2)
                if beta[h1][h2] ** w.m != 1), None)
    report.add("beta^m = 1", bad is None, bad, anchor="value^m = 1 exactly")
    c = [r[pi[h]] for h in range(N)]
    bad = None
    for h1, h2 in product(range(N), repeat=2):
        lhs = beta[h1][h2] * c[h1] * K[h1](c[h2]) / c[K.table[h1][h2]]
        if lhs != emb(alpha(pi[h1], pi[h2])):
            bad = (h1, h2)
            break
    report.add("beta . dc = inflation of alpha", bad is None, bad,
               anchor="beta is cohomologous to the inflation of alpha")
    out = cocycle_verify(beta, K)
    out.certificate = report
    return out
