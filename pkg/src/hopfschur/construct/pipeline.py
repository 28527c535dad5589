"""From a finite cocycle to a Hopf algebra over k surjecting onto its crossed product.

Stages: extension group -> T = Z_2 G -> bicrossed X -> X_L with the star action
-> invariants H -> split H = H1 + H2 -> B ~ H1 -> crossed product A.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from ..descent import (LObject, SemilinearAction, invariants, speiser_check,
                       verify_hopf_semilinear)
from ..exactnum import GaloisExtension
from ..findim import (AlgebraError, AlgebraMorphism, StructureAlgebra, base_change,
                      centralizer_in_endomorphisms, is_cosemisimple, is_semisimple,
                      left_regular_representation, matrix_algebra, quotient_algebra,
                      right_multiplication_map, verify_hopf, verify_morphism)
from ..groups import (GroupAction, GroupExtensionData, basis_vector, character_group,
                      dual_action, extension_group, galois_as_group, regular_left_perms,
                      regular_right_perms, semidirect_product_group, z2_span)
from ..linalg import ExactMatrix, coordinates_in, inverse_rows, kernel_basis, rref
from ..verdicts import Report
from .cocycles import Cocycle, CrossedProduct, crossed_product
from .hopf import BicrossedProduct, bicrossed, group_algebra

ONE = Fraction(1)


class PipelineError(RuntimeError):
    def __init__(self, stage, message, report=None):
        super().__init__(f"{stage}: {message}")
        self.stage = stage
        self.report = report


# ---------------------------------------------------------------------------
# star action

def star_action(X: BicrossedProduct, ext: GaloisExtension, right: GroupAction) -> SemilinearAction:
    """g * (l e_t (x) h) = g(l) e_{t g^-1} (x) h, with right: t -> t g^-1 on T."""
    XL = LObject(ext, base_change(X, ext))
    n, nN = X.dim, X.N.order
    maps = []
    for g in range(ext.order):
        cols = []
        for x in range(n):
            t, h = divmod(x, nN)
            cols.append({right.maps[g][t] * nN + h: ONE})
        maps.append(ExactMatrix.from_columns(n, cols, ext.field))
    return SemilinearAction(XL, maps)


# ---------------------------------------------------------------------------
# H = H1 + H2

@dataclass(eq=False)
class Split:
    H1: list          # basis vectors of H1 in H-coordinates
    H2: list
    quotient: StructureAlgebra   # H / H2, identified with H1
    projection: AlgebraMorphism  # H -> H / H2
    report: Report


def _support_kernel(inv, positions: set, d: int, n: int) -> list:
    """Vectors of H whose L-coordinates vanish at every index in positions."""
    rows = {}
    for i, rv in enumerate(inv.real_vectors):
        for idx, x in rv.items():
            if idx // d in positions:
                rows.setdefault(idx, {})[i] = x
    return kernel_basis([rows[k] for k in sorted(rows)], n)


def h1_h2_split(H, inv, X: BicrossedProduct, ext: GaloisExtension) -> Split:
    """H1 is supported on e_t with t a basis vector of T (t in G), H2 on the rest."""
    r = ext.order
    in_g = {basis_vector(j, r) for j in range(r)}
    nN = X.N.order
    d = ext.degree
    n = H.dim
    off_g = {t * nN + h for t in range(X.T.order) if t not in in_g for h in range(nN)}
    on_g = {t * nN + h for t in in_g for h in range(nN)}
    H1 = _support_kernel(inv, off_g, d, n)
    H2 = _support_kernel(inv, on_g, d, n)
    A = H.algebra
    report = Report()
    report.add("dim H1 + dim H2 = dim H", len(H1) + len(H2) == n,
               detail=f"{len(H1)} + {len(H2)} vs {n}", anchor="H is the direct sum of H1 and H2")
    bad = next(((a, b) for a, u in enumerate(H1) for b, v in enumerate(H2)
                if A.mul(u, v) or A.mul(v, u)), None)
    report.add("H1 H2 = 0 = H2 H1", bad is None, bad, anchor="the two summands annihilate each other")
    for name, part in (("H1", H1), ("H2", H2)):
        try:
            quotient_algebra(A, part)
            ok, where = True, None
        except AlgebraError as exc:
            ok, where = False, str(exc)
        report.add(f"{name} is a two-sided ideal", ok, where, anchor=f"{name} is a two-sided ideal")
    if not report.passed:
        raise PipelineError("h1_h2_split", report.failures()[0].name, report)
    Q, proj = quotient_algebra(A, H2)
    return Split(H1, H2, Q, proj, report)


# ---------------------------------------------------------------------------
# B, phi and Psi

def b_algebra(ext: GaloisExtension, ghat: GroupExtensionData) -> StructureAlgebra:
    """theta^a (x) g at index g*[L:k] + a, (l1 (x) g1)(l2 (x) g2) = l1 pi(g1)(l2) (x) g1 g2."""
    L = ext.field
    d = L.degree
    Gh = ghat.ghat
    powers = L.power_basis()
    mult = {}
    for g1 in range(Gh.order):
        aut = ext[ghat.projection[g1]]
        moved = [aut(p) for p in powers]
        for g2 in range(Gh.order):
            g12 = Gh.table[g1][g2]
            for a in range(d):
                for b in range(d):
                    z = powers[a] * moved[b]
                    mult[(g1 * d + a, g2 * d + b)] = {g12 * d + c: x for c, x in enumerate(z.coeffs) if x}
    labels = [f"θ^{a}⊗{Gh.labels[g]}" for g in range(Gh.order) for a in range(d)]
    return StructureAlgebra(d * Gh.order, mult, {Gh.identity * d: ONE}, None, labels)


def phi_map(B: StructureAlgebra, split: Split, inv, X: BicrossedProduct,
            ext: GaloisExtension) -> AlgebraMorphism:
    """l (x) g -> sum over G of s(l) e_{s^-1} (x) g, landing in H1 = H / H2."""
    L = ext.field
    d = L.degree
    r = ext.order
    powers = L.power_basis()
    cols = []
    for g in range(X.N.order):
        for a in range(d):
            vec = {}
            for s in range(ext.order):
                t = basis_vector(ext.inverse_table[s], r)
                vec[X.index(t, g)] = ext[s](powers[a])
            c = inv.coordinates(vec)
            if c is None:
                raise PipelineError("phi", f"image of basis element ({a}, {g}) is not invariant")
            cols.append(split.projection(c))
    return AlgebraMorphism(B, split.quotient, cols)


def psi_map(B: StructureAlgebra, A: CrossedProduct, ghat: GroupExtensionData,
            ext: GaloisExtension) -> AlgebraMorphism:
    """theta^a (x) (z, g) -> theta^a z U_g."""
    L = ext.field
    d = L.degree
    powers = L.power_basis()
    cols = []
    for x in range(ghat.ghat.order):
        z, g = ghat.split(x)
        for a in range(d):
            cols.append(A.element(powers[a] * ghat.scalar_of[z], g))
    return AlgebraMorphism(B, A.algebra, cols)


def inverse_morphism(f: AlgebraMorphism) -> AlgebraMorphism:
    n = f.source.dim
    rows = [dict() for _ in range(n)]
    for j, col in enumerate(f.columns):
        for i, x in col.items():
            rows[i][j] = x
    inv = inverse_rows(rows, n)
    cols = [dict() for _ in range(n)]
    for i, row in enumerate(inv):
        for j, x in row.items():
            cols[j][i] = x
    return AlgebraMorphism(f.target, f.source, cols)


# ---------------------------------------------------------------------------
# the whole chain

@dataclass(eq=False)
class PipelineReport:
    ext: GaloisExtension
    cocycle: Cocycle
    ghat: GroupExtensionData = None
    T: object = None
    psi: GroupAction = None
    X: BicrossedProduct = None
    star: SemilinearAction = None
    invariants: object = None
    H: object = None
    split: Split = None
    B: StructureAlgebra = None
    phi: AlgebraMorphism = None
    A: CrossedProduct = None
    psi_map: AlgebraMorphism = None
    composite: AlgebraMorphism = None
    report: Report = field(default_factory=Report)
    dims: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.report.passed


def _verdict(report: Report, prefix: str, v, anchor: str, onto=False, bijective=False):
    report.add(f"{prefix}: algebra map", v.is_algebra_map, v.counterexample, anchor=anchor)
    if onto:
        report.add(f"{prefix}: onto", v.is_onto, anchor=anchor, detail=f"rank {v.rank}")
    if bijective:
        report.add(f"{prefix}: bijective", v.is_bijective, anchor=anchor, detail=f"rank {v.rank}")


def pipeline(ext: GaloisExtension, alpha: Cocycle, max_dim: int | None = None) -> PipelineReport:
    out = PipelineReport(ext, alpha)
    rep = out.report
    clock = time.perf_counter

    def stage(name):
        out.timings[name] = clock()

    def done(name):
        out.timings[name] = round(clock() - out.timings[name], 6)

    stage("extension")
    ghat = extension_group(alpha)
    G = galois_as_group(ext)
    out.ghat = ghat
    rep.add("extension group", True, anchor="1 -> mu -> Ghat -> G -> 1 is exact",
            detail=f"|mu| = {ghat.mu.order}, |Ghat| = {ghat.ghat.order}")
    done("extension")

    stage("bicrossed")
    T, left = z2_span(G, regular_left_perms(G))
    _, right = z2_span(G, regular_right_perms(G))
    psi = GroupAction(ghat.ghat, T, [left.maps[ghat.projection[x]] for x in range(ghat.ghat.order)])
    out.T, out.psi = T, psi
    dim_X = T.order * ghat.ghat.order
    if max_dim is not None and dim_X > max_dim:
        raise PipelineError("bicrossed", f"dimension {dim_X} exceeds the guardrail {max_dim}")
    X = bicrossed(T, ghat.ghat, psi)
    out.X = X
    rep.extend(verify_hopf(X), prefix="X: ")
    done("bicrossed")

    stage("star action")
    star = star_action(X, ext, right)
    out.star = star
    rep.extend(verify_hopf_semilinear(star), prefix="star action: ")
    done("star action")
    if not rep.passed:
        raise PipelineError("star action", rep.failures()[0].name, rep)

    stage("invariants")
    inv = invariants(star, verify=False)
    H = inv.hopf
    out.invariants, out.H = inv, H
    rep.extend(speiser_check(star, inv))
    rep.extend(verify_hopf(H), prefix="H: ")
    rep.add("H semisimple", is_semisimple(H.algebra), anchor="trace form of H is nondegenerate")
    rep.add("H cosemisimple", is_cosemisimple(H), anchor="trace form of the dual of H is nondegenerate")
    done("invariants")

    stage("split")
    split = h1_h2_split(H, inv, X, ext)
    out.split = split
    rep.extend(split.report, prefix="split: ")
    done("split")

    stage("maps")
    B = b_algebra(ext, ghat)
    out.B = B
    assoc = B.check_associativity()
    rep.add("B associative", assoc is None, assoc, anchor="semidirect product of L and Ghat is associative")
    phi = phi_map(B, split, inv, X, ext)
    out.phi = phi
    _verdict(rep, "phi", verify_morphism(phi), "B -> H1 is an isomorphism of algebras", bijective=True)
    A = crossed_product(alpha)
    out.A = A
    rep.extend(A.report, prefix="A: ")
    Psi = psi_map(B, A, ghat, ext)
    out.psi_map = Psi
    vPsi = verify_morphism(Psi)
    _verdict(rep, "Psi", vPsi, "B -> A is an onto algebra map", onto=True)
    rep.add("Psi: kernel dimension", vPsi.kernel_dim == B.dim - A.algebra.dim,
            detail=f"{vPsi.kernel_dim}", anchor="kernel of Psi has dim B - dim A")
    if not rep.passed:
        raise PipelineError("maps", rep.failures()[0].name, rep)
    composite = Psi.compose(inverse_morphism(phi)).compose(split.projection)
    out.composite = composite
    vc = verify_morphism(composite)
    _verdict(rep, "composite H -> A", vc, "A is a quotient of the Hopf algebra H", onto=True)
    done("maps")

    out.dims = {"L": ext.degree, "G": ext.order, "mu": ghat.mu.order, "Ghat": ghat.ghat.order,
                "T": T.order, "X": X.dim, "H": H.dim, "H1": len(split.H1), "H2": len(split.H2),
                "B": B.dim, "A": A.algebra.dim, "composite_rank": vc.rank}
    return out


# ---------------------------------------------------------------------------
# checks on a finished run

@dataclass(eq=False)
class FormCheck:
    group: object
    group_hopf: object
    morphism: AlgebraMorphism
    report: Report


def group_algebra_form_check(X: BicrossedProduct) -> FormCheck:
    """X ~ k[Ghat x| T#] via (a, chi) -> E_{a.chi} (x) a, where E_chi = sum_t chi(t) e_t."""
    T, N, psi = X.T, X.N, X.psi
    Tsharp, pairing = character_group(T)
    dual = dual_action(psi, Tsharp, pairing)
    Gamma = semidirect_product_group(N, Tsharp, dual)
    kG = group_algebra(Gamma)
    m = Tsharp.order
    cols = []
    for x in range(Gamma.order):
        a, s = divmod(x, m)
        chi = dual.maps[a][s]
        cols.append({X.index(t, a): Fraction(pairing[chi][t]) for t in range(T.order)})
    f = AlgebraMorphism(kG.algebra, X.algebra, cols)
    v = verify_morphism(f)
    report = Report()
    report.add("algebra map", v.is_algebra_map, v.counterexample, anchor="characters times group elements multiply as the semidirect product")
    report.add("bijective", v.is_bijective, anchor="characters of T span k[T]", detail=f"rank {v.rank}")
    bad = None
    for x in range(Gamma.order):
        fx = cols[x]
        delta = X.coalgebra.apply(fx)
        expect = {}
        for i, p in fx.items():
            for j, q in fx.items():
                expect[(i, j)] = p * q
        if delta != expect:
            bad = ("comultiplication", x)
        elif X.coalgebra.eps(fx) != 1:
            bad = ("counit", x)
        elif X.S(fx) != cols[Gamma.inverse[x]]:
            bad = ("antipode", x)
        if bad:
            break
    report.add("coalgebra map and antipode", bad is None, bad, anchor="group-likes map to group-likes")
    return FormCheck(Gamma, kG, f, report)


def endomorphism_ring_check(run: PipelineReport) -> Report:
    """A^op -> End_H(A) by right multiplication is a bijective algebra map."""
    A = run.A.algebra
    n = A.dim
    End = matrix_algebra(n)
    rho = left_regular_representation(A, End).compose(run.composite)
    C, incl = centralizer_in_endomorphisms(run.H.algebra, rho)
    R = right_multiplication_map(A, End)
    report = Report()
    v = verify_morphism(R)
    report.add("right multiplication is an algebra map", v.is_algebra_map, v.counterexample,
               anchor="A^op acts on A by right multiplication")
    report.add("right multiplication is injective", v.is_injective, anchor="A^op embeds in End(A)")
    Rc = rref(incl.columns)
    bad = next((i for i, c in enumerate(R.columns) if coordinates_in(Rc, c) is None), None)
    report.add("right multiplications commute with H", bad is None, bad,
               anchor="right multiplications are H-linear")
    report.add("End_H(A) has dimension dim A", C.dim == n, detail=f"{C.dim} vs {n}",
               anchor="End_H(A) is exactly the right multiplications")
    return report
