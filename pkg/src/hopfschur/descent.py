"""Semilinear actions on Hopf algebras over L, their invariants over k, and forms of L[T].

An action of G = Gal(L/k) on an L-Hopf algebra of dimension n is stored in
twisted-matrix form: g acts by v -> M_g . g(v), where g(v) applies the field
automorphism to each coordinate.  The group law reads M_gh = M_g . g(M_h).

Invariants are computed over k by writing each L-coordinate in the power
basis of L (real index j*[L:k] + a) and taking the exact joint kernel of
(action(g) - id) over a generating set of G.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import (FieldError, GaloisExtension, NFElement, fixed_field,
                       galois_group, nf_create)
from .findim import (AlgebraError, AlgebraMorphism, CoalgebraData, HopfAlgebraData,
                     StructureAlgebra, base_change, direct_sum, field_algebra, is_cosemisimple,
                     is_semisimple, verify_hopf, verify_morphism)
from .groups import (FiniteGroup, GroupAction, galois_as_group, left_cosets, orbits_stabilizers,
                     verify_action, z2_span, basis_vector)
from .linalg import ExactMatrix, inverse_rows, kernel_basis, rank, vaxpy
from .verdicts import Report

ONE = Fraction(1)


class DescentError(ValueError):
    pass


@dataclass(eq=False)
class LObject:
    """A Hopf algebra over the top field of a Galois extension."""

    extension: GaloisExtension
    hopf: HopfAlgebraData

    @property
    def n(self) -> int:
        return self.hopf.dim

    @property
    def k_dim(self) -> int:
        return self.hopf.dim * self.extension.degree


class SemilinearAction:
    def __init__(self, obj: LObject, maps: list):
        n = obj.n
        for g, M in enumerate(maps):
            if M.nrows != n or M.ncols != n:
                raise DescentError(f"matrix for group element {g} is not {n}x{n}")
        if len(maps) != obj.extension.order:
            raise DescentError("one matrix per Galois automorphism required")
        self.object = obj
        self.maps = list(maps)
        self._cols = [M.columns() for M in maps]

    @property
    def extension(self) -> GaloisExtension:
        return self.object.extension

    def act(self, g: int, v: dict) -> dict:
        aut = self.extension[g]
        cols = self._cols[g]
        out = {}
        for j, x in v.items():
            y = aut(x)
            if y:
                vaxpy(out, y, cols[j])
        return out

    def act_tensor(self, g: int, t: dict) -> dict:
        """(g (x) g) on tensors keyed by (a, b)."""
        aut = self.extension[g]
        cols = self._cols[g]
        out = {}
        for (a, b), x in t.items():
            y = aut(x)
            if not y:
                continue
            for p, u in cols[a].items():
                for q, w in cols[b].items():
                    key = (p, q)
                    nv = out.get(key, 0) + y * u * w
                    if nv:
                        out[key] = nv
                    else:
                        out.pop(key, None)
        return out

    def to_json(self) -> dict:
        return {"kind": "semilinear_action", "matrices": [M.to_json() for M in self.maps]}


def verify_semilinear(action: SemilinearAction) -> Report:
    ext = action.extension
    n = action.object.n
    report = Report()
    ident = action._cols[ext.identity_index]
    bad = next((j for j in range(n) if ident[j] != {j: ONE}), None)
    report.add("identity acts trivially", bad is None, bad,
               anchor="the identity automorphism acts as the identity")
    bad = None
    for g in range(ext.order):
        for h in range(ext.order):
            gh = ext.table[g][h]
            # column j of M_g g(M_h) is g . (column j of M_h)
            for j in range(n):
                if action.act(g, action._cols[h][j]) != action._cols[gh][j]:
                    bad = (g, h)
                    break
            if bad:
                break
        if bad:
            break
    report.add("group law M_gh = M_g g(M_h)", bad is None, bad,
               anchor="semilinear action: (gh).v = g.(h.v)")
    return report


def verify_hopf_semilinear(action: SemilinearAction) -> Report:
    """Compatibility with m, Delta, epsilon, unit and S, exhaustively on basis elements."""
    H = action.object.hopf
    A, C = H.algebra, H.coalgebra
    ext = action.extension
    n = H.dim
    report = Report()
    report.extend(verify_semilinear(action))
    bad = {k: None for k in ("m", "Delta", "epsilon", "u", "S")}
    for g in range(ext.order):
        aut = ext[g]
        gb = action._cols[g]
        if bad["u"] is None and action.act(g, A.unit) != A.unit:
            bad["u"] = g
        for i in range(n):
            if bad["m"] is None:
                for j in range(n):
                    lhs = action.act(g, A.bmul(i, j))
                    if lhs != A.mul(gb[i], gb[j]):
                        bad["m"] = (g, i, j)
                        break
            if bad["Delta"] is None and C.apply(gb[i]) != action.act_tensor(g, C.comult[i]):
                bad["Delta"] = (g, i)
            if bad["epsilon"] is None and C.eps(gb[i]) != aut(C.eps({i: ONE})):
                bad["epsilon"] = (g, i)
            if bad["S"] is None and H.S(gb[i]) != action.act(g, H.antipode[i]):
                bad["S"] = (g, i)
    names = {"m": "commutes with multiplication", "Delta": "commutes with comultiplication",
             "epsilon": "commutes with counit", "u": "fixes the unit", "S": "commutes with antipode"}
    for k in ("m", "Delta", "epsilon", "u", "S"):
        report.add(names[k], bad[k] is None, bad[k],
                   anchor=f"Hopf-semilinear action {names[k]}")
    return report


# ---------------------------------------------------------------------------
# invariants

@dataclass(eq=False)
class Invariants:
    """H^G over k with its basis vectors inside the L-object."""

    hopf: HopfAlgebraData
    vectors: list           # L-coordinates of the k-basis of H^G
    real_vectors: list      # the same vectors realified over k
    coordinates: object = field(repr=False, default=None)  # L-vector -> H coords (or None)
    inverse_columns: list = field(repr=False, default=None)


def realify_matrix_rows(action: SemilinearAction, g: int) -> list[dict]:
    """Rows of (action(g) - id) over k in the real basis theta^a e_j."""
    ext = action.extension
    L = ext.field
    d = L.degree
    aut = ext[g]
    powers = L.power_basis()
    imgs = [aut(p) for p in powers]
    n = action.object.n
    rows = [dict() for _ in range(n * d)]
    cols = action._cols[g]
    for j in range(n):
        for a in range(d):
            c = j * d + a
            for i, m in cols[j].items():
                y = m * imgs[a]
                ys = y.coeffs if isinstance(y, NFElement) else (y,) + (0,) * (d - 1)
                for b, val in enumerate(ys):
                    if val:
                        r = rows[i * d + b]
                        r[c] = r.get(c, 0) + val
            r = rows[c]
            nv = r.get(c, 0) - 1
            if nv:
                r[c] = nv
            else:
                r.pop(c, None)
    return [{k: v for k, v in r.items() if v} for r in rows]


def _to_l_vector(L, real: dict, d: int) -> dict:
    coords = {}
    for idx, x in real.items():
        j, a = divmod(idx, d)
        coords.setdefault(j, [0] * d)[a] = x
    return {j: L.element(c) for j, c in sorted(coords.items())}


def _rational(x, what):
    if isinstance(x, NFElement):
        if not x.is_rational():
            raise DescentError(f"restriction leaves the span: {what} has coefficient {x} outside k")
        return x.rational()
    return Fraction(x)


def invariants(action: SemilinearAction, generators=None, verify: bool = True) -> Invariants:
    ext = action.extension
    L = ext.field
    d = L.degree
    obj = action.object
    n = obj.n
    G = galois_as_group(ext)
    gens = generators if generators is not None else G.generators()
    rows = []
    for g in gens:
        rows.extend(realify_matrix_rows(action, g))
    real = kernel_basis(rows, n * d)
    if len(real) != n:
        raise DescentError(f"invariant space has k-dimension {len(real)}, expected {n}")
    vectors = [_to_l_vector(L, r, d) for r in real]
    vrows = [dict() for _ in range(n)]
    for c, v in enumerate(vectors):
        for j, x in v.items():
            vrows[j][c] = x
    try:
        inv_rows = inverse_rows(vrows, n)
    except Exception as exc:
        raise DescentError("invariant vectors are not an L-basis") from exc
    inv_cols = [dict() for _ in range(n)]
    for i, r in enumerate(inv_rows):
        for j, x in r.items():
            inv_cols[j][i] = x

    def coords(w: dict, what: str) -> dict:
        out = {}
        for j, x in w.items():
            vaxpy(out, x, inv_cols[j])
        return {i: _rational(x, what) for i, x in sorted(out.items()) if x}

    def tensor_coords(t: dict, what: str) -> dict:
        out = {}
        for (a, b), x in t.items():
            for p, u in inv_cols[a].items():
                xu = x * u
                for q, w in inv_cols[b].items():
                    key = (p, q)
                    nv = out.get(key, 0) + xu * w
                    if nv:
                        out[key] = nv
                    else:
                        out.pop(key, None)
        return {k: _rational(x, what) for k, x in sorted(out.items()) if x}

    H = obj.hopf
    A, C = H.algebra, H.coalgebra
    mult = {}
    for i in range(n):
        for j in range(n):
            m = coords(A.mul(vectors[i], vectors[j]), f"multiplication of basis vectors {i}, {j}")
            if m:
                mult[(i, j)] = m
    unit = coords(A.unit, "unit")
    comult = [tensor_coords(C.apply(v), f"comultiplication of basis vector {i}")
              for i, v in enumerate(vectors)]
    counit = {i: _rational(C.eps(v), f"counit of basis vector {i}") for i, v in enumerate(vectors)}
    antipode = [coords(H.S(v), f"antipode of basis vector {i}") for i, v in enumerate(vectors)]
    alg = StructureAlgebra(n, mult, unit, None, [f"h{i}" for i in range(n)])
    Hk = HopfAlgebraData(alg, CoalgebraData(comult, counit), antipode)
    if verify:
        rep = verify_hopf(Hk)
        if not rep.passed:
            c = rep.failures()[0]
            raise DescentError(f"invariants fail {c.name} at {c.counterexample}")

    def to_coords(w: dict):
        try:
            return coords(w, "vector")
        except DescentError:
            return None

    return Invariants(Hk, vectors, real, to_coords, inv_cols)


def speiser_check(action: SemilinearAction, inv: Invariants, drop: int | None = None) -> Report:
    """L-rank of the invariant vectors equals dim_L; drop removes one vector (negative test)."""
    vecs = [v for i, v in enumerate(inv.vectors) if i != drop]
    r = rank([dict(v) for v in vecs])
    n = action.object.n
    report = Report()
    report.add("Speiser: invariants span over L", r == n, None if r == n else {"rank": r, "expected": n},
               anchor="L tensor of the invariants recovers the object", detail=f"rank {r} of {n}")
    report.add("Speiser: k-dimension equals L-dimension", len(inv.vectors) == n,
               anchor="dim_k of invariants equals dim_L of the object")
    return report


# ---------------------------------------------------------------------------
# actions on L[T] from homomorphisms G -> Aut(T)

def trivial_semilinear_action(obj: LObject) -> SemilinearAction:
    n = obj.n
    return SemilinearAction(obj, [ExactMatrix.identity(n, obj.extension.field)] * obj.extension.order)


def action_from_group_map(ext: GaloisExtension, T: FiniteGroup, phi: GroupAction) -> SemilinearAction:
    """g . x e_t = g(x) e_{phi(g) t} on the function algebra L[T]."""
    bad = verify_action(phi)
    if bad is not None:
        raise DescentError(f"group map is not an action by automorphisms: {bad}")
    if phi.group.order != ext.order:
        raise DescentError("acting group does not match the Galois group")
    from .construct.hopf import function_algebra

    obj = LObject(ext, base_change(function_algebra(T), ext))
    n = T.order
    maps = [ExactMatrix.from_columns(n, [{phi.maps[g][t]: ONE} for t in range(n)], ext.field)
            for g in range(ext.order)]
    return SemilinearAction(obj, maps)


def classify_action(action: SemilinearAction, T: FiniteGroup) -> GroupAction:
    """Read the permutation of the idempotents e_t off each M_g."""
    n = T.order
    if action.object.n != n:
        raise DescentError("object dimension differs from |T|")
    maps = []
    for g, cols in enumerate(action._cols):
        perm = []
        for t in range(n):
            col = cols[t]
            if len(col) != 1 or next(iter(col.values())) != 1:
                raise DescentError(f"matrix of element {g} is not a permutation on the idempotents (column {t})")
            perm.append(next(iter(col)))
        if sorted(perm) != list(range(n)):
            raise DescentError(f"matrix of element {g} is not a permutation")
        maps.append(tuple(perm))
    phi = GroupAction(galois_as_group(action.extension), T, maps)
    bad = verify_action(phi)
    if bad is not None:
        raise DescentError(f"recovered map is not an action by automorphisms: {bad}")
    back = action_from_group_map(action.extension, T, phi)
    if back._cols != action._cols:
        raise DescentError("reconstructed action differs from the input")
    return phi


# ---------------------------------------------------------------------------
# decomposition of (L[T])^G into fixed fields

@dataclass
class FormComponent:
    representative: int
    orbit: list
    stabilizer: list
    field: object
    embedding: object

    @property
    def degree(self) -> int:
        return self.field.degree


@dataclass
class FormDecomposition:
    components: list
    morphism: AlgebraMorphism  # direct sum of fields -> invariants
    verdict: object


def form_decomposition(action: SemilinearAction, phi: GroupAction, inv: Invariants) -> FormDecomposition:
    """x in F_i maps to the sum over g in G/stab(t_i) of g(x) e_{phi(g) t_i}."""
    ext = action.extension
    comps = []
    for orb in orbits_stabilizers(phi):
        F, emb = fixed_field(ext, orb.stabilizer)
        comps.append(FormComponent(orb.representative, orb.elements, orb.stabilizer, F, emb))
    columns = []
    for comp in comps:
        reps, seen = [], set()
        for g in range(ext.order):
            t = phi.maps[g][comp.representative]
            if t not in seen:
                seen.add(t)
                reps.append((g, t))
        for x in comp.field.power_basis():
            y = comp.embedding(x)
            vec = {}
            for g, t in reps:
                gy = ext[g](y)
                if gy:
                    vec[t] = gy
            c = inv.coordinates(vec)
            if c is None:
                raise DescentError(f"component at {comp.representative} does not land in the invariants")
            columns.append(c)
    source = direct_sum([field_algebra(c.field) for c in comps],
                        [f"[{c.representative}]" for c in comps])
    f = AlgebraMorphism(source, inv.hopf.algebra, columns)
    verdict = verify_morphism(f)
    if not (verdict.is_algebra_map and verdict.is_bijective):
        raise DescentError(f"decomposition map is not an algebra isomorphism ({verdict.to_json()})")
    return FormDecomposition(comps, f, verdict)


@dataclass(eq=False)
class FieldQuotient:
    hopf: HopfAlgebraData
    morphism: AlgebraMorphism  # onto field_algebra(field)
    field: object
    embedding: object
    T: FiniteGroup
    phi: GroupAction
    action: SemilinearAction
    invariants: Invariants
    report: Report


def field_as_quotient(ext: GaloisExtension, subgroup) -> FieldQuotient:
    """A commutative Hopf algebra over k mapping onto the fixed field of subgroup."""
    G = galois_as_group(ext)
    _, perms = left_cosets(G, subgroup)
    T, phi = z2_span(G, perms)
    action = action_from_group_map(ext, T, phi)
    report = Report()
    report.extend(verify_hopf_semilinear(action))
    inv = invariants(action)
    report.extend(speiser_check(action, inv))
    H = inv.hopf
    r = len(perms[0])
    t0 = basis_vector(0, r)
    F, emb = fixed_field(ext, subgroup)
    target = field_algebra(F)
    cols = []
    for v in inv.vectors:
        x = v.get(t0)
        y = emb.preimage(x) if x is not None else F.zero()
        cols.append({k: c for k, c in enumerate(y.coeffs) if c})
    f = AlgebraMorphism(H.algebra, target, cols)
    verdict = verify_morphism(f)
    report.add("quotient map is an algebra map", verdict.is_algebra_map, verdict.counterexample,
               anchor="evaluation at the trivial-coset idempotent is multiplicative")
    report.add("quotient map is onto the fixed field", verdict.is_onto,
               anchor="the fixed field is a quotient of the invariant Hopf algebra")
    report.add("invariant Hopf algebra is commutative", H.algebra.is_commutative(),
               anchor="invariants of a commutative algebra are commutative")
    report.add("semisimple", is_semisimple(H.algebra), anchor="trace form nondegenerate")
    report.add("cosemisimple", is_cosemisimple(H), anchor="dual trace form nondegenerate")
    return FieldQuotient(H, f, F, emb, T, phi, action, inv, report)


# ---------------------------------------------------------------------------
# quadratic families

def squarefree_part(q) -> int:
    """Squarefree integer s with q = s * (rational square)."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero has no squarefree part")
    n = abs(q.numerator * q.denominator)
    sign = -1 if q < 0 else 1
    out, p = 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
        if n % p == 0:
            out *= p
            n //= p
        p += 1
    return sign * out * n


def quadratic_extension(d: int) -> GaloisExtension:
    """Q(sqrt d) as t^2 - d with automorphisms theta -> +-theta; d squarefree, d != 1."""
    if d in (0, 1) or squarefree_part(d) != d:
        raise FieldError(f"{d} is not a squarefree integer other than 0, 1")
    L = nf_create((Fraction(-d), 0, 1), label=f"Q(sqrt {d})")
    return galois_group(L, [L.gen(), -L.gen()])


def _quadratic_d(ext: GaloisExtension) -> int:
    f = ext.field.minimal_polynomial
    if len(f) != 3 or f[1] != 0 or f[2] != 1 or Fraction(-f[0]).denominator != 1:
        raise FieldError("expected a quadratic extension presented as x^2 - d")
    d = int(-f[0])
    if d in (0, 1) or squarefree_part(d) != d:
        raise FieldError(f"{d} is not squarefree")
    return d


def discriminant(p) -> Fraction:
    if len(p) != 3:
        raise FieldError("discriminant only for quadratic polynomials")
    c, b, a = p
    return Fraction(b * b - 4 * a * c)


@dataclass
class FormsCertificate:
    ds: list
    forms: list            # FieldQuotient per d
    invariants: list       # sorted squarefree discriminants of the quadratic components
    pairwise_distinct: bool
    report: Report


def forms_family_certificate(exts: list) -> FormsCertificate:
    """Certify pairwise nonisomorphism of the forms (L_d[Z_2 G])^G by their quadratic components."""
    ds = [_quadratic_d(e) for e in exts]
    forms, keys = [], []
    report = Report()
    for d, ext in zip(ds, exts):
        fq = field_as_quotient(ext, [ext.identity_index])
        decomp = form_decomposition(fq.action, fq.phi, fq.invariants)
        key = sorted(squarefree_part(discriminant(c.field.minimal_polynomial))
                     for c in decomp.components if c.degree == 2)
        forms.append((fq, decomp))
        keys.append(key)
        report.extend(fq.report, prefix=f"d={d}: ")
        report.add(f"d={d}: dimension 2^|G|", fq.hopf.dim == 2 ** ext.order,
                   anchor="dim of the form is 2^|G|")
    distinct = all(keys[a] != keys[b] for a in range(len(keys)) for b in range(a))
    clash = next(((ds[b], ds[a]) for a in range(len(keys)) for b in range(a) if keys[a] == keys[b]), None)
    report.add("pairwise nonisomorphic", distinct, clash,
               anchor="distinct squarefree discriminants of the quadratic components")
    return FormsCertificate(ds, forms, keys, distinct, report)

