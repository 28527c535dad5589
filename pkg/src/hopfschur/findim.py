"""Finite-dimensional algebras, coalgebras and Hopf algebras by structure constants.

Elements are sparse coordinate dicts ``{basis index: scalar}``.  Multiplication
constants are stored sparsely: ``mult[(i, j)]`` is the product b_i b_j, absent
when zero.  Coproducts are dicts keyed by ``(a, b)`` standing for b_a (x) b_b;
the flattened tensor-square index is ``a * n + b`` wherever one is needed.

Scalars are Fractions over Q, or NFElements when an algebra lives over a
number field.  All checks are exhaustive over basis tuples.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import NFElement, NumberField
from .linalg import (ExactMatrix, coordinates_in, kernel_basis, rank, rref, vaxpy,
                     vclean, vscale)
from .verdicts import Report

ONE = Fraction(1)


class AlgebraError(ValueError):
    pass


def _first(it):
    for x in it:
        return x
    return None


# ---------------------------------------------------------------------------
# algebras

class StructureAlgebra:
    def __init__(self, dim: int, mult: dict, unit: dict, base_field: NumberField | None = None,
                 basis_labels=None):
        self.dim = dim
        self.mult = {k: v for k, v in mult.items() if v}
        self.unit = vclean(unit)
        self.base_field = base_field
        self.basis_labels = list(basis_labels) if basis_labels else [f"b{i}" for i in range(dim)]
        if len(self.basis_labels) != dim:
            raise AlgebraError("label count does not match the dimension")
        self._right_support = None
        self._left_support = None

    def __repr__(self):
        over = self.base_field.label if self.base_field is not None else "Q"
        return f"StructureAlgebra(dim={self.dim} over {over})"

    def basis(self, i) -> dict:
        return {i: ONE}

    def bmul(self, i, j) -> dict:
        return self.mult.get((i, j), {})

    def right_support(self) -> list[list[int]]:
        """right_support()[i]: the j with b_i b_j != 0."""
        if self._right_support is None:
            rs = [[] for _ in range(self.dim)]
            ls = [[] for _ in range(self.dim)]
            for (i, j) in sorted(self.mult):
                rs[i].append(j)
                ls[j].append(i)
            self._right_support, self._left_support = rs, ls
        return self._right_support

    def left_support(self) -> list[list[int]]:
        self.right_support()
        return self._left_support

    def mul(self, x: dict, y: dict) -> dict:
        out = {}
        if len(x) * len(y) > 4 * len(self.mult):
            for (i, j), m in self.mult.items():
                a = x.get(i)
                if a:
                    b = y.get(j)
                    if b:
                        vaxpy(out, a * b, m)
            return out
        for i, a in x.items():
            for j, b in y.items():
                m = self.mult.get((i, j))
                if m:
                    vaxpy(out, a * b, m)
        return out

    def is_commutative(self) -> bool:
        return all(self.bmul(i, j) == self.bmul(j, i) for (i, j) in self.mult)

    def left_mult_matrix(self, x: dict) -> ExactMatrix:
        cols = [self.mul(x, {j: ONE}) for j in range(self.dim)]
        return ExactMatrix.from_columns(self.dim, cols, self.base_field)

    def check_associativity(self):
        """First (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k), or None."""
        rs = self.right_support()
        n = self.dim
        for i in range(n):
            for j in range(n):
                p = self.bmul(i, j)
                ks = set(rs[j])
                for l in p:
                    ks.update(rs[l])
                for k in sorted(ks):
                    lhs = {}
                    for l, c in p.items():
                        m = self.mult.get((l, k))
                        if m:
                            vaxpy(lhs, c, m)
                    rhs = {}
                    for l, c in self.bmul(j, k).items():
                        m = self.mult.get((i, l))
                        if m:
                            vaxpy(rhs, c, m)
                    if lhs != rhs:
                        return (i, j, k)
        return None

    def check_unit(self):
        u = self.unit
        for i in range(self.dim):
            e = {i: ONE}
            if self.mul(u, e) != e or self.mul(e, u) != e:
                return i
        return None

    def check(self) -> Report:
        r = Report()
        a = self.check_associativity()
        r.add("associativity", a is None, a, anchor="(xy)z = x(yz)")
        u = self.check_unit()
        r.add("unit", u is None, u, anchor="1x = x = x1")
        return r


@dataclass
class CoalgebraData:
    comult: list  # comult[i]: {(a, b): c}
    counit: dict  # {i: c}

    def __post_init__(self):
        self.comult = [{k: v for k, v in sorted(d.items()) if v} for d in self.comult]
        self.counit = vclean(self.counit)

    @property
    def dim(self):
        return len(self.comult)

    def apply(self, x: dict) -> dict:
        out = {}
        for i, a in x.items():
            vaxpy(out, a, self.comult[i])
        return out

    def eps(self, x: dict):
        s = 0
        for i, a in x.items():
            c = self.counit.get(i)
            if c:
                s = s + a * c
        return s

    def is_cocommutative(self) -> bool:
        return all(d == {(b, a): c for (a, b), c in d.items()} for d in self.comult)


class HopfAlgebraData:
    def __init__(self, algebra: StructureAlgebra, coalgebra: CoalgebraData, antipode: list):
        if coalgebra.dim != algebra.dim or len(antipode) != algebra.dim:
            raise AlgebraError("algebra, coalgebra and antipode dimensions disagree")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.antipode = [vclean(c) for c in antipode]  # antipode[i] = S(b_i)

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def base_field(self):
        return self.algebra.base_field

    def S(self, x: dict) -> dict:
        out = {}
        for i, a in x.items():
            vaxpy(out, a, self.antipode[i])
        return out

    def antipode_matrix(self) -> ExactMatrix:
        return ExactMatrix.from_columns(self.dim, self.antipode, self.base_field)

    def __repr__(self):
        over = self.base_field.label if self.base_field is not None else "Q"
        return f"HopfAlgebraData(dim={self.dim} over {over})"


# ---------------------------------------------------------------------------
# Hopf axioms

def _tensor_mul(A: StructureAlgebra, s: dict, t: dict) -> dict:
    """Product in A (x) A of tensors keyed by (a, b)."""
    out = {}
    rs = A.right_support()
    t_by_first = defaultdict(list)
    for (c, d), y in t.items():
        t_by_first[c].append((d, y))
    for (a, b), x in s.items():
        for c in rs[a]:
            if c not in t_by_first:
                continue
            m1 = A.mult[(a, c)]
            for d, y in t_by_first[c]:
                m2 = A.mult.get((b, d))
                if not m2:
                    continue
                xy = x * y
                for p, u in m1.items():
                    xyu = xy * u
                    for q, v in m2.items():
                        key = (p, q)
                        nv = out.get(key, 0) + xyu * v
                        if nv:
                            out[key] = nv
                        else:
                            out.pop(key, None)
    return out


def _tensor_apply_left(C: CoalgebraData, t: dict) -> dict:
    """(Delta (x) id) t as a dict keyed by triples."""
    out = {}
    for (a, b), x in t.items():
        for (p, q), y in C.comult[a].items():
            key = (p, q, b)
            nv = out.get(key, 0) + x * y
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out


def _tensor_apply_right(C: CoalgebraData, t: dict) -> dict:
    out = {}
    for (a, b), x in t.items():
        for (p, q), y in C.comult[b].items():
            key = (a, p, q)
            nv = out.get(key, 0) + x * y
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out


def verify_coalgebra(C: CoalgebraData, report: Report | None = None) -> Report:
    r = report if report is not None else Report()
    n = C.dim
    bad = None
    for i in range(n):
        if _tensor_apply_left(C, C.comult[i]) != _tensor_apply_right(C, C.comult[i]):
            bad = i
            break
    r.add("coassociativity", bad is None, bad, anchor="(Delta (x) id) Delta = (id (x) Delta) Delta")
    bad = None
    for i in range(n):
        left, right = {}, {}
        for (a, b), x in C.comult[i].items():
            ea, eb = C.counit.get(a), C.counit.get(b)
            if ea:
                vaxpy(left, x * ea, {b: ONE})
            if eb:
                vaxpy(right, x * eb, {a: ONE})
        if left != {i: ONE} or right != {i: ONE}:
            bad = i
            break
    r.add("counit", bad is None, bad, anchor="(eps (x) id) Delta = id = (id (x) eps) Delta")
    return r


def verify_hopf(H: HopfAlgebraData) -> Report:
    """Exhaustive check of every Hopf algebra axiom on basis elements."""
    A, C = H.algebra, H.coalgebra
    n = H.dim
    r = A.check()
    verify_coalgebra(C, r)

    bad = None
    for i in range(n):
        for j in range(n):
            lhs = C.apply(A.bmul(i, j))
            rhs = _tensor_mul(A, C.comult[i], C.comult[j])
            if lhs != rhs:
                bad = (i, j)
                break
        if bad:
            break
    r.add("comultiplication multiplicative", bad is None, bad, anchor="Delta(xy) = Delta(x) Delta(y)")

    bad = None
    for i in range(n):
        ei = C.counit.get(i, 0)
        for j in range(n):
            if C.eps(A.bmul(i, j)) != ei * C.counit.get(j, 0):
                bad = (i, j)
                break
        if bad:
            break
    r.add("counit multiplicative", bad is None, bad, anchor="eps(xy) = eps(x) eps(y)")

    u = A.unit
    uu = {}
    for a, x in u.items():
        for b, y in u.items():
            uu[(a, b)] = x * y
    r.add("comultiplication unital", C.apply(u) == vclean(uu), None if C.apply(u) == vclean(uu) else "unit",
          anchor="Delta(1) = 1 (x) 1")
    r.add("counit unital", C.eps(u) == 1, None if C.eps(u) == 1 else "unit", anchor="eps(1) = 1")

    bad_l = bad_r = None
    for i in range(n):
        target = vscale(u, C.counit.get(i, 0))
        left, right = {}, {}
        for (a, b), x in C.comult[i].items():
            vaxpy(left, x, A.mul(H.antipode[a], {b: ONE}))
            vaxpy(right, x, A.mul({a: ONE}, H.antipode[b]))
        if bad_l is None and left != target:
            bad_l = i
        if bad_r is None and right != target:
            bad_r = i
    r.add("antipode (S (x) id)", bad_l is None, bad_l, anchor="m (S (x) id) Delta = u eps")
    r.add("antipode (id (x) S)", bad_r is None, bad_r, anchor="m (id (x) S) Delta = u eps")
    return r


# ---------------------------------------------------------------------------
# duals, semisimplicity, centers

def dual_hopf(H: HopfAlgebraData) -> HopfAlgebraData:
    """Dual Hopf algebra in the dual basis f_i (f_i(b_j) = delta_ij)."""
    n = H.dim
    A, C = H.algebra, H.coalgebra
    mult = defaultdict(dict)
    for i, d in enumerate(C.comult):
        for (a, b), x in d.items():
            mult[(a, b)][i] = x
    comult = [dict() for _ in range(n)]
    for (i, j), m in A.mult.items():
        for k, x in m.items():
            comult[k][(i, j)] = x
    antipode = [dict() for _ in range(n)]
    for j, col in enumerate(H.antipode):
        for i, x in col.items():
            antipode[i][j] = x
    labels = [f"{lab}*" for lab in A.basis_labels]
    alg = StructureAlgebra(n, dict(mult), dict(C.counit), A.base_field, labels)
    return HopfAlgebraData(alg, CoalgebraData(comult, dict(A.unit)), antipode)


def trace_form(A: StructureAlgebra) -> ExactMatrix:
    """Gram matrix tr(L_{b_i} L_{b_j}) = tr(L_{b_i b_j}); assumes associativity."""
    n = A.dim
    tr = [0] * n
    for (k, l), m in A.mult.items():
        c = m.get(l)
        if c:
            tr[k] = tr[k] + c
    rows = [{} for _ in range(n)]
    for (i, j), m in A.mult.items():
        s = 0
        for k, c in m.items():
            if tr[k]:
                s = s + c * tr[k]
        if s:
            rows[i][j] = s
    return ExactMatrix(n, n, rows, A.base_field)


def is_semisimple(A: StructureAlgebra) -> bool:
    """Char-0 criterion: the regular trace form is nondegenerate."""
    return trace_form(A).rank() == A.dim


def is_cosemisimple(H: HopfAlgebraData) -> bool:
    return is_semisimple(dual_hopf(H).algebra)


def center(A: StructureAlgebra) -> list[dict]:
    """Basis of the center, as kernel of x -> [x, b_j] over all j."""
    n = A.dim
    rows = defaultdict(dict)
    for (i, j), m in A.mult.items():
        for k, c in m.items():
            key = (j, k)
            rows[key][i] = rows[key].get(i, 0) + c
    for (j, i), m in A.mult.items():
        # the b_j b_i half of [b_i, b_j]
        for k, c in m.items():
            key = (j, k)
            rows[key][i] = rows[key].get(i, 0) - c
    return kernel_basis([vclean(r) for _, r in sorted(rows.items())], n)


def is_central_simple(A: StructureAlgebra) -> bool:
    return is_semisimple(A) and len(center(A)) == 1


# ---------------------------------------------------------------------------
# morphisms

@dataclass
class MorphismVerdict:
    is_algebra_map: bool
    is_onto: bool
    is_injective: bool
    kernel_dim: int
    rank: int
    counterexample: object = None

    @property
    def is_bijective(self):
        return self.is_onto and self.is_injective

    def to_json(self):
        return {"is_algebra_map": self.is_algebra_map, "is_onto": self.is_onto,
                "is_injective": self.is_injective, "kernel_dim": self.kernel_dim,
                "rank": self.rank, "counterexample": list(self.counterexample)
                if isinstance(self.counterexample, tuple) else self.counterexample}


class AlgebraMorphism:
    """Linear map source -> target given by the images of the source basis."""

    def __init__(self, source: StructureAlgebra, target: StructureAlgebra, columns: list):
        if len(columns) != source.dim:
            raise AlgebraError("one image per source basis element required")
        self.source = source
        self.target = target
        self.columns = [vclean(c) for c in columns]

    @property
    def matrix(self) -> ExactMatrix:
        return ExactMatrix.from_columns(self.target.dim, self.columns, self.target.base_field)

    def __call__(self, x: dict) -> dict:
        out = {}
        for i, a in x.items():
            vaxpy(out, a, self.columns[i])
        return out

    def compose(self, first: "AlgebraMorphism") -> "AlgebraMorphism":
        """self o first."""
        if first.target.dim != self.source.dim:
            raise AlgebraError("morphisms are not composable")
        return AlgebraMorphism(first.source, self.target, [self(c) for c in first.columns])

    def __repr__(self):
        return f"AlgebraMorphism({self.source!r} -> {self.target!r})"


def verify_morphism(f: AlgebraMorphism) -> MorphismVerdict:
    S, T = f.source, f.target
    bad = None
    if f(S.unit) != T.unit:
        bad = "unit"
    else:
        for i in range(S.dim):
            fi = f.columns[i]
            for j in range(S.dim):
                if f(S.bmul(i, j)) != T.mul(fi, f.columns[j]):
                    bad = (i, j)
                    break
            if bad is not None:
                break
    rk = f.matrix.rank()
    return MorphismVerdict(bad is None, rk == T.dim, rk == S.dim, S.dim - rk, rk, bad)


def _reduce_mod(R: dict, v: dict) -> dict:
    residual = dict(v)
    for p, row in R.items():
        c = residual.get(p)
        if c:
            vaxpy(residual, -c, row)
    return residual


def quotient_algebra(A: StructureAlgebra, ideal_basis: list):
    """A / I with complement spanned by the non-pivot standard basis vectors."""
    R = rref([vclean(v) for v in ideal_basis])
    for p, v in R.items():
        for j in range(A.dim):
            e = {j: ONE}
            for side, prod in (("right", A.mul(v, e)), ("left", A.mul(e, v))):
                if coordinates_in(R, prod) is None:
                    raise AlgebraError(f"not an ideal: {side} product of ideal vector {p} with b_{j} leaves the span")
    comp = [c for c in range(A.dim) if c not in R]
    pos = {c: k for k, c in enumerate(comp)}

    def proj(x):
        red = _reduce_mod(R, x)
        return {pos[c]: a for c, a in red.items() if a}

    mult = {}
    for a, ca in enumerate(comp):
        for b, cb in enumerate(comp):
            m = proj(A.bmul(ca, cb))
            if m:
                mult[(a, b)] = m
    Q = StructureAlgebra(len(comp), mult, proj(A.unit), A.base_field,
                         [A.basis_labels[c] for c in comp])
    pi = AlgebraMorphism(A, Q, [proj({i: ONE}) for i in range(A.dim)])
    return Q, pi


def subalgebra(A: StructureAlgebra, vectors: list, labels=None):
    """Subalgebra spanned by vectors, on its reduced echelon basis.

    Returns (S, inclusion).  Raises if the span is not closed or misses the unit.
    """
    R = rref([vclean(v) for v in vectors])
    pivots = list(R)
    basis = [R[p] for p in pivots]
    pos = {p: k for k, p in enumerate(pivots)}

    def coords(x, what):
        c = coordinates_in(R, x)
        if c is None:
            raise AlgebraError(f"subspace not closed: {what}")
        return {pos[p]: a for p, a in c.items()}

    mult = {}
    for a, u in enumerate(basis):
        for b, v in enumerate(basis):
            m = coords(A.mul(u, v), f"product of basis vectors {a}, {b}")
            if m:
                mult[(a, b)] = m
    unit = coords(A.unit, "unit")
    S = StructureAlgebra(len(basis), mult, unit, A.base_field, labels)
    return S, AlgebraMorphism(S, A, basis)


def matrix_algebra(m: int, base_field=None) -> StructureAlgebra:
    """M_m: basis E[p,q] at index p*m + q, E[p,q] acting as b_q -> b_p."""
    mult = {}
    for p in range(m):
        for q in range(m):
            for s in range(m):
                mult[(p * m + q, q * m + s)] = {p * m + s: ONE}
    unit = {p * m + p: ONE for p in range(m)}
    labels = [f"E[{p},{q}]" for p in range(m) for q in range(m)]
    return StructureAlgebra(m * m, mult, unit, base_field, labels)


def left_regular_representation(A: StructureAlgebra, End: StructureAlgebra | None = None):
    n = A.dim
    End = End or matrix_algebra(n, A.base_field)
    cols = []
    for i in range(n):
        col = {}
        for q in range(n):
            for p, c in A.bmul(i, q).items():
                col[p * n + q] = c
        cols.append(col)
    return AlgebraMorphism(A, End, cols)


def right_multiplication_map(A: StructureAlgebra, End: StructureAlgebra | None = None):
    """A^op -> End(A), a -> (v -> v a)."""
    n = A.dim
    Aop = opposite(A)
    End = End or matrix_algebra(n, A.base_field)
    cols = []
    for i in range(n):
        col = {}
        for q in range(n):
            for p, c in A.bmul(q, i).items():
                col[p * n + q] = c
        cols.append(col)
    return AlgebraMorphism(Aop, End, cols)


def opposite(A: StructureAlgebra) -> StructureAlgebra:
    return StructureAlgebra(A.dim, {(j, i): m for (i, j), m in A.mult.items()}, A.unit,
                            A.base_field, [f"{l}^op" for l in A.basis_labels])


def centralizer_in_endomorphisms(A: StructureAlgebra, rep: AlgebraMorphism):
    """Commutant of rep(A) inside the endomorphism algebra rep.target.

    Returns (C, inclusion into rep.target).
    """
    v = verify_morphism(rep)
    if not v.is_algebra_map:
        raise AlgebraError(f"representation is not an algebra map at {v.counterexample}")
    E = rep.target
    images = rep.columns
    cols = []
    for e in range(E.dim):
        x = {e: ONE}
        col = {}
        for i, Ri in enumerate(images):
            comm = E.mul(x, Ri)
            vaxpy(comm, -1, E.mul(Ri, x))
            for k, c in comm.items():
                col[(i, k)] = c
        cols.append(col)
    keys = sorted({k for col in cols for k in col})
    kpos = {k: r for r, k in enumerate(keys)}
    rows = [{} for _ in keys]
    for e, col in enumerate(cols):
        for k, c in col.items():
            rows[kpos[k]][e] = c
    ker = kernel_basis(rows, E.dim)
    return subalgebra(E, ker)


def direct_sum(algebras: list, labels_prefix=None) -> StructureAlgebra:
    mult, unit, labels, off = {}, {}, [], 0
    for t, A in enumerate(algebras):
        for (i, j), m in A.mult.items():
            mult[(i + off, j + off)] = {k + off: c for k, c in m.items()}
        for k, c in A.unit.items():
            unit[k + off] = c
        pre = labels_prefix[t] if labels_prefix else f"[{t}]"
        labels += [f"{pre}{l}" for l in A.basis_labels]
        off += A.dim
    return StructureAlgebra(off, mult, unit, algebras[0].base_field if algebras else None, labels)


def field_algebra(F: NumberField) -> StructureAlgebra:
    """A number field as a Q-algebra on its power basis."""
    n = F.degree
    basis = F.power_basis()
    mult = {}
    for i in range(n):
        for j in range(n):
            p = basis[i] * basis[j]
            mult[(i, j)] = {k: c for k, c in enumerate(p.coeffs) if c}
    labels = ["1"] + [f"θ^{k}" if k > 1 else "θ" for k in range(1, n)]
    return StructureAlgebra(n, mult, {0: ONE}, None, labels)


def base_change(obj, ext):
    """Read rational structure constants into the field of ext (or a NumberField)."""
    L = ext.field if hasattr(ext, "field") else ext
    if isinstance(obj, HopfAlgebraData):
        A = base_change(obj.algebra, L)
        return HopfAlgebraData(A, obj.coalgebra, obj.antipode)
    return StructureAlgebra(obj.dim, obj.mult, obj.unit, L, obj.basis_labels)
