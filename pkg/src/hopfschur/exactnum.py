"""Exact arithmetic in Q and in explicitly presented Galois number fields.

Rationals are :class:`fractions.Fraction`.  Polynomials are tuples of
Fractions, lowest degree first, with no trailing zeros (the zero polynomial
is the empty tuple).  A number field is Q[x]/(f) for a monic f, and its
elements are coefficient vectors in the power basis 1, theta, ..., theta^(n-1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class FieldError(ValueError):
    """Raised when a field, element or automorphism fails its contract."""


# ---------------------------------------------------------------------------
# rationals and polynomials

def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot read {x!r} as a rational")


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        p, q = int(p), int(q)
        if q == 0:
            raise ValueError(f"zero denominator in rational {s!r}")
        return Fraction(p, q)
    return Fraction(int(s))


def format_rational(x) -> str:
    x = to_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def poly(coeffs: Iterable) -> tuple:
    c = [to_fraction(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_degree(p: Sequence) -> int:
    return len(p) - 1


def poly_add(p, q):
    n = max(len(p), len(q))
    return poly((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def poly_sub(p, q):
    n = max(len(p), len(q))
    return poly((p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n))


def poly_scale(p, c):
    return poly(a * c for a in p)


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def poly_divmod(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [ZERO] * max(len(p) - dq, 0)
    while len(p) - 1 >= dq and p:
        c = p[-1] / lead
        k = len(p) - 1 - dq
        quot[k] = c
        for i, b in enumerate(q):
            p[k + i] -= c * b
        while p and p[-1] == 0:
            p.pop()
    return poly(quot), poly(p)


def poly_monic(p):
    if not p:
        return p
    return poly_scale(p, 1 / p[-1])


def poly_gcd(p, q):
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return poly_monic(p)


def poly_xgcd(p, q):
    """Return (g, s, t) with s*p + t*q = g monic."""
    r0, r1 = p, q
    s0, s1 = (ONE,), ()
    t0, t1 = (), (ONE,)
    while r1:
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(quo, t1))
    lead = r0[-1]
    return poly_scale(r0, 1 / lead), poly_scale(s0, 1 / lead), poly_scale(t0, 1 / lead)


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_str(p, var="t") -> str:
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = format_rational(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{format_rational(a)}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, abs(n) + 1) if n % d == 0]


def rational_roots(p) -> list[Fraction]:
    """All rational roots of p (rational root theorem on the integer rescaling)."""
    if not p:
        raise FieldError("zero polynomial has every root")
    den = math.lcm(*(c.denominator for c in p))
    ip = [int(c * den) for c in p]
    roots = []
    # strip factors of t
    if ip[0] == 0:
        roots.append(ZERO)
        while ip and ip[0] == 0:
            ip = ip[1:]
    if len(ip) == 1:
        return roots
    for a in _divisors(ip[0]):
        for b in _divisors(ip[-1]):
            for cand in (Fraction(a, b), Fraction(-a, b)):
                if cand not in roots and poly_eval(p, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


# polynomials over F_p as lists of ints, lowest degree first

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, m, p):
    a = _fp_trim([x % p for x in a])
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - dm
        for i, b in enumerate(m):
            a[k + i] = (a[k + i] - c * b) % p
        _fp_trim(a)
    return a


def _fp_mulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fp_mod(out, m, p)


def _fp_powmod(a, e, m, p):
    result = [1]
    base = _fp_mod(a, m, p)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        base = _fp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _fp_gcd(a, b, p):
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def irreducible_mod_p(f, p: int) -> bool:
    """Rabin's test for a monic rational polynomial reduced modulo the prime p."""
    if any(c.denominator % p == 0 for c in f):
        raise FieldError(f"witness prime {p} divides a coefficient denominator")
    fp = [c.numerator * pow(c.denominator, -1, p) % p for c in f]
    n = len(fp) - 1
    if n < 1:
        return False
    x = [0, 1]
    for q in _prime_factors(n):
        h = _fp_powmod(x, p ** (n // q), fp, p)
        diff = _fp_trim([(h[i] if i < len(h) else 0) - (x[i] if i < 2 else 0) for i in range(max(len(h), 2))])
        diff = [c % p for c in diff]
        g = _fp_gcd(fp, diff, p)
        if len(g) > 1:
            return False
    h = _fp_powmod(x, p ** n, fp, p)
    diff = _fp_trim([((h[i] if i < len(h) else 0) - (x[i] if i < 2 else 0)) % p for i in range(max(len(h), 2))])
    return not diff


# ---------------------------------------------------------------------------
# number fields

@dataclass(frozen=True)
class NumberField:
    """Q[t]/(minimal_polynomial); the generator theta is the class of t."""

    minimal_polynomial: tuple
    label: str = field(default="", compare=False)
    irreducibility: str = field(default="asserted", compare=False)

    @property
    def degree(self) -> int:
        return len(self.minimal_polynomial) - 1

    @cached_property
    def _reduction(self):
        # theta^k for k = n .. 2n-2 in the power basis
        n = self.degree
        f = self.minimal_polynomial
        table = []
        cur = [-c for c in f[:-1]]  # theta^n
        for _ in range(max(n - 1, 1)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [ZERO] + cur[:-1]
            if top:
                for i in range(n):
                    cur[i] -= top * f[i]
        return table

    def element(self, coeffs) -> "NFElement":
        c = [to_fraction(a) for a in coeffs]
        if len(c) > self.degree:
            raise FieldError(f"{len(c)} coefficients for a degree-{self.degree} field")
        c += [ZERO] * (self.degree - len(c))
        return NFElement(self, tuple(c))

    def __call__(self, x) -> "NFElement":
        if isinstance(x, NFElement):
            if x.field != self:
                raise FieldError("element belongs to another field")
            return x
        return self.scalar(x)

    def scalar(self, r) -> "NFElement":
        c = [ZERO] * self.degree
        c[0] = to_fraction(r)
        return NFElement(self, tuple(c))

    def zero(self):
        return self.scalar(0)

    def one(self):
        return self.scalar(1)

    def gen(self) -> "NFElement":
        if self.degree == 1:
            return self.scalar(-self.minimal_polynomial[0])
        c = [ZERO] * self.degree
        c[1] = ONE
        return NFElement(self, tuple(c))

    def power_basis(self) -> list["NFElement"]:
        out = []
        for k in range(self.degree):
            c = [ZERO] * self.degree
            c[k] = ONE
            out.append(NFElement(self, tuple(c)))
        return out

    def __repr__(self):
        name = self.label or poly_str(self.minimal_polynomial)
        return f"NumberField({name})"


RATIONALS = NumberField((ZERO, ONE), label="Q", irreducibility="certified")


def nf_create(minimal_polynomial, irreducibility_witness: int | None = None, label: str = "") -> NumberField:
    """Build Q[t]/(f), certifying irreducibility where this is cheap.

    A rational root always rejects f.  With a witness prime p, f must stay
    irreducible modulo p; without one, degree <= 2 is certified directly and
    anything larger is flagged as asserted.
    """
    f = poly(minimal_polynomial)
    if len(f) < 2:
        raise FieldError("minimal polynomial must have degree >= 1")
    if f[-1] != 1:
        raise FieldError(f"minimal polynomial {poly_str(f)} is not monic")
    n = len(f) - 1
    if n > 1:
        roots = rational_roots(f)
        if roots:
            raise FieldError(f"{poly_str(f)} is reducible: rational root {format_rational(roots[0])}")
    if irreducibility_witness is not None:
        if not irreducible_mod_p(f, irreducibility_witness):
            raise FieldError(
                f"{poly_str(f)} is reducible modulo witness prime {irreducibility_witness}")
        status = "certified"
    elif n <= 2:
        status = "certified"
    else:
        status = "asserted"
    return NumberField(f, label=label or poly_str(f), irreducibility=status)


class NFElement:
    """An element of a NumberField in the power basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    # -- helpers
    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("arithmetic between elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, NFElement):
            return self.coeffs == other.coeffs and (other.field is self.field or other.field == self.field)
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.field.zero()
            return NFElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self.field.degree
        a, b = self.coeffs, o.coeffs
        prod = [ZERO] * (2 * n - 1)
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n):
                    bj = b[j]
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:n]
        red = self.field._reduction
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if c:
                row = red[k - n]
                for i in range(n):
                    if row[i]:
                        out[i] += c * row[i]
        return NFElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        if self.is_rational():
            return self.field.scalar(1 / self.coeffs[0])
        g, s, _ = poly_xgcd(poly(self.coeffs), self.field.minimal_polynomial)
        if len(g) != 1:
            raise FieldError("element is a zero divisor: the minimal polynomial is reducible")
        return self.field.element(s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return NFElement(self.field, tuple(a / other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        return f"NFElement({poly_str(poly(self.coeffs), 'θ')} in {self.field!r})"

    def __str__(self):
        return poly_str(poly(self.coeffs), "θ")


def nf_arith(a: NFElement, b: NFElement | None, op: str, exponent: int | None = None) -> NFElement:
    if op == "add":
        return a + _same_field(a, b)
    if op == "mul":
        return a * _same_field(a, b)
    if op == "inv":
        return a.inverse()
    if op == "pow":
        if exponent is None:
            raise ValueError("pow needs an exponent")
        return a ** exponent
    raise ValueError(f"unknown operation {op!r}")


def _same_field(a, b):
    if isinstance(b, NFElement) and b.field != a.field:
        raise FieldError("mismatched fields")
    return b


def scalar_field_apply(g, x):
    """Apply an automorphism to a scalar that may be a plain rational."""
    if isinstance(x, NFElement):
        return g(x)
    return x


# ---------------------------------------------------------------------------
# minimal polynomials and roots of unity

def _power_vectors(x: NFElement, count: int) -> list[tuple]:
    out, cur = [], x.field.one()
    for _ in range(count):
        out.append(cur.coeffs)
        cur = cur * x
    return out


def minimal_polynomial(x: NFElement) -> tuple:
    """Least-degree monic rational polynomial vanishing at x."""
    from .linalg import kernel_basis

    n = x.field.degree
    powers = _power_vectors(x, n + 1)
    for d in range(1, n + 1):
        # columns are x^0..x^d; look for a dependency with nonzero top coefficient
        rows = [{k: powers[k][i] for k in range(d + 1) if powers[k][i]} for i in range(n)]
        ker = kernel_basis(rows, d + 1)
        for v in ker:
            top = v.get(d, ZERO)
            if top:
                return tuple(v.get(k, ZERO) / top for k in range(d + 1))
    raise FieldError("no minimal polynomial found (field degree mismatch)")


def euler_phi(d: int) -> int:
    out = d
    for p in _prime_factors(d):
        out -= out // p
    return out


def is_root_of_unity(x: NFElement) -> int | None:
    """Least d with x^d = 1, or None.

    Only d with phi(d) <= [L:Q] can occur, since a primitive d-th root of unity
    generates a subfield of degree phi(d).
    """
    if x.is_zero():
        raise FieldError("zero is not a unit")
    n = x.field.degree
    bound = 2 * n * n + 2
    cur = x.field.one()
    for d in range(1, bound + 1):
        cur = cur * x
        if euler_phi(d) <= n and cur == 1:
            return d
    return None


# ---------------------------------------------------------------------------
# automorphisms and Galois groups

class FieldAutomorphism:
    """theta -> generator_image, extended Q-linearly and multiplicatively."""

    __slots__ = ("field", "generator_image", "_matrix")

    def __init__(self, field: NumberField, generator_image: NFElement):
        if generator_image.field != field:
            raise FieldError("generator image lies in another field")
        if poly_eval(field.minimal_polynomial, generator_image) != 0:
            raise FieldError(f"{generator_image} is not a root of {poly_str(field.minimal_polynomial)}")
        self.field = field
        self.generator_image = generator_image
        # column k = image of theta^k
        self._matrix = [c.coeffs for c in _iter_powers(generator_image, field.degree)]

    def __call__(self, x):
        if not isinstance(x, NFElement):
            return x
        if x.field != self.field:
            raise FieldError("automorphism applied to an element of another field")
        n = self.field.degree
        out = [ZERO] * n
        for k, c in enumerate(x.coeffs):
            if c:
                col = self._matrix[k]
                for i in range(n):
                    if col[i]:
                        out[i] += c * col[i]
        return NFElement(self.field, tuple(out))

    def matrix(self) -> list[tuple]:
        """Columns: images of the power basis."""
        return list(self._matrix)

    def compose(self, other: "FieldAutomorphism") -> "FieldAutomorphism":
        """self o other: apply other first."""
        return FieldAutomorphism(self.field, self(other.generator_image))

    def __eq__(self, other):
        return isinstance(other, FieldAutomorphism) and self.field == other.field \
            and self.generator_image == other.generator_image

    def __hash__(self):
        return hash(self.generator_image.coeffs)

    def __repr__(self):
        return f"FieldAutomorphism(θ ↦ {self.generator_image})"


def _iter_powers(x, count):
    cur = x.field.one()
    for _ in range(count):
        yield cur
        cur = cur * x


def apply_automorphism(g: FieldAutomorphism, x: NFElement) -> NFElement:
    return g(x)


@dataclass(eq=False)
class GaloisExtension:
    """L/Q with its full automorphism group, indexed 0..n-1.

    ``table[i][j]`` is the index of ``automorphisms[i] o automorphisms[j]``.
    """

    field: NumberField
    automorphisms: list
    identity_index: int
    table: list
    inverse_table: list

    @property
    def degree(self) -> int:
        return self.field.degree

    @property
    def order(self) -> int:
        return len(self.automorphisms)

    def __getitem__(self, i) -> FieldAutomorphism:
        return self.automorphisms[i]

    def mul(self, i, j) -> int:
        return self.table[i][j]

    def inv(self, i) -> int:
        return self.inverse_table[i]

    def __repr__(self):
        return f"GaloisExtension({self.field!r}, order {self.order})"


def galois_group(field: NumberField, generator_images: Sequence) -> GaloisExtension:
    imgs = [field(x) if isinstance(x, NFElement) else field.element(x) for x in generator_images]
    for a in range(len(imgs)):
        for b in range(a):
            if imgs[a] == imgs[b]:
                raise FieldError(f"automorphism images {b} and {a} coincide")
    auts = [FieldAutomorphism(field, x) for x in imgs]
    if len(auts) != field.degree:
        raise FieldError(f"{len(auts)} automorphisms for a degree-{field.degree} field: not Galois as presented")
    index = {a.generator_image.coeffs: i for i, a in enumerate(auts)}
    n = len(auts)
    theta = field.gen()
    ident = index.get(theta.coeffs)
    if ident is None:
        raise FieldError("identity automorphism missing")
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            img = auts[i](auts[j].generator_image)
            k = index.get(img.coeffs)
            if k is None:
                raise FieldError(f"automorphisms not closed under composition ({i} o {j})")
            table[i][j] = k
    inverse = []
    for i in range(n):
        inv = [j for j in range(n) if table[i][j] == ident]
        if len(inv) != 1:
            raise FieldError(f"automorphism {i} has no inverse in the set")
        inverse.append(inv[0])
    return GaloisExtension(field, auts, ident, table, inverse)


# ---------------------------------------------------------------------------
# embeddings and fixed fields

class FieldEmbedding:
    """source -> target, theta_source -> generator_image."""

    def __init__(self, source: NumberField, target: NumberField, generator_image: NFElement):
        if generator_image.field != target:
            raise FieldError("embedding image lies outside the target field")
        if poly_eval(source.minimal_polynomial, generator_image) != 0:
            raise FieldError("source minimal polynomial does not vanish at the embedding image")
        self.source = source
        self.target = target
        self.generator_image = generator_image
        self._cols = [c.coeffs for c in _iter_powers(generator_image, source.degree)]

    def __call__(self, x):
        if not isinstance(x, NFElement):
            return self.target.scalar(x)
        if x.field != self.source:
            raise FieldError("embedding applied to an element of another field")
        out = [ZERO] * self.target.degree
        for k, c in enumerate(x.coeffs):
            if c:
                for i, v in enumerate(self._cols[k]):
                    if v:
                        out[i] += c * v
        return NFElement(self.target, tuple(out))

    def preimage(self, y: NFElement) -> NFElement:
        """The source element mapping to y; raises if y is not in the image."""
        from .linalg import solve_rows

        rows = [{k: self._cols[k][i] for k in range(self.source.degree) if self._cols[k][i]}
                for i in range(self.target.degree)]
        sol = solve_rows(rows, self.source.degree, list(y.coeffs))
        if sol is None:
            raise FieldError(f"{y} is not in the image of the embedding")
        return self.source.element(sol)

    def __repr__(self):
        return f"FieldEmbedding({self.source!r} -> {self.target!r}, θ ↦ {self.generator_image})"


FIXED_FIELD_SEARCH_BOUND = 16


def check_subgroup(ext: GaloisExtension, subgroup) -> tuple:
    sub = tuple(sorted(set(subgroup)))
    if ext.identity_index not in sub:
        raise FieldError("subgroup does not contain the identity")
    s = set(sub)
    for a in sub:
        for b in sub:
            if ext.table[a][b] not in s:
                raise FieldError(f"subgroup not closed: {a}*{b} = {ext.table[a][b]}")
    return sub


def fixed_field(ext: GaloisExtension, subgroup, search_bound: int = FIXED_FIELD_SEARCH_BOUND):
    """Primitive element of L^H by relative traces; returns (field, embedding)."""
    sub = check_subgroup(ext, subgroup)
    L = ext.field
    index = ext.order // len(sub)
    if index == 1:
        return RATIONALS, FieldEmbedding(RATIONALS, L, L.zero())
    theta = L.gen()
    powers = list(_iter_powers(theta, L.degree))
    for c in range(1, search_bound + 1):
        # candidate theta + c'θ^2 + c'^2θ^3 + ... with c' = c - 1
        y = L.zero()
        for a in range(1, L.degree):
            y = y + powers[a] * Fraction((c - 1) ** (a - 1))
        cand = L.zero()
        for h in sub:
            cand = cand + ext[h](y)
        mp = minimal_polynomial(cand)
        if len(mp) - 1 == index:
            F = NumberField(mp, label=poly_str(mp), irreducibility="certified")
            return F, FieldEmbedding(F, L, cand)
    raise FieldError(f"fixed-field primitive element search exhausted its budget of {search_bound} multipliers")


# ---------------------------------------------------------------------------
# serialization

def element_to_json(x) -> list:
    if isinstance(x, NFElement):
        return [format_rational(c) for c in x.coeffs]
    return [format_rational(x)]


def element_from_json(F: NumberField, data) -> NFElement:
    return F.element([parse_rational(s) if isinstance(s, str) else to_fraction(s) for s in data])


def poly_to_json(p) -> list:
    return [format_rational(c) for c in p]


def poly_from_json(data) -> tuple:
    return poly(parse_rational(s) if isinstance(s, str) else s for s in data)


def field_to_json(F: NumberField) -> dict:
    return {"minimal_polynomial": poly_to_json(F.minimal_polynomial), "label": F.label,
            "irreducibility": F.irreducibility}


def field_from_json(data) -> NumberField:
    f = poly_from_json(data["minimal_polynomial"])
    return nf_create(f, data.get("witness_prime"), data.get("label", ""))


def extension_to_json(ext: GaloisExtension) -> dict:
    d = field_to_json(ext.field)
    d["automorphisms"] = [element_to_json(a.generator_image) for a in ext.automorphisms]
    return d


def extension_from_json(data) -> GaloisExtension:
    F = field_from_json(data)
    return galois_group(F, [element_from_json(F, img) for img in data["automorphisms"]])
