"""Finite groups by multiplication table, actions, and the group constructions
used to build forms of function algebras and the crossed-product extension.

Elements are indices 0..n-1; ``table[a][b]`` is the index of ab.  Actions are
per-actor permutations of the acted-upon index set, ``maps[a][s] = a.s``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

from .exactnum import NFElement, is_root_of_unity


class GroupError(ValueError):
    pass


@dataclass(eq=False)
class FiniteGroup:
    table: list
    identity: int
    inverse: list
    labels: list = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, a, b) -> int:
        return self.table[a][b]

    def inv(self, a) -> int:
        return self.inverse[a]

    def power(self, a, k) -> int:
        out = self.identity
        if k < 0:
            a, k = self.inverse[a], -k
        for _ in range(k):
            out = self.table[out][a]
        return out

    def element_order(self, a) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a))

    def is_cyclic(self) -> bool:
        return any(self.element_order(a) == self.order for a in range(self.order))

    def is_subgroup(self, subset) -> bool:
        s = set(subset)
        return self.identity in s and all(self.table[a][b] in s for a in s for b in s)

    def generators(self) -> list[int]:
        """Greedy generating set: add the first element not yet generated."""
        gens, span = [], {self.identity}
        for a in range(self.order):
            if a in span:
                continue
            gens.append(a)
            frontier = list(span)
            span = set(span)
            while frontier:
                x = frontier.pop()
                for g in gens:
                    y = self.table[x][g]
                    if y not in span:
                        span.add(y)
                        frontier.append(y)
        return gens

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def to_json(self) -> dict:
        return {"kind": "group", "order": self.order,
                "table": [x for row in self.table for x in row], "labels": list(self.labels)}


def group_from_table(table, labels=None) -> FiniteGroup:
    n = len(table)
    table = [list(r) for r in table]
    if n == 0 or any(len(r) != n for r in table):
        raise GroupError("group table must be square and nonempty")
    if any(not (0 <= x < n) for r in table for x in r):
        raise GroupError("group table entry out of range")
    for a in range(n):
        ta = table[a]
        for b in range(n):
            ab = ta[b]
            tab = table[ab]
            tb = table[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    raise GroupError(f"associativity fails at ({a}, {b}, {c})")
    ident = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ident:
        raise GroupError("no identity element")
    e = ident[0]
    inverse = []
    for a in range(n):
        inv = [b for b in range(n) if table[a][b] == e and table[b][a] == e]
        if not inv:
            raise GroupError(f"element {a} has no inverse")
        inverse.append(inv[0])
    return FiniteGroup(table, e, inverse, list(labels) if labels else [str(i) for i in range(n)])


def group_from_json(data) -> FiniteGroup:
    n = data["order"]
    flat = data["table"]
    if len(flat) != n * n:
        raise GroupError("flat table length is not order^2")
    return group_from_table([flat[i * n:(i + 1) * n] for i in range(n)], data.get("labels"))


def cyclic_group(n: int) -> FiniteGroup:
    return group_from_table([[(a + b) % n for b in range(n)] for a in range(n)],
                            [str(a) for a in range(n)])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    m = H.order
    table = [[G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(G.order * m)]
             for a in range(G.order * m)]
    labels = [f"({g},{h})" for g in G.labels for h in H.labels]
    return group_from_table(table, labels)


def galois_as_group(ext) -> FiniteGroup:
    labels = [f"g{i}" for i in range(ext.order)]
    return group_from_table(ext.table, labels)


# ---------------------------------------------------------------------------
# actions

@dataclass(eq=False)
class GroupAction:
    group: FiniteGroup
    space: FiniteGroup
    maps: list  # maps[a] is a tuple: s -> a.s

    def act(self, a, s) -> int:
        return self.maps[a][s]

    def to_json(self) -> dict:
        return {"kind": "action", "maps": [list(p) for p in self.maps]}


def verify_action(action: GroupAction, require_automorphisms: bool = True):
    """First violation as (kind, indices), or None."""
    G, T, maps = action.group, action.space, action.maps
    n = T.order
    if len(maps) != G.order:
        return ("count", len(maps))
    for a, p in enumerate(maps):
        if sorted(p) != list(range(n)):
            return ("not a permutation", a)
        if require_automorphisms:
            for s in range(n):
                for t in range(n):
                    if p[T.table[s][t]] != T.table[p[s]][p[t]]:
                        return ("not an automorphism", (a, s, t))
    if list(maps[G.identity]) != list(range(n)):
        return ("identity acts nontrivially", G.identity)
    for a in range(G.order):
        for b in range(G.order):
            ab = maps[G.table[a][b]]
            pa, pb = maps[a], maps[b]
            if any(ab[s] != pa[pb[s]] for s in range(n)):
                return ("not a homomorphism", (a, b))
    return None


def group_action(G: FiniteGroup, T: FiniteGroup, maps) -> GroupAction:
    action = GroupAction(G, T, [tuple(p) for p in maps])
    bad = verify_action(action)
    if bad is not None:
        raise GroupError(f"invalid action: {bad[0]} at {bad[1]}")
    return action


def trivial_action(G: FiniteGroup, T: FiniteGroup) -> GroupAction:
    return group_action(G, T, [tuple(range(T.order))] * G.order)


def left_cosets(G: FiniteGroup, H) -> tuple[list, list]:
    """Left cosets xH (trivial coset first) and the left translation permutations."""
    H = sorted(set(H))
    if not G.is_subgroup(H):
        raise GroupError("not a subgroup")
    seen, cosets = set(), []
    order = [G.identity] + [x for x in range(G.order) if x != G.identity]
    for x in order:
        if x in seen:
            continue
        c = tuple(sorted(G.table[x][h] for h in H))
        seen.update(c)
        cosets.append(c)
    where = {x: k for k, c in enumerate(cosets) for x in c}
    perms = [tuple(where[G.table[g][c[0]]] for c in cosets) for g in range(G.order)]
    return cosets, perms


def regular_left_perms(G: FiniteGroup) -> list:
    """g -> (x -> gx) on the elements of G, i.e. on the cosets of the trivial subgroup."""
    return [tuple(G.table[g][x] for x in range(G.order)) for g in range(G.order)]


def regular_right_perms(G: FiniteGroup) -> list:
    """g -> (x -> x g^-1), a left action of G on itself commuting with left translation."""
    return [tuple(G.table[x][G.inverse[g]] for x in range(G.order)) for g in range(G.order)]


def _bit(t: int, j: int, r: int) -> int:
    return (t >> (r - 1 - j)) & 1


def z2_vector_group(r: int) -> FiniteGroup:
    """(Z/2)^r on bit-strings b_0..b_{r-1} read as binary numbers (bit-lex order)."""
    n = 1 << r
    labels = [format(t, f"0{r}b") if r else "" for t in range(n)]
    return group_from_table([[a ^ b for b in range(n)] for a in range(n)], labels)


def linear_extension(perm, r: int) -> tuple:
    """The Z/2-linear map of (Z/2)^r permuting basis vector j to perm[j]."""
    out = []
    for t in range(1 << r):
        img = 0
        for j in range(r):
            if _bit(t, j, r):
                img |= 1 << (r - 1 - perm[j])
        out.append(img)
    return tuple(out)


def z2_span(actor: FiniteGroup, coset_perms) -> tuple[FiniteGroup, GroupAction]:
    """T = Z/2-span of r cosets, with the coset permutation action extended linearly."""
    r = len(coset_perms[0]) if coset_perms else 0
    for a, p in enumerate(coset_perms):
        if sorted(p) != list(range(r)):
            raise GroupError(f"actor element {a} does not permute the cosets")
    T = z2_vector_group(r)
    maps = [linear_extension(p, r) for p in coset_perms]
    return T, group_action(actor, T, maps)


def basis_vector(j: int, r: int) -> int:
    return 1 << (r - 1 - j)


@dataclass
class Orbit:
    representative: int
    elements: list
    stabilizer: list


def orbits_stabilizers(action: GroupAction) -> list[Orbit]:
    G = action.group
    seen, out = set(), []
    for s in range(action.space.order):
        if s in seen:
            continue
        orb = sorted({action.maps[a][s] for a in range(G.order)})
        seen.update(orb)
        stab = [a for a in range(G.order) if action.maps[a][s] == s]
        if not G.is_subgroup(stab):
            raise GroupError("stabilizer is not a subgroup")
        out.append(Orbit(s, orb, stab))
    return out


# ---------------------------------------------------------------------------
# the extension 1 -> mu -> Ghat -> G -> 1 of a finite cocycle

@dataclass(eq=False)
class GroupExtensionData:
    mu: FiniteGroup
    ghat: FiniteGroup
    projection: list      # Ghat index -> G index
    mu_embedding: list    # mu index -> Ghat index
    scalar_of: list       # mu index -> NFElement
    section: list         # G index -> Ghat index of (1, g)
    g_order: int

    def split(self, x) -> tuple[int, int]:
        """Ghat index -> (mu index, G index)."""
        return divmod(x, self.g_order)

    def index(self, z, g) -> int:
        return z * self.g_order + g


def roots_of_unity_generated(values) -> list:
    """The cyclic group generated by the given roots of unity, as powers of a generator."""
    orders = []
    for v in values:
        d = is_root_of_unity(v)
        if d is None:
            raise GroupError(f"cocycle value {v} is not a root of unity")
        orders.append(d)
    d = math.lcm(*orders) if orders else 1
    F = values[0].field
    closure = [F.one()]
    keys = {F.one().coeffs}
    frontier = list(closure)
    while frontier:
        x = frontier.pop(0)
        for v in values:
            y = x * v
            if y.coeffs not in keys:
                keys.add(y.coeffs)
                closure.append(y)
                frontier.append(y)
    if len(closure) != d:
        raise GroupError(f"values generate {len(closure)} roots of unity, expected {d}")
    gen = next(z for z in closure if is_root_of_unity(z) == d)
    return [gen ** k for k in range(d)]


def extension_group(cocycle) -> GroupExtensionData:
    ext = cocycle.extension
    n = ext.order
    vals = [cocycle.values[a][b] for a in range(n) for b in range(n)]
    mu_elems = roots_of_unity_generated(vals)
    d = len(mu_elems)
    mu_index = {z.coeffs: k for k, z in enumerate(mu_elems)}
    for g in range(n):
        for z in mu_elems:
            if ext[g](z).coeffs not in mu_index:
                raise GroupError("the roots of unity are not Galois-stable")
    mu = cyclic_group(d)
    table = [[0] * (d * n) for _ in range(d * n)]
    for z1, g1, z2, g2 in product(range(d), range(n), range(d), range(n)):
        w = mu_elems[z1] * ext[g1](mu_elems[z2]) * cocycle.values[g1][g2]
        k = mu_index.get(w.coeffs)
        if k is None:
            raise GroupError("product left the roots of unity")
        table[z1 * n + g1][z2 * n + g2] = k * n + ext.table[g1][g2]
    labels = [f"({z},g{g})" for z in range(d) for g in range(n)]
    ghat = group_from_table(table, labels)
    data = GroupExtensionData(mu, ghat, [x % n for x in range(d * n)],
                              [z * n + ext.identity_index for z in range(d)], mu_elems,
                              list(range(n)), n)  # mu index 0 is the scalar 1
    bad = verify_extension(data, ext)
    if bad:
        raise GroupError(bad)
    return data


def verify_extension(data: GroupExtensionData, ext) -> str | None:
    Gh = data.ghat
    n = ext.order
    for a in range(Gh.order):
        for b in range(Gh.order):
            if data.projection[Gh.table[a][b]] != ext.table[data.projection[a]][data.projection[b]]:
                return f"projection is not a homomorphism at ({a}, {b})"
    if sorted(set(data.projection)) != list(range(n)):
        return "projection is not surjective"
    kernel = sorted(x for x in range(Gh.order) if data.projection[x] == ext.identity_index)
    if kernel != sorted(data.mu_embedding):
        return "kernel of the projection differs from mu"
    mu = data.mu
    for a in range(mu.order):
        for b in range(mu.order):
            if data.mu_embedding[mu.table[a][b]] != Gh.table[data.mu_embedding[a]][data.mu_embedding[b]]:
                return f"mu embedding is not a homomorphism at ({a}, {b})"
            if data.scalar_of[mu.table[a][b]] != data.scalar_of[a] * data.scalar_of[b]:
                return f"scalar_of is not multiplicative at ({a}, {b})"
    if len({z.coeffs for z in data.scalar_of}) != mu.order:
        return "scalar_of is not injective"
    if data.section[ext.identity_index] != Gh.identity:
        return "section does not send 1 to the identity"
    if any(data.projection[data.section[g]] != g for g in range(n)):
        return "projection o section is not the identity"
    return None


# ---------------------------------------------------------------------------
# characters of elementary abelian 2-groups and semidirect products

def _popcount(x: int) -> int:
    return bin(x).count("1")


def character_group(T: FiniteGroup):
    """Characters of (Z/2)^r as bit-vectors, with pairing chi_s(t) = (-1)^<s,t>.

    Returns (T_sharp, pairing) where pairing[s][t] is +-1.
    """
    n = T.order
    if n & (n - 1) or any(T.table[a][b] != a ^ b for a in range(n) for b in range(n)):
        raise GroupError("character_group expects a bit-vector group (Z/2)^r")
    r = n.bit_length() - 1
    Tsharp = z2_vector_group(r)
    Tsharp.labels = [f"χ{lab}" for lab in Tsharp.labels]
    pairing = [[(-1) ** _popcount(s & t) for t in range(n)] for s in range(n)]
    for s in range(n):
        for t in range(n):
            for u in range(n):
                if pairing[s][t ^ u] != pairing[s][t] * pairing[s][u]:
                    raise GroupError(f"pairing not multiplicative at ({s}, {t}, {u})")
                if pairing[s ^ u][t] != pairing[s][t] * pairing[u][t]:
                    raise GroupError(f"pairing not multiplicative at ({s}, {u}, {t})")
    for s in range(1, n):
        if all(pairing[s][t] == 1 for t in range(n)):
            raise GroupError(f"pairing degenerate: character {s} is trivial")
    return Tsharp, pairing


def dual_action(action: GroupAction, Tsharp: FiniteGroup, pairing) -> GroupAction:
    """(a.chi)(t) = chi(psi(a^-1) t), found by matching pairing rows."""
    G = action.group
    n = Tsharp.order
    row_of = {tuple(pairing[s]): s for s in range(n)}
    maps = []
    for a in range(G.order):
        ainv = action.maps[G.inverse[a]]
        perm = []
        for s in range(n):
            row = tuple(pairing[s][ainv[t]] for t in range(n))
            if row not in row_of:
                raise GroupError("dual action does not land in the characters")
            perm.append(row_of[row])
        maps.append(tuple(perm))
    return group_action(G, Tsharp, maps)


def semidirect_product_group(actor: FiniteGroup, space: FiniteGroup, action: GroupAction) -> FiniteGroup:
    """Pairs (a, s) at index a*|S| + s with (a1,s1)(a2,s2) = (a1 a2, (a2^-1 . s1) s2)."""
    m = space.order
    n = actor.order * m
    table = [[0] * n for _ in range(n)]
    for a1, s1, a2, s2 in product(range(actor.order), range(m), range(actor.order), range(m)):
        a = actor.table[a1][a2]
        s = space.table[action.maps[actor.inverse[a2]][s1]][s2]
        table[a1 * m + s1][a2 * m + s2] = a * m + s
    labels = [f"({x},{y})" for x in actor.labels for y in space.labels]
    try:
        return group_from_table(table, labels)
    except GroupError as exc:
        raise GroupError(f"semidirect product is not a group ({exc}); the action is inconsistent") from exc
