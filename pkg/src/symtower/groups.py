"""Finite permutation groups and pointed G-sets.

Permutations are tuples ``p`` of images of ``0..n-1``; ``compose(p, q)`` is
``p`` after ``q``.  A permutation acts on a tuple by moving the entry in
position ``k`` to position ``p[k]``.  Groups are stored by their full element
lists, so every statement about them is checked by exhaustion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial

BASE = "*"
MAX_DEGREE = 10
MAX_ADJUNCTION_CARRIER = 6

__all__ = [
    "BASE",
    "PermGroup",
    "GSet",
    "EmbeddingSpec",
    "compose",
    "inverse",
    "identity",
    "permute",
    "transposition",
    "enumerate_group",
    "symmetric_group",
    "orbit_quotient",
    "cor",
    "res",
    "equivariant_maps",
    "adjunction_check",
    "find_equivariant_bijection",
    "check_equivariant_bijection",
    "perm_to_oneline",
    "perm_from_oneline",
]


def identity(n):
    return tuple(range(n))


def compose(p, q):
    """``p o q``."""
    return tuple(p[i] for i in q)


def inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def permute(p, seq):
    """Move ``seq[k]`` to position ``p[k]``; a left action on tuples."""
    out = [None] * len(seq)
    for k, v in enumerate(seq):
        out[p[k]] = v
    return tuple(out)


def transposition(n, i, j):
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def perm_to_oneline(p):
    return [v + 1 for v in p]


def perm_from_oneline(values):
    p = tuple(int(v) - 1 for v in values)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {values!r}")
    return p


class PermGroup:
    """A subgroup of the symmetric group on ``degree`` letters."""

    def __init__(self, degree, generators, elements):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self._set = frozenset(self.elements)

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return identity(self.degree)

    def __contains__(self, p):
        return p in self._set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def is_subgroup_of(self, other):
        return self.degree == other.degree and self._set <= other._set

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.degree == other.degree and self._set == other._set

    def __hash__(self):
        return hash((self.degree, self._set))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"


def enumerate_group(generators, degree=None):
    """Close a generator list under composition."""
    generators = [tuple(g) for g in generators]
    if degree is None:
        if not generators:
            raise ValueError("degree required for an empty generator list")
        degree = len(generators[0])
    if degree > MAX_DEGREE:
        raise ValueError(f"degree {degree} exceeds the cap {MAX_DEGREE}")
    for g in generators:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise ValueError(f"not a permutation of degree {degree}: {g}")
    e = identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for h in frontier:
            for g in generators:
                x = compose(g, h)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    if factorial(degree) % len(seen):
        raise AssertionError("group order does not divide n!")
    return PermGroup(degree, generators, seen)


def symmetric_group(n):
    gens = [transposition(n, i, i + 1) for i in range(n - 1)]
    return enumerate_group(gens, n)


@dataclass(frozen=True)
class EmbeddingSpec:
    """A named subgroup embedding into a symmetric group.

    ``young(a, b, ...)``: the block product of symmetric groups on
    consecutive blocks of sizes ``a, b, ...``.
    ``block_shuffle(p, n, degree)``: Sigma_p permuting the first ``p``
    blocks of ``n`` consecutive letters.
    ``tail(m, k)``: Sigma_k permuting the last ``k`` of ``m`` letters.
    ``product(specs)``: the subgroup generated by several commuting specs.
    """

    kind: str
    params: tuple

    @staticmethod
    def young(*blocks):
        return EmbeddingSpec("young", tuple(blocks))

    @staticmethod
    def block_shuffle(p, n, degree=None):
        return EmbeddingSpec("block_shuffle", (p, n, p * n if degree is None else degree))

    @staticmethod
    def tail(m, k):
        if not 0 <= k <= m:
            raise ValueError("tail size out of range")
        return EmbeddingSpec("tail", (m, k))

    @staticmethod
    def product(*specs):
        degrees = {s.degree for s in specs}
        if len(degrees) != 1:
            raise ValueError("factors must embed into the same symmetric group")
        return EmbeddingSpec("product", tuple(specs))

    @property
    def degree(self):
        if self.kind == "young":
            return sum(self.params)
        if self.kind == "block_shuffle":
            return self.params[2]
        if self.kind == "tail":
            return self.params[0]
        return self.params[0].degree

    @property
    def expected_order(self):
        if self.kind == "young":
            out = 1
            for b in self.params:
                out *= factorial(b)
            return out
        if self.kind == "block_shuffle":
            return factorial(self.params[0])
        if self.kind == "tail":
            return factorial(self.params[1])
        out = 1
        for s in self.params:
            out *= s.expected_order
        return out

    def generators(self):
        n = self.degree
        if self.kind == "young":
            gens, start = [], 0
            for b in self.params:
                gens += [transposition(n, start + i, start + i + 1) for i in range(b - 1)]
                start += b
            return gens
        if self.kind == "block_shuffle":
            p, size, _ = self.params
            if p * size > n:
                raise ValueError("blocks do not fit in the degree")
            gens = []
            for b in range(p - 1):
                g = list(range(n))
                for k in range(size):
                    g[b * size + k] = (b + 1) * size + k
                    g[(b + 1) * size + k] = b * size + k
                gens.append(tuple(g))
            return gens
        if self.kind == "tail":
            m, k = self.params
            return [transposition(m, i, i + 1) for i in range(m - k, m - 1)]
        return [g for s in self.params for g in s.generators()]

    def group(self):
        G = enumerate_group(self.generators(), self.degree)
        if G.order != self.expected_order:
            raise ValueError(f"{self.kind}{self.params}: image is not of the stated order")
        return G

    def to_record(self):
        if self.kind == "product":
            return {"type": "product", "factors": [s.to_record() for s in self.params]}
        keys = {
            "young": ["blocks"],
            "block_shuffle": ["p", "n", "degree"],
            "tail": ["m", "k"],
        }[self.kind]
        if self.kind == "young":
            return {"type": "young", "blocks": list(self.params)}
        return {"type": self.kind, **dict(zip(keys, self.params))}


class GSet:
    """A finite pointed set with a left action of a permutation group.

    ``elements[0]`` is the basepoint; the other elements are kept sorted.
    ``act(g, x)`` must be defined for every group element and carrier
    element.
    """

    def __init__(self, group, elements, act, basepoint=BASE):
        others = sorted(e for e in elements if e != basepoint)
        self.group = group
        self.basepoint = basepoint
        self.elements = (basepoint,) + tuple(others)
        self._act = act
        self._set = frozenset(self.elements)

    def act(self, g, x):
        # the basepoint is fixed by construction
        if x == self.basepoint:
            return x
        return self._act(g, x)

    @property
    def reduced_size(self):
        return len(self.elements) - 1

    def __contains__(self, x):
        return x in self._set

    def validate(self):
        G = self.group
        e = G.identity
        for x in self.elements:
            if self.act(e, x) != x:
                raise ValueError(f"identity moves {x!r}")
            for g in G.generators:
                y = self.act(g, x)
                if y not in self._set:
                    raise ValueError(f"action leaves the carrier: {g} . {x!r}")
                for h in G.elements:
                    if self.act(g, self.act(h, x)) != self.act(compose(g, h), x):
                        raise ValueError("action is not associative")
        return True

    def orbits(self):
        """Orbits of the non-base elements, each sorted, in order of minimum."""
        seen = set()
        out = []
        for x in self.elements[1:]:
            if x in seen:
                continue
            orb = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for g in self.group.generators:
                    z = self.act(g, y)
                    if z not in orb:
                        orb.add(z)
                        stack.append(z)
            seen |= orb
            out.append(sorted(orb))
        return out

    def stabilizer(self, x):
        return frozenset(g for g in self.group.elements if self.act(g, x) == x)

    def __repr__(self):
        return f"GSet(group={self.group!r}, reduced_size={self.reduced_size})"


def orbit_quotient(A):
    """Orbit set of a G-set with its projection.

    Returns ``(elements, projection)``: the basepoint followed by the
    lexicographically minimal representative of each orbit, and a dict
    sending every element to its orbit representative.
    """
    proj = {A.basepoint: A.basepoint}
    reps = [A.basepoint]
    for orb in A.orbits():
        rep = orb[0]
        reps.append(rep)
        for y in orb:
            proj[y] = rep
    return reps, proj


def res(A, H):
    """Restrict the action of ``A`` to a subgroup ``H``."""
    if not H.is_subgroup_of(A.group):
        raise ValueError("not a subgroup")
    return GSet(H, A.elements, A._act, A.basepoint)


def cor(G, H, X):
    """Corestriction (induction) of an H-set to G.

    The carrier is the H-orbit set of ``G x X`` under
    ``h . (g, x) = (g h^-1, h x)`` with all ``(g, *)`` collapsed; each class
    is represented by its lexicographically minimal pair.  G acts by left
    multiplication on the first coordinate.
    """
    if isinstance(H, EmbeddingSpec):
        H = H.group()
    if not H.is_subgroup_of(G):
        raise ValueError("embedding not a subgroup")
    if X.group != H:
        raise ValueError("X must be an H-set")
    hinv = [(h, inverse(h)) for h in H.elements]
    canon = {}
    for x in X.elements[1:]:
        for g in G.elements:
            if (g, x) in canon:
                continue
            cls = [(compose(g, hi), X.act(h, x)) for h, hi in hinv]
            rep = min(cls)
            for c in cls:
                canon[c] = rep
    elements = sorted(set(canon.values()))

    def act(k, gx):
        g, x = gx
        return canon[(compose(k, g), x)]

    out = GSet(G, elements, act)
    out.canon = canon
    return out


def equivariant_maps(A, B):
    """All pointed equivariant maps ``A -> B`` (dicts), by backtracking.

    A map is fixed by the images of orbit representatives; the image of a
    representative must be fixed by its stabilizer.
    """
    if A.group != B.group:
        raise ValueError("G-sets over different groups")
    orbits = A.orbits()
    reps = [orb[0] for orb in orbits]
    choices = []
    for a in reps:
        stab = A.stabilizer(a)
        choices.append([b for b in B.elements if all(B.act(g, b) == b for g in stab)])
    maps = []
    for pick in product(*choices):
        phi = {A.basepoint: B.basepoint}
        for a, b in zip(reps, pick):
            for g in A.group.elements:
                phi[A.act(g, a)] = B.act(g, b)
        maps.append(phi)
    return maps


def _is_equivariant(phi, A, B):
    return all(phi[A.act(g, x)] == B.act(g, phi[x]) for g in A.group.generators for x in A.elements)


def _freeze(phi):
    return tuple(sorted(phi.items(), key=lambda kv: repr(kv[0])))


@dataclass
class AdjunctionReport:
    left_count: int
    right_count: int
    bijective: bool
    witness: list

    @property
    def passed(self):
        return self.bijective and self.left_count == self.right_count


def adjunction_check(G, H, X, Y):
    """Exhaustively compare ``Hom_G(cor X, Y)`` and ``Hom_H(X, res Y)``.

    The bijection sends ``phi`` to ``x -> phi[e, x]`` and ``psi`` back to
    ``[g, x] -> g . psi(x)``; both round trips are checked on every map.
    """
    if isinstance(H, EmbeddingSpec):
        H = H.group()
    for name, S in (("X", X), ("Y", Y)):
        if S.reduced_size > MAX_ADJUNCTION_CARRIER:
            raise ValueError(f"{name} carrier exceeds the cap {MAX_ADJUNCTION_CARRIER}")
    C = cor(G, H, X)
    R = res(Y, H)
    left = equivariant_maps(C, Y)
    right = equivariant_maps(X, R)
    e = G.identity

    def unit(x):
        return x if x == X.basepoint else C.canon[(e, x)]

    def to_right(phi):
        return {x: phi[unit(x)] for x in X.elements}

    def to_left(psi):
        out = {C.basepoint: Y.basepoint}
        for g, x in C.elements[1:]:
            out[(g, x)] = Y.act(g, psi[x])
        return out

    left_keys = {_freeze(p) for p in left}
    right_keys = {_freeze(p) for p in right}
    ok = len(left_keys) == len(left) and len(right_keys) == len(right)
    witness = []
    for phi in left:
        psi = to_right(phi)
        ok &= _freeze(psi) in right_keys and _is_equivariant(psi, X, R)
        ok &= _freeze(to_left(psi)) == _freeze(phi)
        witness.append((_freeze(phi), _freeze(psi)))
    for psi in right:
        phi = to_left(psi)
        ok &= _freeze(phi) in left_keys and _is_equivariant(phi, C, Y)
        ok &= _freeze(to_right(phi)) == _freeze(psi)
    return AdjunctionReport(len(left), len(right), bool(ok), witness)


def find_equivariant_bijection(A, B):
    """An equivariant pointed bijection ``A -> B``, or ``None``.

    Orbits of ``A`` are matched greedily with unused orbits of ``B`` that
    contain a point with exactly the same stabilizer.
    """
    if A.group != B.group or A.reduced_size != B.reduced_size:
        return None
    G = A.group
    b_orbits = B.orbits()
    used = [False] * len(b_orbits)
    phi = {A.basepoint: B.basepoint}
    for orb in A.orbits():
        a = orb[0]
        stab = A.stabilizer(a)
        match = None
        for idx, borb in enumerate(b_orbits):
            if used[idx] or len(borb) != len(orb):
                continue
            for b in borb:
                if B.stabilizer(b) == stab:
                    match = (idx, b)
                    break
            if match:
                break
        if match is None:
            return None
        used[match[0]] = True
        for g in G.elements:
            phi[A.act(g, a)] = B.act(g, match[1])
    return phi


def check_equivariant_bijection(A, B, phi, generators=None):
    """Return ``None`` if ``phi`` is a pointed equivariant bijection, else
    a description of the first failure."""
    if phi.get(A.basepoint) != B.basepoint:
        return "basepoint not preserved"
    if set(phi) != set(A.elements):
        return "map not total"
    if set(phi.values()) != set(B.elements) or len(set(phi.values())) != len(phi):
        return "map not bijective"
    gens = A.group.generators if generators is None else generators
    for g in gens:
        for x in A.elements:
            if phi[A.act(g, x)] != B.act(g, phi[x]):
                return f"not equivariant at {perm_to_oneline(g)} . {x!r}"
    return None
