"""Symmetric sequences of finite pointed sets and free symmetric spectra.

A symmetric sequence stores, for each ``0 <= m <= M``, a pointed
``Sigma_m``-set.  The smash product is

    (X_1 ^ ... ^ X_p)_m = V_{i_1 + ... + i_p = m} cor^{Sigma_m}_{Young(i)}(X_{i_1} ^ ... ^ X_{i_p})

and a non-base element is stored as ``(degrees, g, w)``: the composition
``degrees`` of ``m``, a coset representative ``g`` and a tuple ``w`` of
factor elements, always in the canonical form of :func:`groups.cor`.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from itertools import product
from math import factorial

from .groups import (
    BASE,
    EmbeddingSpec,
    GSet,
    check_equivariant_bijection,
    compose,
    cor,
    identity,
    inverse,
    perm_to_oneline,
    permute,
    symmetric_group,
    transposition,
)

__all__ = [
    "SymmetricSequence",
    "FreeSpectrumSpec",
    "SliceCertificate",
    "SliceCertificateError",
    "point_sequence",
    "unit_sequence",
    "concentrated",
    "seq_smash",
    "smash_many",
    "twist",
    "free_monoid",
    "free_tilde",
    "free_spectrum",
    "sym_power_seq",
    "slice_check",
    "sym_slice_check",
    "commutativity_certificate",
    "associativity_certificate",
    "free_size",
]

MAX_SEQ_DEGREE = 8


class SliceCertificateError(AssertionError):
    """A claimed equivariant bijection failed; the message names the witness."""


class SymmetricSequence:
    """Levels ``0..max_degree``; level ``m`` is a pointed ``Sigma_m``-set."""

    def __init__(self, levels):
        self.levels = list(levels)
        for m, L in enumerate(self.levels):
            if L.group.degree != m:
                raise ValueError(f"level {m} carries a group of degree {L.group.degree}")

    @property
    def max_degree(self):
        return len(self.levels) - 1

    def __getitem__(self, m):
        return self.levels[m]

    def reduced_sizes(self):
        return [L.reduced_size for L in self.levels]

    def validate(self):
        for L in self.levels:
            L.validate()
        return True


@dataclass(frozen=True)
class FreeSpectrumSpec:
    n: int
    A: tuple  # non-base labels
    T: tuple

    @staticmethod
    def of_sizes(n, a, t):
        return FreeSpectrumSpec(n, tuple(f"a{k}" for k in range(1, a + 1)), tuple(f"t{k}" for k in range(1, t + 1)))


def _check_degree(M):
    if M > MAX_SEQ_DEGREE:
        raise ValueError(f"max degree {M} exceeds the cap {MAX_SEQ_DEGREE}")


def _pointed(m, elements=(), act=None):
    return GSet(symmetric_group(m), list(elements) + [BASE], act or (lambda g, x: x))


def point_sequence(M):
    return SymmetricSequence([_pointed(m) for m in range(M + 1)])


def unit_sequence(M):
    """One non-base point in degree 0, the point elsewhere."""
    return SymmetricSequence([_pointed(0, [()])] + [_pointed(m) for m in range(1, M + 1)])


def concentrated(M, degree, elements, act):
    """A sequence that is the point except in one degree."""
    levels = [_pointed(m) for m in range(M + 1)]
    if degree <= M:
        levels[degree] = GSet(symmetric_group(degree), list(elements) + [BASE], act)
    return SymmetricSequence(levels)


def _restrict(h, start, size):
    return tuple(h[start + r] - start for r in range(size))


def _block_product(factors, degrees):
    """``X_{i_1} ^ ... ^ X_{i_p}`` as a ``Young(degrees)``-set."""
    H = EmbeddingSpec.young(*degrees).group()
    starts = [sum(degrees[:k]) for k in range(len(degrees))]
    carriers = [F[d].elements[1:] for F, d in zip(factors, degrees)]

    def act(h, w):
        return tuple(
            F[d].act(_restrict(h, s, d), x) for F, d, s, x in zip(factors, degrees, starts, w)
        )

    return GSet(H, list(product(*carriers)) + [BASE], act)


class _SmashLevel(GSet):
    """Level ``m`` of a smash product: wedge over compositions of ``m``."""

    def __init__(self, m, parts):
        self.parts = parts  # degrees -> cor GSet
        elements = [(d,) + x for d, C in parts.items() for x in C.elements[1:]]

        def act(s, e):
            return (e[0],) + parts[e[0]].act(s, (e[1], e[2]))

        super().__init__(symmetric_group(m), elements + [BASE], act)

    def canon(self, degrees, g, w):
        """Canonical element for the pair ``(g, w)`` in summand ``degrees``."""
        return (degrees,) + self.parts[degrees].canon[(g, w)]


def _compositions(m, p):
    if p == 1:
        yield (m,)
        return
    for i in range(m + 1):
        for rest in _compositions(m - i, p - 1):
            yield (i,) + rest


def smash_many(factors, M=None):
    """``X_1 ^ ... ^ X_p`` through degree ``M``."""
    M = min(F.max_degree for F in factors) if M is None else M
    _check_degree(M)
    levels = []
    for m in range(M + 1):
        G = symmetric_group(m)
        parts = {}
        for degs in _compositions(m, len(factors)):
            if any(F[d].reduced_size == 0 for F, d in zip(factors, degs)):
                continue
            parts[degs] = cor(G, EmbeddingSpec.young(*degs), _block_product(factors, degs))
        levels.append(_SmashLevel(m, parts))
    out = SymmetricSequence(levels)
    out.factors = list(factors)
    return out


def seq_smash(X, Y, M=None):
    return smash_many([X, Y], M)


def _block_perm(beta, degrees):
    """Permutation of letters moving block ``k`` onto position ``beta[k]``."""
    new_degrees = permute(beta, degrees)
    new_starts = [sum(new_degrees[:k]) for k in range(len(degrees))]
    out = []
    for k, d in enumerate(degrees):
        out += [new_starts[beta[k]] + r for r in range(d)]
    return tuple(out), new_degrees


def twist(S, beta):
    """The symmetry ``X_1 ^ ... ^ X_p -> X_beta.. `` on a smash product.

    Only meaningful when the factors are permuted into themselves (for
    example all equal); returns per-level dicts ``element -> element``.
    """
    out = []
    for L in S.levels:
        phi = {BASE: BASE}
        for e in L.elements[1:]:
            degs, g, w = e
            bhat, nd = _block_perm(beta, degs)
            phi[e] = L.canon(nd, compose(g, inverse(bhat)), permute(beta, w))
        out.append(phi)
    return out


def free_monoid(T, M):
    """``S(T)``: level ``m`` is ``T^(^m)`` with the permutation action."""
    _check_degree(M)
    T = tuple(T)
    levels = []
    for m in range(M + 1):
        levels.append(
            GSet(symmetric_group(m), list(product(T, repeat=m)) + [BASE], lambda g, w: permute(g, w))
        )
    return SymmetricSequence(levels)


def free_tilde(n, A, M):
    """``Sigma_n x A`` in degree ``n``, the point elsewhere."""
    _check_degree(M)
    G = symmetric_group(n)
    return concentrated(M, n, [(g, a) for g in G.elements for a in A], lambda s, x: (compose(s, x[0]), x[1]))


def free_spectrum(spec, M):
    """``F_n(A) = F~_n(A) ^ S(T)`` through degree ``M``."""
    out = seq_smash(free_tilde(spec.n, spec.A, M), free_monoid(spec.T, M), M)
    out.spec = spec
    return out


def free_size(n, a, t, m):
    """Reduced size of ``(F_n A)_m``: ``m!/(m-n)! * a * t^(m-n)``."""
    if m < n:
        return 0
    return factorial(m) // factorial(m - n) * a * t ** (m - n)


def _orbit_partition(elements, maps):
    """Orbits of the non-base elements under the given element maps."""
    parent = {e: e for e in elements}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for phi in maps:
        for e in elements:
            a, b = find(e), find(phi[e])
            if a != b:
                lo, hi = sorted((a, b))
                parent[hi] = lo
    classes = {}
    for e in elements:
        classes.setdefault(find(e), []).append(e)
    return {min(c): sorted(c) for c in classes.values()}


def sym_power_seq(F, p, M=None):
    """``Sym^p F``: the ``Sigma_p``-orbits of ``F^(^p)`` under the twist.

    Returns ``(Sym, power, projection)`` where ``projection[m]`` sends each
    element of the power to its orbit representative.
    """
    P = smash_many([F] * p, M)
    gens = [transposition(p, k, k + 1) for k in range(p - 1)]
    twists = [twist(P, b) for b in gens]
    levels, projs = [], []
    for m, L in enumerate(P.levels):
        classes = _orbit_partition(L.elements[1:], [t[m] for t in twists])
        proj = {BASE: BASE}
        for rep, members in classes.items():
            for e in members:
                proj[e] = rep

        def act(s, e, L=L, proj=proj):
            return proj[L.act(s, e)]

        levels.append(GSet(L.group, list(classes) + [BASE], act))
        projs.append(proj)
    return SymmetricSequence(levels), P, projs


# ----------------------------------------------------------------------------
# certificates


@dataclass
class SliceCertificate:
    kind: str
    params: dict
    passed: bool
    left_size: int
    right_size: int
    table: list = field(default_factory=list)  # [[left, right], ...] sorted
    failure: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def digest(self):
        return hashlib.sha256(json.dumps(self.table).encode()).hexdigest()

    def to_dict(self):
        return {
            "kind": self.kind,
            "params": self.params,
            "passed": self.passed,
            "left_reduced_size": self.left_size,
            "right_reduced_size": self.right_size,
            "failure": self.failure,
            "digest": self.digest,
            "extra": self.extra,
            "table": self.table,
        }


def _fmt(e):
    """Stable text form of a carrier element (permutations in one-line form)."""
    if e == BASE:
        return BASE
    return json.dumps(_plain(e), separators=(",", ":"))


def _plain(e):
    if isinstance(e, tuple):
        return [_plain(x) for x in e]
    return e


def _certify(kind, params, A, B, phi, raise_on_failure, extra=None):
    failure = check_equivariant_bijection(A, B, phi)
    table = sorted([_fmt(a), _fmt(b)] for a, b in phi.items() if a != A.basepoint)
    cert = SliceCertificate(
        kind, params, failure is None, A.reduced_size, B.reduced_size, table, failure, extra or {}
    )
    if raise_on_failure and failure is not None:
        raise SliceCertificateError(f"{kind} {params}: {failure}")
    return cert


def _tail_set(m, n, A, T):
    """``A ^ T^(m-n)`` as a set over ``Sigma_{m-n}`` on the last letters."""
    H = EmbeddingSpec.tail(m, m - n).group()

    def act(h, w):
        return (w[0],) + permute(_restrict(h, n, m - n), w[1:])

    return GSet(H, [(a,) + t for a in A for t in product(T, repeat=m - n)] + [BASE], act)


def slice_check(spec, m, raise_on_failure=True, F=None):
    """``(F_n A)_m = cor^{Sigma_m}_{Sigma_{m-n}}(A ^ T^(m-n))`` by explicit bijection.

    ``[g, ((s, a), t)]`` goes to ``[g (s x 1), (a, t)]``.
    """
    n = spec.n
    if m > 6:
        raise ValueError("slice checks are limited to m <= 6")
    params = {"n": n, "m": m, "A": len(spec.A), "T": len(spec.T)}
    F = free_spectrum(spec, max(m, n)) if F is None else F
    left = F[m]
    G = symmetric_group(m)
    if m < n:
        right = _pointed(m)
        return _certify("slice", params, left, right, {BASE: BASE}, raise_on_failure)
    right = cor(G, EmbeddingSpec.tail(m, m - n), _tail_set(m, n, spec.A, spec.T))
    phi = {BASE: BASE}
    for e in left.elements[1:]:
        _, g, ((s, a), t) = e
        phi[e] = right.canon[(compose(g, s + tuple(range(n, m))), (a,) + t)]
    return _certify("slice", params, left, right, phi, raise_on_failure)


def _closed_sym_set(p, n, m, A, T, with_shuffle=True):
    """``A^(^p) ^ T^(m-pn)`` over ``Sigma_p x Sigma_{m-pn}`` (or the tail only)."""
    k = m - p * n
    specs = [EmbeddingSpec.tail(m, k)]
    if with_shuffle:
        specs.insert(0, EmbeddingSpec.block_shuffle(p, n, m))
    spec = EmbeddingSpec.product(*specs) if len(specs) > 1 else specs[0]
    H = spec.group()

    def act(h, w):
        beta = tuple(h[b * n] // n for b in range(p)) if n else identity(p)
        return permute(beta, w[:p]) + permute(_restrict(h, p * n, k), w[p:])

    carrier = [a + t for a in product(A, repeat=p) for t in product(T, repeat=k)]
    return spec, GSet(H, carrier + [BASE], act)


def _power_flatten(x, p, n):
    """``[g', ((s_1,a_1), ..., (s_p,a_p))]`` -> ``(g' (s_1 x ... x s_p), (a_1..a_p))``."""
    _, g1, parts = x
    block = []
    for b, (s, _) in enumerate(parts):
        block += [b * n + v for v in s]
    return compose(g1, tuple(block)), tuple(a for _, a in parts)


def sym_slice_check(p, spec, m, raise_on_failure=True):
    """The ``m``-slice of ``Sym^p F_n(A)`` against its closed formula.

    The direct side is ``Sym^p(F~_n A) ^ S(T)``, computed through the twist
    orbits of the ``p``-fold smash; the closed side is ``cor`` over the
    block shuffle times the tail.  Also certified: the ``m``-slice of
    ``F_n(A)^(^p)`` is ``cor`` over the tail alone, and the quotient map to
    the symmetric power is onto with fibers exactly the ``Sigma_p``-orbits.
    """
    n = spec.n
    if p > 3:
        raise ValueError("sym_slice_check supports p <= 3")
    if m < p * n:
        raise ValueError("need m >= p n")
    if m > 6:
        raise ValueError("slice checks are limited to m <= 6")
    params = {"p": p, "n": n, "m": m, "A": len(spec.A), "T": len(spec.T)}
    Ft = free_tilde(n, spec.A, p * n)
    S, P, projs = sym_power_seq(Ft, p, p * n)
    ST = free_monoid(spec.T, m)
    # pad to degree m so that the smash with S(T) reaches level m
    pad = lambda Q: SymmetricSequence(Q.levels + [_pointed(d) for d in range(Q.max_degree + 1, m + 1)])
    direct = seq_smash(pad(S), ST, m)[m]
    power = seq_smash(pad(P), ST, m)[m]
    G = symmetric_group(m)
    tail_id = tuple(range(p * n, m))

    def flat(e):
        _, g, (x, t) = e
        g1, a = _power_flatten(x, p, n)
        return compose(g, g1 + tail_id), a + t

    spec_sym, closed_set = _closed_sym_set(p, n, m, spec.A, spec.T)
    closed = cor(G, spec_sym, closed_set)
    phi = {BASE: BASE}
    for e in direct.elements[1:]:
        phi[e] = closed.canon[flat(e)]
    cert = _certify("sym_slice", params, direct, closed, phi, raise_on_failure)

    spec_tail, tail_set = _closed_sym_set(p, n, m, spec.A, spec.T, with_shuffle=False)
    closed_power = cor(G, spec_tail, tail_set)
    psi = {BASE: BASE}
    for e in power.elements[1:]:
        psi[e] = closed_power.canon[flat(e)]
    pcert = _certify("power_slice", params, power, closed_power, psi, raise_on_failure)

    # quotient map F^(^p) -> Sym^p F at level m and its fibers
    proj = projs[p * n]
    q = {}
    for e in power.elements[1:]:
        degs, g, (x, t) = e
        q[e] = direct.canon(degs, g, (proj[x], t))
    gens = [transposition(p, b, b + 1) for b in range(p - 1)]
    tw = [twist(P, b)[p * n] for b in gens]
    orbit_maps = []
    for t_map in tw:
        om = {}
        for e in power.elements[1:]:
            degs, g, (x, t) = e
            om[e] = power.canon(degs, g, (t_map[x], t))
        orbit_maps.append(om)
    orbits = _orbit_partition(power.elements[1:], orbit_maps)
    fibers = {}
    for e, img in q.items():
        fibers.setdefault(img, []).append(e)
    onto = set(fibers) == set(direct.elements[1:])
    fibers_are_orbits = sorted(map(sorted, fibers.values())) == sorted(orbits.values())
    equivariant = all(q[power.act(s, e)] == direct.act(s, q[e]) for s in G.generators for e in q)
    cert.extra = {
        "power_slice": pcert.to_dict() | {"table": len(pcert.table)},
        "quotient_onto": onto,
        "fibers_are_orbits": fibers_are_orbits,
        "quotient_equivariant": equivariant,
        "orbit_count": len(orbits),
    }
    ok = pcert.passed and onto and fibers_are_orbits and equivariant
    if not ok:
        cert.passed = False
        cert.failure = cert.failure or "quotient map is not the orbit map of the twist action"
        if raise_on_failure:
            raise SliceCertificateError(cert.failure)
    return cert


def commutativity_certificate(X, Y, M=None, raise_on_failure=True):
    """The twist ``X ^ Y -> Y ^ X`` is an equivariant bijection per level."""
    XY, YX = seq_smash(X, Y, M), seq_smash(Y, X, M)
    certs = []
    for m, (L, R) in enumerate(zip(XY.levels, YX.levels)):
        phi = {BASE: BASE}
        for e in L.elements[1:]:
            degs, g, w = e
            bhat, nd = _block_perm((1, 0), degs)
            phi[e] = R.canon(nd, compose(g, inverse(bhat)), (w[1], w[0]))
        certs.append(_certify("commutativity", {"m": m}, L, R, phi, raise_on_failure))
    return certs


def associativity_certificate(X, Y, Z, M=None, raise_on_failure=True):
    """``(X ^ Y) ^ Z`` and ``X ^ (Y ^ Z)`` both map bijectively onto ``X ^ Y ^ Z``."""
    left = seq_smash(seq_smash(X, Y, M), Z, M)
    right = seq_smash(X, seq_smash(Y, Z, M), M)
    flat = smash_many([X, Y, Z], M)
    certs = []
    for m in range(flat.max_degree + 1):
        F = flat[m]
        phi = {BASE: BASE}
        for e in left[m].elements[1:]:
            (ij, k), g, (u, z) = e
            (i, j), g1, (x, y) = u
            phi[e] = F.canon((i, j, k), compose(g, g1 + tuple(range(ij, m))), (x, y, z))
        certs.append(_certify("assoc_left", {"m": m}, left[m], F, phi, raise_on_failure))
        psi = {BASE: BASE}
        for e in right[m].elements[1:]:
            (i, jk), g, (x, v) = e
            (j, k), g2, (y, z) = v
            psi[e] = F.canon((i, j, k), compose(g, tuple(range(i)) + tuple(i + c for c in g2)), (x, y, z))
        certs.append(_certify("assoc_right", {"m": m}, right[m], F, psi, raise_on_failure))
    return certs


def describe_element(e):
    """One-line text for reports, with permutations in one-line notation."""
    if e == BASE:
        return BASE
    degs, g, w = e
    return f"{list(degs)}|{''.join(map(str, perm_to_oneline(g)))}|{_fmt(w)}"
