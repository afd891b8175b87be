"""Finite pointed simplicial sets stored levelwise.

A :class:`PointedSimplicialSet` keeps every simplex (degenerate ones too) in
levels ``0..dim_bound``.  Simplices of a level are identified by their index;
index 0 is always the basepoint and the index order is the canonical total
order of the level.  Face and degeneracy operators are int64 index arrays.

Products, smash powers and symmetric powers are "tuple-backed": a simplex is
a row of factor indices, rows are kept in lexicographic order, and the face
of a row is found by mapping it coordinatewise and looking up its encoded
key (see :mod:`symtower._kernels`).
"""

from __future__ import annotations

import json
from itertools import combinations_with_replacement, product

import numpy as np

from . import _kernels

__all__ = [
    "PointedSimplicialSet",
    "SimplicialMap",
    "Inclusion",
    "TruncationError",
    "point",
    "sphere",
    "simplex_quotient",
    "interval",
    "wedge",
    "smash",
    "smash_power",
    "sym_power",
    "sym_power_map",
    "quotient_by_subobject",
    "suspend",
    "cone",
    "basepoint_inclusion",
    "identity_inclusion",
    "wedge_left",
    "orbit_quotient_levels",
    "read_pss_json",
    "write_pss_json",
    "to_pss_dict",
    "from_pss_dict",
]


class TruncationError(ValueError):
    """Raised when a request needs levels beyond the stored dimension bound."""


def _arr(values):
    return np.asarray(values, dtype=np.int64)


class PointedSimplicialSet:
    """A levelwise finite pointed simplicial set truncated at ``dim_bound``.

    Parameters
    ----------
    names : list of sequences of str
        Simplex identifiers per level; entry 0 of each level is the basepoint.
    faces : list
        ``faces[m][i]`` maps level ``m`` to level ``m-1`` (``faces[0] == []``).
    degens : list
        ``degens[m][i]`` maps level ``m`` to level ``m+1``; empty at the top.
    dim : int or None
        Known upper bound on the geometric dimension: every simplex above
        this level is degenerate.
    """

    def __init__(self, names, faces, degens, dim=None):
        self.names = [tuple(level) for level in names]
        self.faces = [[_arr(f) for f in fs] for fs in faces]
        self.degens = [[_arr(s) for s in ss] for ss in degens]
        self.dim = dim
        self._nondeg = {}
        self._index = {}

    @property
    def dim_bound(self):
        return len(self.names) - 1

    def size(self, m):
        return len(self.names[m])

    def reduced(self, m):
        """Number of non-basepoint simplices at level ``m``."""
        return len(self.names[m]) - 1

    def sizes(self):
        return [len(level) for level in self.names]

    def index(self, m, name):
        if m not in self._index:
            self._index[m] = {s: k for k, s in enumerate(self.names[m])}
        return self._index[m][name]

    def face(self, m, i):
        return self.faces[m][i]

    def degen(self, m, i):
        return self.degens[m][i]

    def nondegenerate(self, m):
        """Indices of the non-degenerate non-basepoint simplices of level ``m``."""
        if m not in self._nondeg:
            n = self.size(m)
            degenerate = np.zeros(n, dtype=bool)
            degenerate[0] = True
            for i in range(m):
                back = self.degens[m - 1][i][self.faces[m][i]]
                degenerate |= back == np.arange(n)
            self._nondeg[m] = np.flatnonzero(~degenerate)
        return self._nondeg[m]

    def nondegenerate_counts(self, top=None):
        top = self.dim_bound if top is None else top
        return [len(self.nondegenerate(m)) for m in range(top + 1)]

    def observed_dim(self):
        """Largest stored level holding a non-degenerate non-base simplex."""
        d = -1
        for m in range(self.dim_bound + 1):
            if len(self.nondegenerate(m)):
                d = m
        return d

    def require_complete(self):
        """Return the geometric dimension bound, checking it is usable.

        Analysis (chains, Euler characteristic) needs every non-degenerate
        simplex plus one more level to confirm the claimed dimension.
        """
        if self.dim is None:
            raise TruncationError("geometric dimension unknown")
        need = max(self.dim, 0) + 1
        if self.dim_bound < need:
            raise TruncationError(
                f"truncation insufficient: dim_bound {self.dim_bound} < {need}"
            )
        if len(self.nondegenerate(self.dim + 1)):
            raise ValueError(
                f"non-degenerate simplex above claimed dimension {self.dim}"
            )
        return max(self.dim, 0)

    def truncate(self, bound):
        if bound > self.dim_bound:
            raise TruncationError(f"cannot extend dim_bound {self.dim_bound} to {bound}")
        degens = [list(s) for s in self.degens[: bound + 1]]
        degens[bound] = []
        return PointedSimplicialSet(
            self.names[: bound + 1], self.faces[: bound + 1], degens, self.dim
        )

    def validate(self):
        """Check the simplicial identities on every stored level.

        Raises ``ValueError`` naming the first failing identity.
        """
        top = self.dim_bound
        for m in range(top + 1):
            n = self.size(m)
            if len(self.faces[m]) != (m + 1 if m else 0):
                raise ValueError(f"level {m}: wrong number of faces")
            want = m + 1 if m < top else 0
            if len(self.degens[m]) != want:
                raise ValueError(f"level {m}: wrong number of degeneracies")
            for i, f in enumerate(self.faces[m]):
                if f.shape != (n,) or f[0] != 0:
                    raise ValueError(f"d_{i} on level {m} malformed or moves basepoint")
                if n and (f.min() < 0 or f.max() >= self.size(m - 1)):
                    raise ValueError(f"d_{i} on level {m} out of range")
            for i, s in enumerate(self.degens[m]):
                if s.shape != (n,) or s[0] != 0:
                    raise ValueError(f"s_{i} on level {m} malformed or moves basepoint")
                if n and (s.min() < 0 or s.max() >= self.size(m + 1)):
                    raise ValueError(f"s_{i} on level {m} out of range")
        F, S = self.faces, self.degens
        for m in range(2, top + 1):
            for j in range(m + 1):
                for i in range(j):
                    if not np.array_equal(F[m - 1][i][F[m][j]], F[m - 1][j - 1][F[m][i]]):
                        raise ValueError(f"d_{i} d_{j} != d_{j-1} d_{i} at level {m}")
        for m in range(top - 1):
            for j in range(m + 1):
                for i in range(j + 1):
                    if not np.array_equal(S[m + 1][i][S[m][j]], S[m + 1][j + 1][S[m][i]]):
                        raise ValueError(f"s_{i} s_{j} != s_{j+1} s_{i} at level {m}")
        for m in range(top):
            ident = np.arange(self.size(m))
            for j in range(m + 1):
                sj = S[m][j]
                for i in range(m + 2):
                    lhs = F[m + 1][i][sj]
                    if i < j:
                        rhs = S[m - 1][j - 1][F[m][i]]
                    elif i in (j, j + 1):
                        rhs = ident
                    else:
                        rhs = S[m - 1][j][F[m][i - 1]]
                    if not np.array_equal(lhs, rhs):
                        raise ValueError(f"d_{i} s_{j} identity fails at level {m}")
        if self.dim is not None:
            for m in range(self.dim + 1, top + 1):
                if len(self.nondegenerate(m)):
                    raise ValueError(f"non-degenerate simplex at level {m} > dim {self.dim}")
        return True

    def __repr__(self):
        return (
            f"PointedSimplicialSet(dim_bound={self.dim_bound}, dim={self.dim}, "
            f"reduced={[s - 1 for s in self.sizes()]})"
        )


class SimplicialMap:
    """A pointed simplicial map given by one index array per stored level."""

    def __init__(self, source, target, components):
        if source.dim_bound != target.dim_bound:
            raise ValueError("source and target must share dim_bound")
        self.source = source
        self.target = target
        self.components = [_arr(c) for c in components]

    def check(self):
        """Verify basepoints and commutation with faces and degeneracies."""
        X, Y, c = self.source, self.target, self.components
        for m in range(X.dim_bound + 1):
            if c[m].shape != (X.size(m),) or c[m][0] != 0:
                raise ValueError(f"component {m} malformed or not pointed")
            for i in range(m + 1):
                if m and not np.array_equal(c[m - 1][X.faces[m][i]], Y.faces[m][i][c[m]]):
                    raise ValueError(f"map does not commute with d_{i} at level {m}")
                if m < X.dim_bound and not np.array_equal(
                    c[m + 1][X.degens[m][i]], Y.degens[m][i][c[m]]
                ):
                    raise ValueError(f"map does not commute with s_{i} at level {m}")
        return True

    def is_injective(self):
        return all(len(np.unique(c)) == len(c) for c in self.components)

    def is_surjective(self):
        return all(
            len(np.unique(c)) == self.target.size(m) for m, c in enumerate(self.components)
        )

    def compose(self, other):
        """``self`` after ``other``."""
        return SimplicialMap(
            other.source,
            self.target,
            [a[b] for a, b in zip(self.components, other.components)],
        )


class Inclusion(SimplicialMap):
    """A levelwise injective simplicial map (a cofibration)."""

    def __init__(self, source, target, components, check=True):
        super().__init__(source, target, components)
        if not self.is_injective():
            raise ValueError("not an inclusion")
        if check:
            self.check()

    @classmethod
    def from_map(cls, f):
        return cls(f.source, f.target, f.components)

    def image_mask(self, m):
        mask = np.zeros(self.target.size(m), dtype=bool)
        mask[self.components[m]] = True
        return mask

    def preimage(self, m):
        """Target index -> source index (-1 off the image)."""
        inv = np.full(self.target.size(m), -1, dtype=np.int64)
        inv[self.components[m]] = np.arange(self.source.size(m))
        return inv


# ----------------------------------------------------------------------------
# tuple-backed constructions


def _encode_radix(sizes, k):
    radix = max(max(sizes), 2)
    if k and float(radix) ** k >= 2.0**62:
        raise OverflowError("tuple encoding exceeds int64; level too large")
    return radix


def _keys(rows, radix):
    k = rows.shape[1]
    ident = np.arange(radix, dtype=np.int64)
    flat = np.tile(ident, k)
    offsets = np.arange(k, dtype=np.int64) * radix
    return _kernels.map_encode(rows, flat, offsets, radix, False)


def _lookup(target_keys, keys, what):
    idx = np.searchsorted(target_keys, keys)
    idx = np.minimum(idx, len(target_keys) - 1)
    if not np.array_equal(target_keys[idx], keys):
        raise ValueError(f"{what}: image row missing from target level")
    return idx.astype(np.int64)


class TupleLevels:
    """Rows of factor indices for each level of a tuple-backed simplicial set.

    ``rows[m]`` has shape ``(N_m, k)``; row 0 is all zeros (the basepoint)
    and the remaining rows are non-base tuples in lexicographic order.
    """

    def __init__(self, factors, rows, symmetric=False):
        self.factors = list(factors)
        self.k = len(self.factors)
        self.rows = [np.asarray(r, dtype=np.int64).reshape(-1, self.k) for r in rows]
        self.symmetric = symmetric
        self.radix = [
            _encode_radix([f.size(m) for f in self.factors] or [2], self.k)
            for m in range(len(self.rows))
        ]
        self.keys = [_keys(r, self.radix[m]) for m, r in enumerate(self.rows)]
        for m, key in enumerate(self.keys):
            if len(key) > 1 and not (np.all(np.diff(key) > 0) and key[0] == 0):
                raise ValueError(f"level {m}: rows not strictly sorted or base missing")

    def map_rows(self, rows, tables, m_target, sort_rows=None):
        """Apply per-factor tables to rows and return target-level indices."""
        sort_rows = self.symmetric if sort_rows is None else sort_rows
        flat = np.concatenate([np.asarray(t, dtype=np.int64) for t in tables]) if tables else np.zeros(0, np.int64)
        offsets = np.cumsum([0] + [len(t) for t in tables[:-1]]).astype(np.int64)
        keys = _kernels.map_encode(rows, flat, offsets, self.radix[m_target], sort_rows)
        return _lookup(self.keys[m_target], keys, "tuple map")

    def lookup(self, m, rows):
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, self.k)
        return _lookup(self.keys[m], _keys(rows, self.radix[m]), "lookup")

    def build(self, fmt=None, dim=None):
        top = len(self.rows) - 1
        faces = [[]]
        degens = []
        for m in range(1, top + 1):
            faces.append(
                [
                    self.map_rows(self.rows[m], [f.faces[m][i] for f in self.factors], m - 1)
                    for i in range(m + 1)
                ]
            )
        for m in range(top + 1):
            if m == top:
                degens.append([])
                continue
            degens.append(
                [
                    self.map_rows(self.rows[m], [f.degens[m][i] for f in self.factors], m + 1)
                    for i in range(m + 1)
                ]
            )
        names = [self._names(m, fmt) for m in range(top + 1)]
        return PointedSimplicialSet(names, faces, degens, dim)

    def _names(self, m, fmt):
        if fmt is None:
            open_, close = ("[", "]") if self.symmetric else ("(", ")")
        else:
            open_, close = fmt
        fn = [f.names[m] for f in self.factors]
        out = ["*"]
        for row in self.rows[m][1:].tolist():
            out.append(open_ + ",".join(fn[c][v] for c, v in enumerate(row)) + close)
        return out


def _bound(*spaces):
    return min(X.dim_bound for X in spaces)


def _product_rows(sizes):
    """Lexicographically ordered non-base tuples plus the base row."""
    k = len(sizes)
    body = np.array(list(product(*[range(1, s) for s in sizes])), dtype=np.int64).reshape(-1, k)
    return np.vstack([np.zeros((1, k), dtype=np.int64), body])


def _multiset_rows(size, n):
    body = np.array(list(combinations_with_replacement(range(1, size), n)), dtype=np.int64)
    body = body.reshape(-1, n)
    return np.vstack([np.zeros((1, n), dtype=np.int64), body])


def _dim_sum(dims):
    return None if any(d is None for d in dims) else sum(max(d, 0) for d in dims)


# ----------------------------------------------------------------------------
# elementary spaces


def point(dim_bound):
    """The one-simplex-per-level pointed simplicial set."""
    names = [("*",)] * (dim_bound + 1)
    zero = np.zeros(1, dtype=np.int64)
    faces = [[]] + [[zero] * (m + 1) for m in range(1, dim_bound + 1)]
    degens = [[zero] * (m + 1) for m in range(dim_bound)] + [[]]
    return PointedSimplicialSet(names, faces, degens, dim=0)


def simplex_quotient(facets, dim_bound, collapse=(), dim=None):
    """Ordered simplicial complex modulo a subcomplex, as a simplicial set.

    Level ``m`` consists of nondecreasing vertex sequences of length ``m+1``
    supported on a simplex of the complex generated by ``facets``.  Sequences
    supported on the subcomplex generated by ``collapse`` become the
    basepoint; if ``collapse`` is empty a disjoint basepoint is added.
    """
    facets = [tuple(sorted(f)) for f in facets]
    sub = [frozenset(c) for c in collapse]

    def collapsed(seq):
        s = set(seq)
        return any(s <= c for c in sub)

    label = str if all(len(str(v)) == 1 for f in facets for v in f) else None
    names, levels = [], []
    for m in range(dim_bound + 1):
        seqs = set()
        for f in facets:
            seqs.update(combinations_with_replacement(f, m + 1))
        body = sorted(s for s in seqs if not collapsed(s))
        levels.append({s: k + 1 for k, s in enumerate(body)})
        if label is str:
            names.append(["*"] + ["".join(map(str, s)) for s in body])
        else:
            names.append(["*"] + [".".join(map(str, s)) for s in body])
    faces, degens = [[]], []
    for m in range(1, dim_bound + 1):
        prev = levels[m - 1]
        fs = []
        for i in range(m + 1):
            arr = np.zeros(len(levels[m]) + 1, dtype=np.int64)
            for s, k in levels[m].items():
                arr[k] = prev.get(s[:i] + s[i + 1 :], 0)
            fs.append(arr)
        faces.append(fs)
    for m in range(dim_bound + 1):
        if m == dim_bound:
            degens.append([])
            continue
        nxt = levels[m + 1]
        ss = []
        for i in range(m + 1):
            arr = np.zeros(len(levels[m]) + 1, dtype=np.int64)
            for s, k in levels[m].items():
                arr[k] = nxt[s[: i + 1] + s[i:]]
            ss.append(arr)
        degens.append(ss)
    if dim is None:
        dim = max((len(f) - 1 for f in facets), default=0)
    return PointedSimplicialSet(names, faces, degens, dim)


def sphere(n, dim_bound=None):
    """The sphere as Delta^n / boundary; geometric dimension ``n``."""
    if n < 0:
        raise ValueError("sphere dimension must be >= 0")
    dim_bound = n + 1 if dim_bound is None else dim_bound
    if dim_bound < n:
        raise TruncationError("bound below geometric dimension")
    verts = tuple(range(n + 1))
    boundary = [verts[:i] + verts[i + 1 :] for i in range(n + 1)] if n else []
    return simplex_quotient([verts], dim_bound, collapse=boundary, dim=n)


def interval(dim_bound):
    """Delta^1 pointed at vertex 1 (vertex 0 is the free end)."""
    return simplex_quotient([(0, 1)], dim_bound, collapse=[(1,)], dim=1)


# ----------------------------------------------------------------------------
# monoidal operations


def wedge(X, Y):
    """One-point union; non-base simplices of X precede those of Y."""
    top = _bound(X, Y)
    X, Y = X.truncate(top), Y.truncate(top)

    def tables(m):
        sx = X.size(m)
        fx = np.arange(sx, dtype=np.int64)
        fy = np.concatenate([[0], np.arange(sx, sx + Y.size(m) - 1)]).astype(np.int64)
        return fx, fy

    maps = [tables(m) for m in range(top + 1)]

    def combine(ax, ay, m_target):
        tx, ty = maps[m_target]
        return np.concatenate([tx[ax], ty[ay][1:]])

    names = [
        ["*"] + ["a" + s for s in X.names[m][1:]] + ["b" + s for s in Y.names[m][1:]]
        for m in range(top + 1)
    ]
    faces = [[]] + [
        [combine(X.faces[m][i], Y.faces[m][i], m - 1) for i in range(m + 1)]
        for m in range(1, top + 1)
    ]
    degens = [
        [combine(X.degens[m][i], Y.degens[m][i], m + 1) for i in range(m + 1)] if m < top else []
        for m in range(top + 1)
    ]
    dim = None if X.dim is None or Y.dim is None else max(X.dim, Y.dim)
    return PointedSimplicialSet(names, faces, degens, dim)


def wedge_left(X, Y):
    """The summand inclusion ``X -> X v Y``."""
    W = wedge(X, Y)
    comps = [np.arange(X.size(m), dtype=np.int64) for m in range(W.dim_bound + 1)]
    return Inclusion(X.truncate(W.dim_bound), W, comps)


def _smash_levels(factors):
    top = _bound(*factors)
    factors = [F.truncate(top) for F in factors]
    rows = [_product_rows([F.size(m) for F in factors]) for m in range(top + 1)]
    return TupleLevels(factors, rows)


def smash(X, Y):
    """Levelwise ``(X x Y) / (X v Y)``."""
    return _smash_levels([X, Y]).build(dim=_dim_sum([X.dim, Y.dim]))


def _is_point(X):
    return all(s == 1 for s in X.sizes())


def smash_power(X, n):
    """``X^(n)`` with rows ordered lexicographically; ``n = 0`` gives S^0."""
    if n == 0:
        return sphere(0, X.dim_bound)
    return smash_power_levels(X, n).build(dim=None if X.dim is None else n * max(X.dim, 0))


def smash_power_levels(X, n):
    rows = [_product_rows([X.size(m)] * n) for m in range(X.dim_bound + 1)]
    return TupleLevels([X] * n, rows)


def sym_power_levels(X, n):
    rows = [_multiset_rows(X.size(m), n) for m in range(X.dim_bound + 1)]
    return TupleLevels([X] * n, rows, symmetric=True)


def sym_power(n, X):
    """The n-th symmetric power: Sigma_n-orbits of the n-fold smash power.

    Orbits are represented by their lexicographically minimal (sorted) row.
    """
    if n < 0:
        raise ValueError("symmetric power index must be >= 0")
    if n == 0:
        return sphere(0, X.dim_bound)
    if n == 1:
        return X
    dim = None if X.dim is None else n * max(X.dim, 0)
    return sym_power_levels(X, n).build(dim=dim)


def sym_power_map(n, f):
    """The map ``Sym^n X -> Sym^n Y`` induced by ``f`` on orbits."""
    X, Y = f.source, f.target
    if n == 0:
        return SimplicialMap(sym_power(0, X), sym_power(0, Y), [np.arange(2)] * (X.dim_bound + 1))
    if n == 1:
        return SimplicialMap(X, Y, f.components)
    src, tgt = sym_power_levels(X, n), sym_power_levels(Y, n)
    comps = [
        tgt.map_rows(src.rows[m], [f.components[m]] * n, m) for m in range(X.dim_bound + 1)
    ]
    return SimplicialMap(sym_power(n, X), sym_power(n, Y), comps)


def quotient_by_subobject(j):
    """Collapse the image of an inclusion ``j: X -> Y`` to the basepoint.

    Returns ``(Z, projection)`` with ``projection: Y -> Z``.
    """
    if not isinstance(j, Inclusion):
        if not j.is_injective():
            raise ValueError("not an inclusion")
    Y = j.target
    top = Y.dim_bound
    proj = []
    names = []
    for m in range(top + 1):
        mask = np.zeros(Y.size(m), dtype=bool)
        mask[j.components[m]] = True
        mask[0] = True
        keep = np.flatnonzero(~mask)
        p = np.zeros(Y.size(m), dtype=np.int64)
        p[keep] = np.arange(1, len(keep) + 1)
        proj.append(p)
        names.append(["*"] + [Y.names[m][k] for k in keep])
    keep_idx = [np.concatenate([[0], np.flatnonzero(proj[m])]) for m in range(top + 1)]
    faces = [[]] + [
        [proj[m - 1][Y.faces[m][i][keep_idx[m]]] for i in range(m + 1)] for m in range(1, top + 1)
    ]
    degens = [
        [proj[m + 1][Y.degens[m][i][keep_idx[m]]] for i in range(m + 1)] if m < top else []
        for m in range(top + 1)
    ]
    Z = PointedSimplicialSet(names, faces, degens, Y.dim)
    return Z, SimplicialMap(Y, Z, proj)


def suspend(X):
    """``S^1 ^ X``."""
    S1 = sphere(1, max(X.dim_bound, 1)).truncate(X.dim_bound)
    return smash(S1, X)


def cone(X):
    """Reduced cone ``X ^ (Delta^1, 1)`` with the inclusion at vertex 0."""
    top = X.dim_bound
    I = interval(top)
    levels = _smash_levels([X, I])
    C = levels.build(dim=None if X.dim is None else max(X.dim, 0) + 1)
    comps = []
    for m in range(top + 1):
        rows = np.zeros((X.size(m), 2), dtype=np.int64)
        rows[1:, 0] = np.arange(1, X.size(m))
        # the constant sequence at vertex 0 is the first non-base simplex of I
        rows[1:, 1] = I.index(m, "0" * (m + 1))
        comps.append(levels.lookup(m, rows))
    return C, Inclusion(X, C, comps)


def basepoint_inclusion(Y):
    P = point(Y.dim_bound)
    return Inclusion(P, Y, [np.zeros(1, dtype=np.int64)] * (Y.dim_bound + 1))


def identity_inclusion(Y):
    return Inclusion(Y, Y, [np.arange(Y.size(m), dtype=np.int64) for m in range(Y.dim_bound + 1)])


def orbit_quotient_levels(X, actions):
    """Quotient of ``X`` by a group acting through simplicial automorphisms.

    ``actions[m]`` is a list of index permutations of level ``m``, one per
    group generator.  Each orbit is represented by its smallest index
    (the lexicographically minimal member for tuple-backed levels).

    Returns ``(Q, projection)``.
    """
    top = X.dim_bound
    proj, reps = [], []
    for m in range(top + 1):
        lab = np.arange(X.size(m), dtype=np.int64)
        gens = [(g, np.argsort(g)) for g in actions[m]]
        while True:
            new = lab
            for g, ginv in gens:
                new = np.minimum(new, new[g])
                new = np.minimum(new, new[ginv])
            new = new[new]
            if np.array_equal(new, lab):
                break
            lab = new
        roots = np.unique(lab)
        p = np.searchsorted(roots, lab).astype(np.int64)
        proj.append(p)
        reps.append(roots)
    names = [[X.names[m][r] for r in reps[m]] for m in range(top + 1)]
    faces = [[]] + [
        [proj[m - 1][X.faces[m][i][reps[m]]] for i in range(m + 1)] for m in range(1, top + 1)
    ]
    degens = [
        [proj[m + 1][X.degens[m][i][reps[m]]] for i in range(m + 1)] if m < top else []
        for m in range(top + 1)
    ]
    Q = PointedSimplicialSet(names, faces, degens, X.dim)
    return Q, SimplicialMap(X, Q, proj)


# ----------------------------------------------------------------------------
# PSS-JSON


def to_pss_dict(X):
    out = {
        "dim_bound": X.dim_bound,
        "levels": [list(level) for level in X.names],
        "basepoint": [level[0] for level in X.names],
        "faces": {},
        "degeneracies": {},
    }
    for m in range(1, X.dim_bound + 1):
        for i, f in enumerate(X.faces[m]):
            out["faces"][f"{m}:{i}"] = {
                X.names[m][a]: X.names[m - 1][b] for a, b in enumerate(f.tolist())
            }
    for m in range(X.dim_bound):
        for i, s in enumerate(X.degens[m]):
            out["degeneracies"][f"{m}:{i}"] = {
                X.names[m][a]: X.names[m + 1][b] for a, b in enumerate(s.tolist())
            }
    if X.dim is not None:
        out["geometric_dim"] = X.dim
    return out


def from_pss_dict(data):
    top = int(data["dim_bound"])
    levels = data["levels"]
    base = data["basepoint"]
    if len(levels) != top + 1 or len(base) != top + 1:
        raise ValueError("levels/basepoint length must be dim_bound + 1")
    names = []
    for m, level in enumerate(levels):
        if base[m] not in level:
            raise ValueError(f"basepoint {base[m]!r} missing from level {m}")
        if len(set(level)) != len(level):
            raise ValueError(f"duplicate simplex ids at level {m}")
        names.append([base[m]] + [s for s in level if s != base[m]])
    index = [{s: k for k, s in enumerate(level)} for level in names]

    def table(key, src, dst):
        raw = data["faces" if src > dst else "degeneracies"][key]
        arr = np.zeros(len(names[src]), dtype=np.int64)
        for s, t in raw.items():
            arr[index[src][s]] = index[dst][t]
        if set(raw) != set(names[src]):
            raise ValueError(f"table {key} is not total")
        return arr

    faces = [[]] + [[table(f"{m}:{i}", m, m - 1) for i in range(m + 1)] for m in range(1, top + 1)]
    degens = [
        [table(f"{m}:{i}", m, m + 1) for i in range(m + 1)] if m < top else []
        for m in range(top + 1)
    ]
    return PointedSimplicialSet(names, faces, degens, data.get("geometric_dim"))


def dumps_pss(X):
    return json.dumps(to_pss_dict(X), sort_keys=True, indent=1) + "\n"


def write_pss_json(X, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_pss(X))


def read_pss_json(path):
    with open(path, encoding="utf-8") as fh:
        X = from_pss_dict(json.load(fh))
    X.validate()
    return X
