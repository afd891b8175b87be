"""Integer chains, Smith normal form and homology.

All arithmetic is exact.  Boundary matrices are small-entry int64 arrays;
Smith normal form runs on Python integers (or on the compiled int64 kernel
with automatic fallback when an intermediate would overflow).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .sset import TruncationError

__all__ = [
    "ChainComplexZ",
    "HomologyGroup",
    "SmithForm",
    "smith_normal_form",
    "invariant_factors",
    "normalized_chains",
    "homology",
    "reduced_homology",
    "euler",
    "euler_from_homology",
    "is_acyclic",
    "format_homology",
    "homology_table",
]


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group ``Z^rank + sum Z/t``."""

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("invariant factors must divide successively")
        if any(t <= 1 for t in self.torsion):
            raise ValueError("torsion coefficients must exceed 1")

    @property
    def is_zero(self):
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass
class ChainComplexZ:
    """Free (or presented) chain complex of abelian groups.

    ``bases[k]`` labels the free generators in degree ``k``; ``diffs[k]`` is
    the integer matrix of the differential out of degree ``k`` into degree
    ``k + step`` (``step = -1`` for chain complexes, ``+1`` for cochain
    complexes).  If ``relations[k]`` is given, its columns generate the
    relation sublattice and the term in degree ``k`` is the quotient.
    """

    bases: dict
    diffs: dict
    step: int = -1
    relations: dict = field(default_factory=dict)

    def degrees(self):
        return sorted(self.bases)

    def rank(self, k):
        return len(self.bases.get(k, ()))

    def diff(self, k):
        """Matrix of the differential leaving degree ``k``."""
        tgt = k + self.step
        if k in self.diffs:
            return np.asarray(self.diffs[k])
        return np.zeros((self.rank(tgt), self.rank(k)), dtype=np.int64)

    def check(self):
        for k in self.degrees():
            d = self.diff(k)
            if d.shape != (self.rank(k + self.step), self.rank(k)):
                raise ValueError(f"differential out of degree {k} has shape {d.shape}")
            dd = _matmul(self.diff(k + self.step), d)
            if any(v != 0 for row in dd for v in row):
                raise ValueError(f"d o d != 0 at degree {k}")
            rel = self.relations.get(k)
            if rel is not None and np.asarray(rel).size:
                image = _matmul(d, rel)
                tgt_rel = self.relations.get(k + self.step)
                if image and any(any(r) for r in image):
                    if tgt_rel is None or not _in_lattice(image, tgt_rel):
                        raise ValueError(f"differential does not preserve relations at {k}")
        return True


# ----------------------------------------------------------------------------
# exact matrix helpers (lists of Python ints)


def _tolist(M):
    if isinstance(M, np.ndarray):
        return [[int(v) for v in row] for row in M.tolist()] if M.ndim == 2 else []
    return [[int(v) for v in row] for row in M]


def _shape(M):
    if isinstance(M, np.ndarray):
        return M.shape
    return (len(M), len(M[0]) if M else 0)


def _matmul(A, B):
    A, B = _tolist(A), _tolist(B)
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


@dataclass
class SmithForm:
    """``U @ M @ V == S`` with ``S`` diagonal and ``U``, ``V`` unimodular."""

    diagonal: list
    S: list
    U: list
    V: list

    @property
    def rank(self):
        return len(self.diagonal)


def smith_normal_form(M, witnesses=True):
    """Smith normal form of an integer matrix.

    Pivot rule: the smallest nonzero absolute value in the active submatrix,
    ties broken row-major.  With ``witnesses=False`` only the invariant
    factors are returned (a list), computed by the hot kernel.
    """
    if not witnesses:
        return invariant_factors(M)
    A = _tolist(M)
    m, n = _shape(M)
    U, V = _identity(m), _identity(n)
    t = 0
    while t < min(m, n):
        piv = _min_pivot(A, t)
        if piv is None:
            break
        while True:
            pi, pj = piv
            if pi != t:
                A[t], A[pi] = A[pi], A[t]
                U[t], U[pi] = U[pi], U[t]
            if pj != t:
                for row in A:
                    row[t], row[pj] = row[pj], row[t]
                for row in V:
                    row[t], row[pj] = row[pj], row[t]
            p = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[t])]
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
            clean = all(A[i][t] == 0 for i in range(t + 1, m)) and all(
                A[t][j] == 0 for j in range(t + 1, n)
            )
            if clean:
                bad = next(
                    (i for i in range(t + 1, m) if any(A[i][j] % p for j in range(t + 1, n))),
                    None,
                )
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad])]
                U[t] = [a + b for a, b in zip(U[t], U[bad])]
            piv = _min_pivot(A, t)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    diag = [A[i][i] for i in range(t)]
    return SmithForm(diag, A, U, V)


def _min_pivot(A, t):
    best, where = None, None
    for i in range(t, len(A)):
        row = A[i]
        for j in range(t, len(row)):
            v = row[j]
            if v:
                av = abs(v)
                if best is None or av < best:
                    best, where = av, (i, j)
                    if av == 1:
                        return where
    return where


def invariant_factors(M):
    """Nonzero invariant factors ``d_1 | d_2 | ...`` of an integer matrix."""
    shape = _shape(M)
    if 0 in shape:
        return []
    return list(_kernels.smith_diagonal(np.asarray(_tolist(M), dtype=object) if _big(M) else M))


def _big(M):
    if isinstance(M, np.ndarray) and M.dtype != object:
        return False
    return any(abs(int(v)) >= 2**62 for row in _tolist(M) for v in row)


# ----------------------------------------------------------------------------
# lattice helpers for presented complexes


def _columns(M):
    M = _tolist(M)
    return [list(c) for c in zip(*M)] if M and M[0] else []


def _from_columns(cols, nrows):
    if not cols:
        return [[] for _ in range(nrows)]
    return [list(r) for r in zip(*cols)]


def _kernel_basis(A, ncols):
    """Columns spanning the integer kernel of ``A`` (``ncols`` unknowns)."""
    A = _tolist(A)
    if not A or not A[0]:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    snf = smith_normal_form(A)
    r = snf.rank
    V = snf.V
    return [[V[i][j] for i in range(ncols)] for j in range(r, ncols)]


def _lattice_basis(cols, dim):
    """A basis (list of columns) of the lattice generated by ``cols``."""
    cols = [c for c in cols if any(c)]
    if not cols:
        return []
    G = _from_columns(cols, dim)
    snf = smith_normal_form(G)
    GV = _matmul(G, snf.V)
    return [[GV[i][j] for i in range(dim)] for j in range(snf.rank)]


def _solve(basis, targets, dim):
    """Integer coefficients expressing each target column in ``basis``."""
    if not targets:
        return []
    if not basis:
        if any(any(t) for t in targets):
            raise ValueError("target outside the zero lattice")
        return [[] for _ in targets]
    B = _from_columns(basis, dim)
    snf = smith_normal_form(B)
    U, V, d = snf.U, snf.V, snf.diagonal
    z = len(basis)
    out = []
    for t in targets:
        ut = [sum(u * x for u, x in zip(row, t)) for row in U]
        if any(ut[i] for i in range(z, len(ut))):
            raise ValueError("target outside the lattice")
        c1 = []
        for i in range(z):
            if ut[i] % d[i]:
                raise ValueError("target outside the lattice")
            c1.append(ut[i] // d[i])
        out.append([sum(V[r][i] * c1[i] for i in range(z)) for r in range(z)])
    return out


def _in_lattice(cols_matrix, gens):
    dim = len(_tolist(cols_matrix))
    try:
        basis = _lattice_basis(_columns(gens), dim)
        _solve(basis, _columns(cols_matrix), dim)
    except ValueError:
        return False
    return True


def _presented_homology(C, k):
    """Homology at degree ``k`` of a complex of presented groups F/R."""
    nk = C.rank(k)
    out_deg, in_deg = k + C.step, k - C.step
    D = _tolist(C.diff(k))
    R_out = _columns(C.relations.get(out_deg, np.zeros((C.rank(out_deg), 0))))
    R_k = _columns(C.relations.get(k, np.zeros((nk, 0))))
    n_out = C.rank(out_deg)
    # cycles: v with D v in span(R_out); kernel of [D | -R_out]
    if n_out:
        aug = [row + [-c[i] for c in R_out] for i, row in enumerate(D)] if D else []
        ker = _kernel_basis(aug, nk + len(R_out)) if aug else [
            [int(i == j) for i in range(nk + len(R_out))] for j in range(nk + len(R_out))
        ]
        Z = _lattice_basis([c[:nk] for c in ker], nk)
    else:
        Z = [[int(i == j) for i in range(nk)] for j in range(nk)]
    B_gens = _columns(C.diff(in_deg)) if C.rank(in_deg) else []
    B_gens = B_gens + R_k
    coeffs = _solve(Z, [b for b in B_gens if any(b)], nk)
    z = len(Z)
    if not coeffs:
        return HomologyGroup(z, ())
    Cmat = _from_columns(coeffs, z)
    d = invariant_factors(Cmat) if z else []
    return HomologyGroup(z - len(d), tuple(x for x in d if x > 1))


def homology(C):
    """Homology of every stored degree: ``{k: HomologyGroup}``."""
    out = {}
    presented = any(np.asarray(r).size for r in C.relations.values())
    ranks = {}
    factors = {}
    if not presented:
        for k in C.degrees():
            f = invariant_factors(C.diff(k)) if C.rank(k) and C.rank(k + C.step) else []
            factors[k] = f
            ranks[k] = len(f)
    for k in C.degrees():
        if presented:
            out[k] = _presented_homology(C, k)
            continue
        incoming = factors.get(k - C.step, [])
        rank = C.rank(k) - ranks[k] - len(incoming)
        out[k] = HomologyGroup(rank, tuple(x for x in incoming if x > 1))
    return out


# ----------------------------------------------------------------------------
# simplicial chains


def normalized_chains(X, through=None):
    """Reduced normalized chains of a pointed simplicial set.

    Degree ``m`` is free on the non-degenerate non-basepoint ``m``-simplices;
    the differential is the alternating sum of faces, with degenerate and
    basepoint faces sent to zero.  With ``through=None`` all degrees up to the
    geometric dimension are included (the dimension claim is verified);
    otherwise degrees ``0..through+1`` are built and ``dim_bound`` must reach
    ``through + 1``.
    """
    if through is None:
        top = X.require_complete()
    else:
        if X.dim_bound < through + 1:
            raise TruncationError(
                f"truncation insufficient: need dim_bound >= {through + 1}, have {X.dim_bound}"
            )
        top = through + 1
        if X.dim is not None and X.dim < top:
            top = max(X.dim, 0)
    nd = [X.nondegenerate(m) for m in range(top + 1)]
    bases = {m: [X.names[m][k] for k in nd[m]] for m in range(top + 1)}
    diffs = {}
    for m in range(1, top + 1):
        pos = np.full(X.size(m - 1), -1, dtype=np.int64)
        pos[nd[m - 1]] = np.arange(len(nd[m - 1]))
        D = np.zeros((len(nd[m - 1]), len(nd[m])), dtype=np.int64)
        cols = np.arange(len(nd[m]))
        for i in range(m + 1):
            rows = pos[X.faces[m][i][nd[m]]]
            ok = rows >= 0
            np.add.at(D, (rows[ok], cols[ok]), -1 if i % 2 else 1)
        diffs[m] = D
    diffs[0] = np.zeros((0, len(nd[0])), dtype=np.int64)
    return ChainComplexZ(bases, diffs, step=-1)


def reduced_homology(X, through=None):
    """Reduced integral homology of ``X`` by degree."""
    C = normalized_chains(X, through)
    H = homology(C)
    if through is not None:
        H = {k: g for k, g in H.items() if k <= through}
    return H


def is_acyclic(X):
    return all(g.is_zero for g in reduced_homology(X).values())


def euler(X):
    """Reduced Euler characteristic from non-degenerate simplex counts."""
    top = X.require_complete()
    return sum((-1) ** m * len(X.nondegenerate(m)) for m in range(top + 1))


def euler_from_homology(X):
    return sum((-1) ** k * g.rank for k, g in reduced_homology(X).items())


def degree_label(k):
    """Subscript text: ``4`` or ``{-2}``."""
    return str(k) if k >= 0 else "{%d}" % k


def format_homology(H, reduced=True):
    """Lines such as ``H̃_4 = Z`` or ``H_{-2} = Z/2``; ``H̃_* = 0`` when trivial."""
    mark = "H\u0303" if reduced else "H"
    lines = [f"{mark}_{degree_label(k)} = {g}" for k, g in sorted(H.items()) if not g.is_zero]
    return lines or [f"{mark}_* = 0"]


def homology_table(H):
    return [
        {"degree": k, "rank": g.rank, "torsion": list(g.torsion), "group": str(g)}
        for k, g in sorted(H.items())
    ]
