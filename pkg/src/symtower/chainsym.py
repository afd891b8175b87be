"""Naive symmetric powers of bounded complexes of free abelian groups.

Complexes here are cohomological (the differential raises degree by one)
and degrees are stored verbatim.  ``Sym^n`` is formed by taking the total
tensor power and passing to ``Sigma_n``-coinvariants, with the Koszul sign
``(-1)^(pq)`` for swapping adjacent factors of degrees ``p`` and ``q``.
Coinvariants of a signed permutation module can have 2-torsion, so the
terms of the result are presented as ``free / relations``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .homology import ChainComplexZ, _in_lattice, format_homology, homology

__all__ = [
    "BoundedComplex",
    "complex_from_ranks",
    "example_complex",
    "total_tensor",
    "tensor_power",
    "swap_matrices",
    "check_braid_relations",
    "sym_naive",
    "induced_map",
    "is_surjective_mod_relations",
    "ContrastReport",
    "contrast_report",
    "format_cohomology",
]


class BoundedComplex(ChainComplexZ):
    """Free complex with cohomological grading: ``d`` goes from ``k`` to ``k + 1``."""

    def __init__(self, bases, diffs):
        super().__init__(dict(bases), dict(diffs), step=+1)

    def shift(self, s):
        """Move every term from degree ``k`` to ``k + s`` (differential unchanged)."""
        return BoundedComplex(
            {k + s: v for k, v in self.bases.items()}, {k + s: v for k, v in self.diffs.items()}
        )

    def to_table(self):
        return {
            str(k): {"rank": self.rank(k), "d": self.diff(k).tolist()} for k in self.degrees()
        }


def complex_from_ranks(ranks, diffs):
    """``ranks`` maps degree to rank; ``diffs`` maps degree to the matrix out of it."""
    bases = {k: [f"e{k}_{j}" for j in range(r)] for k, r in ranks.items()}
    mats = {}
    for k in ranks:
        if k in diffs:
            mats[k] = np.asarray(diffs[k], dtype=np.int64).reshape(ranks.get(k + 1, 0), ranks[k])
    C = BoundedComplex(bases, mats)
    C.check()
    return C


def example_complex(shift=0):
    """``Z --id--> Z`` in degrees ``-1, 0`` (moved by ``shift``)."""
    C = complex_from_ranks({-1: 1, 0: 1}, {-1: [[1]]})
    return C.shift(shift) if shift else C


def _tensor_basis(factors):
    """Degree -> list of tuples ``((deg_1, j_1), ..., (deg_n, j_n))``."""
    per = [[(k, j) for k in F.degrees() for j in range(F.rank(k))] for F in factors]
    out = {}
    for t in product(*per):
        out.setdefault(sum(k for k, _ in t), []).append(t)
    for k in out:
        out[k].sort()
    return out


def _tensor_differential(factors, basis):
    index = {k: {t: a for a, t in enumerate(ts)} for k, ts in basis.items()}
    diffs = {}
    for k, ts in basis.items():
        tgt = basis.get(k + 1, [])
        D = np.zeros((len(tgt), len(ts)), dtype=np.int64)
        for col, t in enumerate(ts):
            sign = 1
            for pos, (deg, j) in enumerate(t):
                d = factors[pos].diff(deg)
                for r in np.flatnonzero(d[:, j]):
                    new = t[:pos] + ((deg + 1, int(r)),) + t[pos + 1 :]
                    D[index[k + 1][new], col] += sign * int(d[r, j])
                if deg % 2:
                    sign = -sign
        diffs[k] = D
    return diffs


def _tensor(factors):
    basis = _tensor_basis(factors)
    names = {
        k: ["(" + ",".join(f"{d}:{j}" for d, j in t) + ")" for t in ts] for k, ts in basis.items()
    }
    C = BoundedComplex(names, _tensor_differential(factors, basis))
    C.tuples = basis
    return C


def total_tensor(X, Y):
    """``Tot(X (x) Y)`` with ``d(x (x) y) = dx (x) y + (-1)^p x (x) dy``."""
    return _tensor([X, Y])


def tensor_power(X, n):
    if n < 1:
        raise ValueError("need n >= 1")
    return _tensor([X] * n)


def swap_matrices(T, n):
    """Matrices of the adjacent transpositions on ``X^(x)n``, per degree.

    ``out[t][k]`` is the signed permutation matrix of swapping factors
    ``t`` and ``t + 1`` in degree ``k``.
    """
    out = []
    for pos in range(n - 1):
        mats = {}
        for k, ts in T.tuples.items():
            idx = {t: a for a, t in enumerate(ts)}
            M = np.zeros((len(ts), len(ts)), dtype=np.int64)
            for col, t in enumerate(ts):
                new = list(t)
                new[pos], new[pos + 1] = t[pos + 1], t[pos]
                sign = -1 if (t[pos][0] * t[pos + 1][0]) % 2 else 1
                M[idx[tuple(new)], col] = sign
            mats[k] = M
        out.append(mats)
    return out


def check_braid_relations(T, swaps):
    """Involution, braid and far-commutation relations, plus ``d s = s d``."""
    n = len(swaps) + 1
    for k in T.tuples:
        eye = np.eye(len(T.tuples[k]), dtype=np.int64)
        for a in range(n - 1):
            s = swaps[a][k]
            if not np.array_equal(s @ s, eye):
                return False
            if k + 1 in T.tuples and not np.array_equal(T.diff(k) @ s, swaps[a][k + 1] @ T.diff(k)):
                return False
            for b in range(a + 1, n - 1):
                t = swaps[b][k]
                if b == a + 1:
                    if not np.array_equal(s @ t @ s, t @ s @ t):
                        return False
                elif not np.array_equal(s @ t, t @ s):
                    return False
    return True


def sym_naive(n, X):
    """Degreewise ``Sigma_n``-coinvariants of the total tensor power.

    Returns a :class:`ChainComplexZ` (step ``+1``) whose term in degree ``k``
    is the free group on the tensor basis modulo the columns ``s v - v``.
    """
    if not 1 <= n <= 4:
        raise ValueError("sym_naive supports 1 <= n <= 4")
    T = tensor_power(X, n)
    swaps = swap_matrices(T, n)
    if not check_braid_relations(T, swaps):
        raise AssertionError("Koszul-signed swaps do not define a Sigma_n action")
    relations = {}
    for k, ts in T.tuples.items():
        eye = np.eye(len(ts), dtype=np.int64)
        cols = [(s[k] - eye) for s in swaps]
        R = np.concatenate(cols, axis=1) if cols else np.zeros((len(ts), 0), dtype=np.int64)
        keep = np.flatnonzero(np.any(R != 0, axis=0))
        relations[k] = np.unique(R[:, keep], axis=1) if len(keep) else R[:, :0]
    S = ChainComplexZ(dict(T.bases), dict(T.diffs), step=+1, relations=relations)
    S.tuples = T.tuples
    S.swaps = swaps
    S.check()
    return S


def induced_map(f, X, Xp, n):
    """Matrices of ``f^(x)n`` between tensor powers; ``f[k]`` maps degree ``k``."""
    T, Tp = tensor_power(X, n), tensor_power(Xp, n)
    out = {}
    for k, ts in T.tuples.items():
        tgt = Tp.tuples.get(k, [])
        idx = {t: a for a, t in enumerate(tgt)}
        M = np.zeros((len(tgt), len(ts)), dtype=np.int64)
        for col, t in enumerate(ts):
            choices = []
            for deg, j in t:
                fk = np.asarray(f[deg])
                choices.append([((deg, int(r)), int(fk[r, j])) for r in np.flatnonzero(fk[:, j])])
            for combo in product(*choices):
                coeff = 1
                for _, c in combo:
                    coeff *= c
                M[idx[tuple(e for e, _ in combo)], col] += coeff
        out[k] = M
    return out


def is_surjective_mod_relations(M, relations):
    """Do the columns of ``M`` together with ``relations`` span the whole lattice?"""
    M = np.asarray(M, dtype=np.int64)
    rows = M.shape[0]
    if rows == 0:
        return True
    gens = np.concatenate([M, np.asarray(relations, dtype=np.int64).reshape(rows, -1)], axis=1)
    return _in_lattice(np.eye(rows, dtype=np.int64), gens)


def format_cohomology(H):
    return format_homology(H, reduced=False)


@dataclass
class ContrastReport:
    input_homology: dict
    sym2_homology: dict
    swap_signs: dict  # degree -> diagonal of the Sigma_2 generator on X(x)X
    input_acyclic: bool
    sym2_acyclic: bool

    @property
    def passed(self):
        return self.input_acyclic and not self.sym2_acyclic

    def to_dict(self):
        return {
            "input_homology": {str(k): str(g) for k, g in sorted(self.input_homology.items())},
            "sym2_homology": {str(k): str(g) for k, g in sorted(self.sym2_homology.items())},
            "swap_signs": {str(k): v for k, v in sorted(self.swap_signs.items())},
            "input_acyclic": self.input_acyclic,
            "sym2_acyclic": self.sym2_acyclic,
            "passed": self.passed,
        }


def contrast_report(X=None):
    """An acyclic complex whose naive ``Sym^2`` is not acyclic."""
    X = example_complex() if X is None else X
    H = homology(X)
    S = sym_naive(2, X)
    HS = homology(S)
    signs = {}
    for k, ts in S.tuples.items():
        s = S.swaps[0][k]
        # record the sign on swap-fixed tensors (the diagonal entries)
        fixed = [int(s[a, a]) for a, t in enumerate(ts) if t[0] == t[1]]
        if fixed:
            signs[k] = fixed
    return ContrastReport(
        H,
        HS,
        signs,
        all(g.is_zero for g in H.values()),
        all(g.is_zero for g in HS.values()),
    )

