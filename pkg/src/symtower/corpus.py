"""Small fixed and pseudorandom inputs shared by the tests and the CLI."""

from __future__ import annotations

import random
from itertools import combinations

from .groups import EmbeddingSpec, GSet, compose, symmetric_group
from .sset import (
    Inclusion,
    basepoint_inclusion,
    cone,
    identity_inclusion,
    point,
    simplex_quotient,
    smash,
    sphere,
    wedge,
    wedge_left,
)

__all__ = [
    "spaces",
    "inclusions",
    "random_inclusion",
    "random_inclusions",
    "inclusion_by_names",
    "adjunction_corpus",
]


def spaces(dim_bound=5):
    """Named spaces with geometric dimension at most 2."""
    b = dim_bound
    return {
        "point": point(b),
        "S0": sphere(0, b),
        "S1": sphere(1, b),
        "S2": sphere(2, b),
        "S0vS0": wedge(sphere(0, b), sphere(0, b)),
        "S1vS1": wedge(sphere(1, b), sphere(1, b)),
        "S1vS2": wedge(sphere(1, b), sphere(2, b)),
        "S1^S1": smash(sphere(1, b), sphere(1, b)),
        "coneS1": cone(sphere(1, b))[0],
        "triangle": simplex_quotient([(0, 1, 2)], b, collapse=[(0,)]),
        "circle3": simplex_quotient([(0, 1), (1, 2), (0, 2)], b, collapse=[(0,)]),
    }


def inclusions(dim_bound=5):
    b = dim_bound
    S0, S1, S2 = sphere(0, b), sphere(1, b), sphere(2, b)
    return {
        "id(S1)": identity_inclusion(S1),
        "base(S1vS1)": basepoint_inclusion(wedge(S1, S1)),
        "wedge_left(S0,S0)": wedge_left(S0, S0),
        "wedge_left(S1,S1)": wedge_left(S1, S1),
        "wedge_left(S1,S2)": wedge_left(S1, S2),
        "cone_incl(S1)": cone(S1)[1],
    }


def inclusion_by_names(X, Y):
    """The inclusion ``X -> Y`` matching simplices by name."""
    comps = []
    for m in range(min(X.dim_bound, Y.dim_bound) + 1):
        lookup = {name: k for k, name in enumerate(Y.names[m])}
        comps.append([lookup[name] for name in X.names[m]])
    return Inclusion(X, Y, comps)


def _closure(facets):
    out = set()
    for f in facets:
        for r in range(1, len(f) + 1):
            out.update(combinations(f, r))
    return out


def random_inclusion(rng, max_dim=2, max_cells=8, dim_bound=None, n=3):
    """A random subcomplex inclusion ``K'/L -> K/L`` of ordered complexes.

    ``K`` has dimension at most ``max_dim`` and ``K/L`` at most ``max_cells``
    non-degenerate non-base simplices.  The default ``dim_bound`` suffices
    for ``Sym^n`` analysis.
    """
    while True:
        nv = rng.randint(2, 5)
        simplices = [s for r in range(1, max_dim + 2) for s in combinations(range(nv), r)]
        facets = rng.sample(simplices, rng.randint(1, min(4, len(simplices))))
        K = _closure(facets)
        verts = sorted({v for f in facets for v in f})
        L = {(verts[0],)} if rng.random() < 0.7 else set()
        if len(K - L) > max_cells:
            continue
        sub = [s for s in sorted(K) if s not in L]
        keep = [s for s in sub if rng.random() < 0.5]
        Kp = _closure(keep) | L
        dim = max(len(f) - 1 for f in facets)
        bound = n * dim + 1 if dim_bound is None else dim_bound
        collapse = sorted(L)
        Y = simplex_quotient(facets, bound, collapse=collapse, dim=dim)
        if Kp:
            X = simplex_quotient(sorted(Kp), bound, collapse=collapse, dim=dim)
        else:
            X = point(bound)
        return inclusion_by_names(X, Y)


def random_inclusions(count=20, seed=0, **kw):
    rng = random.Random(seed)
    return [random_inclusion(rng, **kw) for _ in range(count)]


def _letters(k):
    return [f"x{j}" for j in range(1, k + 1)]


def adjunction_corpus():
    """``(G, H, X, Y)`` quadruples with carriers of at most 4 non-base points.

    ``H`` runs over Young, tail and block-shuffle embeddings into
    ``Sigma_2`` and ``Sigma_3``; ``X`` and ``Y`` are trivial, free-orbit and
    permutation sets.
    """
    out = []
    for n in (2, 3):
        G = symmetric_group(n)
        embeddings = [EmbeddingSpec.young(*b) for b in ([n], [1] * n, [1, n - 1], [n - 1, 1])]
        embeddings += [EmbeddingSpec.tail(n, k) for k in range(n + 1)]
        if n >= 2:
            embeddings.append(EmbeddingSpec.block_shuffle(2, 1, n))
        seen = set()
        Ys = _g_sets(G)
        for spec in embeddings:
            H = spec.group()
            if H in seen:
                continue
            seen.add(H)
            for X in _h_sets(H):
                for Y in Ys:
                    out.append((G, H, X, Y))
    return out


def _h_sets(H):
    n = H.degree
    sets = [GSet(H, ["*"], lambda g, x: x)]
    sets.append(GSet(H, ["x1", "*"], lambda g, x: x))
    sets.append(GSet(H, _letters(2) + ["*"], lambda g, x: x))
    if n <= 4:
        letters = [f"p{k}" for k in range(n)]
        sets.append(GSet(H, letters + ["*"], lambda g, x: f"p{g[int(x[1:])]}"))
    if H.order <= 4:
        free = [("f", h) for h in H.elements]
        sets.append(GSet(H, free + ["*"], lambda g, x: ("f", compose(g, x[1]))))
    return sets


def _g_sets(G):
    n = G.degree
    letters = [f"p{k}" for k in range(n)]
    return [
        GSet(G, ["*"], lambda g, x: x),
        GSet(G, ["y1", "*"], lambda g, x: x),
        GSet(G, letters + ["*"], lambda g, x: f"p{g[int(x[1:])]}"),
        GSet(G, letters + ["y1", "*"], lambda g, x: x if x == "y1" else f"p{g[int(x[1:])]}"),
    ]
