from itertools import permutations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symtower.corpus import _h_sets, adjunction_corpus
from symtower.groups import (
    BASE,
    EmbeddingSpec,
    GSet,
    adjunction_check,
    check_equivariant_bijection,
    compose,
    cor,
    enumerate_group,
    equivariant_maps,
    find_equivariant_bijection,
    identity,
    inverse,
    orbit_quotient,
    perm_from_oneline,
    perm_to_oneline,
    permute,
    res,
    symmetric_group,
)

perms = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(n))).map(tuple))


@given(perms)
def test_inverse_and_identity(p):
    n = len(p)
    assert compose(p, inverse(p)) == identity(n) == compose(inverse(p), p)
    assert perm_from_oneline(perm_to_oneline(p)) == p


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(*[st.permutations(list(range(n))).map(tuple)] * 2)))
def test_permute_is_left_action(pq):
    p, q = pq
    seq = tuple("abcdef"[: len(p)])
    assert permute(p, permute(q, seq)) == permute(compose(p, q), seq)


def test_symmetric_group_orders():
    assert [symmetric_group(n).order for n in range(6)] == [factorial(n) for n in range(6)]
    assert set(symmetric_group(3).elements) == set(permutations(range(3)))


@pytest.mark.parametrize(
    "spec, order",
    [
        (EmbeddingSpec.young(2, 1), 2),
        (EmbeddingSpec.young(2, 2), 4),
        (EmbeddingSpec.young(0, 3), 6),
        (EmbeddingSpec.block_shuffle(2, 2), 2),
        (EmbeddingSpec.block_shuffle(3, 1, 5), 6),
        (EmbeddingSpec.tail(5, 3), 6),
        (EmbeddingSpec.product(EmbeddingSpec.block_shuffle(2, 1, 4), EmbeddingSpec.tail(4, 2)), 4),
    ],
)
def test_embedding_orders(spec, order):
    G = spec.group()
    assert G.order == order == spec.expected_order
    assert G.is_subgroup_of(symmetric_group(spec.degree))


def test_block_shuffle_moves_whole_blocks():
    (g,) = EmbeddingSpec.block_shuffle(2, 2, 5).generators()
    assert g == (2, 3, 0, 1, 4)


def test_overlapping_product_rejected():
    spec = EmbeddingSpec.product(EmbeddingSpec.young(2, 1), EmbeddingSpec.tail(3, 2))
    with pytest.raises(ValueError, match="order"):
        spec.group()


def test_degree_cap():
    with pytest.raises(ValueError):
        enumerate_group([tuple(range(11))], 11)


def test_spec_records():
    spec = EmbeddingSpec.product(EmbeddingSpec.block_shuffle(2, 1, 4), EmbeddingSpec.tail(4, 2))
    assert spec.to_record() == {
        "type": "product",
        "factors": [{"type": "block_shuffle", "p": 2, "n": 1, "degree": 4}, {"type": "tail", "m": 4, "k": 2}],
    }


def _letters(G):
    n = G.degree
    return GSet(G, [f"p{k}" for k in range(n)] + [BASE], lambda g, x: f"p{g[int(x[1:])]}")


def test_cor_size_law_and_action():
    G = symmetric_group(4)
    specs = [
        EmbeddingSpec.young(2, 2),
        EmbeddingSpec.young(1, 3),
        EmbeddingSpec.tail(4, 2),
        EmbeddingSpec.block_shuffle(2, 2),
        EmbeddingSpec.product(EmbeddingSpec.block_shuffle(2, 1, 4), EmbeddingSpec.tail(4, 2)),
    ]
    for spec in specs:
        H = spec.group()
        for X in _h_sets(H):
            C = cor(G, H, X)
            assert C.reduced_size == G.order // H.order * X.reduced_size
            C.validate()
            assert all(C.act(g, BASE) == BASE for g in G.elements)


def test_cor_over_whole_group_is_isomorphic():
    G = symmetric_group(3)
    X = _letters(G)
    C = cor(G, G, X)
    phi = find_equivariant_bijection(C, X)
    assert phi is not None and check_equivariant_bijection(C, X, phi) is None


def test_cor_rejects_non_subgroup():
    G = symmetric_group(3)
    H = EmbeddingSpec.young(1, 1, 1, 1).group()
    with pytest.raises(ValueError):
        cor(G, H, GSet(H, [BASE], lambda g, x: x))


def test_adjunction_examples():
    G, H = symmetric_group(2), EmbeddingSpec.young(1, 1).group()
    one = GSet(H, ["x", BASE], lambda g, x: x)
    swap = _letters(G)
    r = adjunction_check(G, H, one, swap)
    assert r.passed and r.left_count == r.right_count == 3
    pt = GSet(H, [BASE], lambda g, x: x)
    assert adjunction_check(G, H, pt, swap).left_count == 1
    r = adjunction_check(G, G, _letters(G), swap)
    assert r.passed and r.left_count == len(equivariant_maps(swap, swap))


def test_adjunction_corpus():
    corpus = adjunction_corpus()
    assert len(corpus) > 50
    for G, H, X, Y in corpus:
        assert X.reduced_size <= 4 and Y.reduced_size <= 4
        r = adjunction_check(G, H, X, Y)
        assert r.passed, (G, H, X.elements, Y.elements)


def test_adjunction_cap():
    G = symmetric_group(3)
    big = GSet(G, [f"y{k}" for k in range(7)] + [BASE], lambda g, x: x)
    with pytest.raises(ValueError, match="cap"):
        adjunction_check(G, G, big, big)


def test_orbit_quotient_idempotent():
    G = symmetric_group(3)
    C = cor(G, EmbeddingSpec.tail(3, 2), _letters(EmbeddingSpec.tail(3, 2).group()))
    reps, proj = orbit_quotient(C)
    Q = GSet(G, reps, lambda g, x: x)
    reps2, proj2 = orbit_quotient(Q)
    assert reps2 == list(Q.elements) and all(proj2[x] == x for x in Q.elements)
    assert len(reps) - 1 == len(C.orbits())


def test_restriction_can_only_split_orbits():
    G = symmetric_group(3)
    X = _letters(G)
    R = res(X, EmbeddingSpec.tail(3, 2).group())
    assert len(X.orbits()) == 1 and len(R.orbits()) == 2


def test_bijection_checker_reports_failures():
    G = symmetric_group(2)
    X = _letters(G)
    Y = GSet(G, ["a", "b", BASE], lambda g, x: x)
    assert find_equivariant_bijection(X, Y) is None
    bad = {BASE: BASE, "p0": "a", "p1": "b"}
    assert "not equivariant" in check_equivariant_bijection(X, Y, bad)
    assert check_equivariant_bijection(X, Y, {BASE: BASE, "p0": "a"}) == "map not total"
