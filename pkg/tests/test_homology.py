import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symtower.corpus import spaces
from symtower.homology import (
    ChainComplexZ,
    HomologyGroup,
    euler,
    euler_from_homology,
    format_homology,
    homology,
    invariant_factors,
    is_acyclic,
    normalized_chains,
    reduced_homology,
    smith_normal_form,
)
from symtower.sset import TruncationError, smash, sphere, suspend, sym_power, wedge


def _mat(A):
    return np.array(A, dtype=object)


def _det(A):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in A]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


def _check_witness(M, F):
    M = _mat(M)
    S = _mat(F.S)
    assert (_mat(F.U).dot(M).dot(_mat(F.V)) == S).all()
    assert abs(_det(F.U)) == 1
    assert abs(_det(F.V)) == 1
    m, n = M.shape
    d = F.diagonal
    for i in range(m):
        for j in range(n):
            want = d[i] if i == j and i < len(d) else 0
            assert S[i, j] == want
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert all(x > 0 for x in d)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.integers(1, 7), st.data())
def test_smith_witness_small(m, n, data):
    M = data.draw(st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m))
    F = smith_normal_form(M)
    _check_witness(M, F)
    assert F.diagonal == invariant_factors(M)


@pytest.mark.slow
@pytest.mark.parametrize("size", [50, 200])
def test_smith_witness_large(size):
    rng = np.random.default_rng(size)
    M = rng.integers(-1, 2, size=(size, size)) * (rng.random((size, size)) < 0.05)
    q = size // 4
    M[:, :q] = 2 * M[:, q : 2 * q]  # repeated columns with factor 2
    F = smith_normal_form(M)
    _check_witness(M.tolist(), F)
    assert F.diagonal == invariant_factors(M)


def test_smith_known_example():
    F = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert F.diagonal == [2, 6, 12]


def test_homology_group_validation():
    with pytest.raises(ValueError):
        HomologyGroup(0, (2, 3))
    assert str(HomologyGroup(2, (2,))) == "Z^2 + Z/2"
    assert str(HomologyGroup(0, ())) == "0"
    assert str(HomologyGroup(1, ())) == "Z"


def test_free_complex_with_torsion():
    # Z --2--> Z in degrees 1 -> 0: H_0 = Z/2, H_1 = 0
    C = ChainComplexZ({0: ["a"], 1: ["b"]}, {1: [[2]]}, step=-1)
    C.check()
    H = homology(C)
    assert H[0] == HomologyGroup(0, (2,)) and H[1].is_zero


def test_presented_complex():
    # Z/4 --x2--> Z/4: kernel {0,2}, image {0,2}, so H = Z/2 in both degrees
    C = ChainComplexZ({0: ["a"], 1: ["b"]}, {0: [[2]]}, step=+1, relations={0: [[4]], 1: [[4]]})
    C.check()
    H = homology(C)
    assert H[0] == HomologyGroup(0, (2,))
    assert H[1] == HomologyGroup(0, (2,))


def test_dd_zero_detected():
    C = ChainComplexZ({0: ["a"], 1: ["b"], 2: ["c"]}, {1: [[1]], 2: [[1]]}, step=-1)
    with pytest.raises(ValueError, match="d o d"):
        C.check()


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_sphere_homology(n):
    H = reduced_homology(sphere(n, n + 1))
    assert [str(H[k]) for k in sorted(H)] == ["Z" if k == n else "0" for k in sorted(H)]
    assert euler(sphere(n, n + 1)) == (-1) ** n


@pytest.mark.parametrize("name", sorted(spaces(5)))
def test_corpus_properties(name):
    X = spaces(5)[name]
    C = normalized_chains(X)
    C.check()
    assert euler(X) == euler_from_homology(X)
    SX = suspend(X)
    H, HS = reduced_homology(X), reduced_homology(SX)
    for k, g in H.items():
        assert HS[k + 1] == g
    assert HS[0].is_zero


def test_euler_multiplicative_under_smash():
    corpus = spaces(5)
    names = ["S0", "S1", "S2", "S0vS0", "S1vS1", "triangle", "circle3"]
    for a in names:
        for b in names:
            X, Y = corpus[a], corpus[b]
            if X.dim + Y.dim + 1 > 5:
                continue
            S = smash(X, Y)
            assert euler(S) == euler(X) * euler(Y) == euler_from_homology(S)


def test_euler_of_sym_square_of_two_points():
    assert euler(sym_power(2, wedge(sphere(0, 1), sphere(0, 1)))) == 3


def test_truncation_insufficient():
    X = sphere(2, 2)
    with pytest.raises(TruncationError):
        reduced_homology(X)
    with pytest.raises(TruncationError):
        euler(X)


def test_even_sphere_symmetric_square():
    H = reduced_homology(sym_power(2, sphere(2, 5)))
    assert format_homology(H) == ["H̃_4 = Z"]
    assert all(H[k].is_zero for k in range(4))


def test_odd_sphere_symmetric_powers_acyclic():
    assert is_acyclic(sym_power(2, sphere(1, 3)))
    assert is_acyclic(sym_power(3, sphere(1, 4)))


def test_format_homology():
    assert format_homology({-2: HomologyGroup(0, (2,)), 0: HomologyGroup(0, ())}, reduced=False) == [
        "H_{-2} = Z/2"
    ]
    assert format_homology({0: HomologyGroup(0, ())}) == ["H̃_* = 0"]
