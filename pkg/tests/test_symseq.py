from itertools import product
from math import comb, factorial

import pytest

from symtower.groups import BASE, GSet, check_equivariant_bijection, permute
from symtower.symseq import (
    MAX_SEQ_DEGREE,
    FreeSpectrumSpec,
    SliceCertificateError,
    SymmetricSequence,
    associativity_certificate,
    commutativity_certificate,
    concentrated,
    describe_element,
    free_monoid,
    free_size,
    free_spectrum,
    free_tilde,
    point_sequence,
    seq_smash,
    slice_check,
    sym_power_seq,
    sym_slice_check,
    unit_sequence,
)


def one_point_at(degree, M):
    return concentrated(M, degree, ["x"], lambda g, x: x)


def test_unit_is_neutral():
    X = free_monoid(("t1", "t2"), 3)
    U = unit_sequence(3)
    XU = seq_smash(X, U, 3)
    for m in range(4):
        L = XU[m]
        phi = {BASE: BASE}
        for e in L.elements[1:]:
            degs, g, (w, _) = e
            phi[e] = X[m].act(g, w)
        assert check_equivariant_bijection(L, X[m], phi) is None


def test_smash_sizes_of_points():
    X = one_point_at(1, 3)
    S = seq_smash(X, X, 3)
    assert S.reduced_sizes() == [0, 0, 2, 0]
    assert seq_smash(point_sequence(3), X, 3).reduced_sizes() == [0, 0, 0, 0]
    S.validate()


def test_free_monoid():
    S = free_monoid(("t1", "t2"), 4)
    assert S.reduced_sizes() == [1, 2, 4, 8, 16]
    assert len(S[2].orbits()) == 3
    # orbits of T^m are multisets
    assert [len(S[m].orbits()) for m in range(5)] == [comb(m + 1, m) for m in range(5)]


def test_free_tilde_level():
    F = free_tilde(2, ("a1", "a2"), 3)
    assert F.reduced_sizes() == [0, 0, 4, 0]
    assert all(len(o) == 2 for o in F[2].orbits())


@pytest.mark.parametrize("n, a, t", [(0, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 2), (2, 2, 2)])
def test_free_spectrum_size_law(n, a, t):
    M = 4
    F = free_spectrum(FreeSpectrumSpec.of_sizes(n, a, t), M)
    expected = [factorial(m) // factorial(m - n) * a * t ** (m - n) if m >= n else 0 for m in range(M + 1)]
    assert F.reduced_sizes() == expected
    assert [free_size(n, a, t, m) for m in range(M + 1)] == expected


def test_free_spectrum_bottom_level_is_free():
    F = free_spectrum(FreeSpectrumSpec.of_sizes(2, 2, 1), 2)
    assert F[2].reduced_size == 4
    assert len(F[2].orbits()) == 2


def test_slice_worked_example():
    c = slice_check(FreeSpectrumSpec.of_sizes(1, 1, 2), 3)
    assert c.passed and c.left_size == c.right_size == 12


@pytest.mark.parametrize("n, a, t", list(product(range(3), (1, 2), (1, 2))))
def test_slices(n, a, t):
    spec = FreeSpectrumSpec.of_sizes(n, a, t)
    F = free_spectrum(spec, 5)
    for m in range(6):
        c = slice_check(spec, m, F=F)
        assert c.passed and c.left_size == free_size(n, a, t, m)


def test_slice_table_is_stable():
    spec = FreeSpectrumSpec.of_sizes(1, 1, 2)
    assert slice_check(spec, 3).digest == slice_check(spec, 3).digest


def test_slice_limits():
    with pytest.raises(ValueError):
        slice_check(FreeSpectrumSpec.of_sizes(1, 1, 1), 7)
    with pytest.raises(ValueError):
        free_monoid(("t",), MAX_SEQ_DEGREE + 1)


def test_slice_failure_raises():
    spec = FreeSpectrumSpec.of_sizes(1, 1, 2)
    good = free_spectrum(spec, 3)
    bad_levels = list(good.levels)
    L = bad_levels[3]
    kept = [e for e in L.elements if e != BASE][:-1]
    bad_levels[3] = GSet(L.group, kept + [BASE], L.act)
    with pytest.raises(SliceCertificateError):
        slice_check(spec, 3, F=SymmetricSequence(bad_levels))


def sym_closed_size(p, n, a, t, m):
    k = m - p * n
    return factorial(m) // (factorial(p) * factorial(k)) * a**p * t**k


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("a, t", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_sym_slices_p2(m, a, t):
    c = sym_slice_check(2, FreeSpectrumSpec.of_sizes(1, a, t), m)
    assert c.passed
    assert c.left_size == c.right_size == sym_closed_size(2, 1, a, t, m)
    assert c.extra["quotient_onto"] and c.extra["fibers_are_orbits"] and c.extra["quotient_equivariant"]


def test_sym_slice_worked_examples():
    c = sym_slice_check(2, FreeSpectrumSpec.of_sizes(1, 2, 1), 2)
    assert c.left_size == 4
    c = sym_slice_check(2, FreeSpectrumSpec.of_sizes(1, 1, 2), 3)
    assert c.extra["fibers_are_orbits"]
    # free twist action: every fiber has two elements
    assert c.extra["orbit_count"] * 2 == c.extra["power_slice"]["left_reduced_size"]


def test_sym_slice_p1_and_p3():
    spec = FreeSpectrumSpec.of_sizes(1, 1, 2)
    for m in (1, 2, 3):
        c = sym_slice_check(1, spec, m)
        assert c.passed and c.left_size == slice_check(spec, m).left_size
    c = sym_slice_check(3, FreeSpectrumSpec.of_sizes(1, 2, 1), 3)
    assert c.passed and c.left_size == sym_closed_size(3, 1, 2, 1, 3)
    c = sym_slice_check(2, FreeSpectrumSpec.of_sizes(2, 1, 1), 4)
    assert c.passed and c.left_size == sym_closed_size(2, 2, 1, 1, 4)


def test_sym_slice_argument_errors():
    spec = FreeSpectrumSpec.of_sizes(1, 1, 1)
    with pytest.raises(ValueError):
        sym_slice_check(2, spec, 1)
    with pytest.raises(ValueError):
        sym_slice_check(4, spec, 4)


def test_sym_power_sequence_orbits():
    X = one_point_at(1, 2)
    S, P, projs = sym_power_seq(X, 2)
    # x ^ x in degree 2: the twist acts through the coordinate swap
    assert P.reduced_sizes() == [0, 0, 2]
    assert S.reduced_sizes() == [0, 0, 1]


def test_twist_is_the_permute_convention():
    assert permute((1, 0), ("a", "b")) == ("b", "a")


def test_commutativity_and_associativity():
    X = one_point_at(1, 3)
    Y = free_monoid(("t1",), 3)
    Z = free_tilde(1, ("a1", "a2"), 3)
    assert all(c.passed for c in commutativity_certificate(X, Z, 3))
    assert all(c.passed for c in commutativity_certificate(Y, Z, 3))
    assert all(c.passed for c in associativity_certificate(X, Y, Z, 3))
    assert all(c.passed for c in associativity_certificate(Z, Z, Y, 3))


def test_describe_element():
    S = seq_smash(one_point_at(1, 2), one_point_at(1, 2), 2)
    texts = sorted(describe_element(e) for e in S[2].elements)
    assert texts[0] == BASE
    assert all(t.startswith("[1, 1]|") for t in texts[1:])
