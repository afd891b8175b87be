"""One test per acceptance criterion; a summary line per criterion is printed at the end of the run."""

import random
import time
from contextlib import contextmanager
from itertools import product

import pytest

from symtower.chainsym import example_complex, sym_naive
from symtower.corpus import _h_sets, adjunction_corpus, inclusions, random_inclusions, spaces
from symtower.cubes import (
    additivity_probe,
    box,
    kunneth_quotient_certificate,
    recheck_certificate,
    sym_kunneth_certificate,
    symmetrizable_check,
    tilde_box,
    tower,
)
from symtower.groups import EmbeddingSpec, adjunction_check, cor, symmetric_group
from symtower.homology import euler, euler_from_homology, homology, reduced_homology
from symtower.sset import smash, sphere, sym_power, wedge, wedge_left
from symtower.symseq import FreeSpectrumSpec, free_spectrum, slice_check, sym_slice_check
from symtower.zeta import (
    Series,
    binomial_neg,
    macdonald_check,
    multiplicativity_check,
    series_inv,
    suspension_inverse_check,
)


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f} s, limit {seconds} s"


def _nonzero(H):
    return {k: str(g) for k, g in H.items() if not g.is_zero}


@pytest.mark.criterion(1)
def test_chain_counterexample():
    with within(1):
        X = example_complex()
        assert _nonzero(homology(X)) == {}
        S = sym_naive(2, X)
        assert _nonzero(homology(S)) == {-2: "Z/2"}


@pytest.mark.criterion(2)
def test_odd_sphere_stable_vanishing():
    with within(5):
        # dim_bound = geometric dimension + 1, so every degree through the top is computed
        S2 = sym_power(2, sphere(1, 3))
        S3 = sym_power(3, sphere(1, 4))
        assert S2.dim == 2 and S3.dim == 3
        assert _nonzero(reduced_homology(S2)) == {}
        assert _nonzero(reduced_homology(S3)) == {}


@pytest.mark.criterion(3)
def test_even_sphere():
    with within(60):
        H = reduced_homology(sym_power(2, sphere(2, 5)))
        assert _nonzero(H) == {4: "Z"}
        assert all(H[k].is_zero for k in range(4))


@pytest.mark.criterion(4)
def test_macdonald_identity():
    cases = [
        (sphere(0, 1), 4),
        (sphere(1, 5), 4),
        (sphere(2, 7), 3),
        (wedge(sphere(1, 5), sphere(1, 5)), 4),
        (wedge(sphere(0, 1), sphere(0, 1)), 4),
    ]
    with within(300):
        for X, N in cases:
            r = macdonald_check(X, N)
            assert r.passed, r.to_dict()
            assert r.lhs == binomial_neg(euler(X), N)


@pytest.mark.criterion(5)
def test_multiplicativity():
    with within(300):
        for f in (wedge_left(sphere(1, 7), sphere(2, 7)), wedge_left(sphere(1, 4), sphere(1, 4))):
            r = multiplicativity_check(f, 3)
            assert r.passed, r.to_dict()


@pytest.mark.criterion(6)
def test_suspension_inverse():
    with within(120):
        for X in (sphere(0, 4), sphere(1, 7)):
            r = suspension_inverse_check(X, 3)
            assert r.passed and r.lhs == Series.one(3)


@pytest.mark.criterion(7)
def test_kunneth_certificates():
    with within(10):
        S0 = sphere(0, 5)
        f = wedge_left(S0, S0)
        for n in range(1, 5):
            for i in range(1, n + 1):
                for build in (kunneth_quotient_certificate, sym_kunneth_certificate):
                    c = build(f, n, i)
                    assert c.passed and recheck_certificate(c)
        assert [box(f, 2, i).space.reduced(0) for i in range(3)] == [1, 3, 4]
        assert [tilde_box(f, 2, i)[0].reduced(0) for i in range(3)] == [1, 2, 3]


@pytest.mark.criterion(8)
def test_symmetrizability():
    with within(120):
        cases = random_inclusions(20, seed=0, n=3)
        for f in cases:
            Y = f.target
            assert Y.dim <= 2
            assert sum(Y.nondegenerate_counts(Y.dim)) <= 8
            for n in (1, 2, 3):
                assert symmetrizable_check(f, n).injective


@pytest.mark.criterion(9)
def test_slice_formulas():
    with within(120):
        for n, a, t in product(range(3), (1, 2), (1, 2)):
            spec = FreeSpectrumSpec.of_sizes(n, a, t)
            F = free_spectrum(spec, 5)
            for m in range(6):
                assert slice_check(spec, m, F=F).passed
        for a, t in product((1, 2), (1, 2)):
            for m in range(2, 5):
                c = sym_slice_check(2, FreeSpectrumSpec.of_sizes(1, a, t), m)
                assert c.passed
                assert c.extra["fibers_are_orbits"] and c.extra["quotient_onto"]


@pytest.mark.criterion(10)
def test_additivity_probe():
    with within(120):
        f = wedge_left(sphere(1, 4), sphere(1, 4))
        r = additivity_probe(f, 3)
        assert r.acyclic_x[2] and r.acyclic_x[3]
        assert r.acyclic_z[2] and r.acyclic_z[3]
        assert r.acyclic_y[3] and not r.acyclic_y[2]
        assert euler(sym_power(2, f.target)) == binomial_neg(-2, 3)[2] == 1
        assert r.consistent


def _euler_suite():
    for X in spaces(5).values():
        assert euler(X) == euler_from_homology(X)


def _smash_suite():
    corpus = spaces(5)
    names = ["S0", "S1", "S2", "S0vS0", "S1vS1", "triangle", "circle3"]
    for a, b in product(names, names):
        X, Y = corpus[a], corpus[b]
        if X.dim + Y.dim + 1 <= 5:
            assert euler(smash(X, Y)) == euler(X) * euler(Y)


def _telescoping_suite():
    # 2-dimensional targets stop at n = 3: the dense fourth smash power needs levels through 9
    for name, f0 in inclusions(2).items():
        d = f0.target.dim
        nmax = 4 if d <= 1 else 3
        f = inclusions(max(nmax * d + 1, 2))[name]
        for r in tower(f, nmax):
            assert r.telescoping_plain and r.telescoping_sym, (name, r.n)


def _cor_suite():
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
            assert cor(G, H, X).reduced_size == G.order // H.order * X.reduced_size


def _adjunction_suite():
    for G, H, X, Y in adjunction_corpus():
        assert adjunction_check(G, H, X, Y).passed


def _series_suite():
    rng = random.Random(0)
    for _ in range(300):
        N = rng.randint(0, 8)
        a, b, c = (Series([rng.randint(-10, 10) for _ in range(N + 1)]) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        u = Series([rng.choice((1, -1))] + [rng.randint(-10, 10) for _ in range(N)])
        assert series_inv(series_inv(u)) == u


@pytest.mark.criterion(11)
@pytest.mark.parametrize(
    "suite", [_euler_suite, _smash_suite, _telescoping_suite, _cor_suite, _adjunction_suite, _series_suite]
)
def test_property_suites(suite):
    suite()
