"""Truncated integer power series and zeta-functions of pointed simplicial sets.

``zeta(X, N)`` is ``sum_n chi~(Sym^n X) t^n`` mod ``t^(N+1)``.  The checks
compare it with ``(1 - t)^(-chi~(X))``, with products along cofiber
sequences, and with the inverse series of the suspension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .homology import euler, euler_from_homology, reduced_homology
from .sset import TruncationError, quotient_by_subobject, suspend, sym_power

__all__ = [
    "Series",
    "series_mul",
    "series_inv",
    "binomial_neg",
    "ZetaReport",
    "CheckReport",
    "required_dim_bound",
    "zeta",
    "macdonald_check",
    "multiplicativity_check",
    "suspension_inverse_check",
]


class Series:
    """``c_0 + c_1 t + ... + c_N t^N`` with exact integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(int(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least one coefficient")

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, N):
        return cls((1,) + (0,) * N)

    def _check(self, other):
        if self.order != other.order:
            raise ValueError(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return Series(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return Series(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return series_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"Series({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out + f" + O(t^{self.order + 1})"


def series_mul(a, b):
    a._check(b)
    N = a.order
    return Series(sum(a.coeffs[i] * b.coeffs[k - i] for i in range(k + 1)) for k in range(N + 1))


def series_inv(a):
    """Inverse of a series whose constant term is a unit."""
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise ValueError("constant term is not a unit in Z")
    out = [c0]
    for k in range(1, a.order + 1):
        s = sum(a.coeffs[i] * out[k - i] for i in range(1, k + 1))
        out.append(-c0 * s)
    return Series(out)


def binomial_neg(c, N):
    """``(1 - t)^(-c)`` mod ``t^(N+1)`` for any integer ``c``."""
    if c >= 0:
        return Series(comb(c + k - 1, k) if c else int(k == 0) for k in range(N + 1))
    e = -c
    return Series((-1) ** k * comb(e, k) for k in range(N + 1))


def required_dim_bound(X, N):
    """Levels needed to read off ``chi~(Sym^n X)`` for every ``n <= N``."""
    d = X.dim if X.dim is not None else X.observed_dim()
    return max(N, 1) * max(d, 0) + 1


@dataclass
class ZetaReport:
    series: Series
    euler_by_count: list
    euler_by_homology: list
    homology: list  # per n, {degree: str}
    closed_form: Series | None = None
    dim_bound: int = 0

    @property
    def consistent(self):
        return self.euler_by_count == self.euler_by_homology

    def to_dict(self):
        return {
            "series": list(self.series.coeffs),
            "text": str(self.series),
            "euler_by_count": self.euler_by_count,
            "euler_by_homology": self.euler_by_homology,
            "homology": self.homology,
            "closed_form": None if self.closed_form is None else list(self.closed_form.coeffs),
            "dim_bound": self.dim_bound,
            "consistent": self.consistent,
        }


def zeta(X, N, with_homology=True):
    """Zeta-function of ``X`` through ``t^N``.

    Every coefficient is computed from ``Sym^n X`` by simplex counts and,
    with ``with_homology``, again from its reduced homology.
    """
    need = required_dim_bound(X, N)
    if X.dim_bound < need:
        raise TruncationError(f"truncation insufficient: need dim_bound >= {need}, have {X.dim_bound}")
    by_count, by_hom, hom = [1], [1], [{}]
    for n in range(1, N + 1):
        S = sym_power(n, X)
        by_count.append(euler(S))
        if with_homology:
            H = reduced_homology(S)
            by_hom.append(sum((-1) ** k * g.rank for k, g in H.items()))
            hom.append({str(k): str(g) for k, g in sorted(H.items()) if not g.is_zero})
        else:
            by_hom.append(by_count[-1])
            hom.append(None)
    return ZetaReport(Series(by_count), by_count, by_hom, hom, dim_bound=X.dim_bound)


@dataclass
class CheckReport:
    name: str
    passed: bool
    lhs: Series
    rhs: Series
    first_divergence: int | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "check": self.name,
            "passed": self.passed,
            "lhs": list(self.lhs.coeffs),
            "rhs": list(self.rhs.coeffs),
            "first_divergence": self.first_divergence,
            "details": self.details,
        }


def _compare(name, lhs, rhs, details):
    diverge = next((k for k, (a, b) in enumerate(zip(lhs, rhs)) if a != b), None)
    ok = diverge is None and details.get("consistent", True)
    return CheckReport(name, ok, lhs, rhs, diverge, details)


def macdonald_check(X, N):
    """``zeta(X) == (1 - t)^(-chi~(X))`` coefficientwise."""
    z = zeta(X, N)
    chi = euler(X)
    closed = binomial_neg(chi, N)
    z.closed_form = closed
    return _compare(
        "macdonald", z.series, closed, {"euler": chi, "zeta": z.to_dict(), "consistent": z.consistent}
    )


def multiplicativity_check(j, N):
    """``zeta(Y) == zeta(X) zeta(Y/X)`` for an inclusion ``j: X -> Y``."""
    X, Y = j.source, j.target
    Z, _ = quotient_by_subobject(j)
    zx, zy, zz = zeta(X, N), zeta(Y, N), zeta(Z, N)
    details = {
        "zeta_X": zx.to_dict(),
        "zeta_Y": zy.to_dict(),
        "zeta_Z": zz.to_dict(),
        "consistent": zx.consistent and zy.consistent and zz.consistent,
    }
    return _compare("multiplicativity", zy.series, zx.series * zz.series, details)


def suspension_inverse_check(X, N):
    """``zeta(Sigma X) zeta(X) == 1``."""
    SX = suspend(X)
    zx, zs = zeta(X, N), zeta(SX, N)
    details = {"zeta_X": zx.to_dict(), "zeta_SX": zs.to_dict(), "consistent": zx.consistent and zs.consistent}
    return _compare("suspension_inverse", zs.series * zx.series, Series.one(N), details)


def euler_two_ways(X):
    """``(simplex count, homology)`` reduced Euler characteristics."""
    return euler(X), euler_from_homology(X)
