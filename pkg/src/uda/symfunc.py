"""Structural series and Schur determinants.

The five series that drive everything:

  c(z)   = 1 - c1 z + c2 z^2 - ... + (-1)^n cn z^n        (degree n, exact)
  E_r(z) = 1 - e1 z + ... + (-1)^r er z^r                  (degree r, exact)
  H_r(z) = 1 / E_r(z)                                      (coefficients in e's)
  sum_j h_j(c) z^j = c(z) * H(z)                           (deformed completes)
  s(w)   = 1 / c(w)                                        (dual-basis scaling)

The deformed complete function h_j(c) is computed from the generating
identity c(z)*H(z), with the h's of H(z) kept as free symbols; this
reproduces h1(c) = h1 - c1, h2(c) = h2 - c1*h1 + c2 and so on.  The ambient
bound n makes c_j vanish for j > n; passing ``n=None`` keeps every c_j, and
``n=0`` specialises all of them to zero.

Schur determinants are r x r with entry h_{lam_j - j + k}(c) in row k and
column j.  With lam empty this is the identity pattern, and a single-part
partition (m) gives back h_m(c).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .determinant import exact_det
from .partitions import Partition
from .poly import FAM_E, MvPolynomial, ONE, ZERO, c_, e_, h_, series_inverse


def c_series_coeffs(order: int, n: int | None) -> list[MvPolynomial]:
    """Coefficients of c(z) through z^order (c_j = 0 beyond the ambient n)."""
    out = [ONE]
    for j in range(1, order + 1):
        if n is not None and j > n:
            out.append(ZERO)
        else:
            out.append(-c_(j) if j % 2 else c_(j))
    return out


def e_series_coeffs(r: int, order: int) -> list[MvPolynomial]:
    """Coefficients of E_r(z) through z^order."""
    out = [ONE]
    for j in range(1, order + 1):
        if j > r:
            out.append(ZERO)
        else:
            out.append(-e_(j) if j % 2 else e_(j))
    return out


def h_symbol_series(order: int) -> list[MvPolynomial]:
    """1, h1, h2, ... as free symbols, through the given order."""
    return [ONE] + [h_(j) for j in range(1, order + 1)]


@lru_cache(maxsize=None)
def h_deformed(j: int, n: int | None) -> MvPolynomial:
    """The deformed complete function h_j(c) = sum_i (-1)^i c_i h_{j-i}."""
    if j < 0:
        return ZERO
    if j == 0:
        return ONE
    acc = h_(j)
    top = j if n is None else min(j, n)
    for i in range(1, top + 1):
        term = c_(i) if j - i == 0 else c_(i) * h_(j - i)
        acc = acc + (-term if i % 2 else term)
    return acc


@lru_cache(maxsize=None)
def _s_coeffs_cached(order: int, n: int | None) -> tuple[MvPolynomial, ...]:
    return tuple(series_inverse(c_series_coeffs(order, n), order))


def s_coefficient(k: int, n: int | None) -> MvPolynomial:
    """Coefficient s_k of s(w) = 1/c(w); s_0 = 1, s_1 = c1, ..."""
    if k < 0:
        return ZERO
    return _s_coeffs_cached(max(k, 8), n)[k]


class SeriesKind(enum.Enum):
    C_OF_Z = "c_of_z"
    E_R = "E_r"
    H_R = "H_r"
    HC = "HC"
    S = "S"


@dataclass(frozen=True)
class StructSeries:
    kind: SeriesKind
    r: int | None
    n: int | None
    order: int
    coeffs: tuple[MvPolynomial, ...]

    def coeff(self, j: int) -> MvPolynomial:
        if j < 0:
            return ZERO
        if j > self.order:
            raise IndexError(f"series only computed through order {self.order}")
        return self.coeffs[j]


def build_series(kind: SeriesKind, r: int | None, n: int | None,
                 order: int) -> StructSeries:
    """Build one of the structural series to the requested order.

    H_r is the genuine inverse of E_r, so its coefficients are polynomials in
    e1..er and the defining identity E_r * H_r = 1 holds degreewise.  The HC
    and S kinds need the ambient n (the number of c variables).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if kind is SeriesKind.C_OF_Z:
        coeffs = c_series_coeffs(order, n)
    elif kind is SeriesKind.E_R:
        if r is None:
            raise ValueError("E_r needs r")
        coeffs = e_series_coeffs(r, order)
    elif kind is SeriesKind.H_R:
        if r is None:
            raise ValueError("H_r needs r")
        coeffs = series_inverse(e_series_coeffs(r, order), order)
    elif kind is SeriesKind.HC:
        coeffs = [h_deformed(j, n) for j in range(order + 1)]
    elif kind is SeriesKind.S:
        coeffs = list(_s_coeffs_cached(order, n)[:order + 1])
    else:
        raise ValueError(f"unknown series kind {kind}")
    return StructSeries(kind, r, n, order, tuple(coeffs))


@dataclass(frozen=True)
class SchurDelta:
    partition: Partition
    value: MvPolynomial

    def to_json(self) -> dict:
        return {"partition": self.partition.to_json(),
                "value": self.value.to_json()}


@lru_cache(maxsize=None)
def _giambelli_cached(parts: tuple[int, ...], r: int, n: int | None) -> MvPolynomial:
    lam = Partition(parts)
    if r == 0:
        if len(lam) > 0:
            raise ValueError("nonempty partition with r = 0")
        return ONE
    rows = [[h_deformed(lam.part(j) - j + k, n) for j in range(1, r + 1)]
            for k in range(1, r + 1)]
    return exact_det(rows)


def giambelli(lam: Partition, r: int, n: int | None) -> SchurDelta:
    """The Schur determinant det( h_{lam_j - j + k}(c) ) of size r x r."""
    if len(lam) > r:
        raise ValueError(f"partition {lam} longer than r={r}")
    return SchurDelta(lam, _giambelli_cached(lam.parts, r, n))


@lru_cache(maxsize=None)
def _e_in_h(i: int) -> MvPolynomial:
    # e_m = e_{m-1} h_1 - e_{m-2} h_2 + ... + (-1)^{m-1} e_0 h_m, from E*H = 1
    if i == 0:
        return ONE
    acc = ZERO
    for k in range(1, i + 1):
        term = _e_in_h(i - k) * h_(k)
        acc = acc + (-term if k % 2 == 0 else term)
    return acc


def e_to_h_rewrite(p: MvPolynomial) -> MvPolynomial:
    """Rewrite every e-variable as its h-polynomial (e1 -> h1, e2 -> h1^2-h2, ...)."""
    evars = {v for v in p.variables() if v[0] == FAM_E}
    if not evars:
        return p
    return p.substitute({v: _e_in_h(v[1]) for v in evars})


def generic_factor_poly(r: int) -> list[MvPolynomial]:
    """X^r - e1 X^{r-1} + ... + (-1)^r er, as coefficients of 1, X, ..., X^r."""
    if r < 1:
        raise ValueError("degree must be at least 1")
    coeffs = [ZERO] * (r + 1)
    coeffs[r] = ONE
    for i in range(1, r + 1):
        coeffs[r - i] = -e_(i) if i % 2 else e_(i)
    return coeffs


def generic_monic_coeffs(n: int) -> list[MvPolynomial]:
    """X^n - c1 X^{n-1} + ... + (-1)^n cn, as coefficients of 1, X, ..., X^n."""
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    for i in range(1, n + 1):
        coeffs[n - i] = -c_(i) if i % 2 else c_(i)
    return coeffs
