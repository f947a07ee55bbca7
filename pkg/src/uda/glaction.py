"""The star action on the decomposition algebra and its closed forms.

An operator f(X) (x) g(del) acts on a Schur basis element through the
exterior module: wedge f against the contraction of g with the corresponding
deformed wedge monomial, then read the result back through the rank-one
module isomorphism.  ``star_oracle`` does exactly that, slot by slot; it is
deliberately brute force and serves as the independent reference for the
generating functions below.

The closed forms package all operator images at once.  The kernel is an
r x r determinant: first row the deformed evaluations w^{-(r-j+lam_j)}(c),
the remaining rows the two-term shifts h_{lam_j-j+k}(c) - h_{...-1}(c)/z.
The series

    z^{r-1} * (sum_j h_j z^j) * det(...)

collects the images of X^i (x) del^j at z^i w^{-j}; scaling by c(z)/c(w)
switches to the adapted operators X^i(c) (x) del^j(s), and for the finite
quotient the 1/c(w) factor is cut at w^{n-1} and every coefficient is pushed
through the rectangle normal form.

Positive powers of w in the scaled forms do not correspond to any operator
of the family (the dual forms are indexed by j >= 0 only) and they do not
vanish under projection; they are computed, reported on the result object,
and excluded from the series and from the JSON document.  Coefficients at
z^i with i > n-1 must project to zero in the finite case and are checked up
to an explicit margin; a nonzero survivor raises ``WindowViolation``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .bilaurent import BiLaurent
from .determinant import exact_det
from .errors import WindowViolation
from .exterior import (BasisTag, DeltaForm, DualDeltaForm, ExtElement,
                       LinearForm, contract, convert_basis, reduce_mod_n,
                       w_value, wedge, wedge_coords)
from .module_iso import quotient_project, schur_map_of_poly, schur_map_to_poly
from .partitions import Partition, partitions_in_rectangle, wedge_indices
from .poly import MvPolynomial, ONE, ZERO
from .schubert import sigma_bar_minus_h
from .symfunc import (c_series_coeffs, generic_factor_poly,
                      generic_monic_coeffs, h_deformed, h_symbol_series,
                      s_coefficient)


@dataclass(frozen=True)
class StarOperator:
    """f(X) (x) g(del): a vector polynomial paired with a coordinate form."""
    vector: tuple[MvPolynomial, ...]   # coefficients of X^0, X^1, ...
    vector_tag: BasisTag
    form: LinearForm

    @staticmethod
    def plain(i: int, j: int) -> "StarOperator":
        vec = (ZERO,) * i + (ONE,)
        return StarOperator(vec, BasisTag.PLAIN_X, DeltaForm(j))

    @staticmethod
    def adapted(i: int, j: int) -> "StarOperator":
        vec = (ZERO,) * i + (ONE,)
        return StarOperator(vec, BasisTag.DEFORMED_XC, DualDeltaForm(j))


def _vector_element(op: StarOperator, ambient: int | None) -> ExtElement:
    e = ExtElement(1, op.vector_tag,
                   {(k,): coeff for k, coeff in enumerate(op.vector) if coeff})
    return convert_basis(e, BasisTag.DEFORMED_XC, ambient)


def star_oracle_coords(op: StarOperator, lam: Partition, r: int,
                       n: int | None = None, *, quotient: bool = True,
                       zero_c: bool = False) -> dict[Partition, MvPolynomial]:
    """Schur coordinates of (f (x) g) acting on the basis element of lam.

    With ``n`` set and ``quotient`` true, the computation happens in the rank
    n quotient module: wedge factors with exponent >= n are dropped and the
    answer lives on rectangle partitions.  With ``quotient`` false, n only
    bounds the c-variables.  ``zero_c`` specialises every c to zero.
    """
    if len(lam) > r:
        raise ValueError(f"partition {lam} longer than r={r}")
    ambient: int | None = 0 if zero_c else n
    u = ExtElement.basis_monomial(wedge_indices(lam, r), BasisTag.DEFORMED_XC)
    v = contract(op.form, u, ambient)
    w = wedge(_vector_element(op, ambient), v)
    if n is not None and quotient:
        w = reduce_mod_n(w, n)
    coords = wedge_coords(w, ambient)
    if n is not None and quotient:
        for mu in coords:
            if mu.part(1) > n - r:
                raise WindowViolation(
                    f"coordinate outside the {r}x{n - r} rectangle: {mu}")
    return coords


def star_oracle(op: StarOperator, lam: Partition, r: int,
                n: int | None = None, *, quotient: bool = True,
                zero_c: bool = False) -> MvPolynomial:
    """The brute-force star action, returned in Schur normal form."""
    ambient: int | None = 0 if zero_c else n
    coords = star_oracle_coords(op, lam, r, n, quotient=quotient, zero_c=zero_c)
    return schur_map_to_poly(coords, r, ambient)


# -- the closed forms ------------------------------------------------------------


def mixed_schur_det(lam: Partition, r: int, n: int | None) -> BiLaurent:
    """det of [w^{-(r-j+lam_j)}(c) ; shifted h rows], an exact Laurent polynomial.

    Row 1 holds the deformed evaluations at X = 1/w; row k >= 2 holds
    h_{lam_j - j + k}(c) - h_{lam_j - j + k - 1}(c)/z.  Entries follow the
    same index pattern as the Schur determinant, which the equivalence suite
    pins against the brute-force action.
    """
    if len(lam) > r:
        raise ValueError(f"partition {lam} longer than r={r}")
    rows: list[list[BiLaurent]] = []
    rows.append([w_value(r - j + lam.part(j), n) for j in range(1, r + 1)])
    for k in range(2, r + 1):
        rows.append([sigma_bar_minus_h(lam.part(j) - j + k, n)
                     for j in range(1, r + 1)])
    return exact_det(rows)


@dataclass
class ActionResult:
    """A generating function of star-action images on one basis element.

    ``series`` holds the normal-form coefficients on the declared window;
    ``schur_form`` maps (z-exp, w-exp) to the Schur coordinates of that
    coefficient.  For scaled forms, nonzero coefficients at positive powers
    of w (which correspond to no operator of the family) are collected in
    ``positive_w`` instead of the series.
    """
    lam: Partition
    r: int
    n: int | None
    dual: str                       # "plain" or "adapted"
    series: BiLaurent
    schur_form: dict[tuple[int, int], dict[Partition, MvPolynomial]]
    positive_w: dict[tuple[int, int], dict[Partition, MvPolynomial]] = field(
        default_factory=dict)

    def coords_at(self, i: int, j: int) -> dict[Partition, MvPolynomial]:
        """Schur coordinates of the image under the (z^i, w^-j) operator."""
        if not self.series.valid_at(i, -j):
            raise WindowViolation(
                f"(z^{i}, w^-{j}) outside computed window {self.series.window}")
        return self.schur_form.get((i, -j), {})

    def has_positive_w_terms(self) -> bool:
        return bool(self.positive_w)

    def to_json(self) -> dict:
        terms = []
        for (z, w) in sorted(self.schur_form, key=lambda k: (-k[1], k[0])):
            coords = self.schur_form[(z, w)]
            schur = [{"partition": mu.to_json(), "coeff": str(coords[mu])}
                     for mu in sorted(coords)]
            terms.append({"z": z, "w": w, "schur": schur})
        return {"lambda": self.lam.to_json(), "r": self.r, "n": self.n,
                "dual": self.dual, "terms": terms}


def _schur_forms(series: BiLaurent, r: int, ambient: int | None):
    out: dict[tuple[int, int], dict[Partition, MvPolynomial]] = {}
    for key in sorted(series.coeffs):
        coords = schur_map_of_poly(series.coeffs[key], r, ambient)
        if coords:
            out[key] = coords
    return out


def generating_action(lam: Partition, r: int, zmax: int,
                      wmin: int | None = None, n: int | None = None,
                      zero_c: bool = False) -> ActionResult:
    """Images of all X^i (x) del^j on one basis element, packaged at z^i w^-j.

    The result window is z in [0, zmax], w in [-(r-1+lam_1), 0]; ``wmin``
    narrows the w side if requested.  ``n`` bounds the c-variables only.
    """
    if zmax < 0:
        raise ValueError("zmax must be nonnegative")
    ambient: int | None = 0 if zero_c else n
    det = mixed_schur_det(lam, r, ambient)
    hseries = BiLaurent.from_z_series(h_symbol_series(zmax), zmax)
    prod = BiLaurent.monomial(r - 1, 0) * hseries * det
    zlo, zhi, wlo, whi = prod.window
    window = (max(zlo, 0), min(zhi, zmax),
              wlo if wmin is None else max(wlo, wmin), whi)
    series = prod.restrict(window)
    return ActionResult(lam, r, n, "plain", series,
                        _schur_forms(series, r, ambient))


def generating_action_adapted(lam: Partition, r: int, n: int, zmax: int,
                              wmin: int | None = None, wmax: int = 0,
                              zero_c: bool = False) -> ActionResult:
    """The scaled form c(z)/c(w) for the adapted operators X^i(c) (x) del^j(s).

    The 1/c(w) expansion is carried far enough that every coefficient with
    w-exponent at most ``wmax`` is exact.  Nonzero coefficients at positive
    powers of w are split off into ``positive_w``.
    """
    if zmax < 0:
        raise ValueError("zmax must be nonnegative")
    ambient = 0 if zero_c else n
    det = mixed_schur_det(lam, r, ambient)
    depth = r - 1 + lam.part(1)
    s_order = depth + max(wmax, 0)
    hseries = BiLaurent.from_z_series(h_symbol_series(zmax), zmax)
    cpoly = BiLaurent.from_z_series(c_series_coeffs(n, ambient), n,
                                    truncated_above=False)
    sseries = BiLaurent.from_w_series(
        [s_coefficient(k, ambient) for k in range(s_order + 1)], s_order)
    prod = BiLaurent.monomial(r - 1, 0) * cpoly * hseries * sseries * det
    zlo, zhi, wlo, whi = prod.window
    window = (max(zlo, 0), min(zhi, zmax),
              wlo if wmin is None else max(wlo, wmin), min(whi, wmax))
    series = prod.restrict(window)
    negative = {k: v for k, v in series.coeffs.items() if k[1] <= 0}
    positive = {k: v for k, v in series.coeffs.items() if k[1] > 0}
    schur = _schur_forms(BiLaurent(negative, series.window, series.exact),
                         r, ambient)
    pos_schur = _schur_forms(BiLaurent(positive, series.window, series.exact),
                             r, ambient)
    return ActionResult(lam, r, n, "adapted", series, schur, pos_schur)


@lru_cache(maxsize=None)
def _finite_action_cached(lam_parts: tuple[int, ...], r: int, n: int,
                          z_margin: int, zero_c: bool) -> ActionResult:
    lam = Partition(lam_parts)
    ambient = 0 if zero_c else n
    det = mixed_schur_det(lam, r, ambient)
    ztop = n - 1 + z_margin
    hseries = BiLaurent.from_z_series(h_symbol_series(ztop), ztop)
    cpoly = BiLaurent.from_z_series(c_series_coeffs(n, ambient), n,
                                    truncated_above=False)
    # the closed form uses the cut polynomial 1 + s1 w + ... + s_{n-1} w^{n-1}
    scut = BiLaurent.from_w_series(
        [s_coefficient(k, ambient) for k in range(n)], n - 1,
        truncated_above=False)
    prod = BiLaurent.monomial(r - 1, 0) * cpoly * hseries * scut * det
    prod = prod.restrict((0, ztop) + prod.window[2:])

    legal: dict[tuple[int, int], MvPolynomial] = {}
    schur: dict[tuple[int, int], dict[Partition, MvPolynomial]] = {}
    positive: dict[tuple[int, int], dict[Partition, MvPolynomial]] = {}
    for key in sorted(prod.coeffs):
        z, w = key
        coords = schur_map_of_poly(prod.coeffs[key], r, ambient)
        coords = {mu: v for mu, v in coords.items() if mu.part(1) <= n - r}
        if not coords:
            continue
        if w > 0:
            positive[key] = coords
            continue
        if z > n - 1:
            raise WindowViolation(
                f"nonzero projected coefficient at z^{z} (> n-1 = {n - 1}) "
                f"for lambda={lam}, r={r}, n={n}")
        if w < -(n - 1):
            raise WindowViolation(
                f"nonzero projected coefficient at w^{w} (< -(n-1)) "
                f"for lambda={lam}, r={r}, n={n}")
        schur[key] = coords
        legal[key] = schur_map_to_poly(coords, r, ambient)
    series = BiLaurent(legal, (0, n - 1, -(n - 1), 0))
    return ActionResult(lam, r, n, "adapted", series, schur, positive)


def generating_action_finite(lam: Partition, r: int, n: int,
                             z_margin: int | None = None,
                             zero_c: bool = False) -> ActionResult:
    """The full quotient-module structure on one rectangle basis element.

    Every coefficient is pushed through the rectangle normal form; the
    result is a genuine Laurent polynomial with z-exponents in [0, n-1] and
    w-exponents in [-(n-1), 0].  The vanishing of projected coefficients
    beyond z^{n-1} is checked up to ``z_margin`` extra orders.
    """
    if not (1 <= r <= n):
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if not lam.fits_rectangle(r, n - r):
        raise ValueError(f"partition {lam} does not fit {r}x{n - r}")
    margin = max(2, r) if z_margin is None else z_margin
    return _finite_action_cached(lam.parts, r, n, margin, zero_c)


# -- representation matrices -------------------------------------------------------


@dataclass
class RepMatrix:
    """The matrix of one adapted basis operator on the rectangle Schur basis."""
    i: int
    j: int
    r: int
    n: int
    basis: tuple[Partition, ...]
    entries: dict[tuple[Partition, Partition], MvPolynomial]

    def entry(self, mu: Partition, lam: Partition) -> MvPolynomial:
        return self.entries.get((mu, lam), ZERO)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        cells = []
        for (mu, lam) in sorted(self.entries, key=lambda k: (k[1], k[0])):
            cells.append({"row": mu.to_json(), "col": lam.to_json(),
                          "coeff": str(self.entries[(mu, lam)])})
        return {"i": self.i, "j": self.j, "r": self.r, "n": self.n,
                "dimension": self.dimension,
                "basis": [p.to_json() for p in self.basis],
                "entries": cells}


def rep_matrix(i: int, j: int, r: int, n: int, zero_c: bool = False) -> RepMatrix:
    """Representation matrix of X^i(c) (x) del^j(s) on the quotient basis."""
    if not (0 <= i <= n - 1 and 0 <= j <= n - 1):
        raise ValueError(f"operator indices must lie in [0, {n - 1}]")
    basis = tuple(partitions_in_rectangle(r, n - r))
    entries: dict[tuple[Partition, Partition], MvPolynomial] = {}
    for lam in basis:
        res = generating_action_finite(lam, r, n, zero_c=zero_c)
        for mu, coeff in res.coords_at(i, j).items():
            entries[(mu, lam)] = coeff
    return RepMatrix(i, j, r, n, basis, entries)


def _mat_mul(a: RepMatrix, b: RepMatrix) -> dict[tuple[Partition, Partition], MvPolynomial]:
    by_col: dict[Partition, list[tuple[Partition, MvPolynomial]]] = {}
    for (mu, nu), coeff in a.entries.items():
        by_col.setdefault(nu, []).append((mu, coeff))
    out: dict[tuple[Partition, Partition], MvPolynomial] = {}
    for (nu, lam), bcoeff in b.entries.items():
        for mu, acoeff in by_col.get(nu, ()):  # a(mu,nu) * b(nu,lam)
            term = acoeff * bcoeff
            key = (mu, lam)
            s = out.get(key)
            if s is None:
                out[key] = term
            else:
                s = s + term
                if s:
                    out[key] = s
                else:
                    del out[key]
    return out


def _mat_diff(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        s = out.get(k)
        if s is None:
            out[k] = -v
        else:
            s = s - v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


@lru_cache(maxsize=None)
def _rep_cached(i: int, j: int, r: int, n: int) -> RepMatrix:
    return rep_matrix(i, j, r, n)


def bracket_check(a: int, b: int, c: int, d: int, r: int, n: int) -> bool:
    """Verify [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb on the quotient."""
    A, B = _rep_cached(a, b, r, n), _rep_cached(c, d, r, n)
    lhs = _mat_diff(_mat_mul(A, B), _mat_mul(B, A))
    rhs: dict = {}
    if b == c:
        rhs = dict(_rep_cached(a, d, r, n).entries)
    if d == a:
        rhs = _mat_diff(rhs, _rep_cached(c, b, r, n).entries)
    return lhs == rhs


# -- universal factorisation ---------------------------------------------------------


def _xpoly_mul(f: list[MvPolynomial], g: list[MvPolynomial]) -> list[MvPolynomial]:
    out = [ZERO] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if not fi:
            continue
        for j, gj in enumerate(g):
            if gj:
                out[i + j] = out[i + j] + fi * gj
    return out


def universal_factorization(r: int, n: int
                            ) -> tuple[list[MvPolynomial], list[MvPolynomial], bool]:
    """The generic monic polynomial splits over the quotient algebra.

    Returns the degree-r factor (coefficients in e's), the complementary
    factor X^{n-r} + h_1(c) X^{n-r-1} + ... + h_{n-r}(c), and whether their
    product reduces to X^n - c1 X^{n-1} + ... + (-1)^n cn coefficientwise in
    the quotient normal form.
    """
    if not (1 <= r <= n):
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    p = generic_factor_poly(r)
    q = [h_deformed(n - r - m, n) for m in range(n - r)] + [ONE]
    diff = _xpoly_mul(p, q)
    target = generic_monic_coeffs(n)
    ok = True
    for m in range(n + 1):
        delta = diff[m] - target[m]
        if quotient_project(delta, r, n):
            ok = False
            break
    return p, q, ok
