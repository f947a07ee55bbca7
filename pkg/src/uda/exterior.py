"""Exterior algebra of the polynomial module in one variable X.

Degree-r elements are stored as linear combinations of wedge monomials
``X^{i1} ^ X^{i2} ^ ... ^ X^{ir}`` with strictly decreasing exponents, the
coefficients being polynomials in the c-variables only.  Every element
carries a basis tag: PLAIN_X for the monomial basis (X^i) and DEFORMED_XC
for the deformed basis X^i(c) = X^i - c1 X^{i-1} + c2 X^{i-2} - ...
Mixing tags without an explicit conversion raises ``TagMismatch``; sign
errors from silent reinterpretation are the dominant bug source in this kind
of code, so the tag is checked everywhere.

A wedge monomial with indices (i1 > ... > ir) corresponds to the partition
(i1-(r-1), i2-(r-2), ..., ir), which is how Schur coordinates are read off
once an element is expressed in the deformed basis.

Contraction of a linear form against a wedge expands as the alternating sum
over slots, slot i carrying sign (-1)^(i-1); the slot removed contributes
the form's value on that factor.  The generating contraction collects the
values of all coordinate forms at once into a Laurent polynomial in w.

The residue calculus expands a fraction f(X)/p_r(X) as a Laurent series in
1/X (the denominator contributes X^-r times the complete-function series)
and extracts coefficients of X^-1; determinants of such residues recover
Schur coordinates by an entirely independent route, which is what makes the
cross-checks in the test suite meaningful.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .bilaurent import BiLaurent
from .determinant import exact_det
from .errors import DegreeZeroError, TagMismatch, WindowExcludesMinusOne
from .partitions import Partition, partition_of_indices
from .poly import MvPolynomial, ONE, ZERO, c_
from .symfunc import h_symbol_series, s_coefficient

Indices = tuple[int, ...]


class BasisTag(enum.Enum):
    PLAIN_X = "X"
    DEFORMED_XC = "Xc"


class WedgeMonomial:
    """A single tagged wedge monomial with strictly decreasing exponents."""

    __slots__ = ("indices", "tag")

    def __init__(self, indices: Iterable[int], tag: BasisTag):
        idx = tuple(indices)
        if any(idx[k] <= idx[k + 1] for k in range(len(idx) - 1)):
            raise ValueError(f"indices not strictly decreasing: {idx}")
        if idx and idx[-1] < 0:
            raise ValueError(f"negative exponent in {idx}")
        self.indices = idx
        self.tag = tag

    @property
    def degree(self) -> int:
        return len(self.indices)

    def partition(self) -> Partition:
        return partition_of_indices(self.indices)

    def element(self) -> "ExtElement":
        return ExtElement.basis_monomial(self.indices, self.tag)

    def __eq__(self, other) -> bool:
        return (isinstance(other, WedgeMonomial)
                and self.indices == other.indices and self.tag is other.tag)

    def __hash__(self):
        return hash((self.indices, self.tag))

    def __repr__(self) -> str:
        return f"WedgeMonomial({self.indices}, {self.tag.value})"


def sort_indices(seq: Iterable[int]) -> tuple[Indices, int] | None:
    """Sort exponents into strictly decreasing order, tracking the sign.

    Returns None when two exponents coincide (the wedge vanishes).
    """
    items = list(seq)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] < items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and items[j - 1] == items[j]:
            return None
    return tuple(items), sign


def merge_indices(a: Indices, b: Indices) -> tuple[Indices, int] | None:
    """Merge two strictly decreasing tuples, with the concatenation sign."""
    out: list[int] = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None
        if a[i] > b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps left past the remaining len(a)-i factors of a
            if (len(a) - i) % 2:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out), sign


class ExtElement:
    """A homogeneous exterior element: finite sum of tagged wedge monomials."""

    __slots__ = ("r", "tag", "terms")

    def __init__(self, r: int, tag: BasisTag,
                 terms: Mapping[Indices, MvPolynomial] | None = None):
        self.r = r
        self.tag = tag
        clean: dict[Indices, MvPolynomial] = {}
        for idx, coeff in (terms or {}).items():
            if not coeff:
                continue
            if len(idx) != r:
                raise ValueError(f"wedge monomial {idx} does not have degree {r}")
            if any(idx[k] <= idx[k + 1] for k in range(r - 1)):
                raise ValueError(f"indices not strictly decreasing: {idx}")
            if idx and idx[-1] < 0:
                raise ValueError(f"negative exponent in {idx}")
            clean[idx] = coeff
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(r: int, tag: BasisTag) -> "ExtElement":
        return ExtElement(r, tag, {})

    @staticmethod
    def basis_monomial(indices: Indices, tag: BasisTag) -> "ExtElement":
        return ExtElement(len(indices), tag, {tuple(indices): ONE})

    @staticmethod
    def vector(i: int, tag: BasisTag) -> "ExtElement":
        return ExtElement(1, tag, {(i,): ONE})

    # -- linear structure ------------------------------------------------------

    def _check(self, other: "ExtElement"):
        if self.tag is not other.tag:
            raise TagMismatch(f"{self.tag.value} vs {other.tag.value}")
        if self.r != other.r:
            raise ValueError(f"degree mismatch: {self.r} vs {other.r}")

    def __add__(self, other: "ExtElement") -> "ExtElement":
        self._check(other)
        out = dict(self.terms)
        for idx, coeff in other.terms.items():
            s = out.get(idx)
            if s is None:
                out[idx] = coeff
            else:
                s = s + coeff
                if s:
                    out[idx] = s
                else:
                    del out[idx]
        e = ExtElement.__new__(ExtElement)
        e.r, e.tag, e.terms = self.r, self.tag, out
        return e

    def __neg__(self) -> "ExtElement":
        e = ExtElement.__new__(ExtElement)
        e.r, e.tag = self.r, self.tag
        e.terms = {idx: -coeff for idx, coeff in self.terms.items()}
        return e

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def scale(self, q) -> "ExtElement":
        if isinstance(q, int):
            q = MvPolynomial.const(q)
        e = ExtElement.__new__(ExtElement)
        e.r, e.tag = self.r, self.tag
        e.terms = {} if not q else {idx: coeff * q
                                    for idx, coeff in self.terms.items()}
        return e

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtElement):
            return NotImplemented
        return (self.r == other.r and self.tag is other.tag
                and self.terms == other.terms)

    def __hash__(self):
        raise TypeError("ExtElement is not hashable")

    def max_index(self) -> int:
        return max((idx[0] for idx in self.terms), default=-1)

    def map_coeffs(self, fn: Callable[[MvPolynomial], MvPolynomial]) -> "ExtElement":
        return ExtElement(self.r, self.tag,
                          {idx: fn(c) for idx, c in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return f"ExtElement<{self.tag.value}, r={self.r}>(0)"
        bits = []
        for idx in sorted(self.terms, reverse=True):
            mono = "^".join(f"X{k}" for k in idx) or "1"
            bits.append(f"({self.terms[idx]})*{mono}")
        return f"ExtElement<{self.tag.value}>(" + " + ".join(bits) + ")"

    def to_json(self) -> dict:
        terms = [{"indices": list(idx), "coeff": self.terms[idx].to_json()}
                 for idx in sorted(self.terms, reverse=True)]
        return {"r": self.r, "tag": self.tag.value, "terms": terms}

    @staticmethod
    def from_json(doc: dict) -> "ExtElement":
        tag = BasisTag(doc["tag"])
        terms = {tuple(t["indices"]): MvPolynomial.from_json(t["coeff"])
                 for t in doc["terms"]}
        return ExtElement(doc["r"], tag, terms)


def wedge(u: ExtElement, v: ExtElement) -> ExtElement:
    """Exterior product; degrees add, equal tags required."""
    if u.tag is not v.tag:
        raise TagMismatch(f"{u.tag.value} vs {v.tag.value}")
    out: dict[Indices, MvPolynomial] = {}
    for ia, ca in u.terms.items():
        for ib, cb in v.terms.items():
            merged = merge_indices(ia, ib)
            if merged is None:
                continue
            idx, sign = merged
            coeff = ca * cb
            if sign < 0:
                coeff = -coeff
            s = out.get(idx)
            if s is None:
                out[idx] = coeff
            else:
                s = s + coeff
                if s:
                    out[idx] = s
                else:
                    del out[idx]
    e = ExtElement.__new__(ExtElement)
    e.r, e.tag, e.terms = u.r + v.r, u.tag, out
    return e


def unit_wedge(r: int, tag: BasisTag = BasisTag.PLAIN_X) -> ExtElement:
    """X^{r-1} ^ ... ^ X^1 ^ X^0; the same element in either basis."""
    return ExtElement.basis_monomial(tuple(range(r - 1, -1, -1)), tag)


# -- basis conversion ---------------------------------------------------------

@lru_cache(maxsize=None)
def xc_expand(j: int, n: int | None) -> tuple[MvPolynomial, ...]:
    """Coefficient vector of X^j(c) in the plain basis (entries for X^0..X^j).

    X^j(c) = X^j - c1 X^{j-1} + c2 X^{j-2} - ..., with c_i = 0 for i > n.
    """
    if j < 0:
        raise ValueError("exponent must be nonnegative")
    out = [ZERO] * (j + 1)
    out[j] = ONE
    top = j if n is None else min(j, n)
    for i in range(1, top + 1):
        out[j - i] = -c_(i) if i % 2 else c_(i)
    return tuple(out)


@lru_cache(maxsize=None)
def x_in_xc(j: int, n: int | None) -> tuple[MvPolynomial, ...]:
    """Coefficient vector of X^j in the deformed basis: X^j = sum_k s_k X^{j-k}(c)."""
    if j < 0:
        raise ValueError("exponent must be nonnegative")
    return tuple(s_coefficient(j - m, n) for m in range(j + 1))


def convert_basis(u: ExtElement, tag: BasisTag, n: int | None) -> ExtElement:
    """Re-express an element in the other basis (triangular, unipotent)."""
    if u.tag is tag:
        return u
    expand = x_in_xc if tag is BasisTag.DEFORMED_XC else xc_expand
    acc: dict[Indices, MvPolynomial] = {}
    for idx, coeff in u.terms.items():
        # fold the factors one at a time, keeping partial wedges sorted
        partial: dict[Indices, MvPolynomial] = {(): coeff}
        for i in idx:
            vec = expand(i, n)
            nxt: dict[Indices, MvPolynomial] = {}
            for pidx, pc in partial.items():
                for m, entry in enumerate(vec):
                    if not entry:
                        continue
                    merged = merge_indices(pidx, (m,))
                    if merged is None:
                        continue
                    midx, sign = merged
                    term = pc * entry
                    if sign < 0:
                        term = -term
                    s = nxt.get(midx)
                    nxt[midx] = term if s is None else s + term
            partial = {k: v for k, v in nxt.items() if v}
        for k, v in partial.items():
            s = acc.get(k)
            acc[k] = v if s is None else s + v
    return ExtElement(u.r, tag, {k: v for k, v in acc.items() if v})


def reduce_mod_n(u: ExtElement, n: int) -> ExtElement:
    """Quotient by the span of X^m(c) for m >= n: drop those wedge factors.

    Valid in the deformed basis only, where X^m(c) = X^{m-n} * X^n(c) lies in
    the ideal generated by the generic monic polynomial.
    """
    if u.tag is not BasisTag.DEFORMED_XC:
        raise TagMismatch("reduction is defined on the deformed basis")
    kept = {idx: c for idx, c in u.terms.items() if idx[0] < n} if u.r else dict(u.terms)
    return ExtElement(u.r, u.tag, kept)


# -- linear forms and contraction ----------------------------------------------


class LinearForm:
    """A coordinate linear form on the module, evaluable in either basis."""

    def value(self, i: int, tag: BasisTag, n: int | None) -> MvPolynomial:
        raise NotImplementedError


class DeltaForm(LinearForm):
    """The form reading off the coefficient of X^j (dual to the plain basis)."""

    __slots__ = ("j",)

    def __init__(self, j: int):
        if j < 0:
            raise ValueError("form index must be nonnegative")
        self.j = j

    def value(self, i: int, tag: BasisTag, n: int | None) -> MvPolynomial:
        if tag is BasisTag.PLAIN_X:
            return ONE if i == self.j else ZERO
        # coefficient of X^j inside X^i(c)
        d = i - self.j
        if d < 0 or (n is not None and d > n):
            return ZERO
        if d == 0:
            return ONE
        return -c_(d) if d % 2 else c_(d)

    def __repr__(self):
        return f"DeltaForm({self.j})"


class DualDeltaForm(LinearForm):
    """The form dual to X^j(c): the coefficient of s(w) shifts the plain forms."""

    __slots__ = ("j",)

    def __init__(self, j: int):
        if j < 0:
            raise ValueError("form index must be nonnegative")
        self.j = j

    def value(self, i: int, tag: BasisTag, n: int | None) -> MvPolynomial:
        if tag is BasisTag.DEFORMED_XC:
            return ONE if i == self.j else ZERO
        if i < self.j:
            return ZERO
        return s_coefficient(i - self.j, n)

    def __repr__(self):
        return f"DualDeltaForm({self.j})"


def contract(form: LinearForm, u: ExtElement, n: int | None = None) -> ExtElement:
    """Interior product: alternating sum over slots, slot i signed (-1)^(i-1)."""
    if u.r < 1:
        raise DegreeZeroError("cannot contract a degree-zero element")
    out: dict[Indices, MvPolynomial] = {}
    for idx, coeff in u.terms.items():
        for slot in range(u.r):
            val = form.value(idx[slot], u.tag, n)
            if not val:
                continue
            rest = idx[:slot] + idx[slot + 1:]
            term = coeff * val
            if slot % 2:
                term = -term
            s = out.get(rest)
            if s is None:
                out[rest] = term
            else:
                s = s + term
                if s:
                    out[rest] = s
                else:
                    del out[rest]
    e = ExtElement.__new__(ExtElement)
    e.r, e.tag, e.terms = u.r - 1, u.tag, out
    return e


def w_value(j: int, n: int | None) -> BiLaurent:
    """The generating contraction's value on X^j(c): X^j(c) at X = 1/w.

    A Laurent polynomial w^-j - c1 w^(1-j) + ... with exponents in [-j, 0].
    """
    vec = xc_expand(j, n)
    return BiLaurent({(0, -m): p for m, p in enumerate(vec) if p},
                     (0, 0, -j, 0))


def generating_contraction(u: ExtElement, n: int | None,
                           adapted: bool = False,
                           w_order: int = 0) -> dict[int, ExtElement]:
    """Contract against all coordinate forms at once, graded by w-exponent.

    Returns a map w-exponent -> exterior element of degree r-1.  For a plain
    basis element X^i the plain generating form contributes w^-i; on the
    deformed basis it contributes the Laurent polynomial of :func:`w_value`.
    With ``adapted`` the whole answer is multiplied by s(w) = 1/c(w),
    expanded through w^``w_order``.
    """
    if u.r < 1:
        raise DegreeZeroError("cannot contract a degree-zero element")
    out: dict[int, dict[Indices, MvPolynomial]] = {}

    def put(wexp: int, idx: Indices, coeff: MvPolynomial):
        bucket = out.setdefault(wexp, {})
        s = bucket.get(idx)
        bucket[idx] = coeff if s is None else s + coeff

    for idx, coeff in u.terms.items():
        for slot in range(u.r):
            rest = idx[:slot] + idx[slot + 1:]
            sign = -1 if slot % 2 else 1
            i = idx[slot]
            if u.tag is BasisTag.PLAIN_X:
                put(-i, rest, coeff if sign > 0 else -coeff)
            else:
                for (_, wexp), val in w_value(i, n).coeffs.items():
                    term = coeff * val
                    put(wexp, rest, term if sign > 0 else -term)

    graded = {w: ExtElement(u.r - 1, u.tag, terms) for w, terms in out.items()}
    graded = {w: e for w, e in graded.items() if e}
    if not adapted:
        return graded
    scaled: dict[int, dict[Indices, MvPolynomial]] = {}
    lowest = min(graded, default=0)
    for k in range(0, w_order - lowest + 1):
        sk = s_coefficient(k, n)
        if not sk:
            continue
        for wexp, elem in graded.items():
            if wexp + k > w_order:
                continue
            bucket = scaled.setdefault(wexp + k, {})
            for idx, coeff in elem.terms.items():
                term = coeff * sk
                s = bucket.get(idx)
                bucket[idx] = term if s is None else s + term
    result = {w: ExtElement(u.r - 1, u.tag, terms) for w, terms in scaled.items()}
    return {w: e for w, e in result.items() if e}


# -- residues -----------------------------------------------------------------


def residue(g: BiLaurent) -> MvPolynomial:
    """Coefficient of X^-1 in a Laurent expansion (the z-axis plays X)."""
    if not g.valid_at(-1, 0):
        raise WindowExcludesMinusOne(
            f"expansion window {g.window} does not cover exponent -1")
    return g.coeff(-1, 0)


def residue_tuple(gs: list[BiLaurent]) -> MvPolynomial:
    """Determinant of residues Res(X^k * g_t), rows k = 0..r-1.

    The columns are taken in the given order; callers follow the convention
    that the leading wedge factor comes first.
    """
    r = len(gs)
    if r == 0:
        raise ValueError("empty residue tuple")
    rows = []
    for k in range(r):
        rows.append([residue(g.shift(k, 0)) for g in gs])
    return exact_det(rows)


def expand_over_factor(f: list[MvPolynomial], r: int,
                       order: int | None = None) -> BiLaurent:
    """Expand f(X)/p_r(X) as a Laurent series in 1/X.

    1/p_r(X) = X^-r (1 + h1/X + h2/X^2 + ...) with the h's kept as free
    symbols; the series is truncated far enough down that every residue
    Res(X^k * result) for 0 <= k <= r-1 is exact.
    """
    deg = max((i for i, p in enumerate(f) if p), default=0)
    if order is None:
        order = deg + r + 1
    hs = h_symbol_series(order)
    low = deg - r - order  # below this the truncated sums are incomplete
    terms: dict[tuple[int, int], MvPolynomial] = {}
    for i, p in enumerate(f):
        if not p:
            continue
        for j, hj in enumerate(hs):
            zexp = i - r - j
            if zexp < low:
                break
            s = terms.get((zexp, 0))
            prod = p * hj
            terms[(zexp, 0)] = prod if s is None else s + prod
    return BiLaurent({k: v for k, v in terms.items() if v},
                     (low, deg - r, 0, 0), (False, True, True, True))


# -- Schur coordinates ----------------------------------------------------------


def wedge_coords(u: ExtElement, n: int | None) -> dict[Partition, MvPolynomial]:
    """Coordinates of u in the deformed wedge basis, keyed by partition.

    Converts to the deformed basis first when needed; the coefficients are
    polynomials in the c-variables only.
    """
    v = convert_basis(u, BasisTag.DEFORMED_XC, n)
    return {partition_of_indices(idx): coeff for idx, coeff in v.terms.items()}
