"""Closed-form characteristic polynomials for operators of regular graphs.

Every product over the adjacency eigenvalues of G is rewritten as a
substitution into ``pA = char(A; x)`` or ``pA2 = char(A^2; x)``, so the closed
forms are built with integer polynomial arithmetic only:

* ``prod (x - c - lam_i)`` is ``pA(x - c)``;
* ``prod (c - lam_i^2)`` is ``pA2(c)`` for any polynomial ``c``;
* ``prod (x^2 - lam_i x + k)`` is ``sum_j a_j (x^2 + k)^j x^(n-j)`` when
  ``pA(y) = sum_j a_j y^j`` (homogenise ``pA`` at ``y = (x^2 + k) / x``).

The direct side of each identity is the exact characteristic polynomial of the
corresponding matrix from :mod:`orientedline.line_operators`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .exact_algebra import IntPolynomial, X, charpoly_exact, integrality_check, poly_compose, poly_product_power
from .graph_core import Graph, adjacency_matrix, validate_regular_connected, write_graph6
from .line_operators import Orientation, operator_matrix

__all__ = [
    "IDENTITIES",
    "RegularSpectrumHandle",
    "VerificationReport",
    "spectrum_handle",
    "formula_lstar",
    "formula_line",
    "formula_skew",
    "formula_hermitian",
    "formula_signed",
    "formula_nonbacktracking",
    "formula_for",
    "direct_polynomial",
    "verify_identity",
    "integrality_check",
]

IDENTITIES = ("lstar", "line", "skew", "hermitian", "signed", "nonbacktracking")

_MATRIX_KIND = {
    "lstar": "adjacency_lstar",
    "line": "adjacency_line",
    "skew": "skew",
    "hermitian": "hermitian",
    "signed": "signed",
    "nonbacktracking": "nonbacktracking",
}


@dataclass(frozen=True)
class RegularSpectrumHandle:
    g: Graph
    d: int
    n: int
    m: int
    pA: IntPolynomial
    pA2: IntPolynomial


def spectrum_handle(g: Graph) -> RegularSpectrumHandle:
    """Validate the hypotheses on ``g`` and compute ``char(A)`` and ``char(A^2)``."""
    d, n, m = validate_regular_connected(g)
    a = adjacency_matrix(g)
    return RegularSpectrumHandle(g, d, n, m, charpoly_exact(a), charpoly_exact(a @ a))


def formula_lstar(h: RegularSpectrumHandle) -> IntPolynomial:
    c = h.d - 2
    return poly_product_power([(X * X - 4, h.m - h.n)]) * h.pA.shift(-c) * h.pA.shift(c)


def formula_line(h: RegularSpectrumHandle) -> IntPolynomial:
    return (X + 2) ** (h.m - h.n) * h.pA.shift(-(h.d - 2))


def formula_skew(h: RegularSpectrumHandle) -> IntPolynomial:
    return X ** (2 * (h.m - h.n)) * poly_compose(h.pA2, X * X + h.d * h.d)


def formula_hermitian(h: RegularSpectrumHandle) -> IntPolynomial:
    sign = -1 if h.n % 2 else 1
    return X ** (2 * (h.m - h.n)) * poly_compose(h.pA2, h.d * h.d - X * X) * sign


def formula_signed(h: RegularSpectrumHandle) -> IntPolynomial:
    return (X - 2) ** (h.m - h.n) * h.pA.shift(h.d - 2)


def formula_nonbacktracking(h: RegularSpectrumHandle) -> IntPolynomial:
    quad = X * X + (h.d - 1)
    # sum_j a_j quad^j x^(n-j), accumulated without re-powering
    total = IntPolynomial()
    qpow = IntPolynomial((1,))
    for j, a in enumerate(h.pA.coeffs):
        total = total + qpow * (X ** (h.n - j)) * a
        qpow = qpow * quad
    return (X * X - 1) ** (h.m - h.n) * total


_FORMULAS = {
    "lstar": formula_lstar,
    "line": formula_line,
    "skew": formula_skew,
    "hermitian": formula_hermitian,
    "signed": formula_signed,
    "nonbacktracking": formula_nonbacktracking,
}


def _canonical(which: str) -> str:
    if which == "nb":
        return "nonbacktracking"
    if which not in _FORMULAS:
        raise ValueError(f"unknown identity {which!r}; expected one of {IDENTITIES}")
    return which


def formula_for(h: RegularSpectrumHandle, which: str) -> IntPolynomial:
    return _FORMULAS[_canonical(which)](h)


def direct_polynomial(g: Graph, which: str, orientation: Orientation | None = None) -> IntPolynomial:
    which = _canonical(which)
    if which == "signed" and orientation is None:
        raise ValueError("the signed identity needs an orientation")
    return charpoly_exact(operator_matrix(g, _MATRIX_KIND[which], orientation))


@dataclass(frozen=True)
class VerificationReport:
    graph: str
    identity: str
    formula: IntPolynomial
    direct: IntPolynomial
    # (degree, formula coefficient, direct coefficient) at the lowest differing degree
    first_mismatch: tuple[int, int, int] | None = None

    @property
    def equal(self) -> bool:
        return self.first_mismatch is None

    @property
    def verdict(self) -> str:
        return "equal" if self.equal else "mismatch"

    def to_json(self, include_direct: bool = False) -> dict:
        out = {
            "graph": self.graph,
            "identity": self.identity,
            "verdict": self.verdict,
            "formula_coeffs": [str(c) for c in self.formula.coeffs],
        }
        if include_direct or not self.equal:
            out["direct_coeffs"] = [str(c) for c in self.direct.coeffs]
        if not self.equal:
            k, a, b = self.first_mismatch
            out["first_mismatch"] = {"degree": k, "formula": str(a), "direct": str(b)}
        fact = self.formula.to_json().get("factored")
        if fact:
            out["factored"] = fact
        return out


def _first_mismatch(a: IntPolynomial, b: IntPolynomial) -> tuple[int, int, int] | None:
    for k in range(max(len(a.coeffs), len(b.coeffs))):
        if a.coeff(k) != b.coeff(k):
            return (k, a.coeff(k), b.coeff(k))
    return None


def verify_identity(
    g: Graph,
    which: str,
    orientation: Orientation | None = None,
    handle: RegularSpectrumHandle | None = None,
) -> VerificationReport:
    """Compare a closed form with the exact characteristic polynomial of its matrix.

    Raises :class:`~orientedline.graph_core.HypothesisError` if ``g`` is not a
    connected d-regular graph with d >= 3.
    """
    which = _canonical(which)
    h = handle if handle is not None else spectrum_handle(g)
    formula = formula_for(h, which)
    direct = direct_polynomial(g, which, orientation)
    return VerificationReport(write_graph6(g), which, formula, direct, _first_mismatch(formula, direct))


def lstar_integral_roots(h: RegularSpectrumHandle) -> Counter | None:
    """Integer spectrum of L*(G) when it exists."""
    return integrality_check(formula_lstar(h))
