"""Exact integer and Gaussian-integer polynomial and matrix arithmetic.

Everything here works over Python's arbitrary-precision integers; nothing is
ever rounded. Characteristic polynomials use the ``det(xI - M)`` convention and
are computed by evaluation-interpolation: the determinant is evaluated at
``order + 1`` small integer points with fraction-free (Bareiss) elimination and
the polynomial is recovered by exact Newton interpolation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain
from typing import Iterable, Sequence, Union

__all__ = [
    "IntPolynomial",
    "GaussianInt",
    "IntMatrix",
    "GaussianMatrix",
    "NotDivisible",
    "X",
    "poly_product_power",
    "poly_compose",
    "poly_exact_divide",
    "charpoly_exact",
    "charpoly_faddeev_leverrier",
    "det_bareiss",
    "integer_roots",
    "integrality_check",
    "root_bound",
]


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class IntPolynomial:
    """Dense univariate polynomial with integer coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``. Trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def linear(cls, root: int) -> "IntPolynomial":
        """The monic factor ``x - root``."""
        return cls((-root, 1))

    @classmethod
    def from_roots(cls, roots: dict[int, int] | Iterable[int]) -> "IntPolynomial":
        if isinstance(roots, dict):
            return poly_product_power([(cls.linear(r), e) for r, e in roots.items()])
        return poly_product_power([(cls.linear(r), 1) for r in roots])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append(f"{sign} {body}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def _coerce(self, other: object) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        raise TypeError(f"cannot combine IntPolynomial with {type(other).__name__}")

    def __add__(self, other: object) -> "IntPolynomial":
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPolynomial(self.coeff(k) + o.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: object) -> "IntPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "IntPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other: object) -> "IntPolynomial":
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def compose(self, q: "IntPolynomial") -> "IntPolynomial":
        return poly_compose(self, q)

    def shift(self, c: int) -> "IntPolynomial":
        """Return ``p(x + c)``."""
        return poly_compose(self, IntPolynomial((c, 1)))

    def factored(self) -> str:
        """Display form listing integer roots, with any non-split residual."""
        return _factored_display(self)

    def to_json(self) -> dict:
        out = {"coeffs": [str(c) for c in self.coeffs]}
        roots, residual = integer_roots(self)
        if roots:
            out["factored"] = _factored_display(self, roots, residual)
        return out


X = IntPolynomial((0, 1))


def poly_product_power(factors: Sequence[tuple[IntPolynomial, int]]) -> IntPolynomial:
    """Multiply out ``prod(f ** e for f, e in factors)``; the empty product is 1."""
    result = IntPolynomial((1,))
    for f, e in factors:
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        result = result * (f ** e)
    return result


def poly_compose(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Return ``p(q(x))`` by Horner's scheme in polynomial arithmetic."""
    acc = IntPolynomial()
    for c in reversed(p.coeffs):
        acc = acc * q + c
    return acc


@dataclass(frozen=True)
class NotDivisible:
    """Verdict of a failed exact division.

    ``remainder`` holds the remainder of the division over the rationals; it is
    integral whenever the divisor is monic. ``quotient`` is that rational
    quotient (may be non-integral when the divisor is not primitive).
    """

    remainder: tuple[Fraction, ...]
    quotient: tuple[Fraction, ...]

    def remainder_poly(self) -> IntPolynomial:
        if any(c.denominator != 1 for c in self.remainder):
            raise ValueError("remainder is not integral")
        return IntPolynomial(int(c) for c in self.remainder)

    def __bool__(self) -> bool:
        return False


def _divmod_rational(
    num: Sequence[int | Fraction], den: Sequence[int | Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    r = [Fraction(c) for c in num]
    dlen = len(den)
    lead = Fraction(den[-1])
    if len(r) < dlen:
        return [], r
    q = [Fraction(0)] * (len(r) - dlen + 1)
    for k in range(len(r) - dlen, -1, -1):
        c = r[k + dlen - 1] / lead
        q[k] = c
        if c:
            for j in range(dlen):
                r[k + j] -= c * den[j]
    r = r[: dlen - 1]
    while r and r[-1] == 0:
        r.pop()
    while q and q[-1] == 0:
        q.pop()
    return q, r


def poly_exact_divide(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial | NotDivisible:
    """Return ``q`` with ``num == den * q`` exactly in Z[x], else a NotDivisible verdict."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q, r = _divmod_rational(num.coeffs, den.coeffs)
    if not r and all(c.denominator == 1 for c in q):
        return IntPolynomial(int(c) for c in q)
    return NotDivisible(remainder=tuple(r), quotient=tuple(q))


# ---------------------------------------------------------------------------
# Gaussian integers
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class GaussianInt:
    re: int
    im: int = 0

    def __add__(self, o: "GaussianInt | int") -> "GaussianInt":
        o = _gauss(o)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o: "GaussianInt | int") -> "GaussianInt":
        o = _gauss(o)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, o: "GaussianInt | int") -> "GaussianInt":
        return _gauss(o) - self

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, o: "GaussianInt | int") -> "GaussianInt":
        o = _gauss(o)
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def exact_div(self, o: "GaussianInt | int") -> "GaussianInt":
        """Divide, raising ArithmeticError unless the quotient is a Gaussian integer."""
        o = _gauss(o)
        nrm = o.norm()
        if nrm == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        p = self * o.conjugate()
        qr, rr = divmod(p.re, nrm)
        qi, ri = divmod(p.im, nrm)
        if rr or ri:
            raise ArithmeticError(f"{self} is not divisible by {o}")
        return GaussianInt(qr, qi)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i"


def _gauss(v: "GaussianInt | int") -> GaussianInt:
    return v if isinstance(v, GaussianInt) else GaussianInt(int(v), 0)


I_UNIT = GaussianInt(0, 1)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntMatrix:
    """Square matrix of arbitrary-precision integers, stored row-major."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def zeros(cls, order: int) -> "IntMatrix":
        return cls(tuple((0,) * order for _ in range(order)))

    @classmethod
    def identity(cls, order: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(order)) for i in range(order)))

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)) if self.rows else ())

    def __add__(self, o: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, o.rows)))

    def __sub__(self, o: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, o.rows)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __matmul__(self, o: "IntMatrix") -> "IntMatrix":
        cols = list(zip(*o.rows))
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows)
        )

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.order))

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]

    def to_json(self) -> list[list[str]]:
        return [[str(v) for v in r] for r in self.rows]


@dataclass(frozen=True)
class GaussianMatrix:
    """Square matrix of Gaussian integers."""

    rows: tuple[tuple[GaussianInt, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_gauss(v) for v in r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> GaussianInt:
        i, j = ij
        return self.rows[i][j]

    def conjugate_transpose(self) -> "GaussianMatrix":
        return GaussianMatrix(tuple(tuple(v.conjugate() for v in col) for col in zip(*self.rows)))

    def is_hermitian(self) -> bool:
        return self == self.conjugate_transpose()

    def to_json(self) -> list[list[list[str]]]:
        return [[[str(v.re), str(v.im)] for v in r] for r in self.rows]


Matrix = Union[IntMatrix, GaussianMatrix]


# ---------------------------------------------------------------------------
# Determinants and characteristic polynomials
# ---------------------------------------------------------------------------


def det_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination over Z; every division is exact."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        tail = rk[k + 1 :]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            if aik == 0:
                ri[k + 1 :] = [akk * x // prev for x in ri[k + 1 :]]
            else:
                ri[k + 1 :] = [(akk * x - aik * y) // prev for x, y in zip(ri[k + 1 :], tail)]
        prev = akk
    return sign * a[n - 1][n - 1]


def _det_bareiss_gaussian(rows: Sequence[Sequence[tuple[int, int]]]) -> tuple[int, int]:
    # real and imaginary parts kept in separate int rows; inlined to keep the inner loop cheap
    re = [[v[0] for v in r] for r in rows]
    im = [[v[1] for v in r] for r in rows]
    n = len(re)
    if n == 0:
        return (1, 0)
    sign = 1
    pr, pi = 1, 0
    for k in range(n - 1):
        if re[k][k] == 0 and im[k][k] == 0:
            for i in range(k + 1, n):
                if re[i][k] or im[i][k]:
                    re[k], re[i] = re[i], re[k]
                    im[k], im[i] = im[i], im[k]
                    sign = -sign
                    break
            else:
                return (0, 0)
        kr, ki = re[k][k], im[k][k]
        yre, yim = re[k], im[k]
        nrm = pr * pr + pi * pi
        for i in range(k + 1, n):
            xre, xim = re[i], im[i]
            ar, ai = xre[k], xim[k]
            pivot_only = ar == 0 and ai == 0
            for j in range(k + 1, n):
                xr, xi = xre[j], xim[j]
                if pivot_only:
                    if xr == 0 and xi == 0:
                        continue
                    nr = kr * xr - ki * xi
                    ni = kr * xi + ki * xr
                else:
                    yr, yi = yre[j], yim[j]
                    # akk * x - aik * y
                    nr = kr * xr - ki * xi - ar * yr + ai * yi
                    ni = kr * xi + ki * xr - ar * yi - ai * yr
                # divide by prev: multiply by conj(prev) / |prev|^2
                if pi == 0:
                    qr, rr = divmod(nr, pr)
                    qi, ri = divmod(ni, pr)
                else:
                    qr, rr = divmod(nr * pr + ni * pi, nrm)
                    qi, ri = divmod(ni * pr - nr * pi, nrm)
                if rr or ri:
                    raise ArithmeticError("inexact Bareiss step over Gaussian integers")
                xre[j], xim[j] = qr, qi
        pr, pi = kr, ki
    return (sign * re[n - 1][n - 1], sign * im[n - 1][n - 1])


def evaluation_points(count: int) -> list[int]:
    """0, 1, -1, 2, -2, ... (smallest magnitudes first)."""
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts


def _interpolate(points: Sequence[int], values: Sequence[int]) -> list[Fraction]:
    """Exact Newton interpolation; returns monomial coefficients, ascending."""
    n = len(points)
    dd = [Fraction(v) for v in values]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (points[i] - points[i - level])
    coeffs = [Fraction(0)] * n
    # expand Newton form from the innermost term outward
    for i in range(n - 1, -1, -1):
        # coeffs = coeffs * (x - points[i]) + dd[i]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - points[i] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += dd[i]
    return coeffs


def _as_integer_coeffs(fr: Sequence[Fraction], what: str) -> list[int]:
    out = []
    for k, c in enumerate(fr):
        if c.denominator != 1:
            raise ArithmeticError(f"{what}: non-integral interpolated coefficient {c} at degree {k}")
        out.append(int(c))
    return out


def charpoly_exact(m: Matrix) -> IntPolynomial:
    """Characteristic polynomial ``det(xI - M)`` with exact integer coefficients.

    Integer input goes through integer Bareiss. Gaussian input must be
    Hermitian; its determinant values are interpolated separately in their
    real and imaginary parts and the imaginary polynomial must vanish.
    """
    n = m.order
    pts = evaluation_points(n + 1)
    if isinstance(m, IntMatrix):
        vals = []
        for t in pts:
            shifted = [[(t if i == j else 0) - m.rows[i][j] for j in range(n)] for i in range(n)]
            vals.append(det_bareiss(shifted))
        coeffs = _as_integer_coeffs(_interpolate(pts, vals), "charpoly")
    elif isinstance(m, GaussianMatrix):
        if not m.is_hermitian():
            raise ValueError("Gaussian input to charpoly_exact must be Hermitian")
        re_vals, im_vals = [], []
        for t in pts:
            shifted = [
                [((t if i == j else 0) - m.rows[i][j].re, -m.rows[i][j].im) for j in range(n)]
                for i in range(n)
            ]
            dr, di = _det_bareiss_gaussian(shifted)
            re_vals.append(dr)
            im_vals.append(di)
        coeffs = _as_integer_coeffs(_interpolate(pts, re_vals), "charpoly (real part)")
        im_coeffs = _as_integer_coeffs(_interpolate(pts, im_vals), "charpoly (imaginary part)")
        if any(im_coeffs):
            raise ArithmeticError("Hermitian characteristic polynomial has a nonzero imaginary part")
    else:
        raise TypeError(f"unsupported matrix type {type(m).__name__}")
    p = IntPolynomial(coeffs)
    if p.degree != n or not p.is_monic():
        raise ArithmeticError("characteristic polynomial is not monic of full degree")
    return p


def charpoly_faddeev_leverrier(m: IntMatrix) -> IntPolynomial:
    """Independent trace-recurrence route to ``det(xI - M)`` for integer matrices.

    Uses ``M_k = A M_{k-1} + c_{n-k+1} I`` and ``c_{n-k} = -tr(A M_k) / k``;
    the divisions are exact over Z.
    """
    n = m.order
    a = m.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("inexact Faddeev-LeVerrier step")
        coeffs[n - k] = c
        mk = am
        for i in range(n):
            mk[i][i] += c
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# Integer roots
# ---------------------------------------------------------------------------


def _iroot_ceil(a: int, k: int) -> int:
    """Smallest r >= 0 with r**k >= a, for a >= 0."""
    if a <= 0:
        return 0
    r = int(round(a ** (1.0 / k))) if a.bit_length() < 1000 else 1 << (a.bit_length() // k + 1)
    while r ** k < a:
        r += 1
    while r > 0 and (r - 1) ** k >= a:
        r -= 1
    return r


def root_bound(p: IntPolynomial) -> int:
    """Integer upper bound on the modulus of every root of a monic ``p`` (Fujiwara)."""
    if not p.is_monic():
        raise ValueError("root_bound expects a monic polynomial")
    n = p.degree
    best = 0
    for k in range(1, n + 1):
        a = abs(p.coeff(n - k))
        if k == n:
            a = (a + 1) // 2  # |a_0 / 2|, rounded up
        best = max(best, _iroot_ceil(a, k))
    return 2 * best


def integer_roots(p: IntPolynomial) -> tuple[Counter, IntPolynomial]:
    """Extract integer roots of a monic polynomial with multiplicity.

    Returns the root multiset and the residual polynomial left after dividing
    out every ``(x - r)`` found.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no root multiset")
    if not p.is_monic():
        raise ValueError("integer_roots expects a monic polynomial")
    roots: Counter = Counter()
    cur = p
    # strip x^k first
    while cur.degree > 0 and cur.coeff(0) == 0:
        roots[0] += 1
        cur = IntPolynomial(cur.coeffs[1:])
    if cur.degree <= 0:
        return roots, cur
    bound = root_bound(cur)
    for r in chain.from_iterable((k, -k) for k in range(1, bound + 1)):
        while cur.degree > 0 and cur.coeff(0) % r == 0 and cur(r) == 0:
            q = poly_exact_divide(cur, IntPolynomial.linear(r))
            assert isinstance(q, IntPolynomial)
            cur = q
            roots[r] += 1
        if cur.degree == 0:
            break
    return roots, cur


def integrality_check(p: IntPolynomial) -> Counter | None:
    """Integer root multiset if ``p`` splits completely over Z, else None."""
    roots, residual = integer_roots(p)
    return roots if residual.degree == 0 else None


def _factored_display(
    p: IntPolynomial, roots: Counter | None = None, residual: IntPolynomial | None = None
) -> str:
    if roots is None or residual is None:
        roots, residual = integer_roots(p)
    parts = []
    for r in sorted(roots, reverse=True):
        e = roots[r]
        base = "x" if r == 0 else f"(x {'-' if r > 0 else '+'} {abs(r)})"
        parts.append(base if e == 1 else f"{base}^{e}")
    if residual.degree > 0:
        parts.append(f"({residual})")
    return "*".join(parts) if parts else "1"
