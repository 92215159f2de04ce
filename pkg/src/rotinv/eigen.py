"""Binary Kravchuk polynomials and the eigenstructure of the rotation action.

The infinitesimal rotation operator acts on the order-n moment coordinates
``a[n-j,j]`` with purely imaginary eigenvalues ``s*i`` (s = -n, -n+2, ..., n)
and eigenvectors whose coefficients are ``i**j * K_j((n-s)/2, n)`` where
``K`` is the binary Kravchuk polynomial.  Everything here is exact integer
or Gaussian-integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import NamedTuple

from .errors import DomainError, InvalidEigenvalueError
from .gaussian import GaussianRational, i_power
from .poly import SparsePoly


def binomial(x: int, j: int) -> int:
    """C(x, j) as the falling-factorial polynomial x(x-1)...(x-j+1)/j!.

    Total for every integer x (negative included), which keeps the Kravchuk
    sum defined on all integer arguments.
    """
    if j < 0:
        raise DomainError("binomial: lower index must be non-negative")
    if x >= 0:
        return comb(x, j)
    num = 1
    for t in range(j):
        num *= x - t
    return num // factorial(j)


def kravchuk(j: int, x: int, a: int) -> int:
    """Exact value of the binary Kravchuk polynomial K_j(x, a).

    K_j(x, a) = sum_t (-1)^t C(x, t) C(a - x, j - t).
    """
    if j < 0:
        raise DomainError("kravchuk: index j must be non-negative")
    if a < 0:
        raise DomainError("kravchuk: parameter a must be non-negative")
    return sum(
        (-1) ** t * binomial(x, t) * binomial(a - x, j - t) for t in range(j + 1)
    )


def spectrum(d: int) -> list[int]:
    """Weights s of the order-d eigenvalues s*i, sorted ascending.

    The spectrum is the arithmetic ladder -d, -d+2, ..., d-2, d.
    """
    if d < 1:
        raise DomainError(f"spectrum: order must be >= 1, got {d}")
    return list(range(-d, d + 1, 2))


def dim_moment_space(d: int) -> int:
    """Dimension of the coordinate space of orders 2..d: (d+4)(d-1)/2."""
    if d < 2:
        raise DomainError(f"order must be >= 2, got {d}")
    return (d + 4) * (d - 1) // 2


class EigenSymbol(NamedTuple):
    """Label (n, s) for the order-n eigenvector of eigenvalue s*i."""

    n: int
    s: int

    def validate(self):
        if self.n < 2 or self.s not in spectrum(self.n):
            raise InvalidEigenvalueError(
                f"({self.n}, {self.s}) is not an eigen label: need n >= 2, "
                f"|s| <= n, s = n (mod 2)"
            )
        return self

    def conjugate(self):
        return EigenSymbol(self.n, -self.s)


@dataclass(frozen=True)
class ExponentVector:
    """A multiset of eigen symbols: the exponent pattern of a monomial.

    ``exponents`` is a tuple of ((n, s), e) pairs with e > 0, sorted by
    symbol.  The weight (sum of e*s) is zero exactly when the monomial is
    rotation invariant.
    """

    exponents: tuple

    @classmethod
    def make(cls, mapping):
        items = []
        src = mapping.items() if hasattr(mapping, "items") else mapping
        acc = {}
        for sym, e in src:
            sym = EigenSymbol(*sym)
            if e < 0:
                raise DomainError("exponents must be non-negative")
            if e:
                acc[sym] = acc.get(sym, 0) + e
        items = sorted(acc.items())
        return cls(tuple(items))

    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def weight(self) -> int:
        return sum(e * sym.s for sym, e in self.exponents)

    def get(self, sym, default=0):
        sym = EigenSymbol(*sym)
        for s, e in self.exponents:
            if s == sym:
                return e
        return default

    def conjugate(self):
        return ExponentVector.make({sym.conjugate(): e for sym, e in self.exponents})

    def sort_key(self):
        """(degree, leading-symbol) key giving the canonical monomial order."""
        desc = tuple((sym.n, sym.s, e) for sym, e in sorted(self.exponents, reverse=True))
        return (self.degree(), desc)

    def to_json(self):
        return [{"n": sym.n, "s": sym.s, "e": e} for sym, e in self.exponents]

    def label(self) -> str:
        """Compact human label, e.g. ``x33^2.y31`` for e3(3i)^2 e3(-i)."""
        if not self.exponents:
            return "1"
        bits = []
        for sym, e in sorted(self.exponents, key=lambda it: (it[0].s < 0, it[0].n, abs(it[0].s))):
            stem = f"x{sym.n}{sym.s}" if sym.s >= 0 else f"y{sym.n}{-sym.s}"
            bits.append(stem + (f"^{e}" if e > 1 else ""))
        return ".".join(bits)


@dataclass(frozen=True)
class LinearForm:
    """A linear form sum_j coefficients[j] * a[n-j, j] of a single order n."""

    order: int
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != self.order + 1:
            raise DomainError(
                f"order-{self.order} form needs {self.order + 1} coefficients"
            )

    def conjugate(self):
        return LinearForm(self.order, tuple(c.conjugate() for c in self.coefficients))

    def to_poly(self) -> SparsePoly:
        n = self.order
        return SparsePoly(
            {
                (((n - j, j), 1),): c
                for j, c in enumerate(self.coefficients)
                if not c.is_zero()
            }
        )

    def variables(self):
        n = self.order
        return [(n - j, j) for j in range(n + 1)]


@lru_cache(maxsize=None)
def eigenvector(n: int, s: int) -> LinearForm:
    """The order-n eigenform of eigenvalue s*i.

    Coefficient of a[n-j, j] is i^j K_j((n - s)/2, n).  Conjugating flips
    the sign of s.
    """
    if n < 1:
        raise DomainError(f"eigenvector: order must be >= 1, got {n}")
    if s not in spectrum(n):
        raise InvalidEigenvalueError(f"s={s} not in spectrum of order {n}")
    x = (n - s) // 2
    coeffs = tuple(i_power(j) * kravchuk(j, x, n) for j in range(n + 1))
    return LinearForm(n, coeffs)


def complex_moment_form(p: int, q: int) -> LinearForm:
    """The complex moment c_{p,q} as a linear form.

    Equals the order-(p+q) eigenform of eigenvalue (p-q)*i, i.e. the usual
    combination sum C(p,k) C(q,j) (-1)^(q-j) i^(p+q-k-j) a[k+j, p+q-k-j].
    """
    if p < 0 or q < 0:
        raise DomainError("complex moment indices must be non-negative")
    if p + q < 1:
        raise DomainError("complex moment needs p + q >= 1")
    return eigenvector(p + q, p - q)


def multiplicity(d: int, s: int) -> int:
    """How many orders n in 2..d have weight s in their spectrum.

    Zero when s > d.  Closed form: floor(d/2) for s = 0,
    d - floor(d/2) - 1 for s = 1, floor((d-s)/2) + 1 for s > 1.
    """
    if d < 2:
        raise DomainError(f"multiplicity: order must be >= 2, got {d}")
    if s < 0:
        raise DomainError("multiplicity: weight must be non-negative")
    return sum(1 for n in range(2, d + 1) if s <= n and (n - s) % 2 == 0)


def zero_weight_closed_form(j: int) -> SparsePoly:
    """The kernel form of order 2j as a closed binomial sum.

    Equals sum_k C(j, k) a[2j-2k, 2k], which is the order-2j eigenform of
    eigenvalue 0 (odd Kravchuk values vanish at the midpoint argument).
    """
    if j < 1:
        raise DomainError("zero-weight closed form needs j >= 1")
    return SparsePoly(
        {(((2 * j - 2 * k, 2 * k), 1),): GaussianRational(comb(j, k)) for k in range(j + 1)}
    )


def pair_product_closed_form(n: int, s: int) -> SparsePoly:
    """The conjugate-pair invariant of order n and weight s as two squares.

    Returns the real polynomial equal to the product of the (n, s) and
    (n, -s) eigenforms: (even-index Kravchuk combination)^2 +
    (odd-index Kravchuk combination)^2.
    """
    if n < 1 or s not in spectrum(n) or s <= 0:
        raise InvalidEigenvalueError(f"(n={n}, s={s}) is not a positive eigen label")
    x = (n - s) // 2
    even = SparsePoly(
        {
            (((n - 2 * t, 2 * t), 1),): GaussianRational((-1) ** t * kravchuk(2 * t, x, n))
            for t in range(n // 2 + 1)
        }
    )
    odd = SparsePoly(
        {
            (((n - 2 * t - 1, 2 * t + 1), 1),): GaussianRational(
                (-1) ** t * kravchuk(2 * t + 1, x, n)
            )
            for t in range(n // 2 + 1)
            if 2 * t + 1 <= n
        }
    )
    return even * even + odd * odd
