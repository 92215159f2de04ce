"""Dimension counts and Poincare series of the graded invariant algebras.

The number of linearly independent invariants of degree n equals the number
of size-n multisets of eigen symbols with zero total weight.  That count is
extracted by an exact integer dynamic program over (degree, weight) rather
than by contour integration; the printed rational closed forms for d = 3, 4
are kept as an independent cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DomainError
from .eigen import dim_moment_space, spectrum


@dataclass(frozen=True)
class PoincareData:
    """Leading coefficients of a Poincare series: coefficients[n] is the
    dimension of the degree-n invariants of order up to d."""

    d: int
    coefficients: tuple


def _weight_counts(d, N):
    """gamma[n][k + d*N] = number of degree-n symbol multisets of weight k."""
    if d < 2:
        raise DomainError(f"order must be >= 2, got {d}")
    if N < 0:
        raise DomainError("degree bound must be non-negative")
    weights = [s for n in range(2, d + 1) for s in spectrum(n)]
    offset = d * N
    width = 2 * d * N + 1
    gamma = [[0] * width for _ in range(N + 1)]
    gamma[0][offset] = 1
    for w in weights:
        # in-place ascending pass: each symbol may repeat any number of times
        for n in range(1, N + 1):
            row = gamma[n]
            prev = gamma[n - 1]
            if w >= 0:
                for k in range(w, width):
                    if prev[k - w]:
                        row[k] += prev[k - w]
            else:
                for k in range(width + w):
                    if prev[k - w]:
                        row[k] += prev[k - w]
    return gamma, offset


def degree_weight_counts(d: int, n: int) -> dict:
    """Map weight -> number of degree-n symbol multisets with that weight."""
    gamma, offset = _weight_counts(d, n)
    row = gamma[n]
    return {k - offset: v for k, v in enumerate(row) if v}


def dim_invariants(d: int, n: int) -> int:
    """Dimension of the space of degree-n invariants of order up to d."""
    if n < 0:
        raise DomainError("degree must be non-negative")
    gamma, offset = _weight_counts(d, n)
    return gamma[n][offset]


def poincare_series(d: int, N: int) -> PoincareData:
    """First N+1 coefficients of the Poincare series for order d."""
    gamma, offset = _weight_counts(d, N)
    return PoincareData(d, tuple(gamma[n][offset] for n in range(N + 1)))


# printed rational closed forms, normalized so every denominator factor is
# (1 - z^k); the d=3 display uses (z^k - 1) factors whose signs cancel in
# pairs (six factors in total)
_CLOSED_FORMS = {
    3: (
        {0: 1, 2: 1, 3: 3, 4: 4, 5: 4, 6: 4, 7: 3, 8: 1, 10: 1},
        (3, 5, 4, 2, 2, 1),
    ),
    4: (
        {
            0: 1, 2: 5, 3: 13, 4: 33, 5: 63, 6: 112, 7: 174, 8: 252,
            9: 331, 10: 400, 11: 445, 12: 464, 13: 445, 14: 400, 15: 331,
            16: 252, 17: 174, 18: 112, 19: 63, 20: 33, 21: 13, 22: 5, 24: 1,
        },
        (3, 3, 3, 5, 5, 7, 4, 2, 2, 1, 1),
    ),
}


def _expand_rational(numerator, factors, N):
    """Series of numerator / prod (1 - z^k) to degree N, exact integers."""
    coeffs = [0] * (N + 1)
    for i, v in numerator.items():
        if i <= N:
            coeffs[i] = v
    for k in factors:
        # divide by (1 - z^k): running sum with stride k
        for i in range(k, N + 1):
            coeffs[i] += coeffs[i - k]
    return coeffs


def closed_form_series(d: int, N: int) -> list:
    """Expansion of the printed rational function for d in {3, 4}."""
    if d not in _CLOSED_FORMS:
        raise DomainError(f"no closed form recorded for d={d}")
    numerator, factors = _CLOSED_FORMS[d]
    return _expand_rational(numerator, factors, N)


def closed_form_check(d: int, N: int) -> bool:
    """True iff the printed rational function matches the counting DP."""
    return tuple(closed_form_series(d, N)) == poincare_series(d, N).coefficients


def total_degree_dimension(d: int, n: int) -> int:
    """C(dim + n - 1, n): all degree-n monomials in the order 2..d space."""
    return comb(dim_moment_space(d) + n - 1, n)
