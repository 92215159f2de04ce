"""The rotation derivation on moment coordinates and its exact action.

The operator sends a[p,q] to q*a[p+1,q-1] - p*a[p-1,q+1] and extends to
polynomials by the Leibniz rule.  A polynomial is rotation invariant exactly
when the operator annihilates it.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from math import comb

from .errors import DomainError, IncompleteTableError
from .gaussian import GaussianRational
from .eigen import ExponentVector, eigenvector, multiplicity
from .poly import SparsePoly, _mono


@dataclass(frozen=True)
class DerivationMatrix:
    """Matrix of the derivation on the order-d coordinate block.

    Basis element j is a[d-j, j]; the matrix has superdiagonal 1..d,
    subdiagonal -d..-1 and zeros elsewhere.  Entries are plain ints in a
    tuple-of-tuples, row major.
    """

    d: int
    entries: tuple


def build_matrix(d: int) -> DerivationMatrix:
    """Matrix of the derivation acting on the order-d block."""
    if d < 1:
        raise DomainError(f"matrix order must be >= 1, got {d}")
    rows = [[0] * (d + 1) for _ in range(d + 1)]
    for c in range(d + 1):
        # image of a[d-c, c] is c*a[d-c+1, c-1] - (d-c)*a[d-c-1, c+1]
        if c >= 1:
            rows[c - 1][c] = c
        if c + 1 <= d:
            rows[c + 1][c] = -(d - c)
    return DerivationMatrix(d, tuple(tuple(r) for r in rows))


def matrix_apply(m: DerivationMatrix, vec):
    """Exact matrix-vector product over Gaussian rationals."""
    n = m.d + 1
    if len(vec) != n:
        raise DomainError("vector length does not match matrix order")
    return tuple(
        sum((GaussianRational(m.entries[r][c]) * vec[c] for c in range(n)),
            GaussianRational(0))
        for r in range(n)
    )


def _check_variables(f: SparsePoly, d: int):
    for (k, j) in f.variables():
        if not (2 <= k + j <= d):
            raise DomainError(
                f"variable a[{k},{j}] outside the order range 2..{d}"
            )


def apply_D(f: SparsePoly, d: int) -> SparsePoly:
    """Image of f under the rotation derivation, exactly.

    Every variable of f must have order between 2 and d.
    """
    _check_variables(f, d)
    out = SparsePoly()
    for mono, coef in f.terms.items():
        for idx, ((p, q), e) in enumerate(mono):
            rest = list(mono[:idx]) + [((p, q), e - 1)] + list(mono[idx + 1:])
            scale = coef * e
            if q >= 1:
                out._add_term(_mono(rest + [((p + 1, q - 1), 1)]), scale * q)
            if p >= 1:
                out._add_term(_mono(rest + [((p - 1, q + 1), 1)]), scale * (-p))
    return out


def is_invariant(f: SparsePoly, d: int) -> bool:
    """True iff the rotation derivation annihilates f."""
    return apply_D(f, d).is_zero()


def expand_monomial(m: ExponentVector, d: int) -> SparsePoly:
    """Expand a product of eigenform powers into moment coordinates."""
    out = SparsePoly.constant(1)
    for sym, e in m.exponents:
        if sym.n > d:
            raise DomainError(f"symbol order {sym.n} exceeds ambient order {d}")
        out = out * (eigenvector(sym.n, sym.s).to_poly() ** e)
    return out


def character(d: int) -> dict:
    """Weight multiplicities of the order 2..d coordinate space.

    Maps each weight k in -d..d with a nonzero eigenvalue count to that
    count; the map is symmetric in k -> -k.
    """
    if d < 2:
        raise DomainError(f"character needs order >= 2, got {d}")
    out = {}
    for k in range(-d, d + 1):
        l = multiplicity(d, abs(k))
        if l:
            out[k] = l
    return out


def _rotation_block_coeff(n, k, p, cos_t, sin_t):
    # coefficient of x^p y^(n-p) in (x cos + y sin)^k (-x sin + y cos)^(n-k)
    j = n - k
    total = 0.0
    for alpha in range(max(0, p - j), min(k, p) + 1):
        beta = p - alpha
        total += (
            comb(k, alpha)
            * cos_t**alpha
            * sin_t ** (k - alpha)
            * comb(j, beta)
            * (-sin_t) ** beta
            * cos_t ** (j - beta)
        )
    return total


def rotate_moment_vector(t, theta: float, d: int):
    """Moment table of the same shape rotated by theta radians.

    Each complete order-n block is pushed forward as the coefficients of a
    binomially weighted binary form under the rotation substitution; the
    infinitesimal limit of this map is exactly the derivation action.
    Requires every entry of orders 2..d to be present.
    """
    import math

    for n in range(2, d + 1):
        for j in range(n + 1):
            if (n - j, j) not in t.entries:
                raise IncompleteTableError(f"missing entry ({n - j}, {j})")
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    new_entries = dict(t.entries)
    max_n = max((p + q for p, q in t.entries), default=0)
    for n in range(1, max_n + 1):
        block = [t.entries.get((n - j, j)) for j in range(n + 1)]
        if any(v is None for v in block):
            continue
        for p in range(n + 1):
            q = n - p
            acc = 0.0
            for k in range(n + 1):
                acc += comb(n, k) * block[n - k] * _rotation_block_coeff(
                    n, k, p, cos_t, sin_t
                )
            new_entries[(p, q)] = acc / comb(n, p)
    return dataclasses.replace(t, entries=new_entries)
