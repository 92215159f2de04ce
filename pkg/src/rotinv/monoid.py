"""Hilbert bases of zero-weight exponent monoids.

The rotation invariants of order up to d form a monomial algebra: a product
of eigenforms is invariant iff its exponent vector has zero total weight.
The minimal generating set of that algebra corresponds to the Hilbert basis
of the monoid {alpha in N^n : sum alpha_i w_i = 0}, computed here by a
Contejean-Devie style completion: breadth-first growth from the unit
vectors, extending a vector only by coordinates whose weight opposes its
current weight, with minimality sieving against the solutions found so far.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _accel
from .errors import DegreeCapExceededError, DomainError
from .eigen import EigenSymbol, ExponentVector, spectrum

DEFAULT_DEGREE_CAP = 32

# candidate generation proceeds in chunks to bound peak memory at high order
_CHUNK_ROWS = 200_000


@dataclass(frozen=True)
class WeightVector:
    """The ordered eigen symbols of orders 2..d and their weights.

    Symbols are sorted ascending by (n, s) and include the zero-weight
    labels, so the weight multiset carries multiplicity(d, s) copies of
    +s and -s for s >= 1 and multiplicity(d, 0) zeros.
    """

    d: int
    symbols: tuple
    weights: tuple


def generating_vector(d: int) -> WeightVector:
    """Weight vector of the order-d invariant search, canonical ordering."""
    if d < 2:
        raise DomainError(f"generating_vector needs d >= 2, got {d}")
    symbols = tuple(EigenSymbol(n, s) for n in range(2, d + 1) for s in spectrum(n))
    return WeightVector(d, symbols, tuple(sym.s for sym in symbols))


def minimal_nonneg_solutions(weights, degree_cap=DEFAULT_DEGREE_CAP):
    """Hilbert basis of {alpha in N^n : alpha . weights = 0} as sorted rows.

    Returns an ndarray of int64 rows, lexicographically sorted.  Every
    non-negative solution of the balance equation is an N-combination of
    the rows and no row is a nontrivial sum of others.
    """
    w = np.asarray(list(weights), dtype=np.int64)
    n = len(w)
    if n == 0:
        return np.empty((0, 0), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    basis_parts = []
    if (w == 0).any():
        basis_parts.append(eye[w == 0])
    frontier = eye[w != 0]
    pos_units = eye[w > 0]
    neg_units = eye[w < 0]

    for _depth in range(2, degree_cap + 1):
        if len(frontier) == 0:
            break
        basis = (
            np.concatenate(basis_parts)
            if basis_parts
            else np.empty((0, n), dtype=np.int64)
        )
        fw = frontier @ w
        sol_parts = []
        rest_parts = []
        for rows, units in ((frontier[fw > 0], neg_units), (frontier[fw < 0], pos_units)):
            if len(rows) == 0 or len(units) == 0:
                continue
            for lo in range(0, len(rows), _CHUNK_ROWS):
                chunk = rows[lo : lo + _CHUNK_ROWS]
                children = (chunk[:, None, :] + units[None, :, :]).reshape(-1, n)
                keep = ~_accel.dominated_mask(children, basis)
                children = np.unique(children[keep], axis=0)
                cw = children @ w
                sol_parts.append(children[cw == 0])
                rest_parts.append(children[cw != 0])
        new_sols = (
            np.unique(np.concatenate(sol_parts), axis=0)
            if sol_parts
            else np.empty((0, n), dtype=np.int64)
        )
        if len(new_sols):
            basis_parts.append(new_sols)
            basis = np.concatenate(basis_parts)
        frontier = (
            np.unique(np.concatenate(rest_parts), axis=0)
            if rest_parts
            else np.empty((0, n), dtype=np.int64)
        )
        if len(frontier) and len(basis):
            frontier = frontier[~_accel.dominated_mask(frontier, basis)]
    else:
        if len(frontier):
            raise DegreeCapExceededError(
                f"completion search still active at degree cap {degree_cap} "
                f"({len(frontier)} open vectors); raise the cap"
            )
    if not basis_parts:
        return np.empty((0, n), dtype=np.int64)
    out = np.unique(np.concatenate(basis_parts), axis=0)
    return out


def hilbert_basis(w: WeightVector, degree_cap=DEFAULT_DEGREE_CAP):
    """Minimal generating set of the zero-weight exponent monoid of w."""
    rows = minimal_nonneg_solutions(w.weights, degree_cap=degree_cap)
    return frozenset(
        ExponentVector.make(
            {sym: int(e) for sym, e in zip(w.symbols, row) if e}
        )
        for row in rows
    )


def polynomial_generators(d: int, degree_cap=DEFAULT_DEGREE_CAP):
    """Minimal generating set of the order-d polynomial invariants.

    Returns (ExponentVector, degree) pairs sorted by degree, then by the
    canonical monomial order.
    """
    basis = hilbert_basis(generating_vector(d), degree_cap=degree_cap)
    ordered = sorted(basis, key=ExponentVector.sort_key)
    return [(ev, ev.degree()) for ev in ordered]
