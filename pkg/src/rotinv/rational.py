"""Transcendence bases of the rational rotation invariants.

For order d the field of rational invariants has transcendence degree
dim - 1 where dim = (d+4)(d-1)/2.  A basis is built from three families
anchored at a fixed positive eigen label (p, q): the zero-weight forms, the
conjugate-pair products, and cross pairs e_n(si)^q e_p(-qi)^s for every
remaining positive label (n, s).  Algebraic independence is certified
numerically through the rank of the Jacobian at random points.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateShapeError, DomainError, InvalidAnchorError
from .gaussian import GaussianRational
from .eigen import (
    EigenSymbol,
    ExponentVector,
    dim_moment_space,
    eigenvector,
    spectrum,
)
from .poly import SparsePoly

ZERO_WEIGHT = "zero_weight"
CONJUGATE_PAIR = "conjugate_pair"
CROSS_PAIR = "cross_pair"


@dataclass(frozen=True)
class RationalGenerator:
    """One basis element: a kind tag plus its eigenform exponent pattern."""

    kind: str
    factors: ExponentVector

    def degree(self) -> int:
        return self.factors.degree()

    def label(self) -> str:
        return self.factors.label()


def count_rational(d: int) -> int:
    """Size of a minimal generating set of the rational invariants."""
    return dim_moment_space(d) - 1


def default_anchor(d: int):
    """Anchor label used when none is requested: (3, 1) once cubics exist."""
    return (3, 1) if d >= 3 else (2, 2)


def rational_generators(d: int, p: int, q: int):
    """The anchored transcendence basis for order d, canonically sorted.

    The cross family ranges over every positive label except the anchor
    itself; pairs with s = q but (n, s) != (p, q) stay in the set, and
    exponents are left unreduced even when gcd(q, s) > 1.
    """
    if d < 2:
        raise DomainError(f"rational_generators needs d >= 2, got {d}")
    if not (2 <= p <= d) or q <= 0 or q not in spectrum(p):
        raise InvalidAnchorError(
            f"anchor ({p}, {q}) invalid: need 2 <= p <= {d} and q a positive "
            f"weight of order p"
        )
    gens = []
    for j in range(1, d // 2 + 1):
        gens.append(
            RationalGenerator(
                ZERO_WEIGHT, ExponentVector.make({EigenSymbol(2 * j, 0): 1})
            )
        )
    for n in range(2, d + 1):
        for s in spectrum(n):
            if s <= 0:
                continue
            gens.append(
                RationalGenerator(
                    CONJUGATE_PAIR,
                    ExponentVector.make(
                        {EigenSymbol(n, s): 1, EigenSymbol(n, -s): 1}
                    ),
                )
            )
            if (n, s) != (p, q):
                gens.append(
                    RationalGenerator(
                        CROSS_PAIR,
                        ExponentVector.make(
                            {EigenSymbol(n, s): q, EigenSymbol(p, -q): s}
                        ),
                    )
                )
    gens.sort(key=lambda g: g.factors.sort_key())
    assert len(gens) == count_rational(d)
    return gens


def _form_value_and_coeffs(sym, point_by_var):
    form = eigenvector(sym.n, sym.s)
    coeffs = [complex(c) for c in form.coefficients]
    value = sum(
        c * point_by_var[v] for c, v in zip(coeffs, form.variables())
    )
    return value, coeffs, form.variables()


def evaluate_gradient(factors: ExponentVector, point_by_var, var_index):
    """Value and gradient of a product of eigenform powers at a point.

    Uses the product rule on the linear factors directly, which avoids
    expanding the polynomial.  Returns (value, gradient ndarray).
    """
    data = []
    for sym, e in factors.exponents:
        value, coeffs, variables = _form_value_and_coeffs(sym, point_by_var)
        data.append((value, e, coeffs, variables))
    total = 1.0 + 0j
    for value, e, _, _ in data:
        total *= value**e
    grad = np.zeros(len(var_index), dtype=np.complex128)
    for idx, (value, e, coeffs, variables) in enumerate(data):
        partial = e * value ** (e - 1) if e != 1 else 1.0 + 0j
        for jdx, (v2, e2, _, _) in enumerate(data):
            if jdx != idx:
                partial *= v2**e2
        for c, v in zip(coeffs, variables):
            grad[var_index[v]] += partial * c
    return total, grad


def moment_variables(d: int):
    """All coordinates a[k,j] with 2 <= k+j <= d, in block order."""
    return [(n - j, j) for n in range(2, d + 1) for j in range(n + 1)]


def independence_check(gens, d: int, trials: int, seed=None, threshold=1e-8) -> bool:
    """Numeric Jacobian rank test for algebraic independence.

    Evaluates the Jacobian of the generators with respect to every moment
    coordinate at ``trials`` random real points (entries uniform in [-1, 1])
    and checks its rank is dim - 1 via singular values, using a relative
    threshold.  Accepts any sequence whose items carry a ``factors``
    exponent vector (or are exponent vectors themselves).
    """
    variables = moment_variables(d)
    var_index = {v: i for i, v in enumerate(variables)}
    expected = dim_moment_space(d) - 1
    rng = np.random.default_rng(seed)
    vectors = [getattr(g, "factors", g) for g in gens]
    for _ in range(trials):
        point = {v: rng.uniform(-1.0, 1.0) for v in variables}
        jac = np.zeros((len(vectors), len(variables)), dtype=np.complex128)
        for i, ev in enumerate(vectors):
            _, grad = evaluate_gradient(ev, point, var_index)
            jac[i] = grad
        sv = np.linalg.svd(jac, compute_uv=False)
        rank = int(np.sum(sv > threshold * sv[0])) if sv[0] > 0 else 0
        if rank != expected:
            return False
    return True


# names b1..b11 follow the canonical sort of rational_generators(4, 3, 1):
#   b1 = x20, b2 = x40, b3 = x22.y22, b4 = x31.y31, b5 = x33.y33,
#   b6 = x42.y42, b7 = x44.y44, b8 = x22.y31^2, b9 = x42.y31^2,
#   b10 = x33.y31^3, b11 = x44.y31^4


def phi_from_beta(beta) -> dict:
    """Classical complex-moment invariants phi1..phi11 from the order-4 basis.

    The conversion uses that each cross-pair value z satisfies
    z * conj(z) = (conjugate-pair product) * b4^deg, so Re z and Im z are
    rational in the basis:  Re z = (prod + z^2) / (2 z),
    Im z = i (prod - z^2) / (2 z).  Raises when a denominator b8..b11
    vanishes, naming the offending generator.
    """
    b = {}
    for k in range(1, 12):
        name = f"b{k}"
        if name not in beta:
            raise DomainError(f"missing basis value {name}")
        b[k] = complex(beta[name])
    for k in (8, 9, 10, 11):
        if b[k] == 0:
            raise DegenerateShapeError(f"b{k}")
    half_i = 0.5j
    phi = {
        "phi1": b[1],
        "phi2": b[4],
        "phi3": 0.5 * (b[3] * b[4] ** 2 + b[8] ** 2) / b[8],
        "phi4": half_i * (b[3] * b[4] ** 2 - b[8] ** 2) / b[8],
        "phi5": 0.5 * (b[5] * b[4] ** 3 + b[10] ** 2) / b[10],
        "phi6": half_i * (b[5] * b[4] ** 3 - b[10] ** 2) / b[10],
        "phi7": b[2],
        "phi8": 0.5 * (b[6] * b[4] ** 2 + b[9] ** 2) / b[9],
        "phi9": half_i * (b[6] * b[4] ** 2 - b[9] ** 2) / b[9],
        "phi10": 0.5 * (b[7] * b[4] ** 4 + b[11] ** 2) / b[11],
        "phi11": half_i * (b[7] * b[4] ** 4 - b[11] ** 2) / b[11],
    }
    return phi


def hu_classical():
    """The three classical cubic rotation invariants h5, h6, h7.

    Expanded in moment coordinates with exactly real coefficients:
    h5 and h7 are the real and imaginary parts of e3(3i) e3(-i)^3,
    h6 is the real part of e2(2i) e3(-i)^2.
    """
    x1 = eigenvector(3, 1).to_poly()
    x2 = eigenvector(2, 2).to_poly()
    x3 = eigenvector(3, 3).to_poly()
    y1 = eigenvector(3, -1).to_poly()
    y2 = eigenvector(2, -2).to_poly()
    y3 = eigenvector(3, -3).to_poly()
    half = GaussianRational("1/2")
    minus_half_i = GaussianRational(0, "-1/2")
    h5 = half * (x1**3 * y3 + x3 * y1**3)
    h6 = half * (x1**2 * y2 + x2 * y1**2)
    h7 = minus_half_i * (x3 * y1**3 - x1**3 * y3)
    return h5, h6, h7
