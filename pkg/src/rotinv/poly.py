"""Sparse multivariate polynomials over Gaussian rationals.

Variables are the moment coordinates ``a[k,j]`` represented as plain
``(k, j)`` tuples.  A monomial is a tuple of ``((k, j), exponent)`` pairs held in
the canonical variable order; a polynomial maps monomials to nonzero
coefficients.
"""
from __future__ import annotations

from .gaussian import ZERO, GaussianRational


def var_rank(v):
    """Canonical variable ordering: (k+j, k) descending, so a[3,0] < a[2,1]."""
    k, j = v
    return (-(k + j), -k)


def _mono(items):
    """Normalize an iterable of ((k, j), e) into a canonical monomial."""
    acc = {}
    for v, e in items:
        if e:
            acc[v] = acc.get(v, 0) + e
    return tuple(sorted(((v, e) for v, e in acc.items() if e), key=lambda it: var_rank(it[0])))


def _mono_mul(m1, m2):
    return _mono(list(m1) + list(m2))


def _mono_degree(m):
    return sum(e for _, e in m)


def _term_sort_key(mono):
    # graded order: total degree first, then lexicographic in the canonical
    # variable ranking with higher powers of earlier variables first
    return (-_mono_degree(mono), tuple((var_rank(v), -e) for v, e in mono))


class SparsePoly:
    """A polynomial stored as ``{monomial: GaussianRational}``.

    All arithmetic is exact; zero coefficients are never stored, so the
    zero polynomial has an empty term map and two polynomials are equal
    iff their term maps are.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, coef in terms.items():
                c = coef if isinstance(coef, GaussianRational) else GaussianRational(coef)
                if not c.is_zero():
                    self.terms[mono] = c

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    @classmethod
    def variable(cls, k, j, coef=1):
        return cls({(((k, j), 1),): coef})

    @classmethod
    def from_items(cls, items):
        """Build from an iterable of (monomial-items, coefficient) pairs."""
        p = cls()
        for mono_items, coef in items:
            p._add_term(_mono(mono_items), coef)
        return p

    def _add_term(self, mono, coef):
        c = coef if isinstance(coef, GaussianRational) else GaussianRational(coef)
        cur = self.terms.get(mono, ZERO) + c
        if cur.is_zero():
            self.terms.pop(mono, None)
        else:
            self.terms[mono] = cur

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, SparsePoly):
            return x
        if isinstance(x, (int, GaussianRational)):
            return SparsePoly.constant(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = SparsePoly()
        out.terms = dict(self.terms)
        for mono, coef in o.terms.items():
            out._add_term(mono, coef)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = SparsePoly()
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = SparsePoly()
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                out._add_term(_mono_mul(m1, m2), c1 * c2)
        return out

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial power must be a non-negative integer")
        result = SparsePoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- queries -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(_mono_degree(m) for m in self.terms)

    def variables(self):
        return {v for m in self.terms for v, _ in m}

    def coefficient(self, mono_items):
        return self.terms.get(_mono(mono_items), ZERO)

    def conjugate(self):
        out = SparsePoly()
        out.terms = {m: c.conjugate() for m, c in self.terms.items()}
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def iter_terms(self):
        """Yield (monomial, coefficient) in the canonical term order."""
        for mono in sorted(self.terms, key=_term_sort_key):
            yield mono, self.terms[mono]

    def evaluate(self, values):
        """Numeric value given ``values[(k, j)]`` for every variable used."""
        total = 0j
        for mono, coef in self.terms.items():
            v = complex(coef)
            for var, e in mono:
                v *= values[var] ** e
            total += v
        return total

    # -- serialization --------------------------------------------------

    def to_text(self):
        """Canonical text form ``coef * a[k,j]^e * ...`` joined by `` + ``.

        Coefficients render as Gaussian rationals ``p/q+r/s*i`` and are
        parenthesized when both parts are present.
        """
        if not self.terms:
            return "0"
        parts = []
        for mono, coef in self.iter_terms():
            cs = str(coef)
            if coef.re != 0 and coef.im != 0:
                cs = f"({cs})"
            factors = [cs]
            for (k, j), e in mono:
                factors.append(f"a[{k},{j}]" + (f"^{e}" if e > 1 else ""))
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"SparsePoly({self.to_text()})"
