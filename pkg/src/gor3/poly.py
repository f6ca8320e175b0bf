"""Sparse multivariate polynomials with exact coefficients.

A polynomial is a mapping from exponent tuples to nonzero field scalars.
Graded pieces of ideals are handled as dense vectors over the canonical
monomial basis, so MultiPoly only needs ring arithmetic, substitution and
conversion to/from coefficient vectors.
"""

from __future__ import annotations

from .fields import QQ
from .monomials import (
    default_var_names,
    deglex_key,
    mono_mul,
    monomials_of_degree,
)


class MultiPoly:
    __slots__ = ("n", "field", "terms")

    def __init__(self, n, terms=None, field=QQ):
        self.n = n
        self.field = field
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != n:
                    raise ValueError(
                        f"exponent vector {exps} has wrong length (ambient n={n})")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if not field.is_zero(coeff):
                    clean[tuple(exps)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, n, field=QQ):
        return cls(n, {}, field)

    @classmethod
    def constant(cls, n, value, field=QQ):
        return cls(n, {(0,) * n: field.of(value)}, field)

    @classmethod
    def variable(cls, i, n, field=QQ):
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): field.one}, field)

    @classmethod
    def monomial(cls, exps, coeff=1, field=QQ):
        return cls(len(exps), {tuple(exps): field.of(coeff)}, field)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is zero or not homogeneous")
        return degs.pop()

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def leading_monomial(self) -> tuple:
        """Deg-lex leading exponent vector (x1 > ... > xn)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=deglex_key)

    def _check_compatible(self, other):
        if self.n != other.n:
            raise ValueError("ambient variable counts differ")
        if self.field != other.field:
            raise ValueError("coefficient fields differ")

    def __add__(self, other):
        self._check_compatible(other)
        field = self.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = field.add(terms.get(e, field.zero), c)
            if field.is_zero(acc):
                terms.pop(e, None)
            else:
                terms[e] = acc
        return MultiPoly(self.n, terms, field)

    def __neg__(self):
        field = self.field
        return MultiPoly(self.n,
                         {e: field.neg(c) for e, c in self.terms.items()},
                         field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check_compatible(other)
        field = self.field
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                acc = field.add(terms.get(e, field.zero), field.mul(c1, c2))
                if field.is_zero(acc):
                    terms.pop(e, None)
                else:
                    terms[e] = acc
        return MultiPoly(self.n, terms, field)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, scalar):
        c = self.field.of(scalar)
        if self.field.is_zero(c):
            return MultiPoly.zero(self.n, self.field)
        field = self.field
        return MultiPoly(self.n,
                         {e: field.mul(v, c) for e, v in self.terms.items()},
                         field)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.n, 1, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def substitute(self, images):
        """Ring-homomorphism image: variable i goes to images[i]."""
        if len(images) != self.n:
            raise ValueError(
                f"need {self.n} images, got {len(images)}")
        if not images:
            raise ValueError("empty image list")
        m = images[0].n
        field = self.field
        for g in images:
            if g.n != m or g.field != field:
                raise ValueError("images live in incompatible rings")
        out = MultiPoly.zero(m, field)
        powers = [{} for _ in range(self.n)]

        def power_of(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        for exps, coeff in self.terms.items():
            term = MultiPoly.constant(m, 1, field).scale(coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * power_of(i, e)
            out = out + term
        return out

    def to_vector(self, t=None):
        """Dense coefficient vector over the canonical degree-t basis."""
        if t is None:
            t = self.homogeneous_degree()
        elif self.terms and not all(sum(e) == t for e in self.terms):
            raise ValueError(f"polynomial is not homogeneous of degree {t}")
        zero = self.field.zero
        return [self.terms.get(e, zero) for e in monomials_of_degree(self.n, t)]

    @classmethod
    def from_vector(cls, n, t, vec, field=QQ):
        basis = monomials_of_degree(n, t)
        if len(vec) != len(basis):
            raise ValueError("vector length does not match the graded basis")
        return cls(n, {e: c for e, c in zip(basis, vec)}, field)

    def sorted_terms(self):
        """Terms in display order: highest degree first, deg-lex within."""
        return sorted(self.terms.items(),
                      key=lambda item: deglex_key(item[0]), reverse=True)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.n == other.n
                and self.field == other.field and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.field, frozenset(self.terms.items())))

    def format(self, var_names=None) -> str:
        if var_names is None:
            var_names = default_var_names(self.n)
        if not self.terms:
            return "0"
        field = self.field
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(var_names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            text = field.fmt(coeff)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            if factors:
                mono = "*".join(factors)
                body = mono if text == "1" else f"{text}*{mono}"
            else:
                body = text
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MultiPoly({self.format()!r})"


def substitute(f: MultiPoly, images) -> MultiPoly:
    return f.substitute(images)


def power_substitution(f: MultiPoly, p: int) -> MultiPoly:
    """Image of f under x_i -> x_i^p (exponent scaling, coefficients kept)."""
    if p < 1:
        raise ValueError("power must be >= 1")
    return MultiPoly(f.n,
                     {tuple(e * p for e in exps): c
                      for exps, c in f.terms.items()},
                     f.field)


def rewrite_in_linear_forms(f: MultiPoly, lines) -> MultiPoly:
    """Express f as a polynomial in n independent linear forms.

    Returns g with g(l_1, ..., l_n) = f; raises if the forms are dependent.
    """
    from .linalg import ExactMatrix

    n = f.n
    if len(lines) != n:
        raise ValueError(f"need {n} linear forms")
    field = f.field
    rows = []
    for ell in lines:
        if ell.is_zero() or ell.homogeneous_degree() != 1:
            raise ValueError("expected linear forms")
        rows.append(ell.to_vector(1))
    mat = ExactMatrix(field, rows)
    if mat.rank() != n:
        raise ValueError("linear forms are not independent")
    adj = mat.adjugate()
    det = mat.det()
    # columns of adj/det give the x_i written in the l-coordinates
    images = []
    for i in range(n):
        coeffs = {}
        for j in range(n):
            v = field.div(adj.entries[i][j], det)
            if not field.is_zero(v):
                e = [0] * n
                e[j] = 1
                coeffs[tuple(e)] = v
        images.append(MultiPoly(n, coeffs, field))
    return f.substitute(images)
