"""Polynomials in x1..xm with multivector coefficients.

A polynomial is a sparse map from exponent tuples (a1, ..., am) to
Multivector coefficients.  Scalar variables commute with everything, so
the coefficient is stored on the left by convention; printing and parsing
follow the same convention.  Monomial enumeration is graded-lex: degree
first, then exponent tuples in descending lexicographic order, which puts
x1^k first and xm^k last within a degree.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .algebra import (
    Multivector,
    RationalLike,
    _as_fraction,
    _blade_order_key,
    _check_dim,
    blade_name,
)

Monomial = tuple[int, ...]
CoefficientLike = Union[Multivector, int, Fraction]


def monomial_degree(exponents: Monomial) -> int:
    return sum(exponents)


def monomial_sort_key(exponents: Monomial) -> tuple[int, tuple[int, ...]]:
    """Graded-lex order: by total degree, then descending lexicographic."""
    return (sum(exponents), tuple(-e for e in exponents))


def monomial_basis(m: int, k: int) -> list[Monomial]:
    """All degree-k monomials in m variables, in graded-lex order."""
    _check_dim(m)
    if k < 0:
        raise ValueError(f"degree must be non-negative, got {k}")
    out: list[Monomial] = []

    def emit(prefix: list[int], remaining_vars: int, remaining_deg: int) -> None:
        if remaining_vars == 1:
            out.append(tuple(prefix + [remaining_deg]))
            return
        for a in range(remaining_deg, -1, -1):
            emit(prefix + [a], remaining_vars - 1, remaining_deg - a)

    emit([], m, k)
    return out


def monomial_count(m: int, k: int) -> int:
    if k < 0:
        raise ValueError(f"degree must be non-negative, got {k}")
    return math.comb(k + m - 1, m - 1)


def space_dim(m: int, k: int) -> int:
    """Real dimension of the degree-k multivector polynomial space."""
    _check_dim(m)
    return monomial_count(m, k) * (1 << m)


def _coerce_coefficient(dim: int, coeff: CoefficientLike) -> Multivector:
    if isinstance(coeff, Multivector):
        if coeff.dim != dim:
            raise ValueError(f"dimension mismatch: {dim} vs {coeff.dim}")
        return coeff
    return Multivector.scalar(dim, coeff)


class CliffordPolynomial:
    """Immutable multivector-valued polynomial, zero-pruned.

    Values may be inhomogeneous; operations that require a single degree
    (the decomposition machinery) check homogeneity themselves.
    """

    __slots__ = ("_dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[Monomial, CoefficientLike] | None = None):
        _check_dim(dim)
        clean: dict[Monomial, Multivector] = {}
        if terms:
            for mono, coeff in terms.items():
                mono = tuple(mono)
                if len(mono) != dim or any(not isinstance(e, int) or e < 0 for e in mono):
                    raise ValueError(f"bad exponent tuple {mono!r} for dimension {dim}")
                value = _coerce_coefficient(dim, coeff)
                if not value.is_zero():
                    clean[mono] = value
        object.__setattr__(self, "_dim", dim)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CliffordPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "CliffordPolynomial":
        return cls(dim)

    @classmethod
    def constant(cls, dim: int, value: CoefficientLike) -> "CliffordPolynomial":
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def monomial(cls, dim: int, exponents: Iterable[int], coeff: CoefficientLike = 1) -> "CliffordPolynomial":
        return cls(dim, {tuple(exponents): coeff})

    @classmethod
    def variable(cls, dim: int, j: int) -> "CliffordPolynomial":
        if not 1 <= j <= dim:
            raise ValueError(f"variable index {j} out of range 1..{dim}")
        exps = [0] * dim
        exps[j - 1] = 1
        return cls(dim, {tuple(exps): 1})

    # -- inspection --------------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    def terms(self) -> dict[Monomial, Multivector]:
        return dict(self._terms)

    def coefficient(self, exponents: Iterable[int]) -> Multivector:
        return self._terms.get(tuple(exponents), Multivector.zero(self._dim))

    def items(self) -> Iterator[tuple[Monomial, Multivector]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(monomial_degree(mono) for mono in self._terms)

    def is_homogeneous(self, k: int | None = None) -> bool:
        degrees = {monomial_degree(mono) for mono in self._terms}
        if k is None:
            return len(degrees) <= 1
        return degrees <= {k}

    def grades(self) -> set[int]:
        out: set[int] = set()
        for coeff in self._terms.values():
            out |= coeff.grades()
        return out

    def is_pure_grade(self, g: int) -> bool:
        return all(coeff.is_pure_grade(g) for coeff in self._terms.values())

    def pure_grade(self) -> int | None:
        grades = self.grades()
        if len(grades) == 1:
            return grades.pop()
        return None

    def grade(self, g: int) -> "CliffordPolynomial":
        """Coefficient-wise grade projection."""
        return CliffordPolynomial(self._dim, {m: c.grade(g) for m, c in self._terms.items()})

    # -- linear arithmetic ---------------------------------------------------

    def _coerce(self, other: object) -> "CliffordPolynomial | None":
        if isinstance(other, CliffordPolynomial):
            if other._dim != self._dim:
                raise ValueError(f"dimension mismatch: {self._dim} vs {other._dim}")
            return other
        if isinstance(other, (int, Fraction, Multivector)):
            return CliffordPolynomial.constant(self._dim, other)
        return None

    def __add__(self, other: object) -> "CliffordPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in rhs._terms.items():
            if mono in terms:
                terms[mono] = terms[mono] + coeff
            else:
                terms[mono] = coeff
        return CliffordPolynomial(self._dim, terms)

    __radd__ = __add__

    def __neg__(self) -> "CliffordPolynomial":
        return CliffordPolynomial(self._dim, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "CliffordPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "CliffordPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> "CliffordPolynomial":
        if isinstance(other, (int, Fraction)):
            return CliffordPolynomial(self._dim, {m: c * other for m, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "CliffordPolynomial":
        if isinstance(other, (int, Fraction)):
            factor = _as_fraction(other)
            if not factor:
                raise ZeroDivisionError("division of polynomial by zero")
            return self * (Fraction(1) / factor)
        return NotImplemented

    def mul_left(self, a: Multivector) -> "CliffordPolynomial":
        """Constant multivector times the polynomial: a * p."""
        if a.dim != self._dim:
            raise ValueError(f"dimension mismatch: {self._dim} vs {a.dim}")
        return CliffordPolynomial(self._dim, {m: a * c for m, c in self._terms.items()})

    def mul_right(self, a: Multivector) -> "CliffordPolynomial":
        """Polynomial times a constant multivector: p * a."""
        if a.dim != self._dim:
            raise ValueError(f"dimension mismatch: {self._dim} vs {a.dim}")
        return CliffordPolynomial(self._dim, {m: c * a for m, c in self._terms.items()})

    # -- calculus ------------------------------------------------------------

    def partial(self, j: int) -> "CliffordPolynomial":
        """Formal partial derivative with respect to x_j (1-based axis)."""
        if not 1 <= j <= self._dim:
            raise ValueError(f"axis {j} out of range 1..{self._dim}")
        idx = j - 1
        terms: dict[Monomial, Multivector] = {}
        for mono, coeff in self._terms.items():
            e = mono[idx]
            if e == 0:
                continue
            lowered = mono[:idx] + (e - 1,) + mono[idx + 1:]
            value = coeff * e
            if lowered in terms:
                terms[lowered] = terms[lowered] + value
            else:
                terms[lowered] = value
        return CliffordPolynomial(self._dim, terms)

    def eval(self, point: Sequence[RationalLike]) -> Multivector:
        """Exact evaluation at a rational point."""
        if len(point) != self._dim:
            raise ValueError(f"point length {len(point)} != dimension {self._dim}")
        coords = [_as_fraction(c) for c in point]
        total = Multivector.zero(self._dim)
        for mono, coeff in self._terms.items():
            factor = Fraction(1)
            for c, e in zip(coords, mono):
                if e:
                    factor *= c ** e
            if factor:
                total = total + coeff * factor
        return total

    # -- comparison / rendering ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Multivector)):
            other = CliffordPolynomial.constant(self._dim, other)
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self._dim == other._dim and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._dim, frozenset((m, c) for m, c in self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for mono in sorted(self._terms, key=monomial_sort_key):
            coeff = self._terms[mono]
            var_part = _format_monomial(mono)
            for mask in sorted(coeff.terms(), key=_blade_order_key):
                value = coeff.coefficient(mask)
                pieces = [str(abs(value))]
                if var_part:
                    pieces.append(var_part)
                if mask:
                    pieces.append(blade_name(mask, self._dim))
                body = "*".join(pieces)
                if not chunks:
                    chunks.append(("-" if value < 0 else "") + body)
                else:
                    chunks.append(("- " if value < 0 else "+ ") + body)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"CliffordPolynomial({self._dim}, {self._terms!r})"


def _format_monomial(mono: Monomial) -> str:
    pieces = []
    for j, e in enumerate(mono, start=1):
        if e == 1:
            pieces.append(f"x{j}")
        elif e > 1:
            pieces.append(f"x{j}^{e}")
    return "*".join(pieces)


def x_vector(m: int) -> CliffordPolynomial:
    """The vector variable as a polynomial: x = x1 e1 + ... + xm em."""
    _check_dim(m)
    terms: dict[Monomial, Multivector] = {}
    for j in range(1, m + 1):
        exps = [0] * m
        exps[j - 1] = 1
        terms[tuple(exps)] = Multivector.basis_vector(m, j)
    return CliffordPolynomial(m, terms)


def mul_by_x_left(p: CliffordPolynomial) -> CliffordPolynomial:
    """x * p, i.e. sum_j x_j (e_j p); raises degree by one."""
    m = p.dim
    terms: dict[Monomial, Multivector] = {}
    for mono, coeff in p.items():
        for j in range(m):
            raised = mono[:j] + (mono[j] + 1,) + mono[j + 1:]
            value = Multivector.basis_vector(m, j + 1) * coeff
            if raised in terms:
                terms[raised] = terms[raised] + value
            else:
                terms[raised] = value
    return CliffordPolynomial(m, terms)


def mul_by_x_right(p: CliffordPolynomial) -> CliffordPolynomial:
    """p * x, i.e. sum_j x_j (p e_j); raises degree by one."""
    m = p.dim
    terms: dict[Monomial, Multivector] = {}
    for mono, coeff in p.items():
        for j in range(m):
            raised = mono[:j] + (mono[j] + 1,) + mono[j + 1:]
            value = coeff * Multivector.basis_vector(m, j + 1)
            if raised in terms:
                terms[raised] = terms[raised] + value
            else:
                terms[raised] = value
    return CliffordPolynomial(m, terms)


def euler(p: CliffordPolynomial) -> CliffordPolynomial:
    """Euler operator sum_j x_j d/dx_j; scales each monomial by its degree."""
    return CliffordPolynomial(
        p.dim, {mono: coeff * monomial_degree(mono) for mono, coeff in p.items()}
    )
