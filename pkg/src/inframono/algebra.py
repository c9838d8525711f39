"""Exact arithmetic in the real Clifford algebra Cl(0, m).

The algebra is generated over the rationals by e_1, ..., e_m subject to
e_j e_k + e_k e_j = -2 delta_jk.  Basis blades e_A (A a subset of {1..m})
are encoded as bitmasks: bit j-1 set means index j belongs to A.  All
coefficients are `fractions.Fraction`; floats are rejected so that every
zero test in the rest of the package is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

#: Hard cap on the generator count (4096 blades).  Raise it if you know
#: what you are doing; everything downstream stays correct, just slower.
MAX_DIM = 12

RationalLike = Union[int, Fraction]


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected (int or Fraction), got {type(value).__name__}")


def _check_dim(dim: int) -> None:
    if not isinstance(dim, int) or not 1 <= dim <= MAX_DIM:
        raise ValueError(f"dimension must be an integer in 1..{MAX_DIM}, got {dim!r}")


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def blade_sign(a_mask: int, b_mask: int) -> int:
    """Sign of the product e_A * e_B in Cl(0, m).

    Counts the transpositions needed to sort the concatenation A ++ B,
    then one extra factor -1 for every shared index (e_j^2 = -1).
    """
    swaps = 0
    shifted = a_mask >> 1
    while shifted:
        swaps += _popcount(shifted & b_mask)
        shifted >>= 1
    swaps += _popcount(a_mask & b_mask)
    return -1 if swaps & 1 else 1


def blade_name(mask: int, dim: int) -> str:
    """Canonical text for a blade: ``e12`` below dim 10, ``e{1,12}`` from 10 up."""
    if mask == 0:
        return "e"
    indices = [j + 1 for j in range(dim) if mask >> j & 1]
    if dim <= 9:
        return "e" + "".join(str(j) for j in indices)
    return "e{" + ",".join(str(j) for j in indices) + "}"


@dataclass(frozen=True)
class BladeIndex:
    """Basis blade e_A of Cl(0, m), A encoded as a sorted-index bitmask."""

    mask: int
    dim: int

    def __post_init__(self) -> None:
        _check_dim(self.dim)
        if not isinstance(self.mask, int) or not 0 <= self.mask < (1 << self.dim):
            raise ValueError(f"blade mask {self.mask!r} out of range for dimension {self.dim}")

    @classmethod
    def from_indices(cls, indices: Iterable[int], dim: int) -> "BladeIndex":
        mask = 0
        for j in indices:
            if not 1 <= j <= dim:
                raise ValueError(f"blade index {j} out of range 1..{dim}")
            bit = 1 << (j - 1)
            if mask & bit:
                raise ValueError(f"repeated blade index {j}")
            mask |= bit
        return cls(mask, dim)

    @property
    def grade(self) -> int:
        return _popcount(self.mask)

    def indices(self) -> tuple[int, ...]:
        return tuple(j + 1 for j in range(self.dim) if self.mask >> j & 1)

    def __str__(self) -> str:
        return blade_name(self.mask, self.dim)


def blade_mul(a: BladeIndex, b: BladeIndex) -> tuple[int, BladeIndex]:
    """Product of two basis blades: e_A e_B = sign * e_C with C = A xor B."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return blade_sign(a.mask, b.mask), BladeIndex(a.mask ^ b.mask, a.dim)


def _blade_order_key(mask: int) -> tuple[int, int]:
    return (_popcount(mask), mask)


def blades_in_order(dim: int) -> list[int]:
    """All 2^dim blade masks sorted by (grade, mask)."""
    return sorted(range(1 << dim), key=_blade_order_key)


class Multivector:
    """Immutable element of Cl(0, m): sparse blade-mask -> Fraction map.

    Zero coefficients are never stored, so ``==`` is semantic equality.
    Instances are safe to share across threads.
    """

    __slots__ = ("_dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[int, RationalLike] | None = None):
        _check_dim(dim)
        clean: dict[int, Fraction] = {}
        limit = 1 << dim
        if terms:
            for mask, coeff in terms.items():
                if not isinstance(mask, int) or not 0 <= mask < limit:
                    raise ValueError(f"blade mask {mask!r} out of range for dimension {dim}")
                value = _as_fraction(coeff)
                if value:
                    clean[mask] = value
        object.__setattr__(self, "_dim", dim)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Multivector is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "Multivector":
        return cls(dim)

    @classmethod
    def scalar(cls, dim: int, value: RationalLike) -> "Multivector":
        return cls(dim, {0: value})

    @classmethod
    def basis_vector(cls, dim: int, j: int) -> "Multivector":
        if not 1 <= j <= dim:
            raise ValueError(f"vector index {j} out of range 1..{dim}")
        return cls(dim, {1 << (j - 1): 1})

    @classmethod
    def blade(cls, dim: int, indices: Iterable[int], coeff: RationalLike = 1) -> "Multivector":
        return cls(dim, {BladeIndex.from_indices(indices, dim).mask: coeff})

    # -- inspection --------------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, mask: int) -> Fraction:
        return self._terms.get(mask, Fraction(0))

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def grades(self) -> set[int]:
        return {_popcount(mask) for mask in self._terms}

    def is_pure_grade(self, k: int) -> bool:
        """True when every stored term has grade k (vacuously true for 0)."""
        return all(_popcount(mask) == k for mask in self._terms)

    def pure_grade(self) -> int | None:
        """The common grade of all terms, or None for zero / mixed values."""
        grades = self.grades()
        if len(grades) == 1:
            return grades.pop()
        return None

    def scalar_part(self) -> Fraction:
        return self.coefficient(0)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: object) -> "Multivector | None":
        if isinstance(other, Multivector):
            if other._dim != self._dim:
                raise ValueError(f"dimension mismatch: {self._dim} vs {other._dim}")
            return other
        if isinstance(other, (int, Fraction)):
            return Multivector.scalar(self._dim, other)
        return None

    def __add__(self, other: object) -> "Multivector":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms = dict(self._terms)
        for mask, coeff in rhs._terms.items():
            terms[mask] = terms.get(mask, Fraction(0)) + coeff
        return Multivector(self._dim, terms)

    __radd__ = __add__

    def __neg__(self) -> "Multivector":
        return Multivector(self._dim, {mask: -c for mask, c in self._terms.items()})

    def __sub__(self, other: object) -> "Multivector":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Multivector":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> "Multivector":
        if isinstance(other, (int, Fraction)):
            factor = _as_fraction(other)
            return Multivector(self._dim, {mask: c * factor for mask, c in self._terms.items()})
        if isinstance(other, Multivector):
            if other._dim != self._dim:
                raise ValueError(f"dimension mismatch: {self._dim} vs {other._dim}")
            terms: dict[int, Fraction] = {}
            for a_mask, a_coeff in self._terms.items():
                for b_mask, b_coeff in other._terms.items():
                    mask = a_mask ^ b_mask
                    value = a_coeff * b_coeff * blade_sign(a_mask, b_mask)
                    acc = terms.get(mask, Fraction(0)) + value
                    if acc:
                        terms[mask] = acc
                    else:
                        terms.pop(mask, None)
            return Multivector(self._dim, terms)
        return NotImplemented

    def __rmul__(self, other: object) -> "Multivector":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other: object) -> "Multivector":
        if isinstance(other, (int, Fraction)):
            factor = _as_fraction(other)
            if not factor:
                raise ZeroDivisionError("division of multivector by zero")
            return self * (Fraction(1) / factor)
        return NotImplemented

    # -- structure maps ----------------------------------------------------

    def grade(self, k: int) -> "Multivector":
        """Projection onto the grade-k part; zero when k is out of range."""
        return Multivector(self._dim, {m: c for m, c in self._terms.items() if _popcount(m) == k})

    def conjugate(self) -> "Multivector":
        """Clifford conjugation: e_A -> (-1)^(|A|(|A|+1)/2) e_A, an anti-automorphism."""
        terms = {}
        for mask, coeff in self._terms.items():
            g = _popcount(mask)
            if (g * (g + 1) // 2) & 1:
                terms[mask] = -coeff
            else:
                terms[mask] = coeff
        return Multivector(self._dim, terms)

    def norm_sq(self) -> Fraction:
        """Squared norm: both [a conj(a)]_0 and the sum of squared coefficients."""
        return sum((c * c for c in self._terms.values()), Fraction(0))

    # -- comparison / rendering --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(self._dim, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._dim == other._dim and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._dim, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for mask in sorted(self._terms, key=_blade_order_key):
            coeff = self._terms[mask]
            body = str(abs(coeff))
            if mask:
                body += "*" + blade_name(mask, self._dim)
            if not chunks:
                chunks.append(("-" if coeff < 0 else "") + body)
            else:
                chunks.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Multivector({self._dim}, {self._terms!r})"


def _require_pure(value: Multivector, role: str, grade: int | None = None) -> int | None:
    found = value.pure_grade()
    if value.is_zero():
        return grade
    if found is None:
        raise ValueError(f"{role} must be of pure grade, got grades {sorted(value.grades())}")
    if grade is not None and found != grade:
        raise ValueError(f"{role} must have grade {grade}, got {found}")
    return found


def vector_inner_left(x: Multivector, y: Multivector) -> Multivector:
    """Inner product x . Y_k = [x Y_k]_(k-1) for a vector x (zero when k = 0)."""
    _require_pure(x, "left factor", 1)
    k = _require_pure(y, "right factor")
    if k is None or k == 0:
        return Multivector.zero(y.dim)
    return (x * y).grade(k - 1)


def vector_outer_left(x: Multivector, y: Multivector) -> Multivector:
    """Outer product x ^ Y_k = [x Y_k]_(k+1) for a vector x."""
    _require_pure(x, "left factor", 1)
    k = _require_pure(y, "right factor")
    if k is None:
        return Multivector.zero(y.dim)
    return (x * y).grade(k + 1)


def vector_inner_right(y: Multivector, x: Multivector) -> Multivector:
    """Inner product Y_k . x = [Y_k x]_(k-1) for a vector x (zero when k = 0)."""
    _require_pure(x, "right factor", 1)
    k = _require_pure(y, "left factor")
    if k is None or k == 0:
        return Multivector.zero(y.dim)
    return (y * x).grade(k - 1)


def vector_outer_right(y: Multivector, x: Multivector) -> Multivector:
    """Outer product Y_k ^ x = [Y_k x]_(k+1) for a vector x."""
    _require_pure(x, "right factor", 1)
    k = _require_pure(y, "left factor")
    if k is None:
        return Multivector.zero(y.dim)
    return (y * x).grade(k + 1)
