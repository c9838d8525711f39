"""Fischer pairing and the inframonogenic decomposition of polynomial spaces.

The degree-k space P(k) of multivector polynomials splits as

    P(k) = I(k)  (+)  x P(k-2) x,

where I(k) is the kernel of the sandwich operator, and the two summands
are orthogonal for the Fischer inner product.  The splitting is computed
by solving, exactly over the rationals, the square system

    (S o T) Q = S(P),      S = sandwich,  T = Q -> x Q x,

on P(k-2).  All operators here commute with the sign flips
(x_j, e_j) -> (-x_j, -e_j), so the matrix of S o T decomposes into 2^m
independent blocks, one per value of parity(monomial) xor blade-mask.
Each block has exactly as many entries as there are degree-(k-2)
monomials, which keeps exact elimination cheap even at m = 4, k = 6.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import linalg
from .algebra import Multivector, blades_in_order
from .operators import (
    dirac_left,
    dirac_right,
    is_inframonogenic,
    is_left_monogenic,
    is_right_monogenic,
    is_two_sided_monogenic,
    laplacian,
    sandwich,
)
from .polynomials import (
    CliffordPolynomial,
    Monomial,
    euler,
    monomial_basis,
    mul_by_x_left,
    mul_by_x_right,
    space_dim,
)

# -- bases and coordinates ----------------------------------------------------


@lru_cache(maxsize=None)
def poly_basis(m: int, k: int) -> tuple[tuple[Monomial, int], ...]:
    """Ordered basis of P(k): graded-lex monomials tensor (grade, mask) blades."""
    blades = blades_in_order(m)
    return tuple((mono, mask) for mono in monomial_basis(m, k) for mask in blades)


@lru_cache(maxsize=None)
def _basis_index(m: int, k: int) -> dict[tuple[Monomial, int], int]:
    return {pair: i for i, pair in enumerate(poly_basis(m, k))}


def coords(p: CliffordPolynomial, k: int) -> list[Fraction]:
    """Coordinate vector of a homogeneous degree-k polynomial (zero allowed)."""
    if not p.is_homogeneous(k):
        raise ValueError(f"polynomial is not homogeneous of degree {k}")
    index = _basis_index(p.dim, k)
    vec = [Fraction(0)] * len(index)
    for mono, coeff in p.items():
        for mask, value in coeff.items():
            vec[index[(mono, mask)]] = value
    return vec


def from_coords(m: int, k: int, vec: list[Fraction]) -> CliffordPolynomial:
    basis = poly_basis(m, k)
    if len(vec) != len(basis):
        raise ValueError(f"expected {len(basis)} coordinates, got {len(vec)}")
    terms: dict[Monomial, dict[int, Fraction]] = {}
    for value, (mono, mask) in zip(vec, basis):
        if value:
            terms.setdefault(mono, {})[mask] = value
    return CliffordPolynomial(m, {mono: Multivector(m, tm) for mono, tm in terms.items()})


def _basis_poly(m: int, mono: Monomial, mask: int) -> CliffordPolynomial:
    return CliffordPolynomial(m, {mono: Multivector(m, {mask: 1})})


# -- Fischer inner product -----------------------------------------------------


def _mono_factorial(mono: Monomial) -> int:
    out = 1
    for e in mono:
        out *= factorial(e)
    return out


def _check_pairing(p: CliffordPolynomial, q: CliffordPolynomial) -> None:
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    if not p.is_homogeneous() or not q.is_homogeneous():
        raise ValueError("Fischer pairing is defined on homogeneous polynomials")
    dp, dq = p.degree(), q.degree()
    if dp is not None and dq is not None and dp != dq:
        raise ValueError(f"degree mismatch: {dp} vs {dq}")


def fischer_inner(p: CliffordPolynomial, q: CliffordPolynomial) -> Fraction:
    """Closed-form Fischer pairing: sum over monomials of a! [conj(a) b]_0.

    For unit blades [conj(e_A) e_A]_0 = 1, so this is the a!-weighted dot
    product of coefficient vectors; positive definite by inspection.
    """
    _check_pairing(p, q)
    small, large = (p, q) if len(p.terms()) <= len(q.terms()) else (q, p)
    total = Fraction(0)
    for mono, coeff in small.items():
        other = large.coefficient(mono)
        if other.is_zero():
            continue
        dot = sum((value * other.coefficient(mask) for mask, value in coeff.items()), Fraction(0))
        if dot:
            total += _mono_factorial(mono) * dot
    return total


def fischer_inner_differential(p: CliffordPolynomial, q: CliffordPolynomial) -> Fraction:
    """Fischer pairing evaluated the long way: [conj(P(d)) Q]_0.

    Each variable of p is replaced by the matching partial derivative, the
    coefficient is conjugated and multiplied from the left, and the scalar
    part of the resulting constant is taken.  Must agree with
    `fischer_inner` on every valid input pair.
    """
    _check_pairing(p, q)
    m = p.dim
    origin = (0,) * m
    total = Fraction(0)
    for mono, coeff in p.items():
        dq = q
        for j, e in enumerate(mono, start=1):
            for _ in range(e):
                dq = dq.partial(j)
            if dq.is_zero():
                break
        if dq.is_zero():
            continue
        const = dq.coefficient(origin)
        total += (coeff.conjugate() * const).scalar_part()
    return total


@dataclass(frozen=True)
class AdjointnessReport:
    """Exact verdicts for the three pairing adjunctions.

    For deg(P) = deg(Q) - 1:  <xP, Q> = -<P, left-Dirac Q>  and
    <Px, Q> = -<P, right-Dirac Q>.  For deg(P) = deg(Q) - 2:
    <xPx, Q> = <P, sandwich Q>.  Fields are None when the degree gap
    makes a relation inapplicable.
    """

    left: bool | None
    right: bool | None
    two_sided: bool | None

    @property
    def all_hold(self) -> bool:
        return all(v is not False for v in (self.left, self.right, self.two_sided))


def adjointness_report(p: CliffordPolynomial, q: CliffordPolynomial) -> AdjointnessReport:
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    if not p.is_homogeneous() or not q.is_homogeneous():
        raise ValueError("adjointness checks need homogeneous inputs")
    dq = q.degree()
    dp = p.degree()
    if dq is None:
        raise ValueError("right-hand side must be nonzero")
    left = right = two_sided = None
    if dp is None or dp == dq - 1:
        left = fischer_inner(mul_by_x_left(p), q) == -fischer_inner(p, dirac_left(q))
        right = fischer_inner(mul_by_x_right(p), q) == -fischer_inner(p, dirac_right(q))
    if dp is None or dp == dq - 2:
        two_sided = fischer_inner(wrap_x(p, 1), q) == fischer_inner(p, sandwich(q))
    if left is None and two_sided is None:
        raise ValueError(f"degree gap must be 1 or 2, got deg {dp} against {dq}")
    return AdjointnessReport(left, right, two_sided)


# -- operator matrices ----------------------------------------------------------


def wrap_x(p: CliffordPolynomial, times: int = 1) -> CliffordPolynomial:
    """x^s p x^s: the two-sided embedding applied s times."""
    for _ in range(times):
        p = mul_by_x_left(mul_by_x_right(p))
    return p


def _operator_matrix(apply_fn, m: int, k_out: int, k_in: int) -> linalg.Matrix:
    index = _basis_index(m, k_out)
    columns = poly_basis(m, k_in)
    mat = [[Fraction(0)] * len(columns) for _ in range(len(index))]
    for col, (mono, mask) in enumerate(columns):
        image = apply_fn(_basis_poly(m, mono, mask))
        for mono2, coeff in image.items():
            for mask2, value in coeff.items():
                mat[index[(mono2, mask2)]][col] = value
    return mat


def sandwich_matrix(m: int, k: int) -> linalg.Matrix:
    """Matrix of the sandwich operator P(k) -> P(k-2) in the global basis."""
    if k < 2:
        raise ValueError(f"sandwich matrix needs degree k >= 2, got {k}")
    return _operator_matrix(sandwich, m, k - 2, k)


def embed_matrix(m: int, k: int) -> linalg.Matrix:
    """Matrix of Q -> x Q x from P(k-2) into P(k) in the global basis."""
    if k < 2:
        raise ValueError(f"embedding matrix needs degree k >= 2, got {k}")
    return _operator_matrix(wrap_x, m, k, k - 2)


# -- sector decomposition --------------------------------------------------------


def _sector_key(mono: Monomial, mask: int) -> int:
    parity = 0
    for j, e in enumerate(mono):
        if e & 1:
            parity |= 1 << j
    return parity ^ mask


@lru_cache(maxsize=None)
def _sector_positions(m: int, k: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Basis positions of P(k) grouped by sector, sectors in ascending order."""
    groups: dict[int, list[int]] = {}
    for pos, (mono, mask) in enumerate(poly_basis(m, k)):
        groups.setdefault(_sector_key(mono, mask), []).append(pos)
    return tuple((v, tuple(ps)) for v, ps in sorted(groups.items()))


def _image_coords_local(
    image: CliffordPolynomial, m: int, k_out: int, local: dict[int, int], size: int
) -> list[Fraction]:
    """Coordinates of an image restricted to one sector of P(k_out).

    A key error here would mean an operator broke the sector invariant,
    which cannot happen for the maps used in this module.
    """
    index = _basis_index(m, k_out)
    col = [Fraction(0)] * size
    for mono, coeff in image.items():
        for mask, value in coeff.items():
            col[local[index[(mono, mask)]]] = value
    return col


@lru_cache(maxsize=None)
def _composition_blocks(m: int, k: int) -> tuple[tuple[tuple[int, ...], tuple[tuple[Fraction, ...], ...]], ...]:
    """Sector blocks of Q -> sandwich(x Q x) acting on P(k-2)."""
    if k < 2:
        raise ValueError(f"composition blocks need degree k >= 2, got {k}")
    basis = poly_basis(m, k - 2)
    out = []
    for _, positions in _sector_positions(m, k - 2):
        local = {pos: i for i, pos in enumerate(positions)}
        size = len(positions)
        block = [[Fraction(0)] * size for _ in range(size)]
        for c, pos in enumerate(positions):
            mono, mask = basis[pos]
            image = sandwich(wrap_x(_basis_poly(m, mono, mask)))
            for r, value in enumerate(_image_coords_local(image, m, k - 2, local, size)):
                block[r][c] = value
        out.append((positions, tuple(tuple(row) for row in block)))
    return tuple(out)


@lru_cache(maxsize=None)
def _composition_solver(m: int, k: int) -> tuple[tuple[tuple[int, ...], linalg.Matrix], ...]:
    """Per-sector inverses of the composed map on P(k-2).

    Singularity would contradict the direct-sum theorem and is treated as
    an internal error.
    """
    out = []
    for positions, block in _composition_blocks(m, k):
        try:
            inverse = linalg.invert([list(row) for row in block])
        except linalg.SingularMatrixError as exc:
            raise RuntimeError(
                f"sandwich composition is singular on a sector of P({k - 2}) "
                f"for m={m}; this indicates an implementation bug"
            ) from exc
        out.append((positions, inverse))
    return tuple(out)


def composition_rank(m: int, k: int) -> int:
    """Rank of Q -> sandwich(x Q x) on P(k-2), by exact sector elimination."""
    return sum(linalg.rank([list(r) for r in block]) for _, block in _composition_blocks(m, k))


def sandwich_rank(m: int, k: int) -> int:
    """Rank of the sandwich operator on P(k), by exact sector elimination."""
    if k < 2:
        return 0
    basis = poly_basis(m, k)
    out_sectors = {v: positions for v, positions in _sector_positions(m, k - 2)}
    total = 0
    for v, positions in _sector_positions(m, k):
        rows = out_sectors.get(v, ())
        if not rows:
            continue
        local = {pos: i for i, pos in enumerate(rows)}
        block = []
        for pos in positions:
            mono, mask = basis[pos]
            image = sandwich(_basis_poly(m, mono, mask))
            block.append(_image_coords_local(image, m, k - 2, local, len(rows)))
        # columns were built row-wise; transpose to rows x cols
        matrix = [[block[c][r] for c in range(len(positions))] for r in range(len(rows))]
        total += linalg.rank(matrix)
    return total


def infra_space_dim(m: int, k: int) -> int:
    """Dimension of the degree-k inframonogenic subspace, via the direct sum."""
    if k < 2:
        return space_dim(m, k)
    return space_dim(m, k) - space_dim(m, k - 2)


# -- the decomposition -----------------------------------------------------------


@dataclass(frozen=True)
class DecompositionChecks:
    reconstruction: bool
    sandwich_zero: bool
    orthogonal: bool

    @property
    def all_ok(self) -> bool:
        return self.reconstruction and self.sandwich_zero and self.orthogonal

    def as_dict(self) -> dict[str, bool]:
        return {
            "reconstruction": self.reconstruction,
            "sandwich_zero": self.sandwich_zero,
            "orthogonal": self.orthogonal,
        }


@lru_cache(maxsize=None)
def _embedded_basis(m: int, k: int) -> tuple[CliffordPolynomial, ...]:
    """x b x for every basis element b of P(k-2); the orthogonality witnesses."""
    if k < 2:
        return ()
    return tuple(wrap_x(_basis_poly(m, mono, mask)) for mono, mask in poly_basis(m, k - 2))


@dataclass(frozen=True)
class DecompositionResult:
    """One splitting step P = infra_part + x quotient x on a fixed degree."""

    input: CliffordPolynomial
    infra_part: CliffordPolynomial
    quotient: CliffordPolynomial
    checks: DecompositionChecks

    @property
    def m(self) -> int:
        return self.input.dim

    @property
    def k(self) -> int:
        return self.input.degree() or 0

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "input": str(self.input),
            "infra": str(self.infra_part),
            "quotient": str(self.quotient),
            "layers": [],
            "checks": self.checks.as_dict(),
        }


def fischer_decompose(p: CliffordPolynomial) -> DecompositionResult:
    """Split a homogeneous p as infra_part + x quotient x, exactly.

    Degrees 0 and 1 are wholly inframonogenic and return a zero quotient.
    The result carries exact verification flags: reconstruction,
    sandwich(infra_part) = 0, and orthogonality of infra_part against
    every embedded basis element of the quotient space.
    """
    if not p.is_homogeneous():
        raise ValueError("decomposition requires a homogeneous polynomial")
    m = p.dim
    k = p.degree()
    if k is None or k < 2:
        zero = CliffordPolynomial.zero(m)
        return DecompositionResult(p, p, zero, DecompositionChecks(True, True, True))
    rhs = coords(sandwich(p), k - 2)
    solution = [Fraction(0)] * len(rhs)
    for positions, inverse in _composition_solver(m, k):
        sub = [rhs[pos] for pos in positions]
        if any(sub):
            for pos, value in zip(positions, linalg.mat_vec(inverse, sub)):
                solution[pos] = value
    quotient = from_coords(m, k - 2, solution)
    embedded = wrap_x(quotient)
    infra = p - embedded
    checks = DecompositionChecks(
        reconstruction=(infra + embedded == p),
        sandwich_zero=sandwich(infra).is_zero(),
        orthogonal=all(fischer_inner(infra, w) == 0 for w in _embedded_basis(m, k)),
    )
    return DecompositionResult(p, infra, quotient, checks)


@dataclass(frozen=True)
class TowerLayer:
    s: int
    component: CliffordPolynomial


@dataclass(frozen=True)
class FischerTower:
    """Complete splitting P = sum_s x^s L_s x^s with every L_s inframonogenic."""

    input: CliffordPolynomial
    layers: tuple[TowerLayer, ...]
    first_quotient: CliffordPolynomial
    checks: DecompositionChecks

    @property
    def m(self) -> int:
        return self.input.dim

    @property
    def k(self) -> int:
        return self.input.degree() or 0

    def reconstruct(self) -> CliffordPolynomial:
        total = CliffordPolynomial.zero(self.input.dim)
        for layer in self.layers:
            total = total + wrap_x(layer.component, layer.s)
        return total

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "input": str(self.input),
            "infra": str(self.layers[0].component),
            "quotient": str(self.first_quotient),
            "layers": [{"s": layer.s, "component": str(layer.component)} for layer in self.layers],
            "checks": self.checks.as_dict(),
        }


def fischer_tower(p: CliffordPolynomial) -> FischerTower:
    """Iterate the splitting down to degree < 2; always floor(k/2)+1 layers."""
    if not p.is_homogeneous():
        raise ValueError("tower decomposition requires a homogeneous polynomial")
    k = p.degree() or 0
    layers: list[TowerLayer] = []
    first: DecompositionResult | None = None
    current = p
    for s in range(k // 2 + 1):
        step = fischer_decompose(current)
        if first is None:
            first = step
        layers.append(TowerLayer(s, step.infra_part))
        current = step.quotient
    assert first is not None
    tower = tuple(layers)
    reconstruction = sum(
        (wrap_x(layer.component, layer.s) for layer in tower), CliffordPolynomial.zero(p.dim)
    ) == p
    all_infra = all(sandwich(layer.component).is_zero() for layer in tower)
    checks = DecompositionChecks(reconstruction, all_infra, first.checks.orthogonal)
    return FischerTower(p, tower, first.quotient, checks)


# -- Almansi splitting ------------------------------------------------------------


@dataclass(frozen=True)
class AlmansiSplit:
    """h = plain_part + x * x_part with both parts left monogenic."""

    plain_part: CliffordPolynomial
    x_part: CliffordPolynomial

    def reconstruct(self) -> CliffordPolynomial:
        return self.plain_part + mul_by_x_left(self.x_part)


def almansi_split(h: CliffordPolynomial) -> AlmansiSplit:
    """Split a harmonic homogeneous h into left monogenic pieces.

    The degree-(k-1) factor is recovered from the left Dirac action, on
    which m + 2E acts as the scalar m + 2k - 2 (never zero for k >= 1).
    """
    if not h.is_homogeneous():
        raise ValueError("Almansi splitting requires a homogeneous polynomial")
    if not laplacian(h).is_zero():
        raise ValueError("input is not harmonic")
    m = h.dim
    k = h.degree()
    if k is None or k == 0:
        return AlmansiSplit(h, CliffordPolynomial.zero(m))
    x_part = dirac_left(h) * Fraction(-1, m + 2 * k - 2)
    plain = h - mul_by_x_left(x_part)
    return AlmansiSplit(plain, x_part)


@dataclass(frozen=True)
class HarmonicInframonogenicReport:
    """Equivalence between inframonogenicity of a harmonic h and right
    monogenicity of (m + 2E) applied to its Almansi x_part.

    The two verdicts must always coincide; when h is inframonogenic the
    parts are additionally graded: x_part two-sided monogenic, plain_part
    left monogenic.
    """

    split: AlmansiSplit
    inframonogenic: bool
    shifted_right_monogenic: bool
    x_part_two_sided: bool | None
    plain_part_left_monogenic: bool | None

    @property
    def verdicts_agree(self) -> bool:
        return self.inframonogenic == self.shifted_right_monogenic


def harmonic_inframonogenic_report(h: CliffordPolynomial) -> HarmonicInframonogenicReport:
    split = almansi_split(h)
    shifted = split.x_part * h.dim + euler(split.x_part) * 2
    right_ok = is_right_monogenic(shifted)
    infra = is_inframonogenic(h)
    if infra:
        two_sided = is_two_sided_monogenic(split.x_part)
        plain_left = is_left_monogenic(split.plain_part)
    else:
        two_sided = None
        plain_left = None
    return HarmonicInframonogenicReport(split, infra, right_ok, two_sided, plain_left)


# -- exact kernel sampling ----------------------------------------------------------

_KERNEL_OPERATORS = {
    "inframonogenic": ((sandwich, 2),),
    "left_monogenic": ((dirac_left, 1),),
    "right_monogenic": ((dirac_right, 1),),
    "two_sided_monogenic": ((dirac_left, 1), (dirac_right, 1)),
    "harmonic": ((laplacian, 2),),
}


@lru_cache(maxsize=None)
def kernel_basis(
    m: int, k: int, kind: str, grade: int | None = None
) -> tuple[CliffordPolynomial, ...]:
    """Exact rational basis of an operator kernel inside P(k).

    ``kind`` is one of inframonogenic / left_monogenic / right_monogenic /
    two_sided_monogenic / harmonic; ``grade`` optionally restricts the
    coefficients to a single blade grade.  Deterministic output order.
    """
    if kind not in _KERNEL_OPERATORS:
        raise ValueError(f"unknown kernel kind {kind!r}")
    if k < 0:
        raise ValueError(f"degree must be non-negative, got {k}")
    operators = [(fn, k - drop) for fn, drop in _KERNEL_OPERATORS[kind]]
    basis = poly_basis(m, k)
    selected: dict[int, list[int]] = {}
    for pos, (mono, mask) in enumerate(basis):
        if grade is not None and bin(mask).count("1") != grade:
            continue
        selected.setdefault(_sector_key(mono, mask), []).append(pos)

    out: list[CliffordPolynomial] = []
    out_sectors = {
        k_out: dict(_sector_positions(m, k_out)) for _, k_out in operators if k_out >= 0
    }
    for v in sorted(selected):
        positions = selected[v]
        columns: list[list[Fraction]] = []
        n_rows = 0
        row_plans = []
        for fn, k_out in operators:
            if k_out < 0:
                continue
            rows = out_sectors[k_out].get(v, ())
            row_plans.append((fn, k_out, {pos: i for i, pos in enumerate(rows)}, len(rows)))
            n_rows += len(rows)
        for pos in positions:
            mono, mask = basis[pos]
            b = _basis_poly(m, mono, mask)
            col: list[Fraction] = []
            for fn, k_out, local, size in row_plans:
                col.extend(_image_coords_local(fn(b), m, k_out, local, size))
            columns.append(col)
        if n_rows == 0:
            vectors = [
                [Fraction(int(i == j)) for j in range(len(positions))]
                for i in range(len(positions))
            ]
        else:
            matrix = [[columns[c][r] for c in range(len(positions))] for r in range(n_rows)]
            vectors = linalg.nullspace(matrix)
        for vec in vectors:
            terms: dict[Monomial, dict[int, Fraction]] = {}
            for value, pos in zip(vec, positions):
                if value:
                    mono, mask = basis[pos]
                    terms.setdefault(mono, {})[mask] = value
            out.append(
                CliffordPolynomial(m, {mono: Multivector(m, tm) for mono, tm in terms.items()})
            )
    return tuple(out)


class KernelSampler:
    """Deterministic pseudo-random elements of the exact operator kernels.

    Same seed, same sequence of samples.  Every sample is a nonzero
    rational combination of an exact kernel basis, so it satisfies the
    matching predicate by construction.
    """

    def __init__(self, m: int, k: int, seed: int = 0):
        self._m = m
        self._k = k
        self._rng = random.Random(seed)

    def _draw(self, kind: str, grade: int | None) -> CliffordPolynomial:
        basis = kernel_basis(self._m, self._k, kind, grade)
        if not basis:
            raise ValueError(
                f"the {kind} kernel of degree {self._k} in dimension {self._m}"
                + (f" at grade {grade}" if grade is not None else "")
                + " is trivial"
            )
        while True:
            weights = [
                Fraction(self._rng.randint(-9, 9), self._rng.randint(1, 4)) for _ in basis
            ]
            if any(weights):
                break
        total = CliffordPolynomial.zero(self._m)
        for weight, b in zip(weights, basis):
            if weight:
                total = total + b * weight
        return total

    def inframonogenic(self, grade: int | None = None) -> CliffordPolynomial:
        return self._draw("inframonogenic", grade)

    def left_monogenic(self, grade: int | None = None) -> CliffordPolynomial:
        return self._draw("left_monogenic", grade)

    def right_monogenic(self, grade: int | None = None) -> CliffordPolynomial:
        return self._draw("right_monogenic", grade)

    def two_sided_monogenic(self, grade: int | None = None) -> CliffordPolynomial:
        return self._draw("two_sided_monogenic", grade)

    def harmonic(self, grade: int | None = None) -> CliffordPolynomial:
        return self._draw("harmonic", grade)
