"""Floating-point evaluation and finite-difference verification.

Exactness lives elsewhere; this module exists to check the one
non-polynomial closed-form family of plane fields numerically.  Blade
products reuse the exact sign function from `algebra`, so the numeric
side cannot disagree with the exact side about orientation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .algebra import Multivector, blade_sign, _check_dim
from .polynomials import CliffordPolynomial

Point = Sequence[float]
Field = Callable[[Point], "NumericMultivector"]


class NumericMultivector:
    """Dense float64 element of Cl(0, m), blade-indexed by mask."""

    __slots__ = ("dim", "values")

    def __init__(self, dim: int, values: np.ndarray | None = None):
        _check_dim(dim)
        self.dim = dim
        if values is None:
            self.values = np.zeros(1 << dim)
        else:
            values = np.asarray(values, dtype=float)
            if values.shape != (1 << dim,):
                raise ValueError(f"expected {1 << dim} blade slots, got shape {values.shape}")
            self.values = values

    @classmethod
    def from_exact(cls, a: Multivector) -> "NumericMultivector":
        out = np.zeros(1 << a.dim)
        for mask, coeff in a.items():
            out[mask] = float(coeff)
        return cls(a.dim, out)

    def coefficient(self, mask: int) -> float:
        return float(self.values[mask])

    def __add__(self, other: "NumericMultivector") -> "NumericMultivector":
        return NumericMultivector(self.dim, self.values + other.values)

    def __sub__(self, other: "NumericMultivector") -> "NumericMultivector":
        return NumericMultivector(self.dim, self.values - other.values)

    def __mul__(self, factor: float) -> "NumericMultivector":
        return NumericMultivector(self.dim, self.values * factor)

    __rmul__ = __mul__

    def __truediv__(self, factor: float) -> "NumericMultivector":
        return NumericMultivector(self.dim, self.values / factor)

    def mul_blade_left(self, mask: int) -> "NumericMultivector":
        """e_mask * self, with signs from the exact blade tables."""
        out = np.zeros_like(self.values)
        for b, v in enumerate(self.values):
            if v:
                out[mask ^ b] += blade_sign(mask, b) * v
        return NumericMultivector(self.dim, out)

    def mul_blade_right(self, mask: int) -> "NumericMultivector":
        """self * e_mask, with signs from the exact blade tables."""
        out = np.zeros_like(self.values)
        for b, v in enumerate(self.values):
            if v:
                out[b ^ mask] += blade_sign(b, mask) * v
        return NumericMultivector(self.dim, out)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.values)))

    def __repr__(self) -> str:
        nz = {mask: float(v) for mask, v in enumerate(self.values) if v}
        return f"NumericMultivector({self.dim}, {nz})"


def polynomial_function(p: CliffordPolynomial) -> Field:
    """Float-evaluating closure for an exact polynomial."""
    spec = [
        (mono, [(mask, float(value)) for mask, value in coeff.items()])
        for mono, coeff in p.items()
    ]
    dim = p.dim

    def evaluate(point: Point) -> NumericMultivector:
        if len(point) != dim:
            raise ValueError(f"point length {len(point)} != dimension {dim}")
        out = np.zeros(1 << dim)
        for mono, blades in spec:
            factor = 1.0
            for c, e in zip(point, mono):
                if e:
                    factor *= c ** e
            for mask, value in blades:
                out[mask] += value * factor
        return NumericMultivector(dim, out)

    return evaluate


# -- finite-difference stencils -------------------------------------------------


def _shifted(point: Point, moves: dict[int, float]) -> list[float]:
    out = list(map(float, point))
    for axis, delta in moves.items():
        out[axis] += delta
    return out


def fd_hessian(f: Field, point: Point, h: float) -> list[list[NumericMultivector]]:
    """Central-difference Hessian: 3-point pure and 4-point mixed stencils."""
    if h <= 0:
        raise ValueError("step must be positive")
    center = f(list(map(float, point)))
    m = center.dim
    hess: list[list[NumericMultivector | None]] = [[None] * m for _ in range(m)]
    for i in range(m):
        plus = f(_shifted(point, {i: h}))
        minus = f(_shifted(point, {i: -h}))
        hess[i][i] = (plus - center * 2.0 + minus) / (h * h)
    for i in range(m):
        for j in range(i + 1, m):
            pp = f(_shifted(point, {i: h, j: h}))
            pm = f(_shifted(point, {i: h, j: -h}))
            mp = f(_shifted(point, {i: -h, j: h}))
            mm = f(_shifted(point, {i: -h, j: -h}))
            mixed = (pp - pm - mp + mm) / (4.0 * h * h)
            hess[i][j] = mixed
            hess[j][i] = mixed
    return hess  # type: ignore[return-value]


def fd_sandwich(f: Field, point: Point, h: float) -> NumericMultivector:
    """Finite-difference sandwich: sum_{i,j} e_i H_ij e_j; O(h^2) consistent."""
    hess = fd_hessian(f, point, h)
    m = len(hess)
    total = NumericMultivector(m)
    for i in range(m):
        for j in range(m):
            total = total + hess[i][j].mul_blade_left(1 << i).mul_blade_right(1 << j)
    return total


def fd_laplacian(f: Field, point: Point, h: float) -> NumericMultivector:
    """Finite-difference Laplacian: sum of the pure second differences."""
    if h <= 0:
        raise ValueError("step must be positive")
    center = f(list(map(float, point)))
    m = center.dim
    total = NumericMultivector(m)
    for i in range(m):
        plus = f(_shifted(point, {i: h}))
        minus = f(_shifted(point, {i: -h}))
        total = total + (plus - center * 2.0 + minus) / (h * h)
    return total


# -- the closed-form plane field --------------------------------------------------


@dataclass(frozen=True)
class TrigExpFamily:
    """Plane vector field f1 e1 + f2 e2 built from one frequency n:

        f1 = [(c1 + c2 x1) exp(n x1) + (c3 + c4 x1) exp(-n x1)] cos(n x2)
        f2 = [(c3 + c4 x1) exp(-n x1) - (c1 + c2 x1) exp(n x1)] sin(n x2)

    Every parameter choice satisfies the sandwich equation on the whole
    plane; the field is harmonic exactly when c2 = c4 = 0 (for n != 0).
    """

    c1: float
    c2: float
    c3: float
    c4: float
    n: float

    # x1-profiles and their closed-form derivatives
    def alpha(self, x1: float) -> float:
        return (self.c1 + self.c2 * x1) * math.exp(self.n * x1) + (
            self.c3 + self.c4 * x1
        ) * math.exp(-self.n * x1)

    def alpha_d1(self, x1: float) -> float:
        ep, em = math.exp(self.n * x1), math.exp(-self.n * x1)
        return (self.c2 + self.n * (self.c1 + self.c2 * x1)) * ep + (
            self.c4 - self.n * (self.c3 + self.c4 * x1)
        ) * em

    def alpha_d2(self, x1: float) -> float:
        ep, em = math.exp(self.n * x1), math.exp(-self.n * x1)
        return (2 * self.n * self.c2 + self.n**2 * (self.c1 + self.c2 * x1)) * ep + (
            -2 * self.n * self.c4 + self.n**2 * (self.c3 + self.c4 * x1)
        ) * em

    def beta(self, x1: float) -> float:
        return (self.c3 + self.c4 * x1) * math.exp(-self.n * x1) - (
            self.c1 + self.c2 * x1
        ) * math.exp(self.n * x1)

    def beta_d1(self, x1: float) -> float:
        ep, em = math.exp(self.n * x1), math.exp(-self.n * x1)
        return (self.c4 - self.n * (self.c3 + self.c4 * x1)) * em - (
            self.c2 + self.n * (self.c1 + self.c2 * x1)
        ) * ep

    def beta_d2(self, x1: float) -> float:
        ep, em = math.exp(self.n * x1), math.exp(-self.n * x1)
        return (-2 * self.n * self.c4 + self.n**2 * (self.c3 + self.c4 * x1)) * em - (
            2 * self.n * self.c2 + self.n**2 * (self.c1 + self.c2 * x1)
        ) * ep

    def f1(self, x1: float, x2: float) -> float:
        return self.alpha(x1) * math.cos(self.n * x2)

    def f2(self, x1: float, x2: float) -> float:
        return self.beta(x1) * math.sin(self.n * x2)

    def __call__(self, point: Point) -> NumericMultivector:
        x1, x2 = point
        out = np.zeros(4)
        out[0b01] = self.f1(x1, x2)
        out[0b10] = self.f2(x1, x2)
        return NumericMultivector(2, out)


def family_eval(family: TrigExpFamily, x1: float, x2: float) -> NumericMultivector:
    """The field value f1 e1 + f2 e2 at one point."""
    return family((x1, x2))


def ode_system_residual(family: TrigExpFamily, x1: float) -> tuple[float, float]:
    """Residuals of the coupled profile equations at one x1.

    The separated ansatz reduces the sandwich equation to
    a'' + n^2 a + 2n b' = 0 and b'' + n^2 b + 2n a' = 0; the closed-form
    profiles solve both, so the residuals vanish to rounding error.
    """
    n = family.n
    r_alpha = family.alpha_d2(x1) + n * n * family.alpha(x1) + 2 * n * family.beta_d1(x1)
    r_beta = family.beta_d2(x1) + n * n * family.beta(x1) + 2 * n * family.alpha_d1(x1)
    return (r_alpha, r_beta)


# -- grid scans ---------------------------------------------------------------------


def grid_points(side: int = 5, lo: float = -1.0, hi: float = 1.0) -> list[tuple[float, float]]:
    """side x side lattice covering [lo, hi]^2, corners included."""
    axis = np.linspace(lo, hi, side)
    return [(float(a), float(b)) for a in axis for b in axis]


@dataclass(frozen=True)
class GridScan:
    """Maximum residual of an operator over a grid, with the field scale."""

    max_residual: float
    max_field: float

    @property
    def max_relative(self) -> float:
        return self.max_residual / self.max_field if self.max_field else self.max_residual


def sandwich_scan(f: Field, grid: Sequence[Point], h: float = 1e-4) -> GridScan:
    worst = 0.0
    scale = 0.0
    for point in grid:
        worst = max(worst, fd_sandwich(f, point, h).max_abs())
        scale = max(scale, f(list(map(float, point))).max_abs())
    return GridScan(worst, scale)


def laplacian_scan(f: Field, grid: Sequence[Point], h: float = 1e-4) -> GridScan:
    worst = 0.0
    scale = 0.0
    for point in grid:
        worst = max(worst, fd_laplacian(f, point, h).max_abs())
        scale = max(scale, f(list(map(float, point))).max_abs())
    return GridScan(worst, scale)


def family_harmonicity_scan(
    family: TrigExpFamily,
    grid: Sequence[Point] | None = None,
    h: float = 1e-4,
    tol: float = 1e-6,
) -> tuple[bool, GridScan]:
    """Harmonic verdict: grid maximum of the numeric Laplacian within tol."""
    scan = laplacian_scan(family, grid if grid is not None else grid_points(), h)
    return (scan.max_residual <= tol, scan)
