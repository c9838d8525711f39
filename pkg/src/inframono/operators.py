"""Dirac-type differential operators on Clifford polynomials.

Everything here is exact: the predicates are rational zero tests with no
tolerances.  The central object is the sandwich operator

    p  ->  sum_{i,j} e_i (d_i d_j p) e_j,

the composition of the left and right Dirac actions in either order.
Polynomials annihilated by it are called inframonogenic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Multivector
from .polynomials import CliffordPolynomial, mul_by_x_left, mul_by_x_right


def dirac_left(p: CliffordPolynomial) -> CliffordPolynomial:
    """Left Dirac action: sum_j e_j (d/dx_j p)."""
    total = CliffordPolynomial.zero(p.dim)
    for j in range(1, p.dim + 1):
        total = total + p.partial(j).mul_left(Multivector.basis_vector(p.dim, j))
    return total


def dirac_right(p: CliffordPolynomial) -> CliffordPolynomial:
    """Right Dirac action: sum_j (d/dx_j p) e_j."""
    total = CliffordPolynomial.zero(p.dim)
    for j in range(1, p.dim + 1):
        total = total + p.partial(j).mul_right(Multivector.basis_vector(p.dim, j))
    return total


def sandwich(p: CliffordPolynomial) -> CliffordPolynomial:
    """Two-sided Dirac action sum_{i,j} e_i (d_i d_j p) e_j.

    Computed as right-after-left; the mixed partials commute, so applying
    the two actions in the other order gives the same polynomial.
    """
    return dirac_right(dirac_left(p))


def laplacian(p: CliffordPolynomial) -> CliffordPolynomial:
    """Laplace operator sum_j d^2/dx_j^2, equal to minus either Dirac square."""
    total = CliffordPolynomial.zero(p.dim)
    for j in range(1, p.dim + 1):
        total = total + p.partial(j).partial(j)
    return total


def conjugate_sum(p: CliffordPolynomial) -> CliffordPolynomial:
    """sum_j e_j p e_j; multiplies a pure grade-g value by (-1)^g (2g - m)."""
    total = CliffordPolynomial.zero(p.dim)
    for j in range(1, p.dim + 1):
        e_j = Multivector.basis_vector(p.dim, j)
        total = total + p.mul_left(e_j).mul_right(e_j)
    return total


# -- predicates --------------------------------------------------------------


def is_left_monogenic(p: CliffordPolynomial) -> bool:
    return dirac_left(p).is_zero()


def is_right_monogenic(p: CliffordPolynomial) -> bool:
    return dirac_right(p).is_zero()


def is_two_sided_monogenic(p: CliffordPolynomial) -> bool:
    return is_left_monogenic(p) and is_right_monogenic(p)


def is_inframonogenic(p: CliffordPolynomial) -> bool:
    return sandwich(p).is_zero()


def is_k_monogenic(p: CliffordPolynomial, k: int, side: str = "both") -> bool:
    """Annihilation by the k-th Dirac power from the given side(s)."""
    if k < 1:
        raise ValueError(f"order must be positive, got {k}")
    if side not in ("left", "right", "both"):
        raise ValueError(f"side must be 'left', 'right' or 'both', got {side!r}")
    if side in ("left", "both"):
        q = p
        for _ in range(k):
            q = dirac_left(q)
        if not q.is_zero():
            return False
    if side in ("right", "both"):
        q = p
        for _ in range(k):
            q = dirac_right(q)
        if not q.is_zero():
            return False
    return True


def is_harmonic(p: CliffordPolynomial) -> bool:
    return laplacian(p).is_zero()


def is_biharmonic(p: CliffordPolynomial) -> bool:
    return laplacian(laplacian(p)).is_zero()


ALL_PREDICATES = (
    ("left_monogenic", is_left_monogenic),
    ("right_monogenic", is_right_monogenic),
    ("two_sided_monogenic", is_two_sided_monogenic),
    ("inframonogenic", is_inframonogenic),
    ("three_monogenic_left", lambda p: is_k_monogenic(p, 3, "left")),
    ("three_monogenic_right", lambda p: is_k_monogenic(p, 3, "right")),
    ("harmonic", is_harmonic),
    ("biharmonic", is_biharmonic),
)


def predicate_report(p: CliffordPolynomial) -> dict[str, bool]:
    """All predicate verdicts in a fixed, printable order."""
    return {name: fn(p) for name, fn in ALL_PREDICATES}


# -- algebraic identities -----------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    """Exact-equality verdicts for the product and embedding identities.

    ``unit_right``: sandwich(p e_j) = -2 d_j (left-Dirac p) - sandwich(p) e_j
    ``unit_left``:  sandwich(e_j p) = -2 d_j (right-Dirac p) - e_j sandwich(p)
    ``embed_left``:  Lap(x p) = 2 (left-Dirac p) + x Lap(p)
    ``embed_right``: Lap(p x) = 2 (right-Dirac p) + Lap(p) x
    """

    unit_right: bool
    unit_left: bool
    embed_left: bool
    embed_right: bool

    @property
    def all_hold(self) -> bool:
        return self.unit_right and self.unit_left and self.embed_left and self.embed_right


def identity_report(p: CliffordPolynomial) -> IdentityReport:
    """Evaluate both sides of each identity on p; all must agree exactly."""
    m = p.dim
    sand = sandwich(p)
    dleft = dirac_left(p)
    dright = dirac_right(p)
    lap = laplacian(p)

    unit_right = True
    unit_left = True
    for j in range(1, m + 1):
        e_j = Multivector.basis_vector(m, j)
        lhs_r = sandwich(p.mul_right(e_j))
        rhs_r = dleft.partial(j) * (-2) - sand.mul_right(e_j)
        if lhs_r != rhs_r:
            unit_right = False
        lhs_l = sandwich(p.mul_left(e_j))
        rhs_l = dright.partial(j) * (-2) - sand.mul_left(e_j)
        if lhs_l != rhs_l:
            unit_left = False

    embed_left = laplacian(mul_by_x_left(p)) == dleft * 2 + mul_by_x_left(lap)
    embed_right = laplacian(mul_by_x_right(p)) == dright * 2 + mul_by_x_right(lap)
    return IdentityReport(unit_right, unit_left, embed_left, embed_right)


# -- graded system for pure k-vector fields -----------------------------------


def _inner_left(p: CliffordPolynomial, g: int) -> CliffordPolynomial:
    return dirac_left(p).grade(g - 1) if g >= 1 else CliffordPolynomial.zero(p.dim)


def _outer_left(p: CliffordPolynomial, g: int) -> CliffordPolynomial:
    return dirac_left(p).grade(g + 1)


def kvector_system_residuals(
    p: CliffordPolynomial,
) -> tuple[CliffordPolynomial, CliffordPolynomial, CliffordPolynomial]:
    """The three graded residuals whose joint vanishing is inframonogenicity.

    For a pure grade-k field the rows are, with . and ^ the graded Dirac
    actions applied from the left,

        r0 = .(.F)    r1 = ^(.F) - .(^F)    r2 = ^(^F)

    and they equal (up to sign) the grade k-2, k, k+2 parts of sandwich(F).
    """
    g = p.pure_grade()
    if g is None:
        if p.is_zero():
            z = CliffordPolynomial.zero(p.dim)
            return (z, z, z)
        raise ValueError(f"input must be of pure grade, got grades {sorted(p.grades())}")
    inner = _inner_left(p, g)
    outer = _outer_left(p, g)
    r0 = _inner_left(inner, g - 1)
    r1 = _outer_left(inner, g - 1) - _inner_left(outer, g + 1)
    r2 = _outer_left(outer, g + 1)
    return (r0, r1, r2)


# -- constant-plus-monogenic certificate ---------------------------------------


@dataclass(frozen=True)
class LinearMonogenicSplit:
    """Certificate f = constant * x + monogenic remainder.

    ``side`` records which family of unit multiples was required to be
    inframonogenic: "left" means every e_j f was (remainder then right
    monogenic), "right" means every f e_j was (remainder left monogenic).
    ``unique`` is False only in the even-dimensional corner case where a
    grade m/2 component of the constant is undetermined; the minimal-norm
    choice (zero component) is returned there.
    """

    constant: Multivector
    remainder: CliffordPolynomial
    side: str
    unique: bool


def linear_monogenic_split(p: CliffordPolynomial, side: str = "left") -> LinearMonogenicSplit:
    """Split an inframonogenic p with inframonogenic unit multiples as c x + M.

    Requires sandwich(p) = 0 and, for side="left", sandwich(e_j p) = 0 for
    every j (then M is right monogenic); for side="right", sandwich(p e_j) = 0
    for every j (then M is left monogenic).  Raises ValueError when the
    hypothesis fails; the returned split is re-verified before returning.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    m = p.dim
    if not is_inframonogenic(p):
        raise ValueError("input is not inframonogenic")
    for j in range(1, m + 1):
        e_j = Multivector.basis_vector(m, j)
        candidate = p.mul_left(e_j) if side == "left" else p.mul_right(e_j)
        if not is_inframonogenic(candidate):
            raise ValueError(f"unit multiple with e{j} on the {side} is not inframonogenic")

    unique = True
    if side == "left":
        # d_j (right-Dirac p) = 0 for all j, so right-Dirac p is a constant g,
        # and (c x) under the right Dirac is -m c.
        g = dirac_right(p)
        if not g.is_homogeneous(0):
            raise ValueError("right Dirac action did not reduce to a constant")
        c = g.coefficient((0,) * m) * Fraction(-1, m)
    else:
        # Left-Dirac p is a constant g; the left Dirac of c x is
        # sum_j e_j c e_j, which scales grade g by (-1)^g (2g - m).
        g = dirac_left(p)
        if not g.is_homogeneous(0):
            raise ValueError("left Dirac action did not reduce to a constant")
        g_const = g.coefficient((0,) * m)
        terms: dict[int, Fraction] = {}
        for mask, coeff in g_const.items():
            grade = bin(mask).count("1")
            eigen = (2 * grade - m) * (-1 if grade & 1 else 1)
            if eigen == 0:
                # Hypothesis forces this component of g to vanish; a nonzero
                # value would contradict the certificate's existence.
                raise ValueError(
                    "constant term has a grade m/2 component the split cannot produce"
                )
            terms[mask] = coeff / eigen
        if m % 2 == 0:
            # The grade m/2 part of c is annihilated either way; return the
            # minimal-norm representative and flag the non-uniqueness.
            unique = False
        c = Multivector(m, terms)

    remainder = p - _times_x(c)
    check = dirac_right(remainder) if side == "left" else dirac_left(remainder)
    if not check.is_zero():
        raise ValueError("certificate verification failed: remainder is not monogenic")
    return LinearMonogenicSplit(constant=c, remainder=remainder, side=side, unique=unique)


def _times_x(c: Multivector) -> CliffordPolynomial:
    """The degree-one polynomial c x (constant on the left of the vector)."""
    return mul_by_x_right(CliffordPolynomial.constant(c.dim, c))
