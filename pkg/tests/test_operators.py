import random

import pytest

from inframono import (
    CliffordPolynomial,
    KernelSampler,
    Multivector,
    conjugate_sum,
    dirac_left,
    dirac_right,
    identity_report,
    is_biharmonic,
    is_harmonic,
    is_inframonogenic,
    is_k_monogenic,
    is_left_monogenic,
    is_right_monogenic,
    kvector_system_residuals,
    laplacian,
    linear_monogenic_split,
    mul_by_x_left,
    mul_by_x_right,
    sandwich,
    x_vector,
)
from helpers import random_polynomial, random_scalar_polynomial


def poly(m, terms):
    return CliffordPolynomial(m, terms)


def sandwich_by_double_sum(p):
    """Independent oracle: literal sum_{i,j} e_i (d_i d_j p) e_j."""
    m = p.dim
    total = CliffordPolynomial.zero(m)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            term = p.partial(i).partial(j)
            total = total + term.mul_left(Multivector.basis_vector(m, i)).mul_right(
                Multivector.basis_vector(m, j)
            )
    return total


class TestDirac:
    def test_left_single_term(self):
        p = poly(2, {(1, 0): Multivector.basis_vector(2, 1)})  # x1 e1
        assert dirac_left(p) == CliffordPolynomial.constant(2, -1)

    def test_left_monogenic_example(self):
        p = poly(2, {(1, 0): Multivector.basis_vector(2, 1)}) - poly(
            2, {(0, 1): Multivector.basis_vector(2, 2)}
        )
        assert dirac_left(p).is_zero()
        assert dirac_right(p).is_zero()

    def test_constant_killed(self):
        assert dirac_left(CliffordPolynomial.constant(3, Multivector.blade(3, [1, 2]))).is_zero()

    def test_right_of_vector_variable(self):
        for m in (2, 3, 4):
            assert dirac_right(x_vector(m)) == CliffordPolynomial.constant(m, -m)

    def test_right_single_term(self):
        p = poly(2, {(1, 0): Multivector.basis_vector(2, 2)})  # x1 e2
        assert dirac_right(p) == CliffordPolynomial.constant(2, Multivector.blade(2, [1, 2]) * -1)


class TestSandwich:
    def test_x1_squared(self):
        assert sandwich(poly(2, {(2, 0): 1})) == CliffordPolynomial.constant(2, -2)

    def test_x1x2_vanishes(self):
        assert sandwich(poly(2, {(1, 1): 1})).is_zero()

    def test_low_degree_killed(self):
        rng = random.Random(1)
        for _ in range(10):
            p = random_polynomial(rng, 3, 1, homogeneous=False)
            assert sandwich(p).is_zero()

    def test_order_independence(self):
        rng = random.Random(2)
        for _ in range(300):
            m = rng.randint(2, 4)
            p = random_polynomial(rng, m, rng.randint(0, 6), homogeneous=False, max_terms=4)
            assert dirac_right(dirac_left(p)) == dirac_left(dirac_right(p))

    def test_double_sum_oracle(self):
        rng = random.Random(3)
        for _ in range(60):
            m = rng.randint(2, 4)
            p = random_polynomial(rng, m, rng.randint(0, 5), homogeneous=False)
            assert sandwich(p) == sandwich_by_double_sum(p)


class TestLaplacian:
    def test_harmonic_example(self):
        p = poly(2, {(2, 0): 1, (0, 2): -1})
        assert laplacian(p).is_zero()

    def test_x1_squared(self):
        assert laplacian(poly(2, {(2, 0): 1})) == CliffordPolynomial.constant(2, 2)

    def test_factorization(self):
        rng = random.Random(4)
        for _ in range(100):
            m = rng.randint(2, 4)
            p = random_polynomial(rng, m, rng.randint(0, 6), homogeneous=False, max_terms=4)
            lap = laplacian(p)
            assert lap == -dirac_left(dirac_left(p))
            assert lap == -dirac_right(dirac_right(p))


class TestPredicates:
    def test_scalar_product_of_variables_is_inframonogenic(self):
        assert is_inframonogenic(poly(2, {(1, 1): 1}))

    def test_harmonic_but_not_inframonogenic(self):
        p = poly(2, {(1, 1): Multivector.basis_vector(2, 1)})  # x1 x2 e1
        assert is_harmonic(p)
        assert not is_inframonogenic(p)
        assert sandwich(p) == CliffordPolynomial.constant(2, Multivector.basis_vector(2, 2) * -2)

    def test_inframonogenic_implies_three_monogenic(self):
        sampler = KernelSampler(3, 4, seed=11)
        for _ in range(10):
            p = sampler.inframonogenic()
            assert is_k_monogenic(p, 3, "both")

    def test_k_monogenic_argument_validation(self):
        p = poly(2, {(1, 1): 1})
        with pytest.raises(ValueError):
            is_k_monogenic(p, 0)
        with pytest.raises(ValueError):
            is_k_monogenic(p, 2, "sideways")

    def test_monogenic_implies_inframonogenic(self):
        sampler = KernelSampler(3, 3, seed=12)
        for _ in range(10):
            assert is_inframonogenic(sampler.left_monogenic())
            assert is_inframonogenic(sampler.right_monogenic())

    def test_scalar_inframonogenic_is_harmonic(self):
        rng = random.Random(5)
        for _ in range(20):
            p = random_scalar_polynomial(rng, 3, rng.randint(2, 4), homogeneous=False)
            assert is_inframonogenic(p) == is_harmonic(p)

    def test_biharmonic(self):
        # |x|^2 is biharmonic but not harmonic
        sq = mul_by_x_left(mul_by_x_right(CliffordPolynomial.constant(2, 1)))
        assert not is_harmonic(sq)
        assert is_biharmonic(sq)


class TestConjugateSum:
    def test_examples(self):
        e1 = CliffordPolynomial.constant(3, Multivector.basis_vector(3, 1))
        assert conjugate_sum(e1) == e1
        one3 = CliffordPolynomial.constant(3, 1)
        assert conjugate_sum(one3) == one3 * -3
        e12 = CliffordPolynomial.constant(2, Multivector.blade(2, [1, 2]))
        assert conjugate_sum(e12) == e12 * 2

    def test_eigen_identity_random_pure_grade(self):
        rng = random.Random(6)
        for _ in range(100):
            m = rng.randint(2, 5)
            grade = rng.randint(0, m)
            p = random_polynomial(rng, m, rng.randint(0, 3), homogeneous=False, grade=grade)
            eigen = (2 * grade - m) * ((-1) ** grade)
            assert conjugate_sum(p) == p * eigen


class TestIdentities:
    def test_specific_inputs(self):
        cases = [
            poly(2, {(2, 0): Multivector.basis_vector(2, 2)}),  # x1^2 e2
            CliffordPolynomial.constant(2, Multivector.blade(2, [1, 2])),
            poly(3, {(1, 1, 1): Multivector.blade(3, [1, 3])}),
        ]
        for p in cases:
            assert identity_report(p).all_hold

    def test_random_inputs(self):
        rng = random.Random(7)
        for _ in range(60):
            m = rng.randint(2, 4)
            p = random_polynomial(rng, m, rng.randint(0, 4), homogeneous=False)
            report = identity_report(p)
            assert report.unit_right and report.unit_left
            assert report.embed_left and report.embed_right


class TestKVectorSystem:
    def test_scalar_field(self):
        r0, r1, r2 = kvector_system_residuals(poly(2, {(1, 1): 1}))
        assert r0.is_zero() and r1.is_zero() and r2.is_zero()

    def test_vector_field_example(self):
        p = poly(2, {(2, 0): Multivector.basis_vector(2, 1)})  # x1^2 e1
        r0, r1, r2 = kvector_system_residuals(p)
        sand = sandwich(p)
        assert r1 == sand.grade(1)  # grade part is -2 e1 here; sign (-1)^(k-1) = +1
        assert sand.grade(1) == CliffordPolynomial.constant(2, Multivector.basis_vector(2, 1) * -2)

    def test_rows_match_graded_sandwich(self):
        rng = random.Random(8)
        for _ in range(60):
            m = rng.randint(2, 4)
            grade = rng.randint(0, m)
            p = random_polynomial(rng, m, rng.randint(2, 4), grade=grade)
            r0, r1, r2 = kvector_system_residuals(p)
            sand = sandwich(p)
            sign = 1 if grade % 2 == 0 else -1
            assert r0 == sand.grade(grade - 2) * sign
            assert r1 == sand.grade(grade) * -sign
            assert r2 == sand.grade(grade + 2) * -sign

    def test_vanishing_iff_inframonogenic(self):
        sampler = KernelSampler(3, 3, seed=13)
        for _ in range(10):
            p = sampler.inframonogenic(grade=1)
            r0, r1, r2 = kvector_system_residuals(p)
            assert r0.is_zero() and r1.is_zero() and r2.is_zero()

    def test_mixed_grade_rejected(self):
        p = poly(2, {(1, 1): Multivector(2, {0: 1, 1: 1})})
        with pytest.raises(ValueError):
            kvector_system_residuals(p)


class TestPlaneVectorFieldSystem:
    @staticmethod
    def residuals(f1, f2):
        r1 = f1.partial(1).partial(1) - f1.partial(2).partial(2) + f2.partial(1).partial(2) * 2
        r2 = f2.partial(1).partial(1) - f2.partial(2).partial(2) - f1.partial(1).partial(2) * 2
        return r1, r2

    def test_system_equivalent_to_sandwich(self):
        rng = random.Random(9)
        for _ in range(60):
            f1 = random_scalar_polynomial(rng, 2, rng.randint(2, 4), homogeneous=False)
            f2 = random_scalar_polynomial(rng, 2, rng.randint(2, 4), homogeneous=False)
            field = f1.mul_right(Multivector.basis_vector(2, 1)) + f2.mul_right(
                Multivector.basis_vector(2, 2)
            )
            r1, r2 = self.residuals(f1, f2)
            assert is_inframonogenic(field) == (r1.is_zero() and r2.is_zero())

    def test_kernel_samples_satisfy_the_system(self):
        sampler = KernelSampler(2, 4, seed=14)
        for _ in range(10):
            field = sampler.inframonogenic(grade=1)
            f1 = CliffordPolynomial(2, {mono: c.coefficient(0b01) for mono, c in field.items()})
            f2 = CliffordPolynomial(2, {mono: c.coefficient(0b10) for mono, c in field.items()})
            r1, r2 = self.residuals(f1, f2)
            assert r1.is_zero() and r2.is_zero()


class TestLinearMonogenicSplit:
    def test_vector_variable(self):
        split = linear_monogenic_split(x_vector(2), side="left")
        assert split.constant == Multivector.scalar(2, 1)
        assert split.remainder.is_zero()
        assert split.unique

    def test_pure_monogenic_input(self):
        sampler = KernelSampler(3, 3, seed=15)
        p = sampler.two_sided_monogenic()
        split = linear_monogenic_split(p, side="left")
        assert split.constant == Multivector.zero(3)
        assert split.remainder == p

    def test_shifted_example(self):
        m = 2
        monogenic = poly(2, {(1, 0): Multivector.basis_vector(2, 1)}) - poly(
            2, {(0, 1): Multivector.basis_vector(2, 2)}
        )
        p = x_vector(m) * 2 + monogenic
        for side in ("left", "right"):
            split = linear_monogenic_split(p, side=side)
            assert split.constant == Multivector.scalar(2, 2)
            assert split.remainder == monogenic

    def test_reconstruction_and_sidedness(self):
        sampler = KernelSampler(3, 2, seed=16)
        base = sampler.two_sided_monogenic()
        p = x_vector(3).mul_right(Multivector.scalar(3, 3)) + base
        left_split = linear_monogenic_split(p, side="left")
        assert is_right_monogenic(left_split.remainder)
        right_split = linear_monogenic_split(p, side="right")
        assert is_left_monogenic(right_split.remainder)
        recon = mul_by_x_right(
            CliffordPolynomial.constant(3, left_split.constant)
        ) + left_split.remainder
        assert recon == p

    def test_even_dimension_flags_non_uniqueness(self):
        split = linear_monogenic_split(x_vector(2), side="right")
        assert not split.unique
        assert split.constant == Multivector.scalar(2, 1)

    def test_hypothesis_failure_raises(self):
        # x1^2 is not inframonogenic
        with pytest.raises(ValueError):
            linear_monogenic_split(poly(2, {(2, 0): 1}), side="left")
        # x1 x2 is inframonogenic but e_j multiples are not
        with pytest.raises(ValueError):
            linear_monogenic_split(poly(2, {(1, 1): 1}), side="left")


class TestInclusionChain:
    def test_small_scale(self):
        for m, k in ((2, 3), (3, 2), (3, 4)):
            sampler = KernelSampler(m, k, seed=17)
            for _ in range(5):
                p = sampler.inframonogenic()
                assert is_k_monogenic(p, 3, "both")
                assert is_biharmonic(p)

    def test_products_with_x_of_two_sided_monogenic(self):
        for m, k in ((2, 2), (3, 2), (4, 1)):
            sampler = KernelSampler(m, k, seed=18)
            for _ in range(5):
                f = sampler.two_sided_monogenic()
                assert not f.is_zero()
                for q in (mul_by_x_left(f), mul_by_x_right(f)):
                    assert is_inframonogenic(q)
                    assert is_harmonic(q)
