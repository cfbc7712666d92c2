import random
from unittest import mock

from django.test import SimpleTestCase

from ph_curves.exceptions import (
    DegenerateIndex, InputError, LeadingCoefficientZero,
)
from ph_curves.functions.decompose import project_on_basis
from ph_curves.functions.hodograph import field_at, hodograph_field
from ph_curves.functions.polycore import (
    ScalarPoly, Vec3Poly, certificate_residual, laurent_expand, vec,
    vec_multiple,
)
from ph_curves.functions.singleroot import (
    SingleRootSystem, basis_curve, closed_form_m0, compute_M0,
    dense_system_kernel, genericity, kernels_agree, normalized_space,
    solve_system, space_basis, space_dimension,
)
from ph_curves.tests.data import preimage_A, field_F, random_preimage

BETA = -10


class M0Test(SimpleTestCase):

    def test_m0_table_at_minus_ten(self):
        table = [compute_M0(preimage_A(), BETA, m) for m in range(-7, 4)]
        self.assertEqual(table, [-3, -2, -1, 3, 4, 5, 5, 5, 5, 6, 7])

    def test_beta_minus_ten_is_generic(self):
        self.assertTrue(genericity(field_F(), BETA))

    def test_sweep_matches_closed_form_for_random_data(self):
        rng = random.Random(2024)
        checked = 0
        while checked < 20:
            a = 1 + checked % 3
            F = hodograph_field(random_preimage(rng, a))
            beta = rng.randint(-6, 6)
            if not any(F(beta)) or not genericity(F, beta):
                continue
            checked += 1
            for m in range(-2 * a - 4, 2 * a + 1):
                self.assertEqual(compute_M0(F, beta, m),
                                 closed_form_m0(F.degree, m), (a, beta, m))

    def test_increasing_off_degenerate_indices(self):
        values = [compute_M0(field_F(), BETA, m)
                  for m in range(-8, 5) if m not in (-2, -1, 0)]
        self.assertEqual(values, sorted(set(values)))

    def test_dimension_jumps_at_M0(self):
        for m in (-7, -6, -5, -4, -3, 1, 2, 3):
            M0 = compute_M0(field_F(), BETA, m)
            self.assertEqual(space_dimension(field_F(), BETA, m, M0), 1)
            self.assertEqual(space_dimension(field_F(), BETA, m, M0 - 1), 0)

    def test_vanishing_field_rejected(self):
        F = field_F() * ScalarPoly([-BETA, 1])
        with self.assertRaises(LeadingCoefficientZero):
            compute_M0(F, BETA, -3)

    def test_degree_zero_field_is_not_generic(self):
        F = Vec3Poly.constant(vec(1, 2, 3))
        with self.assertLogs("ph_curves.functions.singleroot", "WARNING"):
            self.assertFalse(genericity(F, 0))

    def test_planar_field_is_not_generic(self):
        F = Vec3Poly.from_coefficients([vec(1, 0, 0), vec(0, 1, 0), vec(3, 5, 0)])
        self.assertFalse(genericity(F, 2))


class StructuredSystemTest(SimpleTestCase):

    def test_kernel_matches_dense_elimination(self):
        for n in (1, 2, 3):
            for N in (2, 4, 7):
                self.assertTrue(kernels_agree(field_F(), BETA, n, N), (n, N))

    def test_kernel_grid_for_random_preimages(self):
        rng = random.Random(31)
        for _ in range(5):
            F = hodograph_field(random_preimage(rng, rng.randint(1, 3)))
            beta = next(b for b in (2, -3, 5, 7) if any(F(b)))
            for n in range(1, 7):
                for N in range(13):
                    self.assertTrue(kernels_agree(F, beta, n, N), (n, N))

    def test_translations_enter_with_constant_coefficient(self):
        system = SingleRootSystem.build(field_F(), BETA, 2, 3)
        kernel = solve_system(system)
        translations = [v for v in kernel if not any(v.mu)]
        self.assertEqual(len(translations), 3)
        self.assertEqual(
            len(dense_system_kernel(field_F(), BETA, 2, 3)), len(kernel))

    def test_free_variables_of_high_order_pole(self):
        # n > 2a with N = 2a leaves the single free variable mu_{n-1}
        system = SingleRootSystem.build(field_F(), BETA, 6, 4)
        self.assertEqual(list(system.free_mu), [5])
        self.assertEqual(len(solve_system(system)), 1)


class BasisCurveTest(SimpleTestCase):

    def assertCertified(self, element):
        residual = certificate_residual(element.curve, field_F(), element.mu)
        self.assertTrue(residual.is_zero())

    def test_lowest_coefficient_is_field_value(self):
        F = field_F()
        for m in (-7, -5, -4, -3, 1, 2):
            element = basis_curve(preimage_A(), BETA, m)
            self.assertEqual(element.laurent.lo, m)
            self.assertEqual(element.laurent.lowest, F(BETA))
            self.assertCertified(element)

    def test_canonical_curves_are_certified(self):
        value = field_at(preimage_A(), BETA)
        self.assertEqual(field_F()(BETA), value)
        for m in (-6, -5, -4, -3, 1, 2, 3):
            element = basis_curve(preimage_A(), BETA, m)
            self.assertCertified(element)
            self.assertEqual(element.laurent.lowest, value)
            self.assertEqual(
                laurent_expand(element.curve, BETA, element.upper),
                element.laurent)
        support = basis_curve(preimage_A(), BETA, 2).laurent.support()
        self.assertNotIn(0, support)
        self.assertNotIn(1, support)

    def test_five_term_curve(self):
        element = basis_curve(preimage_A(), BETA, -5)
        self.assertEqual(element.laurent.support(), [-5, -4, -3, -2, -1])
        self.assertEqual(element.upper, -1)
        self.assertEqual(element.curve.denominator_degree, 5)
        self.assertEqual(
            laurent_expand(element.curve, BETA, 0), element.laurent)

    def test_constant_coefficient_absent(self):
        element = basis_curve(preimage_A(), BETA, -4)
        self.assertEqual(element.laurent.support(), [-4, -3, -2, -1, 1, 2, 3])
        self.assertEqual(element.upper, 3)

    def test_first_polynomial_curve_starts_at_root(self):
        element = basis_curve(field_F(), BETA, 1)
        self.assertEqual(element.curve(BETA), vec(0, 0, 0))
        self.assertEqual(element.curve.as_polynomial().derivative(), field_F())
        self.assertCertified(element)

    def test_degenerate_indices(self):
        for m in (-2, -1, 0):
            with self.assertRaises(DegenerateIndex):
                basis_curve(field_F(), BETA, m)


class SpaceBasisTest(SimpleTestCase):

    def labels(self, basis):
        return [e.label for e in basis.elements]

    def test_r_space_with_translations(self):
        basis = space_basis(preimage_A(), BETA, "R", -5, 5)
        self.assertEqual(basis.dimension, 7)
        self.assertEqual(self.labels(basis), [-5, -4, -3, 1, "x", "y", "z"])
        self.assertEqual(basis.elements[4].laurent.coefficient(0), vec(1, 0, 0))

    def test_r_space_of_pure_poles(self):
        basis = space_basis(preimage_A(), BETA, "R", -7, -1)
        self.assertEqual(self.labels(basis), [-7, -6, -5])

    def test_x_space_drops_polynomial_part(self):
        basis = space_basis(field_F(), BETA, "X", -5, 4)
        self.assertEqual(self.labels(basis), [-5, -4, -3])

    def test_one_sweep_per_index(self):
        with mock.patch("ph_curves.functions.singleroot.compute_M0",
                        wraps=compute_M0) as sweep:
            basis = space_basis(field_F(), BETA, "X", -5, 4)
        self.assertEqual(self.labels(basis), [-5, -4, -3])
        self.assertEqual(sweep.call_count, 3)

    def test_q_space_below_M0_is_empty(self):
        basis = space_basis(field_F(), BETA, "Q", -4, 2)
        self.assertEqual(basis.dimension, 0)

    def test_spaces_below_one_coincide_at_first_polynomial_degree(self):
        F = field_F()
        M = F.degree + 1
        first = space_basis(F, BETA, "Q", 1, M)
        self.assertEqual(self.labels(first), [1])
        for m in (-2, -1, 0, 1):
            curves = normalized_space(F, BETA, m, M)
            self.assertEqual(len(curves), 1, m)
            self.assertNotEqual(project_on_basis(curves[0], [first]), [0])
            self.assertNotEqual(project_on_basis(first.curves()[0], curves), [0])

    def test_lowest_coefficient_is_parallel_to_field_value(self):
        F = field_F()
        curves = normalized_space(F, BETA, -7, 5)
        rng = random.Random(3)
        value = F(BETA)
        for _ in range(50):
            total = curves[0].scale(0)
            for curve in curves:
                total = total + curve.scale(rng.randint(-5, 5))
            series = laurent_expand(total, BETA, 5)
            if series.is_zero():
                continue
            self.assertIsNotNone(vec_multiple(series.lowest, value))

    def test_bad_requests(self):
        with self.assertRaises(InputError):
            space_basis(field_F(), BETA, "P", -1, 2)
        with self.assertRaises(InputError):
            space_basis(field_F(), BETA, "Q", 3, 2)
