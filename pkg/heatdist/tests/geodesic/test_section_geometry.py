# -*- coding: utf-8 -*-
""" Heatdist

 Copyright 2017-2019 Slash Gordon

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
"""
import unittest

import numpy as np
import numpy.testing as npt

from heatdist.basis.basis_spec import make_basis
from heatdist.basis.coefficients import CoeffVector
from heatdist.basis.domain import DomainId
from heatdist.geodesic.path_straightening import Direction, GeodesicPath, covariant_derivative, \
    covariant_integral, parallel_translate
from heatdist.geodesic.section_geometry import EllipsoidSection, path_energy
from heatdist.geodesic.section_point import SectionPoint, TangentVector, project_tangent, project_to_section

CIRCLE_EIGENVALUES = np.array([1.0, 1.0, 4.0, 4.0, 9.0, 9.0, 16.0, 16.0])


def great_circle(radius, arc, segments, first=np.array([1.0, 0.0, 0.0]), second=np.array([0.0, 1.0, 0.0])):
    angles = np.linspace(0.0, arc, segments + 1)[:, np.newaxis]
    return radius * (np.cos(angles) * first + np.sin(angles) * second)


def path_of(section, alpha):
    return GeodesicPath(section.kappa, alpha, path_energy(alpha, alpha.shape[0] - 1))


class TestSectionGeometry(unittest.TestCase):
    """
    Tests projections, covariant calculus and parallel translation on the section
    """

    @staticmethod
    def test_1_project_on_section():
        spec = make_basis(DomainId.circle, 4)
        rng = np.random.default_rng(0)
        for _ in range(1000):
            coeffs = rng.normal(size=spec.size) * rng.uniform(0.01, 10.0)
            point = project_to_section(CoeffVector(spec, coeffs), 0.7)
            assert abs(np.sum(spec.eigenvalues * point.coeffs.coeffs ** 2) - 0.7) <= 1e-8 * 0.7
            assert point.coeffs.coeffs[0] == coeffs[0]

    @staticmethod
    def test_2_project_fixed_point():
        section = EllipsoidSection(CIRCLE_EIGENVALUES, 2.0)
        rng = np.random.default_rng(1)
        point = rng.normal(size=8)
        point = point * np.sqrt(2.0 / section.g(point))
        projected, converged = section.project(point)
        assert converged
        npt.assert_allclose(projected, point, atol=1e-14)

    @staticmethod
    def test_3_project_radial_on_sphere():
        section = EllipsoidSection(np.ones(5), 4.0)
        rng = np.random.default_rng(2)
        for _ in range(20):
            point = rng.normal(size=5) * 3.0
            projected, _ = section.project(point)
            npt.assert_allclose(projected, 2.0 * point / np.linalg.norm(point), atol=1e-9)

    def test_4_project_zero(self):
        spec = make_basis(DomainId.circle, 2)
        with self.assertRaises(ValueError):
            project_to_section(CoeffVector(spec, [0.4, 0.0, 0.0, 0.0, 0.0]), 1.0)
        with self.assertRaises(ValueError):
            SectionPoint(CoeffVector(spec, [0.4, 1.0, 0.0, 0.0, 0.0]), 2.0)

    def test_5_project_tangent(self):
        spec = make_basis(DomainId.circle, 4)
        rng = np.random.default_rng(3)
        base = project_to_section(CoeffVector(spec, rng.normal(size=spec.size)), 1.5)
        w = rng.normal(size=spec.size - 1)
        tangent = project_tangent(base, w)
        npt.assert_allclose(project_tangent(base, tangent.components).components, tangent.components, atol=1e-12)
        assert tangent.norm() <= np.linalg.norm(w)
        npt.assert_allclose(project_tangent(base, base.unit_normal()).components, 0.0, atol=1e-12)
        with self.assertRaises(ValueError):
            TangentVector(base, base.unit_normal())

    @staticmethod
    def test_6_derivative_of_constant():
        section = EllipsoidSection(np.ones(3), 1.0)
        alpha = np.tile([0.0, 0.0, 1.0], (11, 1))
        field = np.tile([0.3, -0.2, 0.0], (11, 1))
        derivative = covariant_derivative(path_of(section, alpha), field, section)
        npt.assert_array_equal(derivative, 0.0)

    @staticmethod
    def test_7_velocity_of_great_circle():
        section = EllipsoidSection(np.ones(3), 1.0)
        alpha = great_circle(1.0, 1.0, 100)
        velocity = section.velocity(alpha, 100)
        derivative = covariant_derivative(path_of(section, alpha), velocity, section)
        assert np.max(np.linalg.norm(derivative, axis=1)) <= 1e-2

    @staticmethod
    def test_8_linearity():
        section = EllipsoidSection(CIRCLE_EIGENVALUES[:3], 1.0)
        alpha = np.array([section.project(point)[0] for point in
                          np.column_stack([np.cos(np.linspace(0, 1, 21)), np.sin(np.linspace(0, 1, 21)),
                                           0.2 * np.ones(21)])])
        rng = np.random.default_rng(4)
        first = rng.normal(size=alpha.shape)
        second = rng.normal(size=alpha.shape)
        path = path_of(section, alpha)
        combined = covariant_derivative(path, 2.0 * first - 3.0 * second, section)
        separate = 2.0 * covariant_derivative(path, first, section) - 3.0 * covariant_derivative(path, second, section)
        npt.assert_allclose(combined, separate, atol=1e-10)

    @staticmethod
    def test_9_integral_of_zero():
        section = EllipsoidSection(np.ones(3), 1.0)
        alpha = great_circle(1.0, 1.0, 20)
        npt.assert_array_equal(covariant_integral(path_of(section, alpha), np.zeros_like(alpha), section), 0.0)

    @staticmethod
    def test_10_derivative_integral_round_trip():
        section = EllipsoidSection(np.ones(3), 1.0)
        alpha = great_circle(1.0, 1.0, 100)
        tau = np.linspace(0.0, 1.0, 101)
        ambient = np.column_stack([np.sin(2.0 * tau), np.cos(3.0 * tau), 1.0 + tau])
        field = np.array([section.project_tangent(point, vector) for point, vector in zip(alpha, ambient)])
        path = path_of(section, alpha)
        recovered = covariant_derivative(path, covariant_integral(path, field, section), section)
        error = np.linalg.norm(recovered[:-1] - field[:-1], axis=1).max()
        assert error <= 0.02 * np.linalg.norm(field, axis=1).max()

    @staticmethod
    def test_11_integral_of_velocity_flat_limit():
        section = EllipsoidSection(np.ones(3), 1e4)
        alpha = great_circle(100.0, 0.001, 50)
        path = path_of(section, alpha)
        integral = covariant_integral(path, section.velocity(alpha, 50), section)
        displacement = alpha[-1] - alpha[0]
        npt.assert_allclose(integral[-1], displacement, atol=2e-3 * np.linalg.norm(displacement))

    @staticmethod
    def test_12_translate_norm_and_constant_path():
        section = EllipsoidSection(CIRCLE_EIGENVALUES[:4], 1.0)
        rng = np.random.default_rng(5)
        alpha = np.array([section.project(point)[0] for point in rng.normal(size=(15, 4)) * 0.1 +
                          np.array([1.0, 0.2, 0.1, 0.0])])
        vector = section.project_tangent(alpha[-1], rng.normal(size=4))
        translated = parallel_translate(path_of(section, alpha), vector, Direction.backward, section)
        npt.assert_allclose(np.linalg.norm(translated, axis=1), np.linalg.norm(vector), rtol=1e-9)
        constant = np.tile(alpha[0], (6, 1))
        start = section.project_tangent(alpha[0], rng.normal(size=4))
        forward = parallel_translate(path_of(section, constant), start, Direction.forward, section)
        npt.assert_allclose(forward, np.tile(start, (6, 1)), atol=1e-14)

    @staticmethod
    def test_13_translate_quarter_circle():
        section = EllipsoidSection(np.ones(3), 1.0)
        alpha = great_circle(1.0, np.pi / 2.0, 200)
        path = path_of(section, alpha)
        along = parallel_translate(path, np.array([0.0, 1.0, 0.0]), Direction.forward, section)
        npt.assert_allclose(along[-1], [-1.0, 0.0, 0.0], atol=1e-3)
        across = parallel_translate(path, np.array([0.0, 0.0, 0.5]), Direction.forward, section)
        npt.assert_allclose(across[-1], [0.0, 0.0, 0.5], atol=1e-3)

    def test_14_translate_base_mismatch(self):
        spec = make_basis(DomainId.sphere2, 1)
        constant = 1.0 / np.sqrt(4.0 * np.pi)
        first = SectionPoint(CoeffVector(spec, [constant, 1.0, 0.0, 0.0]), 2.0)
        other = SectionPoint(CoeffVector(spec, [constant, 0.0, 1.0, 0.0]), 2.0)
        alpha = np.array([first.geometry, [np.sqrt(0.5), np.sqrt(0.5), 0.0], other.geometry])
        path = GeodesicPath(2.0, alpha, 0.0, basis=spec, c0=constant)
        vector = TangentVector(other, [1.0, 0.0, 0.0])
        with self.assertRaises(ValueError):
            parallel_translate(path, vector, Direction.forward)
        translated = parallel_translate(path, vector, Direction.backward)
        npt.assert_allclose(np.linalg.norm(translated, axis=1), 1.0, rtol=1e-12)


if __name__ == '__main__':
    unittest.main()
