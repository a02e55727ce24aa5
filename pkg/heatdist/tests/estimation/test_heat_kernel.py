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

from heatdist.basis.domain import DomainId, quadrature_grid, spherical_to_unit
from heatdist.estimation.heat_kernel import heat_kernel_circle, heat_kernel_sphere, series_cutoff


class TestHeatKernel(unittest.TestCase):
    """
    Tests the heat kernel series on circle and sphere
    """

    @staticmethod
    def test_1_circle_uniform_limit():
        theta = np.linspace(-np.pi, np.pi, 50)
        npt.assert_allclose(heat_kernel_circle(theta, 0.4, 50.0), 1.0 / (2.0 * np.pi), atol=1e-10)

    @staticmethod
    def test_2_circle_integral():
        grid = quadrature_grid(DomainId.circle, 100)
        npt.assert_allclose(grid.integrate(heat_kernel_circle(grid.nodes, 1.1, 0.2)), 1.0, atol=1e-10)

    @staticmethod
    def test_3_circle_symmetry():
        delta = np.linspace(0.0, np.pi, 17)
        npt.assert_allclose(heat_kernel_circle(delta, 0.0, 0.05), heat_kernel_circle(-delta, 0.0, 0.05),
                            rtol=1e-15)

    def test_4_bandwidth_errors(self):
        with self.assertRaises(ValueError):
            heat_kernel_circle(0.0, 0.0, 0.0)
        with self.assertRaises(ValueError):
            heat_kernel_circle(0.0, 0.0, -0.1)
        with self.assertRaises(ValueError):
            heat_kernel_sphere([0.0, 0.0, 1.0], [0.0, 0.0, 1.0], 5e-5)
        with self.assertRaises(ValueError):
            heat_kernel_sphere([0.0, 0.0, 2.0], [0.0, 0.0, 1.0], 0.1)

    @staticmethod
    def test_5_sphere_integral():
        grid = quadrature_grid(DomainId.sphere2, 200)
        mu = spherical_to_unit(1.0, 2.0)
        npt.assert_allclose(grid.integrate(heat_kernel_sphere(grid.nodes, mu, 0.1, 30)), 1.0, atol=1e-8)

    @staticmethod
    def test_6_sphere_peak():
        mu = np.array([0.0, 0.0, 1.0])
        degrees = np.arange(21)
        expected = np.sum((2 * degrees + 1) * np.exp(-degrees * (degrees + 1.0))) / (4.0 * np.pi)
        npt.assert_allclose(heat_kernel_sphere(mu, mu, 1.0, 20), expected, rtol=1e-14)

    @staticmethod
    def test_7_sphere_rotation():
        x = spherical_to_unit(0.3, 0.2)
        mu = spherical_to_unit(0.9, -1.4)
        angle = 0.77
        rotation = np.array([[np.cos(angle), -np.sin(angle), 0.0], [np.sin(angle), np.cos(angle), 0.0],
                             [0.0, 0.0, 1.0]])
        npt.assert_allclose(heat_kernel_sphere(rotation @ x, rotation @ mu, 0.05),
                            heat_kernel_sphere(x, mu, 0.05), rtol=1e-13)

    @staticmethod
    def test_8_series_cutoff():
        cutoff = series_cutoff(DomainId.circle, 0.1)
        assert np.exp(-cutoff ** 2 * 0.1) < 1e-14
        assert np.exp(-(cutoff - 1) ** 2 * 0.1) >= 1e-14
        assert series_cutoff(DomainId.circle, 1e-4) == 200
        sphere = series_cutoff(DomainId.sphere2, 0.1)
        assert np.exp(-sphere * (sphere + 1) * 0.1) < 1e-14


if __name__ == '__main__':
    unittest.main()
