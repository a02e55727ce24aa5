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
from heatdist.basis.domain import DomainId, quadrature_grid
from heatdist.estimation.kernel_density import kde
from heatdist.estimation.sample_set import SampleSet
from heatdist.twosample.baseline_distance import DistanceKind, baseline_distance, density_distance
from heatdist.twosample.ks_test import ks_test_1d
from heatdist.wrap.wrap_map import WrapMap, wrap_samples


class TestBaselineDistance(unittest.TestCase):
    """
    Tests the baseline density distances and the KS test
    """

    @staticmethod
    def test_1_identical():
        spec = make_basis(DomainId.circle, 10)
        estimate = kde(SampleSet(DomainId.circle, [0.1, 0.5, -2.0]), 0.2, spec)
        for kind in DistanceKind:
            npt.assert_allclose(baseline_distance(estimate, estimate, kind), 0.0, atol=1e-7)

    @staticmethod
    def test_2_disjoint():
        weights = np.full(4, 0.25)
        first = np.array([2.0, 2.0, 0.0, 0.0])
        second = np.array([0.0, 0.0, 2.0, 2.0])
        npt.assert_allclose(density_distance(first, second, weights, DistanceKind.fisher_rao), np.pi / 2.0)
        npt.assert_allclose(density_distance(first, second, weights, DistanceKind.bhattacharyya), 1.0)
        npt.assert_allclose(density_distance(first, second, weights, DistanceKind.chisq), 2.0)
        npt.assert_allclose(density_distance(first, second, weights, DistanceKind.l2), 2.0)

    @staticmethod
    def test_3_negative_values_clipped():
        weights = np.full(4, 0.25)
        first = np.array([2.0, 2.0, -0.5, 0.0])
        second = np.array([2.0, 2.0, 0.0, 0.0])
        npt.assert_allclose(density_distance(first, second, weights, DistanceKind.fisher_rao), 0.0, atol=1e-7)

    def test_4_errors(self):
        circle = kde(SampleSet(DomainId.circle, [0.1]), 0.2, make_basis(DomainId.circle, 5))
        sphere = kde(SampleSet(DomainId.sphere2, [[0.0, 0.0, 1.0]]), 0.2, make_basis(DomainId.sphere2, 3))
        with self.assertRaises(ValueError):
            baseline_distance(circle, sphere, DistanceKind.l2)
        with self.assertRaises(ValueError):
            density_distance(np.zeros(3), np.ones(3), np.ones(3), DistanceKind.fisher_rao)

    @staticmethod
    def test_5_l2_matches_coefficients():
        spec = make_basis(DomainId.circle, 10)
        first = kde(SampleSet(DomainId.circle, [0.1, 0.5]), 0.2, spec)
        second = kde(SampleSet(DomainId.circle, [-1.0, 2.5]), 0.3, spec)
        expected = np.linalg.norm(first.coeffs.coeffs - second.coeffs.coeffs)
        grid = quadrature_grid(DomainId.circle, 200)
        npt.assert_allclose(baseline_distance(first, second, DistanceKind.l2, grid), expected, rtol=1e-10)

    def test_6_ks_test(self):
        wrap_map = WrapMap(-1.0, 11.0)
        rng = np.random.default_rng(5)
        first = wrap_samples(rng.uniform(0.0, 10.0, 300), wrap_map)
        second = wrap_samples(rng.uniform(0.0, 10.0, 300), wrap_map)
        statistic, p_value = ks_test_1d(first, second)
        assert 0.0 <= statistic <= 1.0
        assert p_value > 0.01
        shifted = wrap_samples(rng.uniform(5.0, 10.0, 300), wrap_map)
        _, p_value = ks_test_1d(first, shifted)
        assert p_value < 1e-6
        with self.assertRaises(ValueError):
            ks_test_1d(SampleSet(DomainId.circle, [0.1, 0.2]), first)


if __name__ == '__main__':
    unittest.main()
