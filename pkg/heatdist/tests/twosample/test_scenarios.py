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
import logging
import os
import unittest

import numpy as np
import numpy.testing as npt

from heatdist.basis.basis_spec import make_basis
from heatdist.basis.domain import DomainId
from heatdist.estimation.kernel_density import kde
from heatdist.smoothing.kappa_selection import Quantile
from heatdist.smoothing.smoothing_action import g_value
from heatdist.twosample.bootstrap_test import HypothesisTestConfig
from heatdist.twosample.mixture import MixtureSpec, l1_separation, sample_mixture
from heatdist.twosample.scenarios import BASE_MIXTURE, SEPARATIONS, bandwidth_grid_study, derived_seed, \
    power_curve, relative_spread, separation_scenarios, shifted_mixture, smoothness_prior_study

TEST_LOGGER = logging.getLogger()
TEST_LOGGER.setLevel(logging.WARNING)

LONG_TESTS = bool(os.environ.get('HEATDIST_LONG_TESTS'))


class TestScenarios(unittest.TestCase):
    """
    Tests the simulation scenarios and studies
    """

    @staticmethod
    def test_1_derived_seed():
        assert derived_seed(5, 1, 2) == derived_seed(5, 1, 2)
        assert derived_seed(5, 1, 2) != derived_seed(5, 2, 1)
        assert derived_seed(5, 1) != derived_seed(6, 1)

    @staticmethod
    def test_2_shifted_mixture():
        base = MixtureSpec(DomainId.circle, BASE_MIXTURE)
        shifted = shifted_mixture(base, 3.0)
        assert base.components[-1].center == 1.0
        npt.assert_allclose(shifted.components[-1].center, 4.0 - 2.0 * np.pi)
        assert shifted.components[0].center == base.components[0].center

    @staticmethod
    def test_3_separations_matched():
        scenarios = separation_scenarios()
        assert len(scenarios) == len(SEPARATIONS)
        for (spec1, spec2, separation), target in zip(scenarios, SEPARATIONS):
            npt.assert_allclose(separation, target, atol=1e-6)
            npt.assert_allclose(l1_separation(spec1, spec2), target, atol=1e-6)

    @staticmethod
    def test_4_relative_spread():
        npt.assert_allclose(relative_spread([1.0, 2.0, 3.0]), 1.0)
        assert relative_spread([[2.0, 2.0], [2.0, 2.0]]) == 0.0

    @staticmethod
    def test_5_power_curve_rows():
        scenarios = separation_scenarios((0.0, 0.26))
        config = HypothesisTestConfig(make_basis(DomainId.circle, 5), replicates=50, seed=3,
                                      geodesic={'segments': 8, 'max_iter': 20})
        rows = power_curve(scenarios, config, trials=2, sample_size=50, logger=TEST_LOGGER)
        assert [row['scenario'] for row in rows] == [0, 1]
        for row in rows:
            assert 0.0 <= row['rejection_fraction'] <= 1.0
            assert row['rejection_fraction'] * 2 in (0.0, 1.0, 2.0)
        assert config.seed == 3
        again = power_curve(scenarios, config, trials=2, sample_size=50, logger=TEST_LOGGER)
        assert rows == again

    @staticmethod
    def test_6_prior_study_rows():
        rows = smoothness_prior_study(None, make_basis(DomainId.circle, 30), [50, 200], 3, seed=1, logger=TEST_LOGGER)
        assert [row['sample_size'] for row in rows] == [50, 200]
        for row in rows:
            assert row['fixed_rule_error'] > 0.0
            assert row['smoothness_prior_error'] > 0.0

    @staticmethod
    def test_7_bandwidth_grid_shape():
        base = MixtureSpec(DomainId.circle, BASE_MIXTURE)
        s1 = sample_mixture(base, 80, 1)
        s2 = sample_mixture(shifted_mixture(base, 0.5), 80, 2)
        study = bandwidth_grid_study(s1, s2, make_basis(DomainId.circle, 8), [0.1, 0.2],
                                     geodesic={'segments': 10, 'max_iter': 50}, logger=TEST_LOGGER)
        assert np.array(study['d_kappa']).shape == (2, 2)
        assert np.array(study['fisher_rao']).shape == (2, 2)
        assert study['kappa'] > 0.0
        assert study['d_kappa_spread'] >= 0.0

    @staticmethod
    def test_10_bandwidth_grid_kappa_rules():
        base = MixtureSpec(DomainId.circle, BASE_MIXTURE)
        s1 = sample_mixture(base, 80, 3)
        s2 = sample_mixture(shifted_mixture(base, 0.5), 80, 4)
        basis = make_basis(DomainId.circle, 8)
        bandwidths = [0.2, 0.1]
        g_first = [g_value(kde(s1, bandwidth, basis).coeffs) for bandwidth in bandwidths]
        g_second = [g_value(kde(s2, bandwidth, basis).coeffs) for bandwidth in bandwidths]
        geodesic = {'segments': 10, 'max_iter': 50}
        study = bandwidth_grid_study(s1, s2, basis, bandwidths, Quantile(0.25), geodesic, TEST_LOGGER)
        assert study['kappa_rule'] == 'quantile'
        npt.assert_allclose(study['kappa'], np.quantile(g_first + g_second, 0.25), rtol=1e-12)
        study = bandwidth_grid_study(s1, s2, basis, bandwidths, geodesic=geodesic, logger=TEST_LOGGER)
        assert study['kappa_rule'] == 'pairmin'
        npt.assert_allclose(study['kappa'], min(g_first[1], g_second[1]), rtol=1e-12)
        study = bandwidth_grid_study(s1, s2, basis, bandwidths, 0.3, geodesic, TEST_LOGGER)
        assert study['kappa_rule'] == 'fixed'
        assert study['kappa'] == 0.3

    @staticmethod
    @unittest.skipUnless(LONG_TESTS, 'set HEATDIST_LONG_TESTS to run')
    def test_8_power_curve_shape():
        scenarios = separation_scenarios()
        config = HypothesisTestConfig(make_basis(DomainId.circle, 20), replicates=200, seed=11)
        rows = power_curve(scenarios, config, trials=100, sample_size=600, logger=TEST_LOGGER)
        fractions = [row['rejection_fraction'] for row in rows]
        for earlier, later in zip(fractions, fractions[1:]):
            assert later >= earlier - 0.05
        assert fractions[-1] >= 0.9
        middle = [scenarios[2]]
        pair_min = power_curve(middle, config, trials=100, sample_size=600, logger=TEST_LOGGER)
        smoothed = power_curve(middle, config, trials=100, sample_size=600, kappa_factor=10.0, logger=TEST_LOGGER)
        assert smoothed[0]['rejection_fraction'] < pair_min[0]['rejection_fraction']

    @staticmethod
    @unittest.skipUnless(LONG_TESTS, 'set HEATDIST_LONG_TESTS to run')
    def test_9_smoothness_prior_benefit():
        rows = smoothness_prior_study(None, make_basis(DomainId.circle, 50), [50, 100, 200, 400, 800], 100, seed=2,
                                      logger=TEST_LOGGER)
        for row in rows:
            assert row['smoothness_prior_error'] <= row['fixed_rule_error']


if __name__ == '__main__':
    unittest.main()
