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
from scipy.stats import kstest

from heatdist.basis.basis_spec import make_basis
from heatdist.basis.domain import DomainId
from heatdist.estimation.sample_set import SampleSet
from heatdist.smoothing.kappa_selection import FixedKappa, PairMin
from heatdist.twosample.bootstrap_test import HypothesisTestConfig, HypothesisTestResult, bootstrap_test, \
    replicate_generator
from heatdist.twosample.mixture import MixtureSpec, sample_mixture
from heatdist.twosample.scenarios import BASE_MIXTURE, derived_seed, shifted_mixture

TEST_LOGGER = logging.getLogger()
TEST_LOGGER.setLevel(logging.WARNING)

LONG_TESTS = bool(os.environ.get('HEATDIST_LONG_TESTS'))

QUICK_GEODESIC = {'segments': 10, 'max_iter': 30}


def quick_config(**kwargs):
    settings = {'replicates': 50, 'seed': 7, 'geodesic': QUICK_GEODESIC}
    settings.update(kwargs)
    return HypothesisTestConfig(make_basis(DomainId.circle, 5), **settings)


def sample_pair(shift, size=60, seed=1):
    base = MixtureSpec(DomainId.circle, BASE_MIXTURE)
    return sample_mixture(base, size, seed), sample_mixture(shifted_mixture(base, shift), size, seed + 100)


class TestBootstrapTest(unittest.TestCase):
    """
    Tests the bootstrap two-sample test
    """

    @staticmethod
    def test_1_p_value():
        result = HypothesisTestResult(1.0, [0.5, 1.0, 2.0, 0.1], 0.05, 0.3, 0)
        npt.assert_allclose(result.p_value, 3.0 / 5.0)
        assert not result.reject
        result = HypothesisTestResult(5.0, np.zeros(99), 0.05, 0.3, 0)
        npt.assert_allclose(result.p_value, 0.01)
        assert result.reject
        assert result.as_dict()['replicate_distances'] == [0.0] * 99

    def test_2_config_validation(self):
        spec = make_basis(DomainId.circle, 5)
        with self.assertRaises(ValueError):
            HypothesisTestConfig(spec, replicates=10)
        with self.assertRaises(ValueError):
            HypothesisTestConfig(spec, alpha=1.5)
        with self.assertRaises(ValueError):
            HypothesisTestConfig(spec, statistic='energy')
        config = HypothesisTestConfig(spec, kappa=0.4, workers=0)
        assert isinstance(config.kappa, FixedKappa)
        assert config.workers == 1
        assert isinstance(HypothesisTestConfig(spec).kappa, PairMin)

    @staticmethod
    def test_3_identical_sets():
        s1, _ = sample_pair(0.0)
        result = bootstrap_test(s1, s1, quick_config(), TEST_LOGGER)
        assert result.d0 == 0.0
        assert result.p_value == 1.0
        assert not result.reject
        assert result.replicate_distances.shape == (50,)

    @staticmethod
    def test_4_deterministic():
        s1, s2 = sample_pair(0.3)
        first = bootstrap_test(s1, s2, quick_config(), TEST_LOGGER)
        second = bootstrap_test(s1, s2, quick_config(), TEST_LOGGER)
        npt.assert_array_equal(first.replicate_distances, second.replicate_distances)
        assert first.d0 == second.d0
        assert first.p_value == second.p_value
        other = bootstrap_test(s1, s2, quick_config(seed=8), TEST_LOGGER)
        assert not np.array_equal(first.replicate_distances, other.replicate_distances)

    @staticmethod
    def test_5_workers_agree():
        s1, s2 = sample_pair(0.3, seed=3)
        serial = bootstrap_test(s1, s2, quick_config(statistic='l2_optimal'), TEST_LOGGER)
        parallel = bootstrap_test(s1, s2, quick_config(statistic='l2_optimal', workers=3), TEST_LOGGER)
        npt.assert_array_equal(serial.replicate_distances, parallel.replicate_distances)
        assert serial.p_value == parallel.p_value

    @staticmethod
    def test_6_separated_sets_rejected():
        s1, s2 = sample_pair(1.5, size=150, seed=5)
        result = bootstrap_test(s1, s2, quick_config(), TEST_LOGGER)
        assert result.reject
        assert result.kappa_used > 0.0
        assert len(result.bandwidths) == 2

    @staticmethod
    def test_7_l2_statistics():
        s1, s2 = sample_pair(1.5, size=150, seed=6)
        fixed = bootstrap_test(s1, s2, quick_config(statistic='l2_fixed'), TEST_LOGGER)
        optimal = bootstrap_test(s1, s2, quick_config(statistic='l2_optimal'), TEST_LOGGER)
        assert fixed.statistic == 'l2_fixed'
        assert fixed.reject
        assert optimal.reject

    def test_8_domain_errors(self):
        sphere = SampleSet(DomainId.sphere2, [[0.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
        circle, _ = sample_pair(0.0)
        with self.assertRaises(ValueError):
            bootstrap_test(circle, sphere, quick_config(), TEST_LOGGER)

    @staticmethod
    def test_9_replicate_streams():
        first = replicate_generator(3, 4).integers(0, 1000, 10)
        npt.assert_array_equal(first, replicate_generator(3, 4).integers(0, 1000, 10))
        assert not np.array_equal(first, replicate_generator(3, 5).integers(0, 1000, 10))

    @staticmethod
    @unittest.skipUnless(LONG_TESTS, 'set HEATDIST_LONG_TESTS to run')
    def test_10_type_one_calibration():
        base = MixtureSpec(DomainId.circle, BASE_MIXTURE)
        config = HypothesisTestConfig(make_basis(DomainId.circle, 20), replicates=200, alpha=0.05)
        p_values = []
        for trial in range(200):
            s1 = sample_mixture(base, 200, derived_seed(17, trial, 1))
            s2 = sample_mixture(base, 200, derived_seed(17, trial, 2))
            config.seed = derived_seed(17, trial, 0)
            p_values.append(bootstrap_test(s1, s2, config, TEST_LOGGER).p_value)
        p_values = np.array(p_values)
        assert 0.02 <= np.mean(p_values <= 0.05) <= 0.10
        assert kstest(p_values, 'uniform').statistic <= 0.1


if __name__ == '__main__':
    unittest.main()
