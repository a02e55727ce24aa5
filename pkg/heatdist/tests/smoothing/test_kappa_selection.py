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

import numpy.testing as npt

from heatdist.smoothing.kappa_selection import FixedKappa, PairMin, Quantile, parse_kappa_rule, select_kappa


class TestKappaSelection(unittest.TestCase):
    """
    Tests the smoothness level strategies
    """

    @staticmethod
    def test_1_pair_min():
        assert select_kappa([7.4, 5.0], PairMin()) == 5.0

    @staticmethod
    def test_2_quantile():
        npt.assert_allclose(select_kappa(range(1, 11), Quantile(0.1)), 1.9, rtol=1e-14)
        assert select_kappa([3.5], Quantile()) == 3.5
        assert select_kappa([1.0, 2.0, 3.0], FixedKappa(0.7)) == 0.7

    def test_3_errors(self):
        with self.assertRaises(ValueError):
            select_kappa([], Quantile())
        with self.assertRaises(ValueError):
            select_kappa([1.0, 2.0, 3.0], PairMin())
        with self.assertRaises(ValueError):
            select_kappa([1.0, 0.0], PairMin())
        with self.assertRaises(ValueError):
            Quantile(1.5)
        with self.assertRaises(ValueError):
            FixedKappa(-1.0)

    def test_4_parse_rule(self):
        assert isinstance(parse_kappa_rule('pairmin'), PairMin)
        quantile = parse_kappa_rule('Quantile', 0.25)
        assert isinstance(quantile, Quantile) and quantile.q == 0.25
        assert parse_kappa_rule('2.5').kappa == 2.5
        with self.assertRaises(ValueError):
            parse_kappa_rule('median')


if __name__ == '__main__':
    unittest.main()
