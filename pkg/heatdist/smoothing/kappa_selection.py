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
import numpy as np


class PairMin:
    """
    The smaller of two G-values
    """
    NAME = 'pairmin'

    def select(self, values):
        if len(values) != 2:
            raise ValueError("PairMin needs exactly 2 values, got {}".format(len(values)))
        return float(min(values))


class Quantile:
    """
    Linear interpolated empirical quantile, q=0.1 keeps about 90% of G-values above kappa
    """
    NAME = 'quantile'

    def __init__(self, q: float = 0.1):
        if not 0.0 <= q <= 1.0:
            raise ValueError("The quantile must lie in [0, 1], got {}".format(q))
        self.q = q

    def select(self, values):
        return float(np.quantile(np.asarray(values, dtype='float64'), self.q))


class FixedKappa:
    """
    A given smoothness level
    """
    NAME = 'fixed'

    def __init__(self, kappa: float):
        if not kappa > 0:
            raise ValueError("The smoothness level must be positive, got {}".format(kappa))
        self.kappa = float(kappa)

    def select(self, values):
        return self.kappa


def select_kappa(g_values, strategy):
    """
    Choose a shared smoothness level from G-values
    :param g_values: positive G-values
    :param strategy: PairMin, Quantile or FixedKappa instance
    :return: kappa
    """
    values = [float(value) for value in g_values]
    if not values:
        raise ValueError("Selecting kappa needs at least one G-value")
    if any(value <= 0 for value in values):
        raise ValueError("G-values must be positive")
    return strategy.select(values)


def parse_kappa_rule(rule, quantile_q: float = 0.1):
    """
    Strategy from a config value: pairmin, quantile or a number
    """
    text = str(rule).strip().lower()
    if text == PairMin.NAME:
        return PairMin()
    if text == Quantile.NAME:
        return Quantile(quantile_q)
    try:
        return FixedKappa(float(text))
    except ValueError:
        raise ValueError("Unknown kappa rule {}, use pairmin, quantile or a number".format(rule))
