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

from heatdist.basis.domain import DomainId
from heatdist.estimation.sample_set import SampleSet

DEFAULT_PAD = 0.15


class WrapMap:
    """
    Affine map of an interval [a, b] of the real line onto the circle [-pi, pi]
    """

    def __init__(self, lower: float, upper: float):
        if not np.isfinite(lower) or not np.isfinite(upper) or upper - lower <= 0:
            raise ValueError("The wrap interval needs lower < upper, got [{}, {}]".format(lower, upper))
        self.lower = float(lower)
        self.upper = float(upper)

    def __repr__(self):
        return "WrapMap(lower=%r,upper=%r)" % (self.lower, self.upper)

    @property
    def density_scale(self):
        """
        Line density = circle density * 2 pi / (b - a), this is (b - a) / (2 pi)
        """
        return (self.upper - self.lower) / (2.0 * np.pi)

    def wrap(self, values):
        values = np.asarray(values, dtype='float64')
        return -np.pi + 2.0 * np.pi * (values - self.lower) / (self.upper - self.lower)

    def unwrap(self, angles):
        angles = np.asarray(angles, dtype='float64')
        return self.lower + (angles + np.pi) * (self.upper - self.lower) / (2.0 * np.pi)


def detect_boundary(sample_sets, pad: float = DEFAULT_PAD):
    """
    Shared interval enclosing all sample sets, widened by pad times the pooled range
    :param sample_sets: one or more sequences of real values
    :param pad: fraction of the range added on both sides
    :return: WrapMap
    """
    if not sample_sets:
        raise ValueError("Boundary detection needs at least one sample set")
    arrays = [np.asarray(values, dtype='float64').ravel() for values in sample_sets]
    if any(values.size == 0 for values in arrays):
        raise ValueError("Boundary detection needs nonempty sample sets")
    pooled = np.concatenate(arrays)
    lowest, highest = float(pooled.min()), float(pooled.max())
    spread = highest - lowest
    if spread <= 0:
        raise ValueError("All samples are identical, the wrap interval is degenerate")
    return WrapMap(lowest - pad * spread, highest + pad * spread)


def wrap_samples(values, wrap_map: WrapMap, label: str = ''):
    """
    Real line samples as circle samples carrying their cut point
    """
    values = np.asarray(values, dtype='float64').ravel()
    if np.any(values < wrap_map.lower) or np.any(values > wrap_map.upper):
        raise ValueError("Samples outside the wrap interval [{}, {}]".format(wrap_map.lower, wrap_map.upper))
    return SampleSet(DomainId.circle, wrap_map.wrap(values), label, wrap_map)
