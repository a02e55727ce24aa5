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

from heatdist.basis.domain import DomainId, as_points

ANGLE_TOLERANCE = 1e-12


class SampleSet:
    """
    Samples on a domain: angles for the circle, unit 3-vectors for the sphere.
    Circle samples wrapped from the real line keep their WrapMap as cut point.
    """

    def __init__(self, domain, points, label: str = '', wrap_map=None):
        self.domain = DomainId.parse(domain)
        values = as_points(self.domain, points).copy()
        if values.shape[0] == 0:
            raise ValueError("A sample set needs at least one point")
        if self.domain is DomainId.circle and np.any(np.abs(values) > np.pi + ANGLE_TOLERANCE):
            raise ValueError("Circle samples must be angles in [-pi, pi)")
        values.setflags(write=False)
        self.points = values
        self.label = label
        self.wrap_map = wrap_map

    def __len__(self):
        return self.points.shape[0]

    def __repr__(self):
        return "SampleSet(domain=%r,size=%r,label=%r)" % (self.domain.value, len(self), self.label)

    def subset(self, indices, label=None):
        """
        Sample set made of the points at the given indices
        """
        return SampleSet(self.domain, self.points[np.asarray(indices)],
                         self.label if label is None else label, self.wrap_map)

    @staticmethod
    def pooled(first, second, label='pooled'):
        if first.domain is not second.domain:
            raise ValueError("Cannot pool {} with {} samples".format(first.domain.value, second.domain.value))
        return SampleSet(first.domain, np.concatenate([first.points, second.points]), label, first.wrap_map)
