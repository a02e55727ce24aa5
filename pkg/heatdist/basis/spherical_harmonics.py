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
from scipy.special import gammaln, lpmv


def harmonic_index(degree: int, order: int):
    """
    Position of Y_degree^order in the degree-major ordering
    """
    return degree * degree + degree + order


def real_spherical_harmonics(max_degree: int, points):
    """
    Real orthonormal spherical harmonics without the Condon-Shortley phase.
    Order m > 0 uses cos(m phi), m < 0 uses sin(|m| phi).
    :param max_degree: highest degree L
    :param points: (n, 3) unit vectors
    :return: array of shape ((L + 1)^2, n)
    """
    cos_theta = np.clip(points[:, 2], -1.0, 1.0)
    phi = np.arctan2(points[:, 1], points[:, 0])
    values = np.empty(((max_degree + 1) ** 2, points.shape[0]))
    for degree in range(max_degree + 1):
        for order in range(degree + 1):
            norm = np.sqrt((2 * degree + 1) / (4.0 * np.pi) *
                           np.exp(gammaln(degree - order + 1) - gammaln(degree + order + 1)))
            # lpmv carries the (-1)^m phase
            associated = (-1.0) ** order * lpmv(order, degree, cos_theta)
            if order == 0:
                values[harmonic_index(degree, 0)] = norm * associated
            else:
                scaled = np.sqrt(2.0) * norm * associated
                values[harmonic_index(degree, order)] = scaled * np.cos(order * phi)
                values[harmonic_index(degree, -order)] = scaled * np.sin(order * phi)
    return values
