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
from heatdist.basis.legendre import legendre_table

MIN_BANDWIDTH = 1e-4
MAX_CUTOFF = 200
TRUNCATION_TOLERANCE = 1e-14


def check_bandwidth(h):
    if not np.isfinite(h) or h <= 0:
        raise ValueError("The bandwidth must be positive, got {}".format(h))
    if h < MIN_BANDWIDTH:
        raise ValueError("The bandwidth {} is below the minimum {}".format(h, MIN_BANDWIDTH))


def eigenvalue_of_degree(domain: DomainId, degree):
    return degree * degree if domain is DomainId.circle else degree * (degree + 1)


def series_cutoff(domain, h: float):
    """
    Smallest M with exp(-lambda_M h) < 1e-14, capped at 200
    """
    domain = DomainId.parse(domain)
    check_bandwidth(h)
    threshold = -np.log(TRUNCATION_TOLERANCE) / h
    for degree in range(1, MAX_CUTOFF + 1):
        if eigenvalue_of_degree(domain, degree) > threshold:
            return degree
    return MAX_CUTOFF


def heat_kernel_circle(theta, mu: float, h: float, m_cutoff: int = None):
    """
    Heat kernel (wrapped Gaussian) on the circle
    (2 pi)^-1 (1 + 2 sum_m exp(-m^2 h) cos(m (theta - mu)))
    :param theta: angle or array of angles
    :param mu: center angle
    :param h: bandwidth (diffusion time)
    :param m_cutoff: series cutoff, series_cutoff() if None
    :return: kernel values with the shape of theta
    """
    check_bandwidth(h)
    m_cutoff = series_cutoff(DomainId.circle, h) if m_cutoff is None else int(m_cutoff)
    angles = np.asarray(theta, dtype='float64') - mu
    frequencies = np.arange(1, m_cutoff + 1)
    damping = np.exp(-frequencies ** 2 * h)
    series = np.cos(np.multiply.outer(angles, frequencies)) @ damping
    return (1.0 + 2.0 * series) / (2.0 * np.pi)


def heat_kernel_sphere(x, mu, h: float, m_cutoff: int = None):
    """
    Heat kernel on the unit 2-sphere
    (4 pi)^-1 sum_m (2m + 1) exp(-m(m + 1) h) P_m(<x, mu>)
    :param x: unit vector or (n, 3) array of unit vectors
    :param mu: unit vector
    :param h: bandwidth (diffusion time)
    :param m_cutoff: series cutoff, series_cutoff() if None
    :return: kernel value(s)
    """
    check_bandwidth(h)
    m_cutoff = series_cutoff(DomainId.sphere2, h) if m_cutoff is None else int(m_cutoff)
    points = as_points(DomainId.sphere2, x)
    center = as_points(DomainId.sphere2, mu)[0]
    cosines = np.clip(np.sum(points * center, axis=1), -1.0, 1.0)
    degrees = np.arange(m_cutoff + 1)
    weights = (2 * degrees + 1) * np.exp(-degrees * (degrees + 1) * h) / (4.0 * np.pi)
    values = weights @ legendre_table(m_cutoff, cosines)
    if np.ndim(x) == 1:
        return float(values[0])
    return values
