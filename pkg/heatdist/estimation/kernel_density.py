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

from heatdist.basis.basis_spec import BasisSpec
from heatdist.basis.coefficients import CoeffVector, synthesize
from heatdist.basis.domain import DomainId
from heatdist.estimation.heat_kernel import check_bandwidth, heat_kernel_circle, heat_kernel_sphere, \
    series_cutoff
from heatdist.estimation.sample_set import SampleSet

NORMALIZATION_TOLERANCE = 1e-8
DEFAULT_PLUGIN_CONSTANT = 0.6


class DensityEstimate:
    """
    Heat kernel density estimate in spectral form
    """

    def __init__(self, sample_count: int, bandwidth: float, truncation: int, coeffs: CoeffVector,
                 label: str = ''):
        if bandwidth <= 0:
            raise ValueError("The bandwidth must be positive, got {}".format(bandwidth))
        if truncation < 1:
            raise ValueError("The series truncation must be at least 1, got {}".format(truncation))
        if abs(coeffs.coeffs[0] - coeffs.basis.constant) > NORMALIZATION_TOLERANCE * coeffs.basis.constant:
            raise ValueError("A density estimate must integrate to one")
        self.sample_count = sample_count
        self.bandwidth = bandwidth
        self.truncation = truncation
        self.coeffs = coeffs
        self.label = label

    def __repr__(self):
        return "DensityEstimate(label=%r,T=%r,h=%r)" % (self.label, self.sample_count, self.bandwidth)

    @property
    def basis(self):
        return self.coeffs.basis

    def evaluate(self, points):
        return synthesize(self.coeffs, points)

    def flowed(self, t: float):
        """
        The same estimate with bandwidth h + t
        """
        factors = np.exp(-self.basis.eigenvalues * t)
        return DensityEstimate(self.sample_count, self.bandwidth + t, self.truncation,
                               self.coeffs.with_coeffs(self.coeffs.coeffs * factors), self.label)


def empirical_coefficients(samples: SampleSet, spec: BasisSpec):
    """
    Empirical eigenfunction means (1/T) sum_i phi_n(x_i)
    """
    if samples.domain is not spec.domain:
        raise ValueError("Samples on {} cannot be estimated in a {} basis".format(
            samples.domain.value, spec.domain.value))
    means = spec.evaluate(samples.points).mean(axis=1)
    means[0] = spec.constant
    return means


def kde(samples: SampleSet, h: float, spec: BasisSpec, m_cutoff: int = None):
    """
    Heat kernel density estimate with closed form coefficients exp(-lambda_n h) * mean_i phi_n(x_i)
    :param samples: samples on the basis domain
    :param h: bandwidth
    :param spec: basis
    :param m_cutoff: kernel series cutoff recorded with the estimate, series_cutoff() if None
    :return: DensityEstimate
    """
    check_bandwidth(h)
    means = empirical_coefficients(samples, spec)
    m_cutoff = series_cutoff(spec.domain, h) if m_cutoff is None else int(m_cutoff)
    coeffs = CoeffVector(spec, np.exp(-spec.eigenvalues * h) * means)
    return DensityEstimate(len(samples), h, m_cutoff, coeffs, samples.label)


def kernel_sum(samples: SampleSet, h: float, points, m_cutoff: int = None):
    """
    Pointwise estimate T^-1 sum_i K_h(x, x_i) from the kernel series
    """
    total = 0.0
    for center in samples.points:
        if samples.domain is DomainId.circle:
            total = total + heat_kernel_circle(points, center, h, m_cutoff)
        else:
            total = total + heat_kernel_sphere(points, center, h, m_cutoff)
    return total / len(samples)


def plugin_bandwidth(samples: SampleSet, constant: float = DEFAULT_PLUGIN_CONSTANT):
    """
    Plug-in rule h = c T^(-2/5)
    """
    return constant * len(samples) ** (-0.4)


def resolve_bandwidth(rule, samples: SampleSet, constant: float = DEFAULT_PLUGIN_CONSTANT):
    """
    Bandwidth from a rule: a number or 'plugin'
    """
    if isinstance(rule, str):
        if rule.strip().lower() == 'plugin':
            return plugin_bandwidth(samples, constant)
        try:
            rule = float(rule)
        except ValueError:
            raise ValueError("Unknown bandwidth rule {}, use a number or plugin".format(rule))
    check_bandwidth(rule)
    return float(rule)
