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

from heatdist.basis.domain import DomainId, as_points, quadrature_grid
from heatdist.estimation.heat_kernel import heat_kernel_circle
from heatdist.estimation.sample_set import SampleSet

WEIGHT_TOLERANCE = 1e-12
REJECTION_BATCH = 1024


class MixtureComponent:
    """
    Weighted component: circle heat kernel (concentration is the bandwidth) or
    sphere von Mises-Fisher (concentration is kappa)
    """

    def __init__(self, weight: float, center, concentration: float):
        if weight <= 0:
            raise ValueError("Component weights must be positive, got {}".format(weight))
        if concentration <= 0:
            raise ValueError("Component concentration must be positive, got {}".format(concentration))
        self.weight = float(weight)
        self.center = center
        self.concentration = float(concentration)


class MixtureSpec:
    """
    Finite mixture on a domain
    """

    def __init__(self, domain, components):
        self.domain = DomainId.parse(domain)
        self.components = [component if isinstance(component, MixtureComponent) else MixtureComponent(*component)
                           for component in components]
        if not self.components:
            raise ValueError("A mixture needs at least one component")
        total = sum(component.weight for component in self.components)
        if abs(total - 1.0) > WEIGHT_TOLERANCE:
            raise ValueError("Mixture weights must sum to 1, got {}".format(total))
        for component in self.components:
            if self.domain is DomainId.circle:
                component.center = float(component.center)
            else:
                component.center = as_points(DomainId.sphere2, component.center)[0]

    @property
    def weights(self):
        return np.array([component.weight for component in self.components])


def _sample_heat_kernel(rng, center, bandwidth, count):
    envelope = heat_kernel_circle(0.0, 0.0, bandwidth)
    accepted = []
    total = 0
    while total < count:
        proposals = rng.uniform(-np.pi, np.pi, REJECTION_BATCH)
        heights = rng.uniform(0.0, envelope, REJECTION_BATCH)
        keep = proposals[heights <= heat_kernel_circle(proposals, center, bandwidth)]
        accepted.append(keep)
        total += keep.shape[0]
    return np.concatenate(accepted)[:count]


def _orthonormal_frame(center):
    helper = np.zeros(3)
    helper[np.argmin(np.abs(center))] = 1.0
    first = np.cross(center, helper)
    first /= np.linalg.norm(first)
    return first, np.cross(center, first)


def _sample_von_mises_fisher(rng, center, concentration, count):
    """
    Inverse CDF of the cosine to the center, uniform angle around it
    """
    uniform = rng.uniform(0.0, 1.0, count)
    cosine = 1.0 + np.log(uniform + (1.0 - uniform) * np.exp(-2.0 * concentration)) / concentration
    cosine = np.clip(cosine, -1.0, 1.0)
    angle = rng.uniform(0.0, 2.0 * np.pi, count)
    first, second = _orthonormal_frame(center)
    radial = np.sqrt(1.0 - cosine ** 2)
    points = np.outer(cosine, center) + np.outer(radial * np.cos(angle), first) + \
        np.outer(radial * np.sin(angle), second)
    return points / np.linalg.norm(points, axis=1)[:, np.newaxis]


def sample_mixture(spec: MixtureSpec, n: int, seed, label: str = ''):
    """
    Draw n samples: component choice, then the component sampler
    :param spec: mixture
    :param n: sample count
    :param seed: seed or numpy Generator
    :param label: sample set label
    :return: SampleSet
    """
    if n <= 0:
        raise ValueError("Sampling needs a positive count, got {}".format(n))
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    choice = rng.choice(len(spec.components), size=n, p=spec.weights)
    if spec.domain is DomainId.circle:
        points = np.empty(n)
    else:
        points = np.empty((n, 3))
    for index, component in enumerate(spec.components):
        mask = choice == index
        count = int(mask.sum())
        if count == 0:
            continue
        if spec.domain is DomainId.circle:
            points[mask] = _sample_heat_kernel(rng, component.center, component.concentration, count)
        else:
            points[mask] = _sample_von_mises_fisher(rng, component.center, component.concentration, count)
    return SampleSet(spec.domain, points, label)


def von_mises_fisher_density(points, center, concentration):
    """
    kappa / (4 pi sinh kappa) exp(kappa <x, mu>) in overflow free form
    """
    cosines = np.clip(points @ center, -1.0, 1.0)
    scale = concentration / (2.0 * np.pi * -np.expm1(-2.0 * concentration))
    return scale * np.exp(concentration * (cosines - 1.0))


def mixture_density(spec: MixtureSpec, points):
    """
    Mixture density at domain points
    """
    points = as_points(spec.domain, points)
    values = np.zeros(points.shape[0])
    for component in spec.components:
        if spec.domain is DomainId.circle:
            values += component.weight * heat_kernel_circle(points, component.center, component.concentration)
        else:
            values += component.weight * von_mises_fisher_density(points, component.center,
                                                                  component.concentration)
    return values


def l1_separation(spec1: MixtureSpec, spec2: MixtureSpec, resolution: int = None):
    """
    Quadrature value of the integral of |g1 - g2|
    """
    if spec1.domain is not spec2.domain:
        raise ValueError("Mixtures on {} and {} cannot be compared".format(spec1.domain.value,
                                                                          spec2.domain.value))
    if resolution is None:
        resolution = 2000 if spec1.domain is DomainId.circle else 200
    grid = quadrature_grid(spec1.domain, resolution)
    return float(grid.integrate(np.abs(mixture_density(spec1, grid.nodes) - mixture_density(spec2, grid.nodes))))
