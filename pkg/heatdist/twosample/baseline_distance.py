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
import enum

import numpy as np

from heatdist.basis.coefficients import default_grid, synthesize
from heatdist.basis.domain import QuadratureGrid
from heatdist.estimation.kernel_density import DensityEstimate


class DistanceKind(enum.Enum):
    """
    Enum for baseline density distances
    """
    l2 = 'l2'
    chisq = 'chisq'
    bhattacharyya = 'bhattacharyya'
    fisher_rao = 'fisher_rao'


def clipped_density(values, weights):
    """
    Negative values set to zero, then renormalized to unit mass
    """
    values = np.clip(np.asarray(values, dtype='float64'), 0.0, None)
    mass = values @ weights
    if mass <= 0:
        raise ValueError("A density without positive mass cannot be compared")
    return values / mass


def density_distance(values1, values2, weights, kind: DistanceKind):
    """
    Distance of two densities given on the nodes of a quadrature rule
    """
    weights = np.asarray(weights, dtype='float64')
    values1 = np.asarray(values1, dtype='float64')
    values2 = np.asarray(values2, dtype='float64')
    if kind is DistanceKind.l2:
        return float(np.sqrt(((values1 - values2) ** 2) @ weights))
    first = clipped_density(values1, weights)
    second = clipped_density(values2, weights)
    if kind is DistanceKind.chisq:
        total = first + second
        ratio = np.divide((first - second) ** 2, total, out=np.zeros_like(total), where=total > 0)
        return float(ratio @ weights)
    # Hellinger form: 1 - integral sqrt(f1 f2) = H^2 / 2
    hellinger = float(np.sqrt(((np.sqrt(first) - np.sqrt(second)) ** 2) @ weights))
    if kind is DistanceKind.bhattacharyya:
        return 0.5 * hellinger ** 2
    return float(2.0 * np.arcsin(min(1.0, 0.5 * hellinger)))


def baseline_distance(f1: DensityEstimate, f2: DensityEstimate, kind: DistanceKind, grid: QuadratureGrid = None):
    """
    Baseline distance of two estimates synthesized on a shared quadrature grid
    :param f1: first estimate
    :param f2: second estimate
    :param kind: DistanceKind
    :param grid: quadrature grid, default_grid of the basis if None
    :return: distance
    """
    if f1.basis.domain is not f2.basis.domain:
        raise ValueError("Estimates on {} and {} cannot be compared".format(f1.basis.domain.value,
                                                                           f2.basis.domain.value))
    grid = default_grid(f1.basis) if grid is None else grid
    return density_distance(synthesize(f1.coeffs, grid.nodes), synthesize(f2.coeffs, grid.nodes),
                            grid.weights, DistanceKind(kind))
