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
from heatdist.basis.domain import QuadratureGrid, quadrature_grid


class CoeffVector:
    """
    Spectral coefficients c_0..c_N of a function in a BasisSpec
    """

    def __init__(self, basis: BasisSpec, coeffs):
        values = np.array(coeffs, dtype='float64')
        if values.ndim != 1 or values.shape[0] != basis.size:
            raise ValueError("The basis needs {} coefficients, got {}".format(basis.size, values.shape))
        values.setflags(write=False)
        self.basis = basis
        self.coeffs = values

    def __len__(self):
        return self.coeffs.shape[0]

    def __repr__(self):
        return "CoeffVector(basis=%r,c0=%r)" % (self.basis, self.coeffs[0])

    @property
    def geometry(self):
        """
        Components 1..N, the part constrained by the smoothness functional
        """
        return self.coeffs[1:]

    def with_coeffs(self, coeffs):
        return CoeffVector(self.basis, coeffs)

    def with_geometry(self, geometry):
        """
        Same c_0, new components 1..N
        """
        return CoeffVector(self.basis, np.concatenate(([self.coeffs[0]], geometry)))

    def renormalized(self):
        """
        Reset c_0 so that the synthesized function integrates to one
        """
        values = self.coeffs.copy()
        values[0] = self.basis.constant
        return CoeffVector(self.basis, values)


def default_grid(spec: BasisSpec):
    """
    Quadrature grid with at least four nodes per axis and degree
    """
    return quadrature_grid(spec.domain, max(100, 4 * spec.max_degree))


def analyze(spec: BasisSpec, values, grid: QuadratureGrid = None):
    """
    L2 projection of function values on the basis under the quadrature rule
    :param spec: basis
    :param values: function values at grid nodes
    :param grid: quadrature grid, default_grid(spec) if None
    :return: CoeffVector
    """
    grid = default_grid(spec) if grid is None else grid
    if grid.domain is not spec.domain:
        raise ValueError("Grid domain {} does not match basis domain {}".format(grid.domain, spec.domain))
    values = np.asarray(values, dtype='float64')
    if values.shape != (len(grid),):
        raise ValueError("Got {} values for a grid with {} nodes".format(values.shape, len(grid)))
    if grid.resolution < 2 * spec.max_degree + 1:
        raise ValueError("The grid needs a resolution of at least {} for degree {}".format(
            2 * spec.max_degree + 1, spec.max_degree))
    return CoeffVector(spec, spec.evaluate(grid.nodes) @ (grid.weights * values))


def synthesize(c: CoeffVector, points, renormalize: bool = False):
    """
    Evaluate sum c_n phi_n at points
    :param c: coefficients
    :param points: domain points
    :param renormalize: reset c_0 first so the function integrates to one
    :return: array of values
    """
    if renormalize:
        c = c.renormalized()
    return c.coeffs @ c.basis.evaluate(points)
