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

from heatdist.basis.coefficients import CoeffVector
from heatdist.geodesic.section_geometry import EllipsoidSection
from heatdist.smoothing.smoothing_action import g_value

SECTION_POINT_TOLERANCE = 1e-8


def section_of(basis, kappa: float):
    """
    Section geometry on components 1..N of a basis
    """
    return EllipsoidSection(basis.eigenvalues[1:], kappa)


class SectionPoint:
    """
    Coefficient vector on the section S_kappa. c_0 is carried along and never
    enters the geometry.
    """

    def __init__(self, coeffs: CoeffVector, kappa: float):
        if not kappa > 0:
            raise ValueError("The smoothness level must be positive, got {}".format(kappa))
        if abs(g_value(coeffs) - kappa) > SECTION_POINT_TOLERANCE * kappa:
            raise ValueError("G={} is not on the section kappa={}".format(g_value(coeffs), kappa))
        self.coeffs = coeffs
        self.kappa = float(kappa)

    def __repr__(self):
        return "SectionPoint(kappa=%r,basis=%r)" % (self.kappa, self.coeffs.basis)

    @property
    def geometry(self):
        return self.coeffs.geometry

    @property
    def section(self):
        return section_of(self.coeffs.basis, self.kappa)

    def unit_normal(self):
        return self.section.unit_normal(self.geometry)


class TangentVector:
    """
    Vector of components 1..N orthogonal to the section normal at its base
    """

    def __init__(self, base: SectionPoint, components):
        values = np.array(components, dtype='float64')
        if values.shape != base.geometry.shape:
            raise ValueError("A tangent vector needs {} components, got {}".format(
                base.geometry.shape[0], values.shape))
        normal = base.unit_normal()
        if abs(np.dot(values, normal)) > SECTION_POINT_TOLERANCE * np.linalg.norm(values) + 1e-12:
            raise ValueError("The vector is not tangent to the section")
        values.setflags(write=False)
        self.base = base
        self.components = values

    def norm(self):
        return float(np.linalg.norm(self.components))


def project_to_section(c: CoeffVector, kappa: float):
    """
    Nearest point of S_kappa, normal iteration with radial scaling as fallback
    :param c: coefficients with a non-zero part 1..N
    :param kappa: smoothness level
    :return: SectionPoint
    """
    point, _ = section_of(c.basis, kappa).project(c.geometry)
    return SectionPoint(c.with_geometry(point), kappa)


def project_tangent(base: SectionPoint, w):
    """
    Tangent part w - <w, u> u of a vector of components 1..N
    """
    w = np.asarray(w, dtype='float64')
    if w.shape != base.geometry.shape:
        raise ValueError("Expected {} components, got {}".format(base.geometry.shape[0], w.shape))
    return TangentVector(base, base.section.project_tangent(base.geometry, w))
