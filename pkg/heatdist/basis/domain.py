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

MIN_RESOLUTION = 8
UNIT_TOLERANCE = 1e-9


class DomainId(enum.Enum):
    """
    Enum for the supported compact domains
    """
    circle = 'circle'
    sphere2 = 'sphere2'

    @property
    def area(self):
        """
        Surface area (length for the circle) of the domain
        """
        return 2.0 * np.pi if self is DomainId.circle else 4.0 * np.pi

    @staticmethod
    def parse(value):
        """
        Accept a DomainId or its name
        """
        if isinstance(value, DomainId):
            return value
        try:
            return DomainId(str(value).lower())
        except ValueError:
            raise ValueError("Unknown domain {}, only circle and sphere2 are supported".format(value))


def as_points(domain: DomainId, points):
    """
    Validate domain points and return them as float array
    :param domain: circle (angles) or sphere2 (unit 3-vectors)
    :param points: scalar, sequence or array of points
    :return: (n,) angles or (n, 3) unit vectors
    """
    values = np.asarray(points, dtype='float64')
    if domain is DomainId.circle:
        values = np.atleast_1d(values)
        if values.ndim != 1:
            raise ValueError("Circle points must be a sequence of angles")
        if not np.all(np.isfinite(values)):
            raise ValueError("Circle points must be finite angles")
        return values
    values = np.atleast_2d(values)
    if values.ndim != 2 or values.shape[1] != 3:
        raise ValueError("Sphere points must be unit 3-vectors")
    norms = np.linalg.norm(values, axis=1)
    if not np.all(np.abs(norms - 1.0) <= UNIT_TOLERANCE):
        raise ValueError("Sphere points must have unit norm (tolerance {})".format(UNIT_TOLERANCE))
    return values


def spherical_to_unit(theta, phi):
    """
    Colatitude/longitude in radians to unit vectors
    """
    theta = np.asarray(theta, dtype='float64')
    phi = np.asarray(phi, dtype='float64')
    sin_theta = np.sin(theta)
    return np.stack([sin_theta * np.cos(phi), sin_theta * np.sin(phi), np.cos(theta)], axis=-1)


def lat_lon_to_unit(lat, lon):
    """
    Latitude/longitude in degrees to unit vectors
    """
    return spherical_to_unit(np.radians(90.0 - np.asarray(lat, dtype='float64')),
                             np.radians(np.asarray(lon, dtype='float64')))


def unit_to_lat_lon(points):
    """
    Unit vectors to latitude/longitude in degrees
    """
    points = np.atleast_2d(points)
    lat = np.degrees(np.arcsin(np.clip(points[:, 2], -1.0, 1.0)))
    lon = np.degrees(np.arctan2(points[:, 1], points[:, 0]))
    return lat, lon


class QuadratureGrid:
    """
    Quadrature rule on a domain. Circle: uniform nodes. Sphere2: Gauss-Legendre nodes in
    cos(colatitude) times uniform longitudes, i.e. the exact integral of sin(theta) over each
    colatitude band, so products of harmonics up to the grid degree integrate exactly.
    """

    def __init__(self, domain: DomainId, resolution: int):
        if resolution < MIN_RESOLUTION:
            raise ValueError("The quadrature grid needs a resolution of at least {}".format(MIN_RESOLUTION))
        self.domain = domain
        self.resolution = int(resolution)
        if domain is DomainId.circle:
            self.theta = -np.pi + 2.0 * np.pi * np.arange(self.resolution) / self.resolution
            self.phi = None
            self.nodes = self.theta
            self.weights = np.full(self.resolution, 2.0 * np.pi / self.resolution)
        else:
            cos_theta, band_weights = np.polynomial.legendre.leggauss(self.resolution)
            self.theta = np.arccos(cos_theta)
            self.phi = 2.0 * np.pi * np.arange(self.resolution) / self.resolution
            theta_grid, phi_grid = np.meshgrid(self.theta, self.phi, indexing='ij')
            self.nodes = spherical_to_unit(theta_grid.ravel(), phi_grid.ravel())
            self.weights = np.repeat(band_weights * 2.0 * np.pi / self.resolution, self.resolution)
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    def __len__(self):
        return self.weights.shape[0]

    def integrate(self, values):
        """
        Quadrature sum of values given at the nodes
        """
        values = np.asarray(values, dtype='float64')
        if values.shape[-1] != len(self):
            raise ValueError("Got {} values for a grid with {} nodes".format(values.shape[-1], len(self)))
        return values @ self.weights


def quadrature_grid(domain, resolution: int):
    """
    Build the quadrature grid of a domain
    :param domain: DomainId or name
    :param resolution: nodes per axis, at least 8
    :return: QuadratureGrid
    """
    return QuadratureGrid(DomainId.parse(domain), resolution)
