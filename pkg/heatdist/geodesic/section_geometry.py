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
from numba import jit
import numpy as np
from scipy.interpolate import interp1d

PROJECTION_TOLERANCE = 1e-10
PROJECTION_MAX_ITER = 200
ANTIPODAL_RATIO = 1e-3
MIDPOINT_PERTURBATION = 1e-6


@jit(nopython=True)
def tangent_projection(point, eigenvalues, vector):
    """
    w - <w, u> u with u the unit normal lambda * c / |lambda * c|
    """
    normal = eigenvalues * point
    norm = np.sqrt(np.sum(normal * normal))
    if norm == 0.0:
        return vector.copy()
    unit = normal / norm
    return vector - np.sum(vector * unit) * unit


@jit(nopython=True)
def tangent_projection_path(path, eigenvalues, field):
    projected = np.empty_like(field)
    for tau in range(path.shape[0]):
        projected[tau] = tangent_projection(path[tau], eigenvalues, field[tau])
    return projected


@jit(nopython=True)
def section_projection(point, eigenvalues, kappa, tol, max_iter):
    """
    Newton steps along the unit normal until |G - kappa| <= tol * kappa,
    radial scaling when the iteration cap is hit
    :return: (projected point, True if the normal iteration converged)
    """
    current = point.copy()
    for _ in range(max_iter):
        g_current = np.sum(eigenvalues * current * current)
        if abs(g_current - kappa) <= tol * kappa:
            return current, True
        normal = eigenvalues * current
        norm = np.sqrt(np.sum(normal * normal))
        if norm == 0.0 or not np.isfinite(norm):
            break
        current = current + (kappa - g_current) / (2.0 * norm) * (normal / norm)
    g_current = np.sum(eigenvalues * current * current)
    if not np.isfinite(g_current) or g_current <= 0.0:
        current = point.copy()
        g_current = np.sum(eigenvalues * current * current)
    return current * np.sqrt(kappa / g_current), False


@jit(nopython=True)
def section_projection_path(path, eigenvalues, kappa, tol, max_iter):
    """
    Project the interior points of a path, endpoints are copied
    """
    projected = path.copy()
    for tau in range(1, path.shape[0] - 1):
        point, _ = section_projection(path[tau], eigenvalues, kappa, tol, max_iter)
        projected[tau] = point
    return projected


@jit(nopython=True)
def path_velocity(path, eigenvalues, segments):
    """
    Forward differences scaled by the segment count, projected to each tangent space
    """
    last = path.shape[0] - 1
    velocity = np.empty_like(path)
    for tau in range(last):
        velocity[tau] = tangent_projection(path[tau], eigenvalues, segments * (path[tau + 1] - path[tau]))
    velocity[last] = tangent_projection(path[last], eigenvalues, segments * (path[last] - path[last - 1]))
    return velocity


@jit(nopython=True)
def field_derivative(path, eigenvalues, field, segments):
    last = path.shape[0] - 1
    derivative = np.empty_like(field)
    for tau in range(last):
        derivative[tau] = tangent_projection(path[tau], eigenvalues, segments * (field[tau + 1] - field[tau]))
    derivative[last] = tangent_projection(path[last], eigenvalues, segments * (field[last] - field[last - 1]))
    return derivative


@jit(nopython=True)
def transport_step(point, eigenvalues, vector):
    """
    Move a tangent vector to the tangent space at point: project, then restore its norm
    """
    length = np.sqrt(np.sum(vector * vector))
    step = tangent_projection(point, eigenvalues, vector)
    norm = np.sqrt(np.sum(step * step))
    if norm > 0.0:
        return step * (length / norm)
    return step


@jit(nopython=True)
def field_integral(path, eigenvalues, field, segments):
    """
    u(0) = 0, u(tau + 1) = T(u(tau)) + P_{tau + 1}(w(tau)) / k with T the transport
    into the next tangent space
    """
    integral = np.zeros_like(field)
    for tau in range(path.shape[0] - 1):
        integral[tau + 1] = transport_step(path[tau + 1], eigenvalues, integral[tau]) + \
            tangent_projection(path[tau + 1], eigenvalues, field[tau]) / segments
    return integral


@jit(nopython=True)
def translate_backward(path, eigenvalues, vector):
    last = path.shape[0] - 1
    translated = np.empty_like(path)
    translated[last] = vector
    for tau in range(last - 1, -1, -1):
        translated[tau] = transport_step(path[tau], eigenvalues, translated[tau + 1])
    return translated


@jit(nopython=True)
def translate_forward(path, eigenvalues, vector):
    translated = np.empty_like(path)
    translated[0] = vector
    for tau in range(1, path.shape[0]):
        translated[tau] = transport_step(path[tau], eigenvalues, translated[tau - 1])
    return translated


def path_energy(path, segments):
    """
    E = 1/2 sum |velocity|^2 / k with velocity k * (alpha(tau + 1) - alpha(tau))
    """
    steps = np.diff(path, axis=0)
    return 0.5 * segments * float(np.sum(steps * steps))


def chordal_length(path):
    return float(np.sum(np.linalg.norm(np.diff(path, axis=0), axis=1)))


class EllipsoidSection:
    """
    The level set G(x) = sum lambda_n x_n^2 = kappa for positive eigenvalues, the
    coordinates being components 1..N of a coefficient vector
    """

    def __init__(self, eigenvalues, kappa: float):
        self.eigenvalues = np.ascontiguousarray(eigenvalues, dtype='float64')
        if self.eigenvalues.ndim != 1 or np.any(self.eigenvalues <= 0):
            raise ValueError("Section eigenvalues must be positive")
        if not kappa > 0:
            raise ValueError("The smoothness level must be positive, got {}".format(kappa))
        self.kappa = float(kappa)

    @property
    def dimension(self):
        return self.eigenvalues.shape[0]

    def g(self, point):
        point = np.asarray(point, dtype='float64')
        return float(np.sum(self.eigenvalues * point * point))

    def contains(self, point, tol: float = 1e-8):
        return abs(self.g(point) - self.kappa) <= tol * self.kappa

    def normal(self, point):
        return self.eigenvalues * np.asarray(point, dtype='float64')

    def unit_normal(self, point):
        normal = self.normal(point)
        return normal / np.linalg.norm(normal)

    def project(self, point, tol: float = PROJECTION_TOLERANCE, max_iter: int = PROJECTION_MAX_ITER):
        """
        Nearest point iteration onto the section
        :return: (point, converged flag of the normal iteration)
        """
        point = np.ascontiguousarray(point, dtype='float64')
        if point.shape != (self.dimension,):
            raise ValueError("Expected {} components, got {}".format(self.dimension, point.shape))
        if not np.any(point):
            raise ValueError("A zero vector cannot be projected to the section")
        return section_projection(point, self.eigenvalues, self.kappa, tol, max_iter)

    def project_tangent(self, point, vector):
        return tangent_projection(np.ascontiguousarray(point, dtype='float64'), self.eigenvalues,
                                  np.ascontiguousarray(vector, dtype='float64'))

    def project_path(self, path):
        return section_projection_path(np.ascontiguousarray(path), self.eigenvalues, self.kappa,
                                       PROJECTION_TOLERANCE, PROJECTION_MAX_ITER)

    def velocity(self, path, segments):
        return path_velocity(np.ascontiguousarray(path), self.eigenvalues, float(segments))

    def covariant_derivative(self, path, field, segments):
        return field_derivative(np.ascontiguousarray(path), self.eigenvalues,
                                np.ascontiguousarray(field, dtype='float64'), float(segments))

    def covariant_integral(self, path, field, segments):
        return field_integral(np.ascontiguousarray(path), self.eigenvalues,
                              np.ascontiguousarray(field, dtype='float64'), float(segments))

    def translate(self, path, vector, backward: bool):
        vector = np.ascontiguousarray(vector, dtype='float64')
        if backward:
            return translate_backward(np.ascontiguousarray(path), self.eigenvalues, vector)
        return translate_forward(np.ascontiguousarray(path), self.eigenvalues, vector)

    def initial_path(self, start, end, segments: int):
        """
        Chord between the endpoints projected to the section and resampled to
        uniform chordal spacing. When the chord passes the center the chord is
        bent through its midpoint, pushed along the first tangent coordinate of
        the start point and projected.
        """
        start = np.asarray(start, dtype='float64')
        end = np.asarray(end, dtype='float64')
        tau = np.linspace(0.0, 1.0, segments + 1)
        knots, values = [0.0, 1.0], [start, end]
        if self._chord_distance(start, end) <= ANTIPODAL_RATIO * np.linalg.norm(start):
            radius = np.sqrt(self.kappa / self.eigenvalues.min())
            midpoint = 0.5 * (start + end) + MIDPOINT_PERTURBATION * radius * self._first_tangent(start)
            knots, values = [0.0, 0.5, 1.0], [start, self.project(midpoint)[0], end]
        chord = interp1d(knots, np.array(values), axis=0, kind='linear')(tau)
        chord[0], chord[-1] = start, end
        path = self.project_path(chord)
        for _ in range(2):
            path = self.resample(path)
        return path

    @staticmethod
    def _chord_distance(start, end):
        """
        Distance of the segment [start, end] from the origin
        """
        direction = end - start
        length = float(np.dot(direction, direction))
        position = 0.0 if length == 0.0 else float(np.clip(-np.dot(start, direction) / length, 0.0, 1.0))
        return float(np.linalg.norm(start + position * direction))

    def resample(self, path):
        """
        Reparametrize by cumulative chordal length, then reproject the interior
        """
        steps = np.linalg.norm(np.diff(path, axis=0), axis=1)
        total = steps.sum()
        if total == 0.0:
            return path
        position = np.concatenate(([0.0], np.cumsum(steps))) / total
        keep = np.concatenate(([True], steps > 0.0))
        interpolated = interp1d(position[keep], path[keep], axis=0, kind='linear',
                                assume_sorted=True)(np.linspace(0.0, 1.0, path.shape[0]))
        interpolated[0], interpolated[-1] = path[0], path[-1]
        return self.project_path(interpolated)

    def _first_tangent(self, point):
        for axis in range(self.dimension):
            direction = np.zeros(self.dimension)
            direction[axis] = 1.0
            tangent = self.project_tangent(point, direction)
            norm = np.linalg.norm(tangent)
            if norm > 1e-6:
                return tangent / norm
        raise ValueError("No tangent direction at the given point")
