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
import logging

import numpy as np

from heatdist.basis.coefficients import CoeffVector
from heatdist.estimation.kernel_density import DensityEstimate
from heatdist.geodesic.section_geometry import EllipsoidSection, chordal_length, path_energy
from heatdist.geodesic.section_point import SectionPoint, TangentVector, section_of
from heatdist.smoothing.smoothing_action import SECTION_TOLERANCE, solve_to_section

KAPPA_MATCH_TOLERANCE = 1e-8


class Direction(enum.Enum):
    """
    Direction of a parallel translation along a path
    """
    forward = 0
    backward = 1


class GeodesicPath:
    """
    Discrete path alpha(0..k) on S_kappa. alpha holds components 1..N of every point,
    c0 and basis are set when the path joins coefficient vectors.
    """

    def __init__(self, kappa: float, alpha, energy: float, iterations: int = 0, converged: bool = True,
                 gradient_norm: float = 0.0, energy_log=None, stop_reason: str = 'gradient',
                 c0: float = None, basis=None):
        self.kappa = kappa
        self.alpha = np.asarray(alpha, dtype='float64')
        self.energy = energy
        self.length = chordal_length(self.alpha)
        self.iterations = iterations
        self.converged = converged
        self.gradient_norm = gradient_norm
        self.energy_log = [energy] if energy_log is None else energy_log
        self.stop_reason = stop_reason
        self.c0 = c0
        self.basis = basis

    def __repr__(self):
        return "GeodesicPath(kappa=%r,k=%r,length=%r,converged=%r)" % (
            self.kappa, self.segments, self.length, self.converged)

    @property
    def segments(self):
        return self.alpha.shape[0] - 1

    @property
    def section(self):
        if self.basis is None:
            raise ValueError("The path is not attached to a basis")
        return section_of(self.basis, self.kappa)

    @property
    def points(self):
        """
        Path points as SectionPoints
        """
        if self.basis is None:
            raise ValueError("The path is not attached to a basis")
        return [SectionPoint(CoeffVector(self.basis, np.concatenate(([self.c0], row))), self.kappa)
                for row in self.alpha]


class PathStraightening:
    """
    Path straightening on the section: gradient descent of the path energy with the
    gradient built from the covariant integral of the velocity and its backward
    parallel translation
    """
    NAME = 'PathStraightening'
    SEGMENTS = 30
    STEP = 0.1
    MAX_ITER = 200
    GRAD_TOL = 1e-6

    ARGUMENTS = {
        'segments': SEGMENTS,
        'step': STEP,
        'max_iter': MAX_ITER,
        'grad_tol': GRAD_TOL,
        'min_step': 1e-8,
        'energy_tol': 1e-12,
    }

    def __init__(self, arguments: dict, logger: logging.Logger):
        settings = dict(PathStraightening.ARGUMENTS)
        if arguments is not None:
            settings.update(arguments)
        self.segments = int(settings['segments'])
        self.step = float(settings['step'])
        self.max_iter = int(settings['max_iter'])
        self.grad_tol = float(settings['grad_tol'])
        self.min_step = float(settings['min_step'])
        self.energy_tol = float(settings['energy_tol'])
        self.logger = logger
        if self.segments < 2:
            raise ValueError("Path straightening needs at least 2 segments, got {}".format(self.segments))
        if self.step <= 0:
            raise ValueError("The step size must be positive, got {}".format(self.step))

    def gradient(self, section: EllipsoidSection, alpha):
        """
        Energy gradient field w(tau) = u(tau) - tau * u~(tau)
        """
        segments = alpha.shape[0] - 1
        velocity = section.velocity(alpha, segments)
        integral = section.covariant_integral(alpha, velocity, segments)
        translated = section.translate(alpha, integral[-1], backward=True)
        tau = np.linspace(0.0, 1.0, segments + 1)[:, np.newaxis]
        gradient = integral - tau * translated
        gradient[0] = 0.0
        gradient[-1] = 0.0
        return gradient

    def line_search(self, section: EllipsoidSection, alpha, gradient, energy: float, step: float):
        """
        Halve the step until the projected update does not increase the energy
        :return: (candidate path, its energy, accepted step)
        """
        segments = alpha.shape[0] - 1
        candidate, candidate_energy = None, np.inf
        while step >= self.min_step * self.step:
            candidate = section.project_path(alpha - step * gradient)
            candidate_energy = path_energy(candidate, segments)
            if candidate_energy <= energy:
                break
            step *= 0.5
            self.logger.debug("Energy increase, step halved to %s", step)
        return candidate, candidate_energy, step

    def straighten_arrays(self, section: EllipsoidSection, start, end):
        """
        Geodesic between two points of an EllipsoidSection
        :param section: section geometry
        :param start: components of the first endpoint
        :param end: components of the second endpoint
        :return: GeodesicPath
        """
        start = np.asarray(start, dtype='float64')
        end = np.asarray(end, dtype='float64')
        segments = self.segments
        if np.array_equal(start, end):
            alpha = np.tile(start, (segments + 1, 1))
            return GeodesicPath(section.kappa, alpha, 0.0, stop_reason='identical')
        alpha = section.initial_path(start, end, segments)
        energy = path_energy(alpha, segments)
        energy_log = [energy]
        tolerance = self.grad_tol * np.sqrt(section.kappa)
        step = self.step
        gradient_norm = np.inf
        stop_reason = 'max_iter'
        iterations = 0
        for iterations in range(self.max_iter):
            gradient = self.gradient(section, alpha)
            gradient_norm = float(np.sqrt(np.sum(gradient * gradient) / segments))
            if gradient_norm <= tolerance:
                stop_reason = 'gradient'
                break
            candidate, candidate_energy, step = self.line_search(section, alpha, gradient, energy, step)
            if candidate_energy > energy:
                stop_reason = 'stalled'
                break
            step = min(2.0 * step, self.step)
            decrease = energy - candidate_energy
            alpha, energy = candidate, candidate_energy
            energy_log.append(energy)
            self.logger.debug("Iteration %s energy %s gradient %s", iterations, energy, gradient_norm)
            if decrease <= self.energy_tol * energy:
                stop_reason = 'energy'
                iterations += 1
                break
        else:
            iterations = self.max_iter
        converged = stop_reason in ('gradient', 'energy')
        if not converged:
            self.logger.warning("Path straightening stopped (%s) with gradient norm %s after %s iterations",
                                stop_reason, gradient_norm, iterations)
        alpha[0], alpha[-1] = start, end
        return GeodesicPath(section.kappa, alpha, energy, iterations, converged, gradient_norm, energy_log,
                            stop_reason)

    def straighten(self, p1: SectionPoint, p2: SectionPoint):
        """
        Geodesic between two section points, c_0 of the first point is carried
        """
        p1.coeffs.basis.check_compatible(p2.coeffs.basis)
        if abs(p1.kappa - p2.kappa) > KAPPA_MATCH_TOLERANCE * max(p1.kappa, p2.kappa):
            raise ValueError("The points lie on different sections: {} vs {}".format(p1.kappa, p2.kappa))
        path = self.straighten_arrays(p1.section, p1.geometry, p2.geometry)
        path.c0 = float(p1.coeffs.coeffs[0])
        path.basis = p1.coeffs.basis
        return path


def _field_array(path: GeodesicPath, field):
    if len(field) and isinstance(field[0], TangentVector):
        values = np.array([vector.components for vector in field])
    else:
        values = np.asarray(field, dtype='float64')
    if values.shape != path.alpha.shape:
        raise ValueError("The field needs {} vectors of {} components, got {}".format(
            path.alpha.shape[0], path.alpha.shape[1], values.shape))
    return values


def _path_section(path: GeodesicPath):
    if path.basis is not None:
        return path.section
    raise ValueError("The path is not attached to a basis")


def covariant_derivative(path: GeodesicPath, field, section: EllipsoidSection = None):
    """
    Forward differences of a field along the path, scaled by k and projected to each tangent space
    :return: array (k + 1, N)
    """
    section = _path_section(path) if section is None else section
    return section.covariant_derivative(path.alpha, _field_array(path, field), path.segments)


def covariant_integral(path: GeodesicPath, field, section: EllipsoidSection = None):
    """
    Field u with u(0) = 0 whose covariant derivative is the given field
    :return: array (k + 1, N)
    """
    section = _path_section(path) if section is None else section
    return section.covariant_integral(path.alpha, _field_array(path, field), path.segments)


def parallel_translate(path: GeodesicPath, v, direction: Direction, section: EllipsoidSection = None):
    """
    Translate a tangent vector from the start (forward) or the end (backward) along the path
    :return: array (k + 1, N)
    """
    section = _path_section(path) if section is None else section
    anchor = path.alpha[0] if direction is Direction.forward else path.alpha[-1]
    if isinstance(v, TangentVector):
        if not np.allclose(v.base.geometry, anchor, rtol=0.0, atol=1e-12 * max(1.0, np.abs(anchor).max())):
            raise ValueError("The tangent vector is not based at the path {}".format(
                'start' if direction is Direction.forward else 'end'))
        v = v.components
    v = np.asarray(v, dtype='float64')
    if v.shape != anchor.shape:
        raise ValueError("Expected {} components, got {}".format(anchor.shape[0], v.shape))
    return section.translate(path.alpha, v, backward=direction is Direction.backward)


def path_straighten(p1: SectionPoint, p2: SectionPoint, segments: int = PathStraightening.SEGMENTS,
                    step: float = PathStraightening.STEP, max_iter: int = PathStraightening.MAX_ITER,
                    grad_tol: float = PathStraightening.GRAD_TOL, logger=None):
    """
    Geodesic between two section points
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    arguments = {'segments': segments, 'step': step, 'max_iter': max_iter, 'grad_tol': grad_tol}
    return PathStraightening(arguments, logger).straighten(p1, p2)


def path_length(path: GeodesicPath):
    """
    Chordal length sum |alpha(i + 1) - alpha(i)| over components 1..N
    """
    return chordal_length(path.alpha)


def geodesic_between(f1: DensityEstimate, f2: DensityEstimate, kappa: float, arguments: dict = None,
                     logger=None, tol: float = SECTION_TOLERANCE):
    """
    Flow both estimates to S_kappa and straighten the path between them
    :return: GeodesicPath
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    f1.basis.check_compatible(f2.basis)
    _, first = solve_to_section(f1.coeffs, kappa, tol, logger)
    _, second = solve_to_section(f2.coeffs, kappa, tol, logger)
    return PathStraightening(arguments, logger).straighten(SectionPoint(first, kappa),
                                                           SectionPoint(second, kappa))


def d_kappa(f1: DensityEstimate, f2: DensityEstimate, kappa: float, arguments: dict = None, logger=None):
    """
    Geodesic distance of two estimates on the section S_kappa
    :param f1: first estimate
    :param f2: second estimate on the same basis
    :param kappa: smoothness level
    :param arguments: PathStraightening arguments
    :param logger: logger
    :return: distance
    """
    return path_length(geodesic_between(f1, f2, kappa, arguments, logger))
