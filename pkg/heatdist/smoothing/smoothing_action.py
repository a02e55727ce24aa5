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
import logging

import numpy as np
from scipy.optimize import bisect

from heatdist.basis.coefficients import CoeffVector

DEBLUR_LIMIT = 1e12
SECTION_TOLERANCE = 1e-10
BRACKET_START = 1.0
MAX_BRACKET_STEPS = 200

LOGGER = logging.getLogger(__name__)


class DeblurError(ValueError):
    """
    Raised when a negative flow time would inflate coefficients beyond the deblur limit
    """


class SectionSolveError(ArithmeticError):
    """
    Raised when the flowed coefficients miss the smoothness level by more than the tolerance
    """


def g_value(c: CoeffVector):
    """
    First order roughness G(c) = sum_n lambda_n c_n^2
    """
    return float(np.sum(c.basis.eigenvalues * c.coeffs ** 2))


def min_flow_time(c: CoeffVector):
    """
    Most negative t with exp(-lambda_N t) <= 1e12
    """
    return -np.log(DEBLUR_LIMIT) / c.basis.eigenvalues[-1]


def check_flow_time(c: CoeffVector, t: float):
    if not np.isfinite(t):
        raise ValueError("The flow time must be finite, got {}".format(t))
    if t < 0 and -c.basis.eigenvalues[-1] * t > np.log(DEBLUR_LIMIT):
        raise DeblurError("Flow time {} inflates coefficients by more than {:g}".format(t, DEBLUR_LIMIT))


def flow(c: CoeffVector, t: float):
    """
    Heat flow action c_n -> exp(-lambda_n t) c_n
    :param c: coefficients
    :param t: flow time, positive blurs and negative deblurs
    :return: CoeffVector
    """
    check_flow_time(c, t)
    return c.with_coeffs(c.coeffs * np.exp(-c.basis.eigenvalues * t))


def solve_to_section(c: CoeffVector, kappa: float, tol: float = SECTION_TOLERANCE, logger=None):
    """
    Flow time t* with G(flow(c, t*)) = kappa, found by bisection on the strictly
    decreasing log G along the orbit
    :param c: coefficients of a non-uniform density
    :param kappa: smoothness level
    :param tol: relative tolerance on G
    :param logger: logger, module logger if None
    :return: (t*, flowed CoeffVector)
    """
    logger = LOGGER if logger is None else logger
    if not kappa > 0:
        raise ValueError("The smoothness level must be positive, got {}".format(kappa))
    eigenvalues = c.basis.eigenvalues
    weights = eigenvalues * c.coeffs ** 2
    initial = float(np.sum(weights))
    if initial <= 0:
        raise ValueError("A uniform density lies on no section")
    if abs(initial - kappa) <= tol * kappa:
        return 0.0, c
    log_kappa = np.log(kappa)

    def log_gap(t):
        with np.errstate(divide='ignore', over='ignore'):
            return np.log(np.sum(weights * np.exp(-2.0 * eigenvalues * t))) - log_kappa

    lower_limit = min_flow_time(c)
    low, high = max(-BRACKET_START, lower_limit), BRACKET_START
    for _ in range(MAX_BRACKET_STEPS):
        if log_gap(high) <= 0:
            break
        high *= 2.0
    for _ in range(MAX_BRACKET_STEPS):
        if log_gap(low) >= 0:
            break
        if low <= lower_limit:
            raise DeblurError("Reaching kappa {} from G={} needs deblurring beyond {:g}".format(
                kappa, initial, DEBLUR_LIMIT))
        low = max(2.0 * low, lower_limit)
    logger.debug("Section bracket [%s, %s] for kappa %s", low, high, kappa)
    if log_gap(low) == 0:
        t_star = low
    elif log_gap(high) == 0:
        t_star = high
    else:
        xtol = tol / (4.0 * eigenvalues[-1])
        t_star = bisect(log_gap, low, high, xtol=xtol, maxiter=500)
    flowed = flow(c, t_star)
    error = abs(g_value(flowed) - kappa) / kappa
    if error > tol:
        raise SectionSolveError("Section solve for kappa {} stopped at t={} with relative error {:g}, "
                                "needs {:g}".format(kappa, t_star, error, tol))
    return float(t_star), flowed
