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

RANGE_TOLERANCE = 1e-12


@jit(nopython=True)
def legendre_table(max_order, x):
    """
    Legendre polynomials P_0..P_max_order at x by the three-term recurrence
    (l) P_l = (2l - 1) x P_{l-1} - (l - 1) P_{l-2}
    :param max_order: highest order
    :param x: float64 array with values in [-1, 1]
    :return: array of shape (max_order + 1, len(x))
    """
    table = np.empty((max_order + 1, x.shape[0]))
    table[0, :] = 1.0
    if max_order == 0:
        return table
    table[1, :] = x
    for order in range(2, max_order + 1):
        table[order, :] = ((2 * order - 1) * x * table[order - 1, :] -
                           (order - 1) * table[order - 2, :]) / order
    return table


def check_arguments(x):
    values = np.atleast_1d(np.asarray(x, dtype='float64'))
    if np.any(np.abs(values) > 1.0 + RANGE_TOLERANCE):
        raise ValueError("Legendre polynomials are evaluated on [-1, 1] only")
    return np.clip(values, -1.0, 1.0)


def legendre(m: int, x):
    """
    Legendre polynomial of order m
    :param m: nonnegative order
    :param x: scalar or array in [-1, 1]
    :return: P_m(x) with the shape of x
    """
    if int(m) != m or m < 0:
        raise ValueError("The Legendre order must be a nonnegative integer, got {}".format(m))
    values = check_arguments(x)
    result = legendre_table(int(m), values.ravel())[int(m)]
    if np.ndim(x) == 0:
        return float(result[0])
    return result.reshape(np.shape(x))
