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
import copy
import logging

import numpy as np
from scipy.optimize import brentq

from heatdist.basis.basis_spec import BasisSpec
from heatdist.basis.coefficients import analyze, default_grid
from heatdist.basis.domain import DomainId
from heatdist.estimation.kernel_density import DEFAULT_PLUGIN_CONSTANT, kde, plugin_bandwidth, resolve_bandwidth
from heatdist.geodesic.path_straightening import geodesic_between
from heatdist.smoothing.kappa_selection import FixedKappa, PairMin, Quantile, select_kappa
from heatdist.smoothing.smoothing_action import g_value, solve_to_section
from heatdist.twosample.baseline_distance import DistanceKind, baseline_distance
from heatdist.twosample.bootstrap_test import HypothesisTestConfig, bootstrap_test
from heatdist.twosample.mixture import MixtureSpec, l1_separation, mixture_density, sample_mixture

SEPARATIONS = (0.0, 0.06, 0.14, 0.17, 0.26)
BASE_MIXTURE = ((0.5, -1.0, 0.1), (0.5, 1.0, 0.1))
PRIOR_TRUTH = ((0.6, -1.5, 0.03), (0.4, 1.2, 0.05))
MAX_SHIFT = 2.0


def derived_seed(seed: int, *key):
    """
    Integer seed of a named sub stream
    """
    return int(np.random.SeedSequence(int(seed) & 0xFFFFFFFFFFFFFFFF, spawn_key=key).generate_state(1)[0])


def shifted_mixture(base: MixtureSpec, shift: float):
    """
    The base mixture with its last component moved by shift radians
    """
    shifted = copy.deepcopy(base)
    component = shifted.components[-1]
    component.center = float(np.angle(np.exp(1j * (component.center + shift))))
    return shifted


def separation_scenarios(targets=SEPARATIONS, base: MixtureSpec = None):
    """
    Circle mixture pairs whose L1 separations match the targets
    :return: list of (spec1, spec2, separation)
    """
    base = MixtureSpec(DomainId.circle, BASE_MIXTURE) if base is None else base
    scenarios = []
    for target in targets:
        if target <= 0:
            scenarios.append((base, base, 0.0))
            continue
        shift = brentq(lambda value: l1_separation(base, shifted_mixture(base, value)) - target, 0.0, MAX_SHIFT,
                       xtol=1e-10)
        other = shifted_mixture(base, shift)
        scenarios.append((base, other, l1_separation(base, other)))
    return scenarios


def power_curve(scenarios, config: HypothesisTestConfig, trials: int, sample_size: int, kappa_factor: float = 1.0,
                logger=None):
    """
    Rejection fraction of the bootstrap test per scenario
    :param scenarios: list of (spec1, spec2, separation)
    :param config: test settings, its seed is the master seed
    :param trials: Monte-Carlo trials per scenario
    :param sample_size: samples per set
    :param kappa_factor: multiplies the PairMin level, values above 1 over-smooth
    :param logger: logger
    :return: list of dict rows
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    rows = []
    for index, (spec1, spec2, separation) in enumerate(scenarios):
        rejections = 0
        converged = True
        for trial in range(trials):
            s1 = sample_mixture(spec1, sample_size, derived_seed(config.seed, index, trial, 1))
            s2 = sample_mixture(spec2, sample_size, derived_seed(config.seed, index, trial, 2))
            trial_config = copy.copy(config)
            trial_config.seed = derived_seed(config.seed, index, trial, 0)
            if kappa_factor != 1.0:
                first = kde(s1, resolve_bandwidth(config.bandwidth, s1, config.plugin_constant), config.basis)
                second = kde(s2, resolve_bandwidth(config.bandwidth, s2, config.plugin_constant), config.basis)
                level = select_kappa([g_value(first.coeffs), g_value(second.coeffs)], config.kappa)
                trial_config.kappa = FixedKappa(kappa_factor * level)
            result = bootstrap_test(s1, s2, trial_config, logger)
            rejections += int(result.reject)
            converged = converged and result.converged
        logger.info("Scenario %s separation %.3f rejection %s/%s", index, separation, rejections, trials)
        rows.append({'scenario': index, 'l1_separation': separation,
                     'rejection_fraction': rejections / float(trials), 'converged': converged})
    return rows


def smoothness_prior_study(truth: MixtureSpec, basis: BasisSpec, sizes, trials: int, seed: int,
                           small_bandwidth: float = 0.005, plugin_constant: float = DEFAULT_PLUGIN_CONSTANT,
                           logger=None):
    """
    Mean L2 error of a plug-in estimate and of a small bandwidth estimate flowed to the
    true G-level, per sample size
    :return: list of dict rows
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    truth = MixtureSpec(DomainId.circle, PRIOR_TRUTH) if truth is None else truth
    grid = default_grid(basis)
    true_coeffs = analyze(basis, mixture_density(truth, grid.nodes), grid).coeffs
    true_level = float(np.sum(basis.eigenvalues * true_coeffs ** 2))
    rows = []
    for size in sizes:
        fixed_errors, prior_errors = [], []
        for trial in range(trials):
            samples = sample_mixture(truth, size, derived_seed(seed, size, trial))
            fixed = kde(samples, plugin_bandwidth(samples, plugin_constant), basis)
            _, flowed = solve_to_section(kde(samples, small_bandwidth, basis).coeffs, true_level, logger=logger)
            fixed_errors.append(np.linalg.norm(fixed.coeffs.coeffs - true_coeffs))
            prior_errors.append(np.linalg.norm(flowed.coeffs - true_coeffs))
        rows.append({'sample_size': int(size), 'fixed_rule_error': float(np.mean(fixed_errors)),
                     'smoothness_prior_error': float(np.mean(prior_errors))})
        logger.info("Size %s fixed %.5f prior %.5f", size, rows[-1]['fixed_rule_error'],
                    rows[-1]['smoothness_prior_error'])
    return rows


def relative_spread(values):
    values = np.asarray(values, dtype='float64')
    return float((values.max() - values.min()) / values.mean())


def bandwidth_grid_study(s1, s2, basis: BasisSpec, bandwidths, kappa=None, geodesic: dict = None, logger=None):
    """
    d_kappa and Fisher-Rao distance over a grid of bandwidth pairs
    :param kappa: level or kappa rule, PairMin if None. PairMin uses the estimates at the smallest
        bandwidth, Quantile the G-values of every grid estimate
    :return: dict with both matrices and their relative spreads
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    first = [kde(s1, bandwidth, basis) for bandwidth in bandwidths]
    second = [kde(s2, bandwidth, basis) for bandwidth in bandwidths]
    rule = PairMin() if kappa is None else kappa
    if isinstance(rule, (int, float)):
        rule = FixedKappa(rule)
    if isinstance(rule, Quantile):
        g_values = [g_value(estimate.coeffs) for estimate in first + second]
    else:
        smallest = int(np.argmin(bandwidths))
        g_values = [g_value(first[smallest].coeffs), g_value(second[smallest].coeffs)]
    kappa = select_kappa(g_values, rule)
    logger.info("Grid smoothness level %s from rule %s", kappa, rule.NAME)
    d_matrix = np.empty((len(bandwidths), len(bandwidths)))
    fisher_rao = np.empty_like(d_matrix)
    converged = True
    for row, f1 in enumerate(first):
        for column, f2 in enumerate(second):
            path = geodesic_between(f1, f2, kappa, geodesic, logger)
            converged = converged and path.converged
            d_matrix[row, column] = path.length
            fisher_rao[row, column] = baseline_distance(f1, f2, DistanceKind.fisher_rao)
    return {
        'bandwidths': list(bandwidths),
        'kappa': float(kappa),
        'kappa_rule': rule.NAME,
        'd_kappa': d_matrix.tolist(),
        'fisher_rao': fisher_rao.tolist(),
        'd_kappa_spread': relative_spread(d_matrix),
        'fisher_rao_spread': relative_spread(fisher_rao),
        'converged': converged,
    }
