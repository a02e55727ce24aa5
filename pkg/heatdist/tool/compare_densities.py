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
import pandas as pd

from heatdist.estimation.kernel_density import kde, resolve_bandwidth
from heatdist.geodesic.path_straightening import geodesic_between
from heatdist.smoothing.kappa_selection import parse_kappa_rule, select_kappa
from heatdist.smoothing.smoothing_action import g_value
from heatdist.tool.tool_base import ToolBase
from heatdist.twosample.baseline_distance import DistanceKind, baseline_distance
from heatdist.twosample.ks_test import ks_test_1d


class CompareDensities(ToolBase):
    """
    This tool computes d_kappa and the baseline distances of two sample files
    """
    COMMAND = 'compare'

    def estimates(self, samples):
        estimation = self.config['estimation']
        return [kde(item, resolve_bandwidth(estimation['bandwidth'], item, estimation['plugin_constant']),
                    self.basis()) for item in samples]

    def kappa(self, estimates):
        smoothing = self.config['smoothing']
        strategy = parse_kappa_rule(smoothing['kappa'], smoothing['quantile_q'])
        return select_kappa([g_value(estimate.coeffs) for estimate in estimates], strategy)

    def run(self):
        s1, s2 = self.load_samples(self.files(2))
        f1, f2 = self.estimates([s1, s2])
        kappa = self.kappa([f1, f2])
        self.logger.info("Compare %s and %s on kappa %.6g", f1.label, f2.label, kappa)
        path = geodesic_between(f1, f2, kappa, self.geodesic_arguments(), self.logger,
                                self.config.get('smoothing', 'tolerance'))
        result = {
            'd_kappa': path.length,
            'kappa': kappa,
            'g_values': [g_value(f1.coeffs), g_value(f2.coeffs)],
            'bandwidths': [f1.bandwidth, f2.bandwidth],
            'geodesic': {
                'iterations': path.iterations,
                'energy': path.energy,
                'gradient_norm': path.gradient_norm,
                'stop_reason': path.stop_reason,
                'segments': path.segments,
            },
            'baselines': {kind.value: baseline_distance(f1, f2, kind) for kind in DistanceKind},
        }
        if s1.wrap_map is not None:
            statistic, p_value = ks_test_1d(s1, s2)
            result['ks'] = {'statistic': statistic, 'p_value': p_value}
        self.write_series('energy', pd.DataFrame({'iteration': range(len(path.energy_log)),
                                                  'energy': path.energy_log}), 'iteration', 'path energy')
        if not path.converged:
            self.logger.warning("Geodesic stopped by %s with gradient norm %.3g", path.stop_reason,
                                path.gradient_norm)
        return result, path.converged
