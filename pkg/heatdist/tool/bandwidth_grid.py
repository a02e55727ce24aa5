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

from heatdist.base.run_config import parse_float_list
from heatdist.smoothing.kappa_selection import parse_kappa_rule
from heatdist.tool.tool_base import ToolBase
from heatdist.twosample.scenarios import bandwidth_grid_study


class BandwidthGrid(ToolBase):
    """
    This tool compares one sample pair over a grid of bandwidth pairs
    """
    COMMAND = 'bandwidth-grid'

    def run(self):
        s1, s2 = self.load_samples(self.files(2))
        bandwidths = parse_float_list(self.config.get('estimation', 'bandwidth_grid'))
        if not bandwidths:
            raise ValueError("The bandwidth grid is empty")
        strategy = parse_kappa_rule(self.config.get('smoothing', 'kappa'), self.config.get('smoothing', 'quantile_q'))
        result = bandwidth_grid_study(s1, s2, self.basis(), bandwidths, strategy, self.geodesic_arguments(),
                                      self.logger)
        self.logger.info("Relative spread d_kappa %.4f fisher rao %.4f", result['d_kappa_spread'],
                         result['fisher_rao_spread'])
        for name in ('d_kappa', 'fisher_rao'):
            frame = pd.DataFrame(result[name], columns=['h2={:g}'.format(value) for value in bandwidths])
            frame.insert(0, 'h1', bandwidths)
            self.write_series(name, frame, 'bandwidth f1', 'bandwidth f2')
        return result, result['converged']
