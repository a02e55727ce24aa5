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

from heatdist.base.run_config import parse_int_list
from heatdist.tool.tool_base import ToolBase
from heatdist.twosample.scenarios import smoothness_prior_study


class PriorStudy(ToolBase):
    """
    This tool compares fixed rule estimates with estimates flowed to the true smoothness
    """
    COMMAND = 'prior'

    def run(self):
        if self.config.get('basis', 'domain') != 'circle':
            raise ValueError("The smoothness prior study runs on the circle domain only")
        prior = self.config['prior']
        sizes = parse_int_list(prior['sizes'])
        if not sizes or min(sizes) < 1:
            raise ValueError("The prior study needs positive sample sizes, got {}".format(prior['sizes']))
        rows = smoothness_prior_study(None, self.basis(), sizes, prior['trials'], self.seed,
                                      prior['small_bandwidth'], self.config.get('estimation', 'plugin_constant'),
                                      self.logger)
        self.write_series('errors', pd.DataFrame(rows), 'sample size', 'L2 error')
        return {'rows': rows}, True
