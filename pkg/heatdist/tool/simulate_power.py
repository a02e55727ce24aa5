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

from heatdist.tool.run_test import hypothesis_config_from
from heatdist.tool.tool_base import ToolBase
from heatdist.twosample.scenarios import power_curve, separation_scenarios


class SimulatePower(ToolBase):
    """
    This tool reproduces the power curve protocol on circle mixtures
    """
    COMMAND = 'simulate'

    def run(self):
        if self.config.get('basis', 'domain') != 'circle':
            raise ValueError("The simulation runs on the circle domain only")
        simulate = self.config['simulate']
        config = hypothesis_config_from(self.config, self.basis())
        rows = power_curve(separation_scenarios(), config, simulate['trials'],
                           simulate['sample_size'], simulate['kappa_factor'], self.logger)
        frame = pd.DataFrame(rows, columns=['scenario', 'l1_separation', 'rejection_fraction'])
        self.write_series('power', frame, 'L1 separation', 'rejection fraction')
        return {'rows': rows}, all(row['converged'] for row in rows)
