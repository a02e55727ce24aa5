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
import numpy as np
import pandas as pd

from heatdist.basis.domain import DomainId, quadrature_grid, unit_to_lat_lon
from heatdist.estimation.kernel_density import kde, resolve_bandwidth
from heatdist.smoothing.smoothing_action import g_value
from heatdist.tool.tool_base import ToolBase

PLOT_POINTS = 512
PLOT_RESOLUTION = 64


class EstimateDensity(ToolBase):
    """
    This tool estimates the heat kernel density of one sample file
    """
    COMMAND = 'estimate'

    def run(self):
        samples = self.load_samples(self.files(1))[0]
        spec = self.basis()
        bandwidth = resolve_bandwidth(self.config.get('estimation', 'bandwidth'), samples,
                                      self.config.get('estimation', 'plugin_constant'))
        estimate = kde(samples, bandwidth, spec)
        self.logger.info("Estimated %s with bandwidth %.5f", estimate.label, bandwidth)
        if spec.domain is DomainId.circle:
            angles = -np.pi + 2.0 * np.pi * np.arange(PLOT_POINTS) / PLOT_POINTS
            density = estimate.evaluate(angles)
            if samples.wrap_map is not None:
                frame = pd.DataFrame({'value': samples.wrap_map.unwrap(angles),
                                      'density': density / samples.wrap_map.density_scale})
                self.write_series('density', frame, 'value', 'density')
            else:
                self.write_series('density', pd.DataFrame({'angle': angles, 'density': density}), 'angle [rad]',
                                  'density')
        else:
            grid = quadrature_grid(spec.domain, PLOT_RESOLUTION)
            lat, lon = unit_to_lat_lon(grid.nodes)
            frame = pd.DataFrame({'lat': lat, 'lon': lon, 'density': estimate.evaluate(grid.nodes)})
            self.write_series('density', frame, 'lon [deg]', 'lat [deg]')
        result = {
            'label': estimate.label,
            'sample_count': estimate.sample_count,
            'bandwidth': estimate.bandwidth,
            'truncation': estimate.truncation,
            'g_value': g_value(estimate.coeffs),
            'coefficients': estimate.coeffs.coeffs,
        }
        if samples.wrap_map is not None:
            result['wrap_interval'] = [samples.wrap_map.lower, samples.wrap_map.upper]
        return result, True
