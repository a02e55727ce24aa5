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
from heatdist.base.run_config import parse_int_list
from heatdist.datasource.hurdat2_client import Hurdat2Client
from heatdist.datasource.sample_file import write_samples
from heatdist.datasource.storm_track import filter_tracks, parse_stages, tracks_to_samples
from heatdist.tool.tool_base import ToolBase


class ExtractHurdat(ToolBase):
    """
    This tool turns a HURDAT2 file into sphere sample files, one per track stage
    """
    COMMAND = 'hurdat'

    def run(self):
        hurdat = self.config['hurdat']
        path = self.files(1)[0]
        client = Hurdat2Client({'strict': hurdat['strict']}, self.logger)
        with open(path) as stream:
            tracks = client.parse(stream)
        selected = filter_tracks(tracks, parse_int_list(hurdat['months']),
                                 (hurdat['lat_min'], hurdat['lat_max']), (hurdat['lon_min'], hurdat['lon_max']))
        self.logger.info("Selected %s of %s storms", len(selected), len(tracks))
        if not selected:
            raise ValueError("No storm of {} matches the month and region filter".format(path))
        stages = {}
        for stage in parse_stages(hurdat['stages']):
            excluded = []
            entry = {'excluded': excluded, 'samples': 0, 'file': None}
            try:
                samples = tracks_to_samples(selected, stage, excluded=excluded, logger=self.logger)
            except ValueError:
                self.logger.warning("No selected storm reaches stage %s", stage.name)
            else:
                entry['file'] = self.path('hurdat_{}.csv'.format(stage.name))
                entry['samples'] = len(samples)
                write_samples(samples, entry['file'])
                self.written.append(entry['file'])
            stages[stage.name] = entry
        result = {
            'storms': len(tracks),
            'selected': len(selected),
            'skipped': client.report,
            'stages': stages,
        }
        return result, True
