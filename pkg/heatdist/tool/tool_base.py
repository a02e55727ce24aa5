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
import datetime
import enum
import json
import logging
import os

import numpy as np
import yaml

from heatdist.base.heat_base import HeatBase
from heatdist.base.run_config import RunConfig
from heatdist.base.version import SCHEMA_VERSION, VERSION
from heatdist.basis.basis_spec import make_basis
from heatdist.datasource.sample_file import is_real_line, read_frame, samples_from_frame
from heatdist.smoothing.smoothing_action import SectionSolveError
from heatdist.wrap.wrap_map import detect_boundary, wrap_samples

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NOT_CONVERGED = 2

# key -> type of the result document body
RESULT_SCHEMA = {
    'schema_version': str,
    'command': str,
    'config': dict,
    'seed': int,
    'result': dict,
    'converged': bool,
}


def to_builtin(value):
    """
    Convert numpy values, enums and tuples into JSON types
    """
    if isinstance(value, dict):
        return {str(key): to_builtin(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_builtin(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_builtin(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, enum.Enum):
        return value.value
    return value


def validate_document(document: dict):
    """
    Check a result body against RESULT_SCHEMA
    """
    missing = [key for key in RESULT_SCHEMA if key not in document]
    extra = [key for key in document if key not in RESULT_SCHEMA]
    if missing or extra:
        raise ValueError("Result document keys do not match the schema, missing {} extra {}".format(missing, extra))
    for key, value_type in RESULT_SCHEMA.items():
        value = document[key]
        if (value_type is int and isinstance(value, bool)) or not isinstance(value, value_type):
            raise ValueError("Result field {} needs type {}, got {!r}".format(key, value_type.__name__, value))
    if document['schema_version'] != SCHEMA_VERSION:
        raise ValueError("Unsupported schema version {}".format(document['schema_version']))
    return document


class ToolBase:
    """
    Base class of the command tools. A tool reads its inputs, runs the computation
    and writes a JSON result with CSV plot series into the output directory.
    """
    COMMAND = None

    def __init__(self, config: RunConfig, arguments: dict, logger: logging.Logger):
        self.config = config
        self.arguments = arguments
        self.logger = logger
        self.output = arguments.get('output') or config.get('output', 'directory')
        self.seed = int(config.get('test', 'seed'))
        self.written = []

    def run(self):
        """
        Execute the command
        :return: (result dict, converged flag)
        """
        raise NotImplementedError

    def build(self):
        """
        Run the tool and write its outputs
        :return: exit code
        """
        try:
            result, converged = self.run()
            self.write_result(result, converged)
        except ValueError:
            self.logger.exception("Command {} failed.".format(self.COMMAND))
            return EXIT_INVALID
        except SectionSolveError:
            self.logger.exception("Command {} did not reach the smoothness level.".format(self.COMMAND))
            return EXIT_NOT_CONVERGED
        if not converged:
            self.logger.warning("Command %s finished without numerical convergence", self.COMMAND)
            return EXIT_NOT_CONVERGED
        return EXIT_OK

    def basis(self):
        return make_basis(self.config.get('basis', 'domain'), self.config.max_degree())

    def files(self, count: int):
        files = list(self.arguments.get('files') or [])
        if len(files) != count:
            raise ValueError("Command {} needs {} sample files, got {}".format(self.COMMAND, count, len(files)))
        return files

    def load_samples(self, paths):
        """
        Read sample files, real line values are wrapped onto the circle with a shared cut point
        :return: list of SampleSet
        """
        domain = self.config.get('basis', 'domain')
        frames = [read_frame(path) for path in paths]
        real_line = [is_real_line(frame) for frame in frames]
        if any(real_line):
            if not all(real_line) or domain != 'circle':
                raise ValueError("Real line sample files need the circle domain and must not be mixed")
            wrap_map = detect_boundary([frame['value'].to_numpy(dtype='float64') for frame in frames])
            self.logger.info("Wrap real line samples with %s", wrap_map)
            return [wrap_samples(frame['value'].to_numpy(dtype='float64'), wrap_map, path)
                    for frame, path in zip(frames, paths)]
        return [samples_from_frame(frame, domain, path) for frame, path in zip(frames, paths)]

    def geodesic_arguments(self):
        return dict(self.config['geodesic'])

    def path(self, name: str):
        if not os.path.isdir(self.output):
            os.makedirs(self.output)
        return os.path.join(self.output, name)

    def document(self, result: dict, converged: bool):
        return validate_document(to_builtin({
            'schema_version': SCHEMA_VERSION,
            'command': self.COMMAND,
            'config': self.config.as_dict(),
            'seed': self.seed,
            'result': result,
            'converged': bool(converged),
        }))

    def write_result(self, result: dict, converged: bool):
        """
        Write <command>.json with the result body and <command>.meta.json with the
        timestamp, optionally <command>.yml
        """
        document = self.document(result, converged)
        with open(self.path('{}.json'.format(self.COMMAND)), 'w') as result_file:
            json.dump(document, result_file, indent=2, sort_keys=True)
        metadata = {
            'timestamp': datetime.datetime.now(HeatBase.get_timezone(self.config)).isoformat(),
            'version': VERSION,
            'command': self.COMMAND,
        }
        with open(self.path('{}.meta.json'.format(self.COMMAND)), 'w') as meta_file:
            json.dump(metadata, meta_file, indent=2, sort_keys=True)
        if self.arguments.get('yaml') or self.config.get('output', 'yaml'):
            with open(self.path('{}.yml'.format(self.COMMAND)), 'w') as yaml_file:
                yaml.dump(document, yaml_file, default_flow_style=False, sort_keys=False)
        self.written.append(self.path('{}.json'.format(self.COMMAND)))
        self.logger.info("Wrote result of %s to %s", self.COMMAND, self.output)
        return document

    def write_series(self, name: str, frame, x_label: str, y_label: str):
        """
        Plot series as CSV with a sidecar naming the axes
        """
        csv_path = self.path('{}_{}.csv'.format(self.COMMAND, name))
        frame.to_csv(csv_path, index=False, float_format='%.12g')
        axes = {'x': x_label, 'y': y_label, 'columns': [str(column) for column in frame.columns]}
        with open(self.path('{}_{}.axes.json'.format(self.COMMAND, name)), 'w') as axes_file:
            json.dump(axes, axes_file, indent=2, sort_keys=True)
        self.written.append(csv_path)
        return csv_path
