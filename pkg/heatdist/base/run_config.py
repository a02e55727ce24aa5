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
import configparser
import copy
import os

from heatdist.base.heat_base import HeatBase

ENV_PREFIX = 'HEATDIST_'

# section -> key -> (type, default)
CONFIG_SCHEMA = {
    'basis': {
        'domain': (str, 'circle'),
        'max_degree': (int, 0),
        'resolution': (int, 0),
    },
    'estimation': {
        'bandwidth': (str, 'plugin'),
        'plugin_constant': (float, 0.6),
        'bandwidth_grid': (str, '0.05,0.1,0.15,0.2'),
    },
    'smoothing': {
        'kappa': (str, 'pairmin'),
        'quantile_q': (float, 0.1),
        'tolerance': (float, 1e-10),
    },
    'geodesic': {
        'segments': (int, 30),
        'step': (float, 0.1),
        'max_iter': (int, 200),
        'grad_tol': (float, 1e-6),
    },
    'test': {
        'replicates': (int, 200),
        'alpha': (float, 0.05),
        'seed': (int, 0),
        'workers': (int, 1),
        'statistic': (str, 'dkappa'),
        'max_redraws': (int, 10),
    },
    'simulate': {
        'trials': (int, 500),
        'sample_size': (int, 600),
        'kappa_factor': (float, 1.0),
    },
    'prior': {
        'sizes': (str, '50,100,200,400,800'),
        'trials': (int, 100),
        'small_bandwidth': (float, 0.005),
    },
    'hurdat': {
        'strict': (bool, False),
        'stages': (str, 'start,6,12,18,24,30,60,end'),
        'months': (str, ''),
        'lat_min': (float, -90.0),
        'lat_max': (float, 90.0),
        'lon_min': (float, -180.0),
        'lon_max': (float, 180.0),
    },
    'output': {
        'directory': (str, '.'),
        'time_zone': (str, 'UTC'),
        'yaml': (bool, False),
    },
}

DEFAULT_MAX_DEGREE = {'circle': 50, 'sphere2': 5}


def _convert(value, value_type, section, key):
    if isinstance(value, bool):
        if value_type is bool:
            return value
    elif isinstance(value, value_type):
        return value
    text = str(value).strip()
    try:
        if value_type is bool:
            lowered = text.lower()
            if lowered in ('1', 'yes', 'true', 'on'):
                return True
            if lowered in ('0', 'no', 'false', 'off'):
                return False
            raise ValueError(text)
        return value_type(text)
    except ValueError:
        raise ValueError("Config value {}.{}={!r} is not a valid {}".format(section, key, value,
                                                                            value_type.__name__))


def parse_float_list(text: str):
    """
    Parse a comma separated list of floats
    """
    return [float(item) for item in str(text).split(',') if item.strip()]


def parse_int_list(text: str):
    """
    Parse a comma separated list of integers
    """
    return [int(item) for item in str(text).split(',') if item.strip()]


class RunConfig:
    """
    Validated and typed view on the ini configuration. Layering is: schema defaults,
    config file, HEATDIST_<SECTION>__<KEY> environment variables, explicit overrides.
    """

    def __init__(self, values: dict):
        self.values = values

    def __getitem__(self, section):
        return self.values[section]

    def get(self, section: str, key: str):
        return self.values[section][key]

    def as_dict(self):
        return copy.deepcopy(self.values)

    def max_degree(self):
        """
        Configured basis degree or the domain default
        """
        degree = self.values['basis']['max_degree']
        if degree > 0:
            return degree
        return DEFAULT_MAX_DEGREE[self.values['basis']['domain']]

    @staticmethod
    def validate(raw: dict):
        """
        Check raw section/key values against CONFIG_SCHEMA and convert them
        :param raw: dict of dicts with raw values
        :return: typed dict of dicts with every schema key present
        """
        unknown = []
        for section, items in raw.items():
            if section not in CONFIG_SCHEMA:
                unknown.append(section)
                continue
            unknown.extend('{}.{}'.format(section, key) for key in items if key not in CONFIG_SCHEMA[section])
        if unknown:
            raise ValueError("Unknown config entries: {}".format(', '.join(sorted(unknown))))
        values = {}
        for section, keys in CONFIG_SCHEMA.items():
            values[section] = {}
            for key, (value_type, default) in keys.items():
                value = raw.get(section, {}).get(key, default)
                values[section][key] = _convert(value, value_type, section, key)
        if values['basis']['domain'] not in DEFAULT_MAX_DEGREE:
            raise ValueError("Unknown domain {}, use circle or sphere2".format(values['basis']['domain']))
        return values

    @staticmethod
    def from_environment(environ=None):
        """
        Collect HEATDIST_<SECTION>__<KEY> overrides
        """
        environ = os.environ if environ is None else environ
        raw = {}
        for name, value in environ.items():
            if not name.startswith(ENV_PREFIX) or '__' not in name:
                continue
            section, key = name[len(ENV_PREFIX):].lower().split('__', 1)
            raw.setdefault(section, {})[key] = value
        return raw

    @staticmethod
    def load(configfile=None, environ=None, overrides=None):
        """
        Load config file, environment and overrides into a validated RunConfig
        :param configfile: path of ini file, see HeatBase.get_config for the lookup
        :param environ: environment mapping, os.environ if None
        :param overrides: dict of dicts applied last
        :return: RunConfig
        """
        if configfile is not None and not os.path.exists(configfile):
            raise ValueError("The config file {} does not exist".format(configfile))
        parser = HeatBase.get_config(configfile)
        raw = {}
        if parser is not None:
            for section in parser.sections():
                raw[section] = dict(parser.items(section))
        for layer in (RunConfig.from_environment(environ), overrides or {}):
            for section, items in layer.items():
                raw.setdefault(section, {}).update(items)
        return RunConfig(RunConfig.validate(raw))

    def write(self, path: str):
        """
        Write the config as ini file
        """
        parser = configparser.ConfigParser()
        for section, items in self.values.items():
            parser[section] = {key: str(value) for key, value in items.items()}
        with open(path, 'w') as config_file:
            parser.write(config_file)
