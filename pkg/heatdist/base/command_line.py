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
import argparse
import logging
import os
import sys

from heatdist.base.heat_base import HeatBase
from heatdist.base.run_config import RunConfig
from heatdist.base.version import VERSION
from heatdist.tool.bandwidth_grid import BandwidthGrid
from heatdist.tool.compare_densities import CompareDensities
from heatdist.tool.estimate_density import EstimateDensity
from heatdist.tool.extract_hurdat import ExtractHurdat
from heatdist.tool.prior_study import PriorStudy
from heatdist.tool.run_test import RunTest
from heatdist.tool.simulate_power import SimulatePower
from heatdist.tool.tool_base import EXIT_INVALID, EXIT_OK

# command -> (tool class, number of input files, help)
COMMANDS = {
    'estimate': (EstimateDensity, 1, 'Estimate the density of one sample file'),
    'compare': (CompareDensities, 2, 'Compute d_kappa and baseline distances of two sample files'),
    'test': (RunTest, 2, 'Run the bootstrap two-sample test on two sample files'),
    'simulate': (SimulatePower, 0, 'Compute power curves on circle mixture scenarios'),
    'bandwidth-grid': (BandwidthGrid, 2, 'Compare two sample files over a grid of bandwidths'),
    'hurdat': (ExtractHurdat, 1, 'Write storm stage sample files from a HURDAT2 file'),
    'prior': (PriorStudy, 0, 'Compare fixed rule and smoothness prior estimates'),
}


def is_valid_file(parser, arg):
    """
    Check if file exists
    :param parser: parser instance
    :param arg: path to file
    :return: return the path if exists otherwise None
    """
    if not os.path.exists(arg):
        parser.error("The file %s does not exist!" % arg)
        return None
    return arg


def get_arg_parse(args):
    """
    Parse arguments
    :return: None if args none otherwise the parsed namespace
    """
    parser = argparse.ArgumentParser(description='Commandline for heatdist v {}'.format(VERSION))
    parser.add_argument("-c", "--config", dest="config", action='store',
                        help="path to the heatdist ini config file",
                        type=lambda x: is_valid_file(parser, x))
    parser.add_argument("-s", "--seed", dest="seed", action='store', type=int, default=None,
                        help="master seed, overrides test.seed")
    parser.add_argument("--strict", dest="strict", action='store_true',
                        help="abort on the first malformed HURDAT2 storm")
    parser.add_argument("-o", "--output", dest="output", action='store', default=None,
                        help="output directory, overrides output.directory")
    parser.add_argument("--yaml", dest="yaml", action='store_true',
                        help="write a yaml copy of the result")
    parser.add_argument("--verbose", dest="verbose", action='store_true',
                        help="debug logging")
    parser.add_argument("-v", "--version", dest="version", action='store_true',
                        help="Returns the version of heatdist.")
    subparsers = parser.add_subparsers(dest='command')
    for name, (_, count, description) in COMMANDS.items():
        command = subparsers.add_parser(name, help=description)
        if count:
            command.add_argument('files', nargs=count, help='input files',
                                 type=lambda x: is_valid_file(parser, x))
    if args is None or not args:
        parser.print_help()
        return None
    return parser.parse_args(args)


def get_overrides(parsed_args):
    """
    Config overrides of the command line flags
    """
    overrides = {}
    if parsed_args.seed is not None:
        overrides['test'] = {'seed': parsed_args.seed}
    if parsed_args.strict:
        overrides['hurdat'] = {'strict': True}
    if parsed_args.output is not None:
        overrides['output'] = {'directory': parsed_args.output}
    if parsed_args.yaml:
        overrides.setdefault('output', {})['yaml'] = True
    return overrides


def heatdist_app(args=None):
    """
    Main entry point for heatdist application
    :return: exit code, 0 success, 1 invalid input or usage error, 2 numerical non-convergence
    """
    # print usage when no option is given
    try:
        parsed_args = get_arg_parse(sys.argv[1:] if args is None else args)
    except SystemExit as error:
        # usage errors count as invalid input, 2 stays non-convergence
        return EXIT_OK if not error.code else EXIT_INVALID
    exit_code = EXIT_OK
    if not parsed_args:
        return exit_code
    if parsed_args.version:
        print("heatdist {}".format(VERSION))
        return exit_code
    if parsed_args.command is None:
        print("Missing command, use one of {}".format(', '.join(COMMANDS)), file=sys.stderr)
        return EXIT_INVALID
    try:
        config = RunConfig.load(parsed_args.config, overrides=get_overrides(parsed_args))
    except ValueError as error:
        print("Invalid configuration: {}".format(error), file=sys.stderr)
        return EXIT_INVALID
    output = config.get('output', 'directory')
    if not os.path.isdir(output):
        os.makedirs(output)
    logger = HeatBase.setup_logger("heatdist", output, logging.DEBUG if parsed_args.verbose else logging.INFO)
    logger.info("heatdist %s command %s", VERSION, parsed_args.command)
    tool_class = COMMANDS[parsed_args.command][0]
    arguments = {
        'files': getattr(parsed_args, 'files', []),
        'output': output,
        'yaml': config.get('output', 'yaml'),
    }
    exit_code = max(exit_code, tool_class(config, arguments, logger).build())
    return exit_code
