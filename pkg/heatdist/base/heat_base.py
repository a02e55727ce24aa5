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
import logging
import os


class HeatBase:
    """
    Helper class for logging and config parsing
    """

    LOG_FORMAT = "%(asctime)s [%(filename)s:%(lineno)s - %(funcName)20s()] [%(levelname)-5.5s] %(message)s"

    @staticmethod
    def get_timezone(config=None):
        """
        Return the configured timezone for metadata stamps or UTC as default
        :param config: configparser instance or RunConfig
        :return: pytz timezone
        """
        from pytz import timezone, utc
        try:
            return timezone(config['output']['time_zone'])
        except (configparser.NoSectionError, configparser.NoOptionError, KeyError, TypeError):
            if os.environ.get('TZ') is not None:
                return timezone(os.environ['TZ'])
        return utc

    @staticmethod
    def setup_logger(name: str, log_dir=None, level=logging.INFO):
        """
        Setup the heatdist standard logger
        :param name: name of logger
        :param log_dir: directory of the log file, working directory if None
        :param level: log level
        :return: instance of logger
        """
        logger = logging.getLogger(name)
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
        log_formatter = logging.Formatter(HeatBase.LOG_FORMAT)
        log_dir = log_dir if log_dir is not None else os.getcwd()
        file_handler = logging.FileHandler(os.path.join(log_dir, "%s.log" % name), mode='w')
        file_handler.setFormatter(log_formatter)
        logger.addHandler(file_handler)
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(log_formatter)
        logger.addHandler(console_handler)
        logger.setLevel(level)
        logger.debug("Logging Setup successful")
        return logger

    @staticmethod
    def get_config(configfile=None):
        """
        Returns the heatdist config file. The path to the config file can be set by environment
        variable CONFIG_FILE or a config.ini in the working directory.
        :return: ConfigParser instance or None if no file exists
        """
        config = configparser.ConfigParser()
        if configfile is None:
            configfile = os.environ.get('CONFIG_FILE')

        if configfile is None:
            configfile = os.path.join(os.getcwd(), 'config.ini')
        if not os.path.exists(configfile):
            return None
        config.read(configfile)
        return config
