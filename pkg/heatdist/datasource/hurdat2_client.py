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
import io
import logging
import re

import pytz

HEADER_ID = re.compile(r'^[A-Z]{2}\d{6}$')
MISSING_WIND = -99
MISSING_PRESSURE = -999
MISSING_RADIUS = -999
WIND_RADII = 12


class Hurdat2FormatError(ValueError):
    """
    Malformed HURDAT2 input, carries the line number
    """

    def __init__(self, line_number: int, message: str):
        super(Hurdat2FormatError, self).__init__("line {}: {}".format(line_number, message))
        self.line_number = line_number


class Fix:
    """
    One best track entry of a storm
    """

    def __init__(self, timestamp: datetime.datetime, lat: float, lon: float, status: str = '',
                 max_wind: int = MISSING_WIND, record: str = '', min_pressure: int = MISSING_PRESSURE):
        if abs(lat) > 90.0:
            raise ValueError("Latitude {} is outside [-90, 90]".format(lat))
        self.timestamp = timestamp
        self.lat = float(lat)
        self.lon = normalize_longitude(lon)
        self.status = status
        self.max_wind = int(max_wind)
        self.record = record
        self.min_pressure = int(min_pressure)

    def __repr__(self):
        return "Fix(%s,%r,%r,%r)" % (self.timestamp.isoformat(), self.lat, self.lon, self.status)

    def __eq__(self, other):
        return isinstance(other, Fix) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.timestamp, self.lat, self.lon, self.status, self.max_wind, self.record, self.min_pressure)


class StormTrack:
    """
    Time ordered fixes of one storm
    """

    def __init__(self, storm_id: str, name: str, fixes):
        self.storm_id = storm_id
        self.name = name
        self.fixes = list(fixes)
        for previous, current in zip(self.fixes, self.fixes[1:]):
            if current.timestamp < previous.timestamp:
                raise ValueError("Fixes of {} are not time ordered at {}".format(storm_id, current.timestamp))

    def __repr__(self):
        return "StormTrack(%r,%r,fixes=%d)" % (self.storm_id, self.name, len(self.fixes))

    def __eq__(self, other):
        return isinstance(other, StormTrack) and (self.storm_id, self.name, self.fixes) == \
            (other.storm_id, other.name, other.fixes)

    def __len__(self):
        return len(self.fixes)

    @property
    def start_time(self):
        return self.fixes[0].timestamp

    @property
    def end_time(self):
        return self.fixes[-1].timestamp


def normalize_longitude(lon: float):
    """
    Longitude in degrees mapped to (-180, 180]
    """
    lon = float(lon)
    if -180.0 < lon <= 180.0:
        return lon
    lon = (lon + 180.0) % 360.0 - 180.0
    return 180.0 if lon == -180.0 else lon


def _fields(line: str):
    fields = [field.strip() for field in line.rstrip('\r\n').split(',')]
    while fields and fields[-1] == '':
        fields.pop()
    return fields


def is_header(line: str):
    fields = _fields(line)
    return bool(fields) and HEADER_ID.match(fields[0]) is not None


def parse_coordinate(text: str, line_number: int):
    """
    Parse a lat/lon field like 28.0N or 94.8W into signed degrees
    """
    text = text.strip()
    if len(text) < 2 or text[-1] not in 'NSEW':
        raise Hurdat2FormatError(line_number, "coordinate {!r} needs a N/S/E/W suffix".format(text))
    try:
        value = float(text[:-1])
    except ValueError:
        raise Hurdat2FormatError(line_number, "coordinate {!r} is not a number".format(text))
    if value < 0:
        raise Hurdat2FormatError(line_number, "coordinate {!r} must be unsigned".format(text))
    return -value if text[-1] in 'SW' else value


def format_latitude(lat: float):
    return '{:4.1f}{}'.format(abs(lat), 'S' if lat < 0 else 'N')


def format_longitude(lon: float):
    return '{:5.1f}{}'.format(abs(lon), 'W' if lon < 0 else 'E')


class Hurdat2Client:
    """
    Reader and writer for the NHC HURDAT2 best track format. Every storm starts with a
    header line (id, name, fix count) followed by one comma separated line per fix.
    """

    ARGUMENTS = {
        'strict': False
    }

    def __init__(self, arguments: dict, logger: logging.Logger):
        self.strict = bool(arguments.get('strict', False))
        self.logger = logger
        self.report = []

    def parse(self, stream):
        """
        Parse storms from a text stream or string
        :param stream: HURDAT2 text
        :return: list of StormTrack, problems of skipped storms are kept in self.report
        """
        self.report = []
        lines = stream.splitlines() if isinstance(stream, str) else list(stream)
        tracks = []
        index = 0
        while index < len(lines):
            line_number, line = index + 1, lines[index]
            if not line.strip():
                index += 1
                continue
            block_end = index + 1
            while block_end < len(lines) and not is_header(lines[block_end]):
                block_end += 1
            try:
                if not is_header(line):
                    raise Hurdat2FormatError(line_number, "data line outside of a storm")
                tracks.append(self._parse_storm(lines, index, block_end))
            except Hurdat2FormatError as error:
                self._skip(error)
            index = block_end
        self.logger.info("Parsed %s storms, skipped %s", len(tracks), len(self.report))
        return tracks

    def _skip(self, error: Hurdat2FormatError):
        if self.strict:
            raise error
        self.logger.warning("Skip storm: %s", error)
        self.report.append(str(error))

    def _parse_storm(self, lines, start: int, end: int):
        storm_id, name, count = self.parse_header(lines[start], start + 1)
        data = [(number + 1, lines[number]) for number in range(start + 1, end) if lines[number].strip()]
        if len(data) != count:
            raise Hurdat2FormatError(start + 1, "storm {} announces {} fixes but has {}".format(storm_id, count,
                                                                                              len(data)))
        fixes = [self.parse_fix(line, number) for number, line in data]
        try:
            return StormTrack(storm_id, name, fixes)
        except ValueError as error:
            raise Hurdat2FormatError(start + 1, str(error))

    @staticmethod
    def parse_header(line: str, line_number: int):
        """
        Parse a header like 'AL092011,              IRENE,     39,'
        :return: (storm id, name, fix count)
        """
        fields = _fields(line)
        if len(fields) != 3 or not HEADER_ID.match(fields[0]):
            raise Hurdat2FormatError(line_number, "malformed storm header {!r}".format(line.strip()))
        try:
            count = int(fields[2])
        except ValueError:
            raise Hurdat2FormatError(line_number, "fix count {!r} is not an integer".format(fields[2]))
        if count < 0:
            raise Hurdat2FormatError(line_number, "negative fix count {}".format(count))
        return fields[0], fields[1], count

    @staticmethod
    def parse_fix(line: str, line_number: int):
        """
        Parse a data line like '20110821, 0000,  , TS, 15.0N,  59.0W,  45, 1006, ...'
        """
        fields = _fields(line)
        if len(fields) < 8:
            raise Hurdat2FormatError(line_number, "data line needs at least 8 fields, got {}".format(len(fields)))
        try:
            timestamp = datetime.datetime.strptime(fields[0] + fields[1].zfill(4), '%Y%m%d%H%M')
        except ValueError:
            raise Hurdat2FormatError(line_number, "bad date/time {!r} {!r}".format(fields[0], fields[1]))
        lat = parse_coordinate(fields[4], line_number)
        lon = parse_coordinate(fields[5], line_number)
        if abs(lat) > 90.0:
            raise Hurdat2FormatError(line_number, "latitude {} is outside [-90, 90]".format(lat))
        try:
            max_wind = int(fields[6])
            min_pressure = int(fields[7])
        except ValueError:
            raise Hurdat2FormatError(line_number, "bad wind/pressure {!r} {!r}".format(fields[6], fields[7]))
        return Fix(pytz.utc.localize(timestamp), lat, lon, fields[3], max_wind, fields[2], min_pressure)

    @staticmethod
    def format_header(track: StormTrack):
        return '{},{:>19s},{:>7d},'.format(track.storm_id, track.name, len(track.fixes))

    @staticmethod
    def format_fix(fix: Fix):
        timestamp = fix.timestamp.astimezone(pytz.utc)
        line = '{}, {}, {:>1s}, {:>2s}, {}, {:>6s}, {:>3d}, {:>4d},'.format(
            timestamp.strftime('%Y%m%d'), timestamp.strftime('%H%M'), fix.record, fix.status,
            format_latitude(fix.lat), format_longitude(fix.lon), fix.max_wind, fix.min_pressure)
        return line + ' {:>4d},'.format(MISSING_RADIUS) * WIND_RADII

    def serialize(self, tracks):
        """
        Write tracks in HURDAT2 layout, wind radii are written as missing
        :return: text
        """
        output = io.StringIO()
        for track in tracks:
            output.write(self.format_header(track) + '\n')
            for fix in track.fixes:
                output.write(self.format_fix(fix) + '\n')
        return output.getvalue()


def parse_hurdat2(stream, strict: bool = False, logger=None):
    """
    Parse HURDAT2 text into storm tracks
    :param stream: text stream or string
    :param strict: raise Hurdat2FormatError on the first problem instead of skipping the storm
    :param logger: logger
    :return: list of StormTrack
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    return Hurdat2Client({'strict': strict}, logger).parse(stream)


def serialize_hurdat2(tracks, logger=None):
    logger = logging.getLogger(__name__) if logger is None else logger
    return Hurdat2Client({}, logger).serialize(tracks)
