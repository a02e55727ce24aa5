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
import logging

import numpy as np
from dateutil.relativedelta import relativedelta

from heatdist.basis.domain import DomainId, lat_lon_to_unit
from heatdist.datasource.hurdat2_client import StormTrack
from heatdist.estimation.sample_set import SampleSet


class TrackStage:
    """
    Selects one position per track: the first fix, the position H hours after the first
    fix or the last fix
    """
    START = 'start'
    AFTER_HOURS = 'after_hours'
    END = 'end'

    def __init__(self, kind: str, hours: float = None):
        if kind not in (TrackStage.START, TrackStage.AFTER_HOURS, TrackStage.END):
            raise ValueError("Unknown track stage {}".format(kind))
        if kind == TrackStage.AFTER_HOURS and (hours is None or hours < 0):
            raise ValueError("The after hours stage needs hours >= 0, got {}".format(hours))
        self.kind = kind
        self.hours = hours

    def __repr__(self):
        return "TrackStage(%r,%r)" % (self.kind, self.hours)

    def __eq__(self, other):
        return isinstance(other, TrackStage) and (self.kind, self.hours) == (other.kind, other.hours)

    @property
    def name(self):
        if self.kind == TrackStage.AFTER_HOURS:
            return 'h{:g}'.format(self.hours)
        return self.kind

    @staticmethod
    def start():
        return TrackStage(TrackStage.START)

    @staticmethod
    def after_hours(hours: float):
        return TrackStage(TrackStage.AFTER_HOURS, float(hours))

    @staticmethod
    def end():
        return TrackStage(TrackStage.END)

    @staticmethod
    def parse(text: str):
        """
        Parse 'start', 'end' or a number of hours
        """
        text = str(text).strip().lower()
        if text in (TrackStage.START, TrackStage.END):
            return TrackStage(text)
        try:
            return TrackStage.after_hours(float(text))
        except ValueError:
            raise ValueError("Unknown track stage {!r}, use start, end or hours".format(text))


def parse_stages(text: str):
    return [TrackStage.parse(item) for item in str(text).split(',') if item.strip()]


def fix_vectors(track: StormTrack):
    """
    Unit vectors of all fixes of a track
    """
    lat = np.array([fix.lat for fix in track.fixes])
    lon = np.array([fix.lon for fix in track.fixes])
    return np.atleast_2d(lat_lon_to_unit(lat, lon))


def slerp(first, second, fraction: float):
    """
    Great circle interpolation between two unit vectors
    """
    cos_omega = float(np.clip(np.dot(first, second), -1.0, 1.0))
    omega = np.arccos(cos_omega)
    if omega < 1e-12:
        point = (1.0 - fraction) * first + fraction * second
    else:
        point = (np.sin((1.0 - fraction) * omega) * first + np.sin(fraction * omega) * second) / np.sin(omega)
    return point / np.linalg.norm(point)


def stage_position(track: StormTrack, stage: TrackStage):
    """
    Position of a track at a stage
    :return: unit vector or None if the track is shorter than the stage
    """
    if not track.fixes:
        return None
    vectors = fix_vectors(track)
    if stage.kind == TrackStage.START:
        return vectors[0]
    if stage.kind == TrackStage.END:
        return vectors[-1]
    target = track.start_time + relativedelta(seconds=int(round(stage.hours * 3600)))
    if target > track.end_time:
        return None
    for index, fix in enumerate(track.fixes):
        if fix.timestamp == target:
            return vectors[index]
        if fix.timestamp > target:
            before = track.fixes[index - 1].timestamp
            fraction = (target - before).total_seconds() / (fix.timestamp - before).total_seconds()
            return slerp(vectors[index - 1], vectors[index], fraction)
    return vectors[-1]


def tracks_to_samples(tracks, stage: TrackStage, label: str = None, excluded: list = None, logger=None):
    """
    Sphere samples with one position per track
    :param tracks: list of StormTrack
    :param stage: TrackStage selector
    :param label: sample label, the stage name if None
    :param excluded: list collecting ids of tracks shorter than the stage
    :param logger: logger
    :return: SampleSet on sphere2
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    if not tracks:
        raise ValueError("Track sampling needs at least one track")
    excluded = [] if excluded is None else excluded
    points = []
    for track in tracks:
        position = stage_position(track, stage)
        if position is None:
            excluded.append(track.storm_id)
            continue
        points.append(position)
    if excluded:
        logger.info("Stage %s excludes %s of %s tracks", stage.name, len(excluded), len(tracks))
    if not points:
        raise ValueError("No track reaches stage {}".format(stage.name))
    return SampleSet(DomainId.sphere2, np.array(points), stage.name if label is None else label)


def filter_tracks(tracks, months=None, lat_range=None, lon_range=None):
    """
    Tracks whose first fix lies in the given months and lat/lon box
    :param months: iterable of month numbers, all months if None or empty
    :param lat_range: (min, max) degrees or None
    :param lon_range: (min, max) degrees or None
    """
    months = set(months) if months else None
    selected = []
    for track in tracks:
        if not track.fixes:
            continue
        first = track.fixes[0]
        if months is not None and first.timestamp.month not in months:
            continue
        if lat_range is not None and not lat_range[0] <= first.lat <= lat_range[1]:
            continue
        if lon_range is not None and not lon_range[0] <= first.lon <= lon_range[1]:
            continue
        selected.append(track)
    return selected
