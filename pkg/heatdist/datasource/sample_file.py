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

from heatdist.basis.domain import DomainId, lat_lon_to_unit, unit_to_lat_lon
from heatdist.estimation.sample_set import SampleSet

CIRCLE_COLUMNS = ('angle',)
REAL_LINE_COLUMNS = ('value',)
LAT_LON_COLUMNS = ('lat', 'lon')
XYZ_COLUMNS = ('x', 'y', 'z')


def read_frame(path: str):
    """
    Read a sample CSV file, the header declares the coordinates
    """
    frame = pd.read_csv(path, skipinitialspace=True)
    frame.columns = [str(column).strip().lower() for column in frame.columns]
    if frame.empty:
        raise ValueError("The sample file {} has no samples".format(path))
    return frame


def _has(frame, columns):
    return all(column in frame.columns for column in columns)


def is_real_line(frame):
    """
    True for files with real line values that have to be wrapped first
    """
    return _has(frame, REAL_LINE_COLUMNS)


def samples_from_frame(frame, domain, label: str = ''):
    """
    SampleSet of a sample table: angle for circle, lat/lon degrees or x/y/z for sphere2
    """
    domain = DomainId.parse(domain)
    if domain is DomainId.circle:
        if not _has(frame, CIRCLE_COLUMNS):
            raise ValueError("Circle sample files need an angle column, got {}".format(list(frame.columns)))
        return SampleSet(domain, frame['angle'].to_numpy(dtype='float64'), label)
    if _has(frame, XYZ_COLUMNS):
        points = frame[list(XYZ_COLUMNS)].to_numpy(dtype='float64')
    elif _has(frame, LAT_LON_COLUMNS):
        points = lat_lon_to_unit(frame['lat'].to_numpy(dtype='float64'), frame['lon'].to_numpy(dtype='float64'))
    else:
        raise ValueError("Sphere sample files need lat,lon or x,y,z columns, got {}".format(list(frame.columns)))
    return SampleSet(domain, np.atleast_2d(points), label)


def read_samples(path: str, domain, label: str = None):
    return samples_from_frame(read_frame(path), domain, path if label is None else label)


def samples_to_frame(samples: SampleSet, coordinates: str = 'latlon'):
    """
    Table of a SampleSet
    :param coordinates: 'latlon' or 'xyz' for sphere samples
    """
    if samples.domain is DomainId.circle:
        return pd.DataFrame({'angle': samples.points})
    if coordinates == 'xyz':
        return pd.DataFrame(samples.points, columns=list(XYZ_COLUMNS))
    if coordinates != 'latlon':
        raise ValueError("Unknown sphere coordinates {}, use latlon or xyz".format(coordinates))
    lat, lon = unit_to_lat_lon(samples.points)
    return pd.DataFrame({'lat': lat, 'lon': lon})


def write_samples(samples: SampleSet, path: str, coordinates: str = 'latlon'):
    samples_to_frame(samples, coordinates).to_csv(path, index=False, float_format='%.12g')
