#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  uav_planner/scenario.py
#
#  Redistribution and use in source and binary forms, with or without
#  modification, are permitted provided that the following conditions are
#  met:
#
#  * Redistributions of source code must retain the above copyright
#    notice, this list of conditions and the following disclaimer.
#  * Redistributions in binary form must reproduce the above
#    copyright notice, this list of conditions and the following disclaimer
#    in the documentation and/or other materials provided with the
#    distribution.
#  * Neither the name of the project nor the names of its
#    contributors may be used to endorse or promote products derived from
#    this software without specific prior written permission.
#
#  THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS
#  "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT
#  LIMITED TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR
#  A PARTICULAR PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT
#  OWNER OR CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL,
#  SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT
#  LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES; LOSS OF USE,
#  DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON ANY
#  THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT
#  (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
#  OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
#

import logging
import math

from . import config as config_
from . import errors
from . import types

import numpy as np

__all__ = (
	'AreaSpec',
	'GridSpec',
	'MissionSpec',
	'NetworkDirectives',
	'NetworkRealization',
	'RadioParameters',
	'Scenario',
	'generate_network',
	'load_scenario',
	'make_grid',
	'snap_mission'
)

logger = logging.getLogger(__name__)

_TOLERANCE = 1e-9

def _read_only(array):
	array = np.array(array, dtype=np.float64)
	array.setflags(write=False)
	return array

def _points(values, field):
	array = _read_only(values)
	if array.size == 0:
		array = array.reshape(0, 2)
	if array.ndim != 2 or array.shape[1] != 2:
		raise errors.InvariantError('expected a list of 2D points', field)
	return array

class AreaSpec(types.ValueObject):
	"""The rectangular service area ``[0, width_m] x [0, height_m]`` in meters."""
	__slots__ = ('width_m', 'height_m')
	def __init__(self, width_m, height_m):
		if not types.is_positive_number(width_m):
			raise errors.InvariantError('width must be positive', 'area.width_m')
		if not types.is_positive_number(height_m):
			raise errors.InvariantError('height must be positive', 'area.height_m')
		self.width_m = float(width_m)
		self.height_m = float(height_m)

	def contains(self, points, tolerance=_TOLERANCE):
		"""
		Check whether all of the specified *points* lie within the area.

		:param points: An array of shape ``(n, 2)`` or a single point.
		:rtype: bool
		"""
		points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
		return bool(np.all(
			(points[:, 0] >= -tolerance) & (points[:, 0] <= self.width_m + tolerance) &
			(points[:, 1] >= -tolerance) & (points[:, 1] <= self.height_m + tolerance)
		))

class GridSpec(types.ValueObject):
	"""
	A regular lattice of candidate UAV positions. Cells are addressed either by their ``(ix, iy)`` lattice coordinate or
	by their flat index ``iy * nx + ix``.
	"""
	__slots__ = ('origin', 'step_m', 'nx', 'ny')
	def __init__(self, origin, step_m, nx, ny):
		if not types.is_point(origin):
			raise errors.InvariantError('origin must be a 2D point', 'grid.origin')
		if not types.is_positive_number(step_m):
			raise errors.InvariantError('step must be positive', 'grid.step_m')
		for name, value in (('nx', nx), ('ny', ny)):
			if not (types.is_integer_number(value) and value >= 2):
				raise errors.InvariantError('the grid needs at least two points per axis', 'grid.' + name)
		self.origin = (float(origin[0]), float(origin[1]))
		self.step_m = float(step_m)
		self.nx = int(nx)
		self.ny = int(ny)

	@property
	def n_cells(self):
		"""The number of cells in the grid."""
		return self.nx * self.ny

	def centers(self):
		"""
		The coordinates of every cell center in flat index order.

		:return: An array of shape ``(n_cells, 2)``.
		:rtype: :py:class:`numpy.ndarray`
		"""
		iy, ix = np.divmod(np.arange(self.n_cells), self.nx)
		return np.column_stack((
			self.origin[0] + ix * self.step_m,
			self.origin[1] + iy * self.step_m
		))

	def contains(self, cell):
		ix, iy = cell
		return 0 <= ix < self.nx and 0 <= iy < self.ny

	def index(self, cell):
		"""Convert an ``(ix, iy)`` lattice coordinate to its flat index."""
		ix, iy = cell
		return iy * self.nx + ix

	def cell(self, index):
		"""Convert a flat index to its ``(ix, iy)`` lattice coordinate."""
		iy, ix = divmod(int(index), self.nx)
		return (ix, iy)

	def center(self, cell):
		ix, iy = cell
		return (self.origin[0] + ix * self.step_m, self.origin[1] + iy * self.step_m)

	def snap(self, point):
		"""
		Find the cell whose center is nearest to *point*.

		:param point: The 2D point to snap.
		:return: A tuple of the ``(ix, iy)`` cell and the distance from *point* to its center in meters.
		:rtype: tuple
		"""
		ix = int(round((point[0] - self.origin[0]) / self.step_m))
		iy = int(round((point[1] - self.origin[1]) / self.step_m))
		ix = min(max(ix, 0), self.nx - 1)
		iy = min(max(iy, 0), self.ny - 1)
		center = self.center((ix, iy))
		return (ix, iy), math.hypot(point[0] - center[0], point[1] - center[1])

	def cell_of(self, point, field='point'):
		"""
		Return the cell whose center coincides with *point*, raising :py:exc:`~uav_planner.errors.InvariantError` if the
		point is not a cell center.
		"""
		cell, distance = self.snap(point)
		if distance > 1e-6:
			raise errors.InvariantError("{0!r} is not a grid cell center".format(tuple(point)), field)
		return cell

class RadioParameters(types.ValueObject):
	"""
	The radio parameters shared by every link of a network. The defaults describe a 1.5 GHz suburban macro network with
	30 m masts, 2 m handsets and a UAV hovering at 120 m.
	"""
	__slots__ = (
		'fc_mhz', 'p_mbs_dbm', 'p_uav_dbm', 'mbs_height_m', 'ue_height_m', 'uav_height_m',
		'environment', 'd_min_km', 'sir_cap', 'force_frequency'
	)
	def __init__(
			self,
			fc_mhz=1500.0,
			p_mbs_dbm=46.0,
			p_uav_dbm=30.0,
			mbs_height_m=30.0,
			ue_height_m=2.0,
			uav_height_m=120.0,
			environment='suburban',
			d_min_km=0.01,
			sir_cap=1e10,
			force_frequency=False
	):
		for name, value in (('fc_mhz', fc_mhz), ('mbs_height_m', mbs_height_m), ('ue_height_m', ue_height_m),
							('uav_height_m', uav_height_m), ('d_min_km', d_min_km), ('sir_cap', sir_cap)):
			if not types.is_positive_number(value):
				raise errors.InvariantError('must be positive', 'radio.' + name)
		for name, value in (('p_mbs_dbm', p_mbs_dbm), ('p_uav_dbm', p_uav_dbm)):
			if not types.is_real_number(value):
				raise errors.InvariantError('must be a finite number', 'radio.' + name)
		if uav_height_m <= ue_height_m:
			raise errors.InvariantError('the UAV must fly above the UE height', 'radio.uav_height_m')
		if mbs_height_m <= ue_height_m:
			raise errors.InvariantError('the MBS antennas must be above the UE height', 'radio.mbs_height_m')
		self.fc_mhz = float(fc_mhz)
		self.p_mbs_dbm = float(p_mbs_dbm)
		self.p_uav_dbm = float(p_uav_dbm)
		self.mbs_height_m = float(mbs_height_m)
		self.ue_height_m = float(ue_height_m)
		self.uav_height_m = float(uav_height_m)
		self.environment = environment
		self.d_min_km = float(d_min_km)
		self.sir_cap = float(sir_cap)
		self.force_frequency = bool(force_frequency)

	def scaled(self, offset_db):
		"""
		Return a copy of the parameters with both transmit powers shifted by *offset_db*, i.e. multiplied by one common
		linear factor.
		"""
		settings = self.to_dict()
		settings['p_mbs_dbm'] = self.p_mbs_dbm + offset_db
		settings['p_uav_dbm'] = self.p_uav_dbm + offset_db
		return self.__class__(**settings)

class NetworkRealization(types.ValueObject):
	"""
	The fixed transmitter and user geometry of one Monte-Carlo draw. Position arrays are read-only and of shape
	``(M, 2)`` and ``(K, 2)`` respectively, the antenna heights are taken from :py:attr:`radio`.
	"""
	__slots__ = ('area', 'mbs_positions', 'ue_positions', 'radio', 'seed')
	def __init__(self, area, mbs_positions, ue_positions, radio=None, seed=0):
		mbs_positions = _points(mbs_positions, 'network.mbs_positions')
		ue_positions = _points(ue_positions, 'network.ue_positions')
		if not len(mbs_positions):
			raise errors.InvariantError('at least one MBS is required', 'network.mbs_positions')
		if not len(ue_positions):
			raise errors.InvariantError('at least one UE is required', 'network.ue_positions')
		if not area.contains(mbs_positions):
			raise errors.InvariantError('MBS positions must lie inside the area', 'network.mbs_positions')
		if not area.contains(ue_positions):
			raise errors.InvariantError('UE positions must lie inside the area', 'network.ue_positions')
		if not types.is_natural_number(seed):
			raise errors.InvariantError('seed must be a non-negative integer', 'network.seed')
		self.area = area
		self.mbs_positions = mbs_positions
		self.ue_positions = ue_positions
		self.radio = radio or RadioParameters()
		self.seed = int(seed)

	def __repr__(self):
		return "<{} seed={} n_mbs={} n_ue={} >".format(self.__class__.__name__, self.seed, self.n_mbs, self.n_ue)

	@property
	def n_mbs(self):
		return len(self.mbs_positions)

	@property
	def n_ue(self):
		return len(self.ue_positions)

	@property
	def uav_height_m(self):
		return self.radio.uav_height_m

	@property
	def p_mbs_dbm(self):
		return self.radio.p_mbs_dbm

	@property
	def p_uav_dbm(self):
		return self.radio.p_uav_dbm

	@property
	def fc_mhz(self):
		return self.radio.fc_mhz

class NetworkDirectives(types.ValueObject):
	"""The parameters from which :py:func:`generate_network` draws a network."""
	__slots__ = ('seed', 'n_mbs', 'n_ue')
	def __init__(self, seed, n_mbs, n_ue):
		self.seed = seed
		self.n_mbs = n_mbs
		self.n_ue = n_ue

class MissionSpec(types.ValueObject):
	"""
	The UAV mission: fly from *start* to *dest* in exactly *total_time_s* seconds, changing controls every *delta_s*
	seconds without exceeding *v_max_mps*.
	"""
	__slots__ = ('start', 'dest', 'total_time_s', 'delta_s', 'v_max_mps')
	def __init__(self, start=(0.0, 0.0), dest=(1000.0, 1000.0), total_time_s=240.0, delta_s=8.0, v_max_mps=17.7):
		if not types.is_point(start):
			raise errors.InvariantError('must be a 2D point', 'mission.start')
		if not types.is_point(dest):
			raise errors.InvariantError('must be a 2D point', 'mission.dest')
		if not types.is_positive_number(delta_s):
			raise errors.InvariantError('must be positive', 'mission.delta_s')
		if not types.is_positive_number(v_max_mps):
			raise errors.InvariantError('must be positive', 'mission.v_max_mps')
		if not (types.is_real_number(total_time_s) and total_time_s >= 0):
			raise errors.InvariantError('must be a non-negative number', 'mission.total_time_s')
		ratio = total_time_s / delta_s
		if abs(ratio - round(ratio)) > _TOLERANCE * max(1.0, ratio):
			raise errors.InvariantError(
				"must be a whole multiple of delta_s ({0} / {1} is not an integer)".format(total_time_s, delta_s),
				'mission.total_time_s'
			)
		self.start = (float(start[0]), float(start[1]))
		self.dest = (float(dest[0]), float(dest[1]))
		self.total_time_s = float(total_time_s)
		self.delta_s = float(delta_s)
		self.v_max_mps = float(v_max_mps)
		if self.n_steps == 0 and self.start != self.dest:
			raise errors.InvariantError('must be at least one time step unless start and dest coincide', 'mission.total_time_s')

	@property
	def n_steps(self):
		"""The number of control intervals *N*, such that ``total_time_s = N * delta_s``."""
		return int(round(self.total_time_s / self.delta_s))

class Scenario(types.ValueObject):
	"""
	A fully validated scenario as loaded by :py:func:`load_scenario`. The *network* is either a
	:py:class:`NetworkRealization` (explicit positions) or :py:class:`NetworkDirectives`. The *sweep* is the validated
	sweep section or ``None``.
	"""
	__slots__ = ('area', 'grid', 'network', 'mission', 'radio', 'sweep')
	def __init__(self, area, grid, network, mission, radio, sweep=None):
		self.area = area
		self.grid = grid
		self.network = network
		self.mission = mission
		self.radio = radio
		self.sweep = sweep

	def __repr__(self):
		return "<{} grid={!r} mission={!r} >".format(self.__class__.__name__, self.grid, self.mission)

	def realize(self):
		"""
		Return the network of the scenario, drawing it when the configuration holds generation directives.

		:rtype: :py:class:`NetworkRealization`
		"""
		if isinstance(self.network, NetworkRealization):
			return self.network
		return generate_network(self.network.seed, self.network.n_mbs, self.network.n_ue, self.area, self.radio)

def generate_network(seed, n_mbs, n_ue, area, radio=None):
	"""
	Draw a network by placing *n_mbs* transmitters and *n_ue* users independently and uniformly over *area* (a
	Poisson point process conditioned on its count). The transmitters and users use separate child streams of one
	:py:class:`numpy.random.SeedSequence`, so networks drawn with the same seed share their users, and the first *m*
	transmitters, regardless of *n_mbs*.

	:param int seed: The 64-bit seed of the realization.
	:param int n_mbs: The number of macro base stations.
	:param int n_ue: The number of users.
	:param area: The area over which to place the points.
	:type area: :py:class:`AreaSpec`
	:param radio: The radio parameters of the network.
	:type radio: :py:class:`RadioParameters`
	:rtype: :py:class:`NetworkRealization`
	"""
	if not (types.is_integer_number(n_mbs) and n_mbs >= 1):
		raise errors.InvariantError('at least one MBS is required', 'network.n_mbs')
	if not (types.is_integer_number(n_ue) and n_ue >= 1):
		raise errors.InvariantError('at least one UE is required', 'network.n_ue')
	if not isinstance(area, AreaSpec):
		area = AreaSpec(*area)
	if not (types.is_natural_number(seed) and seed < 2 ** 64):
		raise errors.InvariantError('seed must be a 64-bit non-negative integer', 'network.seed')
	mbs_sequence, ue_sequence = np.random.SeedSequence(int(seed)).spawn(2)
	scale = np.array([area.width_m, area.height_m])
	mbs_positions = np.random.default_rng(mbs_sequence).uniform(size=(int(n_mbs), 2)) * scale
	ue_positions = np.random.default_rng(ue_sequence).uniform(size=(int(n_ue), 2)) * scale
	logger.debug("generated network seed=%d with %d MBS and %d UE", seed, n_mbs, n_ue)
	return NetworkRealization(area, mbs_positions, ue_positions, radio=radio, seed=seed)

def make_grid(area, step_m, origin=(0.0, 0.0)):
	"""
	Divide *area* into a lattice with a spacing of *step_m* on both axes, including the boundary points.

	:param area: The area to divide.
	:type area: :py:class:`AreaSpec`
	:param float step_m: The lattice spacing in meters which must divide both dimensions.
	:rtype: :py:class:`GridSpec`
	"""
	if not types.is_positive_number(step_m):
		raise errors.InvariantError('step must be positive', 'grid.step_m')
	counts = []
	for name, length in (('width_m', area.width_m), ('height_m', area.height_m)):
		ratio = length / step_m
		if abs(ratio - round(ratio)) > _TOLERANCE * max(1.0, ratio):
			raise errors.InvariantError("{0} m does not divide the area {1} of {2} m".format(step_m, name, length), 'grid.step_m')
		counts.append(int(round(ratio)) + 1)
	return GridSpec(origin, step_m, counts[0], counts[1])

def snap_mission(mission, grid):
	"""
	Move the start and destination of *mission* onto the nearest grid cell centers. A point further than half a grid
	step from every center is rejected. The mission may also be given as a mapping of :py:class:`MissionSpec` arguments,
	in which case the points are snapped before the mission is validated. Two points sharing a cell then count as
	coinciding for a mission with no time steps.

	:param mission: The mission to snap.
	:type mission: :py:class:`MissionSpec`, dict
	:param grid: The grid to snap the points onto.
	:type grid: :py:class:`GridSpec`
	:rtype: :py:class:`MissionSpec`
	"""
	settings = dict(mission) if isinstance(mission, dict) else mission.to_dict()
	for name in ('start', 'dest'):
		point = settings.get(name, (0.0, 0.0) if name == 'start' else (1000.0, 1000.0))
		if not types.is_point(point):
			raise errors.InvariantError('must be a 2D point', 'mission.' + name)
		cell, distance = grid.snap(point)
		if distance > grid.step_m / 2.0 + _TOLERANCE:
			raise errors.InvariantError(
				"{0!r} is {1:.2f} m from the nearest grid cell center (at most {2:.2f} m allowed)".format(
					tuple(point), distance, grid.step_m / 2.0
				),
				'mission.' + name
			)
		settings[name] = grid.center(cell)
	return MissionSpec(**settings)

def load_scenario(path):
	"""
	Load and validate the scenario described by the JSON configuration file at *path*.

	:param str path: The path to the configuration file.
	:rtype: :py:class:`Scenario`
	"""
	config = config_.read_config(path)
	area = AreaSpec(**config['area'])
	grid = make_grid(area, config['grid']['step_m'], origin=config['grid']['origin'])
	if not area.contains(grid.centers()):
		raise errors.InvariantError('the grid must lie inside the area', 'grid.origin')
	radio = RadioParameters(**config['radio'])
	section = config['network']
	if section['mbs_positions'] is not None:
		network = NetworkRealization(area, section['mbs_positions'], section['ue_positions'], radio=radio, seed=section['seed'])
	else:
		network = NetworkDirectives(section['seed'], section['n_mbs'], section['n_ue'])
	mission = snap_mission(config['mission'], grid)
	logger.info("loaded scenario %s (%dx%d grid, %d steps)", path, grid.nx, grid.ny, mission.n_steps)
	return Scenario(area, grid, network, mission, radio, config['sweep'])
