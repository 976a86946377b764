#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  uav_planner/evaluation.py
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

"""
Network metrics of trajectories and the Monte-Carlo sweep comparing the optimization criteria over mission durations
and network densities.
"""

import concurrent.futures
import functools
import logging
import math

from . import errors
from . import planner
from . import radio
from . import scenario
from . import smoothing
from . import types

import numpy as np
import pandas as pd

__all__ = (
	'DwellSummary',
	'SweepConfig',
	'SweepReport',
	'TrajectoryMetrics',
	'baseline_metrics',
	'dwell_summary',
	'evaluate_discrete',
	'evaluate_smooth',
	'run_sweep',
	'summarize_rates'
)

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 0.05
"""The rate in bps/Hz below which a UE is in outage."""

PAIRING_NOTE = 'all criteria and mission times of one (seed, n_mbs) pair are evaluated on the same network realization'

class TrajectoryMetrics(types.ValueObject):
	"""
	The network performance along a trajectory. *per_ue_capacity* is the time average of the mean UE rate in bps/Hz,
	*outage_probability* the fraction of ``(UE, step)`` pairs below *threshold* and *total_objective* the criterion
	value summed over the mission.
	"""
	__slots__ = ('per_ue_capacity', 'outage_probability', 'total_objective', 'threshold', 'n_steps')
	def __init__(self, per_ue_capacity, outage_probability, total_objective, threshold, n_steps):
		self.per_ue_capacity = per_ue_capacity
		self.outage_probability = outage_probability
		self.total_objective = total_objective
		self.threshold = threshold
		self.n_steps = n_steps

class DwellSummary(types.ValueObject):
	"""
	How a trajectory uses the best cell of its reward map: the number of stay actions, the best ``(ix, iy)`` cell, the
	first step at which the UAV is over it (``None`` if never) and the number of steps departing from it.
	"""
	__slots__ = ('stay_count', 'best_cell', 'first_arrival', 'steps_at_best')
	def __init__(self, stay_count, best_cell, first_arrival, steps_at_best):
		self.stay_count = stay_count
		self.best_cell = best_cell
		self.first_arrival = first_arrival
		self.steps_at_best = steps_at_best

def summarize_rates(rates, threshold=DEFAULT_THRESHOLD, criterion=None, n_steps=None):
	"""
	Reduce per position UE rates to :py:class:`TrajectoryMetrics`. Every row of *rates* is weighted equally.

	:param rates: An array of shape ``(P, K)`` holding the rate of every UE at each of *P* UAV positions.
	:param float threshold: The outage threshold in bps/Hz.
	:param str criterion: The objective to total, the total is ``nan`` when omitted.
	:param int n_steps: The number of control intervals the rows stand for, defaults to *P*. The total objective is
		scaled to this duration.
	:rtype: :py:class:`TrajectoryMetrics`
	"""
	rates = np.atleast_2d(np.asarray(rates, dtype=np.float64))
	if rates.size == 0:
		raise errors.DomainError('at least one rate is required')
	n_steps = len(rates) if n_steps is None else n_steps
	if criterion is None:
		total = math.nan
	else:
		total = float(np.mean(radio.batch_objective(rates, criterion)) * max(n_steps, 1))
	return TrajectoryMetrics(
		float(np.mean(np.mean(rates, axis=1))),
		float(np.mean(rates < threshold)),
		total,
		float(threshold),
		int(n_steps)
	)

def _position_rates(net, positions):
	if not net.area.contains(positions):
		raise errors.DomainError('the trajectory leaves the area')
	return radio.batch_rates(net, positions)

def evaluate_discrete(net, traj, threshold=DEFAULT_THRESHOLD):
	"""
	Evaluate the network with the UAV hovering at each departing waypoint of *traj*, i.e. over the interval ``[0, T)``.
	A zero step trajectory is evaluated once at its only waypoint.

	:param net: The network.
	:type net: :py:class:`~uav_planner.scenario.NetworkRealization`
	:param traj: The trajectory.
	:type traj: :py:class:`~uav_planner.planner.Trajectory`
	:param float threshold: The outage threshold in bps/Hz.
	:rtype: :py:class:`TrajectoryMetrics`
	"""
	positions = traj.waypoints[:-1] if traj.n_steps else traj.waypoints
	return summarize_rates(_position_rates(net, positions), threshold, traj.criterion, traj.n_steps)

def evaluate_smooth(net, st, threshold=DEFAULT_THRESHOLD):
	"""
	Evaluate the network along a smoothed trajectory, weighting every sample with ``t < T`` equally. Sample positions
	need not be grid cell centers.

	:param net: The network.
	:param st: The smoothed trajectory.
	:type st: :py:class:`~uav_planner.smoothing.SmoothTrajectory`
	:param float threshold: The outage threshold in bps/Hz.
	:rtype: :py:class:`TrajectoryMetrics`
	"""
	rates = _position_rates(net, st.points[:-1])
	return summarize_rates(rates, threshold, st.source.criterion, st.source.n_steps)

def baseline_metrics(net, threshold=DEFAULT_THRESHOLD, n_steps=1, criterion=None):
	"""
	The metrics of the terrestrial network alone, without a UAV. The network is static so the capacity and outage do
	not depend on *n_steps*, which only scales the total objective.

	:rtype: :py:class:`TrajectoryMetrics`
	"""
	rates = radio.batch_rates(net, None)
	return summarize_rates(rates[None, :], threshold, criterion, n_steps)

def dwell_summary(traj, rm):
	"""
	Summarize how long *traj* dwells at the highest valued cell of *rm*.

	:rtype: :py:class:`DwellSummary`
	"""
	best = rm.best_cell()
	visits = [i for i, cell in enumerate(traj.cells[:traj.n_steps]) if tuple(cell) == best]
	first = next((i for i, cell in enumerate(traj.cells) if tuple(cell) == best), None)
	return DwellSummary(traj.stay_count, best, first, len(visits))

class SweepConfig(types.ValueObject):
	"""
	The fully resolved parameters of a Monte-Carlo sweep. *mission* is the template whose duration is replaced by each
	of *mission_times_s*.
	"""
	__slots__ = (
		'seeds', 'n_mbs', 'n_ue', 'mission_times_s', 'criteria', 'threshold_bps_hz', 'smooth', 'samples_per_interval',
		'smooth_tolerance', 'area', 'grid', 'radio', 'mission'
	)
	def __init__(
			self, seeds, n_mbs, n_ue, mission_times_s, criteria, threshold_bps_hz, smooth, samples_per_interval,
			smooth_tolerance, area, grid, radio, mission
	):
		self.seeds = tuple(seeds)
		self.n_mbs = tuple(n_mbs)
		self.n_ue = n_ue
		self.mission_times_s = tuple(mission_times_s)
		self.criteria = tuple(criteria)
		self.threshold_bps_hz = threshold_bps_hz
		self.smooth = smooth
		self.samples_per_interval = samples_per_interval
		self.smooth_tolerance = smooth_tolerance
		self.area = area
		self.grid = grid
		self.radio = radio
		self.mission = mission

	@classmethod
	def from_scenario(cls, scn):
		"""
		Build the sweep configuration from the ``sweep`` section of a loaded scenario.

		:type scn: :py:class:`~uav_planner.scenario.Scenario`
		:rtype: :py:class:`SweepConfig`
		"""
		section = scn.sweep
		if section is None:
			raise errors.SchemaError('the configuration has no sweep section', 'sweep')
		if section['seed_list'] is not None:
			seeds = tuple(section['seed_list'])
		else:
			seeds = tuple(range(section['base_seed'], section['base_seed'] + section['seeds']))
		for key, values in (('seed_list', seeds), ('n_mbs', section['n_mbs']), ('mission_times_s', section['mission_times_s']), ('criteria', section['criteria'])):
			if len(set(values)) != len(values):
				raise errors.InvariantError('values must be unique', 'sweep.' + key)
		config = cls(
			seeds,
			tuple(section['n_mbs']),
			section['n_ue'],
			tuple(float(value) for value in section['mission_times_s']),
			tuple(section['criteria']),
			float(section['threshold_bps_hz']),
			section['smooth'],
			section['samples_per_interval'],
			float(section['smooth_tolerance']),
			scn.area,
			scn.grid,
			scn.radio,
			scn.mission
		)
		# fail early on durations which are not whole multiples of the interval, zero is infeasible per cell
		for total_time_s in config.mission_times_s:
			if total_time_s:
				config.mission_for(total_time_s)
		planner.control_set(scn.grid, scn.mission)
		return config

	def mission_for(self, total_time_s):
		"""
		The mission template flown in *total_time_s* seconds. A zero duration leaves no time to move, so
		:py:exc:`~uav_planner.errors.InfeasibleMissionError` is raised for it unless the start and destination coincide.

		:param float total_time_s: The mission duration in seconds.
		:rtype: :py:class:`~uav_planner.scenario.MissionSpec`
		"""
		if total_time_s == 0 and self.mission.start != self.mission.dest:
			start = self.grid.cell_of(self.mission.start, 'mission.start')
			dest = self.grid.cell_of(self.mission.dest, 'mission.dest')
			raise errors.InfeasibleMissionError(planner.chebyshev_distance(start, dest), 0)
		return scenario.MissionSpec(self.mission.start, self.mission.dest, total_time_s, self.mission.delta_s, self.mission.v_max_mps)

	@property
	def units(self):
		"""The independent ``(seed, n_mbs)`` work units in their canonical order."""
		return tuple((seed, n_mbs) for seed in self.seeds for n_mbs in self.n_mbs)

RUN_COLUMNS = (
	'kind', 'criterion', 'mission_time_s', 'n_mbs', 'seed', 'n_steps', 'feasible', 'total_reward', 'per_ue_capacity',
	'outage_probability', 'total_objective', 'stay_count', 'baseline_capacity', 'baseline_outage', 'smooth_capacity',
	'smooth_outage', 'smooth_max_speed_mps'
)
METRIC_COLUMNS = RUN_COLUMNS[7:]
_KEYS = ('criterion', 'mission_time_s', 'n_mbs')

def _run_unit(cfg, seed, n_mbs):
	"""Evaluate every criterion and mission time on the network of one seed and MBS count."""
	net = scenario.generate_network(seed, n_mbs, cfg.n_ue, cfg.area, cfg.radio)
	baseline = baseline_metrics(net, cfg.threshold_bps_hz)
	results = {}
	for criterion in cfg.criteria:
		rm = radio.reward_map(net, cfg.grid, criterion)
		for total_time_s in cfg.mission_times_s:
			row = dict.fromkeys(METRIC_COLUMNS, math.nan)
			row.update(
				kind='run', criterion=criterion, mission_time_s=total_time_s, n_mbs=n_mbs, seed=seed,
				n_steps=int(round(total_time_s / cfg.mission.delta_s)), feasible=False,
				baseline_capacity=baseline.per_ue_capacity, baseline_outage=baseline.outage_probability
			)
			try:
				traj = planner.plan(rm, cfg.mission_for(total_time_s))
			except errors.InfeasibleMissionError as error:
				logger.info("seed=%d n_mbs=%d %s T=%g: %s", seed, n_mbs, criterion, total_time_s, error.message)
				results[(criterion, total_time_s)] = row
				continue
			metrics = evaluate_discrete(net, traj, cfg.threshold_bps_hz)
			row.update(
				feasible=True,
				total_reward=traj.total_reward,
				per_ue_capacity=metrics.per_ue_capacity,
				outage_probability=metrics.outage_probability,
				total_objective=metrics.total_objective,
				stay_count=traj.stay_count
			)
			if cfg.smooth and traj.n_steps:
				st = smoothing.smooth_trajectory(traj, cfg.samples_per_interval)
				smooth = evaluate_smooth(net, st, cfg.threshold_bps_hz)
				row.update(
					smooth_capacity=smooth.per_ue_capacity,
					smooth_outage=smooth.outage_probability,
					smooth_max_speed_mps=smoothing.max_ground_speed(st)
				)
			results[(criterion, total_time_s)] = row
	logger.info("finished sweep unit seed=%d n_mbs=%d", seed, n_mbs)
	return results

class SweepReport(object):
	"""
	The results of a sweep. :py:attr:`rows` holds one row per ``(criterion, mission_time_s, n_mbs, seed)`` cell and
	:py:attr:`aggregate` the seed mean and standard deviation of every metric per ``(criterion, mission_time_s,
	n_mbs)``, computed over the feasible runs only.
	"""
	def __init__(self, config, rows):
		"""
		:param config: The sweep configuration.
		:type config: :py:class:`SweepConfig`
		:param rows: The per run results.
		:type rows: :py:class:`pandas.DataFrame`
		"""
		self.config = config
		self.rows = rows
		self.aggregate = self._aggregate(rows)

	@staticmethod
	def _aggregate(rows):
		keys = list(_KEYS)
		cells = rows[keys].drop_duplicates().reset_index(drop=True)
		feasible = rows[rows['feasible']]
		grouped = feasible.groupby(keys, sort=False)[list(METRIC_COLUMNS)]
		counts = feasible.groupby(keys, sort=False).size().rename('n_feasible').reset_index()
		frames = []
		for kind, frame in (('mean', grouped.mean()), ('std', grouped.std())):
			# cells without a single feasible run are kept with empty metrics
			frame = cells.merge(frame.reset_index(), on=keys, how='left').merge(counts, on=keys, how='left')
			frame['n_feasible'] = frame['n_feasible'].fillna(0).astype(int)
			frame.insert(0, 'kind', kind)
			frames.append(frame)
		return pd.concat(frames, ignore_index=True)

	def to_frame(self):
		"""
		Combine the per run and the aggregate rows into one table, distinguished by the ``kind`` column (``run``,
		``mean`` or ``std``).

		:rtype: :py:class:`pandas.DataFrame`
		"""
		rows = self.rows.copy()
		rows['n_feasible'] = rows['feasible'].astype(int)
		frame = pd.concat([rows, self.aggregate], ignore_index=True)
		for column in ('seed', 'n_steps', 'n_feasible'):
			frame[column] = frame[column].astype('Int64')
		return frame[list(RUN_COLUMNS) + ['n_feasible']]

	def mean(self, criterion, mission_time_s, n_mbs, column):
		"""Look up the seed averaged value of *column* for one sweep cell."""
		frame = self.aggregate
		selected = frame[
			(frame['kind'] == 'mean') & (frame['criterion'] == criterion) &
			(frame['mission_time_s'] == mission_time_s) & (frame['n_mbs'] == n_mbs)
		]
		if selected.empty:
			raise KeyError((criterion, mission_time_s, n_mbs))
		return float(selected[column].iloc[0])

	def summary(self):
		"""
		Build the JSON serializable summary: the sweep parameters, the seed pairing and the seed averaged metrics of
		every cell together with the relative gap between the smoothed and discrete metrics.

		:rtype: dict
		"""
		cfg = self.config
		cells = []
		for record in self.aggregate[self.aggregate['kind'] == 'mean'].to_dict('records'):
			cell = {key: _plain(record[key]) for key in _KEYS + METRIC_COLUMNS + ('n_feasible',)}
			for metric in ('capacity', 'outage'):
				discrete = record['per_ue_capacity' if metric == 'capacity' else 'outage_probability']
				smooth = record['smooth_' + metric]
				if smooth == discrete:
					gap = 0.0
				else:
					gap = abs(smooth - discrete) / discrete if discrete else math.nan
				cell['smooth_' + metric + '_relative_gap'] = _plain(gap)
				cell['smooth_' + metric + '_within_tolerance'] = bool(gap <= cfg.smooth_tolerance) if not math.isnan(gap) else None
			cells.append(cell)
		return {
			'pairing': PAIRING_NOTE,
			'seeds': list(cfg.seeds),
			'n_mbs': list(cfg.n_mbs),
			'n_ue': cfg.n_ue,
			'mission_times_s': list(cfg.mission_times_s),
			'criteria': list(cfg.criteria),
			'threshold_bps_hz': cfg.threshold_bps_hz,
			'smooth_tolerance': cfg.smooth_tolerance,
			'runs': len(self.rows),
			'infeasible_runs': int((~self.rows['feasible']).sum()),
			'cells': cells
		}

def _plain(value):
	if isinstance(value, (np.integer,)):
		return int(value)
	if isinstance(value, (float, np.floating)):
		value = float(value)
		return None if math.isnan(value) else value
	return value

def run_sweep(cfg, workers=1):
	"""
	Run the sweep described by *cfg*. Each ``(seed, n_mbs)`` pair is an independent unit of work which draws its
	network once and evaluates every criterion and mission time on it. Units run in up to *workers* processes; the
	report does not depend on the worker count.

	:param cfg: The sweep configuration.
	:type cfg: :py:class:`SweepConfig`
	:param int workers: The number of worker processes.
	:rtype: :py:class:`SweepReport`
	"""
	units = cfg.units
	seeds = [seed for seed, _ in units]
	counts = [n_mbs for _, n_mbs in units]
	task = functools.partial(_run_unit, cfg)
	logger.info("running %d sweep units with %d worker(s)", len(units), workers)
	if workers > 1 and len(units) > 1:
		with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
			results = list(executor.map(task, seeds, counts))
	else:
		results = list(map(task, seeds, counts))
	results = dict(zip(units, results))
	records = []
	for criterion in cfg.criteria:
		for total_time_s in cfg.mission_times_s:
			for n_mbs in cfg.n_mbs:
				for seed in cfg.seeds:
					records.append(results[(seed, n_mbs)][(criterion, total_time_s)])
	rows = pd.DataFrame.from_records(records, columns=RUN_COLUMNS)
	rows['feasible'] = rows['feasible'].astype(bool)
	return SweepReport(cfg, rows)
