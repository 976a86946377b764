#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  uav_planner/planner.py
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

from . import errors
from . import types

import numpy as np
import pandas as pd

__all__ = (
	'ACTION_LABELS',
	'NO_ACTION',
	'ControlAction',
	'Trajectory',
	'ValueTable',
	'apply_control',
	'chebyshev_distance',
	'control_set',
	'extract_trajectory',
	'feasible',
	'minimum_mission_time',
	'minimum_steps',
	'plan',
	'solve_dp'
)

logger = logging.getLogger(__name__)

ACTION_LABELS = ('stay', 'E', 'N', 'W', 'S', 'NE', 'NW', 'SW', 'SE')
"""The canonical action order, which is also the order in which DP ties are broken."""

_HEADINGS = {
	'stay': 0.0,
	'E': 0.0,
	'N': math.pi / 2,
	'W': math.pi,
	'S': 3 * math.pi / 2,
	'NE': math.pi / 4,
	'NW': 3 * math.pi / 4,
	'SW': 5 * math.pi / 4,
	'SE': 7 * math.pi / 4
}

NO_ACTION = -1
"""The policy marker for states from which the destination can not be reached."""

class ControlAction(types.ValueObject):
	"""
	A constant velocity control held for one time step. Axis moves fly at the speed which covers one grid step per
	interval, diagonal moves at the nominal maximum speed.
	"""
	__slots__ = ('label', 'v_mps', 'heading_rad')
	def __init__(self, label, v_mps, heading_rad):
		if label not in _HEADINGS:
			raise errors.DomainError("unknown control action label: {0!r}".format(label))
		if label == 'stay' and v_mps != 0:
			raise errors.DomainError('the stay action must have zero speed')
		self.label = label
		self.v_mps = float(v_mps)
		self.heading_rad = float(heading_rad)

	@property
	def is_stay(self):
		return self.label == 'stay'

class ValueTable(types.ValueObject):
	"""
	The backward DP result. ``J[i, c]`` is the best reward collectable from flat cell *c* at step *i* while still
	reaching the destination at step *N*, or ``-inf`` when that is impossible; ``policy[i, c]`` is the index into
	*actions* achieving it, or :py:data:`NO_ACTION`.
	"""
	__slots__ = ('grid', 'actions', 'J', 'policy', 'dest')
	def __init__(self, grid, actions, J, policy, dest):
		self.grid = grid
		self.actions = actions
		self.J = J
		self.policy = policy
		self.dest = dest

	def __repr__(self):
		return "<{} n_steps={} dest={!r} >".format(self.__class__.__name__, self.n_steps, self.dest)

	@property
	def n_steps(self):
		return self.J.shape[0] - 1

	def value(self, i, cell):
		return float(self.J[i, self.grid.index(cell)])

class Trajectory(types.ValueObject):
	"""
	A time stamped sequence of ``N + 1`` grid waypoints, the ``N`` controls moving between them and the reward
	collected at each departing waypoint.
	"""
	__slots__ = ('cells', 'waypoints', 'controls', 'stage_rewards', 'criterion', 'total_reward', 'delta_s')
	def __init__(self, cells, waypoints, controls, stage_rewards, criterion, total_reward, delta_s):
		self.cells = cells
		self.waypoints = waypoints
		self.controls = controls
		self.stage_rewards = stage_rewards
		self.criterion = criterion
		self.total_reward = total_reward
		self.delta_s = delta_s

	def __repr__(self):
		return "<{} criterion={!r} n_steps={} total_reward={!r} >".format(
			self.__class__.__name__, self.criterion, self.n_steps, self.total_reward
		)

	@property
	def n_steps(self):
		return len(self.controls)

	@property
	def total_time_s(self):
		return self.n_steps * self.delta_s

	@property
	def timestamps(self):
		return np.arange(len(self.waypoints)) * self.delta_s

	@property
	def stay_count(self):
		return sum(1 for control in self.controls if control.is_stay)

	def to_frame(self):
		"""
		Convert the trajectory to a table with one row per waypoint. The control columns of the final waypoint are
		empty because no action is taken there.

		:rtype: :py:class:`pandas.DataFrame`
		"""
		controls = list(self.controls) + [None]
		rewards = list(self.stage_rewards) + [None]
		return pd.DataFrame({
			'i': np.arange(len(self.waypoints)),
			't_s': self.timestamps,
			'x_m': self.waypoints[:, 0],
			'y_m': self.waypoints[:, 1],
			'action_label': [control.label if control else '' for control in controls],
			'v_mps': [control.v_mps if control else None for control in controls],
			'heading_rad': [control.heading_rad if control else None for control in controls],
			'stage_reward': rewards
		})

def chebyshev_distance(a, b):
	"""The minimum number of 8-connected lattice moves between the ``(ix, iy)`` cells *a* and *b*."""
	return max(abs(a[0] - b[0]), abs(a[1] - b[1]))

def feasible(start, dest, n_steps):
	"""
	Check whether *dest* can be reached from *start* in *n_steps* moves, a diagonal move advancing one cell on each
	axis.

	:param tuple start: The ``(ix, iy)`` start cell.
	:param tuple dest: The ``(ix, iy)`` destination cell.
	:param int n_steps: The number of moves available.
	:rtype: bool
	"""
	return chebyshev_distance(start, dest) <= n_steps

def minimum_mission_time(mission):
	"""
	The time needed to fly straight from the start to the destination at the maximum speed, ignoring the lattice.

	:type mission: :py:class:`~uav_planner.scenario.MissionSpec`
	:return: The time in seconds.
	:rtype: float
	"""
	return math.hypot(mission.dest[0] - mission.start[0], mission.dest[1] - mission.start[1]) / mission.v_max_mps

def minimum_steps(grid, mission):
	"""
	The fewest control intervals in which the lattice allows flying from the mission start to its destination.

	:rtype: int
	"""
	start, dest = _mission_cells(grid, mission)
	return chebyshev_distance(start, dest)

def _lattice_offset(action, step_m, delta_s):
	distance = delta_s * action.v_mps
	return (
		int(round(distance * math.cos(action.heading_rad) / step_m)),
		int(round(distance * math.sin(action.heading_rad) / step_m))
	)

def apply_control(cell, action, grid, delta_s):
	"""
	Move the UAV from *cell* by flying *action* for *delta_s* seconds. The displacement is snapped to the lattice.

	:param tuple cell: The ``(ix, iy)`` cell the UAV occupies.
	:param action: The control to apply.
	:type action: :py:class:`ControlAction`
	:param grid: The lattice.
	:param float delta_s: The interval duration.
	:return: The next ``(ix, iy)`` cell or :py:data:`~uav_planner.errors.INFEASIBLE` if it is off the grid.
	"""
	if not grid.contains(cell):
		raise errors.DomainError("cell {0!r} is not on the grid".format(tuple(cell)))
	dx, dy = _lattice_offset(action, grid.step_m, delta_s)
	following = (cell[0] + dx, cell[1] + dy)
	if not grid.contains(following):
		return errors.INFEASIBLE
	return following

def control_set(grid, mission):
	"""
	Build the nine control actions for *grid* and *mission*: staying, the four axis moves at the speed covering one
	grid step per interval and the four diagonal moves at the maximum speed. Each move must land on a neighboring cell
	without exceeding the maximum speed.

	:rtype: tuple
	"""
	axis_speed = grid.step_m / mission.delta_s
	actions = []
	for label in ACTION_LABELS:
		if label == 'stay':
			speed = 0.0
		elif len(label) == 1:
			speed = axis_speed
		else:
			speed = mission.v_max_mps
		actions.append(ControlAction(label, speed, _HEADINGS[label]))
	for action in actions[1:]:
		offset = _lattice_offset(action, grid.step_m, mission.delta_s)
		if max(abs(offset[0]), abs(offset[1])) != 1:
			raise errors.InvariantError(
				"the {0} action does not move to a neighboring cell (check v_max_mps, delta_s and grid.step_m)".format(action.label),
				'mission.v_max_mps'
			)
		if math.hypot(*offset) * grid.step_m > mission.v_max_mps * mission.delta_s + 1e-6:
			raise errors.InvariantError(
				"the {0} action exceeds the maximum speed of {1} m/s".format(action.label, mission.v_max_mps),
				'mission.v_max_mps'
			)
	return tuple(actions)

def _transitions(grid, actions, delta_s):
	table = np.full((grid.n_cells, len(actions)), -1, dtype=np.intp)
	for index in range(grid.n_cells):
		cell = grid.cell(index)
		for column, action in enumerate(actions):
			following = apply_control(cell, action, grid, delta_s)
			if following:
				table[index, column] = grid.index(following)
	return table

def _mission_cells(grid, mission):
	return grid.cell_of(mission.start, field='mission.start'), grid.cell_of(mission.dest, field='mission.dest')

def solve_dp(rm, mission, actions=None):
	"""
	Solve the finite horizon Bellman recursion backwards in time over every ``(step, cell)`` state. The stage reward
	is the reward map value of the occupied cell at steps ``0`` to ``N - 1``; the terminal value is zero at the
	destination and ``-inf`` elsewhere.

	:param rm: The per cell stage rewards.
	:type rm: :py:class:`~uav_planner.radio.RewardMap`
	:param mission: The mission, whose start and destination must be cell centers.
	:type mission: :py:class:`~uav_planner.scenario.MissionSpec`
	:param actions: The control set, defaults to :py:func:`control_set`.
	:rtype: :py:class:`ValueTable`
	"""
	grid = rm.grid
	actions = actions or control_set(grid, mission)
	start, dest = _mission_cells(grid, mission)
	n_steps = mission.n_steps
	if not feasible(start, dest, n_steps):
		raise errors.InfeasibleMissionError(chebyshev_distance(start, dest), n_steps)
	reward = np.asarray(rm.value, dtype=np.float64)
	table = _transitions(grid, actions, mission.delta_s)
	reachable = table >= 0
	J = np.full((n_steps + 1, grid.n_cells), -np.inf)
	J[n_steps, grid.index(dest)] = 0.0
	policy = np.full((n_steps, grid.n_cells), NO_ACTION, dtype=np.int8)
	for i in range(n_steps - 1, -1, -1):
		candidates = np.where(reachable, J[i + 1][table], -np.inf)
		best = np.argmax(candidates, axis=1)
		best_value = candidates[np.arange(grid.n_cells), best]
		finite = np.isfinite(best_value)
		# -inf never enters the addition so reachable values are exact sums of rewards
		J[i, finite] = reward[finite] + best_value[finite]
		policy[i, finite] = best[finite]
	J.setflags(write=False)
	policy.setflags(write=False)
	if not np.isfinite(J[0, grid.index(start)]):
		raise errors.InfeasibleMissionError(chebyshev_distance(start, dest), n_steps)
	logger.debug("solved %s DP over %d steps x %d cells, optimum %.6g", rm.criterion, n_steps, grid.n_cells, J[0, grid.index(start)])
	return ValueTable(grid, tuple(actions), J, policy, dest)

def extract_trajectory(vt, mission, rm):
	"""
	Follow the policy of *vt* forward from the mission start.

	:param vt: The solved value table.
	:type vt: :py:class:`ValueTable`
	:param mission: The mission *vt* was solved for.
	:param rm: The reward map *vt* was solved for.
	:rtype: :py:class:`Trajectory`
	"""
	grid = vt.grid
	start, dest = _mission_cells(grid, mission)
	index = grid.index(start)
	if not np.isfinite(vt.J[0, index]):
		raise errors.InfeasibleMissionError(chebyshev_distance(start, dest), vt.n_steps)
	cells = [start]
	controls = []
	rewards = []
	for i in range(vt.n_steps):
		action = vt.actions[vt.policy[i, index]]
		following = apply_control(cells[-1], action, grid, mission.delta_s)
		controls.append(action)
		rewards.append(float(rm.value[index]))
		cells.append(following)
		index = grid.index(following)
	waypoints = np.array([grid.center(cell) for cell in cells], dtype=np.float64).reshape(-1, 2)
	waypoints.setflags(write=False)
	return Trajectory(
		tuple(cells),
		waypoints,
		tuple(controls),
		tuple(rewards),
		rm.criterion,
		float(vt.J[0, grid.index(start)]),
		mission.delta_s
	)

def plan(rm, mission):
	"""
	Compute the optimal trajectory for *mission* over the reward map *rm*.

	:rtype: :py:class:`Trajectory`
	"""
	return extract_trajectory(solve_dp(rm, mission), mission, rm)
