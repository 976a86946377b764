#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  uav_planner/radio.py
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

from . import errors
from . import propagation
from . import types
from .config import CRITERIA

import numpy as np
import pandas as pd

__all__ = (
	'Association',
	'PowerMatrix',
	'RateVector',
	'RewardMap',
	'associate',
	'batch_objective',
	'batch_rates',
	'compute_link_powers',
	'link_coefficients',
	'objective_value',
	'reward_map',
	'sir_heatmap',
	'user_rates'
)

logger = logging.getLogger(__name__)

class PowerMatrix(types.ValueObject):
	"""
	Linear received powers in milliwatts, one row per UE and one column per transmitter. The MBS columns come first in
	network order; when a UAV is present it is the last column.
	"""
	__slots__ = ('values', 'sir_cap')
	def __init__(self, values, sir_cap=1e10):
		values = np.array(values, dtype=np.float64)
		if values.ndim != 2:
			raise errors.DomainError('the power matrix must be two dimensional')
		if not np.all(values > 0):
			raise errors.DomainError('received powers must be positive')
		values.setflags(write=False)
		self.values = values
		self.sir_cap = float(sir_cap)

	def __repr__(self):
		return "<{} n_ue={} n_transmitters={} >".format(self.__class__.__name__, self.n_ue, self.n_transmitters)

	@property
	def n_ue(self):
		return self.values.shape[0]

	@property
	def n_transmitters(self):
		return self.values.shape[1]

class Association(types.ValueObject):
	"""
	The serving transmitter index of every UE and the number of UEs served by every transmitter. Ties are broken in
	favor of the lowest transmitter index.
	"""
	__slots__ = ('serving', 'cell_size')
	def __init__(self, serving, cell_size):
		self.serving = serving
		self.cell_size = cell_size

class RateVector(types.ValueObject):
	"""The spectral efficiency of every UE in bps/Hz."""
	__slots__ = ('rates',)
	def __init__(self, rates):
		self.rates = rates

	def __len__(self):
		return len(self.rates)

class RewardMap(types.ValueObject):
	"""The network objective with the UAV hovering at each grid cell center, in flat cell index order."""
	__slots__ = ('grid', 'criterion', 'value')
	def __init__(self, grid, criterion, value):
		self.grid = grid
		self.criterion = criterion
		self.value = value

	def __repr__(self):
		return "<{} criterion={!r} grid={!r} >".format(self.__class__.__name__, self.criterion, self.grid)

	def at(self, cell):
		"""Return the value of the ``(ix, iy)`` *cell*."""
		return float(self.value[self.grid.index(cell)])

	def best_cell(self):
		"""The ``(ix, iy)`` cell with the highest value, the lowest flat index on ties."""
		return self.grid.cell(int(np.argmax(self.value)))

	def to_frame(self):
		"""
		Convert the map to a table with the columns ``x_m``, ``y_m`` and ``value``.

		:rtype: :py:class:`pandas.DataFrame`
		"""
		centers = self.grid.centers()
		return pd.DataFrame({'x_m': centers[:, 0], 'y_m': centers[:, 1], 'value': self.value})

def _check_criterion(criterion):
	if criterion not in CRITERIA:
		raise errors.DomainError("unknown criterion {0!r} (expected one of: {1})".format(criterion, ', '.join(CRITERIA)))

def link_coefficients(radio):
	"""
	The path loss coefficients of the MBS links and of the UAV links of a network with the given *radio* parameters.

	:type radio: :py:class:`~uav_planner.scenario.RadioParameters`
	:return: A tuple of the MBS and UAV :py:class:`~uav_planner.propagation.PathLossCoefficients`.
	:rtype: tuple
	"""
	kwargs = dict(environment=radio.environment, force=radio.force_frequency)
	return (
		propagation.hata_coefficients(radio.fc_mhz, radio.mbs_height_m, radio.ue_height_m, **kwargs),
		propagation.hata_coefficients(radio.fc_mhz, radio.uav_height_m, radio.ue_height_m, **kwargs)
	)

def _lift(points, height):
	points = np.asarray(points, dtype=np.float64)
	return np.concatenate((points, np.full(points.shape[:-1] + (1,), height)), axis=-1)

def _received(points_tx, height_tx, points_rx, height_rx, coefficients, tx_power_dbm, radio):
	# rows are receivers, columns are transmitters
	distance = propagation.link_distance_km(_lift(points_tx, height_tx)[..., None, :, :], _lift(points_rx, height_rx)[..., :, None, :])
	loss = propagation.path_loss_db(coefficients, distance, d_min_km=radio.d_min_km)
	return propagation.received_power_mw(tx_power_dbm, loss)

def _power_values(net, uav_positions):
	"""Stack the received powers for every UAV position, shape ``(P, K, M + 1)``, or ``(K, M)`` without a UAV."""
	radio = net.radio
	mbs_coefficients, uav_coefficients = link_coefficients(radio)
	mbs = _received(net.mbs_positions, radio.mbs_height_m, net.ue_positions, radio.ue_height_m, mbs_coefficients, radio.p_mbs_dbm, radio)
	if uav_positions is None:
		return mbs
	uav_positions = np.asarray(uav_positions, dtype=np.float64).reshape(-1, 1, 2)
	uav = _received(uav_positions, radio.uav_height_m, net.ue_positions, radio.ue_height_m, uav_coefficients, radio.p_uav_dbm, radio)
	mbs = np.broadcast_to(mbs, (uav.shape[0],) + mbs.shape)
	return np.concatenate((mbs, uav), axis=-1)

def _associate(values):
	serving = np.argmax(values, axis=-1)
	one_hot = serving[..., None] == np.arange(values.shape[-1])
	return serving, one_hot, one_hot.sum(axis=-2)

def _sir(values, serving, sir_cap):
	one_hot = serving[..., None] == np.arange(values.shape[-1])
	signal = np.take_along_axis(values, serving[..., None], axis=-1)[..., 0]
	# summing the other columns avoids the cancellation of total minus signal
	interference = np.where(one_hot, 0.0, values).sum(axis=-1)
	sir = np.full(signal.shape, sir_cap)
	np.divide(signal, interference, out=sir, where=interference > 0)
	return np.minimum(sir, sir_cap)

def _rates(values, sir_cap):
	serving, _, cell_size = _associate(values)
	sir = _sir(values, serving, sir_cap)
	users = np.take_along_axis(cell_size, serving, axis=-1)
	return np.log2(1.0 + sir) / users

def _objective(rates, criterion):
	if criterion == 'pf':
		return np.sum(np.log10(rates), axis=-1)
	elif criterion == 'sumrate':
		return np.sum(rates, axis=-1)
	# lower order statistic at rank ceil(0.05 K), no interpolation
	rank = max(int(np.ceil(0.05 * rates.shape[-1])), 1)
	return np.partition(rates, rank - 1, axis=-1)[..., rank - 1]

def compute_link_powers(net, uav_xy=None):
	"""
	Compute the power received by every UE from every transmitter of *net*. When *uav_xy* is ``None`` the matrix only
	holds the MBS columns, which is the no-UAV baseline.

	:param net: The network.
	:type net: :py:class:`~uav_planner.scenario.NetworkRealization`
	:param uav_xy: The horizontal position of the UAV in meters.
	:rtype: :py:class:`PowerMatrix`
	"""
	if uav_xy is not None:
		if not net.area.contains(uav_xy):
			raise errors.DomainError("the UAV position {0!r} is outside of the area".format(tuple(uav_xy)))
		values = _power_values(net, [uav_xy])[0]
	else:
		values = _power_values(net, None)
	return PowerMatrix(values, sir_cap=net.radio.sir_cap)

def associate(p):
	"""
	Associate every UE with the transmitter it receives the most power from which, because the total received power
	is fixed, is also the transmitter offering the best SIR.

	:param p: The received powers.
	:type p: :py:class:`PowerMatrix`
	:rtype: :py:class:`Association`
	"""
	serving, _, cell_size = _associate(p.values)
	return Association(serving, cell_size)

def user_rates(p, a):
	"""
	Compute the per UE spectral efficiency ``log2(1 + SIR) / N`` where *N* is the number of UEs sharing the serving
	cell under round-robin scheduling. The SIR is capped at the matrix's ``sir_cap``, which also covers UEs that see no
	interference at all.

	:param p: The received powers.
	:type p: :py:class:`PowerMatrix`
	:param a: The association of *p*.
	:type a: :py:class:`Association`
	:rtype: :py:class:`RateVector`
	"""
	values = p.values
	if len(a.serving) != values.shape[0] or len(a.cell_size) != values.shape[1]:
		raise errors.DomainError('the association does not match the power matrix')
	sir = _sir(values, np.asarray(a.serving), p.sir_cap)
	return RateVector(np.log2(1.0 + sir) / np.asarray(a.cell_size)[a.serving])

def objective_value(r, criterion):
	"""
	Reduce a rate vector to one of the network objectives:

	* ``pf`` the proportional-fair sum of ``log10`` rates
	* ``sumrate`` the sum of rates
	* ``fivepse`` the 5th percentile rate, taken as the ``ceil(0.05 K)``-th smallest rate

	:param r: The rates.
	:type r: :py:class:`RateVector`
	:param str criterion: The objective.
	:rtype: float
	"""
	_check_criterion(criterion)
	rates = np.asarray(getattr(r, 'rates', r), dtype=np.float64)
	return float(_objective(rates, criterion))

def batch_rates(net, uav_positions):
	"""
	Compute the rates of every UE for each of several UAV positions at once. This is equivalent to composing
	:py:func:`compute_link_powers`, :py:func:`associate` and :py:func:`user_rates` for every position. Positions are
	not restricted to the area.

	:param net: The network.
	:param uav_positions: An array of shape ``(P, 2)`` or ``None`` for the no-UAV baseline.
	:return: An array of shape ``(P, K)``, or ``(K,)`` for the baseline.
	:rtype: :py:class:`numpy.ndarray`
	"""
	return _rates(_power_values(net, uav_positions), net.radio.sir_cap)

def batch_objective(rates, criterion):
	"""Apply :py:func:`objective_value` along the last axis of *rates*."""
	_check_criterion(criterion)
	return _objective(np.asarray(rates, dtype=np.float64), criterion)

def reward_map(net, grid, criterion):
	"""
	Evaluate the network objective *criterion* with the UAV hovering over each cell center of *grid*.

	:param net: The network.
	:type net: :py:class:`~uav_planner.scenario.NetworkRealization`
	:param grid: The candidate UAV positions.
	:type grid: :py:class:`~uav_planner.scenario.GridSpec`
	:param str criterion: The objective.
	:rtype: :py:class:`RewardMap`
	"""
	_check_criterion(criterion)
	value = _objective(batch_rates(net, grid.centers()), criterion)
	value.setflags(write=False)
	if not np.all(np.isfinite(value)):
		raise errors.DomainError('the reward map contains non-finite values')
	logger.debug("%s reward map over %d cells: min=%.6g max=%.6g", criterion, grid.n_cells, value.min(), value.max())
	return RewardMap(grid, criterion, value)

def sir_heatmap(net, grid):
	"""
	The best-server SIR in dB that a test UE placed at each cell center of *grid* would see from the MBSs alone. This is the
	terrestrial coverage map trajectories are usually overlaid on.

	:rtype: :py:class:`numpy.ndarray`
	"""
	radio = net.radio
	mbs_coefficients, _ = link_coefficients(radio)
	values = _received(net.mbs_positions, radio.mbs_height_m, grid.centers(), radio.ue_height_m, mbs_coefficients, radio.p_mbs_dbm, radio)
	serving, _, _ = _associate(values)
	return 10.0 * np.log10(_sir(values, serving, radio.sir_cap))
