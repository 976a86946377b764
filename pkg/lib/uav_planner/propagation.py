#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  uav_planner/propagation.py
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

__all__ = (
	'FREQUENCY_RANGE_MHZ',
	'Link',
	'PathLossCoefficients',
	'hata_coefficients',
	'link_distance_km',
	'path_loss_db',
	'received_power_mw'
)

logger = logging.getLogger(__name__)

FREQUENCY_RANGE_MHZ = (150.0, 1500.0)
"""The carrier frequency range, inclusive, over which the Okumura-Hata model was fitted."""

class PathLossCoefficients(types.ValueObject):
	"""
	The coefficients of a path loss of the form ``A + B * log10(d) + C`` with *d* in kilometers. *A* holds the
	frequency and antenna height terms, *B* the distance slope and *C* the environment correction.
	"""
	__slots__ = ('a_db', 'b_db_per_decade', 'c_db')
	def __init__(self, a_db, b_db_per_decade, c_db):
		if not b_db_per_decade > 0:
			raise errors.DomainError('the path loss must increase with distance (b_db_per_decade > 0)')
		self.a_db = float(a_db)
		self.b_db_per_decade = float(b_db_per_decade)
		self.c_db = float(c_db)

class Link(types.ValueObject):
	"""A single radio link between two 3D points, in meters."""
	__slots__ = ('tx_position', 'rx_position', 'tx_power_dbm')
	def __init__(self, tx_position, rx_position, tx_power_dbm):
		tx_position = tuple(float(value) for value in tx_position)
		rx_position = tuple(float(value) for value in rx_position)
		if len(tx_position) != 3 or len(rx_position) != 3:
			raise errors.DomainError('link end points must be 3D points')
		if tx_position == rx_position:
			raise errors.DomainError('link end points must be distinct')
		self.tx_position = tx_position
		self.rx_position = rx_position
		self.tx_power_dbm = float(tx_power_dbm)

	@property
	def distance_km(self):
		return link_distance_km(self.tx_position, self.rx_position)

	def received_power_mw(self, coefficients, d_min_km=0.01):
		"""
		The power received over this link.

		:param coefficients: The path loss coefficients of the link.
		:type coefficients: :py:class:`PathLossCoefficients`
		:param float d_min_km: The minimum distance clamp.
		:return: The received power in milliwatts.
		:rtype: float
		"""
		return received_power_mw(self.tx_power_dbm, path_loss_db(coefficients, self.distance_km, d_min_km=d_min_km))

def hata_coefficients(fc_mhz, hb_m, hm_m, environment='suburban', force=False):
	"""
	Compute the Okumura-Hata coefficients for a transmitter at height *hb_m* and a receiver at height *hm_m*, using the
	small / medium city mobile antenna correction and the suburban environment correction.

	:param float fc_mhz: The carrier frequency in MHz.
	:param float hb_m: The transmitter (base station) antenna height in meters.
	:param float hm_m: The receiver (mobile) antenna height in meters.
	:param str environment: The environment correction to apply, only ``suburban`` is supported.
	:param bool force: Evaluate the model even when *fc_mhz* is outside of :py:data:`FREQUENCY_RANGE_MHZ`.
	:rtype: :py:class:`PathLossCoefficients`
	"""
	if environment != 'suburban':
		raise errors.DomainError("unsupported environment: {0!r}".format(environment))
	if not (hb_m > 0 and hm_m > 0):
		raise errors.DomainError('antenna heights must be positive')
	if not FREQUENCY_RANGE_MHZ[0] <= fc_mhz <= FREQUENCY_RANGE_MHZ[1]:
		if not force:
			raise errors.ModelRangeError(
				"carrier frequency {0} MHz is outside of the model range {1}-{2} MHz".format(fc_mhz, *FREQUENCY_RANGE_MHZ),
				'fc_mhz',
				fc_mhz
			)
		logger.warning("evaluating the Hata model at %s MHz, outside of its fitted range", fc_mhz)
	log_fc = math.log10(fc_mhz)
	log_hb = math.log10(hb_m)
	a_hm = (1.1 * log_fc - 0.7) * hm_m - (1.56 * log_fc - 0.8)
	a_db = 69.55 + 26.16 * log_fc - 13.82 * log_hb - a_hm
	b_db = 44.9 - 6.55 * log_hb
	c_db = -2.0 * math.log10(fc_mhz / 28.0) ** 2 - 5.4
	return PathLossCoefficients(a_db, b_db, c_db)

def link_distance_km(a, b):
	"""
	The 3D Euclidean distance between points *a* and *b* (in meters), in kilometers. Both arguments may be arrays of
	points with shapes that broadcast against each other, in which case an array of distances is returned.

	:param a: The first point(s) ``(x, y, z)``.
	:param b: The second point(s) ``(x, y, z)``.
	:return: The distance(s) in kilometers.
	"""
	difference = np.subtract(b, a, dtype=np.float64)
	distance = np.sqrt(np.sum(difference * difference, axis=-1)) / 1000.0
	if np.ndim(distance) == 0:
		return float(distance)
	return distance

def path_loss_db(c, d_km, d_min_km=0.01):
	"""
	Evaluate the path loss ``A + B * log10(max(d_km, d_min_km)) + C``.

	:param c: The path loss coefficients.
	:type c: :py:class:`PathLossCoefficients`
	:param d_km: The link distance(s) in kilometers, which must be positive.
	:param float d_min_km: The minimum distance clamp.
	:return: The path loss(es) in dB.
	"""
	d_km = np.asarray(d_km, dtype=np.float64)
	if not np.all(d_km > 0):
		raise errors.DomainError('link distances must be positive')
	loss = c.a_db + c.b_db_per_decade * np.log10(np.maximum(d_km, d_min_km)) + c.c_db
	if loss.ndim == 0:
		return float(loss)
	return loss

def received_power_mw(tx_power_dbm, pl_db):
	"""
	Convert a transmit power and a path loss into the linear received power.

	:param tx_power_dbm: The transmit power in dBm.
	:param pl_db: The path loss(es) in dB.
	:return: The received power(s) in milliwatts.
	"""
	power = np.power(10.0, (np.subtract(tx_power_dbm, pl_db)) / 10.0)
	if np.ndim(power) == 0:
		return float(power)
	return power
