#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  uav_planner/smoothing.py
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
from . import types

import numpy as np
import pandas as pd
import scipy.special

__all__ = (
	'BezierCurve',
	'SmoothTrajectory',
	'bernstein',
	'bezier_eval',
	'max_ground_speed',
	'smooth_trajectory'
)

logger = logging.getLogger(__name__)

class BezierCurve(types.ValueObject):
	"""A single global Bezier curve of degree ``n`` over ``n + 1`` ordered 2D control points, in meters."""
	__slots__ = ('control_points',)
	def __init__(self, control_points):
		control_points = np.array(control_points, dtype=np.float64)
		if control_points.ndim != 2 or control_points.shape[1] != 2:
			raise errors.DomainError('control points must be a sequence of 2D points')
		if len(control_points) < 2:
			raise errors.DomainError('a Bezier curve needs at least two control points')
		control_points.setflags(write=False)
		self.control_points = control_points

	def __repr__(self):
		return "<{} degree={} >".format(self.__class__.__name__, self.degree)

	@property
	def degree(self):
		return len(self.control_points) - 1

class SmoothTrajectory(types.ValueObject):
	"""
	A Bezier smoothed trajectory sampled uniformly in the curve parameter. *times* holds the timestamps in seconds and
	*points* the matching positions as an array of shape ``(S, 2)``.
	"""
	__slots__ = ('times', 'points', 'source', 'samples_per_interval')
	def __init__(self, times, points, source, samples_per_interval):
		self.times = times
		self.points = points
		self.source = source
		self.samples_per_interval = samples_per_interval

	def __repr__(self):
		return "<{} samples={} samples_per_interval={} >".format(
			self.__class__.__name__, len(self), self.samples_per_interval
		)

	def __len__(self):
		return len(self.times)

	@property
	def samples(self):
		"""The samples as a list of ``(t_s, (x_m, y_m))`` tuples."""
		return [(float(t), (float(x), float(y))) for t, (x, y) in zip(self.times, self.points)]

	def to_frame(self):
		return pd.DataFrame({'t_s': self.times, 'x_m': self.points[:, 0], 'y_m': self.points[:, 1]})

def _check_parameter(t_hat):
	t_hat = np.asarray(t_hat, dtype=np.float64)
	if not np.all((t_hat >= 0.0) & (t_hat <= 1.0)):
		raise errors.DomainError('the curve parameter must lie within [0, 1]')
	return t_hat

def bernstein(i, n, t_hat):
	"""
	Evaluate the Bernstein basis polynomial ``C(n, i) * (1 - t_hat) ** (n - i) * t_hat ** i``.

	:param int i: The index of the basis polynomial, ``0 <= i <= n``.
	:param int n: The degree.
	:param t_hat: The curve parameter(s) in ``[0, 1]``.
	:return: The weight(s).
	"""
	if not (0 <= i <= n):
		raise errors.DomainError("the basis index must satisfy 0 <= i <= n (got i={0}, n={1})".format(i, n))
	t_hat = _check_parameter(t_hat)
	weight = float(scipy.special.comb(n, i, exact=True)) * (1.0 - t_hat) ** (n - i) * t_hat ** i
	if weight.ndim == 0:
		return float(weight)
	return weight

def bezier_eval(c, t_hat):
	"""
	Evaluate curve *c* at *t_hat* by repeated linear interpolation between neighboring control points (the de Casteljau
	algorithm), which stays stable at the high degrees produced by long trajectories.

	:param c: The curve.
	:type c: :py:class:`BezierCurve`
	:param t_hat: A scalar parameter or an array of parameters in ``[0, 1]``.
	:return: A point of shape ``(2,)`` or an array of shape ``(len(t_hat), 2)``.
	:rtype: :py:class:`numpy.ndarray`
	"""
	t_hat = _check_parameter(t_hat)
	scalar = t_hat.ndim == 0
	t = t_hat.reshape(-1, 1, 1)
	points = np.broadcast_to(c.control_points, (t.shape[0],) + c.control_points.shape)
	while points.shape[1] > 1:
		points = (1.0 - t) * points[:, :-1] + t * points[:, 1:]
	points = points[:, 0]
	return points[0] if scalar else points

def smooth_trajectory(traj, samples_per_interval=10):
	"""
	Smooth *traj* with the Bezier curve whose control points are all of its waypoints and sample it ``N *
	samples_per_interval + 1`` times, uniformly in the curve parameter over the mission duration.

	:param traj: The DP trajectory, which must have at least one step.
	:type traj: :py:class:`~uav_planner.planner.Trajectory`
	:param int samples_per_interval: The number of samples per control interval.
	:rtype: :py:class:`SmoothTrajectory`
	"""
	if samples_per_interval < 1:
		raise errors.DomainError('samples_per_interval must be at least 1')
	if traj.n_steps < 1:
		raise errors.DomainError('smoothing requires a trajectory with at least one step')
	curve = BezierCurve(traj.waypoints)
	count = traj.n_steps * samples_per_interval
	t_hat = np.arange(count + 1) / count
	points = bezier_eval(curve, t_hat)
	points.setflags(write=False)
	times = traj.total_time_s * t_hat
	times.setflags(write=False)
	logger.debug("sampled a degree %d curve %d times", curve.degree, count + 1)
	return SmoothTrajectory(times, points, traj, samples_per_interval)

def max_ground_speed(st):
	"""
	The largest average speed between two consecutive samples of *st*, in meters per second.

	:type st: :py:class:`SmoothTrajectory`
	:rtype: float
	"""
	if len(st) < 2:
		raise errors.DomainError('at least two samples are needed to measure a speed')
	distance = np.hypot(*np.diff(st.points, axis=0).T)
	return float(np.max(distance / np.diff(st.times)))
