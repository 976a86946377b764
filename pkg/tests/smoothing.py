#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  tests/smoothing.py
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

import fractions
import math
import unittest

import uav_planner.errors as errors
import uav_planner.planner as planner
import uav_planner.radio as radio
import uav_planner.scenario as scenario
import uav_planner.smoothing as smoothing

from ._utils import DEFAULT_AREA, default_network, random_reward_map

import numpy as np
import scipy.optimize

__all__ = ('BernsteinTests', 'BezierTests', 'SmoothTrajectoryTests')

def exact_bezier(control_points, t_hat):
	"""Evaluate the Bernstein sum in rational arithmetic."""
	n = len(control_points) - 1
	t = fractions.Fraction(t_hat)
	point = [fractions.Fraction(0), fractions.Fraction(0)]
	for i, control_point in enumerate(control_points):
		weight = math.comb(n, i) * (1 - t) ** (n - i) * t ** i
		point[0] += weight * fractions.Fraction(control_point[0])
		point[1] += weight * fractions.Fraction(control_point[1])
	return float(point[0]), float(point[1])

def in_convex_hull(points, sample):
	# feasibility of a convex combination of the points reproducing the sample
	count = len(points)
	result = scipy.optimize.linprog(
		np.zeros(count),
		A_eq=np.vstack((points.T, np.ones((1, count)))),
		b_eq=np.append(sample, 1.0),
		bounds=[(0, None)] * count,
		method='highs'
	)
	return result.status == 0

class BernsteinTests(unittest.TestCase):
	def test_partition_of_unity(self):
		t_hat = np.linspace(0.0, 1.0, 101)
		for n in range(1, 61):
			total = sum(smoothing.bernstein(i, n, t_hat) for i in range(n + 1))
			self.assertLessEqual(float(np.max(np.abs(total - 1.0))), 1e-12, msg="n={0}".format(n))

	def test_known_values(self):
		self.assertEqual(smoothing.bernstein(0, 2, 0.5), 0.25)
		exact = math.comb(7, 3) * fractions.Fraction(7, 10) ** 4 * fractions.Fraction(3, 10) ** 3
		self.assertAlmostEqual(smoothing.bernstein(3, 7, 0.3), float(exact), delta=1e-15)

	def test_weights_are_non_negative(self):
		weights = smoothing.bernstein(4, 9, np.linspace(0.0, 1.0, 11))
		self.assertTrue(np.all(weights >= 0))

	def test_domain(self):
		for i, n, t_hat in ((-1, 3, 0.5), (4, 3, 0.5), (1, 3, -0.1), (1, 3, 1.5)):
			with self.assertRaises(errors.DomainError):
				smoothing.bernstein(i, n, t_hat)

class BezierTests(unittest.TestCase):
	def test_end_point_interpolation(self):
		points = np.random.default_rng(3).uniform(0.0, 1000.0, size=(31, 2))
		curve = smoothing.BezierCurve(points)
		self.assertEqual(curve.degree, 30)
		self.assertEqual(tuple(smoothing.bezier_eval(curve, 0.0)), tuple(points[0]))
		self.assertEqual(tuple(smoothing.bezier_eval(curve, 1.0)), tuple(points[-1]))

	def test_linear_curve(self):
		curve = smoothing.BezierCurve([(0.0, 0.0), (100.0, 50.0)])
		self.assertEqual(tuple(smoothing.bezier_eval(curve, 0.5)), (50.0, 25.0))

	def test_matches_the_exact_bernstein_sum(self):
		points = np.random.default_rng(8).uniform(0.0, 1000.0, size=(31, 2))
		curve = smoothing.BezierCurve(points)
		t_hat = np.linspace(0.0, 1.0, 101)
		evaluated = smoothing.bezier_eval(curve, t_hat)
		self.assertEqual(evaluated.shape, (101, 2))
		for t, point in zip(t_hat, evaluated):
			expected = exact_bezier(points, t)
			self.assertLessEqual(math.hypot(point[0] - expected[0], point[1] - expected[1]), 1e-9, msg="t={0}".format(t))

	def test_domain(self):
		curve = smoothing.BezierCurve([(0.0, 0.0), (100.0, 50.0)])
		with self.assertRaises(errors.DomainError):
			smoothing.bezier_eval(curve, 1.01)
		with self.assertRaises(errors.DomainError):
			smoothing.BezierCurve([(0.0, 0.0)])

class SmoothTrajectoryTests(unittest.TestCase):
	@classmethod
	def setUpClass(cls):
		cls.grid = scenario.make_grid(DEFAULT_AREA, 100.0)
		cls.mission = scenario.MissionSpec()
		cls.net = default_network()
		cls.traj = planner.plan(radio.reward_map(cls.net, cls.grid, 'pf'), cls.mission)

	def test_sampling(self):
		st = smoothing.smooth_trajectory(self.traj, samples_per_interval=10)
		self.assertEqual(len(st), 301)
		self.assertEqual(st.times[0], 0.0)
		self.assertEqual(st.times[-1], 240.0)
		self.assertTrue(np.all(np.diff(st.times) > 0))
		self.assertEqual(tuple(st.points[0]), self.mission.start)
		self.assertEqual(tuple(st.points[-1]), self.mission.dest)
		self.assertEqual(st.samples[0], (0.0, self.mission.start))
		self.assertEqual(list(st.to_frame().columns), ['t_s', 'x_m', 'y_m'])

	def test_samples_stay_in_the_convex_hull(self):
		st = smoothing.smooth_trajectory(self.traj, samples_per_interval=10)
		waypoints = np.unique(self.traj.waypoints, axis=0)
		for sample in st.points:
			self.assertTrue(in_convex_hull(waypoints, sample), msg="sample {0!r}".format(tuple(sample)))

	def test_all_stay_trajectory(self):
		values = np.full(self.grid.n_cells, 1.0)
		values[self.grid.index((2, 7))] = 3.0
		rm = radio.RewardMap(self.grid, 'sumrate', values)
		traj = planner.plan(rm, scenario.MissionSpec((200.0, 700.0), (200.0, 700.0), 80.0))
		st = smoothing.smooth_trajectory(traj, samples_per_interval=4)
		np.testing.assert_allclose(st.points, np.tile([200.0, 700.0], (41, 1)), rtol=0, atol=1e-9)
		self.assertLessEqual(smoothing.max_ground_speed(st), 1e-9)

	def test_straight_path_is_colinear(self):
		grid = scenario.GridSpec((0.0, 0.0), 100.0, 5, 5)
		rm = random_reward_map(grid, np.random.default_rng(4))
		traj = planner.plan(rm, scenario.MissionSpec((0.0, 0.0), (400.0, 400.0), 32.0))
		st = smoothing.smooth_trajectory(traj, samples_per_interval=7)
		self.assertLessEqual(float(np.max(np.abs(st.points[:, 0] - st.points[:, 1]))), 1e-9)

	def test_linear_curve_speed(self):
		grid = scenario.GridSpec((0.0, 0.0), 100.0, 3, 3)
		rm = random_reward_map(grid, np.random.default_rng(4))
		traj = planner.plan(rm, scenario.MissionSpec((0.0, 0.0), (100.0, 0.0), 8.0))
		st = smoothing.smooth_trajectory(traj, samples_per_interval=5)
		self.assertAlmostEqual(smoothing.max_ground_speed(st), 100.0 / 8.0, places=9)

	def test_zero_step_trajectory_is_rejected(self):
		rm = random_reward_map(self.grid, np.random.default_rng(4))
		traj = planner.plan(rm, scenario.MissionSpec((0.0, 0.0), (0.0, 0.0), 0.0))
		with self.assertRaises(errors.DomainError):
			smoothing.smooth_trajectory(traj)

	def test_speed_bound_across_seeds(self):
		for seed in range(20):
			net = default_network(seed=seed)
			traj = planner.plan(radio.reward_map(net, self.grid, 'pf'), self.mission)
			st = smoothing.smooth_trajectory(traj)
			self.assertLessEqual(smoothing.max_ground_speed(st), 17.7 + 1e-6, msg="seed={0}".format(seed))

if __name__ == '__main__':
	unittest.main()
