#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  tests/suggestions.py
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

import random
import string
import unittest

import uav_planner.suggestions as suggestions

__all__ = ('JaroWinklerTests', 'SuggestKeyTests')

JARO_WINKLER_TEST_CASES = (
	('martha', 'marhta', 0.9611),
	('dwayne', 'duane', 0.84),
	('dixon', 'dicksonx', 0.8133),
)

class JaroWinklerTests(unittest.TestCase):
	def test_jaro_winkler_distance(self):
		for str1, str2, distance in JARO_WINKLER_TEST_CASES:
			self.assertEqual(
				round(suggestions.jaro_winkler_distance(str1, str2), 4),
				distance,
				msg="({}, {}) != {}".format(str1, str2, distance)
			)

	def test_jaro_winkler_distance_is_symmetric(self):
		for str1, str2, _ in JARO_WINKLER_TEST_CASES:
			self.assertAlmostEqual(
				suggestions.jaro_winkler_distance(str1, str2),
				suggestions.jaro_winkler_distance(str2, str1),
				places=12
			)

	def test_jaro_winkler_distance_match(self):
		strx = ''.join(random.choice(string.ascii_letters) for _ in range(10))
		self.assertEqual(suggestions.jaro_winkler_distance(strx, strx), 1.0)

	def test_jaro_distance_without_common_characters(self):
		self.assertEqual(suggestions.jaro_distance('abc', 'xyz'), 0.0)
		self.assertEqual(suggestions.jaro_distance('', 'xyz'), 0.0)

class SuggestKeyTests(unittest.TestCase):
	def test_suggest_key(self):
		self.assertEqual(suggestions.suggest_key('widht_m', ('width_m', 'height_m')), 'width_m')
		self.assertEqual(suggestions.suggest_key('delta', ('start', 'dest', 'total_time_s', 'delta_s', 'v_max_mps')), 'delta_s')
		self.assertEqual(suggestions.suggest_key('mision', ('area', 'grid', 'network', 'radio', 'mission', 'sweep')), 'mission')

	def test_suggest_key_without_options(self):
		self.assertIsNone(suggestions.suggest_key('anything', ()))
		self.assertIsNone(suggestions.suggest_key('qqq', ('xyz',)))

if __name__ == '__main__':
	unittest.main()
