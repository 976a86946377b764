#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  uav_planner/suggestions.py
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

def _matching_flags(str1, str2):
	window = max(max(len(str1), len(str2)) // 2 - 1, 0)
	flags1 = [False] * len(str1)
	flags2 = [False] * len(str2)
	for index1, character in enumerate(str1):
		low = max(0, index1 - window)
		high = min(index1 + window + 1, len(str2))
		for index2 in range(low, high):
			if flags2[index2] or str2[index2] != character:
				continue
			flags1[index1] = flags2[index2] = True
			break
	return flags1, flags2

def jaro_distance(str1, str2):
	"""
	Compute the Jaro similarity of two strings, 1.0 for identical strings and 0.0 for strings with no characters in
	common.

	:param str str1: The first string.
	:param str str2: The second string.
	:rtype: float
	"""
	if str1 == str2:
		return 1.0
	if not str1 or not str2:
		return 0.0
	flags1, flags2 = _matching_flags(str1, str2)
	matched1 = [character for character, flag in zip(str1, flags1) if flag]
	matched2 = [character for character, flag in zip(str2, flags2) if flag]
	matches = float(len(matched1))
	if not matches:
		return 0.0
	transpositions = sum(1 for char1, char2 in zip(matched1, matched2) if char1 != char2) / 2.0
	return (matches / len(str1) + matches / len(str2) + (matches - transpositions) / matches) / 3.0

def jaro_winkler_distance(str1, str2, scale=0.1):
	"""
	Compute the Jaro-Winkler similarity which boosts the Jaro similarity of strings sharing a common prefix of up to
	four characters.

	:param str str1: The first string.
	:param str str2: The second string.
	:param float scale: The prefix weight.
	:rtype: float
	"""
	distance = jaro_distance(str1, str2)
	if distance <= 0.7:
		return distance
	prefix = 0
	for char1, char2 in zip(str1[:4], str2[:4]):
		if char1 != char2:
			break
		prefix += 1
	return distance + scale * prefix * (1 - distance)

def suggest_key(word, options):
	"""
	Select the best match for *word* from the valid configuration key *options*. If there are no options, or none of
	them share any characters with *word*, this function will return None.

	:param str word: The misspelled key to suggest an alternative for.
	:param options: The valid key names.
	:return: The best replacement for *word*.
	:rtype: str
	"""
	scored = [(jaro_winkler_distance(word, option), option) for option in sorted(options)]
	scored = [item for item in scored if item[0] > 0.0]
	if not scored:
		return None
	return max(scored, key=lambda item: item[0])[1]
