#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  uav_planner/types.py
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

import math
import numbers

import numpy as np

__all__ = (
	'ValueObject',
	'is_integer_number',
	'is_natural_number',
	'is_numeric',
	'is_point',
	'is_positive_number',
	'is_real_number'
)

def is_numeric(value):
	"""
	Check whether *value* is a numeric value. Booleans are explicitly excluded even though Python treats them as
	integers, because a ``true`` in a configuration file is never a valid count or length.

	:param value: The value to check. This value is a native Python or numpy scalar.
	:return: Whether or not the value is numeric.
	:rtype: bool
	"""
	if isinstance(value, bool):
		return False
	return isinstance(value, numbers.Real)

def is_real_number(value):
	"""
	Check whether *value* is a real number (i.e. numeric as well as being finite). Despite being able to be
	represented as a float, ``NaN`` is not considered a real number for the purposes of this function.

	:param value: The value to check.
	:return: Whether or not the value is a real number.
	:rtype: bool
	"""
	if not is_numeric(value):
		return False
	return math.isfinite(value)

def is_positive_number(value):
	"""
	Check whether *value* is a finite number strictly greater than zero, such as a length or a duration.

	:param value: The value to check.
	:return: Whether or not the value is a positive real number.
	:rtype: bool
	"""
	return is_real_number(value) and value > 0

def is_integer_number(value):
	"""
	Check whether *value* is an integer number (i.e. a whole, number). This can, for example, be used to check if a
	floating point number such as ``3.0`` can safely be converted to an integer without loss of information.

	:param value: The value to check.
	:return: Whether or not the value is an integer number.
	:rtype: bool
	"""
	if not is_real_number(value):
		return False
	return math.floor(value) == value

def is_natural_number(value):
	"""
	Check whether *value* is a natural number (i.e. a whole, non-negative number).

	:param value: The value to check.
	:return: Whether or not the value is a natural number.
	:rtype: bool
	"""
	return is_integer_number(value) and value >= 0

def is_point(value):
	"""
	Check whether *value* is a two dimensional point, i.e. a sequence of exactly two real numbers.

	:param value: The value to check.
	:return: Whether or not the value is a 2D point.
	:rtype: bool
	"""
	if isinstance(value, (str, bytes)):
		return False
	try:
		length = len(value)
	except TypeError:
		return False
	return length == 2 and all(is_real_number(coordinate) for coordinate in value)

def _values_equal(left, right):
	if isinstance(left, np.ndarray) or isinstance(right, np.ndarray):
		return isinstance(left, np.ndarray) and isinstance(right, np.ndarray) and np.array_equal(left, right)
	return left == right

class ValueObject(object):
	"""
	The base of the planner's value types. Subclasses declare their fields in :py:attr:`__slots__`, set them once in
	``__init__`` and are compared by value. Types holding numpy arrays compare element-wise but can not be hashed.
	"""
	__slots__ = ()
	@classmethod
	def fields(cls):
		"""The names of the fields in declaration order, including those of base classes."""
		names = []
		for klass in reversed(cls.__mro__):
			names.extend(name for name in klass.__dict__.get('__slots__', ()) if name not in names)
		return tuple(names)

	def __eq__(self, other):
		if other.__class__ is not self.__class__:
			return NotImplemented
		return all(_values_equal(getattr(self, name), getattr(other, name)) for name in self.fields())

	def __hash__(self):
		return hash((self.__class__.__name__,) + tuple(getattr(self, name) for name in self.fields()))

	def __repr__(self):
		return "<{} {} >".format(
			self.__class__.__name__,
			' '.join("{}={!r}".format(name, getattr(self, name)) for name in self.fields())
		)

	def to_dict(self):
		"""
		Return the fields as a new dictionary. Values are not converted, nested value objects and arrays are returned
		as-is.

		:rtype: dict
		"""
		return {name: getattr(self, name) for name in self.fields()}
