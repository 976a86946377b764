#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  uav_planner/errors.py
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

class _INFEASIBLE(object):
	def __bool__(self):
		return False
	__name__ = 'INFEASIBLE'
	def __repr__(self):
		return self.__name__
INFEASIBLE = _INFEASIBLE()
"""
A sentinel value returned in place of a grid cell when a control action would move the UAV off of the grid. When
evaluated, the value is falsy.
"""

class PlannerError(Exception):
	"""The base exception class from which other exceptions within this package inherit."""
	def __init__(self, message=''):
		"""
		:param str message: A text description of what error occurred.
		"""
		super(PlannerError, self).__init__(message)
		self.message = message
		"""A text description of what error occurred."""

	def __repr__(self):
		return "<{} message={!r} >".format(self.__class__.__name__, self.message)

class ConfigurationError(PlannerError):
	"""A base error for issues with the scenario or sweep configuration."""
	pass

class ScenarioFileError(ConfigurationError):
	"""An error raised when the configuration file can not be read or is not valid JSON."""
	def __init__(self, message, path):
		"""
		:param str message: A text description of what error occurred.
		:param str path: The path of the configuration file.
		"""
		super(ScenarioFileError, self).__init__(message)
		self.path = path
		"""The path of the configuration file."""

class SchemaError(ConfigurationError):
	"""
	An error raised when a configuration value is missing, unknown or of the wrong kind. The *field* is the dotted path
	of the offending key, e.g. ``mission.delta_s``.
	"""
	def __init__(self, message, field, suggestion=None):
		"""
		:param str message: A text description of what error occurred.
		:param str field: The dotted path of the offending key.
		:param str suggestion: An optional suggestion for a valid key name.
		"""
		super(SchemaError, self).__init__("{0}: {1}".format(field, message))
		self.field = field
		"""The dotted path of the offending key."""
		self.suggestion = suggestion
		"""An optional suggestion for a valid key name."""

	def __repr__(self):
		return "<{} message={!r} suggestion={!r} >".format(self.__class__.__name__, self.message, self.suggestion)

class InvariantError(ConfigurationError):
	"""An error raised when a configuration value is well formed but violates a domain invariant."""
	def __init__(self, message, field):
		"""
		:param str message: A text description of what error occurred.
		:param str field: The dotted path of the value which violates the invariant.
		"""
		super(InvariantError, self).__init__("{0}: {1}".format(field, message))
		self.field = field
		"""The dotted path of the value which violates the invariant."""

class ModelRangeError(PlannerError):
	"""
	An error raised when the propagation model is evaluated outside of the parameter range for which it was fitted and
	the caller did not explicitly force the evaluation.
	"""
	def __init__(self, message, parameter, value):
		"""
		:param str message: A text description of what error occurred.
		:param str parameter: The name of the out of range parameter.
		:param float value: The offending value.
		"""
		super(ModelRangeError, self).__init__(message)
		self.parameter = parameter
		"""The name of the out of range parameter."""
		self.value = value
		"""The offending value."""

class DomainError(PlannerError):
	"""An error raised when a function is evaluated outside of its mathematical domain."""
	pass

class InfeasibleMissionError(PlannerError):
	"""An error raised when the destination can not be reached from the start within the mission duration."""
	def __init__(self, chebyshev_distance, n_steps):
		"""
		:param int chebyshev_distance: The minimum number of lattice moves between the start and destination cells.
		:param int n_steps: The number of time steps available to the mission.
		"""
		self.chebyshev_distance = chebyshev_distance
		"""The minimum number of lattice moves between the start and destination cells."""
		self.n_steps = n_steps
		"""The number of time steps available to the mission."""
		super(InfeasibleMissionError, self).__init__(
			"mission is infeasible: destination is {0} grid moves (Chebyshev distance) from the start but only {1} "
			"time steps are available".format(chebyshev_distance, n_steps)
		)

class OutputExistsError(PlannerError):
	"""An error raised when results would overwrite the contents of an existing output directory."""
	def __init__(self, path):
		"""
		:param str path: The output directory which already has contents.
		"""
		self.path = path
		"""The output directory which already has contents."""
		super(OutputExistsError, self).__init__("output directory is not empty (use --force to overwrite): {0}".format(path))
