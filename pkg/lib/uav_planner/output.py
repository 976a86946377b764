#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  uav_planner/output.py
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
Writers for the result files. CSV files use ``.`` as the decimal separator, a mandatory header row and ``\\n``
terminated rows. Every file is written to a temporary sibling first and then moved into place so a reader never sees
a partially written file.
"""

import contextlib
import datetime
import json
import logging
import os
import tempfile

from . import errors
from . import types

import dateutil.tz
import pandas as pd

__all__ = (
	'RunManifest',
	'prepare_output_dir',
	'write_csv',
	'write_json',
	'write_manifest',
	'write_reward_map',
	'write_sir_heatmap',
	'write_smooth_trajectory',
	'write_sweep',
	'write_trajectory'
)

logger = logging.getLogger(__name__)

MANIFEST_NAME = 'manifest.json'

class RunManifest(types.ValueObject):
	"""A record of one command invocation and the files it produced, written next to those files."""
	__slots__ = ('command', 'config_path', 'seeds', 'version', 'outputs', 'duration_s', 'created')
	def __init__(self, command, config_path, seeds, version, outputs, duration_s, created):
		self.command = command
		self.config_path = config_path
		self.seeds = tuple(seeds)
		self.version = version
		self.outputs = tuple(outputs)
		self.duration_s = float(duration_s)
		self.created = created

	@classmethod
	def new(cls, command, config_path, seeds, version, outputs, duration_s):
		created = datetime.datetime.now(dateutil.tz.tzutc())
		return cls(command, config_path, seeds, version, outputs, duration_s, created)

	def to_dict(self):
		data = super(RunManifest, self).to_dict()
		data['seeds'] = list(self.seeds)
		data['outputs'] = list(self.outputs)
		data['created'] = self.created.isoformat()
		return data

def _file_mode():
	# the umask can only be read by replacing it
	umask = os.umask(0)
	os.umask(umask)
	return 0o666 & ~umask

@contextlib.contextmanager
def _atomic(path):
	directory = os.path.dirname(os.path.abspath(path))
	handle, temporary = tempfile.mkstemp(dir=directory, prefix='.' + os.path.basename(path) + '.', suffix='.tmp')
	try:
		with os.fdopen(handle, 'w', newline='') as file_h:
			yield file_h
		# mkstemp creates the file readable by its owner only
		os.chmod(temporary, _file_mode())
		os.replace(temporary, path)
	except BaseException:
		with contextlib.suppress(OSError):
			os.unlink(temporary)
		raise
	logger.info("wrote %s", path)

def prepare_output_dir(path, force=False):
	"""
	Create the output directory *path*. A directory which already contains files is only reused when *force* is set,
	in which case files are overwritten in place.

	:param str path: The directory to prepare.
	:param bool force: Allow writing into a populated directory.
	"""
	if os.path.isdir(path) and os.listdir(path) and not force:
		raise errors.OutputExistsError(path)
	os.makedirs(path, exist_ok=True)

def write_csv(frame, path):
	"""
	Write *frame* to *path* as CSV without the index.

	:type frame: :py:class:`pandas.DataFrame`
	:param str path: The destination file.
	:return: The path that was written.
	"""
	with _atomic(path) as file_h:
		frame.to_csv(file_h, index=False, lineterminator='\n')
	return path

def write_json(data, path):
	"""Write the JSON serializable *data* to *path* with sorted keys."""
	with _atomic(path) as file_h:
		json.dump(data, file_h, indent=2, sort_keys=True, allow_nan=False)
		file_h.write('\n')
	return path

def write_reward_map(rm, path):
	"""Write a reward map as the columns ``x_m``, ``y_m`` and ``value``, one row per grid cell."""
	return write_csv(rm.to_frame(), path)

def write_sir_heatmap(grid, sir_db, path):
	"""Write the per cell SIR values as the columns ``x_m``, ``y_m`` and ``sir_db``."""
	centers = grid.centers()
	return write_csv(pd.DataFrame({'x_m': centers[:, 0], 'y_m': centers[:, 1], 'sir_db': sir_db}), path)

def write_trajectory(traj, path):
	"""
	Write a DP trajectory with the columns ``i``, ``t_s``, ``x_m``, ``y_m``, ``action_label``, ``v_mps``,
	``heading_rad`` and ``stage_reward``.
	"""
	return write_csv(traj.to_frame(), path)

def write_smooth_trajectory(st, path):
	"""Write a smoothed trajectory with the columns ``t_s``, ``x_m`` and ``y_m``."""
	return write_csv(st.to_frame(), path)

def write_sweep(report, directory):
	"""
	Write the sweep table to ``sweep.csv`` and its summary to ``summary.json`` in *directory*.

	:type report: :py:class:`~uav_planner.evaluation.SweepReport`
	:return: The paths that were written.
	:rtype: list
	"""
	return [
		write_csv(report.to_frame(), os.path.join(directory, 'sweep.csv')),
		write_json(report.summary(), os.path.join(directory, 'summary.json'))
	]

def write_manifest(manifest, directory):
	"""Write *manifest* as ``manifest.json`` in *directory*."""
	return write_json(manifest.to_dict(), os.path.join(directory, MANIFEST_NAME))
