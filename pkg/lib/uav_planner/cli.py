#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
#  uav_planner/cli.py
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

import argparse
import logging
import os
import sys
import time
import traceback

from . import __version__
from . import errors
from . import evaluation
from . import output
from . import planner
from . import radio
from . import scenario
from . import smoothing
from .config import CRITERIA

__all__ = ('cmd_heatmap', 'cmd_plan', 'cmd_sweep', 'main')

logger = logging.getLogger(__name__)

WORKERS_ENVIRONMENT_VARIABLE = 'UAV_PLANNER_WORKERS'

EXIT_SUCCESS = 0
EXIT_CONFIGURATION = 2
EXIT_INFEASIBLE = 3
EXIT_IO = 4

def _finish(command, config_path, seeds, out_dir, outputs, started):
	manifest = output.RunManifest.new(
		command,
		config_path,
		seeds,
		__version__,
		[os.path.basename(path) for path in outputs],
		time.monotonic() - started
	)
	output.write_manifest(manifest, out_dir)
	return outputs

def cmd_heatmap(config_path, criterion, out_dir, force=False):
	"""
	Write the reward map of *criterion* and the terrestrial SIR heat map of the configured network.

	:return: The paths of the files written, excluding the manifest.
	:rtype: list
	"""
	started = time.monotonic()
	scn = scenario.load_scenario(config_path)
	net = scn.realize()
	rm = radio.reward_map(net, scn.grid, criterion)
	sir_db = radio.sir_heatmap(net, scn.grid)
	output.prepare_output_dir(out_dir, force=force)
	outputs = [
		output.write_reward_map(rm, os.path.join(out_dir, "reward_map_{0}.csv".format(criterion))),
		output.write_sir_heatmap(scn.grid, sir_db, os.path.join(out_dir, 'sir_heatmap.csv'))
	]
	return _finish('heatmap', config_path, [net.seed], out_dir, outputs, started)

def _plan_metrics(scn, net, rm, traj, threshold):
	mbs_coefficients, uav_coefficients = radio.link_coefficients(net.radio)
	dwell = evaluation.dwell_summary(traj, rm)
	return {
		'criterion': traj.criterion,
		'seed': net.seed,
		'n_steps': traj.n_steps,
		'total_reward': traj.total_reward,
		'stay_count': traj.stay_count,
		'discrete': evaluation.evaluate_discrete(net, traj, threshold).to_dict(),
		'baseline': evaluation.baseline_metrics(net, threshold, traj.n_steps, criterion=traj.criterion).to_dict(),
		'dwell': {
			'best_cell': list(dwell.best_cell),
			'first_arrival': dwell.first_arrival,
			'steps_at_best': dwell.steps_at_best
		},
		'minimum_mission_time_s': planner.minimum_mission_time(scn.mission),
		'minimum_steps': planner.minimum_steps(scn.grid, scn.mission),
		'path_loss': {
			'mbs': mbs_coefficients.to_dict(),
			'uav': uav_coefficients.to_dict()
		}
	}

def cmd_plan(config_path, criterion, out_dir, smooth=False, samples_per_interval=10, force=False):
	"""
	Plan the optimal trajectory for *criterion* and write it together with its metrics, optionally along with the
	Bezier smoothed trajectory.

	:return: The paths of the files written, excluding the manifest.
	:rtype: list
	"""
	started = time.monotonic()
	scn = scenario.load_scenario(config_path)
	net = scn.realize()
	rm = radio.reward_map(net, scn.grid, criterion)
	traj = planner.plan(rm, scn.mission)
	threshold = scn.sweep['threshold_bps_hz'] if scn.sweep else evaluation.DEFAULT_THRESHOLD
	metrics = _plan_metrics(scn, net, rm, traj, threshold)
	st = None
	if smooth:
		if traj.n_steps:
			st = smoothing.smooth_trajectory(traj, samples_per_interval)
			metrics['smooth'] = evaluation.evaluate_smooth(net, st, threshold).to_dict()
			metrics['smooth']['max_ground_speed_mps'] = smoothing.max_ground_speed(st)
		else:
			logger.warning('skipping smoothing, the trajectory has no steps')
	output.prepare_output_dir(out_dir, force=force)
	outputs = [output.write_trajectory(traj, os.path.join(out_dir, "trajectory_{0}.csv".format(criterion)))]
	if st is not None:
		outputs.append(output.write_smooth_trajectory(st, os.path.join(out_dir, "smooth_{0}.csv".format(criterion))))
	outputs.append(output.write_json(metrics, os.path.join(out_dir, "metrics_{0}.json".format(criterion))))
	return _finish('plan', config_path, [net.seed], out_dir, outputs, started)

def cmd_sweep(config_path, out_dir, workers=1, force=False):
	"""
	Run the Monte-Carlo sweep of the configuration's ``sweep`` section and write its table and summary.

	:return: The paths of the files written, excluding the manifest.
	:rtype: list
	"""
	started = time.monotonic()
	scn = scenario.load_scenario(config_path)
	cfg = evaluation.SweepConfig.from_scenario(scn)
	report = evaluation.run_sweep(cfg, workers=workers)
	output.prepare_output_dir(out_dir, force=force)
	outputs = output.write_sweep(report, out_dir)
	return _finish('sweep', config_path, cfg.seeds, out_dir, outputs, started)

def _worker_count(value):
	if value is None:
		value = os.environ.get(WORKERS_ENVIRONMENT_VARIABLE, '1')
	try:
		count = int(value)
	except ValueError:
		count = 0
	if count < 1:
		raise errors.InvariantError("must be a whole number >= 1 (got {0!r})".format(value), 'workers')
	return count

def _parser():
	parser = argparse.ArgumentParser(description='UAV Planner: optimal UAV base station trajectories', conflict_handler='resolve')
	parser.add_argument('-v', '--version', action='version', version=parser.prog + ' Version: ' + __version__)
	parser.add_argument(
		'-L', '--log-level',
		dest='loglvl',
		default='WARNING',
		choices=('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'),
		help='set the logging level'
	)
	parser.add_argument('--debug', action='store_true', default=False, help='log at the debug level and show tracebacks')
	subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
	subparsers.required = True

	common = argparse.ArgumentParser(add_help=False)
	common.add_argument('--config', dest='config_path', metavar='PATH', required=True, help='the JSON scenario file')
	common.add_argument('--out', dest='out_dir', metavar='DIR', required=True, help='the output directory')
	common.add_argument('--force', action='store_true', default=False, help='write into a populated output directory')

	heatmap = subparsers.add_parser('heatmap', parents=[common], help='write the reward map and the SIR heat map')
	heatmap.add_argument('--criterion', choices=CRITERIA, default='pf', help='the network objective')

	plan = subparsers.add_parser('plan', parents=[common], help='plan the optimal trajectory')
	plan.add_argument('--criterion', choices=CRITERIA, default='pf', help='the network objective')
	plan.add_argument('--smooth', action='store_true', default=False, help='also write the Bezier smoothed trajectory')
	plan.add_argument('--samples-per-interval', dest='samples_per_interval', type=int, default=10, metavar='N', help='smoothed samples per control interval')

	sweep = subparsers.add_parser('sweep', parents=[common], help='run the Monte-Carlo sweep')
	sweep.add_argument('--workers', type=int, metavar='N', help="worker processes (default: ${0} or 1)".format(WORKERS_ENVIRONMENT_VARIABLE))
	return parser

def _report(error, debug):
	print("{0}: {1}".format(error.__class__.__name__, getattr(error, 'message', error)), file=sys.stderr)
	suggestion = getattr(error, 'suggestion', None)
	if suggestion:
		print("Did you mean '{0}'?".format(suggestion), file=sys.stderr)
	if debug:
		traceback.print_exc()

def main(argv=None):
	parser = _parser()
	arguments = parser.parse_args(argv)
	logging.basicConfig(
		format='%(asctime)s %(name)-28s %(levelname)-8s %(message)s',
		level=logging.DEBUG if arguments.debug else getattr(logging, arguments.loglvl)
	)

	try:
		if arguments.command == 'heatmap':
			cmd_heatmap(arguments.config_path, arguments.criterion, arguments.out_dir, force=arguments.force)
		elif arguments.command == 'plan':
			if arguments.samples_per_interval < 1:
				parser.error('--samples-per-interval must be at least 1')
			cmd_plan(
				arguments.config_path,
				arguments.criterion,
				arguments.out_dir,
				smooth=arguments.smooth,
				samples_per_interval=arguments.samples_per_interval,
				force=arguments.force
			)
		elif arguments.command == 'sweep':
			cmd_sweep(arguments.config_path, arguments.out_dir, workers=_worker_count(arguments.workers), force=arguments.force)
	except errors.InfeasibleMissionError as error:
		_report(error, arguments.debug)
		return EXIT_INFEASIBLE
	except (errors.OutputExistsError, OSError) as error:
		_report(error, arguments.debug)
		return EXIT_IO
	except errors.PlannerError as error:
		_report(error, arguments.debug)
		return EXIT_CONFIGURATION
	return EXIT_SUCCESS

if __name__ == '__main__':
	sys.exit(main())
