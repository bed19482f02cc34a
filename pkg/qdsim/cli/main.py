import argparse
import logging
import sys
import warnings
from .run_config import RunConfig
from ..analysis.regime import bound_window, classify_regime
from ..analysis.trajectory import Trajectory
from ..core.errors import QdsimError, ReferenceDiscrepancyWarning
from ..file_reading import read_tool
from ..file_reading.state_reader import state_to_json
from ..states.families import StateFamily

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON run configuration; flags override its values')
    common.add_argument('--family', choices=[f.value for f in StateFamily])
    common.add_argument('--param', type=float, help='alpha for horodecki/rotated, p for isotropic')
    common.add_argument('--scenario', choices=['global', 'multilocal', 'collective'])
    common.add_argument('--gamma1', type=float, help='multi-local dephasing rate')
    common.add_argument('--gamma2', type=float, help='collective dephasing rate')
    common.add_argument('--t-max', type=float, help='end of the Gamma t grid')
    common.add_argument('--steps', type=int, help='number of grid points')
    common.add_argument('--state', help='raw state file (JSON 9x9 of [re, im])')
    common.add_argument('--output', help='output file (default: standard output)')
    common.add_argument('-v', '--verbose', action='count', default=0)
    return common


def build_parser():
    parser = argparse.ArgumentParser(prog='qdsim',
                                     description='Two-qutrit dephasing: negativity, CCNR and sudden-death times.')
    sub = parser.add_subparsers(dest='command', required=True)
    common = _common_options()
    sub.add_parser('sweep', parents=[common], help='negativity and CCNR on a Gamma t grid, as CSV')
    sub.add_parser('crossings', parents=[common], help='t_N, t_R and regime')
    sub.add_parser('classify', parents=[common], help='regime label and certified window')
    sub.add_parser('dump-state', parents=[common], help='write the initial state as raw JSON')
    return parser


def resolve_config(args) -> RunConfig:
    base = RunConfig.from_file(args.config) if args.config else RunConfig()
    family = args.family
    if args.state and family is None:
        family = StateFamily.RAW.value
    return base.with_overrides(family=family, family_param=args.param, scenario=args.scenario,
                               gamma1=args.gamma1, gamma2=args.gamma2, t_max=args.t_max,
                               steps=args.steps, raw_state_path=args.state)


def _fmt(value):
    return 'none' if value is None else f'{value:.6f}'


def _emit(text: str, output):
    if output is None:
        sys.stdout.write(text)
    else:
        read_tool.write_text(output, text)


def _report(config: RunConfig):
    scenario = config.build_scenario()
    with warnings.catch_warnings():
        # discrepancies are carried on the report and logged
        warnings.simplefilter('ignore', ReferenceDiscrepancyWarning)
        if StateFamily(config.family) is StateFamily.RAW:
            return bound_window(config.build_state(), scenario)
        return classify_regime(config.family, config.family_param, scenario)


def header_comments(config: RunConfig):
    param = 'none' if config.family == StateFamily.RAW.value else config.family_param
    return (f'qdsim sweep family={config.family} param={param} scenario={config.scenario} '
            f'gamma1={config.gamma1} gamma2={config.gamma2}',
            'time axis: Gamma t with Gamma = max(gamma1, gamma2) over the active noise fields')


def cmd_sweep(config: RunConfig, output=None):
    trajectory = Trajectory(config.build_state(), config.build_scenario(), config.grid())
    trajectory.save_csv(output if output is not None else sys.stdout, comments=header_comments(config))
    return EXIT_OK


def cmd_crossings(config: RunConfig, output=None):
    report = _report(config)
    lines = [f't_N={_fmt(report.t_n)}',
             f't_R={_fmt(report.t_r)}',
             f'regime={report.regime.value}',
             f"warnings={'; '.join(report.warnings) or 'none'}"]
    _emit('\n'.join(lines) + '\n', output)
    return EXIT_OK


def cmd_classify(config: RunConfig, output=None):
    report = _report(config)
    window = report.bound_window
    lines = [f'regime={report.regime.value}',
             'window=none' if window is None else f'window={_fmt(window[0])},{_fmt(window[1])}',
             f"notes={'; '.join(report.notes) or 'none'}",
             f"warnings={'; '.join(report.warnings) or 'none'}"]
    _emit('\n'.join(lines) + '\n', output)
    return EXIT_OK


def cmd_dump_state(config: RunConfig, output=None):
    _emit(state_to_json(config.build_state()) + '\n', output)
    return EXIT_OK


COMMANDS = {
    'sweep': cmd_sweep,
    'crossings': cmd_crossings,
    'classify': cmd_classify,
    'dump-state': cmd_dump_state,
    }


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    try:
        config = resolve_config(args)
        return COMMANDS[args.command](config, args.output)
    except QdsimError as e:
        print(f'qdsim: error: {e}', file=sys.stderr)
        return EXIT_CONFIG
    except OSError as e:
        print(f'qdsim: I/O error: {e}', file=sys.stderr)
        return EXIT_IO


if __name__ == '__main__':
    sys.exit(main())
