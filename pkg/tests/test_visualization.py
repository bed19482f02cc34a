"""Smoke test the trajectory plots."""

import numpy as np

from qdsim.analysis.regime import bound_window
from qdsim.analysis.scenario import Scenario
from qdsim.analysis.trajectory import Trajectory
from qdsim.states.families import HorodeckiParams, horodecki_state
from qdsim.visualization.trajectory_plot import TrajectoryPlot


def test_plots_are_written(tmp_path):
    rho0 = horodecki_state(HorodeckiParams(4.3))
    scenario = Scenario('multilocal')
    trajectory = Trajectory(rho0, scenario, np.linspace(0, 0.5, 51))
    plot = TrajectoryPlot(trajectory, bound_window(rho0, scenario))
    assert plot.plot_measures(path=tmp_path / 'measures.png') is plot
    plot.plot_pt_spectrum(path=tmp_path / 'spectrum.png')
    assert (tmp_path / 'measures.png').stat().st_size > 0
    assert (tmp_path / 'spectrum.png').stat().st_size > 0


def test_plot_without_report(tmp_path):
    trajectory = Trajectory(horodecki_state(HorodeckiParams(4.6)), Scenario('global'), np.linspace(0, 0.3, 11))
    TrajectoryPlot(trajectory).plot_measures(config={'figure.dpi': 72}, path=tmp_path / 'plain.png')
    assert (tmp_path / 'plain.png').exists()
