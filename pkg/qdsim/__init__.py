from .states.density_matrix import DensityMatrix
from .states.families import StateFamily, build_state, horodecki_state, rotated_state, isotropic_state
from .channel.damping import DecoherenceParams, damping_profile
from .channel.kraus import apply_channel
from .channel.matrix_form import damping_matrix_map
from .measures.entanglement import negativity, ccnr, partial_transpose, realign
from .analysis.scenario import Scenario, ScenarioMode
from .analysis.trajectory import Trajectory, sweep
from .analysis.regime import Regime, bound_window, classify_regime
from .visualization.trajectory_plot import TrajectoryPlot
from .oracle import closed_form as oracle

__all__ = ['DensityMatrix', 'StateFamily', 'build_state', 'horodecki_state', 'rotated_state', 'isotropic_state',
           'DecoherenceParams', 'damping_profile', 'apply_channel', 'damping_matrix_map',
           'negativity', 'ccnr', 'partial_transpose', 'realign', 'Scenario', 'ScenarioMode',
           'Trajectory', 'sweep', 'Regime', 'bound_window', 'classify_regime', 'TrajectoryPlot', 'oracle']
