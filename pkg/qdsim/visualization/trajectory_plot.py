import numpy as np
import matplotlib.pyplot as plt


class TrajectoryPlot:
    """
    This class allows to
        plot negativity and CCNR trajectories with the certified bound-entangled window shaded
    """
    def __init__(self, trajectory, report=None):
        self.trajectory = trajectory
        self.report = report
        self.rcp = {
            'font.family': 'serif',
            'font.size': 9,

            'lines.linewidth': 0.8,

            'axes.titlesize': 'medium',
            'axes.linewidth': 0.2,

            'xtick.major.width': 0.2,
            'ytick.major.width': 0.2,
            'xtick.minor.width': 0.15,
            'ytick.minor.width': 0.15,

            'legend.framealpha': 1.0,
            'legend.frameon': False,

            'figure.dpi': 300,
            'figure.figsize': (3.937, 3.1496),  # 10 cm by 8 cm
            'figure.constrained_layout.use': True,

            'patch.linewidth': 0.5,
            }

    def _finish(self, fig, path):
        if path is None:
            plt.show()
        else:
            fig.savefig(path)
            plt.close(fig)

    def _shade_window(self, ax):
        window = None if self.report is None else self.report.bound_window
        if window is not None:
            ax.axvspan(*window, color='tab:green', alpha=0.15, lw=0, label='PPT, CCNR-detected')

    def plot_measures(self, config=None, path=None):
        """
        Negativity and CCNR value against Gamma t on one axis
        """
        grid = self.trajectory.gamma_t
        config = {**self.rcp, **(config or {})}
        with plt.rc_context(rc=config):
            fig, ax = plt.subplots()
            ax.plot(grid, self.trajectory.negativity, label='Negativity', color='tab:blue')
            ax.plot(grid, self.trajectory.ccnr_value, label=r'$\|R(\rho)\|_1 - 1$', color='tab:orange')
            ax.axhline(y=0, color='k', linestyle='--', lw=0.1, zorder=0)
            self._shade_window(ax)
            if self.report is not None and self.report.t_n is not None:
                ax.axvline(self.report.t_n, color='tab:blue', linestyle=':', lw=0.5)
            ax.set_xlim(grid[0], grid[-1])
            ax.set_xlabel(r'$\Gamma t$')
            ax.minorticks_on()
            ax.legend(loc='upper right')
            self._finish(fig, path)
        return self

    def plot_pt_spectrum(self, config=None, path=None):
        """
        Smallest partial-transpose eigenvalue against Gamma t
        """
        grid = self.trajectory.gamma_t
        values = self.trajectory.min_pt_eigenvalue
        config = {**self.rcp, 'figure.figsize': (8/2.54, 6/2.54), **(config or {})}
        with plt.rc_context(rc=config):
            fig, ax = plt.subplots()
            ax.plot(grid, values, color='tab:red')
            ax.axhline(y=0, color='k', linestyle='--', lw=0.1, zorder=0)
            ax.set_ylim(1.05 * min(np.min(values), 0.0), max(np.max(values), 0.0) + 0.01)
            ax.set_xlabel(r'$\Gamma t$')
            ax.set_ylabel(r'$\lambda_{\min}(\rho^{T_B})$')
            ax.minorticks_on()
            self._finish(fig, path)
        return self
