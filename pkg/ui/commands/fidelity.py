import numpy as np

from ui.commands.base import TrajectoryCommand, summary, write_csv


class FidelityCommand(TrajectoryCommand):
    name = "fidelity"
    help = "survival amplitude |<psi0|exp(-itH)|psi0>| over time"

    def run(self, cfg, args):
        psi0 = cfg.initial_state
        _, traj = self.trajectory(cfg, psi0)
        values = np.minimum(1.0, np.abs(traj.amplitudes() @ psi0.amps.conj()))
        write_csv(args.out, self.columns(), self.rows(traj, ([v] for v in values)))

        k = int(np.argmin(values))
        summary(f"initial {cfg.initial}: min fidelity {values[k]:.10g} "
                f"at t={traj.times.values[k]:.6g} {cfg.time_unit}")
        return 0
