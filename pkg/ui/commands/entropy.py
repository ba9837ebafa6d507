import math

from logic.entanglement import linear_entropy, von_neumann_entropy
from logic.errors import ConfigError
from ui.commands.base import TrajectoryCommand, summary, write_csv


class EntropyCommand(TrajectoryCommand):
    name = "entropy"
    help = "von Neumann and linear entropy of the reduced state over time"

    def run(self, cfg, args):
        psi0 = cfg.initial_state
        if psi0.N == 0:
            raise ConfigError("entropy needs N >= 1; S_0 is one-dimensional")
        _, traj = self.trajectory(cfg, psi0)

        scale = math.log2(psi0.N + 1)
        values = []
        for state in traj:
            s = von_neumann_entropy(state)
            values.append((s, s / scale, linear_entropy(state)))
        write_csv(args.out, self.columns(), self.rows(traj, values))

        peak = max(range(len(values)), key=lambda k: values[k][1])
        summary(
            f"initial {cfg.initial}: peak S = {values[peak][0]:.10g} bits "
            f"(normalized {values[peak][1]:.10g}) at t={traj.times.values[peak]:.6g} {cfg.time_unit}",
            f"max linear entropy {max(v[2] for v in values):.10g} "
            f"(bound {1 - 1 / (psi0.N + 1):.10g})",
        )
        return 0
