from dataclasses import replace

import numpy as np

from logic.dynamics import TimeUnit, bell_arrival_phases, bell_states, evolve, phase_per_ps
from logic.fock import SubspaceState, inner_product
from ui.commands.base import TrajectoryCommand, summary, write_csv

BELL_STEPS = 401


class BellCommand(TrajectoryCommand):
    name = "bell"
    help = "overlap of exp(-itH)|0,1> with (|0,1> +- i|1,0>)/sqrt2"

    def run(self, cfg, args):
        arrivals = bell_arrival_phases(cfg.params)
        to_unit = 1.0 if TimeUnit(cfg.time_unit) is TimeUnit.PHASE else 1.0 / phase_per_ps(1.0)
        # one full period by default, sampled so every arrival lands on the grid
        explicit = cfg.extra.get("explicit", frozenset())
        if "t_max" not in explicit:
            cfg = replace(cfg, t_max=arrivals["period"] * to_unit)
        if "steps" not in explicit:
            cfg = replace(cfg, steps=BELL_STEPS)

        psi0 = SubspaceState.basis(0, 1)
        H, traj = self.trajectory(cfg, psi0)
        plus, minus = bell_states()
        values = [(abs(inner_product(plus, s)), abs(inner_product(minus, s))) for s in traj]
        write_csv(args.out, self.columns(), self.rows(traj, values))

        overlaps = np.array(values)
        half = evolve(H, psi0, arrivals["transfer"], TimeUnit.PHASE)
        summary(
            f"max overlap (+i) {overlaps[:, 0].max():.12g}, first reached at t="
            f"{arrivals['plus'] * to_unit:.6g} {cfg.time_unit}",
            f"max overlap (-i) {overlaps[:, 1].max():.12g}, first reached at t="
            f"{arrivals['minus'] * to_unit:.6g} {cfg.time_unit}",
            f"population of |1,0> at half period (t={arrivals['transfer'] * to_unit:.6g}): "
            f"{half.probabilities[0]:.12g}",
            f"period {arrivals['period'] * to_unit:.6g} {cfg.time_unit}",
        )
        return 0
