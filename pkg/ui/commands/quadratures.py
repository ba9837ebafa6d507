import numpy as np

from logic.errors import InvariantViolation
from logic.quadratures import quadrature_report
from ui.commands.base import TrajectoryCommand, summary, write_csv


class QuadraturesCommand(TrajectoryCommand):
    name = "quadratures"
    help = "single-mode and two-mode quadrature variances over time"

    def run(self, cfg, args):
        _, traj = self.trajectory(cfg)
        reports = [quadrature_report(s) for s in traj]
        write_csv(args.out, self.columns(), self.rows(traj, (r.as_row() for r in reports)))

        table = np.array([r.as_row() for r in reports])
        summary(f"initial {cfg.initial}: min single-mode variance {table[:, :4].min():.12g}, "
                f"min two-mode variance {table[:, 4:].min():.12g}")
        squeezed = [k for k, r in enumerate(reports) if r.squeezing_single or r.squeezing_two_mode]
        if squeezed:
            k = squeezed[0]
            raise InvariantViolation(
                f"squeezing flagged at t={traj.times.values[k]:.6g}, impossible inside S_{traj.initial.N}")
        summary("no squeezing")
        return 0
