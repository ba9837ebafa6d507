import logging

import numpy as np

from logic.entanglement import WITNESS_NAMES, all_witnesses, check_su11_dip, von_neumann_entropy
from ui.commands.base import TrajectoryCommand, summary, write_csv

logger = logging.getLogger(__name__)


def normalize_columns(table):
    """Divide every column by its absolute maximum over the run (zero columns stay zero)."""
    scale = np.max(np.abs(table), axis=0)
    scale[scale == 0] = 1.0
    return table / scale


class WitnessesCommand(TrajectoryCommand):
    name = "witnesses"
    help = "all nine entanglement witnesses along the trajectory"

    def add_arguments(self, parser):
        parser.add_argument("--normalize", action="store_true",
                            help="report each column divided by its absolute maximum")
        parser.add_argument("--require-dip", action="store_true",
                            help="fail (exit 3) unless the SU(1,1) witness goes negative")

    def run(self, cfg, args):
        _, traj = self.trajectory(cfg)

        entropy = np.array([von_neumann_entropy(s) for s in traj])
        reports = [all_witnesses(s, cfg.lam) for s in traj]
        table = np.array([[r[name].value for name in WITNESS_NAMES] for r in reports])
        fired = np.array([[r[name].detected for name in WITNESS_NAMES] for r in reports])

        if args.require_dip:
            check_su11_dip(traj)

        columns = np.column_stack([entropy, table])
        if args.normalize:
            columns = normalize_columns(columns)
        write_csv(args.out, self.columns(), self.rows(traj, columns))

        lines = [f"initial {cfg.initial}, lambda={cfg.lam:g}"]
        for j, name in enumerate(WITNESS_NAMES):
            lines.append(f"  {name:8s} min {table[:, j].min(): .10g}  "
                         f"detected {'yes' if fired[:, j].any() else 'no'}")
        summary(*lines)
        return 0
