import csv
import logging
import sys
from contextlib import contextmanager

from logic.config import csv_columns
from logic.dynamics import sample_trajectory
from logic.hamiltonian import build_subspace_hamiltonian

logger = logging.getLogger(__name__)

FLOAT_FORMAT = ".15g"


def format_value(value):
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    return format(float(value), FLOAT_FORMAT)


@contextmanager
def open_output(path):
    """Yield a text stream for ``path``; ``None`` or ``-`` is stdout."""
    if path in (None, "-"):
        yield sys.stdout
        return
    with open(path, "w", newline="", encoding="utf-8") as f:
        yield f


def write_csv(path, header, rows):
    with open_output(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        count = 0
        for row in rows:
            writer.writerow([format_value(v) for v in row])
            count += 1
    logger.info("wrote %d rows to %s", count, path or "stdout")
    return count


def summary(*lines):
    for line in lines:
        print(line, file=sys.stderr)


class Command:
    """One subcommand: parser wiring plus the run step.

    ``run`` returns the process exit code; library errors propagate to the
    app, which maps them onto exit codes.
    """

    name = ""
    help = ""

    def add_arguments(self, parser):
        pass

    def run(self, cfg, args):
        raise NotImplementedError

    def columns(self):
        return csv_columns(self.name)


class TrajectoryCommand(Command):
    """Commands that sample exp(-itH)|psi0> on the configured time grid."""

    def trajectory(self, cfg, initial=None):
        psi0 = initial if initial is not None else cfg.initial_state
        H = build_subspace_hamiltonian(psi0.N, cfg.params)
        times = cfg.time_spec()
        logger.info("%s: S_%d, %d points up to t=%g %s",
                    self.name, psi0.N, len(times), cfg.t_max, cfg.time_unit)
        return H, sample_trajectory(H, psi0, times)

    def rows(self, trajectory, values):
        """Prefix every row of ``values`` with its time and phase-time."""
        for t, tau, row in zip(trajectory.times.values, trajectory.times.phase_times(), values):
            yield (t, tau, *row)
