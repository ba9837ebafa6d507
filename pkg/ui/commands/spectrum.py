import numpy as np

from logic.errors import ConfigError
from logic.hamiltonian import build_subspace_hamiltonian, unperturbed_levels
from ui.commands.base import Command, summary, write_csv

MAX_N = 64


class SpectrumCommand(Command):
    name = "spectrum"
    help = "eigenvalues and eigenvectors of the S_N Hamiltonian"

    def add_arguments(self, parser):
        parser.add_argument("--N", type=int, default=None,
                            help="total quantum number (default: that of --initial)")

    def run(self, cfg, args):
        N = args.N if args.N is not None else cfg.initial_state.N
        if not 0 <= N <= MAX_N:
            raise ConfigError(f"N must lie in [0, {MAX_N}], got {N}")

        H = build_subspace_hamiltonian(N, cfg.params)
        header = self.columns() + [f"v{j}" for j in range(N + 1)]
        rows = ((k, H.eigenvalues[k], *H.eigenvectors[:, k]) for k in range(H.dim))
        write_csv(args.out, header, rows)

        _, distinct = unperturbed_levels(N, cfg.params)
        summary(
            f"S_{N}: {H.dim} levels, {distinct} distinct uncoupled energies",
            "eigenvalues (cm^-1): " + ", ".join(format(e, ".10g") for e in H.eigenvalues),
            f"symmetric: {bool(np.allclose(H.matrix, H.matrix.T, atol=0.0))}",
        )
        return 0
