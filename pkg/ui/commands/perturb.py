from logic.errors import ConfigError
from logic.fock import is_product
from logic.hamiltonian import admixture_magnitudes, eigenstate_overlap, perturbed_state
from ui.commands.base import Command, open_output, summary

NOT_APPLICABLE = "perturbation theory not applicable"


def perturbation_report(N, m, params):
    """Text lines describing the first order local-mode state |N-m, m>."""
    pert = perturbed_state(N, m, params)
    lines = [f"state |{N - m},{m}> in S_{N}",
             f"epsilon/gamma = {params.epsilon / params.gamma:.10g}" if params.gamma else
             "epsilon/gamma = inf"]
    if not pert.valid:
        lines += [NOT_APPLICABLE, f"reason: {pert.diagnostic}", "valid: false"]
        return pert, lines

    mag1, mag2 = admixture_magnitudes(N, m, params)
    lines += [
        f"f1 = {pert.f1:.12g} (|f1| = {mag1:.12g})",
        f"f2 = {pert.f2:.12g} (|f2| = {mag2:.12g})",
        "valid: true",
        f"overlap with exact eigenvectors: {eigenstate_overlap(N, m, params):.12g}",
    ]
    lines += [f"warning: {w}" for w in pert.warnings]
    return pert, lines


class PerturbCommand(Command):
    name = "perturb"
    help = "first order local-mode eigenstate and its overlap with the exact one"

    def add_arguments(self, parser):
        parser.add_argument("--N", type=int, default=None, help="total quantum number")
        parser.add_argument("--m", type=int, default=None, help="quanta in mode b")

    def run(self, cfg, args):
        if (args.N is None) != (args.m is None):
            raise ConfigError("perturb needs both --N and --m")
        if args.N is None:
            initial = cfg.initial_state
            if not is_product(initial):
                raise ConfigError("perturb needs --N/--m or a canonical --initial n,m")
            N, m = initial.N, int(initial.probabilities.argmax())
        else:
            N, m = args.N, args.m
        if not 0 <= m <= N:
            raise ConfigError(f"need 0 <= m <= N, got N={N}, m={m}")

        pert, lines = perturbation_report(N, m, cfg.params)
        with open_output(args.out) as f:
            for line in lines:
                print(line, file=f)
        if not pert.valid:
            summary(NOT_APPLICABLE)
        return 0
