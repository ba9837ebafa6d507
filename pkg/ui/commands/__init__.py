from ui.commands.bell import BellCommand
from ui.commands.entropy import EntropyCommand
from ui.commands.fidelity import FidelityCommand
from ui.commands.perturb import PerturbCommand
from ui.commands.quadratures import QuadraturesCommand
from ui.commands.spectrum import SpectrumCommand
from ui.commands.witnesses import WitnessesCommand

COMMANDS = (
    SpectrumCommand,
    FidelityCommand,
    EntropyCommand,
    WitnessesCommand,
    BellCommand,
    QuadraturesCommand,
    PerturbCommand,
)
