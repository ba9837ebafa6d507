"""Exception hierarchy shared by the simulation library and the command line.

The command line maps these onto exit codes: configuration and usage problems
exit with 2, numerical invariant violations exit with 3.
"""


class SimulationError(Exception):
    """Base class for every error raised by the ``logic`` package."""


class DimensionError(SimulationError, ValueError):
    """Two objects live in different invariant subspaces or have the wrong size."""


class CapacityError(SimulationError, ValueError):
    """A truncated Fock space is too small to hold the requested state."""


class DomainError(SimulationError, ValueError):
    """A parameter lies outside the domain where an operation is defined."""


class NormalizationError(SimulationError, ValueError):
    """A state vector cannot be normalized (zero norm or non-finite entries)."""


class PerturbationError(SimulationError):
    """First order perturbation theory does not apply to the requested level."""


class ConfigError(SimulationError):
    """Invalid run configuration: bad flag value, bad config file or bad state syntax."""


class InvariantViolation(SimulationError):
    """A numerical invariant (norm, subspace confinement, ...) drifted past tolerance."""


class WitnessDiagnosticError(InvariantViolation):
    """An expected witness signature was not reproduced.

    ``readings`` carries the minimum witness value under every alternative
    reading that was tried, so the caller can report them.
    """

    def __init__(self, message, readings=None):
        super().__init__(message)
        self.readings = dict(readings or {})
