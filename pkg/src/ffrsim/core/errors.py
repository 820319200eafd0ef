"""Shared error types for the simulation core."""


class SimulationError(Exception):
    """Base error for all simulation-core failures."""


class ModelConfigurationError(SimulationError):
    """A physical parameter is outside the range the model can integrate."""

    def __init__(self, field: str, detail: str = "") -> None:
        self.field = field
        self.detail = detail
        msg = f"Invalid model parameter: {field}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NoInertiaError(SimulationError):
    """COI frequency requested over an empty (or weightless) generator set."""

    def __init__(self) -> None:
        super().__init__("No inertia: at least one online generator is required")


class SystemCollapseError(SimulationError):
    """Every synchronous machine has tripped; the swing equation is undefined."""

    def __init__(self, time: float) -> None:
        self.time = time
        super().__init__(f"System collapse at t={time:.3f}s: no online inertia left")


class NonFiniteStateError(SimulationError):
    """The integrated state stopped being finite."""

    def __init__(self, time: float, variable: str, value: float) -> None:
        self.time = time
        self.variable = variable
        self.value = value
        super().__init__(f"Non-finite state at t={time:.3f}s: {variable}={value!r}")


class MetricsError(SimulationError):
    """A time series is too short (or malformed) for the requested metric."""

    def __init__(self, detail: str) -> None:
        self.detail = detail
        super().__init__(f"Cannot compute metrics: {detail}")
