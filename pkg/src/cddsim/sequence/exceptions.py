"""Custom exceptions for pulse-sequence compilation."""

from cddsim.exceptions import CDDSimError


class TimingError(CDDSimError):
    """Raised when timing parameters are out of range."""


class ScheduleSizeError(CDDSimError):
    """Raised when a schedule would exceed the configured event limit."""

    def __init__(self, label: str, n_events: int, limit: int):
        """Initialize with custom message."""
        self.label = label
        self.n_events = n_events
        self.limit = limit
        self.message = (
            f"{label} needs {n_events} events, above the schedule-size limit of "
            f"{limit}. Lower the level / cycle count or raise "
            "CDDSIM__SEQUENCE__MAX_EVENTS."
        )
        super().__init__(self.message)
