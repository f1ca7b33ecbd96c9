"""Exception types shared across the package."""


class InputError(ValueError):
    """Arguments violate an operation's preconditions."""


class RealizationError(RuntimeError):
    """Rejection sampling ran out of attempts while building a configuration."""


class ScheduleError(RuntimeError):
    """No line order realizing the star vector was found.

    ``achieved`` holds the best ordered reduction vector that was produced.
    """

    def __init__(self, message, achieved):
        super().__init__(message)
        self.achieved = tuple(achieved)
