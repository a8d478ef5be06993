"""Exception and warning types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid grid, potential, or run configuration."""


class UsageError(ValueError):
    """Operation called with an incompatible field or argument."""


class HypothesisError(ValueError):
    """Inequality-oracle input violates the inequality's hypotheses."""


class ConfigParseError(ConfigurationError):
    """Config file rejected; carries every violation, not just the first."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "\n".join(f"  {v}" for v in self.violations)
        super().__init__(f"invalid config ({len(self.violations)} problem(s)):\n{lines}")


class BoundaryConcentrationWarning(RuntimeWarning):
    """Field carries non-negligible mass near the domain boundary; |x|-weighted
    quantities are untrustworthy."""


class TheoremHypothesisWarning(UserWarning):
    """Run parameters fall outside the regime covered by the blowup theorems."""
