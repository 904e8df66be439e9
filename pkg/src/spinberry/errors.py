"""Exception types shared across the package.

The CLI maps these onto exit codes and one-line ``ERROR <Class>: ...``
diagnostics, so keep the class names stable.
"""


class SpinberryError(Exception):
    """Base class for all package-specific failures."""


class DomainError(SpinberryError, ValueError):
    """An input lies outside the physical/mathematical domain of a formula."""


class SectorError(SpinberryError, ValueError):
    """A state has no support in the sector an operation post-selects on."""


class ConfigError(SpinberryError, ValueError):
    """A configuration file or CLI argument is malformed or inconsistent."""
