"""Units of the integral group ring ZC_{p^n}."""

__version__ = "0.1.0"
