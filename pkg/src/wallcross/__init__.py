"""wallcross - exact motives of rank-2 Bradlow-Higgs moduli spaces."""

__version__ = "0.1.0"
