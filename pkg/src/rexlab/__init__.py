"""rexlab: regular generalized Turán constructions, counting and brute-force checks."""

__version__ = "0.1.0"
