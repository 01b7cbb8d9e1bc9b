"""gcover: exact Hodge-theoretic invariants of branched G-covers of curves."""

__version__ = "0.1.0"
