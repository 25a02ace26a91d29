"""Geometric types of Markov partitions, boundary laminations and block gluing."""

__version__ = "0.1.0"
