"""Projectively self-dual nilpotent orbit closures of symmetric spaces.

Enumerates nilpotent orbits of classical real forms by (fine) partitions,
decides which K-orbit closures are self-dual, serves the embedded exceptional
tables and checks the classical results against an exact matrix oracle.
"""

__version__ = "0.1.0"
