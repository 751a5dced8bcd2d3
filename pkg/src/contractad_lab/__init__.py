"""Exact enumeration for Hamiltonian path and cycle contractads.

Modules: ``graph`` (graphs, tubes, contraction), ``hamiltonian``, ``planeq``,
``graphic`` (graphic functions and the *-product), ``koszul``, ``symfun``
(symmetric functions and Young series), ``series`` and ``cli``.
"""

__version__ = "0.1.0"

from ._backend import BACKEND  # noqa: E402,F401
