"""Randomized algebraic compression of Vertex Cover Above MM into Rank Vertex Cover."""

from .exact_linalg import RATIONAL, ExactMatrix, PrimeField
from .graph import Exact, Graph, MatchingApprox, Provided
from .instance import GraphMatroidPair, RvcInstance, deserialize, serialize
from .matroid import LinearMatroid
from .pipeline import CompressionReport, PipelineConfig, compress, verify_equivalence

__version__ = "0.1.0"

__all__ = [
    "RATIONAL",
    "ExactMatrix",
    "PrimeField",
    "Graph",
    "Exact",
    "MatchingApprox",
    "Provided",
    "GraphMatroidPair",
    "RvcInstance",
    "LinearMatroid",
    "serialize",
    "deserialize",
    "PipelineConfig",
    "CompressionReport",
    "compress",
    "verify_equivalence",
]
