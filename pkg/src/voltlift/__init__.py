"""Lifted voltage digraphs through base-size polynomial matrices."""

from .catalog import alegre, cayley, generalized_petersen, hoffman_singleton, p_family
from .digraph import Digraph, VertexPartition, diameter, is_regular_partition, quotient_matrix
from .fileformat import ParseError, format_voltage_file, parse
from .group import AbelianRequiredError, FiniteGroup, GVector, cyclic, from_cayley_table, product
from .polymat import PolyMatrix, from_voltage, power, power_via_dft, walk_counts
from .spectra import SpectrumMultiset, direct_spectrum, lift_spectrum, multiset_equal
from .voltage import VoltageDigraph, block_circulant_adjacency, lift

__all__ = [
    "AbelianRequiredError",
    "Digraph",
    "FiniteGroup",
    "GVector",
    "ParseError",
    "PolyMatrix",
    "SpectrumMultiset",
    "VertexPartition",
    "VoltageDigraph",
    "alegre",
    "block_circulant_adjacency",
    "cayley",
    "cyclic",
    "diameter",
    "direct_spectrum",
    "format_voltage_file",
    "from_cayley_table",
    "from_voltage",
    "generalized_petersen",
    "hoffman_singleton",
    "is_regular_partition",
    "lift",
    "lift_spectrum",
    "multiset_equal",
    "p_family",
    "parse",
    "power",
    "power_via_dft",
    "product",
    "quotient_matrix",
    "walk_counts",
]
