"""Surjective pistols, irreducible k-shapes and the bijection between them.

The package also carries the Gandhi, Dumont-Foata and generalized
Dumont-Foata polynomial families with their combinatorial generating
sums, and a brute-force oracle used to cross-check everything.
"""

__version__ = "0.1.0"

from .errors import (DomainError, InvariantViolation, KShapeError, PistolError, PreconditionError,
                     ResourceError)
from .partition import (Cell, CellClass, Partition, ShapeStats, SkewShape, canonical_partition,
                        cell_classes, hook_length, is_irreducible, is_k_shape, k_boundary, shape_stats)
from .pistols import PointStats, Pistol, count_pistols, enumerate_pistols, point_stats, validate
from .partial import PartialKShape, is_saturated_in, oplus, saturating_z
from .bijection import (SiteClassification, classify_sites, phi, s_sequence_shape, shape_site_stats,
                        varphi, varphi_trace)
from .poly import (MultiPoly, dumont_foata, gamma, gandhi, genocchi, poly_from_pistols,
                   poly_from_shapes)
from .oracle import BoxBound, box_enumerate_irreducible, check_confluence

__all__ = [
    "BoxBound", "Cell", "CellClass", "DomainError", "InvariantViolation", "KShapeError", "MultiPoly",
    "PartialKShape", "Partition", "Pistol", "PistolError", "PointStats", "PreconditionError",
    "ResourceError", "ShapeStats", "SiteClassification", "SkewShape", "box_enumerate_irreducible",
    "canonical_partition", "cell_classes", "check_confluence", "classify_sites", "count_pistols",
    "dumont_foata", "enumerate_pistols", "gamma", "gandhi", "genocchi", "hook_length", "is_irreducible",
    "is_k_shape", "is_saturated_in", "k_boundary", "oplus", "phi", "point_stats", "poly_from_pistols",
    "poly_from_shapes", "s_sequence_shape", "saturating_z", "shape_site_stats", "shape_stats", "validate",
    "varphi", "varphi_trace",
]
