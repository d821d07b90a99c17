"""Tiling counts for hexagons with a row of cells cut out along the left bisector."""
from .exactnum import DomainError, HalfInteger, shifted_factorial
from .formulas import Parity, TilingCount, intrusion_count, intrusion_ratio, macmahon
from .oracle import CapacityError, OracleConfig, count_tilings
from .region import Region, RegionSpec, TriCell, build_hexagon, build_intruded

__all__ = [
    "CapacityError",
    "DomainError",
    "HalfInteger",
    "OracleConfig",
    "Parity",
    "Region",
    "RegionSpec",
    "TilingCount",
    "TriCell",
    "build_hexagon",
    "build_intruded",
    "count_tilings",
    "intrusion_count",
    "intrusion_ratio",
    "macmahon",
    "shifted_factorial",
]
