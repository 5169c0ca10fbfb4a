"""Reproducible experiments built on the core library."""

from .capacity import CapacityEstimate, RegionK, Segment, UnitCircle, fekete_capacity
from .decomposition import DecompositionReport, decomposition_suite
from .discontinuity import DiscontinuityConfig, discontinuity_demo
from .families import AlphaFamily, alpha_matrix, block_reference, boundary_block_instance, jordan2
from .induction import InductionConfig, induction_sweep
from .probes import ProbeConfig, alpha_direction_probe, ceiling_sweep, semicontinuity_probe
from .report import emit_report
