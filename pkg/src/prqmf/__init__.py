"""Two-channel perfect-reconstruction QMF FIR filter pair design."""

from .analysis import (
    FilterBank,
    NoDelayFound,
    PrReport,
    ProcessReport,
    ResponseMetrics,
    mse,
    process_bank,
    synthesis_filters,
    transfer,
    validate_case_a,
    verify_pr,
)
from .bank import design_bank
from .prototype import BandEdges, DesignSpec, WindowSpec, design_h0
from .qmf_core import DegeneratePassband, SingularSystem, basic_mate, design_pair
from .refine import RefinementSpec, SingularRefinement, default_zero_freqs, refine_h1

__all__ = [
    "BandEdges",
    "DegeneratePassband",
    "DesignSpec",
    "FilterBank",
    "NoDelayFound",
    "PrReport",
    "ProcessReport",
    "RefinementSpec",
    "ResponseMetrics",
    "SingularRefinement",
    "SingularSystem",
    "WindowSpec",
    "basic_mate",
    "default_zero_freqs",
    "design_bank",
    "design_h0",
    "design_pair",
    "mse",
    "process_bank",
    "refine_h1",
    "synthesis_filters",
    "transfer",
    "validate_case_a",
    "verify_pr",
]
