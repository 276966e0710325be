"""Exact equienergy analysis of regular graphs and their complements."""

__version__ = "0.1.0"

from .exact import (
    ExactValue,
    Surd,
    exact_sum,
    parse_surd,
    surd,
    surd_abs,
    surd_compare,
    surd_normalize,
)
from .spectra import (
    Approximate,
    DiscrepancyBreakdown,
    Eig,
    EquienReport,
    Spectrum,
    UncertifiableBranch,
    check_equienergetic,
    classify_spectrum,
    complement_spectrum,
    delta_of,
    discrepancy,
    energy,
    spectra_match,
)
from .srg import (
    CaseB,
    CaseC,
    Conference,
    InfeasibleParams,
    NotEquien,
    SrgParams,
    classify,
    complement_params,
    eigen_data,
    energy_closed,
    enumerate_equien,
    equien_condition,
    family_params,
    gp_spectrum,
    oa_params,
    two_fields_srg,
)
from .rings import (
    RingProfile,
    equien_check,
    search_field_products,
    subset_sums,
    unitary_spectrum,
)

__all__ = [
    "Approximate",
    "CaseB",
    "CaseC",
    "Conference",
    "DiscrepancyBreakdown",
    "Eig",
    "EquienReport",
    "ExactValue",
    "InfeasibleParams",
    "NotEquien",
    "RingProfile",
    "Spectrum",
    "SrgParams",
    "Surd",
    "UncertifiableBranch",
    "check_equienergetic",
    "classify",
    "classify_spectrum",
    "complement_params",
    "complement_spectrum",
    "delta_of",
    "discrepancy",
    "eigen_data",
    "energy",
    "energy_closed",
    "enumerate_equien",
    "equien_check",
    "equien_condition",
    "exact_sum",
    "family_params",
    "gp_spectrum",
    "oa_params",
    "parse_surd",
    "search_field_products",
    "spectra_match",
    "subset_sums",
    "surd",
    "surd_abs",
    "surd_compare",
    "surd_normalize",
    "two_fields_srg",
    "unitary_spectrum",
]
