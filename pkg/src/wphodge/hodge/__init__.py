"""Hodge-theoretic layer on top of the Jacobian ring."""

from .geodesic import (
    GeodesicTangentSpace,
    NonGeodesyCertificate,
    geodesic_tangent_space,
    non_geodesy_certificate,
    random_complex_structure,
    standard_complex_structure,
)
from .geometry import DomainGeometry, domain_geometry, quaternionic_domain_geometry
from .period import (
    ConsistencyError,
    PeriodDifferentialReport,
    contact_form,
    contact_gram,
    horizontal_report,
    period_differential,
    symplectic_form,
)
from .profile import HodgeProfile, hodge_numbers
from .search import SearchReport, SearchRow, search
