"""Dimension counts for weight-two period domains SO(2p, q)/U(p) x SO(q)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DomainGeometry:
    p: int
    q: int
    dim_domain: int
    dim_horizontal: int
    is_contact: bool
    max_integral_dim: int | None
    max_integral_is_lower_bound: bool
    geodesic_orbit_dim: int | None
    lagrangian_grassmannian_dim: int | None
    complex_structure_space_dim_real: int | None
    complex_structure_space_dim_complex: int | None


def domain_geometry(p: int, q: int) -> DomainGeometry:
    """Dimensions attached to Hodge numbers (p, q, p).

    For p = 2 the horizontal distribution has corank one and is a contact
    structure; its integral elements are Lagrangian, so at most pq/2
    dimensional.  Otherwise the dimension of the horizontal SU(p, q/2) orbit
    is reported as a lower bound on the maximal integral dimension.
    """
    if p < 1 or q < 1:
        raise ValueError(f"need p >= 1 and q >= 1, got ({p}, {q})")
    contact = p == 2
    orbit = p * (q // 2) if q % 2 == 0 else None
    if contact:
        max_integral = p * q // 2
        g = max_integral
        lagrangian = g * (g + 1) // 2
    else:
        max_integral = orbit
        lagrangian = None
    if q % 2 == 0:
        # SO(q)/U(q/2)
        cs_real = q * (q - 1) // 2 - (q // 2) ** 2
        cs_complex = cs_real // 2
    else:
        cs_real = cs_complex = None
    return DomainGeometry(
        p=p,
        q=q,
        dim_domain=p * (p - 1) // 2 + p * q,
        dim_horizontal=p * q,
        is_contact=contact,
        max_integral_dim=max_integral,
        max_integral_is_lower_bound=not contact and max_integral is not None,
        geodesic_orbit_dim=orbit,
        lagrangian_grassmannian_dim=lagrangian,
        complex_structure_space_dim_real=cs_real,
        complex_structure_space_dim_complex=cs_complex,
    )


@dataclass(frozen=True)
class QuaternionicGeometry:
    n: int
    dim_domain: int
    dim_horizontal: int
    lagrangian_space_dim: int
    geodesic_orbit_dim: int

    def __iter__(self):
        yield self.dim_domain
        yield self.dim_horizontal


def quaternionic_domain_geometry(n: int) -> QuaternionicGeometry:
    """Twistor domain Sp(1, n)/U(1) x Sp(n) over quaternionic hyperbolic n-space."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return QuaternionicGeometry(n, 2 * n + 1, 2 * n, n * (n + 1) // 2, n)
