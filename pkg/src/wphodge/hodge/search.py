"""Scan (weights, degree) pairs for Fermat members with maximal period rank."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..jacring import jacobian_ring
from ..polyalg import WeightSystem, fermat_polynomial
from .geometry import domain_geometry
from .geodesic import non_geodesy_certificate
from .period import check_rank_bound, period_differential
from .profile import hodge_numbers

NO_FERMAT = "no quasi-smooth Fermat member"
TRIVIAL_RING = "Jacobian ring is zero"
OK = "ok"


@dataclass
class SearchRow:
    weights: tuple
    degree: int
    status: str
    hodge: tuple | None = None
    socle_degree: int | None = None
    socle_simple: bool | None = None
    dim_domain: int | None = None
    dim_horizontal: int | None = None
    is_contact: bool | None = None
    tangent_dim: int | None = None
    rank_m: int | None = None
    pencil_generic_rank: int | None = None
    pencil_min_rank: int | None = None
    pencil_mode: str | None = None
    span_rank: int | None = None
    isotropy_ok: bool | None = None
    non_geodesic: bool | None = None
    maximal: bool = False
    anomalies: list = field(default_factory=list)

    def sort_key(self):
        h11 = self.hodge[1] if self.hodge else -1
        return (-h11, self.degree, self.weights)


@dataclass
class SearchReport:
    max_weights: tuple
    min_degree: int
    max_degree: int
    mode: str
    seed: int
    rows: list

    def maximal_rows(self) -> list:
        return [r for r in self.rows if r.maximal]

    def find(self, weights, degree) -> SearchRow | None:
        weights = tuple(weights)
        return next((r for r in self.rows if r.weights == weights and r.degree == degree), None)


def weight_systems(max_weights) -> list:
    """Reduced, nondecreasing weight tuples bounded componentwise by ``max_weights``."""
    if len(max_weights) != 4 or any(int(b) < 1 for b in max_weights):
        raise ValueError(f"weight bounds must be four positive integers, got {max_weights}")
    out = []
    for w in itertools.product(*(range(1, int(b) + 1) for b in max_weights)):
        if list(w) == sorted(w) and math.gcd(*w) == 1:
            out.append(tuple(w))
    return out


def evaluate_candidate(weights: tuple, degree: int, mode: str = "exact", seed: int = 0) -> SearchRow:
    ws = WeightSystem(weights, degree)
    if not ws.has_fermat_member():
        return SearchRow(weights, degree, NO_FERMAT)
    model = jacobian_ring(fermat_polynomial(ws))
    profile = hodge_numbers(ws, model)
    row = SearchRow(weights, degree, OK, hodge=profile.as_tuple(),
                    socle_degree=model.socle_degree, socle_simple=model.socle_is_simple)
    if model.socle_degree is None:
        row.status = TRIVIAL_RING
        return row
    if not profile.symmetric:
        row.anomalies.append(f"h20={profile.h20} differs from h02={profile.h02}")
    if not model.socle_is_simple:
        row.anomalies.append(f"dim R_N = {model.hilbert[model.socle_degree]} at N = {model.socle_degree}")
    p, q = profile.h20, profile.h11_prim
    if p < 1 or q < 1:
        return row
    geometry = domain_geometry(p, q)
    row.dim_domain = geometry.dim_domain
    row.dim_horizontal = geometry.dim_horizontal
    row.is_contact = geometry.is_contact
    if p != 2:
        return row
    report = period_differential(model, mode=mode, seed=seed)
    check_rank_bound(report, geometry)
    row.tangent_dim = report.tangent_dim
    row.rank_m = report.rank_m
    row.pencil_generic_rank = report.pencil.generic_rank
    row.pencil_min_rank = report.pencil.min_rank
    row.pencil_mode = report.pencil.mode
    row.span_rank = report.span_rank
    row.isotropy_ok = report.isotropy_ok
    row.non_geodesic = non_geodesy_certificate(report, geometry).verdict
    row.maximal = report.rank_m == q
    if not report.isotropy_ok:
        row.anomalies.append("image of the period differential is not isotropic")
    return row


def _evaluate(args):
    return evaluate_candidate(*args)


def search(max_weights, max_degree: int, min_degree: int = 1, mode: str = "exact",
           seed: int = 0, workers: int = 1) -> SearchReport:
    """Evaluate every reduced weight system within bounds at every degree in range.

    Rows are sorted by h^{1,1} descending, then degree ascending; systems
    without a Fermat member are listed with status ``NO_FERMAT`` and no data.
    """
    if min_degree < 1:
        raise ValueError("min_degree must be at least 1")
    tasks = [(w, d, mode, seed)
             for w in weight_systems(max_weights)
             for d in range(min_degree, max_degree + 1)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_evaluate, tasks))
    else:
        rows = [_evaluate(t) for t in tasks]
    rows.sort(key=SearchRow.sort_key)
    return SearchReport(tuple(int(b) for b in max_weights), min_degree, max_degree, mode, seed, rows)
