from __future__ import annotations

from dataclasses import dataclass

from ..jacring import JacobianRingModel
from ..polyalg import WeightSystem


@dataclass(frozen=True)
class HodgeProfile:
    ws: WeightSystem
    h20: int
    h11_prim: int
    h02: int
    source_degrees: tuple

    @property
    def symmetric(self) -> bool:
        return self.h20 == self.h02

    def as_tuple(self) -> tuple:
        return (self.h20, self.h11_prim, self.h02)


def hodge_numbers(ws: WeightSystem, model: JacobianRingModel) -> HodgeProfile:
    """Read h^{2,0}, h^{1,1}_prim, h^{0,2} off R_{d-s}, R_{2d-s}, R_{3d-s} (s = sum of weights)."""
    if model.ws != ws:
        raise ValueError(f"model was built for {model.ws}, not {ws}")
    d, s = ws.degree, ws.sigma
    degrees = (d - s, 2 * d - s, 3 * d - s)
    h = [model.dim(k) if k >= 0 else 0 for k in degrees]
    return HodgeProfile(ws, h[0], h[1], h[2], degrees)
