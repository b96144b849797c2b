"""Log-normal shadowing model for the jamming signal.

The deterministic part is ``P_f = P_J + K - 10*eta*log10(d)`` (dBm) and the
received power adds a zero-mean Gaussian shadowing term ``X`` with standard
deviation ``sigma`` (dB).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveDistance

# A node cannot sit on top of the jammer; below this the model is rejected.
MIN_DISTANCE = 0.01


@dataclass(frozen=True)
class RadioParams:
    jammer_power: float = 0.0  # dBm
    antenna_constant: float = 0.0  # dB
    path_loss_exponent: float = 2.0
    shadowing_sigma: float = 0.0  # dB
    node_comm_range: float = 10.0  # m

    def __post_init__(self):
        for name in ("jammer_power", "antenna_constant", "path_loss_exponent",
                     "shadowing_sigma", "node_comm_range"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.path_loss_exponent <= 0:
            raise ValueError("path_loss_exponent must be > 0")
        if self.shadowing_sigma < 0:
            raise ValueError("shadowing_sigma must be >= 0")
        if self.node_comm_range <= 0:
            raise ValueError("node_comm_range must be > 0")


@dataclass(frozen=True)
class PowerSample:
    deterministic: float  # P_f, dBm
    shadowing: float  # X, dB
    received: float  # P_r = P_f + X, dBm


def path_loss_power(params: RadioParams, d: float) -> float:
    if not d >= MIN_DISTANCE:
        raise NonPositiveDistance(f"distance {d} m is below {MIN_DISTANCE} m")
    return (params.jammer_power + params.antenna_constant
            - 10.0 * params.path_loss_exponent * math.log10(d))


def received_power(params: RadioParams, d: float, rng: np.random.Generator) -> PowerSample:
    """Draw one shadowed power sample at distance ``d``.

    One standard normal is consumed from ``rng`` per call regardless of
    sigma, so a fixed seed walks the same stream for every sigma.
    """
    p_f = path_loss_power(params, d)
    z = float(rng.standard_normal())
    x = params.shadowing_sigma * z if params.shadowing_sigma > 0 else 0.0
    return PowerSample(p_f, x, p_f + x)
