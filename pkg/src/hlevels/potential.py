"""Modified Coulomb interaction with a dipole proton form factor.

The coupling runs with the probe scale: it equals alpha at large distance
(small momentum transfer) and vanishes at the origin (large momentum
transfer), which removes the 1/r singularity of the potential.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constants import Constants, DerivedMasses

DEFAULT_LAMBDA_MEV = 840.0


@dataclass(frozen=True)
class PotentialParams:
    """Coupling alpha, form-factor scale lambda (MeV) and nuclear charge z."""

    alpha: float
    lam: float = DEFAULT_LAMBDA_MEV
    z: int = 1

    def __post_init__(self):
        if self.alpha <= 0.0 or self.lam <= 0.0:
            raise ValueError("alpha and lambda must be positive")
        if int(self.z) != self.z or self.z < 1:
            raise ValueError(f"z must be a positive integer, got {self.z}")


def default_params(c: Constants, lam: float = DEFAULT_LAMBDA_MEV, z: int = 1) -> PotentialParams:
    return PotentialParams(alpha=c.alpha, lam=lam, z=z)


def form_factor(q: float, p: PotentialParams) -> float:
    """Dipole form factor (lam^2/(q^2+lam^2))^2, in (0, 1]."""
    u = p.lam**2 / (q**2 + p.lam**2)
    return u * u


def running_alpha_q(q: float, p: PotentialParams) -> float:
    """Momentum-space running coupling alpha*(lam^2/(q^2+lam^2))^2."""
    return p.alpha * form_factor(q, p)


def running_alpha_r(r: float, p: PotentialParams) -> float:
    """Configuration-space coupling alpha*(lam^2 r^2/(1+lam^2 r^2))^2.

    Vanishes like r^4 at the origin and saturates at alpha for large r.
    """
    x = (p.lam * r) ** 2
    u = x / (1.0 + x)
    return p.alpha * u * u


def potential_r(r: float, p: PotentialParams) -> float:
    """Potential -z*alpha_running(r)/r in MeV; the r=0 limit is 0."""
    if r == 0.0:
        return 0.0
    return -p.z * running_alpha_r(r, p) / r


def mass_function(r: float, p: PotentialParams, d: DerivedMasses) -> float:
    """Position-dependent total mass m_plus + W(r) entering the radial equation."""
    return d.m_plus + potential_r(r, p)


def particle_mass(r: float, p: PotentialParams, m_i: float) -> float:
    """Position-dependent single-particle mass m_i + W(r)/2 (weight 1/2 each)."""
    return m_i + potential_r(r, p) / 2.0
