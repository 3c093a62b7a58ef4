"""Physical constants and derived mass combinations.

Single source of truth for every model in the package.  Internally the
unit system is natural (hbar = c = 1) with masses in MeV; energies are
converted to eV only at the reporting boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

EV_PER_MEV = 1.0e6

# CODATA-2014 frozen values.
_ALPHA = 7.2973525664e-3
_M_E_MEV = 0.5109989461
_M_P_MEV = 938.2720813
_HBAR_C_MEV_FM = 197.3269788

_CONFIG_KEYS = ("alpha", "m_e_mev", "m_p_mev", "hbar_c")


@dataclass(frozen=True)
class Constants:
    """Fine-structure constant, particle masses (MeV) and hbar*c (MeV*fm)."""

    alpha: float = _ALPHA
    m_e: float = _M_E_MEV
    m_p: float = _M_P_MEV
    hbar_c: float = _HBAR_C_MEV_FM
    ev_per_mev: float = EV_PER_MEV

    def __post_init__(self):
        if not (0.0 < self.alpha < 1.0):
            raise ValueError(f"alpha out of range: {self.alpha}")
        if not (0.0 < self.m_e < self.m_p):
            raise ValueError("need 0 < m_e < m_p")
        for name in ("alpha", "m_e", "m_p", "hbar_c", "ev_per_mev"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be finite and positive, got {v}")


@dataclass(frozen=True)
class DerivedMasses:
    """Mass combinations m+ = m_p + m_e, m- = m_p - m_e, m_a = m+/2, mu."""

    m_plus: float
    m_minus: float
    m_a: float
    mu: float


def default_constants() -> Constants:
    """The frozen CODATA-2014 constant set."""
    return Constants()


def derive(c: Constants) -> DerivedMasses:
    """Compute the derived mass combinations from a constant set.

    The reduced mass is evaluated as a single product-over-sum expression;
    no intermediate subtraction enters any of the four combinations.
    """
    return DerivedMasses(
        m_plus=c.m_p + c.m_e,
        m_minus=c.m_p - c.m_e,
        m_a=(c.m_p + c.m_e) / 2.0,
        mu=c.m_e * c.m_p / (c.m_p + c.m_e),
    )


def rydberg_constant(c: Constants) -> float:
    """Rydberg constant m_e*alpha^2/2 as a wave number in 1/m.

    The MeV energy is divided by h*c = 2*pi*hbar_c (MeV*fm) and the
    inverse femtometers are rescaled to inverse meters.
    """
    energy_mev = c.m_e * c.alpha**2 / 2.0
    return energy_mev / (2.0 * math.pi * c.hbar_c) * 1.0e15


def rydberg_energy(c: Constants, use_reduced: bool = False) -> float:
    """Ground-state binding scale m*alpha^2/2 in eV (m = m_e or mu)."""
    m = derive(c).mu if use_reduced else c.m_e
    return m * c.alpha**2 / 2.0 * c.ev_per_mev


def load_constants(source: str | Path) -> Constants:
    """Build a Constants set from a key=value override file or text.

    Recognized keys: alpha, m_e_mev, m_p_mev, hbar_c.  Lines starting
    with '#' and blank lines are ignored.  Unknown keys are an error.
    """
    text = source
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    overrides = {}
    for lineno, raw in enumerate(str(text).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in _CONFIG_KEYS:
            raise ValueError(f"line {lineno}: expected '<key>=<value>' with key in {_CONFIG_KEYS}")
        overrides[key] = float(value)
    return Constants(
        alpha=overrides.get("alpha", _ALPHA),
        m_e=overrides.get("m_e_mev", _M_E_MEV),
        m_p=overrides.get("m_p_mev", _M_P_MEV),
        hbar_c=overrides.get("hbar_c", _HBAR_C_MEV_FM),
    )
