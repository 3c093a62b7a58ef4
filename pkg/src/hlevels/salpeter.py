"""Variational eigensolver for the spinless Salpeter equation.

Two-body Hamiltonian sqrt(p^2+m_e^2) + sqrt(p^2+m_p^2) - z*alpha/r in a
scaled generalized-Laguerre radial basis.  The basis has closed-form
momentum transforms (Gegenbauer polynomials), so the nonlocal square-root
kinetic operators are plain multiplication operators under a momentum
quadrature, while overlap and Coulomb matrices are exact in coordinate
space.  The rest mass m_plus is removed from the kinetic operator
analytically: eigenvalues are binding energies directly, never a
difference of ~1 GeV quantities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.linalg import eigh
from scipy.special import gammaln

from .constants import Constants, DerivedMasses, derive
from .errors import IllConditionedBasis, NoConvergence
from .spectra import EnergyLevel, QuantumState

_P_MAX_MEV = 1.0e6
_P_MIN_OCTAVES = 40  # lower grid edge at scale * 2^-40


@dataclass(frozen=True)
class SolverConfig:
    """Basis size, variational length scale (1/MeV) and quadrature order."""

    basis_size: int = 64
    scale: float = None  # default: Bohr length 1/(mu*alpha)
    quad_nodes: int = 4096
    scale_search: bool = True
    scale_bracket: tuple = (0.05, 4.0)  # multiples of scale

    def __post_init__(self):
        if self.basis_size < 4:
            raise ValueError("basis_size must be >= 4")
        if self.scale is not None and self.scale <= 0.0:
            raise ValueError("scale must be positive")
        if self.quad_nodes < 2 * self.basis_size:
            raise ValueError("quad_nodes must be at least 2*basis_size")


@dataclass(frozen=True)
class SSOperatorMatrices:
    """Kinetic, potential and overlap matrices in the radial basis (MeV).

    kinetic contains the full square-root operators including rest mass;
    kinetic_binding is the same operator minus m_plus (used by the solver).
    """

    kinetic: np.ndarray
    potential: np.ndarray
    overlap: np.ndarray
    kinetic_binding: np.ndarray


def _resolve_scale(cfg: SolverConfig, c: Constants) -> float:
    if cfg.scale is not None:
        return cfg.scale
    d = derive(c)
    return 1.0 / (d.mu * c.alpha)


def _basis_norms(nb: int, l: int, a: float) -> np.ndarray:
    # phi_n(r) = N_n (2ar)^l e^{-ar} L_n^{(2l+2)}(2ar), <phi_m phi_n r^2> = delta
    n = np.arange(nb)
    return np.exp(0.5 * (3.0 * math.log(2.0 * a) + gammaln(n + 1) - gammaln(n + 2 * l + 3)))


def _momentum_basis(p: np.ndarray, nb: int, l: int, a: float) -> np.ndarray:
    """Momentum-space basis functions, shape (nb, len(p)).

    Transform of the Laguerre-(2l+1) layer is
        2^(2l+1) l! (j+l+1) a^(l+1) p^l (p^2+a^2)^-(l+2) C_j^{(l+1)}(y),
    y = (p^2-a^2)/(p^2+a^2); the (2l+2) basis is its cumulative sum via
    L_n^{(2l+2)} = sum_j L_j^{(2l+1)}.
    """
    y = (p * p - a * a) / (p * p + a * a)
    lam = l + 1.0
    cg = np.empty((nb, p.size))
    cg[0] = 1.0
    if nb > 1:
        cg[1] = 2.0 * lam * y
    for j in range(1, nb - 1):
        cg[j + 1] = (2.0 * (j + lam) * y * cg[j] - (j + 2.0 * lam - 1.0) * cg[j - 1]) / (j + 1.0)
    prefactor = (
        math.sqrt(2.0 / math.pi)
        * 2.0 ** (2 * l + 1)
        * math.factorial(l)
        * a ** (l + 1)
        * p**l
        / (p * p + a * a) ** (l + 2)
    )
    layers = (np.arange(nb) + l + 1)[:, None] * cg * prefactor[None, :]
    return _basis_norms(nb, l, a)[:, None] * np.cumsum(layers, axis=0)


def _momentum_grid(a: float, total_nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre rule on octave panels of a rational p-grid."""
    n_panels = _P_MIN_OCTAVES + max(1, int(math.ceil(math.log2(_P_MAX_MEV / a))))
    per_panel = max(8, total_nodes // n_panels)
    x, w = leggauss(per_panel)
    edges = a * 2.0 ** np.arange(-_P_MIN_OCTAVES, n_panels - _P_MIN_OCTAVES + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    ps = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    ws = (half[:, None] * w[None, :]).ravel()
    return ps, ws


def _tau(p: np.ndarray, m: float) -> np.ndarray:
    # sqrt(p^2 + m^2) - m, evaluated without cancellation
    return p * p / (m + np.hypot(p, m))


def _coulomb_matrix(nb: int, l: int, a: float, alpha: float, z: int) -> np.ndarray:
    # <m| -z*alpha/r |n> = -z*alpha N_m N_n (2a)^-2 sum_{i<=min(m,n)} Gamma(2l+2+i)/i!
    i = np.arange(nb)
    partial = np.cumsum(np.exp(gammaln(2 * l + 2 + i) - gammaln(i + 1)))
    norms = _basis_norms(nb, l, a)
    return -z * alpha * np.outer(norms, norms) * partial[np.minimum.outer(i, i)] / (2.0 * a) ** 2


def build_matrices(
    l: int,
    cfg: SolverConfig,
    c: Constants,
    z: int = 1,
    masses: tuple = None,
) -> SSOperatorMatrices:
    """Operator matrices for orbital momentum l at the configured scale."""
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}")
    a = 1.0 / _resolve_scale(cfg, c)
    nb = cfg.basis_size
    m1, m2 = masses if masses is not None else (c.m_e, c.m_p)

    p, w = _momentum_grid(a, cfg.quad_nodes)
    phi = _momentum_basis(p, nb, l, a)
    weight = w * p * p
    overlap = (phi * weight) @ phi.T
    kinetic_binding = (phi * (weight * (_tau(p, m1) + _tau(p, m2)))) @ phi.T
    overlap = 0.5 * (overlap + overlap.T)
    kinetic_binding = 0.5 * (kinetic_binding + kinetic_binding.T)

    cond = np.linalg.cond(overlap)
    if not np.isfinite(cond) or cond > 1.0e12:
        raise IllConditionedBasis(f"overlap condition number {cond:.3e}")

    potential = _coulomb_matrix(nb, l, a, c.alpha, z)
    kinetic = kinetic_binding + (m1 + m2) * overlap
    return SSOperatorMatrices(
        kinetic=kinetic,
        potential=potential,
        overlap=overlap,
        kinetic_binding=kinetic_binding,
    )


def _binding_spectrum(l, cfg, c, z=1, masses=None) -> np.ndarray:
    m = build_matrices(l, cfg, c, z=z, masses=masses)
    return eigh(m.kinetic_binding + m.potential, m.overlap, eigvals_only=True)


def _golden_minimize(f, lo, hi, iterations=40):
    """Golden-section minimum of f over [lo, hi] (log-spaced in the scale)."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = math.log(lo), math.log(hi)
    x1 = b - invphi * (b - a)
    x2 = a + invphi * (b - a)
    f1, f2 = f(math.exp(x1)), f(math.exp(x2))
    for _ in range(iterations):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - invphi * (b - a)
            f1 = f(math.exp(x1))
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + invphi * (b - a)
            f2 = f(math.exp(x2))
    return min(f1, f2)


def lowest_levels(
    l: int,
    count: int,
    cfg: SolverConfig,
    c: Constants,
    z: int = 1,
    tol: float = None,
) -> list[EnergyLevel]:
    """The lowest `count` binding energies for orbital momentum l, in eV.

    With scale_search enabled each target level is minimized over the
    variational length parameter by golden-section search.  If tol is
    given, the basis is doubled once and NoConvergence is raised when any
    returned level moves by more than tol (eV).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if count > cfg.basis_size // 2:
        raise ValueError("count must not exceed basis_size/2")

    def levels_for(config) -> list[float]:
        base_scale = _resolve_scale(config, c)
        if not config.scale_search:
            vals = _binding_spectrum(l, config, c, z=z)
            return [float(v) * c.ev_per_mev for v in vals[:count]]
        out = []
        for index in range(count):
            # optimal exponent scales like N/(mu*alpha): widen bracket with index
            lo = base_scale * config.scale_bracket[0]
            hi = base_scale * config.scale_bracket[1] * (index + l + 1)
            value = _golden_minimize(
                lambda sc: float(
                    _binding_spectrum(l, replace(config, scale=sc), c, z=z)[index]
                ),
                lo,
                hi,
            )
            out.append(value * c.ev_per_mev)
        return out

    values = levels_for(cfg)
    if tol is not None:
        doubled = levels_for(replace(cfg, basis_size=2 * cfg.basis_size,
                                     quad_nodes=max(cfg.quad_nodes, 4 * cfg.basis_size)))
        for i, (v, vd) in enumerate(zip(values, doubled)):
            if abs(v - vd) > tol:
                raise NoConvergence(
                    f"level {i} moved by {abs(v - vd):.3e} eV on basis doubling (tol {tol})"
                )
    return [
        EnergyLevel(value=v, model="salpeter", state=QuantumState(k=i, l=l))
        for i, v in enumerate(values)
    ]


def convergence_report(
    l: int,
    level_index: int,
    basis_sizes,
    cfg: SolverConfig,
    c: Constants,
    z: int = 1,
) -> list[dict]:
    """Ladder of (basis_size, value, delta) rows with a monotonicity flag."""
    sizes = sorted(basis_sizes)
    if len(sizes) < 3:
        raise ValueError("need at least 3 basis sizes")
    rows = []
    previous = None
    for nb in sizes:
        config = replace(cfg, basis_size=nb, quad_nodes=max(cfg.quad_nodes, 2 * nb))
        vals = _binding_spectrum(l, config, c, z=z)
        value = float(vals[level_index]) * c.ev_per_mev
        delta = None if previous is None else value - previous
        rows.append({"basis_size": nb, "value_ev": value, "delta_ev": delta})
        previous = value
    deltas = [abs(r["delta_ev"]) for r in rows if r["delta_ev"] is not None]
    flagged = any(b > a for a, b in zip(deltas[1:], deltas[2:]))
    for r in rows:
        r["flagged"] = flagged
    return rows
