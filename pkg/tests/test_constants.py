import math
from pathlib import Path

import pytest

from hlevels import (
    Constants,
    default_constants,
    derive,
    load_constants,
    rydberg_constant,
    rydberg_energy,
)


def test_default_values(C):
    assert C.alpha == 7.2973525664e-3
    assert C.m_e == 0.5109989461
    assert C.m_p == 938.2720813
    assert C.hbar_c == 197.3269788
    assert C.ev_per_mev == 1.0e6


def test_validation_rejects_bad_sets():
    with pytest.raises(ValueError):
        Constants(alpha=-1.0)
    with pytest.raises(ValueError):
        Constants(alpha=1.5)
    with pytest.raises(ValueError):
        Constants(m_e=2.0, m_p=1.0)
    with pytest.raises(ValueError):
        Constants(hbar_c=float("nan"))


def test_derived_masses(C, D):
    assert D.m_plus == pytest.approx(938.7830802461, abs=1e-10)
    assert D.m_minus == pytest.approx(937.7610823539, abs=1e-10)
    assert D.m_a == D.m_plus / 2.0
    # reduced mass, frozen from an extended-precision evaluation
    assert D.mu == pytest.approx(0.5107208, abs=5e-8)
    # mass ratio sanity
    assert C.m_p / C.m_e == pytest.approx(1836.152674, abs=1e-6)


def test_derive_is_pure(C):
    assert derive(C) == derive(C)


def test_mass_difference_identity(C, D):
    # m_plus^2 - m_minus^2 = 4 m_p m_e, in the factored stable form
    lhs = (D.m_plus - D.m_minus) * (D.m_plus + D.m_minus)
    rhs = 4.0 * C.m_p * C.m_e
    # the stored sums each round once, so a few ulp of slack is inherent
    assert abs(lhs - rhs) <= 1e-13 * rhs


def test_rydberg_constant(C):
    assert rydberg_constant(C) == pytest.approx(10973731.57, abs=0.5)


def test_rydberg_constant_scaling(C):
    base = rydberg_constant(C)
    assert rydberg_constant(Constants(alpha=2 * C.alpha)) == pytest.approx(4 * base, rel=1e-12)
    assert rydberg_constant(Constants(m_e=C.m_e / 2)) == pytest.approx(base / 2, rel=1e-12)


def test_rydberg_energy_electron_mass(C):
    assert rydberg_energy(C) == pytest.approx(13.605693, abs=1e-5)
    # frozen extended-precision value
    assert rydberg_energy(C) == pytest.approx(13.60569301, abs=1e-7)


def test_rydberg_energy_reduced_mass(C):
    # frozen extended-precision value of mu*alpha^2/2 with these constants
    assert rydberg_energy(C, use_reduced=True) == pytest.approx(13.59828715, abs=1e-7)
    assert rydberg_energy(C, use_reduced=True) < rydberg_energy(C)


def test_rydberg_energy_small_alpha():
    c = Constants(alpha=1e-8)
    assert 0.0 < rydberg_energy(c) < 1e-9


def test_energy_over_wavenumber_is_hc(C):
    # E/R_inf = h*c; hbar_c in MeV*fm converts by 1e6 eV/MeV * 1e-15 m/fm
    ratio = rydberg_energy(C) / rydberg_constant(C)
    hc = 2.0 * math.pi * C.hbar_c * 1e-9
    assert ratio == pytest.approx(hc, rel=1e-12)


def test_load_constants_from_text():
    c = load_constants("alpha = 7.0e-3\n# comment\n\nm_e_mev=0.5\n")
    assert c.alpha == 7.0e-3
    assert c.m_e == 0.5
    assert c.m_p == default_constants().m_p


def test_load_constants_from_path(tmp_path: Path):
    f = tmp_path / "c.cfg"
    f.write_text("m_p_mev=938.0\nhbar_c=197.0\n", encoding="utf-8")
    c = load_constants(f)
    assert c.m_p == 938.0
    assert c.hbar_c == 197.0


def test_load_constants_rejects_unknown_key():
    with pytest.raises(ValueError, match="line 1"):
        load_constants("mass=1.0\n")


def test_load_constants_rejects_bad_number():
    with pytest.raises(ValueError):
        load_constants("alpha=seven\n")
