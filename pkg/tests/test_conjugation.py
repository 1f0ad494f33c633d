import numpy as np
import pytest

from diskdyn import conjugation, maps
from diskdyn.errors import PreconditionError

CPS = (100, 1_000, 10_000)


def test_default_grid_shape():
    grid = conjugation.default_grid()
    assert grid.shape == (25,)
    assert np.all(grid.real >= 1.0) and np.all(grid.real <= 3.0)


def test_pommerenke_rejects_non_parabolic():
    with pytest.raises(PreconditionError):
        conjugation.pommerenke_normalized(maps.HalfplaneAffine(2.0), checkpoints=CPS)
    with pytest.raises(PreconditionError):
        conjugation.pommerenke_normalized(maps.SiegelTranslation(1.0), checkpoints=CPS)


def test_pommerenke_vertical_translation_exact():
    # f = z + i: f_n(z) = z + in, basepoint orbit x_n = 1, y_n = n,
    # psi_n(z) = z + i(n - y_n) = z for every n; residual is exactly 0
    res = conjugation.pommerenke_normalized(maps.HalfplaneAffine(1.0, 1j), checkpoints=CPS)
    assert np.all(res.residual_series < 1e-12)
    assert res.b_estimate == pytest.approx(1.0, abs=1e-12)
    for n in CPS:
        assert np.allclose(res.psi_n[n], res.grid, atol=1e-12)


def test_pommerenke_horizontal_translation_exact():
    # f = z + 1: psi_n(z) = (z + n)/(1 + n); increment is real, residual ~ 0
    res = conjugation.pommerenke_normalized(maps.HalfplaneAffine(1.0, 1.0), checkpoints=CPS)
    assert np.all(res.residual_series < 1e-12)
    assert abs(res.b_estimate) < 1e-12
    n = CPS[-1]
    assert np.allclose(res.psi_n[n], (res.grid + n) / (1.0 + n), atol=1e-12)


def test_pommerenke_perturbed_residual_decreases():
    res = conjugation.pommerenke_normalized(maps.HalfplanePerturbed(1j, 1.0), checkpoints=CPS)
    r = res.residual_series
    assert np.all(np.diff(r) < 0.0)
    assert r[-1] < 0.05


def test_baker_pommerenke_exact_translation():
    # f = z + 1: z_{n+1} - z_n = 1, psi_n(z) = f_n(z) - z_n = z - 1 exactly
    res = conjugation.baker_pommerenke_normalized(
        maps.HalfplaneAffine(1.0, 1.0), checkpoints=CPS
    )
    assert np.all(res.residual_series < 1e-12)
    for n in CPS:
        assert np.allclose(res.psi_n[n], res.grid - 1.0, atol=1e-12)


def test_baker_pommerenke_perturbed_residual_decreases():
    res = conjugation.baker_pommerenke_normalized(
        maps.HalfplanePerturbed(1.0, 1j), checkpoints=CPS
    )
    r = res.residual_series
    assert np.all(np.diff(r) < 0.0)
    assert r[-1] < 0.05


def test_baker_pommerenke_refuses_nonzero_step():
    # z + i never loses its step; the Abel normalization degenerates
    with pytest.raises(PreconditionError):
        conjugation.baker_pommerenke_normalized(
            maps.HalfplaneAffine(1.0, 1j), checkpoints=CPS
        )


def test_deltas_shrink_for_convergent_case():
    res = conjugation.pommerenke_normalized(maps.HalfplanePerturbed(1j, 1.0), checkpoints=CPS)
    d = res.deltas
    assert d.size == 2
    # grid functions settle as n grows
    assert d[-1] < d[0]


def test_report_mentions_checkpoints():
    res = conjugation.pommerenke_normalized(maps.HalfplaneAffine(1.0, 1j), checkpoints=CPS)
    text = conjugation.conjugation_report(res)
    for n in CPS:
        assert str(n) in text
    assert "b_estimate" in text
