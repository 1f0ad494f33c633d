import numpy as np
import pytest

from diskdyn import dynamics, maps
from diskdyn.dynamics import Budgets, StoppingPolicy
from diskdyn.errors import DomainError, EstimationError, PreconditionError


def test_iterate_stops_at_max_iter():
    orb = dynamics.iterate(maps.HalfplaneAffine(1.0, 1j), 1.0, 50)
    assert orb.length == 51
    assert orb.stop_reason == "max_iter"
    # vertical translation: exact arithmetic progression
    assert np.allclose(orb.points, 1.0 + 1j * np.arange(51))


def test_iterate_stops_on_magnitude():
    orb = dynamics.iterate(maps.HalfplaneAffine(2.0), 1.0, 100)
    assert orb.stop_reason == "boundary_proximity"
    assert abs(orb.points[-1]) > StoppingPolicy().max_magnitude
    assert orb.length < 101


def test_iterate_stops_at_interior_fixed_point():
    orb = dynamics.iterate(maps.DiskMoebius(0.0), 0.3, 100)  # identity-like: f(z) = z
    assert orb.stop_reason == "interior_fixed_point"
    assert orb.length <= 3


def test_iterate_disk_boundary_proximity():
    # hyperbolic disk automorphism pushes orbits to the boundary
    f = maps.Conjugated(maps.HalfplaneAffine(4.0))
    orb = dynamics.iterate(f, 0.0, 100_000)
    assert orb.stop_reason == "boundary_proximity"
    assert 1.0 - abs(orb.points[-1]) < 1e-11


def test_iterate_rejects_outside_start():
    with pytest.raises(DomainError):
        dynamics.iterate(maps.HalfplaneAffine(1.0, 1.0), -2.0, 10)


def test_step_series_constant_oracle():
    # z + i: s_n = d(z, z+i) = 1/|2x + i| at x=1 gives 1/sqrt(5), every n
    orb = dynamics.iterate(maps.HalfplaneAffine(1.0, 1j), 1.0, 2_000)
    st = dynamics.step_series(orb)
    assert np.allclose(st.s, 1.0 / np.sqrt(5.0), atol=1e-12)
    assert st.verdict == "nonzero_step"
    assert st.d_inf_estimate == pytest.approx(1.0 / np.sqrt(5.0), abs=1e-12)


def test_step_series_decaying_oracle():
    # z + 1 from z0 = 1: s_n = 1/(2n+3)
    orb = dynamics.iterate(maps.HalfplaneAffine(1.0, 1.0), 1.0, 2_000)
    st = dynamics.step_series(orb)
    n = np.arange(st.s.size)
    assert np.allclose(st.s, 1.0 / (2.0 * n + 3.0), atol=1e-12)
    assert st.verdict == "zero_step"


def test_step_series_inconclusive_band():
    # tail mean inside (tol_step, 10 tol_step) with decay: neither verdict fires
    orb = dynamics.iterate(maps.HalfplaneAffine(1.0, 1j), 1.0, 500)
    st = dynamics.step_series(orb, tol_step=0.1)
    assert st.verdict == "inconclusive"


def test_step_series_needs_two_points():
    orb = dynamics.iterate(maps.DiskMoebius(0.0), 0.0, 0)
    assert orb.length == 1
    with pytest.raises(PreconditionError):
        dynamics.step_series(orb)


def test_estimate_denjoy_wolff_boundary():
    p, loc = dynamics.estimate_denjoy_wolff(
        maps.HalfplaneAffine(1.0, 1.0), [1.0, 2.0 + 1j], n_max=20_000, tol_dw=1e-4
    )
    assert loc == "boundary"
    assert abs(p[0] - 1.0) < 1e-4  # disk coordinates of infinity


def test_estimate_denjoy_wolff_interior():
    class Shrink:
        model = "disk"

        def __call__(self, z):
            return 0.5 * z

    p, loc = dynamics.estimate_denjoy_wolff(Shrink(), [0.3, -0.2 + 0.4j], n_max=10_000)
    assert loc == "interior"
    assert abs(p[0]) < 1e-10


def test_estimate_denjoy_wolff_disagreement():
    # rotation orbits stay on distinct circles
    rot = maps.DiskMoebius(0.0, 2.0)
    with pytest.raises(EstimationError):
        dynamics.estimate_denjoy_wolff(rot, [0.3, 0.6], n_max=500)


def test_multiplier_hyperbolic():
    orb = dynamics.iterate(maps.HalfplaneAffine(2.0), 1.0, 100_000)
    est = dynamics.estimate_multiplier(maps.HalfplaneAffine(2.0), orb)
    assert est.value == pytest.approx(0.5, abs=1e-6)


def test_multiplier_parabolic():
    spec = maps.HalfplaneAffine(1.0, 1.0)
    orb = dynamics.iterate(spec, 1.0, 50_000)
    est = dynamics.estimate_multiplier(spec, orb)
    assert est.value == pytest.approx(1.0, abs=1e-4)


def test_classify_hyperbolic():
    rep = dynamics.classify(maps.HalfplaneAffine(2.0))
    assert rep.type == "hyperbolic"
    assert rep.multiplier_c == pytest.approx(0.5, abs=1e-6)
    assert rep.dw_location == "boundary"
    assert rep.dw_point.at_infinity


def test_classify_parabolic_translations():
    for b in (1.0, 1j, 1.0 + 1j):
        rep = dynamics.classify(maps.HalfplaneAffine(1.0, b), budgets=Budgets(n_max=20_000))
        assert rep.type == "parabolic", b
        assert abs(rep.multiplier_c - 1.0) <= 1e-3


def test_classify_elliptic_rotation():
    rep = dynamics.classify(maps.DiskMoebius(0.0, 1.0), budgets=Budgets(n_max=2_000))
    assert rep.type == "elliptic"
    assert rep.dw_location == "interior"
    assert abs(rep.dw_point) < 1e-10
    assert rep.multiplier_c == pytest.approx(1.0, abs=1e-6)  # isometry


def test_classify_elliptic_moebius_offcenter():
    # elliptic automorphism with fixed point a/(1 - sqrt(1-|a|^2)) style; just
    # check the located point is actually fixed
    f = maps.DiskMoebius(0.3, 2.5)
    rep = dynamics.classify(f, budgets=Budgets(n_max=2_000))
    assert rep.type == "elliptic"
    assert abs(f(rep.dw_point) - rep.dw_point) < 1e-10


def test_classify_siegel_translation():
    rep = dynamics.classify(maps.SiegelTranslation(1.0), budgets=Budgets(n_max=20_000))
    assert rep.type == "parabolic"
    assert rep.dw_point.at_infinity


def test_classify_heisenberg():
    rep = dynamics.classify(
        maps.HeisenbergTranslation((1.0 + 0j,), 0.0), budgets=Budgets(n_max=20_000)
    )
    assert rep.type == "parabolic"


def test_classify_single_start_pads_defaults():
    rep = dynamics.classify(
        maps.HalfplaneAffine(1.0, 1.0), starts=[1.0 + 0j], budgets=Budgets(n_max=20_000)
    )
    assert rep.type == "parabolic"


def test_default_starts_inside_domain():
    for model in maps.MODELS:
        for s in dynamics.default_starts(model):
            assert maps.domain_margin(model, s) > 0.0
