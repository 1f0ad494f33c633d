import numpy as np
import pytest

from diskdyn import diagnostics, dynamics, maps
from diskdyn.dynamics import Budgets
from diskdyn.errors import PreconditionError
from diskdyn.geometry import BoundaryPoint


def siegel_orbit(spec, start, n=20_000):
    return dynamics.iterate(spec, np.array(start, np.complex128), n)


def test_approach_siegel_translation_is_restricted():
    orb = siegel_orbit(maps.SiegelTranslation(1.0), [1.0, 0.3])
    ap = diagnostics.approach_report(orb)
    assert ap.is_special and ap.is_restricted and ap.in_koranyi
    assert ap.implications_ok()
    assert ap.koranyi_M < 10.0


def test_approach_heisenberg_not_special():
    # w_n = w_0 + n a grows, so ||w||^2 / Re z tends to a positive constant
    orb = siegel_orbit(maps.HeisenbergTranslation((1.0 + 0j,), 0.0), [2.0, 0.0])
    ap = diagnostics.approach_report(orb)
    assert not ap.is_special
    assert not ap.is_restricted
    assert ap.implications_ok()


def test_approach_rejects_wrong_vertex():
    # ball orbit heading to e1, checked against e2: not a convergent approach
    orb = dynamics.iterate(
        maps.Conjugated(maps.SiegelTranslation(1.0)),
        np.array([0.0, 0.0], np.complex128),
        500,
    )
    with pytest.raises(PreconditionError):
        diagnostics.approach_report(orb, X=BoundaryPoint([0.0, 1.0]))


def test_approach_ball_orbit_with_vertex():
    orb = dynamics.iterate(
        maps.Conjugated(maps.SiegelTranslation(1.0)),
        np.array([0.0, 0.1], np.complex128),
        20_000,
    )
    ap = diagnostics.approach_report(orb, X=BoundaryPoint.e1(2))
    assert ap.is_special and ap.is_restricted


def test_ball_orbit_needs_vertex():
    orb = dynamics.iterate(
        maps.Conjugated(maps.SiegelTranslation(1.0)),
        np.array([0.0, 0.0], np.complex128),
        100,
    )
    with pytest.raises(PreconditionError):
        diagnostics.approach_report(orb)


def test_radial_quotient_tends_to_one_for_translation():
    orb = siegel_orbit(maps.SiegelTranslation(1.0), [1.0, 0.0])
    rq = diagnostics.radial_quotient_series(orb)
    assert abs(rq[-1] - 1.0) < 1e-3


def test_harness_small_suite_passes():
    suite = [
        (maps.SiegelTranslation(1.0), np.array([1.0, 0.0], np.complex128)),
        (maps.SiegelTranslation(1.5), np.array([2.0, 0.3], np.complex128)),
        (maps.HeisenbergTranslation((1.0 + 0j,), 0.0), np.array([2.0, 0.0], np.complex128)),
    ]
    rep = diagnostics.theorem_harness(suite, budgets=Budgets(n_max=20_000))
    assert rep.n_failed == 0
    assert rep.n_skipped == 0
    assert rep.implications_ok()
    heis = [r for r in rep.rows if "Heisenberg" in r.label][0]
    assert heis.step_verdict == "nonzero_step" and heis.restricted is False
    trans = [r for r in rep.rows if r.restricted][0]
    assert trans.step_verdict == "zero_step"
    assert trans.radial_dev < 1e-2


def test_harness_skips_non_parabolic():
    suite = [(maps.HalfplaneAffine(2.0), 1.0 + 0j)]
    rep = diagnostics.theorem_harness(suite, budgets=Budgets(n_max=5_000))
    assert rep.n_skipped == 1
    assert rep.rows[0].classified_type == "hyperbolic"


def test_default_suite_composition():
    suite = diagnostics.default_harness_suite()
    fams = [type(s).__name__ for s, _ in suite]
    assert fams.count("SiegelTranslation") >= 20
    assert fams.count("HeisenbergTranslation") >= 10
    assert fams.count("Composition") >= 5


def test_probe_consistent_translation():
    rep = diagnostics.conjecture_probe(
        maps.HalfplaneAffine(1.0, 1.0), budgets=Budgets(n_max=20_000)
    )
    assert rep.flag == "CONSISTENT"
    assert set(rep.verdicts) == {"zero_step"}
    assert len(rep.starts) >= 5


def test_probe_rejects_non_parabolic():
    with pytest.raises(PreconditionError):
        diagnostics.conjecture_probe(maps.HalfplaneAffine(2.0))


def test_probe_needs_five_starts():
    with pytest.raises(PreconditionError):
        diagnostics.conjecture_probe(maps.HalfplaneAffine(1.0, 1.0), starts=[1.0, 2.0])
