"""Run the zero-step harness and print a per-case table.

Every case is a parabolic self-map of the Siegel domain with its Denjoy-Wolff
point at infinity.  The claim under test: an orbit that converges to the
vertex inside a restricted region must lose its pseudo-hyperbolic step.
Heisenberg-type automorphisms supply the tangential counterpoint: their
orbits keep a positive step and never enter a restricted region, so the
implication holds vacuously for them.
"""

from diskdyn import diagnostics
from diskdyn.dynamics import Budgets

if __name__ == "__main__":
    suite = diagnostics.default_harness_suite()
    rep = diagnostics.theorem_harness(suite, Budgets(n_max=50_000))
    print(f"{'case':<68} {'restricted':>10} {'step':>13} {'radial_dev':>11}")
    for row in rep.rows:
        label = row.label if len(row.label) <= 66 else row.label[:63] + "..."
        rd = f"{row.radial_dev:.2e}" if row.radial_dev is not None else "-"
        print(f"{label:<68} {str(row.restricted):>10} {str(row.step_verdict):>13} {rd:>11}")
    print(f"\npassed {rep.n_passed}, failed {rep.n_failed}, skipped {rep.n_skipped}; "
          f"implication lemma consistent: {rep.implications_ok()}")
