"""Watch the normalized-iterate conjugations converge.

For a parabolic half-plane map the rescaled iterates

    psi_n(z) = (f_n(z) - i y_n) / x_n            (translation normalization)
    psi_n(z) = (f_n(z) - z_n) / (z_{n+1} - z_n)  (Abel normalization)

converge to conjugations onto a translation, respectively a solution of
psi(f(z)) = psi(z) + 1.  The closed-form cases sit at machine precision from
the first checkpoint; the perturbed map z + i + 1/(z + 1) shows the expected
residual decay.
"""

from diskdyn import conjugation, maps

CASES = [
    ("z + i (exact)", maps.HalfplaneAffine(1.0, 1j), "pommerenke"),
    ("z + 1 (exact)", maps.HalfplaneAffine(1.0, 1.0), "pommerenke"),
    ("z + i + 1/(z+1)", maps.HalfplanePerturbed(1j, 1.0), "pommerenke"),
    ("z + 1 (exact)", maps.HalfplaneAffine(1.0, 1.0), "baker_pommerenke"),
    ("z + 1 + 1/(z+1)", maps.HalfplanePerturbed(1.0, 1.0), "baker_pommerenke"),
]

if __name__ == "__main__":
    for name, spec, kind in CASES:
        fn = (
            conjugation.pommerenke_normalized
            if kind == "pommerenke"
            else conjugation.baker_pommerenke_normalized
        )
        res = fn(spec, checkpoints=(100, 1_000, 10_000))
        print(f"--- {name} [{kind}]")
        print(conjugation.conjugation_report(res))
        print()
