"""
Resonance poles and lifetimes
=============================

Locate the complex wavenumber poles k_n of the outgoing-wave (transfer
matrix) condition for both structures and print the resulting resonance
energies, widths, and lifetimes.  For the triple barrier the first two
poles form a doublet: the symmetric/antisymmetric pair of the coupled
wells.  Also verifies two structural facts about each pole: the defining
function really vanishes there, and the mirror point -k* is a pole of
the conjugate problem (time-reversal partner in the third quadrant).
"""

import numpy as np

from qshutter import build_profile, find_poles, pole_condition

double = build_profile([(5.0, 0.23), (5.0, 0.0), (5.0, 0.23)], mass_ratio=0.067)
triple = build_profile(
    [(3.0, 0.12), (16.0, 0.0), (3.0, 0.12), (16.0, 0.0), (3.0, 0.12)],
    mass_ratio=0.067,
)

for name, profile, n in (("double", double, 2), ("triple", triple, 4)):
    poles = find_poles(profile, n)
    print(f"{name} barrier, first {n} poles:")
    print("   n    E_n (meV)   Gamma_n (meV)   tau_n (ps)")
    for p in poles:
        print(
            f"  {p.index:2d}   {p.E_position * 1e3:9.4f}   "
            f"{p.Gamma * 1e3:11.5f}   {p.tau:9.4f}"
        )
        # residual of the pole condition at k_n and at its mirror -k_n*
        assert abs(pole_condition(profile, p.k)) < 1e-10
        assert abs(pole_condition(profile, -np.conj(p.k))) < 1e-8

    # only the triple barrier pairs its lowest levels into a doublet:
    # there the splitting is a handful of linewidths, against hundreds
    # for the unrelated first and second double-barrier resonances
    p1, p2 = poles[0], poles[1]
    split = (p2.E_position - p1.E_position) * 1e3
    print(f"  splitting E2 - E1 = {split:.3f} meV = {split / (p1.Gamma * 1e3):.1f} Gamma1")
    if name == "triple":
        print(f"  doublet center Ebar = {(p1.E_position + p2.E_position) * 5e2:.4f} meV")
    print()

# The lifetime is tied to the width by tau_n = hbar / Gamma_n, so the
# narrow first pole of the triple barrier lives an order of magnitude
# longer than the broad double-barrier resonance of similar energy scale.
