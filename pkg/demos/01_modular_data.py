"""
Modular data basics: S, T, fusion, central charge
=================================================

Build a small data set, check the axioms, and read off the quantities
every other part of the toolkit is built on.
"""

import numpy as np

from mdkit import central_charge, gauss_sum, preset, verlinde_fusion

# The Ising data set: three objects 1, psi, sigma with quantum
# dimensions 1, 1, sqrt(2).
md = preset("ising")
print("labels:", md.labels)
print("dims:  ", np.round(md.dims, 6))

# validate() runs the whole axiom battery (unitarity, symmetry,
# normalization, root-of-unity twists, the (ST)^3 relation, ...).
report = md.validation()
for check in report.checks:
    print(f"  {check.name:20s} residual {check.residual:.3g}")
print("all pass:", report.ok)

# Fusion rules come out of the Verlinde formula.  The coefficients are
# checked to be nonnegative integers and associative before you see
# them; sigma x sigma = 1 + psi is the famous one.
ring = verlinde_fusion(md)
for i, la in enumerate(md.labels):
    for j, lb in enumerate(md.labels):
        parts = [f"{ring.N[i, j, k]}*{lc}" if ring.N[i, j, k] > 1 else lc
                 for k, lc in enumerate(md.labels) if ring.N[i, j, k]]
        print(f"  {la} x {lb} = {' + '.join(parts)}")

# The Gauss sum's phase is the central charge mod 8: for Ising, 1/2.
print("gauss sum:     ", np.round(gauss_sum(md), 6))
print("central charge:", central_charge(md))
