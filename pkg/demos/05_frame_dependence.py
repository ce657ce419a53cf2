"""
Frame dependence of the q-deformed scattering corrections
=========================================================

Each internal line of a tree diagram acquires a correction factor built
from the energies flowing through it.  At q=1 every factor is 1 in every
frame; for q != 1 the factor changes under boosts -- an explicit breakdown
of Lorentz invariance that this script exhibits numerically.
"""
import numpy as np

from qfield import scattering as sc

m = 1.0
kin = sc.cm_elastic_kinematics(energy=2.0, theta=1.0, m=m)

# scan the photon-line factor over boosts along z
boosts = [sc.Boost([0.0, 0.0, b]) for b in (0.0, 0.25, 0.5, 0.75)]
print("photon-line correction factor F under boosts along z")
print("  beta_z     q=1         q=0.5")
rows1 = sc.frame_scan(kin, 1.0, boosts)
rowsh = sc.frame_scan(kin, 0.5, boosts)
for (b, f1, _), (_, fh, _) in zip(rows1, rowsh):
    print(f"  {b[2]:5.2f}  {f1:10.6f}  {fh:10.6f}")
print("q=1 is frame independent; q=0.5 drifts with the observer.")

# in the CM frame the elastic factor collapses to (1+q)/2 and the
# annihilation (electron-line) factors to (1-q)/2
q = 0.5
ann = sc.cm_annihilation_kinematics(2.0, 1.0, m)
f1, f2 = sc.annihilation_correction_pair(ann, q)
print(f"\nCM annihilation factors at q={q}: {f1:.6f}, {f2:.6f} "
      f"(expected {(1 - q) / 2:.6f})")

# the corrected electron-electron amplitude: exchange symmetric at q=1,
# asymmetric otherwise
spins = (1, 1, 1, 1)
for q in (1.0, 0.5):
    amp = sc.moller_amplitude(kin, spins, q)
    print(f"electron-electron amplitude q={q}: {amp:.6f}")

# spin-summed |M|^2 in two frames shows the same frame sensitivity
boosted = kin.boosted(sc.Boost([0.0, 0.0, 0.5]))
for q in (1.0, 0.5):
    cm = sc.moller_spin_summed(kin, q)
    lab = sc.moller_spin_summed(boosted, q)
    print(f"spin-summed |M|^2 q={q}: CM {cm:.6f}  boosted {lab:.6f}  "
          f"ratio {lab / cm:.6f}")
