"""
Interpolating statistics: basic numbers and the deformed Planck law
===================================================================

The deformation parameter q slides the oscillator between Fermi-Dirac
(q = -1), Maxwell-Boltzmann (q = 0) and Bose-Einstein (q = 1) behaviour.
This script prints the basic numbers <n>_q that replace the integers in
the ladder-operator matrix elements, then the equilibrium occupancy
1/(e^x - q) across the same family.
"""
import numpy as np

from qfield.qcore import basic_number, q_occupancy

# the basic numbers <n>_q = (q^n - 1)/(q - 1); at q=1 they are just n,
# at q=-1 they alternate 0,1,0,1,... (no double occupancy)
print("basic numbers <n>_q")
print("  n:", "  ".join(f"{n:7d}" for n in range(8)))
for q in (-1.0, 0.0, 0.5, 1.0, 1.2):
    row = "  ".join(f"{basic_number(q, n):7.3f}" for n in range(8))
    print(f"q={q:+.1f}:", row)

# the occupancy interpolates the three classical statistics continuously
print("\noccupancy 1/(e^x - q) at x = E/kT")
xs = np.linspace(0.5, 3.0, 6)
print("  x:", "  ".join(f"{x:7.2f}" for x in xs))
for q, name in ((-1.0, "Fermi"), (0.0, "Boltzmann"), (1.0, "Bose"),
                (0.5, "q=0.5")):
    row = "  ".join(f"{q_occupancy(x, q):7.4f}" for x in xs)
    print(f"{name:>10}:", row)

# sanity: the q=0 column is exactly e^-x
x = 1.7
assert abs(q_occupancy(x, 0.0) - np.exp(-x)) < 1e-14
print("\nq=0 reproduces the Boltzmann factor exactly.")
