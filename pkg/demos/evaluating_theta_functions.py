"""Evaluating theta functions with rational characteristics.

Shows the truncated lattice sum at work: values, truncation radii and
tail bounds, the characteristic shift laws, and the reflection
symmetries of the constants.
"""

from fractions import Fraction

import numpy as np

from thetarel import (
    Characteristic,
    PeriodMatrix,
    char_shift_phase,
    theta,
    theta_constant,
)

F = Fraction

tau = PeriodMatrix(np.array([[1j]]))
print("Genus 1, tau = i:")
for text in ["0;0", "1/3;0", "1/2;1/2", "-1/4;5/4"]:
    mu = Characteristic.parse(text)
    tv = theta_constant(mu, tau)
    print(f"  theta({text:>8s})(0)  = {tv.value:+.15f}   "
          f"R={tv.truncation_radius} tail<={tv.tail_bound:.1e}")
print("  (the (1/2;1/2) constant vanishes: the summands cancel in pairs)")
print()

print("Integer shifts of the characteristic:")
mu = Characteristic.parse("1/3;2/3")
z = 0.21 - 0.13j
base = theta(mu, z, tau).value
top_shift = theta(mu + Characteristic((1,), (0,)), z, tau).value
bottom_shift = theta(mu + Characteristic((0,), (1,)), z, tau).value
phase = char_shift_phase(mu, [1])
print(f"  theta(1/3;2/3)  = {base:+.12f}")
print(f"  theta(4/3;2/3)  = {top_shift:+.12f}   (top shift: same value)")
print(f"  theta(1/3;5/3)  = {bottom_shift:+.12f}")
print(f"  e[mu'.1]*theta  = {phase*base:+.12f}   (bottom shift: phase e[1/3])")
print()

print("Reflection symmetries of the constants (alpha = 1/5, beta = 2/7):")
a, b = F(1, 5), F(2, 7)


def const(top, bottom):
    return theta_constant(Characteristic((top,), (bottom,)), tau).value


print(f"  [1-a;0] - [a;0]        = {abs(const(1-a, 0) - const(a, 0)):.2e}")
print(f"  [0;1-b] - [0;b]        = {abs(const(0, 1-b) - const(0, b)):.2e}")
lhs = const(1 - a, b)
rhs = np.exp(-2j * np.pi * float(a)) * const(a, 1 - b)
print(f"  [1-a;b] - e(-a)[a;1-b] = {abs(lhs - rhs):.2e}")
print()

tau2 = PeriodMatrix(np.array([[0.1 + 1.2j, 0.05 + 0.15j],
                              [0.05 + 0.15j, -0.08 + 1.05j]]))
z2 = np.array([0.1 + 0.04j, -0.07 + 0.10j])
tv = theta(Characteristic.zero(2), z2, tau2)
print(f"Genus 2 value at a generic point: {tv.value:+.12f}")
print(f"  truncation radius {tv.truncation_radius}, tail bound {tv.tail_bound:.1e}")
