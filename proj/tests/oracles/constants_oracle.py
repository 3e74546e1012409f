"""High-precision reference values frozen into the unit and acceptance tests.

Run with: python3 tests/oracles/constants_oracle.py
"""
from mpmath import mp, mpf, pi, sqrt, exp, expm1

mp.dps = 40

mu0 = mpf("1.25663706212e-6")
eps0 = mpf("8.8541878128e-12")
h = mpf("6.62607015e-34")
hbar = h / (2 * pi)
kB = mpf("1.380649e-23")
c = mpf("299792458")
muB = mpf("9.2740100783e-24")
gS = mpf(2)

f = mpf("560e3")
omega = 2 * pi * f

print("rate_prefactor      ", mp.nstr(mu0 * (muB * gS) ** 2 / (8 * hbar), 20))
print("n_th(560kHz, 4.2K)  ", mp.nstr(1 / expm1(h * f / (kB * mpf("4.2"))), 20))
print("n_th(560kHz, 77K)   ", mp.nstr(1 / expm1(h * f / (kB * mpf("77"))), 20))
print("skin_depth(Cu)      ", mp.nstr(sqrt(2 / (omega * mu0 * mpf("5.8e7"))), 20))
print("eps_im(Cu)          ", mp.nstr(mpf("5.8e7") / (eps0 * omega), 20))
print("lambda ratio a=4 T/2", mp.nstr((1 - mpf(1) / 16) ** mpf("-0.5"), 20))
print("lambda ratio a=4 .75", mp.nstr((1 - mpf("0.31640625")) ** mpf("-0.5"), 20))
print("c^2 mu0 eps0 - 1    ", mp.nstr(c * c * mu0 * eps0 - 1, 5))
# moment integrals int_0^inf eta^n e^{-2 eta z} = n!/(2z)^{n+1}
for z in ["1e-6", "1e-5", "1e-4"]:
    zz = mpf(z)
    print("moments z=", z, [mp.nstr(mp.factorial(n) / (2 * zz) ** (n + 1), 20) for n in (0, 2, 3)])
