"""Independent reference rates for isotropic stacks, frozen into the tests.

Run with: python3 tests/oracles/rate_oracle.py
"""
from mpmath import mp, mpf, mpc, pi, sqrt, exp, expm1, quad, inf

mp.dps = 30

mu0 = mpf("1.25663706212e-6")
eps0 = mpf("8.8541878128e-12")
h = mpf("6.62607015e-34")
hbar = h / (2 * pi)
kB = mpf("1.380649e-23")
c = mpf("299792458")
muB = mpf("9.2740100783e-24")
f = mpf("560e3")
w = 2 * pi * f
k = w / c
pref = mu0 * (muB * 2) ** 2 / (8 * hbar)


def kz(eps, K):
    s = sqrt(mpc(k * k * eps - K * K))
    return s if s.imag > 0 or (s.imag == 0 and s.real >= 0) else -s


def drude(sigma):
    return mpc(1, sigma / (eps0 * w))


def two_fluid(lam0, Tc, sn, alpha, T):
    t = mpf(T) / Tc
    lam = lam0 / sqrt(1 - t ** alpha)
    delta_sq = 2 / (w * mu0 * sn * t ** alpha)
    return 1 - 1 / (k * k * lam * lam) + 2j / (k * k * delta_sq)


def r_stack(K, eps_film, d, eps_sub):
    k1 = kz(1, K)
    k2 = kz(eps_film, K)
    k3 = kz(eps_sub, K)
    r12 = (k1 - k2) / (k1 + k2)
    r23 = (k2 - k3) / (k2 + k3)
    p = exp(2j * k2 * d)
    return (r12 + r23 * p) / (1 + r12 * r23 * p)


def gamma_field(eps_film, d, eps_sub, z):
    g = lambda K: K * K / (4 * pi * pi) * exp(-2 * K * z) / 2 * r_stack(K, eps_film, d, eps_sub).imag
    s = 1 / (2 * z)
    return pref * quad(g, [0, s / 10, s, 5 * s, 20 * s, 80 * s, inf])


def n_th(T):
    return 1 / expm1(h * f / (kB * mpf(T)))


cu = drude(mpf("5.8e7"))
z = mpf("1e-5")
g_cu = gamma_field(cu, 0, cu, z)
print("bare Cu gamma_field z=10um     ", mp.nstr(g_cu, 15))
print("bare Cu tau 4.2K z=10um        ", mp.nstr(1 / (g_cu * (n_th("4.2") + 1)), 15))
nb = two_fluid(mpf("35e-9"), mpf("8.3"), mpf("1e7"), 4, "4.2")
g_nb = gamma_field(nb, mpf("1e-6"), cu, z)
print("Nb 1um/Cu gamma_field z=10um   ", mp.nstr(g_nb, 15))
print("Nb 1um/Cu tau 4.2K z=10um      ", mp.nstr(1 / (g_nb * (n_th("4.2") + 1)), 15))
