"""High-precision reference values built only from mpmath.

The pair Hamiltonian is exponentiated with mpmath.expm at 40 digits; no
code from the package is used.
"""

import mpmath as mp

mp.mp.dps = 40


def pair_h(N, gamma, fld, k):
    q = 2 * mp.pi * k / N
    eps = mp.mpf(fld) - mp.cos(q)
    s = mp.mpf(gamma) * mp.sin(q)
    return mp.matrix([[-2 * eps, 2j * s], [-2j * s, 2 * eps]])


def pair_overlap(N, gamma, lam, g, k, t):
    lam, g, t = mp.mpf(lam), mp.mpf(g), mp.mpf(t)
    h0 = pair_h(N, gamma, lam, k)
    E, Q = mp.eighe(h0)
    i0 = 0 if E[0] < E[1] else 1
    v = Q[:, i0]
    u1 = mp.expm(-1j * t * pair_h(N, gamma, lam + g, k))
    u2 = mp.expm(-1j * t * pair_h(N, gamma, lam - g, k))
    a = u1 * v
    b = u2 * v
    return (b.H * a)[0]


def decoherence(N, gamma, lam, g, t):
    out = mp.mpf(1)
    for k in range(1, (N - 1) // 2 + 1):
        out *= abs(pair_overlap(N, gamma, lam, g, k, t))
    return out
