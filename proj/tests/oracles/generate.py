"""Independent high-precision reference values for the unit tests.

Every value is computed from the defining series or integrals with mpmath
at 50 digits, never from the library. Run:

    python3 tests/oracles/generate.py > tests/unit/oracle_values.hpp
"""

import mpmath as mp

mp.mp.dps = 50


def qnum(z, q):
    return (1 - q ** z) / (1 - q)


def F_plus(nu, t, z, q):
    s, n = mp.mpf(0), 0
    while True:
        w = n + z
        term = q ** (-nu * w) * mp.exp(-t * q ** (-w) * qnum(w, q))
        s += term
        if n > 20 and abs(term) < mp.mpf(10) ** -60 * abs(s):
            return t ** nu * s
        n += 1


def F_minus(nu, t, z, q):
    return t ** nu * mp.nsum(lambda n: q ** (nu * (n - z)) * mp.exp(t * qnum(n - z, q)), [1, mp.inf])


def G_q(nu, t, z, q):
    return -((1 - q) ** nu / mp.log(q)) * mp.factorial(nu - 1) * mp.exp(t / (1 - q)) - F_minus(nu, t, z, q)


def btilde(nu, n, z, q):
    # n-th derivative of G_q in t at 0 times (-1)^n
    return (-1) ** n * mp.diff(lambda t: G_q(nu, t, z, q), 0, n)


def b_norm(nu, m, z, q):
    # closed form evaluated in 50-digit arithmetic
    L = mp.log(q)
    acc = mp.mpf(0)
    for l in range(1, m + 1):
        k = l + nu - 1
        acc += (-1) ** l * mp.binomial(m, l) * l * q ** (-z * k) / (1 - q ** (-k))
    acc += 1 / (mp.binomial(m + nu - 1, nu - 1) * L)
    return (q - 1) ** (1 - m) * acc


def zeta_direct(nu, s, z, q):
    return mp.nsum(lambda n: q ** ((n + z) * (s - nu)) / qnum(n + z, q) ** s, [0, mp.inf])


def zeta_binomial(nu, s, z, q):
    return (1 - q) ** s * mp.nsum(
        lambda l: mp.binomial(s + l - 1, l) * q ** (z * (s - nu + l)) / (1 - q ** (s - nu + l)),
        [0, mp.inf])


def phi_series(nu, m, s, a, q):
    delta = 2j * mp.pi / mp.log(q)
    alpha = s - nu - m * delta
    x = a / (1 - q)
    return a ** alpha * mp.nsum(lambda k: x ** k / (mp.factorial(k) * (alpha + k)), [0, mp.inf])


def log_Z(s, t, q):
    return mp.nsum(lambda n: q ** (n * t) * (1 - q ** n) ** (-s) / n, [1, mp.inf])


def emit(name, v):
    v = mp.mpc(v)
    print(f"inline const Complex {name}{{{mp.nstr(v.real, 20)}, {mp.nstr(v.imag, 20)}}};")


print("#pragma once")
print("// Generated by tests/oracles/generate.py; do not edit.")
print('#include "qhz/qcore.hpp"')
print("namespace oracle {")
print("using qhz::Complex;")
q5 = mp.mpf("0.5")
emit("kLogGamma_3p5_m2i", mp.loggamma(mp.mpc(3.5, -2)))
emit("kLogGamma_m2p5_p0p5i", mp.loggamma(mp.mpc(-2.5, 0.5)))
emit("kLogGamma_0p1_p30i", mp.loggamma(mp.mpc(0.1, 30)))
emit("kHurwitz_2p5_1p3", mp.zeta(2.5, 1.3))
emit("kHurwitz_m1p5p2i_0p7", mp.zeta(mp.mpc(-1.5, 2), 0.7))
emit("kFplus_1_1_1_q05", F_plus(1, 1, 1, q5))
emit("kFplus_2_0p7_0p3_q03", F_plus(2, mp.mpf("0.7"), mp.mpf("0.3"), mp.mpf("0.3")))
emit("kFplus_1_c_c_q05", F_plus(1, mp.mpc(1, 0.3), mp.mpc(1, 0.1), q5))
emit("kFminus_1_1_1_q05", F_minus(1, 1, 1, q5))
emit("kFminus_3_m2_0p4_q07", F_minus(3, -2, mp.mpf("0.4"), mp.mpf("0.7")))
emit("kGq_2_0p5_1p3_q05", G_q(2, mp.mpf("0.5"), mp.mpf("1.3"), q5))
emit("kBtilde_2_5_1p3_q05", btilde(2, 5, mp.mpf("1.3"), q5))
emit("kB_3_8_1p7_q09", b_norm(3, 8, mp.mpf("1.7"), mp.mpf("0.9")))
emit("kB_1_6_1_q0999", b_norm(1, 6, 1, 1 - mp.mpf(2) ** -10))
emit("kZeta_1_4_1_q05", zeta_direct(1, 4, 1, q5))
emit("kZeta_2_3p5_1p5_q08", zeta_direct(2, mp.mpf("3.5"), mp.mpf("1.5"), mp.mpf("0.8")))
emit("kZetaBin_2_1p5_1_q05", zeta_binomial(2, mp.mpf("1.5"), 1, q5))
emit("kZetaBin_2_m0p5_1_q05", zeta_binomial(2, mp.mpf("-0.5"), 1, q5))
emit("kZetaBin_1_c_c_q06", zeta_binomial(1, mp.mpc(0.5, 3), mp.mpc(0.7, 0.2), mp.mpf("0.6")))
emit("kPhi_2_1_0p5_q05", phi_series(2, 1, mp.mpf("0.5"), 1, q5))
emit("kPhi_1_m2_m1p3_q03", phi_series(1, -2, mp.mpf("-1.3"), mp.mpf("0.8"), mp.mpf("0.3")))
emit("kLogZ_1_1_q05", log_Z(1, 1, q5))
emit("kLogZ_2p5_c_q08", log_Z(mp.mpf("2.5"), mp.mpc(1, 0.5), mp.mpf("0.8")))
print("}  // namespace oracle")
