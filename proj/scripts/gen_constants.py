#!/usr/bin/env python3
"""Generate the 50-digit constants table embedded in src/zeta_numeric.cpp.

Every constant is computed here by Euler-Maclaurin summation (pi by Machin's
formula) using only mpmath's arbitrary-precision arithmetic, then cross-checked
against mpmath's own implementations. Run and paste the emitted block whenever
the table changes.
"""

from mpmath import mp, mpf, log, atan, zeta as mp_zeta, euler as mp_euler, pi as mp_pi

mp.dps = 90

N = 40  # Euler-Maclaurin cutoff
K = 60  # number of Bernoulli correction terms


def bernoulli_numbers(count):
    # B_0..B_count via the recurrence sum_{k<=n} C(n+1,k) B_k = 0, B_1 = -1/2.
    from fractions import Fraction
    from math import comb

    b = [Fraction(1)]
    for n in range(1, count + 1):
        s = Fraction(0)
        for k in range(n):
            s += comb(n + 1, k) * b[k]
        b.append(-s / (n + 1))
    return b


BN = bernoulli_numbers(2 * K + 2)


def em_zeta(s):
    # zeta(s) = sum_{n<N} n^-s + N^-s/2 + N^{1-s}/(s-1)
    #           + sum_k B_{2k}/(2k)! * (s)(s+1)...(s+2k-2) * N^{-s-2k+1}
    total = mpf(0)
    for n in range(1, N):
        total += mpf(n) ** (-s)
    total += mpf(N) ** (-s) / 2
    total += mpf(N) ** (1 - s) / (s - 1)
    rising = mpf(1)  # (s)(s+1)...(s+2k-2), updated incrementally
    fact = mpf(1)    # (2k)!
    for k in range(1, K + 1):
        rising *= (s + 2 * k - 3) * (s + 2 * k - 2) if k > 1 else s
        fact *= (2 * k - 1) * (2 * k)
        b2k = mpf(BN[2 * k].numerator) / mpf(BN[2 * k].denominator)
        total += b2k / fact * rising * mpf(N) ** (-s - 2 * k + 1)
    return total


def em_gamma():
    # gamma = H_N - log N - 1/(2N) + sum_k B_{2k} / (2k N^{2k})
    h = mpf(0)
    for i in range(1, N + 1):
        h += mpf(1) / i
    total = h - log(mpf(N)) - mpf(1) / (2 * N)
    for k in range(1, K + 1):
        b2k = mpf(BN[2 * k].numerator) / mpf(BN[2 * k].denominator)
        total += b2k / (2 * k * mpf(N) ** (2 * k))
    return total


def machin_pi():
    return 16 * atan(mpf(1) / 5) - 4 * atan(mpf(1) / 239)


def fmt(x):
    return mp.nstr(x, 51, strip_zeros=False)


def check(name, ours, reference):
    err = abs(ours - reference)
    assert err < mpf(10) ** (-70), f"{name}: {err}"


values = {"gamma": em_gamma(), "pi": machin_pi()}
check("gamma", values["gamma"], mp_euler)
check("pi", values["pi"], mp_pi)
for k in (3, 5, 7, 9):
    values[f"zeta{k}"] = em_zeta(k)
    check(f"zeta{k}", values[f"zeta{k}"], mp_zeta(k))

for name, v in values.items():
    print(f'{{"{name}", "{fmt(v)}"}},')
