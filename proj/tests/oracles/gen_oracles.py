#!/usr/bin/env python3
"""Regenerates tests/oracle_values.hpp.

Every value is computed here with mpmath at high working precision, by a
route that does not share code with the C++ library:

  * Euler's constant: harmonic sum H_n - log n with Euler-Maclaurin tail.
  * Ei0: term-by-term power series at 80 digits (exact cancellation).
  * E1, log Gamma, Riemann-Siegel theta, zeta, zeta zeros: mpmath's own
    arbitrary-precision implementations.

Run:  python3 tests/oracles/gen_oracles.py > tests/oracle_values.hpp
"""

import mpmath as mp

mp.mp.dps = 80


def euler_gamma_em(n=1000):
    # H_n - log n - 1/(2n) + sum B_2k / (2k n^2k)
    h = mp.fsum(mp.mpf(1) / k for k in range(1, n + 1))
    s = h - mp.log(n) - mp.mpf(1) / (2 * n)
    for k in range(1, 20):
        s += mp.bernoulli(2 * k) / (2 * k * mp.mpf(n) ** (2 * k))
    return s


def ei0_series(z):
    z = mp.mpc(z)
    term = mp.mpc(1)
    total = mp.mpc(0)
    k = 1
    while True:
        term *= z / k
        add = term / k
        total += add
        if k > abs(z) and abs(add) < mp.mpf(10) ** (-40) * max(1, abs(total)):
            break
        k += 1
    return total


def c(v):
    v = mp.mpc(v)
    return "{%s, %s}" % (mp.nstr(v.real, 20, strip_zeros=False),
                         mp.nstr(v.imag, 20, strip_zeros=False))


def r(v):
    return mp.nstr(mp.mpf(v), 20, strip_zeros=False)


def main():
    out = []
    out.append("#pragma once")
    out.append("// Generated by tests/oracles/gen_oracles.py; do not edit.")
    out.append("#include <array>")
    out.append("#include <complex>")
    out.append("namespace oracle {")
    out.append("using C = std::complex<double>;")
    out.append("struct CPair { C arg; C value; };")
    out.append("struct RPair { double arg; double value; };")

    g = euler_gamma_em()
    out.append("inline constexpr double kEulerGamma = %s;" % r(g))
    out.append("inline constexpr double kEulerGammaMinusOne = %s;" % r(g - 1))

    # Ei0 / E1 on a polar grid up to |z| = 100.
    pts = []
    for rad in [0.5, 1, 3, 5, 10, 20, 29, 31, 39, 45, 60, 80, 100]:
        for deg in [0, 30, 60, 90, 120, 135, 150, 165, 175, 180, -45, -100, -170]:
            pts.append(mp.mpf(rad) * mp.expjpi(mp.mpf(deg) / 180))
    ei0_vals = [(p, ei0_series(p)) for p in pts]
    out.append("inline const std::array<CPair, %d> kEi0 = {{" % len(ei0_vals))
    out += ["  {%s, %s}," % (c(p), c(v)) for p, v in ei0_vals]
    out.append("}};")

    e1_pts = [p for p in pts if not (abs(mp.im(p)) < 1e-30 and mp.re(p) < 0)]
    out.append("inline const std::array<CPair, %d> kE1 = {{" % len(e1_pts))
    out += ["  {%s, %s}," % (c(p), c(mp.e1(p))) for p in e1_pts]
    out.append("}};")

    out.append("inline constexpr double kEi0One = %s;" % r(ei0_series(1).real))
    out.append("inline constexpr double kEi0MinusOne = %s;" % r(ei0_series(-1).real))
    out.append("inline constexpr double kEiOne = %s;" % r(g + ei0_series(1).real))
    out.append("inline constexpr double kSoldner = %s;" %
               r(mp.findroot(lambda x: mp.li(x), 1.45)))
    out.append("inline constexpr double kThetaBigAtE = %s;" %
               r(-(mp.e - 1) + ei0_series(1).real))

    lg_pts = [mp.mpc(0.5, 0), mp.mpc(1, 0), mp.mpc(5, 0), mp.mpc(0.75, 3),
              mp.mpc(1, 2.5), mp.mpc(2.3, -7), mp.mpc(0.5, 50), mp.mpc(7.5, 100),
              mp.mpc(50, 1), mp.mpc(0.6, -99), mp.mpc(0.25, 500)]
    out.append("inline const std::array<CPair, %d> kLogGamma = {{" % len(lg_pts))
    out += ["  {%s, %s}," % (c(p), c(mp.loggamma(p))) for p in lg_pts]
    out.append("}};")

    th_pts = [0.5, 1, 2, 5, 7, 10, 14.134725, 17.8455995, 50, 100, 250, 1000, 2000, 5000]
    out.append("inline const std::array<RPair, %d> kTheta = {{" % len(th_pts))
    out += ["  {%s, %s}," % (r(t), r(mp.siegeltheta(t))) for t in th_pts]
    out.append("}};")

    z_pts = [mp.mpc(2, 0), mp.mpc(3, 0), mp.mpc(0.5, 0), mp.mpc(1.5, 10),
             mp.mpc(0.5, 14), mp.mpc(0.5, 5), mp.mpc(0.7, 3), mp.mpc(0.3, -3),
             mp.mpc(1.5, 3), mp.mpc(0.5, 49.5), mp.mpc(0.1, 20), mp.mpc(1.01, 0),
             mp.mpc(0.5, 100), mp.mpc(0.5, 500.25), mp.mpc(0.5, 1000.5),
             mp.mpc(0.5, 2000.125), mp.mpc(0.9, 4999)]
    out.append("inline const std::array<CPair, %d> kZeta = {{" % len(z_pts))
    out += ["  {%s, %s}," % (c(p), c(mp.zeta(p))) for p in z_pts]
    out.append("}};")
    out.append("inline constexpr double kZetaPrime2 = %s;" % r(mp.zeta(2, derivative=1)))
    out.append("inline const C kZetaPrimeComplex = %s;  // zeta'(1.5+2i)" %
               c(mp.zeta(mp.mpc(1.5, 2), derivative=1)))

    zeros = [mp.im(mp.zetazero(n)) for n in range(1, 30)]
    out.append("inline const std::array<double, %d> kZetaZeros = {" % len(zeros))
    out += ["  %s," % r(t) for t in zeros]
    out.append("};")
    out.append("inline constexpr int kZerosBelow1000 = %d;" % int(mp.nzeros(1000)))
    out.append("inline constexpr int kZerosBelow2000 = %d;" % int(mp.nzeros(2000)))

    # Chebyshev function and prime sums for small x: direct definition.
    out.append("inline constexpr double kPsi10 = %s;" %
               r(3 * mp.log(2) + 2 * mp.log(3) + mp.log(5) + mp.log(7)))
    out.append("inline constexpr double kPsi2At10 = %s;" %
               r(mp.log(2) * (mp.mpf(1) / 4 + mp.mpf(1) / 16 + mp.mpf(1) / 64) +
                 mp.log(3) * (mp.mpf(1) / 9 + mp.mpf(1) / 81) + mp.log(5) / 25 +
                 mp.log(7) / 49))

    out.append("}  // namespace oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()
