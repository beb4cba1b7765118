#ifndef LOGSURF_TESTS_ORACLES_HPP
#define LOGSURF_TESTS_ORACLES_HPP

// Independent reference computations used to pin expected values in the tests.
// Everything here deliberately avoids the library's own code paths: plain
// partial sums with Euler-Maclaurin corrections, libm lgamma, bisection.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace oracles {

// zeta(s) for real s > 1 by Euler-Maclaurin with a short head sum.
inline double zeta_em(double s, int head = 40) {
    double acc = 0.0;
    for (int n = 1; n < head; ++n) acc += std::pow(double(n), -s);
    double N = head;
    acc += std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s);
    // first Bernoulli corrections: B2/2! s N^{-s-1}, B4/4! s(s+1)(s+2) N^{-s-3}, ...
    double t1 = s * std::pow(N, -s - 1.0) / 12.0;
    double t2 = s * (s + 1.0) * (s + 2.0) * std::pow(N, -s - 3.0) / 720.0;
    double t3 = s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(N, -s - 5.0) / 30240.0;
    return acc + t1 - t2 + t3;
}

inline std::complex<double> zeta_em(std::complex<double> s, int head = 60) {
    std::complex<double> acc = 0.0;
    for (int n = 1; n < head; ++n)
        acc += std::exp(-s * std::log(double(n)));
    double N = head;
    auto npow = [&](std::complex<double> e) { return std::exp(e * std::log(N)); };
    acc += npow(1.0 - s) / (s - 1.0) + 0.5 * npow(-s);
    acc += s * npow(-s - 1.0) / 12.0;
    acc -= s * (s + 1.0) * (s + 2.0) * npow(-s - 3.0) / 720.0;
    acc += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * npow(-s - 5.0) / 30240.0;
    return acc;
}

// The abscissa s* with zeta(s*) = 2, by bisection on the Euler-Maclaurin sum.
inline double zeta_equals_two_abscissa() {
    double lo = 1.5, hi = 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (zeta_em(mid) > 2.0 ? lo : hi) = mid;  // zeta decreases in s
    }
    return 0.5 * (lo + hi);
}

// Gamma via the truncated Weierstrass product
//   exp(-gamma z) / z * prod_{n<=N} (1 + z/n)^{-1} e^{z/n},
// with the omitted factors restored through
//   sum_{n>N} (z/n - log(1 + z/n)) = sum_{j>=2} (-1)^j z^j / j * S_j(N),
// where S_j(N) = sum_{n>N} n^{-j} is evaluated by a midpoint integral with
// Euler-Maclaurin corrections.  Entirely independent of the library.
inline std::complex<double> gamma_weierstrass(std::complex<double> z) {
    const double kEuler = 0.57721566490153286061;
    const int N = 2000;
    const int jmax = 12;
    static const std::vector<double> S = [] {
        std::vector<double> v(jmax + 1, 0.0);
        const double a = N + 0.5;
        for (int j = 2; j <= jmax; ++j) {
            double val = std::pow(a, 1.0 - j) / (j - 1.0);
            val += j / 24.0 * std::pow(a, -j - 1.0);
            val -= 7.0 / 5760.0 * j * (j + 1.0) * (j + 2.0) * std::pow(a, -j - 3.0);
            v[j] = val;
        }
        return v;
    }();
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("gamma_weierstrass: pole");
    std::complex<double> logg = -kEuler * z - std::log(z);
    for (int n = 1; n <= N; ++n) {
        double inv = 1.0 / double(n);
        logg += z * inv - std::log(1.0 + z * inv);
    }
    std::complex<double> zp = z, tail = 0.0;
    for (int j = 2; j <= jmax; ++j) {
        zp *= z;
        double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        tail += sgn * zp / double(j) * S[j];
    }
    return std::exp(logg + tail);
}

// Zero of d/dx log Gamma on (0, inf), by bisection on central differences of
// libm's lgamma.  Good to ~1e-11 with the wide step balancing cancellation.
inline double gamma_minimum_abscissa() {
    const double h = 1e-5;
    auto dlg = [&](double x) {
        return (std::lgamma(x + h) - std::lgamma(x - h)) / (2.0 * h);
    };
    double lo = 1.0, hi = 2.0;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        (dlg(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracles

#endif
