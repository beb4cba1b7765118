#include "logsurf/stirling.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace logsurf {

namespace {

const double kPi = 3.14159265358979323846;
constexpr int kMaxBernoulli = 64;

using boost::multiprecision::cpp_int;

// B_0..B_64 by the defining recurrence sum_{j<=m} C(m+1,j) B_j = 0, done once
// in exact rational arithmetic.
struct BernoulliTable {
    std::vector<Rational> exact;
    std::vector<double> approx;

    BernoulliTable() {
        exact.resize(kMaxBernoulli + 1);
        exact[0] = 1;
        for (int m = 1; m <= kMaxBernoulli; ++m) {
            Rational acc = 0;
            cpp_int binom = 1;  // C(m+1, j) built incrementally
            for (int j = 0; j < m; ++j) {
                acc += Rational(binom) * exact[j];
                binom = binom * (m + 1 - j) / (j + 1);
            }
            // at j = m the binomial is C(m+1,m) = m+1
            exact[m] = -acc / (m + 1);
        }
        approx.reserve(exact.size());
        for (const auto& r : exact) approx.push_back(r.convert_to<double>());
    }
};

const BernoulliTable& table() {
    static const BernoulliTable t;
    return t;
}

// 24-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration.
struct GaussRule {
    std::array<double, 24> x{}, w{};
    GaussRule() {
        const int n = 24;
        for (int i = 0; i < n / 2; ++i) {
            double xi = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double p0 = 0, p1 = 0;
            for (int it = 0; it < 100; ++it) {
                p0 = 1.0;
                p1 = xi;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
                double step = p1 / dp;
                xi -= step;
                if (std::abs(step) < 1e-16) break;
            }
            p0 = 1.0;
            p1 = xi;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            x[i] = -xi;
            x[n - 1 - i] = xi;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
        }
    }
};

const GaussRule& gauss() {
    static const GaussRule g;
    return g;
}

// Generic integrand: t^p * weight(t) * e^{-zt} along the ray t = u e^{i theta}.
template <typename Kernel>
std::complex<double> ray_integral(std::complex<double> z, double theta, int p,
                                  Kernel kernel, double kernel_scale) {
    if (!(std::abs(theta) < kPi / 2.0))
        throw std::domain_error("ray_integral: direction must satisfy |theta| < pi/2");
    const std::complex<double> dir = std::polar(1.0, theta);
    const std::complex<double> zr = z * dir;
    const double a = zr.real();
    if (!(a > 0.0))
        throw std::domain_error("ray_integral: Re(z e^{i theta}) must be positive");

    // cutoff where the damped integrand magnitude is below 1e-18
    double T = std::max(1.0, 2.0 / a);
    while (std::pow(T, p) * kernel_scale * std::exp(-a * T) > 1e-18) {
        T *= 1.25;
        if (T > 1e7) break;
    }

    auto composite = [&](int panels) {
        const GaussRule& g = gauss();
        std::complex<double> acc(0.0, 0.0);
        const double h = T / panels;
        for (int pnl = 0; pnl < panels; ++pnl) {
            double mid = (pnl + 0.5) * h;
            std::complex<double> s(0.0, 0.0);
            for (int q = 0; q < 24; ++q) {
                double u = mid + 0.5 * h * g.x[q];
                std::complex<double> t = u * dir;
                s += g.w[q] * std::pow(u, p) * kernel(t) * std::exp(-zr * u);
            }
            acc += s * (0.5 * h);
        }
        // the ray substitution contributes dir^{p+1}
        std::complex<double> rot(1.0, 0.0);
        for (int q = 0; q <= p; ++q) rot *= dir;
        return acc * rot;
    };

    std::complex<double> prev = composite(4);
    for (int panels = 8; panels <= 1024; panels *= 2) {
        std::complex<double> cur = composite(panels);
        if (std::abs(cur - prev) < 1e-12 * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw std::runtime_error("ray_integral: panel refinement did not settle at 1e-12");
}

}  // namespace

const Rational& bernoulli_exact(int idx) {
    if (idx < 0 || idx > kMaxBernoulli)
        throw std::out_of_range("bernoulli_exact: index outside the table");
    return table().exact[idx];
}

double bernoulli(int idx) {
    if (idx < 0 || idx > kMaxBernoulli)
        throw std::out_of_range("bernoulli: index outside the table");
    return table().approx[idx];
}

Rational stirling_coeff_exact(int k) {
    if (k < 1 || 2 * k > kMaxBernoulli)
        throw std::out_of_range("stirling_coeff: index outside the table");
    return bernoulli_exact(2 * k) / (Rational(2 * k) * (2 * k - 1));
}

double stirling_coeff(int k) {
    // cached double mirrors; the exact rational division is far too slow to
    // repeat inside per-pixel evaluation loops
    static const std::vector<double> cache = [] {
        std::vector<double> v(kMaxBernoulli / 2 + 1, 0.0);
        for (int j = 1; 2 * j <= kMaxBernoulli; ++j)
            v[j] = stirling_coeff_exact(j).convert_to<double>();
        return v;
    }();
    if (k < 1 || 2 * k > kMaxBernoulli)
        throw std::out_of_range("stirling_coeff: index outside the table");
    return cache[static_cast<std::size_t>(k)];
}

AsymptoticResult phi_asymptotic(std::complex<double> z, int order) {
    const double az = std::abs(z);
    if (!(az > 0.0)) throw std::domain_error("phi_asymptotic: z must be nonzero");
    const int table_max = kMaxBernoulli / 2 - 1;  // keep c_{N+1} available for the bound
    int N = order < 0 ? int(std::floor(kPi * az)) : order;
    N = std::max(1, std::min(N, table_max));

    // sum c_k z^{1-2k} from the smallest term upward to help rounding
    const std::complex<double> inv2 = 1.0 / (z * z);
    std::complex<double> zpow = z;  // z^{1-2k} for the current k
    std::vector<std::complex<double>> terms;
    terms.reserve(N);
    for (int k = 1; k <= N; ++k) {
        zpow *= inv2;
        terms.push_back(stirling_coeff(k) * zpow);
    }
    std::complex<double> acc(0.0, 0.0);
    for (int k = N - 1; k >= 0; --k) acc += terms[k];

    AsymptoticResult out;
    out.value = acc;
    out.terms = N;
    double half_arg = std::arg(z) / 2.0;
    double c = std::cos(half_arg);
    if (c <= 1e-12) {  // on or numerically at the negative axis
        out.error_bound = std::numeric_limits<double>::infinity();
    } else {
        out.error_bound = std::abs(stirling_coeff(N + 1)) *
                          std::pow(az, -(2.0 * N + 1.0)) * std::pow(c, -(2.0 * N + 2.0));
    }
    return out;
}

std::complex<double> binet_kernel(std::complex<double> t) {
    if (std::abs(t) < 0.5) {
        // Taylor jet sum B_{2k} t^{2k-2}/(2k)!; 14 terms are spare at |t|=1/2
        std::complex<double> t2 = t * t, pw(1.0, 0.0), acc(0.0, 0.0);
        double fact = 2.0;  // (2k)! running value
        for (int k = 1; k <= 14; ++k) {
            if (k > 1) {
                fact *= (2.0 * k) * (2.0 * k - 1.0);
                pw *= t2;
            }
            acc += bernoulli(2 * k) / fact * pw;
        }
        return acc;
    }
    // e^{-t} form stays finite for large Re t on the admissible rays
    std::complex<double> emt = std::exp(-t);
    return (t * emt / (1.0 - emt) - 1.0 + 0.5 * t) / (t * t);
}

std::complex<double> binet_moment(std::complex<double> z, double theta, int p) {
    return ray_integral(z, theta, p, [](std::complex<double> t) { return binet_kernel(t); },
                        1.0);
}

std::complex<double> laplace_moment(std::complex<double> z, double theta, int p) {
    return ray_integral(z, theta, p,
                        [](std::complex<double>) { return std::complex<double>(1.0, 0.0); },
                        1.0);
}

std::complex<double> phi_binet(std::complex<double> z, double theta) {
    return binet_moment(z, theta, 0);
}

namespace {

// Pick the integration ray: theta = 0 is adequate well inside the right
// half-plane, but near the imaginary axis we tilt by pi/4 so that
// Re(z e^{i theta}) stays comparable to |z| and the integrand keeps at most
// one oscillation per e-fold of decay.
double best_direction(std::complex<double> z) {
    if (z.real() > 0.0 && std::abs(z.imag()) <= z.real()) return 0.0;
    return z.imag() > 0.0 ? -kPi / 4.0 : kPi / 4.0;
}

bool on_cut(std::complex<double> z) { return z.imag() == 0.0 && z.real() <= 0.0; }

}  // namespace

std::complex<double> phi(std::complex<double> z) {
    if (on_cut(z)) throw std::domain_error("phi: undefined on (-inf, 0]");
    if (z.real() >= 0.0) return phi_binet(z, best_direction(z));
    if (z.imag() < 0.0) {
        // phi(z) = -phi(-z) - log(1 - e^{-2 pi i z}), |e^{-2 pi i z}| < 1 here
        std::complex<double> q = std::exp(std::complex<double>(0.0, -2.0 * kPi) * z);
        return -phi(-z) - std::log(1.0 - q);
    }
    return std::conj(phi(std::conj(z)));
}

std::complex<double> phi_prime(std::complex<double> z) {
    if (on_cut(z)) throw std::domain_error("phi_prime: undefined on (-inf, 0]");
    if (z.real() >= 0.0) return -binet_moment(z, best_direction(z), 1);
    if (z.imag() < 0.0) {
        std::complex<double> q = std::exp(std::complex<double>(0.0, -2.0 * kPi) * z);
        return phi_prime(-z) -
               std::complex<double>(0.0, 2.0 * kPi) * q / (1.0 - q);
    }
    return std::conj(phi_prime(std::conj(z)));
}

std::complex<double> phi_second(std::complex<double> z) {
    if (!(z.real() > 0.0))
        throw std::domain_error("phi_second: implemented for Re z > 0 only");
    return binet_moment(z, 0.0, 2);
}

std::complex<double> phi2(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() >= 0.0)
        throw std::domain_error("phi2: undefined on [0, inf)");
    return -phi(-z);
}

bool odd_exponent_check(int k_max) {
    if (k_max < 1) throw std::invalid_argument("odd_exponent_check: k_max must be >= 1");
    for (int k = 1; k <= k_max; ++k) {
        long long e = 1 - 2ll * k;
        if (((e % 2) + 2) % 2 != 1) return false;  // exponent must be odd
        // i^{1-2k} is i^{e mod 4} with e mod 4 in {1, 3}: purely imaginary, so
        // c_k (i t)^{1-2k} has zero real part for real t and real c_k
        int r = int(((e % 4) + 4) % 4);
        if (r != 1 && r != 3) return false;
    }
    return true;
}

}  // namespace logsurf
