#include "logsurf/gammafn.hpp"

#include <cmath>
#include <stdexcept>

#include "logsurf/stirling.hpp"

namespace logsurf {

namespace {

const double kPi = 3.14159265358979323846;
const double kTwoPi = 6.28318530717958647692;
const double kSqrt2Pi = 2.50662827463100050242;
const double kHalfLog2Pi = 0.91893853320467274178;
const double kEulerGamma = 0.57721566490153286061;
const double kZMin = 8.0;  // minimum |z| before the Stirling form is trusted

bool is_nonpositive_integer(std::complex<double> z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool on_cut(std::complex<double> z) { return z.imag() == 0.0 && z.real() <= 0.0; }

// shift distance so the Stirling form is evaluated at z + m
int shift_amount(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() < 0.0) {
        // land on the positive real axis, not merely outside |z| < zMin
        return int(std::ceil(kZMin - z.real()));
    }
    int m = 0;
    while (std::abs(z + double(m)) < kZMin) ++m;
    return m;
}

std::complex<double> stirling_form(std::complex<double> w) {
    return (w - 0.5) * std::log(w) - w + phi(w);
}

// 1 - e^{2 pi i z} with the real part of z reduced mod 1 first, so integer
// real parts give exact zeros
std::complex<double> one_minus_cis(std::complex<double> z) {
    double xr = z.real() - std::round(z.real());
    double damp = std::exp(-kTwoPi * z.imag());
    return 1.0 - damp * std::complex<double>(std::cos(kTwoPi * xr),
                                             std::sin(kTwoPi * xr));
}

}  // namespace

std::complex<double> gamma(std::complex<double> z) {
    if (is_nonpositive_integer(z)) throw std::domain_error("gamma: pole");
    const int m = shift_amount(z);
    std::complex<double> val = kSqrt2Pi * std::exp(stirling_form(z + double(m)));
    if (m == 0) return val;
    std::complex<double> prod(1.0, 0.0);
    for (int j = 0; j < m; ++j) prod *= z + double(j);
    return val / prod;
}

double log_abs_gamma(std::complex<double> z) {
    if (is_nonpositive_integer(z)) throw std::domain_error("log_abs_gamma: pole");
    const int m = shift_amount(z);
    double acc = stirling_form(z + double(m)).real() + kHalfLog2Pi;
    for (int j = 0; j < m; ++j) acc -= std::log(std::abs(z + double(j)));
    return acc;
}

double find_x0() {
    static const double x0 = [] {
        double x = 1.5;
        for (int it = 0; it < 50; ++it) {
            double h = std::log(x) + (x - 0.5) / x - 1.0 +
                       phi_prime(std::complex<double>(x, 0.0)).real();
            double hp = 1.0 / x + 0.5 / (x * x) +
                        phi_second(std::complex<double>(x, 0.0)).real();
            double step = h / hp;
            x -= step;
            if (std::abs(step) < 1e-14) break;
        }
        double resid = std::log(x) + (x - 0.5) / x - 1.0 +
                       phi_prime(std::complex<double>(x, 0.0)).real();
        resid *= std::abs(gamma(std::complex<double>(x, 0.0)));
        if (!(std::abs(resid) < 1e-12))
            throw std::runtime_error("find_x0: residual above 1e-12");
        return x;
    }();
    return x0;
}

double phase(std::complex<double> z) {
    if (on_cut(z)) throw std::domain_error("phase: undefined on (-inf, 0]");
    return stirling_form(z).imag();
}

double phase_alt(std::complex<double> z) {
    // phi2 rejects [0, inf), which is exactly this function's excluded set
    return ((z - 0.5) * std::log(z) - z + phi2(z)).imag();
}

std::complex<double> g_tilde(std::complex<double> z) {
    if (on_cut(z)) throw std::domain_error("g_tilde: undefined on (-inf, 0]");
    return gamma(z) * one_minus_cis(z);
}

void RegionSpec::validate() const {
    if (!(R > 0.0)) throw std::invalid_argument("RegionSpec: R must be positive");
    if (!(alpha > 0.0 && alpha < kPi / 2.0))
        throw std::invalid_argument("RegionSpec: alpha must lie in (0, pi/2)");
}

bool in_sector_at_infinity(std::complex<double> z, const RegionSpec& spec) {
    spec.validate();
    return std::abs(z) > spec.R && std::abs(std::arg(z)) < spec.alpha;
}

std::optional<long long> classify_un(std::complex<double> z, const RegionSpec& spec) {
    if (!in_sector_at_infinity(z, spec)) return std::nullopt;
    if (!(z.real() > find_x0())) return std::nullopt;
    return (long long)std::floor(phase(z) / kTwoPi);
}

std::optional<long long> classify_un_tilde(std::complex<double> z,
                                           const RegionSpec& spec) {
    if (!in_sector_at_infinity(z, spec)) return std::nullopt;
    return (long long)std::floor(phase(z) / kTwoPi);
}

std::optional<long long> classify_vn(std::complex<double> z, const RegionSpec& spec) {
    if (!(z.imag() > 0.0))
        throw std::domain_error("classify_vn: requires Im z > 0");
    if (!in_sector_at_infinity(-z, spec)) return std::nullopt;
    return (long long)std::floor(phase_alt(z) / kTwoPi);
}

double dlog_dx(double x, double y, int terms) {
    if (terms < 1) throw std::invalid_argument("dlog_dx: terms must be >= 1");
    if (is_nonpositive_integer({x, y})) throw std::domain_error("dlog_dx: pole");
    double acc = -kEulerGamma - x / (x * x + y * y);
    for (int n = 1; n <= terms; ++n) {
        double d = double(n) + x;
        acc += 1.0 / double(n) - d / (d * d + y * y);
    }
    double t = double(terms) + 0.5;
    acc += 0.5 * std::log(((t + x) * (t + x) + y * y) / (t * t));
    return acc;
}

double dlog_dy(double x, double y, int terms) {
    if (terms < 1) throw std::invalid_argument("dlog_dy: terms must be >= 1");
    if (is_nonpositive_integer({x, y})) throw std::domain_error("dlog_dy: pole");
    if (y == 0.0) return 0.0;  // |Gamma| is even in y
    const double sign = y > 0.0 ? 1.0 : -1.0;
    const double ay = std::abs(y);
    double acc = -ay / (x * x + ay * ay);
    for (int n = 1; n <= terms; ++n) {
        double d = x + double(n);
        acc -= ay / (d * d + ay * ay);
    }
    acc -= kPi / 2.0 - std::atan((x + double(terms) + 0.5) / ay);
    return sign * acc;
}

double dmod_dx(double x, double y, int terms) {
    return std::abs(gamma({x, y})) * dlog_dx(x, y, terms);
}

double dmod_dy(double x, double y, int terms) {
    return std::abs(gamma({x, y})) * dlog_dy(x, y, terms);
}

double a_lower_bound(std::complex<double> z, double B) {
    const double x = z.real(), y = z.imag();
    if (y == 0.0) throw std::domain_error("a_lower_bound: requires Im z != 0");
    double arccot = std::atan2(1.0, x / y);  // valued in (0, pi)
    double main = (x - 0.5) * arccot + y * (std::log(std::hypot(x, y)) - 1.0);
    return std::abs(main) - B;
}

}  // namespace logsurf
