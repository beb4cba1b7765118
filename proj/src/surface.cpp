#include "logsurf/surface.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace logsurf {

LogPoint::LogPoint(double m, double a) : mod(m), arg(a) {
    if (!(m >= 0.0))
        throw std::invalid_argument("LogPoint: modulus must be nonnegative");
    if (m == 0.0) arg = 0.0;  // the origin carries no argument
}

std::complex<double> project(const LogPoint& z) {
    return std::polar(z.mod, z.arg);  // polar(0, 0) == 0
}

LogPoint lift_principal(std::complex<double> w) {
    if (w.imag() == 0.0 && w.real() <= 0.0)
        throw std::domain_error("lift_principal: no principal preimage on (-inf, 0]");
    return LogPoint(std::abs(w), std::arg(w));
}

std::complex<double> chart_log(const LogPoint& z) {
    if (z.mod <= 0.0)
        throw std::domain_error("chart_log: undefined at the origin");
    return {-std::log(z.mod), z.arg};
}

LogPoint chart_exp(std::complex<double> w) {
    return LogPoint(std::exp(-w.real()), w.imag());
}

LogPoint surface_mul(const LogPoint& a, const LogPoint& b) {
    if (a.mod == 0.0 || b.mod == 0.0) return LogPoint(0.0, 0.0);
    return LogPoint(a.mod * b.mod, a.arg + b.arg);
}

LogPoint power(const LogVector& z, const std::vector<double>& k) {
    if (z.empty() || z.size() != k.size())
        throw std::invalid_argument("power: dimension mismatch");
    double mod = 1.0, arg = 0.0;
    bool zero = false;
    for (size_t i = 0; i < z.size(); ++i) {
        if (k[i] < 0.0)
            throw std::invalid_argument("power: weights must be nonnegative");
        if (z[i].mod == 0.0) {
            if (k[i] == 0.0)
                throw std::domain_error("power: 0^0 component is undefined");
            zero = true;  // a positive weight on the origin annihilates the product
            continue;
        }
        mod *= std::pow(z[i].mod, k[i]);
        arg += k[i] * z[i].arg;
    }
    if (zero) return LogPoint(0.0, 0.0);
    return LogPoint(mod, arg);
}

LogVector rotate_scale(const LogVector& z, const std::vector<std::complex<double>>& w) {
    if (z.size() != w.size())
        throw std::invalid_argument("rotate_scale: dimension mismatch");
    LogVector out;
    out.reserve(z.size());
    for (size_t j = 0; j < z.size(); ++j)
        out.push_back(LogPoint(z[j].mod * std::exp(-w[j].imag()), z[j].arg + w[j].real()));
    return out;
}

void SectorSpec::validate() const {
    if (weights.empty())
        throw std::invalid_argument("SectorSpec: weight set must be nonempty");
    for (const auto& k : weights) {
        if (k.size() != radius.size())
            throw std::invalid_argument("SectorSpec: weight/radius dimension mismatch");
        for (double ki : k)
            if (ki < 0.0) throw std::invalid_argument("SectorSpec: weights must be >= 0");
    }
    for (double Ri : radius)
        if (!(Ri > 0.0)) throw std::invalid_argument("SectorSpec: radius must be positive");
    if (!(aperture > 0.0 && aperture < 3.14159265358979323846))
        throw std::invalid_argument("SectorSpec: aperture must lie in (0, pi)");
    if (!(series_weight > 1.0))
        throw std::invalid_argument("SectorSpec: series weight must exceed 1");
}

namespace {

// k . |arg z| with the componentwise absolute value of the argument vector.
double weighted_abs_arg(const LogVector& z, const std::vector<double>& k) {
    double s = 0.0;
    for (size_t i = 0; i < z.size(); ++i) s += k[i] * std::abs(z[i].arg);
    return s;
}

// log of R^k = prod R_i^{k_i}; compared on the log scale to dodge over/underflow.
double log_radius_power(const std::vector<double>& R, const std::vector<double>& k) {
    double s = 0.0;
    for (size_t i = 0; i < R.size(); ++i) s += k[i] * std::log(R[i]);
    return s;
}

double log_modulus_power(const LogVector& z, const std::vector<double>& k) {
    double s = 0.0;
    for (size_t i = 0; i < z.size(); ++i) {
        if (z[i].mod == 0.0) return k[i] > 0.0 ? -std::numeric_limits<double>::infinity() : s;
        s += k[i] * std::log(z[i].mod);
    }
    return s;
}

}  // namespace

SectorClass classify_sector(const LogVector& z, const SectorSpec& spec) {
    spec.validate();
    if (z.size() != spec.radius.size())
        throw std::invalid_argument("classify_sector: dimension mismatch");

    for (size_t i = 0; i < z.size(); ++i)
        if (!(z[i].mod < spec.radius[i])) return SectorClass::Outside;

    bool in_s = true;
    for (const auto& k : spec.weights)
        if (!(weighted_abs_arg(z, k) < spec.aperture)) { in_s = false; break; }
    if (in_s) return SectorClass::InS;

    const double log_shrink = std::log(double(spec.disk_index) + 1.0);
    bool in_d = true;
    for (const auto& k : spec.weights) {
        // |z^k| < R^k/(p+1), checked as log|z^k| < log R^k - log(p+1)
        if (!(log_modulus_power(z, k) < log_radius_power(spec.radius, k) - log_shrink)) {
            in_d = false;
            break;
        }
    }
    return in_d ? SectorClass::InDp : SectorClass::Outside;
}

bool in_enlarged_sector(const LogVector& z, const SectorSpec& spec) {
    return classify_sector(z, spec) != SectorClass::Outside;
}

bool in_classic_sector(const LogVector& z, const ClassicSectorSpec& spec) {
    if (z.size() != spec.radius.size())
        throw std::invalid_argument("in_classic_sector: dimension mismatch");
    for (size_t i = 0; i < z.size(); ++i) {
        if (!(z[i].mod < spec.radius[i])) return false;
        if (!(std::abs(z[i].arg) < spec.aperture)) return false;
    }
    return true;
}

DerivedSpecs derive_inner_specs(const SectorSpec& tau, double mu, double nu,
                                const std::vector<double>& rho) {
    tau.validate();
    const double pi = 3.14159265358979323846;
    if (!(tau.aperture > pi / 2.0))
        throw std::invalid_argument("derive_inner_specs: aperture must exceed pi/2");

    double M = 0.0;
    for (const auto& k : tau.weights) {
        double s = 0.0;
        for (double ki : k) s += ki;
        M = std::max(M, s);
    }
    if (!(M > 0.0))
        throw std::invalid_argument("derive_inner_specs: weight set must contain k != 0");

    if (!(0.0 < mu && mu < nu && nu < (tau.aperture - pi / 2.0) / M))
        throw std::invalid_argument("derive_inner_specs: need 0 < mu < nu < (phi - pi/2)/M");
    if (rho.size() != tau.radius.size())
        throw std::invalid_argument("derive_inner_specs: rho dimension mismatch");
    for (size_t i = 0; i < rho.size(); ++i)
        if (!(rho[i] > 0.0 && rho[i] < tau.radius[i]))
            throw std::invalid_argument("derive_inner_specs: need 0 < rho < R");

    DerivedSpecs d;
    d.M = M;
    d.mu = mu;
    d.nu = nu;
    d.delta = tau.aperture - M * mu;
    d.epsilon = tau.aperture - M * nu;
    // pi/2 < epsilon < delta < phi follows from the parameter constraints
    std::vector<double> shrunk(tau.radius);
    for (double& Ri : shrunk) Ri /= std::exp(nu);

    d.sigma = tau;
    d.sigma.radius = shrunk;
    d.sigma.aperture = d.epsilon;

    d.tau_prime = tau;
    d.tau_prime.radius = rho;
    d.tau_prime.aperture = mu;

    d.tau_double_prime = tau;
    d.tau_double_prime.radius = shrunk;
    d.tau_double_prime.aperture = mu;
    return d;
}

}  // namespace logsurf
