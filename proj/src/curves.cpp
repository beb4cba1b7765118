#include "logsurf/curves.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "logsurf/gammafn.hpp"
#include "logsurf/stirling.hpp"

namespace logsurf {
namespace {

constexpr double kPi = 3.14159265358979323846;

// A scalar field on the upper half-plane together with its analytic d/dy.
// Every field used here is strictly monotone in y on its tracing domain,
// which is what makes the endpoint sign test in the bracketing helpers
// conclusive.
struct Field {
    std::function<double(double, double)> value;
    std::function<double(double, double)> slope;
};

// A solved ordinate together with the defect value - target there.
struct Root {
    double y = 0.0;
    double g = 0.0;
};

[[noreturn]] void fail_at(const char* what, double x) {
    std::ostringstream msg;
    msg << what << " at x = " << x;
    throw std::runtime_error(msg.str());
}

// Evenly spaced abscissas covering [x0, x1] with spacing at most `step`.
std::vector<double> make_grid(double x0, double x1, double step) {
    const double span = x1 - x0;
    const int n = std::max(1, static_cast<int>(std::ceil(span / step - 1e-9)));
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) xs.push_back(x0 + span * k / n);
    xs.push_back(x1);
    return xs;
}

Root bisect(const Field& fld, double x, double target, double lo, double hi,
            double glo, double tol) {
    double mid = 0.5 * (lo + hi);
    double gmid = glo;
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        gmid = fld.value(x, mid) - target;
        if (std::abs(gmid) <= tol ||
            (hi - lo) < 4e-16 * std::max(1.0, std::abs(mid))) {
            return {mid, gmid};
        }
        if ((gmid > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gmid;
        } else {
            hi = mid;
        }
    }
    return {mid, gmid};
}

// Newton from `seed`, constrained to (yLo, yHi); on a stall, recover a
// sign-change bracket around the best iterate and bisect. Monotonicity in y
// means a missing sign change over the whole band proves the level absent.
Root solve_level(const Field& fld, double x, double target, double seed,
                 double yLo, double yHi, const TraceConfig& cfg, double tol,
                 const char* what) {
    double y = std::min(std::max(seed, yLo), yHi);
    for (int it = 0; it < cfg.maxNewton; ++it) {
        const double g = fld.value(x, y) - target;
        if (std::abs(g) <= tol) return {y, g};
        const double d = fld.slope(x, y);
        if (d == 0.0 || !std::isfinite(d)) break;
        const double next = y - g / d;
        if (!(next > yLo && next < yHi)) break;
        if (std::abs(next - y) < 1e-17 * std::max(1.0, std::abs(y))) break;
        y = next;
    }
    double w = cfg.yBracket;
    for (int round = 0; round < 80; ++round) {
        const double lo = std::max(yLo, y - w);
        const double hi = std::min(yHi, y + w);
        const double glo = fld.value(x, lo) - target;
        if (std::abs(glo) <= tol) return {lo, glo};
        const double ghi = fld.value(x, hi) - target;
        if (std::abs(ghi) <= tol) return {hi, ghi};
        if ((glo > 0.0) != (ghi > 0.0))
            return bisect(fld, x, target, lo, hi, glo, tol);
        if (lo <= yLo && hi >= yHi) break;
        w *= 1.7;
    }
    fail_at(what, x);
}

// First sample of a mod-level trace: |Gamma(x+iy)| decreases from Gamma(x)
// to 0 as y grows, so expand upward from the axis until the target is
// straddled.
Root first_mod_sample(const Field& fld, double x, double target,
                      const TraceConfig& cfg, double tol) {
    const double yFloor = 1e-9;
    double lo = yFloor;
    double glo = fld.value(x, lo) - target;
    if (std::abs(glo) <= tol) return {lo, glo};
    if (glo < 0.0) fail_at("mod level exceeds |Gamma| on the real axis", x);
    double hi = std::max(cfg.yBracket, 1e-3);
    for (int round = 0; round < 200 && hi <= 1e6; ++round) {
        const double ghi = fld.value(x, hi) - target;
        if (std::abs(ghi) <= tol) return {hi, ghi};
        if (ghi < 0.0) return bisect(fld, x, target, lo, hi, glo, tol);
        lo = hi;
        glo = ghi;
        hi *= 1.6;
    }
    fail_at("mod level not attained", x);
}

// First sample of a phase trace: test the band edges (the phase is
// increasing in y) and bisect inside.
Root first_band_sample(const Field& fld, double x, double target, double yLo,
                       double yHi, double tol, const char* what) {
    const double glo = fld.value(x, yLo) - target;
    if (std::abs(glo) <= tol) return {yLo, glo};
    const double ghi = fld.value(x, yHi) - target;
    if (std::abs(ghi) <= tol) return {yHi, ghi};
    if ((glo > 0.0) == (ghi > 0.0)) fail_at(what, x);
    return bisect(fld, x, target, yLo, yHi, glo, tol);
}

double predict(const LevelCurve& curve, double x) {
    const std::size_t n = curve.samples.size();
    const CurveSample& b = curve.samples[n - 1];
    if (n < 2) return b.y;
    const CurveSample& a = curve.samples[n - 2];
    return b.y + (b.y - a.y) / (b.x - a.x) * (x - b.x);
}

Field phase_field() {
    Field fld;
    fld.value = [](double x, double y) {
        return phase(std::complex<double>(x, y));
    };
    fld.slope = [](double x, double y) {
        const std::complex<double> z(x, y);
        return (std::log(z) + (z - 0.5) / z - 1.0 + phi_prime(z)).real();
    };
    return fld;
}

Field companion_field() {
    Field fld;
    fld.value = [](double x, double y) {
        return phase_alt(std::complex<double>(x, y));
    };
    fld.slope = [](double x, double y) {
        const std::complex<double> z(x, y);
        return (std::log(z) + (z - 0.5) / z - 1.0 + phi_prime(-z)).real();
    };
    return fld;
}

LevelCurve trace_band(const Field& fld, CurveKind kind, double theta,
                      Quadrant quadrant, const Window& window,
                      const TraceConfig& cfg) {
    LevelCurve curve;
    curve.kind = kind;
    curve.value = theta;
    curve.quadrant = quadrant;
    const std::vector<double> xs = make_grid(window.x0, window.x1, cfg.xStep);
    curve.samples.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        Root root;
        if (i == 0) {
            root = first_band_sample(fld, x, theta, window.yLo, window.yHi,
                                     cfg.newtonTol,
                                     "phase level not attained inside the window");
        } else {
            root = solve_level(fld, x, theta, predict(curve, x), window.yLo,
                               window.yHi, cfg, cfg.newtonTol,
                               "phase level curve exits the window");
        }
        curve.samples.push_back({x, root.y, std::abs(root.g)});
    }
    return curve;
}

}  // namespace

void TraceConfig::validate() const {
    if (!(xStep > 0.0) || !(newtonTol > 0.0) || maxNewton <= 0 ||
        !(yBracket > 0.0)) {
        throw std::invalid_argument("TraceConfig: all fields must be positive");
    }
}

void Window::validate() const {
    if (!(x0 < x1) || !(yLo < yHi))
        throw std::invalid_argument("Window: require x0 < x1 and yLo < yHi");
}

LevelCurve trace_mod_level(double r, double x0, double x1,
                           const TraceConfig& cfg) {
    cfg.validate();
    if (!(r > 0.0))
        throw std::invalid_argument("trace_mod_level: r must be positive");
    if (!(x0 > find_x0())) {
        throw std::invalid_argument(
            "trace_mod_level: x0 must exceed the positive root of Gamma'");
    }
    if (!(x1 > x0))
        throw std::invalid_argument("trace_mod_level: require x1 > x0");

    Field fld;
    fld.value = [](double x, double y) {
        return log_abs_gamma(std::complex<double>(x, y));
    };
    fld.slope = [](double x, double y) { return dlog_dy(x, y, 200); };

    // Newton runs on log|Gamma| - log r; the tolerance is scaled so the
    // reported residual ||Gamma| - r| still lands below newtonTol.
    const double target = std::log(r);
    const double tol = cfg.newtonTol / std::max(1.0, r);

    LevelCurve curve;
    curve.kind = CurveKind::ModLevel;
    curve.value = r;
    curve.quadrant = Quadrant::UpperRight;
    const std::vector<double> xs = make_grid(x0, x1, cfg.xStep);
    curve.samples.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const Root root =
            (i == 0) ? first_mod_sample(fld, x, target, cfg, tol)
                     : solve_level(fld, x, target, predict(curve, x), 1e-9,
                                   1e7, cfg, tol,
                                   "mod level curve exits the window");
        curve.samples.push_back({x, root.y, r * std::abs(std::expm1(root.g))});
    }
    return curve;
}

LevelCurve trace_arg_level(double theta, Quadrant quadrant,
                           const Window& window, const TraceConfig& cfg) {
    cfg.validate();
    window.validate();
    if (quadrant == Quadrant::UpperRight) {
        if (!(window.x0 > find_x0())) {
            throw std::invalid_argument(
                "trace_arg_level: upper-right window must start beyond the "
                "positive root of Gamma'");
        }
        if (window.yLo < 0.0) {
            throw std::invalid_argument(
                "trace_arg_level: upper-right window requires y >= 0");
        }
        if (!(theta > 0.0)) {
            throw std::invalid_argument(
                "trace_arg_level: upper-right levels must be positive");
        }
    } else if (window.yLo < 2.0) {
        throw std::invalid_argument(
            "trace_arg_level: upper-left window requires y >= 2");
    }
    return trace_band(phase_field(), CurveKind::ArgLevel, theta, quadrant,
                      window, cfg);
}

LevelCurve trace_companion_arg(double theta, const Window& window,
                               const TraceConfig& cfg) {
    cfg.validate();
    window.validate();
    if (window.yLo < 2.0) {
        throw std::invalid_argument(
            "trace_companion_arg: window must lie in Im z >= 2");
    }
    const Quadrant quadrant =
        window.x1 <= 0.0 ? Quadrant::UpperLeft : Quadrant::UpperRight;
    return trace_band(companion_field(), CurveKind::CompanionArg, theta,
                      quadrant, window, cfg);
}

double phase_slope_bound(double x) {
    const double fx = std::floor(x);
    if (fx < 3.0) return 0.0;
    const double t = std::log(fx) - 1.0;
    return 2.0 * t * t;
}

std::vector<DerivativeSample> curve_A_derivative(const LevelCurve& curve) {
    if (curve.kind != CurveKind::ModLevel) {
        throw std::invalid_argument(
            "curve_A_derivative: requires a ModLevel curve");
    }
    std::vector<DerivativeSample> out;
    if (curve.samples.size() < 2) return out;
    std::vector<double> A(curve.samples.size());
    for (std::size_t i = 0; i < curve.samples.size(); ++i) {
        A[i] = phase(
            std::complex<double>(curve.samples[i].x, curve.samples[i].y));
    }
    out.reserve(curve.samples.size() - 1);
    for (std::size_t i = 0; i + 1 < curve.samples.size(); ++i) {
        const double dx = curve.samples[i + 1].x - curve.samples[i].x;
        out.push_back({curve.samples[i].x, (A[i + 1] - A[i]) / dx,
                       phase_slope_bound(curve.samples[i].x)});
    }
    return out;
}

SandwichReport sandwich_check(double theta, const Window& window,
                              const TraceConfig& cfg) {
    window.validate();
    if (window.yLo < 2.0) {
        throw std::invalid_argument(
            "sandwich_check: window must lie in Im z >= 2");
    }
    SandwichReport report;
    report.curve = trace_companion_arg(theta, window, cfg);
    report.halfWidth = 2.0 * std::exp(-4.0 * kPi);
    for (const CurveSample& s : report.curve.samples) {
        const double dev =
            std::abs(phase(std::complex<double>(s.x, s.y)) - theta);
        report.maxDeviation = std::max(report.maxDeviation, dev);
        if (dev > report.halfWidth)
            report.violations.push_back({s.x, s.y, dev});
    }
    report.pass = report.violations.empty();
    return report;
}

void write_csv(const LevelCurve& curve, std::ostream& os) {
    const std::streamsize oldPrec = os.precision(17);
    os << "x,y,residual,A,absGamma\n";
    for (const CurveSample& s : curve.samples) {
        const std::complex<double> z(s.x, s.y);
        os << s.x << ',' << s.y << ',' << s.residual << ',' << phase(z) << ','
           << std::exp(log_abs_gamma(z)) << '\n';
    }
    os.precision(oldPrec);
}

}  // namespace logsurf
