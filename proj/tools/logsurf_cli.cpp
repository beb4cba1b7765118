// Command-line front end for the logsurf library.
//
// Subcommands:
//   eval      evaluate a generalized power series from its JSON form
//   zeta      zeta through the generalized-series chart (or the
//             Euler-Maclaurin/reflection engine with --extended)
//   gamma     Gamma, its entire companion g, log|Gamma|, the phase A
//   phi       the Stirling remainder, its derivatives, series data
//   trace     level curves of |Gamma|, A, and the companion phase, as CSV
//   render    domain-colored PPM images with optional region overlays
//   classify  sector-at-infinity and strip membership for one point
//   verify    randomized invariant suites; nonzero exit on any violation
//   probe     axis-crossing counts and phase-growth tables
//
// Exit codes: 0 success, 1 numerical failure or violated invariant,
// 2 usage error.  Complex arguments are written like 2+3i or 1.5e-2-4i;
// values print with 10 significant digits unless --digits says otherwise.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "logsurf/curves.hpp"
#include "logsurf/gammafn.hpp"
#include "logsurf/render.hpp"
#include "logsurf/series.hpp"
#include "logsurf/stirling.hpp"
#include "logsurf/surface.hpp"

namespace {

using namespace logsurf;
using cdouble = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// Thrown by post-parse argument validation; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Argument parsing helpers
// ---------------------------------------------------------------------------

double parse_real(const std::string& text, const char* what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
    }
}

// Accepts a+bi, a-bi, bi, a, i, -i, with scientific notation in either part.
cdouble parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw UsageError("empty complex literal");

    auto part = [&raw](const std::string& t, const char* what) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        try {
            std::size_t pos = 0;
            double v = std::stod(t, &pos);
            if (pos != t.size()) throw std::invalid_argument(t);
            return v;
        } catch (const std::exception&) {
            throw UsageError(std::string("cannot parse the ") + what +
                             " part of complex literal '" + raw + "'");
        }
    };

    char last = s.back();
    if (last == 'i' || last == 'I') {
        std::string body = s.substr(0, s.size() - 1);
        // Split at the last sign that is not an exponent sign and not leading.
        std::size_t split = std::string::npos;
        for (std::size_t k = body.size(); k-- > 1;) {
            char c = body[k];
            if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        if (split == std::string::npos) return {0.0, part(body, "imaginary")};
        return {part(body.substr(0, split), "real"),
                part(body.substr(split), "imaginary")};
    }
    return {part(s, "real"), 0.0};
}

std::vector<double> parse_reals(const std::string& text, std::size_t count,
                                const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_real(item, what));
    if (count != 0 && out.size() != count)
        throw UsageError(std::string(what) + " needs " + std::to_string(count) +
                         " comma-separated numbers, got '" + text + "'");
    return out;
}

// A surface point written either as "mod,arg" or as {"mod":..,"arg":..}.
LogPoint parse_logpoint(const std::string& text) {
    std::size_t k = text.find_first_not_of(" \t");
    if (k != std::string::npos && text[k] == '{') {
        try {
            return logpoint_from_json(text);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad surface point '") + text +
                             "': " + e.what());
        }
    }
    std::vector<double> mp = parse_reals(text, 2, "surface point");
    if (mp[0] < 0.0)
        throw UsageError("surface point modulus must be >= 0 in '" + text + "'");
    return LogPoint(mp[0], mp[1]);
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

// --series accepts inline JSON (first character '{') or a file path.
MixedSeries load_series(const std::string& arg) {
    std::size_t k = arg.find_first_not_of(" \t\r\n");
    std::string text =
        (k != std::string::npos && arg[k] == '{') ? arg : slurp_file(arg);
    try {
        MixedSeries f = series_from_json(text);
        f.validate();
        return f;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad series JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

std::string fmt_real(double v, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

std::string fmt_complex(cdouble z, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << z.real()
       << (std::signbit(z.imag()) ? " - " : " + ") << std::setprecision(digits)
       << std::abs(z.imag()) << "i";
    return os.str();
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalOpts {
    std::string series;
    std::vector<std::string> xs;
    std::vector<std::string> ys;
    std::vector<double> normR;
    std::vector<double> normS;
    bool unitRadius = false;
    int digits = 10;
};

int run_eval(const EvalOpts& o) {
    MixedSeries f = load_series(o.series);
    bool did = false;

    if (!o.xs.empty()) {
        if (static_cast<int>(o.xs.size()) != f.m)
            throw UsageError("series has " + std::to_string(f.m) +
                             " surface variable(s); give that many --x");
        if (static_cast<int>(o.ys.size()) != f.n)
            throw UsageError("series has " + std::to_string(f.n) +
                             " ordinary variable(s); give that many --y");
        LogVector x;
        for (const auto& s : o.xs) x.push_back(parse_logpoint(s));
        std::vector<cdouble> y;
        for (const auto& s : o.ys) y.push_back(parse_complex(s));
        EvalResult r = evaluate(f, x, y);
        std::cout << "f(x, y) = " << fmt_complex(r.value, o.digits) << "\n";
        if (r.tail_bound)
            std::cout << "omitted tail <= " << fmt_real(*r.tail_bound, o.digits)
                      << "\n";
        did = true;
    }

    if (!o.normR.empty() || !o.normS.empty()) {
        if (static_cast<int>(o.normR.size()) != f.m)
            throw UsageError("--norm-r needs " + std::to_string(f.m) + " value(s)");
        if (static_cast<int>(o.normS.size()) != f.n)
            throw UsageError("--norm-s needs " + std::to_string(f.n) + " value(s)");
        std::cout << "majorant norm = "
                  << fmt_real(majorant_norm(f, o.normR, o.normS), o.digits) << "\n";
        did = true;
    }

    if (o.unitRadius) {
        std::cout << "unit-norm radius = " << fmt_real(unit_norm_radius(f), o.digits)
                  << "\n";
        did = true;
    }

    if (!did)
        throw UsageError("nothing to do: give --x (with --y as needed), "
                         "--norm-r/--norm-s, or --unit-radius");
    return 0;
}

// ---------------------------------------------------------------------------
// zeta
// ---------------------------------------------------------------------------

struct ZetaOpts {
    std::string z;
    double tol = 1e-7;
    bool extended = false;
    bool verbose = false;
    int digits = 10;
};

int run_zeta(const ZetaOpts& o) {
    cdouble w = parse_complex(o.z);
    if (o.extended) {
        std::cout << "zeta(" << fmt_complex(w, o.digits)
                  << ") = " << fmt_complex(zeta_extended(w), o.digits) << "\n";
        return 0;
    }
    ZetaEvalResult r = zeta_eval(w, o.tol);
    std::cout << "zeta(" << fmt_complex(w, o.digits)
              << ") = " << fmt_complex(r.value, o.digits) << "\n";
    if (o.verbose)
        std::cout << "terms used = " << r.terms_used
                  << ", certified tail <= " << fmt_real(r.tail_bound, o.digits)
                  << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// gamma
// ---------------------------------------------------------------------------

struct GammaOpts {
    std::string z;
    bool fast = false;
    bool companion = false;
    bool logAbs = false;
    bool phase = false;
    bool x0 = false;
    int digits = 10;
};

int run_gamma(const GammaOpts& o) {
    if (o.x0) {
        std::cout << "x0 = " << fmt_real(find_x0(), o.digits) << "\n";
        if (o.z.empty()) return 0;
    }
    if (o.z.empty()) throw UsageError("gamma needs --z (or --x0)");
    if (o.fast + o.companion + o.logAbs > 1)
        throw UsageError("--fast, --companion and --log-abs are exclusive");

    cdouble z = parse_complex(o.z);
    std::string zs = fmt_complex(z, o.digits);
    if (o.companion) {
        std::cout << "g(" << zs << ") = " << fmt_complex(g_tilde(z), o.digits)
                  << "\n";
    } else if (o.logAbs) {
        std::cout << "log|Gamma(" << zs
                  << ")| = " << fmt_real(log_abs_gamma(z), o.digits) << "\n";
    } else {
        cdouble v = o.fast ? gamma_fast(z) : gamma(z);
        std::cout << "Gamma(" << zs << ") = " << fmt_complex(v, o.digits) << "\n";
    }
    if (o.phase)
        std::cout << "A(" << zs << ") = " << fmt_real(phase(z), o.digits) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// phi
// ---------------------------------------------------------------------------

struct PhiOpts {
    std::string z;
    bool prime = false;
    bool second = false;
    bool companion = false;
    bool asymptotic = false;
    int order = -1;
    std::optional<double> direction;
    int coeff = 0;
    int digits = 10;
};

int run_phi(const PhiOpts& o) {
    if (o.coeff > 0) {
        std::cout << "c_" << o.coeff << " = " << stirling_coeff_exact(o.coeff)
                  << " = " << fmt_real(stirling_coeff(o.coeff), o.digits) << "\n";
        if (o.z.empty()) return 0;
    }
    if (o.z.empty()) throw UsageError("phi needs --z (or --coeff)");
    int modes = int(o.prime) + int(o.second) + int(o.companion) +
                int(o.asymptotic) + int(o.direction.has_value());
    if (modes > 1)
        throw UsageError("pick at most one of --prime, --second, --companion, "
                         "--asymptotic, --direction");

    cdouble z = parse_complex(o.z);
    std::string zs = fmt_complex(z, o.digits);
    if (o.prime) {
        std::cout << "phi'(" << zs << ") = " << fmt_complex(phi_prime(z), o.digits)
                  << "\n";
    } else if (o.second) {
        std::cout << "phi''(" << zs << ") = "
                  << fmt_complex(phi_second(z), o.digits) << "\n";
    } else if (o.companion) {
        std::cout << "-phi(-z) at z = " << zs << ": "
                  << fmt_complex(phi2(z), o.digits) << "\n";
    } else if (o.direction) {
        std::cout << "phi(" << zs << ") [ray " << fmt_real(*o.direction, o.digits)
                  << "] = " << fmt_complex(phi_binet(z, *o.direction), o.digits)
                  << "\n";
    } else if (o.asymptotic) {
        AsymptoticResult r = phi_asymptotic(z, o.order);
        std::cout << "phi~(" << zs << ") = " << fmt_complex(r.value, o.digits)
                  << "\n"
                  << "terms = " << r.terms
                  << ", error bound = " << fmt_real(r.error_bound, o.digits)
                  << "\n";
    } else {
        std::cout << "phi(" << zs << ") = " << fmt_complex(phi(z), o.digits)
                  << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// trace
// ---------------------------------------------------------------------------

struct TraceOpts {
    std::string kind;
    std::optional<double> value;
    std::string through;
    double x0 = 0.0, x1 = 0.0;
    std::optional<double> ylo, yhi;
    std::string quadrant = "upper-right";
    double step = 0.05;
    double tol = 1e-10;
    std::string out;
    bool slopeCheck = false;
    int digits = 10;
};

int run_trace(const TraceOpts& o) {
    TraceConfig cfg;
    cfg.xStep = o.step;
    cfg.newtonTol = o.tol;

    double level = 0.0;
    std::string levelNote;
    if (o.value && !o.through.empty())
        throw UsageError("give either --value or --through, not both");
    if (!o.value && o.through.empty())
        throw UsageError("trace needs a level: --value or --through");
    if (o.value) {
        level = *o.value;
    } else {
        cdouble seed = parse_complex(o.through);
        if (o.kind == "mod") {
            level = std::abs(gamma(seed));
            levelNote = " = |Gamma(" + fmt_complex(seed, o.digits) + ")|";
        } else if (o.kind == "companion") {
            level = phase_alt(seed);
            levelNote = " = A_g(" + fmt_complex(seed, o.digits) + ")";
        } else {
            level = phase(seed);
            levelNote = " = A(" + fmt_complex(seed, o.digits) + ")";
        }
    }

    LevelCurve curve;
    if (o.kind == "mod") {
        curve = trace_mod_level(level, o.x0, o.x1, cfg);
    } else {
        if (!o.ylo || !o.yhi)
            throw UsageError("arg/companion traces need --ylo and --yhi");
        Window w{o.x0, o.x1, *o.ylo, *o.yhi};
        if (o.kind == "arg") {
            Quadrant q = (o.quadrant == "upper-left" || o.quadrant == "ul")
                             ? Quadrant::UpperLeft
                             : Quadrant::UpperRight;
            curve = trace_arg_level(level, q, w, cfg);
        } else {
            curve = trace_companion_arg(level, w, cfg);
        }
    }

    double maxResidual = 0.0;
    for (const auto& s : curve.samples)
        maxResidual = std::max(maxResidual, s.residual);

    bool toStdout = o.out.empty();
    std::ostream& summary = toStdout ? std::cerr : std::cout;
    if (toStdout) {
        write_csv(curve, std::cout);
    } else {
        std::ofstream out(o.out);
        if (!out) throw std::runtime_error("cannot open '" + o.out + "' for writing");
        write_csv(curve, out);
        if (!out) throw std::runtime_error("failed while writing '" + o.out + "'");
    }
    summary << o.kind << " trace at level " << fmt_real(level, o.digits)
            << levelNote << ": " << curve.samples.size() << " samples, x in ["
            << fmt_real(curve.samples.front().x, o.digits) << ", "
            << fmt_real(curve.samples.back().x, o.digits) << "], y in ["
            << fmt_real(curve.samples.front().y, o.digits) << ", "
            << fmt_real(curve.samples.back().y, o.digits)
            << "], max residual = " << fmt_real(maxResidual, 3) << "\n";
    if (!o.out.empty()) summary << "wrote " << o.out << "\n";

    if (o.slopeCheck) {
        if (o.kind != "mod")
            throw UsageError("--slope-check applies to --kind mod only");
        auto ds = curve_A_derivative(curve);
        long long bad = 0;
        double worst = std::numeric_limits<double>::infinity();
        for (const auto& d : ds) {
            worst = std::min(worst, d.derivative - d.bound);
            if (d.derivative < d.bound) ++bad;
        }
        summary << "phase slope check: " << ds.size() << " intervals, min margin "
                << fmt_real(worst, 3) << ", " << bad << " below the floor\n";
        if (bad > 0) return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// render
// ---------------------------------------------------------------------------

struct RenderOpts {
    std::string fn;
    double xmin = -6.0, xmax = 6.0, ymin = -6.0, ymax = 6.0;
    int width = 512, height = 512;
    std::string style = "gradient";
    std::vector<double> levels;
    std::vector<std::string> sectors;  // "R,alpha" -> white overlay
    std::vector<std::string> strips;   // "n,R,alpha" -> black overlay
    double opacity = 0.45;
    std::string out;
};

std::function<cdouble(cdouble)> pick_function(const std::string& name) {
    if (name == "gamma") return [](cdouble z) { return gamma(z); };
    if (name == "gamma-fast") return [](cdouble z) { return gamma_fast(z); };
    if (name == "gtilde") return [](cdouble z) { return g_tilde(z); };
    if (name == "zeta") return [](cdouble z) { return zeta_extended(z); };
    if (name == "zeta-eval")
        return [](cdouble z) { return zeta_eval(z, 1e-3).value; };
    if (name == "phi") return [](cdouble z) { return phi(z); };
    return [](cdouble z) { return z; };  // identity
}

int run_render(const RenderOpts& o) {
    RenderSpec spec;
    spec.xmin = o.xmin;
    spec.xmax = o.xmax;
    spec.ymin = o.ymin;
    spec.ymax = o.ymax;
    spec.width = o.width;
    spec.height = o.height;
    spec.style = (o.style == "contour") ? RenderStyle::ContourLines
                                        : RenderStyle::GradientShade;
    spec.contourLevels = o.levels;

    for (const auto& s : o.sectors) {
        std::vector<double> ra = parse_reals(s, 2, "--sector");
        RegionSpec rs;
        rs.R = ra[0];
        rs.alpha = ra[1];
        rs.validate();
        Overlay ov;
        ov.predicate = [rs](cdouble z) { return in_sector_at_infinity(z, rs); };
        ov.shade = Rgb{255, 255, 255};
        ov.opacity = o.opacity;
        spec.overlays.push_back(ov);
    }
    for (const auto& s : o.strips) {
        std::vector<double> nra = parse_reals(s, 3, "--strip");
        long long n = static_cast<long long>(std::llround(nra[0]));
        RegionSpec rs;
        rs.R = nra[1];
        rs.alpha = nra[2];
        rs.validate();
        Overlay ov;
        ov.predicate = [rs, n](cdouble z) {
            auto k = classify_un_tilde(z, rs);
            return k.has_value() && *k == n;
        };
        ov.shade = Rgb{0, 0, 0};
        ov.opacity = o.opacity;
        spec.overlays.push_back(ov);
    }
    spec.validate();

    auto t0 = std::chrono::steady_clock::now();
    ImageBuffer img = domain_color(pick_function(o.fn), spec);
    auto t1 = std::chrono::steady_clock::now();
    write_image(img, o.out);
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::cout << o.fn << " (" << o.style << "): " << o.width << " x " << o.height
              << " in " << std::fixed << std::setprecision(2) << secs << " s -> "
              << o.out << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

struct ClassifyOpts {
    std::string z;
    double R = 1.0;
    double alpha = 1.0;
    int digits = 10;
};

int run_classify(const ClassifyOpts& o) {
    cdouble z = parse_complex(o.z);
    RegionSpec rs;
    rs.R = o.R;
    rs.alpha = o.alpha;
    rs.validate();

    std::cout << "z = " << fmt_complex(z, o.digits) << ", |z| = "
              << fmt_real(std::abs(z), o.digits)
              << ", arg z = " << fmt_real(std::arg(z), o.digits) << "\n";
    std::cout << "x0 = " << fmt_real(find_x0(), o.digits) << "\n";
    try {
        std::cout << "A(z) = " << fmt_real(phase(z), o.digits) << "\n";
    } catch (const std::exception&) {
        std::cout << "A(z): undefined on the cut (-inf, 0]\n";
    }
    std::cout << "S^inf(R=" << fmt_real(o.R, o.digits)
              << ", alpha=" << fmt_real(o.alpha, o.digits)
              << "): " << (in_sector_at_infinity(z, rs) ? "inside" : "outside")
              << "\n";

    auto report = [](const char* name, std::optional<long long> k) {
        std::cout << name << ": ";
        if (k)
            std::cout << "n = " << *k << "\n";
        else
            std::cout << "outside\n";
    };
    report("U_n", classify_un(z, rs));
    report("U~_n", classify_un_tilde(z, rs));
    try {
        report("V_n", classify_vn(z, rs));
    } catch (const std::domain_error&) {
        std::cout << "V_n: undefined (needs Im z > 0)\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct SuiteResult {
    std::string name;
    long long instances = 0;
    long long failures = 0;
    std::vector<std::string> notes;
};

void print_suite(const SuiteResult& r) {
    std::cout << "suite " << r.name << ": " << r.instances << " instances, "
              << r.failures << " failures\n";
    std::size_t shown = 0;
    for (const auto& n : r.notes) {
        if (++shown > 5) {
            std::cout << "  ... (" << r.notes.size() - 5 << " more)\n";
            break;
        }
        std::cout << "  " << n << "\n";
    }
}

// Sector stability: points of the enlarged inner sector, twisted by any w
// with |w_j| < nu, stay inside the enlarged outer sector.
SuiteResult verify_sectors(long long samples, std::uint64_t seed) {
    SuiteResult res{"sectors", 0, 0, {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const int families = 10;
    const long long per = std::max<long long>(1, samples / families);

    for (int fam = 0; fam < families; ++fam) {
        const std::size_t m = 1 + static_cast<std::size_t>(rng() % 3);
        SectorSpec tau;
        const int nk = 1 + static_cast<int>(rng() % 2);
        for (int k = 0; k < nk; ++k) {
            std::vector<double> w(m);
            for (auto& wi : w) wi = 2.0 * u01(rng);
            w[rng() % m] = 0.2 + 1.8 * u01(rng);
            tau.weights.push_back(std::move(w));
        }
        tau.radius.resize(m);
        for (auto& R : tau.radius) R = 0.5 + 2.0 * u01(rng);
        tau.aperture = kPi / 2 + 0.3 + (kPi - kPi / 2 - 0.4) * u01(rng);
        tau.series_weight = 1.5 + 1.5 * u01(rng);
        tau.disk_index = 1 + static_cast<unsigned>(rng() % 4);
        tau.validate();

        double M = 0.0;
        for (const auto& w : tau.weights) {
            double s = 0.0;
            for (double wi : w) s += wi;
            M = std::max(M, s);
        }
        const double cap = (tau.aperture - kPi / 2) / M;
        const double mu = cap * (0.15 + 0.25 * u01(rng));
        const double nu = cap * (0.55 + 0.35 * u01(rng));
        std::vector<double> rho(m);
        for (std::size_t i = 0; i < m; ++i)
            rho[i] = tau.radius[i] * (0.2 + 0.5 * u01(rng));
        DerivedSpecs d = derive_inner_specs(tau, mu, nu, rho);

        long long accepted = 0, guard = 0;
        while (accepted < per && guard < 400 * per) {
            ++guard;
            LogVector z;
            const bool aimDisk = u01(rng) < 0.5;
            for (std::size_t i = 0; i < m; ++i) {
                const double R = d.sigma.radius[i];
                if (aimDisk) {
                    z.push_back(LogPoint(R * 0.2 * u01(rng), 30.0 * (u01(rng) - 0.5)));
                } else {
                    const double a = d.epsilon / (static_cast<double>(m) * 2.5);
                    z.push_back(LogPoint(R * u01(rng), a * (2.0 * u01(rng) - 1.0)));
                }
            }
            if (!in_enlarged_sector(z, d.sigma)) continue;
            ++accepted;
            ++res.instances;
            std::vector<cdouble> w;
            for (std::size_t i = 0; i < m; ++i) {
                const double r = nu * std::sqrt(u01(rng));
                const double t = 2.0 * kPi * u01(rng);
                w.emplace_back(r * std::cos(t), r * std::sin(t));
            }
            if (!in_enlarged_sector(rotate_scale(z, w), tau)) {
                ++res.failures;
                if (res.notes.size() < 8)
                    res.notes.push_back("family " + std::to_string(fam) +
                                        ": twisted point left the outer sector");
            }
        }
    }
    return res;
}

// Conjugation symmetry and the majorant-norm bound on random real-coefficient
// series at random surface points.
SuiteResult verify_series(long long samples, std::uint64_t seed) {
    SuiteResult res{"series", 0, 0, {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0), cf(-2.0, 2.0);
    const long long nSeries = std::max<long long>(1, samples / 20);

    for (long long t = 0; t < nSeries; ++t) {
        MixedSeries f;
        f.m = 1 + static_cast<int>(rng() % 2);
        f.n = static_cast<int>(rng() % 3);
        const int nterms = 3 + static_cast<int>(rng() % 4);
        for (int k = 0; k < nterms; ++k) {
            SeriesTerm term;
            for (int i = 0; i < f.m; ++i) term.alpha.push_back(3.0 * u01(rng));
            for (int j = 0; j < f.n; ++j)
                term.beta.push_back(static_cast<unsigned>(rng() % 4));
            double c = cf(rng);
            if (std::abs(c) < 0.05) c = 0.05;
            term.coeff = {c, 0.0};
            f.terms.push_back(std::move(term));
        }
        f.validate();

        for (int pt = 0; pt < 20; ++pt) {
            LogVector x, xc;
            std::vector<double> mods;
            for (int i = 0; i < f.m; ++i) {
                const double mod = 0.05 + 0.85 * u01(rng);
                const double arg = 24.0 * (u01(rng) - 0.5);
                x.push_back(LogPoint(mod, arg));
                xc.push_back(LogPoint(mod, -arg));
                mods.push_back(mod);
            }
            std::vector<cdouble> y, yc;
            std::vector<double> absY;
            for (int j = 0; j < f.n; ++j) {
                cdouble v(cf(rng) * 0.75, cf(rng) * 0.75);
                y.push_back(v);
                yc.push_back(std::conj(v));
                absY.push_back(std::abs(v));
            }

            const cdouble v = evaluate(f, x, y).value;
            const cdouble vc = evaluate(f, xc, yc).value;
            ++res.instances;
            if (std::abs(std::conj(v) - vc) > 1e-13 * (1.0 + std::abs(v))) {
                ++res.failures;
                if (res.notes.size() < 8)
                    res.notes.push_back("conjugation mismatch at series " +
                                        std::to_string(t));
            }
            ++res.instances;
            if (std::abs(v) > majorant_norm(f, mods, absY) * (1.0 + 1e-12)) {
                ++res.failures;
                if (res.notes.size() < 8)
                    res.notes.push_back("norm bound violated at series " +
                                        std::to_string(t));
            }
        }
    }
    return res;
}

// Real/imaginary splitting reproduces the series on real slices within the
// certified tail bound.
SuiteResult verify_split(long long samples, std::uint64_t seed) {
    SuiteResult res{"split", 0, 0, {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0), cf(-2.0, 2.0);
    const long long nSeries = std::max<long long>(1, samples / 100);

    for (long long t = 0; t < nSeries; ++t) {
        const int m = 1 + static_cast<int>(t % 2);
        const int n = static_cast<int>(t % 3);
        MixedSeries f;
        f.m = m;
        f.n = n;
        const int nterms = 1 + static_cast<int>(u01(rng) * 5);
        for (int k = 0; k < nterms; ++k) {
            SeriesTerm term;
            for (int i = 0; i < m; ++i) term.alpha.push_back(3.0 * u01(rng));
            for (int j = 0; j < n; ++j)
                term.beta.push_back(static_cast<unsigned>(u01(rng) * 3));
            term.coeff = {cf(rng), cf(rng)};
            f.terms.push_back(std::move(term));
        }
        f.validate();

        std::vector<double> rp(m), rho(m), sh(n);
        for (int i = 0; i < m; ++i) rp[i] = 0.2 + 0.5 * u01(rng);
        for (int i = 0; i < m; ++i) rho[i] = 0.2 + 0.4 * u01(rng);
        for (int j = 0; j < n; ++j) sh[j] = 0.2 + 0.4 * u01(rng);
        SplitPair sp = split_real_imag(f, rp, rho, sh, 8 + static_cast<int>(t % 5));

        for (int pt = 0; pt < 100; ++pt) {
            LogVector x, x0;
            std::vector<cdouble> y, us, ys, vs;
            for (int i = 0; i < m; ++i) {
                const double mod = rp[i] * std::sqrt(u01(rng));
                const double u = rho[i] * (2.0 * u01(rng) - 1.0);
                x.push_back(LogPoint(mod, u));
                x0.push_back(LogPoint(mod, 0.0));
                us.push_back(u);
            }
            for (int j = 0; j < n; ++j) {
                const double yy = sh[j] * (2.0 * u01(rng) - 1.0);
                const double vv = sh[j] * (2.0 * u01(rng) - 1.0);
                y.push_back(cdouble(yy, vv));
                ys.push_back(yy);
                vs.push_back(vv);
            }
            std::vector<cdouble> uyv;
            uyv.insert(uyv.end(), us.begin(), us.end());
            uyv.insert(uyv.end(), ys.begin(), ys.end());
            uyv.insert(uyv.end(), vs.begin(), vs.end());

            const cdouble exact = evaluate(f, x, y).value;
            const double g = evaluate(sp.re, x0, uyv).value.real();
            const double h = evaluate(sp.im, x0, uyv).value.real();
            ++res.instances;
            if (std::abs(exact.real() - g) > sp.tail_bound + 1e-13 ||
                std::abs(exact.imag() - h) > sp.tail_bound + 1e-13) {
                ++res.failures;
                if (res.notes.size() < 8)
                    res.notes.push_back("split bound violated at series " +
                                        std::to_string(t));
            }
        }
    }
    return res;
}

// Reflection identity, conjugation symmetry, and the leading exact
// coefficients of the Stirling remainder.
SuiteResult verify_stirling(long long samples, std::uint64_t seed) {
    SuiteResult res{"stirling", 0, 0, {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(0.5, 6.0), im(-4.0, -0.3);
    std::uniform_real_distribution<double> reR(0.3, 20.0), imR(0.1, 10.0);

    const long long n = std::max<long long>(1, samples / 3);
    for (long long i = 0; i < n; ++i) {
        const cdouble z(re(rng), im(rng));
        const cdouble q = std::exp(cdouble(0.0, -2.0 * kPi) * z);
        const cdouble resid = phi(z) + phi(-z) + std::log(1.0 - q);
        ++res.instances;
        if (std::abs(resid) > 1e-9) {
            ++res.failures;
            if (res.notes.size() < 8)
                res.notes.push_back("reflection residual " +
                                    fmt_real(std::abs(resid), 3) + " at " +
                                    fmt_complex(z, 6));
        }
    }
    for (long long i = 0; i < n; ++i) {
        const cdouble z(reR(rng), imR(rng));
        ++res.instances;
        if (std::abs(phi(std::conj(z)) - std::conj(phi(z))) > 1e-12) {
            ++res.failures;
            if (res.notes.size() < 8)
                res.notes.push_back("conjugation mismatch at " + fmt_complex(z, 6));
        }
    }
    const double c1 = stirling_coeff(1), c2 = stirling_coeff(2),
                 c3 = stirling_coeff(3);
    ++res.instances;
    if (c1 != 1.0 / 12.0 || c2 != -1.0 / 360.0 || c3 != 1.0 / 1260.0) {
        ++res.failures;
        res.notes.push_back("leading series coefficients are off");
    }
    return res;
}

// Recurrence and conjugation for Gamma and its entire companion g.
SuiteResult verify_gamma(long long samples, std::uint64_t seed) {
    SuiteResult res{"gamma", 0, 0, {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> reW(-8.0, 8.0), imW(0.1, 5.0);
    std::uniform_real_distribution<double> reS(0.3, 10.0), imS(0.2, 6.0);

    const long long n = std::max<long long>(1, samples / 4);
    for (long long i = 0; i < n; ++i) {
        // g satisfies the same recurrence as Gamma; absolute tolerance on a
        // band where both factors stay moderate
        const cdouble z(reW(rng), imW(rng));
        ++res.instances;
        if (std::abs(g_tilde(z + 1.0) - z * g_tilde(z)) > 1e-9) {
            ++res.failures;
            if (res.notes.size() < 8)
                res.notes.push_back("g recurrence residual at " + fmt_complex(z, 6));
        }
    }
    for (long long i = 0; i < n; ++i) {
        const cdouble z(reS(rng), imS(rng));
        const cdouble lhs = gamma(z + 1.0), rhs = z * gamma(z);
        ++res.instances;
        if (std::abs(lhs - rhs) > 1e-12 * std::abs(lhs)) {
            ++res.failures;
            if (res.notes.size() < 8)
                res.notes.push_back("Gamma recurrence residual at " +
                                    fmt_complex(z, 6));
        }
        ++res.instances;
        if (gamma(std::conj(z)) != std::conj(gamma(z))) {
            ++res.failures;
            if (res.notes.size() < 8)
                res.notes.push_back("Gamma conjugation mismatch at " +
                                    fmt_complex(z, 6));
        }
    }
    for (long long i = 0; i < n; ++i) {
        cdouble z(reW(rng), imW(rng));
        if (std::abs(z.real()) < 0.2) z += cdouble(0.4, 0.0);
        const cdouble a = gamma_fast(z), b = gamma(z);
        ++res.instances;
        if (std::abs(a - b) > 1e-11 * std::abs(b)) {
            ++res.failures;
            if (res.notes.size() < 8)
                res.notes.push_back("gamma_fast disagrees at " + fmt_complex(z, 6));
        }
    }
    return res;
}

// Level-curve machinery: residuals and slopes of a modulus trace, and the
// companion-phase sandwich on an upper-left window.
SuiteResult verify_curves(long long, std::uint64_t) {
    SuiteResult res{"curves", 0, 0, {}};

    LevelCurve c = trace_mod_level(std::abs(gamma(cdouble(2.0, 1.0))), 2.0, 6.0);
    for (std::size_t k = 0; k < c.samples.size(); ++k) {
        ++res.instances;
        bool ok = c.samples[k].residual < 1e-10;
        if (k > 0) ok = ok && c.samples[k].y > c.samples[k - 1].y;
        if (!ok) {
            ++res.failures;
            if (res.notes.size() < 8)
                res.notes.push_back("modulus trace defect at x = " +
                                    fmt_real(c.samples[k].x, 6));
        }
    }

    SandwichReport sr = sandwich_check(0.0, Window{-20.0, -5.0, 2.5, 40.0});
    ++res.instances;
    if (!sr.pass) {
        ++res.failures;
        res.notes.push_back("companion-phase sandwich failed, max deviation " +
                            fmt_real(sr.maxDeviation, 6));
    }

    Window w{-20.0, -5.0, 2.0, 40.0};
    LevelCurve a = trace_arg_level(phase(cdouble(-10.0, 10.0)),
                                   Quadrant::UpperLeft, w);
    for (std::size_t k = 1; k < a.samples.size(); ++k) {
        ++res.instances;
        if (a.samples[k].y >= a.samples[k - 1].y) {
            ++res.failures;
            if (res.notes.size() < 8)
                res.notes.push_back("upper-left phase trace not descending at x = " +
                                    fmt_real(a.samples[k].x, 6));
        }
    }
    return res;
}

// The generalized-series zeta against closed forms and the independent
// Euler-Maclaurin engine.
SuiteResult verify_zeta(long long samples, std::uint64_t seed) {
    SuiteResult res{"zeta", 0, 0, {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> sig(2.0, 3.5), tt(-20.0, 20.0);

    ++res.instances;
    if (std::abs(zeta_eval(cdouble(2.0, 0.0), 1e-7).value - kPi * kPi / 6.0) > 1e-7) {
        ++res.failures;
        res.notes.push_back("zeta(2) misses pi^2/6");
    }
    ++res.instances;
    if (std::abs(zeta_eval(cdouble(3.0, 0.0), 1e-7).value - 1.2020569031595943) >
        1e-7) {
        ++res.failures;
        res.notes.push_back("zeta(3) misses Apery's constant");
    }

    const long long n = std::max<long long>(1, samples);
    for (long long i = 0; i < n; ++i) {
        const cdouble w(sig(rng), tt(rng));
        const cdouble a = zeta_eval(w, 1e-7).value;
        const cdouble b = zeta_extended(w);
        ++res.instances;
        if (std::abs(a - b) > 2e-7) {
            ++res.failures;
            if (res.notes.size() < 8)
                res.notes.push_back("series/extended mismatch at " +
                                    fmt_complex(w, 6));
        }
    }
    return res;
}

struct VerifyOpts {
    std::string suite;
    long long samples = 0;  // 0 = per-suite default
    std::uint64_t seed = 20240817ULL;
};

int run_verify(const VerifyOpts& o) {
    struct Entry {
        const char* name;
        long long defSamples;
        SuiteResult (*fn)(long long, std::uint64_t);
    };
    const Entry entries[] = {
        {"sectors", 10000, verify_sectors}, {"series", 2000, verify_series},
        {"split", 2000, verify_split},      {"stirling", 300, verify_stirling},
        {"gamma", 400, verify_gamma},       {"curves", 0, verify_curves},
        {"zeta", 6, verify_zeta},
    };

    long long failures = 0;
    bool matched = false;
    for (const auto& e : entries) {
        if (o.suite != "all" && o.suite != e.name) continue;
        matched = true;
        const long long n =
            (o.suite != "all" && o.samples > 0) ? o.samples : e.defSamples;
        SuiteResult r = e.fn(n, o.seed);
        print_suite(r);
        failures += r.failures;
    }
    if (!matched) throw UsageError("unknown suite '" + o.suite + "'");
    std::cout << "verify: " << (failures == 0 ? "PASS" : "FAIL") << "\n";
    return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// probe
// ---------------------------------------------------------------------------

struct ProbeOpts {
    double argMaxPi = 100.0;
    int samplesPerPi = 600;
    double tMax = 1e4;
    bool crossingsOnly = false;
    bool rayOnly = false;
    int digits = 10;
};

MixedSeries one_var(std::initializer_list<std::pair<double, double>> terms) {
    MixedSeries f;
    f.m = 1;
    f.n = 0;
    for (const auto& [a, c] : terms) f.terms.push_back({{a}, {}, {c, 0.0}});
    return f;
}

void probe_crossings(const ProbeOpts& o) {
    struct Probe {
        const char* label;
        MixedSeries f;
        double modulus;
    };
    const Probe probes[] = {
        {"X", one_var({{1.0, 1.0}}), 0.5},
        {"X^0.5 + 0.1 X^1.5", one_var({{0.5, 1.0}, {1.5, 0.1}}), 1.0},
        {"X^log2 + 0.2 X^log3",
         one_var({{std::log(2.0), 1.0}, {std::log(3.0), 0.2}}), 1.0},
    };

    std::cout << "axis-crossing counts along gamma(t) = (modulus, t)\n";
    std::cout << std::left << std::setw(24) << "series" << std::right
              << std::setw(10) << "arg max" << std::setw(10) << "samples"
              << std::setw(12) << "crossings" << std::setw(9) << "ratio"
              << "\n";
    for (const auto& p : probes) {
        int prev = 0;
        for (double mult : {0.25, 0.5, 1.0, 2.0}) {
            const double T = o.argMaxPi * mult * kPi;
            const int samples =
                std::max(1000, static_cast<int>(o.argMaxPi * mult *
                                                static_cast<double>(o.samplesPerPi)));
            const int c = crossing_count(p.f, p.modulus, T, samples);
            std::ostringstream t;
            t << fmt_real(o.argMaxPi * mult, 6) << " pi";
            std::cout << std::left << std::setw(24) << p.label << std::right
                      << std::setw(10) << t.str() << std::setw(10) << samples
                      << std::setw(12) << c << std::setw(9)
                      << (prev > 0 ? fmt_real(double(c) / prev, 3) : "-") << "\n";
            prev = c;
        }
        const double T1 = o.argMaxPi * kPi;
        const int s1 = std::max(1000, static_cast<int>(o.argMaxPi *
                                                       o.samplesPerPi));
        const int c1 = crossing_count(p.f, p.modulus, T1, s1);
        const int c2 = crossing_count(p.f, p.modulus, 2.0 * T1, 2 * s1);
        std::cout << "  doubling " << fmt_real(o.argMaxPi, 6)
                  << " pi multiplies the count by "
                  << fmt_real(double(c2) / std::max(1, c1), 4) << "\n";
    }
}

void probe_ray(const ProbeOpts& o) {
    const cdouble dir = std::polar(1.0, 3.0 * kPi / 4.0);
    std::cout << "\nphase growth along gamma(t) = t e^{3 pi i/4}, t <= "
              << fmt_real(o.tMax, 6) << "\n";

    // Empirical |phi| ceiling on the ray, inflated; |phi| decays along it.
    double maxPhi = 0.0;
    for (int k = 0; k <= 400; ++k) {
        const double t = 1.0 * std::pow(o.tMax, k / 400.0);
        maxPhi = std::max(maxPhi, std::abs(phi(t * dir)));
    }
    const double B = 1.5 * maxPhi;
    std::cout << "using |phi| <= B = " << fmt_real(B, 6) << " on the ray\n";
    std::cout << std::right << std::setw(12) << "t" << std::setw(16) << "A(z)"
              << std::setw(16) << "lower bound" << std::setw(8) << "holds"
              << "\n";

    double firstBig = -1.0;
    for (double t = 1.0; t <= o.tMax; t *= 2.0) {
        const cdouble z = t * dir;
        const double a = phase(z);
        const double lb = a_lower_bound(z, B);
        std::cout << std::setw(12) << fmt_real(t, 6) << std::setw(16)
                  << fmt_real(a, 8) << std::setw(16) << fmt_real(lb, 8)
                  << std::setw(8) << (std::abs(a) >= lb ? "yes" : "NO") << "\n";
    }
    for (int k = 0; k <= 2000; ++k) {
        const double t = 1.0 * std::pow(o.tMax, k / 2000.0);
        if (std::abs(phase(t * dir)) > 1e3) {
            firstBig = t;
            break;
        }
    }
    if (firstBig > 0)
        std::cout << "|A| first exceeds 1000 near t = " << fmt_real(firstBig, 6)
                  << "\n";
    else
        std::cout << "|A| stays below 1000 up to t = " << fmt_real(o.tMax, 6)
                  << "\n";
}

int run_probe(const ProbeOpts& o) {
    if (!o.rayOnly) probe_crossings(o);
    if (!o.crossingsOnly) probe_ray(o);
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{
        "Continuations on the Riemann surface of the logarithm: generalized "
        "power series, the Stirling remainder, Gamma and zeta, level curves, "
        "and domain-colored renders.",
        "logsurf"};
    app.require_subcommand(1);

    EvalOpts evalOpts;
    auto* evalCmd = app.add_subcommand(
        "eval", "Evaluate a generalized series given as JSON");
    evalCmd->add_option("--series", evalOpts.series,
                        "series JSON (inline or a file path)")->required();
    evalCmd->add_option("--x", evalOpts.xs,
                        "surface point 'mod,arg' or {\"mod\":..,\"arg\":..}; "
                        "repeat per surface variable");
    evalCmd->add_option("--y", evalOpts.ys,
                        "ordinary argument a+bi; repeat per variable");
    evalCmd->add_option("--norm-r", evalOpts.normR,
                        "surface polyradii for the majorant norm");
    evalCmd->add_option("--norm-s", evalOpts.normS,
                        "ordinary polyradii for the majorant norm");
    evalCmd->add_flag("--unit-radius", evalOpts.unitRadius,
                      "print the radius where the majorant norm reaches 1");
    evalCmd->add_option("--digits", evalOpts.digits, "significant digits")
        ->capture_default_str();

    ZetaOpts zetaOpts;
    auto* zetaCmd =
        app.add_subcommand("zeta", "zeta(w) through the generalized series");
    zetaCmd->add_option("--z", zetaOpts.z, "argument, Re > 1 for the series path")
        ->required();
    zetaCmd->add_option("--tol", zetaOpts.tol,
                        "certified tail target (series path; very tight values "
                        "are unreachable near Re w = 1)")
        ->capture_default_str();
    zetaCmd->add_flag("--extended", zetaOpts.extended,
                      "use the Euler-Maclaurin/reflection engine (any w != 1)");
    zetaCmd->add_flag("--verbose", zetaOpts.verbose,
                      "print term count and tail bound");
    zetaCmd->add_option("--digits", zetaOpts.digits, "significant digits")
        ->capture_default_str();

    GammaOpts gammaOpts;
    auto* gammaCmd = app.add_subcommand("gamma", "Gamma(z) and companions");
    gammaCmd->add_option("--z", gammaOpts.z, "argument a+bi");
    gammaCmd->add_flag("--fast", gammaOpts.fast,
                       "asymptotic engine (classical values across the cut)");
    gammaCmd->add_flag("--companion", gammaOpts.companion,
                       "the entire companion g(z) = Gamma(z)(1 - e^{2 pi i z})");
    gammaCmd->add_flag("--log-abs", gammaOpts.logAbs, "print log|Gamma(z)|");
    gammaCmd->add_flag("--phase", gammaOpts.phase,
                       "also print the continuous phase A(z)");
    gammaCmd->add_flag("--x0", gammaOpts.x0,
                       "print the positive critical point of Gamma");
    gammaCmd->add_option("--digits", gammaOpts.digits, "significant digits")
        ->capture_default_str();

    PhiOpts phiOpts;
    auto* phiCmd = app.add_subcommand("phi", "the Stirling remainder");
    phiCmd->add_option("--z", phiOpts.z, "argument a+bi");
    phiCmd->add_flag("--prime", phiOpts.prime, "first derivative");
    phiCmd->add_flag("--second", phiOpts.second,
                     "second derivative (right half-plane)");
    phiCmd->add_flag("--companion", phiOpts.companion, "-phi(-z)");
    phiCmd->add_flag("--asymptotic", phiOpts.asymptotic,
                     "truncated divergent series with its error bound");
    phiCmd->add_option("--order", phiOpts.order,
                       "terms for --asymptotic; negative = optimal")
        ->capture_default_str();
    double directionValue = 0.0;
    auto* dirOpt = phiCmd->add_option("--direction", directionValue,
                                      "Laplace ray angle in (-pi/2, pi/2)");
    phiCmd->add_option("--coeff", phiOpts.coeff,
                       "print the exact series coefficient c_k");
    phiCmd->add_option("--digits", phiOpts.digits, "significant digits")
        ->capture_default_str();

    TraceOpts traceOpts;
    auto* traceCmd =
        app.add_subcommand("trace", "trace a level curve and emit CSV");
    traceCmd->add_option("--kind", traceOpts.kind, "mod | arg | companion")
        ->required()
        ->check(CLI::IsMember({"mod", "arg", "companion"}));
    double traceValue = 0.0;
    auto* valueOpt = traceCmd->add_option(
        "--value", traceValue, "level: r for mod, theta for the phase kinds");
    traceCmd->add_option("--through", traceOpts.through,
                         "derive the level from this point a+bi");
    traceCmd->add_option("--x0", traceOpts.x0, "left end of the x grid")
        ->required();
    traceCmd->add_option("--x1", traceOpts.x1, "right end of the x grid")
        ->required();
    double yloValue = 0.0, yhiValue = 0.0;
    auto* yloOpt =
        traceCmd->add_option("--ylo", yloValue, "window floor (arg/companion)");
    auto* yhiOpt =
        traceCmd->add_option("--yhi", yhiValue, "window ceiling (arg/companion)");
    traceCmd->add_option("--quadrant", traceOpts.quadrant,
                         "upper-right | upper-left (arg curves)")
        ->check(CLI::IsMember({"upper-right", "upper-left", "ur", "ul"}))
        ->capture_default_str();
    traceCmd->add_option("--step", traceOpts.step, "largest x spacing")
        ->capture_default_str();
    traceCmd->add_option("--tol", traceOpts.tol, "residual tolerance")
        ->capture_default_str();
    traceCmd->add_option("--out", traceOpts.out,
                         "CSV path (default: CSV on stdout)");
    traceCmd->add_flag("--slope-check", traceOpts.slopeCheck,
                       "check dA/dx against its floor along a mod trace");
    traceCmd->add_option("--digits", traceOpts.digits, "significant digits")
        ->capture_default_str();

    RenderOpts renderOpts;
    auto* renderCmd =
        app.add_subcommand("render", "domain-colored PPM image");
    renderCmd->add_option("--fn", renderOpts.fn, "function to draw")
        ->required()
        ->check(CLI::IsMember({"gamma", "gamma-fast", "gtilde", "zeta",
                               "zeta-eval", "phi", "identity"}));
    renderCmd->add_option("--xmin", renderOpts.xmin)->capture_default_str();
    renderCmd->add_option("--xmax", renderOpts.xmax)->capture_default_str();
    renderCmd->add_option("--ymin", renderOpts.ymin)->capture_default_str();
    renderCmd->add_option("--ymax", renderOpts.ymax)->capture_default_str();
    renderCmd->add_option("--width", renderOpts.width)->capture_default_str();
    renderCmd->add_option("--height", renderOpts.height)->capture_default_str();
    renderCmd->add_option("--style", renderOpts.style, "gradient | contour")
        ->check(CLI::IsMember({"gradient", "contour"}))
        ->capture_default_str();
    renderCmd->add_option("--level", renderOpts.levels,
                          "log2 |f| contour level (repeatable; contour style)");
    renderCmd->add_option("--sector", renderOpts.sectors,
                          "white overlay 'R,alpha': the sector at infinity");
    renderCmd->add_option("--strip", renderOpts.strips,
                          "black overlay 'n,R,alpha': phase strip n in the sector");
    renderCmd->add_option("--opacity", renderOpts.opacity, "overlay opacity")
        ->capture_default_str();
    renderCmd->add_option("--out", renderOpts.out, "output PPM path")->required();

    ClassifyOpts classifyOpts;
    auto* classifyCmd = app.add_subcommand(
        "classify", "region membership of a point (sector, strips)");
    classifyCmd->add_option("--z", classifyOpts.z, "point a+bi")->required();
    classifyCmd->add_option("--R", classifyOpts.R, "sector radius")
        ->capture_default_str();
    classifyCmd->add_option("--alpha", classifyOpts.alpha,
                            "sector half-aperture in (0, pi/2)")
        ->capture_default_str();
    classifyCmd->add_option("--digits", classifyOpts.digits, "significant digits")
        ->capture_default_str();

    VerifyOpts verifyOpts;
    auto* verifyCmd = app.add_subcommand(
        "verify", "randomized invariant suites; nonzero exit on violation");
    verifyCmd
        ->add_option("--suite", verifyOpts.suite,
                     "sectors | series | split | stirling | gamma | curves | "
                     "zeta | all")
        ->required()
        ->check(CLI::IsMember({"sectors", "series", "split", "stirling", "gamma",
                               "curves", "zeta", "all"}));
    verifyCmd->add_option("--samples", verifyOpts.samples,
                          "instance budget (0 = suite default)")
        ->capture_default_str();
    verifyCmd->add_option("--seed", verifyOpts.seed, "RNG seed")
        ->capture_default_str();

    ProbeOpts probeOpts;
    auto* probeCmd = app.add_subcommand(
        "probe", "crossing-count and phase-growth experiment tables");
    probeCmd->add_option("--arg-max-pi", probeOpts.argMaxPi,
                         "base window length in units of pi")
        ->capture_default_str();
    probeCmd->add_option("--samples-per-pi", probeOpts.samplesPerPi,
                         "sampling density for the crossing counts")
        ->capture_default_str();
    probeCmd->add_option("--t-max", probeOpts.tMax,
                         "how far out to follow the ray")
        ->capture_default_str();
    probeCmd->add_flag("--crossings-only", probeOpts.crossingsOnly,
                       "skip the ray table");
    probeCmd->add_flag("--ray-only", probeOpts.rayOnly,
                       "skip the crossing table");
    probeCmd->add_option("--digits", probeOpts.digits, "significant digits")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*evalCmd) return run_eval(evalOpts);
        if (*zetaCmd) return run_zeta(zetaOpts);
        if (*gammaCmd) return run_gamma(gammaOpts);
        if (*phiCmd) {
            if (dirOpt->count() > 0) phiOpts.direction = directionValue;
            return run_phi(phiOpts);
        }
        if (*traceCmd) {
            if (valueOpt->count() > 0) traceOpts.value = traceValue;
            if (yloOpt->count() > 0) traceOpts.ylo = yloValue;
            if (yhiOpt->count() > 0) traceOpts.yhi = yhiValue;
            return run_trace(traceOpts);
        }
        if (*renderCmd) return run_render(renderOpts);
        if (*classifyCmd) return run_classify(classifyOpts);
        if (*verifyCmd) return run_verify(verifyOpts);
        if (*probeCmd) return run_probe(probeOpts);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
