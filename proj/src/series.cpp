#include "logsurf/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace logsurf {

namespace {
const double kInf = std::numeric_limits<double>::infinity();

std::complex<double> int_pow(std::complex<double> base, unsigned e) {
    std::complex<double> acc(1.0, 0.0);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

double pos_pow(double base, double e) {
    if (e == 0.0) return 1.0;  // covers the 0^0 = empty-product convention
    return std::pow(base, e);
}

// Remainder of the exponential series: sum_{k > depth} t^k / k!.
double exp_tail(double t, int depth) {
    if (t <= 0.0) return 0.0;
    double term = 1.0;
    for (int k = 1; k <= depth + 1; ++k) term *= t / k;
    double sum = 0.0;
    int k = depth + 1;
    while (term > sum * 1e-18 + 1e-300) {
        sum += term;
        ++k;
        term *= t / k;
        if (k > depth + 500) return std::exp(t);  // give up on sharpness, stay an upper bound
    }
    return sum;
}
}  // namespace

void MixedSeries::validate() const {
    if (m < 0 || n < 0 || m + n == 0)
        throw std::invalid_argument("MixedSeries: need at least one variable");
    for (const auto& t : terms) {
        if (int(t.alpha.size()) != m || int(t.beta.size()) != n)
            throw std::invalid_argument("MixedSeries: term arity mismatch");
        for (double a : t.alpha)
            if (a < 0.0) throw std::invalid_argument("MixedSeries: exponents must be >= 0");
    }
}

EvalResult evaluate(const MixedSeries& f, const LogVector& x,
                    const std::vector<std::complex<double>>& y) {
    f.validate();
    if (int(x.size()) != f.m || int(y.size()) != f.n)
        throw std::invalid_argument("evaluate: point arity mismatch");

    std::complex<double> acc(0.0, 0.0);
    for (const auto& t : f.terms) {
        double mod = 1.0, phase = 0.0;
        bool zero = false;
        for (int i = 0; i < f.m; ++i) {
            if (x[i].mod == 0.0 && t.alpha[i] > 0.0) { zero = true; break; }
            mod *= pos_pow(x[i].mod, t.alpha[i]);
            phase += t.alpha[i] * x[i].arg;
        }
        if (zero) continue;
        std::complex<double> v = t.coeff * std::polar(mod, phase);
        for (int j = 0; j < f.n; ++j) v *= int_pow(y[j], t.beta[j]);
        acc += v;
    }

    EvalResult out{acc, std::nullopt};
    if (f.tail) {
        std::vector<double> r(x.size()), s(y.size());
        for (size_t i = 0; i < x.size(); ++i) r[i] = x[i].mod;
        for (size_t j = 0; j < y.size(); ++j) s[j] = std::abs(y[j]);
        out.tail_bound = f.tail(r, s);
    }
    return out;
}

double majorant_norm(const MixedSeries& f, const std::vector<double>& r,
                     const std::vector<double>& s) {
    f.validate();
    if (int(r.size()) != f.m || int(s.size()) != f.n)
        throw std::invalid_argument("majorant_norm: radius arity mismatch");
    double acc = 0.0;
    for (const auto& t : f.terms) {
        double v = std::abs(t.coeff);
        for (int i = 0; i < f.m; ++i) v *= pos_pow(r[i], t.alpha[i]);
        for (int j = 0; j < f.n; ++j) v *= pos_pow(s[j], double(t.beta[j]));
        acc += v;
    }
    if (f.tail) acc += f.tail(r, s);
    return acc;
}

double unit_norm_radius(const MixedSeries& g) {
    g.validate();
    if (g.m != 1 || g.n != 0)
        throw std::invalid_argument("unit_norm_radius: series must be one-variable");
    for (const auto& t : g.terms)
        if (t.alpha[0] == 0.0 && std::abs(t.coeff) != 0.0)
            throw std::invalid_argument("unit_norm_radius: series must vanish at 0");

    auto norm_at = [&](double t) { return majorant_norm(g, {t}, {}); };

    if (norm_at(1e-300) >= 1.0) return 0.0;
    double hi = 1e-3;
    while (norm_at(hi) < 1.0) {
        hi *= 2.0;
        if (hi > 1e15) return kInf;  // the norm never reaches 1
    }
    double lo = hi / 2.0;
    if (hi == 1e-3) {
        lo = 1e-300;  // the first probe was already at or past the threshold
    }
    while (hi - lo > 1e-10 * hi) {
        double mid = 0.5 * (lo + hi);
        (norm_at(mid) < 1.0 ? lo : hi) = mid;
    }
    return lo;
}

SplitPair split_real_imag(const MixedSeries& f, const std::vector<double>& r_prime,
                          const std::vector<double>& rho,
                          const std::vector<double>& s_half, int depth) {
    f.validate();
    const int m = f.m, n = f.n;
    if (int(r_prime.size()) != m || int(rho.size()) != m || int(s_half.size()) != n)
        throw std::invalid_argument("split_real_imag: radius arity mismatch");
    if (depth < 1) throw std::invalid_argument("split_real_imag: depth must be >= 1");
    for (double v : r_prime)
        if (!(v > 0.0)) throw std::invalid_argument("split_real_imag: r' must be positive");
    for (double v : rho)
        if (!(v > 0.0)) throw std::invalid_argument("split_real_imag: rho must be positive");
    for (double v : s_half)
        if (!(v > 0.0)) throw std::invalid_argument("split_real_imag: s/2 must be positive");

    // Monomials of the split series are indexed by the original surface exponent
    // alpha together with ordinary exponents on (u_1..u_m, y_1..y_n, v_1..v_n).
    using Key = std::pair<std::vector<double>, std::vector<unsigned>>;
    std::map<Key, std::complex<double>> expanded;

    double err = 0.0;

    for (const auto& term : f.terms) {
        // start with the bare coefficient, exponents all zero on the ordinary block
        std::vector<std::pair<std::vector<unsigned>, std::complex<double>>> monos;
        monos.push_back({std::vector<unsigned>(m + 2 * n, 0u), term.coeff});

        // e^{i alpha_i u_i} truncated at `depth`: sum_p (i alpha_i)^p u_i^p / p!
        for (int i = 0; i < m; ++i) {
            std::vector<std::pair<std::vector<unsigned>, std::complex<double>>> next;
            std::complex<double> c(1.0, 0.0);
            const std::complex<double> ia(0.0, term.alpha[i]);
            for (int p = 0; p <= depth; ++p) {
                if (p > 0) c *= ia / double(p);
                if (std::abs(c) == 0.0 && p > 0) break;
                for (const auto& mo : monos) {
                    auto e = mo.first;
                    e[i] += unsigned(p);
                    next.push_back({std::move(e), mo.second * c});
                }
            }
            monos.swap(next);
        }

        // (y_j + i v_j)^{beta_j} expanded exactly
        for (int j = 0; j < n; ++j) {
            const unsigned b = term.beta[j];
            std::vector<std::pair<std::vector<unsigned>, std::complex<double>>> next;
            double binom = 1.0;
            std::complex<double> ipow(1.0, 0.0);
            for (unsigned d = 0; d <= b; ++d) {
                if (d > 0) {
                    binom = binom * double(b - d + 1) / double(d);
                    ipow *= std::complex<double>(0.0, 1.0);
                }
                for (const auto& mo : monos) {
                    auto e = mo.first;
                    e[m + j] += b - d;      // y_j exponent
                    e[m + n + j] += d;      // v_j exponent
                    next.push_back({std::move(e), mo.second * binom * ipow});
                }
            }
            monos.swap(next);
        }

        for (auto& mo : monos) expanded[{term.alpha, mo.first}] += mo.second;

        // Splitting error of this term: one truncated exponential factor at a
        // time, the others bounded by e^{alpha rho} on |u| < rho; the exact
        // ordinary factors contribute (2 s_half)^beta.
        double base = std::abs(term.coeff);
        for (int i = 0; i < m; ++i) base *= pos_pow(r_prime[i], term.alpha[i]);
        for (int j = 0; j < n; ++j) base *= pos_pow(2.0 * s_half[j], double(term.beta[j]));
        double sum_rem = 0.0;
        for (int i = 0; i < m; ++i) {
            double rem = exp_tail(term.alpha[i] * rho[i], depth);
            double others = 1.0;
            for (int l = 0; l < m; ++l)
                if (l != i) others *= std::exp(term.alpha[l] * rho[l]);
            sum_rem += rem * others;
        }
        err += base * sum_rem;
    }

    // Terms absent from the finite list are absent from both G and H; on the
    // real slice their value is bounded by the tail at (r', 2 s_half).
    if (f.tail) {
        std::vector<double> s_full(n);
        for (int j = 0; j < n; ++j) s_full[j] = 2.0 * s_half[j];
        err += f.tail(r_prime, s_full);
    }

    SplitPair out;
    out.depth = depth;
    out.tail_bound = err;
    out.re.m = out.im.m = m;
    out.re.n = out.im.n = m + 2 * n;
    for (const auto& [key, c] : expanded) {
        if (c.real() != 0.0)
            out.re.terms.push_back({key.first, key.second, {c.real(), 0.0}});
        if (c.imag() != 0.0)
            out.im.terms.push_back({key.first, key.second, {c.imag(), 0.0}});
    }
    return out;
}

double ZetaSeries::tail_bound(long long N, double t) {
    if (!(t > 0.0)) return 0.0;
    double s = -std::log(t);
    if (s <= 1.0) return kInf;  // the series diverges at and beyond radius 1/e
    return std::pow(double(N), 1.0 - s) / (s - 1.0);
}

MixedSeries ZetaSeries::series() const {
    if (terms < 1) throw std::invalid_argument("ZetaSeries: need at least one term");
    MixedSeries f;
    f.m = 1;
    f.n = 0;
    f.terms.reserve(size_t(terms));
    for (long long n = 1; n <= terms; ++n)
        f.terms.push_back({{std::log(double(n))}, {}, {1.0, 0.0}});
    long long N = terms;
    f.tail = [N](const std::vector<double>& r, const std::vector<double>&) {
        return tail_bound(N, r.at(0));
    };
    return f;
}

MixedSeries ZetaSeries::reduced() const {
    MixedSeries f = series();
    f.terms.erase(f.terms.begin());  // drop X^{log 1} = 1
    return f;
}

ZetaEvalResult zeta_eval(std::complex<double> w, double tol) {
    const double sigma = w.real();
    if (!(sigma > 1.0))
        throw std::domain_error("zeta_eval: the series only converges for Re w > 1");
    if (!(tol > 0.0)) throw std::invalid_argument("zeta_eval: tolerance must be positive");

    // smallest N with N^{1-sigma}/(sigma-1) <= tol
    double nd = std::pow(tol * (sigma - 1.0), -1.0 / (sigma - 1.0));
    if (!(nd < 2e8))
        throw std::runtime_error("zeta_eval: tolerance unreachable at this Re w");
    long long N = std::max<long long>(1, (long long)std::ceil(nd));

    // Partial sums of the generalized series at the surface point
    // (e^{-Re w}, -Im w) coincide with sum n^{-w}; summed smallest-first.
    std::complex<double> acc(0.0, 0.0);
    if (w.imag() == 0.0) {
        double racc = 0.0;
        for (long long n = N; n >= 1; --n) racc += std::pow(double(n), -sigma);
        acc = racc;
    } else {
        for (long long n = N; n >= 1; --n) {
            double ln = std::log(double(n));
            acc += std::polar(std::exp(-sigma * ln), -w.imag() * ln);
        }
    }
    return {acc, N, ZetaSeries::tail_bound(N, std::exp(-sigma))};
}

int crossing_count(const MixedSeries& f, double modulus, double arg_max, int samples) {
    f.validate();
    if (f.m != 1 || f.n != 0)
        throw std::invalid_argument("crossing_count: series must be one-variable");
    if (!(modulus > 0.0) || !(arg_max > 0.0) || samples < 2)
        throw std::invalid_argument("crossing_count: bad probe parameters");

    // combine duplicate exponents, find the constant term and the lowest power
    std::map<double, std::complex<double>> by_exp;
    for (const auto& t : f.terms) by_exp[t.alpha[0]] += t.coeff;
    std::complex<double> f0(0.0, 0.0);
    if (auto it = by_exp.find(0.0); it != by_exp.end()) {
        f0 = it->second;
        by_exp.erase(it);
    }
    while (!by_exp.empty() && std::abs(by_exp.begin()->second) == 0.0)
        by_exp.erase(by_exp.begin());
    if (by_exp.empty())
        throw std::domain_error("crossing_count: series is constant");
    const double alpha0 = by_exp.begin()->first;
    const std::complex<double> a0 = by_exp.begin()->second;

    // normalized remainder g with f - f(0) = a0 X^{alpha0} (1 + g); the probe
    // needs |g| < 1 on the circle, i.e. modulus below the unit-norm radius
    MixedSeries g;
    g.m = 1;
    g.n = 0;
    for (auto it = std::next(by_exp.begin()); it != by_exp.end(); ++it)
        g.terms.push_back({{it->first - alpha0}, {}, it->second / a0});
    if (f.tail) {
        auto base_tail = f.tail;
        double scale = std::abs(a0);
        g.tail = [base_tail, scale, alpha0](const std::vector<double>& r,
                                            const std::vector<double>&) {
            double t = r.at(0);
            if (!(t > 0.0)) return 0.0;
            return base_tail({t}, {}) / (scale * std::pow(t, alpha0));
        };
    }
    if (!g.terms.empty() || g.tail) {
        double radius = unit_norm_radius(g);
        if (!(modulus < radius))
            throw std::domain_error("crossing_count: modulus not below the unit-norm radius");
    }

    int count = 0, last = 0;
    for (int j = 1; j <= samples; ++j) {
        double t = arg_max * double(j) / double(samples);
        std::complex<double> val =
            evaluate(f, {LogPoint(modulus, t)}, {}).value - f0;
        std::complex<double> delta =
            val / (a0 * std::pow(modulus, alpha0));
        double v = delta.imag();
        int s = (v > 0.0) - (v < 0.0);
        if (s != 0) {
            if (last != 0 && s != last) ++count;
            last = s;
        }
    }
    return count;
}

std::string series_to_json(const MixedSeries& f) {
    f.validate();
    nlohmann::json j;
    j["m"] = f.m;
    j["n"] = f.n;
    j["terms"] = nlohmann::json::array();
    for (const auto& t : f.terms) {
        nlohmann::json jt;
        jt["alpha"] = t.alpha;
        jt["beta"] = t.beta;
        jt["re"] = t.coeff.real();
        jt["im"] = t.coeff.imag();
        j["terms"].push_back(std::move(jt));
    }
    return j.dump();
}

MixedSeries series_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    MixedSeries f;
    f.m = j.at("m").get<int>();
    f.n = j.at("n").get<int>();
    for (const auto& jt : j.at("terms")) {
        SeriesTerm t;
        t.alpha = jt.at("alpha").get<std::vector<double>>();
        t.beta = jt.at("beta").get<std::vector<unsigned>>();
        t.coeff = {jt.at("re").get<double>(), jt.at("im").get<double>()};
        f.terms.push_back(std::move(t));
    }
    f.validate();
    return f;
}

std::string logpoint_to_json(const LogPoint& z) {
    nlohmann::json j;
    j["mod"] = z.mod;
    j["arg"] = z.arg;
    return j.dump();
}

LogPoint logpoint_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    return LogPoint(j.at("mod").get<double>(), j.at("arg").get<double>());
}

}  // namespace logsurf
