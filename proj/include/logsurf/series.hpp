#ifndef LOGSURF_SERIES_HPP
#define LOGSURF_SERIES_HPP

// Mixed generalized power series: finitely many terms a_{alpha,beta} X^alpha Y^beta
// with real multi-exponents alpha >= 0 on the surface variables and natural
// multi-exponents beta on ordinary complex variables, plus an optional certified
// bound for the mass of everything the finite list omits.

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "logsurf/surface.hpp"

namespace logsurf {

struct SeriesTerm {
    std::vector<double> alpha;     // length m, entries >= 0
    std::vector<unsigned> beta;    // length n
    std::complex<double> coeff;
};

// Bound for the omitted tail, evaluated at polyradii (r, s); must dominate the
// sum of |coeff| r^alpha s^beta over all omitted terms.
using TailBound =
    std::function<double(const std::vector<double>&, const std::vector<double>&)>;

struct MixedSeries {
    int m = 1;  // number of surface variables
    int n = 0;  // number of ordinary variables
    std::vector<SeriesTerm> terms;
    TailBound tail;  // empty when the finite list is the whole series

    void validate() const;  // throws std::invalid_argument on malformed data
};

struct EvalResult {
    std::complex<double> value;
    std::optional<double> tail_bound;  // tail evaluated at (|x|, |y|) when present
};

// Sum of the terms at a surface point x and ordinary point y:
//   a |x|^alpha e^{i alpha . arg x} y^beta.
EvalResult evaluate(const MixedSeries& f, const LogVector& x,
                    const std::vector<std::complex<double>>& y);

// Majorant norm: sum of |coeff| r^alpha s^beta plus the tail bound at (r, s).
double majorant_norm(const MixedSeries& f, const std::vector<double>& r,
                     const std::vector<double>& s);

// For a one-variable series g with g(0) = 0: the supremum of t with
// majorant_norm(g, t) < 1, located by bisection to relative tolerance 1e-10.
// Returns 0 when the norm is >= 1 arbitrarily close to 0, and +infinity when
// the norm never reaches 1.
double unit_norm_radius(const MixedSeries& g);

// Real split of f(x e^{iu}, y + iv) into real series G + iH of the real
// variables (x; u, y, v), obtained by replacing each e^{i alpha_i u_i} with its
// Taylor polynomial of degree `depth`.  Valid on |x| < r_prime, |u| < rho,
// |y|, |v| < s_half, and |Re f - G|, |Im f - H| <= tail_bound there.
struct SplitPair {
    MixedSeries re;   // m surface variables, m + 2n ordinary ones (u, y, v)
    MixedSeries im;
    int depth = 0;
    double tail_bound = 0.0;
};

SplitPair split_real_imag(const MixedSeries& f, const std::vector<double>& r_prime,
                          const std::vector<double>& rho,
                          const std::vector<double>& s_half, int depth);

// The Dirichlet series of zeta as a generalized power series in one surface
// variable: sum over n of X^{log n}, truncated after `terms` terms and carrying
// the exact integral bound for the rest.  reduced() drops the constant term.
struct ZetaSeries {
    long long terms = 1000;
    MixedSeries series() const;
    MixedSeries reduced() const;
    static double tail_bound(long long N, double t);  // bound for sum_{n>N} t^{log n}
};

struct ZetaEvalResult {
    std::complex<double> value;
    long long terms_used = 0;
    double tail_bound = 0.0;
};

// zeta(w) for Re w > 1 through the generalized series in the exponential chart:
// the series is evaluated at the surface point (e^{-Re w}, -Im w), which makes
// the partial sums equal those of sum n^{-w}.  The truncation point is chosen
// so the integral tail bound is below tol.
ZetaEvalResult zeta_eval(std::complex<double> w, double tol = 1e-10);

// Axis-crossing probe for a one-variable series f along the circle of the given
// modulus: with alpha0 the lowest positive exponent and a0 its coefficient,
// counts sign changes of Im[(f(gamma(t)) - f(0)) / (a0 |gamma|^{alpha0})] over
// `samples` points with t in (0, arg_max].  The modulus must stay below the
// unit-norm radius of the normalized remainder so the count grows without bound
// as arg_max does.
int crossing_count(const MixedSeries& f, double modulus, double arg_max, int samples);

// JSON round trip: {"m":..,"n":..,"terms":[{"alpha":[..],"beta":[..],"re":..,"im":..}]}.
// Tail bounds are code, not data, and are not serialized.
std::string series_to_json(const MixedSeries& f);
MixedSeries series_from_json(const std::string& text);

// LogPoint as {"mod":..,"arg":..}.
std::string logpoint_to_json(const LogPoint& z);
LogPoint logpoint_from_json(const std::string& text);

}  // namespace logsurf

#endif
