#ifndef LOGSURF_GAMMAFN_HPP
#define LOGSURF_GAMMAFN_HPP

// Gamma on the plane slit along (-inf, 0], built from the Stirling form
//     Gamma(z) = sqrt(2 pi) exp((z - 1/2) Log z - z + phi(z)),
// with functional-equation shifting below a modulus threshold.  Alongside it:
// the phase A(z) = Im((z - 1/2) Log z - z + phi(z)), the positive root x0 of
// Gamma', sector-at-infinity region classifiers, the modulus derivative
// formulas from the Weierstrass product, the entire companion
// g(z) = Gamma(z)(1 - e^{2 pi i z}), and a closed-form lower bound for |A|.

#include <complex>
#include <optional>

namespace logsurf {

// Gamma(z) for z off the nonpositive-integer poles; real negative arguments
// are routed through the recurrence so the base formula only ever sees the
// slit plane.
std::complex<double> gamma(std::complex<double> z);

// log |Gamma(z)|, computed without forming Gamma (safe for large Re z).
double log_abs_gamma(std::complex<double> z);

// The unique positive zero of Gamma', near 1.4616; Newton on
// d/dx log Gamma = log x + (x - 1/2)/x - 1 + phi'(x) from 1.5, cached after
// the first call.  Throws if the derivative residual cannot reach 1e-12.
double find_x0();

// A(z): the continuous phase of Gamma on the slit plane; zero on (0, inf).
double phase(std::complex<double> z);

// A_g(z) = Im((z - 1/2) Log z - z - phi(-z)), defined off [0, inf); within
// 2 e^{-4 pi} of A(z) once Im z > 2.
double phase_alt(std::complex<double> z);

// g(z) = Gamma(z)(1 - e^{2 pi i z}); entire continuation across the poles in
// principle, but kept off the cut (-inf, 0] here to match the Log branch.
std::complex<double> g_tilde(std::complex<double> z);

// A sector at infinity S^inf(R, alpha) = {|z| > R, |arg z| < alpha} and the
// strip index n it selects.
struct RegionSpec {
    double R = 1.0;
    double alpha = 1.0;  // in (0, pi/2)
    long long n = 0;     // informational: which strip a caller is after
    void validate() const;
};

bool in_sector_at_infinity(std::complex<double> z, const RegionSpec& spec);

// U_n: z in S^inf(R, alpha), Re z > x0, n = floor(A(z) / 2 pi).
std::optional<long long> classify_un(std::complex<double> z, const RegionSpec& spec);

// U~_n: same strip index without the Re z > x0 restriction.
std::optional<long long> classify_un_tilde(std::complex<double> z,
                                           const RegionSpec& spec);

// V_n: -z in S^inf(R, alpha) and Im z > 0, n = floor(A_g(z) / 2 pi).
// Throws std::domain_error when Im z <= 0.
std::optional<long long> classify_vn(std::complex<double> z, const RegionSpec& spec);

// d/dx log|Gamma(x+iy)| and d/dy log|Gamma(x+iy)| from the Weierstrass
// product, truncated at `terms` with an integral tail estimate.
double dlog_dx(double x, double y, int terms);
double dlog_dy(double x, double y, int terms);

// The same derivatives of |Gamma| itself: |Gamma| times the brackets above.
double dmod_dx(double x, double y, int terms);
double dmod_dy(double x, double y, int terms);

// |(x - 1/2) arccot(x/y) + y (log sqrt(x^2 + y^2) - 1)| - B with arccot
// valued in (0, pi); a lower bound for |A(z)| wherever B bounds |phi|.
double a_lower_bound(std::complex<double> z, double B);

}  // namespace logsurf

#endif
