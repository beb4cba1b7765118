#ifndef LOGSURF_STIRLING_HPP
#define LOGSURF_STIRLING_HPP

// The Stirling remainder phi: the function with
//     Gamma(z) = sqrt(2 pi) exp((z - 1/2) Log z - z + phi(z))
// on the plane slit along (-inf, 0].  Its divergent asymptotic series
// sum_k c_k z^{1-2k} with c_k = B_{2k}/(2k(2k-1)) is resummed by a Laplace
// integral of the kernel (t/(e^t - 1) - 1 + t/2)/t^2 along rotatable rays;
// identities in the left half-plane extend the integral to the whole slit
// plane.  Exact Bernoulli numbers back the coefficient table.

#include <complex>

#include <boost/multiprecision/cpp_int.hpp>

namespace logsurf {

using Rational = boost::multiprecision::cpp_rational;

// Exact B_idx (B_1 = -1/2 convention), available for 0 <= idx <= 64.
const Rational& bernoulli_exact(int idx);
double bernoulli(int idx);

// c_k = B_{2k} / (2k (2k-1)), 1 <= k <= 32.
Rational stirling_coeff_exact(int k);
double stirling_coeff(int k);

struct AsymptoticResult {
    std::complex<double> value;
    double error_bound = 0.0;  // |c_{N+1}| |z|^{-2N-1} sec^{2N+2}(arg z / 2)
    int terms = 0;             // N actually used
};

// Partial sum sum_{k<=N} c_k z^{1-2k}.  order < 0 picks the optimal truncation
// N = floor(pi |z|) (clamped to the table).  The error bound is a theorem for
// real z > 0 and first-omitted-term guidance elsewhere; it is infinite on the
// negative real axis where the sector factor blows up.
AsymptoticResult phi_asymptotic(std::complex<double> z, int order = -1);

// The Laplace kernel; analytic except at 2 pi i Z \ {0}, kernel(0) = 1/12.
std::complex<double> binet_kernel(std::complex<double> t);

// int_0^{infty e^{i theta}} t^p kernel(t) e^{-zt} dt by adaptive panel
// quadrature; requires |theta| < pi/2 and Re(z e^{i theta}) > 0.  Successive
// panel refinements must agree to 1e-12 or a std::runtime_error is thrown.
std::complex<double> binet_moment(std::complex<double> z, double theta, int p);

// int_0^infty t^p e^{-zt} dt by the same quadrature (equals p!/z^{p+1});
// exposed so tests can validate the integration machinery independently.
std::complex<double> laplace_moment(std::complex<double> z, double theta, int p);

// phi via the Laplace integral in direction theta (moment 0).
std::complex<double> phi_binet(std::complex<double> z, double theta);

// phi on the slit plane: the integral where it converges well, the reflection
// identity phi(z) = -phi(-z) - log(1 - e^{-2 pi i z}) for Im z < 0 in the left
// half-plane, and conjugation symmetry above the axis.
std::complex<double> phi(std::complex<double> z);

// phi'(z) and, for Re z > 0 only, phi''(z).
std::complex<double> phi_prime(std::complex<double> z);
std::complex<double> phi_second(std::complex<double> z);

// The companion solution -phi(-z), defined off [0, inf).
std::complex<double> phi2(std::complex<double> z);

// Structural check that every series exponent 1-2k is odd, so the series has
// purely imaginary values on the positive imaginary axis, for k = 1..k_max.
bool odd_exponent_check(int k_max);

}  // namespace logsurf

#endif
