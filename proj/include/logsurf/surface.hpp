#ifndef LOGSURF_SURFACE_HPP
#define LOGSURF_SURFACE_HPP

// Coordinates, charts and sector predicates on the Riemann surface of the
// logarithm (with the extra point 0 attached), and on finite powers of it.
//
// A surface point is stored as (modulus, argument) with the argument kept
// unreduced: the surface is a covering of the punctured plane, and reducing
// mod 2*pi would collapse the sheets.  The point 0 is represented as (0, 0).

#include <complex>
#include <vector>

namespace logsurf {

struct LogPoint {
    double mod = 1.0;  // modulus, >= 0
    double arg = 0.0;  // argument in radians, unreduced; fixed to 0 when mod == 0

    LogPoint() = default;
    LogPoint(double m, double a);  // validates mod >= 0, pins arg = 0 at the origin
};

// A point of the m-fold product surface, m >= 1.
using LogVector = std::vector<LogPoint>;

// Covering projection onto the plane: (r, theta) -> r e^{i theta}.
std::complex<double> project(const LogPoint& z);

// Inverse of the projection restricted to |arg| < pi.  Throws std::domain_error
// for w on (-inf, 0] (including 0), where no principal preimage exists.
LogPoint lift_principal(std::complex<double> w);

// Chart (r, theta) -> -log r + i theta.  Throws std::domain_error at the origin.
std::complex<double> chart_log(const LogPoint& z);

// Inverse chart w -> (e^{-Re w}, Im w).
LogPoint chart_exp(std::complex<double> w);

// Coordinatewise product on the surface: moduli multiply, arguments add.
LogPoint surface_mul(const LogPoint& a, const LogPoint& b);

// Weighted power z^k = (prod |z_i|^{k_i}, sum k_i arg z_i) for k_i >= 0.
// A component with modulus 0 and k_i > 0 makes the whole power 0; a component
// with modulus 0 and k_i = 0 is undefined and throws std::domain_error.
LogPoint power(const LogVector& z, const std::vector<double>& k);

// Componentwise action z_j -> (|z_j| e^{-v_j}, arg z_j + u_j) for w_j = u_j + i v_j,
// i.e. the twist that appears in the sector-stability lemma.
LogVector rotate_scale(const LogVector& z, const std::vector<std::complex<double>>& w);

// Generalized sector data: the sector is the set of z with |z_i| < R_i for all i
// and k . |arg z| < phi for every weight vector k in K; the enlarged sector adds
// the small polydisk where |z^k| < R^k/(p+1) for every k in K (arguments free).
struct SectorSpec {
    std::vector<std::vector<double>> weights;  // K, finite and nonempty
    std::vector<double> radius;                // R, componentwise > 0
    double aperture = 0.0;                     // phi in (0, pi)
    double series_weight = 2.0;                // r > 1, carried alongside
    unsigned disk_index = 1;                   // p

    void validate() const;  // throws std::invalid_argument on malformed data
};

// Classical polysector |z_i| < R_i, |arg z_i| < rho.
struct ClassicSectorSpec {
    std::vector<double> radius;
    double aperture = 0.0;  // rho > 0
};

enum class SectorClass { InS, InDp, Outside };

// Strict-inequality membership test against the generalized sector; a point in
// both pieces reports InS.  Membership in the enlarged sector is InS-or-InDp.
SectorClass classify_sector(const LogVector& z, const SectorSpec& spec);

bool in_enlarged_sector(const LogVector& z, const SectorSpec& spec);

bool in_classic_sector(const LogVector& z, const ClassicSectorSpec& spec);

// Inner sector data derived from an outer spec tau = (K, R, phi, r, p) and
// parameters 0 < mu < nu < (phi - pi/2)/M, rho < R, where M = max_k sum_i k_i:
//   delta = phi - M mu,  epsilon = phi - M nu,  R' = R / e^nu,
//   sigma = (K, R', r, epsilon),  tau' = (K, rho, r, mu),  tau'' = (K, R', r, mu).
struct DerivedSpecs {
    double M = 0.0;
    double mu = 0.0, nu = 0.0;
    double delta = 0.0, epsilon = 0.0;
    SectorSpec sigma, tau_prime, tau_double_prime;
};

DerivedSpecs derive_inner_specs(const SectorSpec& tau, double mu, double nu,
                                const std::vector<double>& rho);

}  // namespace logsurf

#endif
