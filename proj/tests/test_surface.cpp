#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "logsurf/surface.hpp"

using namespace logsurf;
using std::complex;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("projection and principal lift") {
    CHECK(project(LogPoint(1, 0)) == complex<double>(1, 0));
    CHECK(std::abs(project(LogPoint(1, kPi)) - complex<double>(-1, 0)) < 1e-15);
    // the covering is 2*pi periodic downstairs even though the surface point is not
    CHECK(std::abs(project(LogPoint(2, 4 * kPi)) - complex<double>(2, 0)) < 1e-14);
    CHECK(project(LogPoint(0, 0)) == complex<double>(0, 0));

    LogPoint one = lift_principal({1, 0});
    CHECK(one.mod == doctest::Approx(1.0));
    CHECK(one.arg == doctest::Approx(0.0));
    LogPoint im = lift_principal({0, 1});
    CHECK(im.mod == doctest::Approx(1.0));
    CHECK(im.arg == doctest::Approx(kPi / 2));
    CHECK_THROWS_AS(lift_principal({-1, 0}), std::domain_error);
    CHECK_THROWS_AS(lift_principal({0, 0}), std::domain_error);
}

TEST_CASE("charts") {
    CHECK(chart_log(LogPoint(1, 0)) == complex<double>(0, 0));
    complex<double> w = chart_log(LogPoint(std::exp(-2.0), 3.0));
    CHECK(w.real() == doctest::Approx(2.0));
    CHECK(w.imag() == doctest::Approx(3.0));
    w = chart_log(LogPoint(std::exp(1.0), -kPi));
    CHECK(w.real() == doctest::Approx(-1.0));
    CHECK(w.imag() == doctest::Approx(-kPi));
    CHECK_THROWS_AS(chart_log(LogPoint(0, 0)), std::domain_error);

    LogPoint p = chart_exp({0, 0});
    CHECK(p.mod == doctest::Approx(1.0));
    CHECK(p.arg == doctest::Approx(0.0));
    p = chart_exp({2, 3});
    CHECK(p.mod == doctest::Approx(std::exp(-2.0)));
    CHECK(p.arg == doctest::Approx(3.0));
    p = chart_exp({-1, 0});
    CHECK(p.mod == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("chart round trips") {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> mod(1e-3, 50.0), arg(-40.0, 40.0);
    for (int i = 0; i < 2000; ++i) {
        LogPoint z(mod(rng), arg(rng));
        LogPoint back = chart_exp(chart_log(z));
        CHECK(back.mod == doctest::Approx(z.mod).epsilon(1e-14));
        CHECK(back.arg == doctest::Approx(z.arg).epsilon(1e-14));
    }
    std::uniform_real_distribution<double> re(-30.0, 30.0), im(-30.0, 30.0);
    for (int i = 0; i < 2000; ++i) {
        complex<double> w(re(rng), im(rng));
        if (w.imag() == 0.0 && w.real() <= 0.0) continue;
        complex<double> back = project(lift_principal(w));
        CHECK(std::abs(back - w) <= 1e-14 * std::abs(w));
    }
}

TEST_CASE("weighted powers") {
    LogPoint p = power({LogPoint(4, kPi)}, {0.5});
    CHECK(p.mod == doctest::Approx(2.0));
    CHECK(p.arg == doctest::Approx(kPi / 2));

    p = power({LogPoint(2, 1), LogPoint(3, -1)}, {1.0, 1.0});
    CHECK(p.mod == doctest::Approx(6.0));
    CHECK(p.arg == doctest::Approx(0.0));

    p = power({LogPoint(5, 7)}, {0.0});  // empty product
    CHECK(p.mod == doctest::Approx(1.0));
    CHECK(p.arg == doctest::Approx(0.0));

    p = power({LogPoint(0, 0), LogPoint(3, 2)}, {1.0, 2.0});
    CHECK(p.mod == 0.0);
    CHECK(p.arg == 0.0);
    CHECK_THROWS_AS(power({LogPoint(0, 0)}, {0.0}), std::domain_error);
    CHECK_THROWS_AS(power({LogPoint(1, 0)}, {-1.0}), std::invalid_argument);
}

TEST_CASE("power is a homomorphism in the weight") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mod(0.1, 5.0), arg(-10.0, 10.0), wt(0.0, 3.0);
    for (int trial = 0; trial < 500; ++trial) {
        size_t m = 1 + trial % 3;
        LogVector z;
        std::vector<double> k1, k2, ksum;
        for (size_t i = 0; i < m; ++i) {
            z.push_back(LogPoint(mod(rng), arg(rng)));
            k1.push_back(wt(rng));
            k2.push_back(wt(rng));
            ksum.push_back(k1.back() + k2.back());
        }
        LogPoint lhs = power(z, ksum);
        LogPoint rhs = surface_mul(power(z, k1), power(z, k2));
        CHECK(lhs.mod == doctest::Approx(rhs.mod).epsilon(1e-12));
        CHECK(lhs.arg == doctest::Approx(rhs.arg).epsilon(1e-12));
    }
}

TEST_CASE("rotate_scale formula") {
    LogVector out = rotate_scale({LogPoint(1, 0)}, {complex<double>(0.1, 0.2)});
    CHECK(out[0].mod == doctest::Approx(std::exp(-0.2)));
    CHECK(out[0].arg == doctest::Approx(0.1));

    out = rotate_scale({LogPoint(2, 1)}, {complex<double>(0, 0)});
    CHECK(out[0].mod == doctest::Approx(2.0));
    CHECK(out[0].arg == doctest::Approx(1.0));

    out = rotate_scale({LogPoint(1, 0)}, {complex<double>(0, kPi)});
    CHECK(out[0].mod == doctest::Approx(std::exp(-kPi)));
    CHECK(out[0].arg == doctest::Approx(0.0));
}

TEST_CASE("sector classification basics") {
    SectorSpec spec;
    spec.weights = {{1.0}};
    spec.radius = {1.0};
    spec.aperture = kPi / 2;
    spec.disk_index = 3;

    CHECK(classify_sector({LogPoint(0.2, 0.3)}, spec) == SectorClass::InS);
    CHECK(classify_sector({LogPoint(0.2, 2.0)}, spec) == SectorClass::InDp);   // 0.2 < 1/4
    CHECK(classify_sector({LogPoint(0.3, 2.0)}, spec) == SectorClass::Outside);
    CHECK(in_enlarged_sector({LogPoint(0.2, 2.0)}, spec));
    CHECK(!in_enlarged_sector({LogPoint(0.3, 2.0)}, spec));

    ClassicSectorSpec cs{{1.0, 2.0}, 0.5};
    CHECK(in_classic_sector({LogPoint(0.5, 0.2), LogPoint(1.5, -0.4)}, cs));
    CHECK(!in_classic_sector({LogPoint(0.5, 0.6), LogPoint(1.5, 0.0)}, cs));
}

TEST_CASE("D_p branch is downward closed in the moduli") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    SectorSpec spec;
    spec.weights = {{1.0, 0.5}, {0.0, 2.0}};
    spec.radius = {1.5, 0.8};
    spec.aperture = 2.0;
    spec.disk_index = 2;
    int found = 0;
    for (int trial = 0; trial < 20000 && found < 300; ++trial) {
        LogVector z{LogPoint(1.5 * u01(rng), 40.0 * (u01(rng) - 0.5)),
                    LogPoint(0.8 * u01(rng), 40.0 * (u01(rng) - 0.5))};
        if (classify_sector(z, spec) != SectorClass::InDp) continue;
        ++found;
        LogVector shrunk{LogPoint(z[0].mod * u01(rng), z[0].arg),
                         LogPoint(z[1].mod * u01(rng), z[1].arg)};
        CHECK(in_enlarged_sector(shrunk, spec));
    }
    CHECK(found >= 300);
}

TEST_CASE("derived inner specs") {
    SectorSpec tau;
    tau.weights = {{1.0}};
    tau.radius = {1.0};
    tau.aperture = 3 * kPi / 4;

    DerivedSpecs d = derive_inner_specs(tau, kPi / 8, kPi / 5, {0.5});
    CHECK(d.M == doctest::Approx(1.0));
    CHECK(d.delta == doctest::Approx(5 * kPi / 8));
    CHECK(d.epsilon == doctest::Approx(3 * kPi / 4 - kPi / 5));
    CHECK(d.sigma.radius[0] == doctest::Approx(std::exp(-kPi / 5)));
    CHECK(d.sigma.aperture == doctest::Approx(d.epsilon));
    CHECK(d.tau_prime.radius[0] == doctest::Approx(0.5));
    CHECK(d.tau_prime.aperture == doctest::Approx(kPi / 8));
    CHECK(d.tau_double_prime.radius[0] == doctest::Approx(std::exp(-kPi / 5)));
    CHECK(kPi / 2 < d.epsilon);
    CHECK(d.epsilon < d.delta);
    CHECK(d.delta < tau.aperture);

    SectorSpec tau2;
    tau2.weights = {{1.0, 1.0}};
    tau2.radius = {1.0, 1.0};
    tau2.aperture = 0.9 * kPi;
    DerivedSpecs d2 = derive_inner_specs(tau2, 0.1, 0.2, {0.5, 0.5});
    CHECK(d2.M == doctest::Approx(2.0));
    CHECK(d2.delta == doctest::Approx(0.9 * kPi - 0.2));
    CHECK(d2.epsilon == doctest::Approx(0.9 * kPi - 0.4));

    CHECK_THROWS_AS(derive_inner_specs(tau, kPi / 8, kPi / 8, {0.5}),
                    std::invalid_argument);  // mu = nu violates strictness
}

// Stability of the enlarged sector under the componentwise twist: points of
// S_p(sigma) moved by any w with all |w_j| < nu stay inside the outer S_p(tau).
TEST_CASE("sector mapping under rotate_scale") {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    auto run_family = [&](const SectorSpec& tau, double mu, double nu,
                          const std::vector<double>& rho, int samples) {
        DerivedSpecs d = derive_inner_specs(tau, mu, nu, rho);
        const size_t m = tau.radius.size();
        int accepted = 0, failures = 0;
        while (accepted < samples) {
            LogVector z;
            bool aim_disk = u01(rng) < 0.5;
            for (size_t i = 0; i < m; ++i) {
                double R = d.sigma.radius[i];
                if (aim_disk) {
                    // small moduli, wild arguments: aims at the D_p piece
                    z.push_back(LogPoint(R * 0.2 * u01(rng), 30.0 * (u01(rng) - 0.5)));
                } else {
                    double a = d.epsilon / (double(m) * 2.5);
                    z.push_back(LogPoint(R * u01(rng), a * (2.0 * u01(rng) - 1.0)));
                }
            }
            if (!in_enlarged_sector(z, d.sigma)) continue;
            ++accepted;
            std::vector<std::complex<double>> w;
            for (size_t i = 0; i < m; ++i) {
                double r = nu * std::sqrt(u01(rng));
                double t = 2 * kPi * u01(rng);
                w.emplace_back(r * std::cos(t), r * std::sin(t));
            }
            if (!in_enlarged_sector(rotate_scale(z, w), tau)) ++failures;
        }
        return failures;
    };

    SectorSpec t1;
    t1.weights = {{1.0}};
    t1.radius = {2.0};
    t1.aperture = 0.8 * kPi;
    CHECK(run_family(t1, 0.05, 0.2, {1.0}, 4000) == 0);

    SectorSpec t2;
    t2.weights = {{1.0, 1.0}, {2.0, 0.0}};
    t2.radius = {1.0, 3.0};
    t2.aperture = 0.9 * kPi;
    t2.disk_index = 4;
    CHECK(run_family(t2, 0.05, 0.1, {0.5, 1.0}, 4000) == 0);

    SectorSpec t3;
    t3.weights = {{0.5, 1.5, 0.0}, {1.0, 0.0, 1.0}};
    t3.radius = {1.0, 1.0, 2.0};
    t3.aperture = 0.95 * kPi;
    t3.disk_index = 2;
    CHECK(run_family(t3, 0.02, 0.15, {0.5, 0.5, 0.5}, 2000) == 0);
}
