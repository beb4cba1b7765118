#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "logsurf/series.hpp"
#include "oracles.hpp"

using namespace logsurf;
using std::complex;

namespace {
const double kPi = 3.14159265358979323846;

MixedSeries univariate(std::initializer_list<std::pair<double, complex<double>>> ts) {
    MixedSeries f;
    f.m = 1;
    f.n = 0;
    for (const auto& [a, c] : ts) f.terms.push_back({{a}, {}, c});
    return f;
}
}  // namespace

TEST_CASE("evaluation tracks the sheet") {
    // X^{1/2} at the surface point (4, 2pi): modulus 2, phase e^{i pi} = -1.
    // One full turn downstairs is NOT the identity upstairs.
    MixedSeries f = univariate({{0.5, {1, 0}}});
    auto r = evaluate(f, {LogPoint(4, 2 * kPi)}, {});
    CHECK(r.value.real() == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(std::abs(r.value.imag()) < 1e-13);

    auto r2 = evaluate(f, {LogPoint(4, 0)}, {});
    CHECK(r2.value.real() == doctest::Approx(2.0));

    // mixed term: a X^{1.5} Y^2 at x=(0.25, pi), y = 1+i
    MixedSeries g;
    g.m = 1;
    g.n = 1;
    g.terms.push_back({{1.5}, {2}, {2, 0}});
    auto r3 = evaluate(g, {LogPoint(0.25, kPi)}, {complex<double>(1, 1)});
    // |x|^1.5 = 0.125, phase e^{1.5 pi i} = -i, y^2 = 2i  =>  2 * 0.125 * (-i)(2i) = 0.5
    CHECK(r3.value.real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(r3.value.imag()) < 1e-14);
}

TEST_CASE("value is dominated by the majorant norm") {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> expd(0.0, 3.0), cf(-2.0, 2.0), md(0.01, 1.5),
        ar(-15.0, 15.0);
    for (int trial = 0; trial < 300; ++trial) {
        MixedSeries f;
        f.m = 2;
        f.n = 1;
        for (int t = 0; t < 6; ++t)
            f.terms.push_back({{expd(rng), expd(rng)},
                               {unsigned(trial % 4)},
                               {cf(rng), cf(rng)}});
        LogVector x{LogPoint(md(rng), ar(rng)), LogPoint(md(rng), ar(rng))};
        std::vector<complex<double>> y{complex<double>(cf(rng), cf(rng))};
        auto v = evaluate(f, x, y);
        double bound = majorant_norm(f, {x[0].mod, x[1].mod}, {std::abs(y[0])});
        CHECK(std::abs(v.value) <= bound * (1 + 1e-12) + 1e-14);
    }
}

TEST_CASE("conjugation symmetry for real coefficients") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> expd(0.0, 2.5), cf(-3.0, 3.0), md(0.05, 2.0),
        ar(-12.0, 12.0);
    for (int trial = 0; trial < 300; ++trial) {
        MixedSeries f;
        f.m = 1;
        f.n = 1;
        for (int t = 0; t < 5; ++t)
            f.terms.push_back({{expd(rng)}, {unsigned(t % 3)}, {cf(rng), 0.0}});
        LogPoint x(md(rng), ar(rng));
        complex<double> y(cf(rng), cf(rng));
        auto a = evaluate(f, {x}, {y}).value;
        auto b = evaluate(f, {LogPoint(x.mod, -x.arg)}, {std::conj(y)}).value;
        CHECK(std::abs(std::conj(a) - b) <= 1e-13 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("zeta series norm and radius") {
    ZetaSeries zs{20000};
    MixedSeries g = zs.reduced();

    // At t = e^{-2} the norm telescopes to zeta(2) - 1 = pi^2/6 - 1.
    double norm = majorant_norm(g, {std::exp(-2.0)}, {});
    CHECK(norm == doctest::Approx(kPi * kPi / 6.0 - 1.0).epsilon(1e-8));
    CHECK(norm < 1.0);

    // Unit-norm radius against an independent bisection for zeta(s) = 2.
    double radius = unit_norm_radius(g);
    double sstar = oracles::zeta_equals_two_abscissa();
    CHECK(radius == doctest::Approx(std::exp(-sstar)).epsilon(2e-7));
    CHECK(radius == doctest::Approx(0.1775243957).epsilon(1e-6));

    // Beyond 1/e the tail bound blows up: norm must be infinite.
    CHECK(std::isinf(majorant_norm(g, {0.5}, {})));
}

TEST_CASE("unit-norm radius basics") {
    // ||c X^a||_t = |c| t^a = 1 at t = |c|^{-1/a}
    MixedSeries g = univariate({{2.0, {4, 0}}});
    CHECK(unit_norm_radius(g) == doctest::Approx(0.5).epsilon(1e-9));

    MixedSeries z = univariate({});
    z.terms.clear();
    CHECK(std::isinf(unit_norm_radius(z)));

    MixedSeries bad = univariate({{0.0, {2, 0}}});
    CHECK_THROWS_AS(unit_norm_radius(bad), std::invalid_argument);
}

TEST_CASE("unit-norm radius shrinks when mass is added") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> expd(0.1, 4.0), cf(0.1, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        MixedSeries g;
        g.m = 1;
        g.n = 0;
        for (int t = 0; t < 4; ++t) g.terms.push_back({{expd(rng)}, {}, {cf(rng), 0}});
        double r1 = unit_norm_radius(g);
        g.terms.push_back({{expd(rng)}, {}, {cf(rng), 0}});
        double r2 = unit_norm_radius(g);
        CHECK(r2 <= r1 * (1 + 1e-9));
    }
}

TEST_CASE("zeta evaluation through the exponential chart") {
    auto r = zeta_eval(complex<double>(2, 0), 1e-7);
    CHECK(r.value.real() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-7));
    CHECK(std::abs(r.value.imag()) == 0.0);
    CHECK(r.tail_bound <= 1e-7);

    auto r3 = zeta_eval(complex<double>(3, 0), 1e-9);
    CHECK(r3.value.real() == doctest::Approx(1.2020569031595943).epsilon(1e-9));

    // complex argument against the Euler-Maclaurin oracle
    complex<double> w(2.5, 3.0);
    auto rc = zeta_eval(w, 1e-8);
    CHECK(std::abs(rc.value - oracles::zeta_em(w)) < 1e-8);

    // the true zeta, not its conjugate: frozen from an independent evaluation
    auto rc2 = zeta_eval(complex<double>(2, 3), 1e-8);
    CHECK(rc2.value.real() == doctest::Approx(0.7980219851462757).epsilon(1e-7));
    CHECK(rc2.value.imag() == doctest::Approx(-0.1137443080529385).epsilon(1e-7));

    CHECK_THROWS_AS(zeta_eval(complex<double>(0.5, 0), 1e-6), std::domain_error);
    CHECK_THROWS_AS(zeta_eval(complex<double>(1.0, 2), 1e-6), std::domain_error);
}

TEST_CASE("split of a single phase factor") {
    // f = X, depth 3: G = X(1 - U^2/2), H = X(U - U^3/6)
    MixedSeries f = univariate({{1.0, {1, 0}}});
    SplitPair sp = split_real_imag(f, {0.5}, {0.3}, {}, 3);

    REQUIRE(sp.re.terms.size() == 2);
    REQUIRE(sp.im.terms.size() == 2);
    CHECK(sp.re.terms[0].alpha[0] == doctest::Approx(1.0));
    CHECK(sp.re.terms[0].beta[0] == 0u);
    CHECK(sp.re.terms[0].coeff.real() == doctest::Approx(1.0));
    CHECK(sp.re.terms[1].beta[0] == 2u);
    CHECK(sp.re.terms[1].coeff.real() == doctest::Approx(-0.5));
    CHECK(sp.im.terms[0].beta[0] == 1u);
    CHECK(sp.im.terms[0].coeff.real() == doctest::Approx(1.0));
    CHECK(sp.im.terms[1].beta[0] == 3u);
    CHECK(sp.im.terms[1].coeff.real() == doctest::Approx(-1.0 / 6.0));

    // declared tail within the analytic bound r' rho^4/24 e^rho
    double analytic = 0.5 * std::pow(0.3, 4) / 24.0 * std::exp(0.3);
    CHECK(sp.tail_bound <= analytic * (1 + 1e-12));
    CHECK(sp.tail_bound > 0.0);

    // f = Y alone: exact split, zero tail
    MixedSeries fy;
    fy.m = 0;
    fy.n = 1;
    fy.terms.push_back({{}, {1}, {1, 0}});
    SplitPair spy = split_real_imag(fy, {}, {}, {0.25}, 4);
    REQUIRE(spy.re.terms.size() == 1);
    REQUIRE(spy.im.terms.size() == 1);
    CHECK(spy.re.terms[0].beta[0] == 1u);   // ordinary block is (y, v)
    CHECK(spy.im.terms[0].beta[1] == 1u);
    CHECK(spy.tail_bound == 0.0);
}

TEST_CASE("split reproduces the series on real slices") {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> expd(0.0, 3.0), cf(-2.0, 2.0), u01(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 1 + trial % 2, n = trial % 3;
        MixedSeries f;
        f.m = m;
        f.n = n;
        const int nterms = 1 + int(u01(rng) * 5);
        for (int t = 0; t < nterms; ++t) {
            SeriesTerm term;
            for (int i = 0; i < m; ++i) term.alpha.push_back(expd(rng));
            for (int j = 0; j < n; ++j) term.beta.push_back(unsigned(u01(rng) * 3));
            term.coeff = {cf(rng), cf(rng)};
            f.terms.push_back(std::move(term));
        }
        std::vector<double> rp(m), rho(m), sh(n);
        for (int i = 0; i < m; ++i) rp[i] = 0.2 + 0.5 * u01(rng);
        for (int i = 0; i < m; ++i) rho[i] = 0.2 + 0.4 * u01(rng);
        for (int j = 0; j < n; ++j) sh[j] = 0.2 + 0.4 * u01(rng);
        const int depth = 8 + trial % 5;
        SplitPair sp = split_real_imag(f, rp, rho, sh, depth);

        for (int pt = 0; pt < 100; ++pt) {
            LogVector x;
            std::vector<complex<double>> y;
            LogVector x0;                       // same moduli, zero arguments
            std::vector<complex<double>> uyv;   // (u, y, v) for the split series
            std::vector<complex<double>> us, ys, vs;
            for (int i = 0; i < m; ++i) {
                double mod = rp[i] * std::pow(u01(rng), 0.5);
                double u = rho[i] * (2 * u01(rng) - 1);
                x.push_back(LogPoint(mod, u));
                x0.push_back(LogPoint(mod, 0.0));
                us.push_back(u);
            }
            for (int j = 0; j < n; ++j) {
                double yy = sh[j] * (2 * u01(rng) - 1);
                double vv = sh[j] * (2 * u01(rng) - 1);
                y.push_back(complex<double>(yy, vv));
                ys.push_back(yy);
                vs.push_back(vv);
            }
            uyv.insert(uyv.end(), us.begin(), us.end());
            uyv.insert(uyv.end(), ys.begin(), ys.end());
            uyv.insert(uyv.end(), vs.begin(), vs.end());

            complex<double> exact = evaluate(f, x, y).value;
            complex<double> g = evaluate(sp.re, x0, uyv).value;
            complex<double> h = evaluate(sp.im, x0, uyv).value;
            CHECK(std::abs(g.imag()) < 1e-13);  // the split series are real
            CHECK(std::abs(h.imag()) < 1e-13);
            CHECK(std::abs(exact.real() - g.real()) <= sp.tail_bound + 1e-13);
            CHECK(std::abs(exact.imag() - h.real()) <= sp.tail_bound + 1e-13);
        }

        // norm chain: ||G|| at (r', rho, s/2, s/2) stays below the inflated sum
        std::vector<double> srad;
        srad.insert(srad.end(), rho.begin(), rho.end());
        srad.insert(srad.end(), sh.begin(), sh.end());
        srad.insert(srad.end(), sh.begin(), sh.end());
        double lhs = majorant_norm(sp.re, rp, srad);
        double rhs = 0.0;
        for (const auto& t : f.terms) {
            double v = std::abs(t.coeff);
            for (int i = 0; i < m; ++i) v *= std::pow(rp[i] * std::exp(rho[i]), t.alpha[i]);
            for (int j = 0; j < n; ++j) v *= std::pow(2.0 * sh[j], double(t.beta[j]));
            rhs += v;
        }
        CHECK(lhs <= rhs * (1 + 1e-12));
    }
}

TEST_CASE("crossing counts") {
    // f = X: the normalized probe is e^{it}, crossing the axis at every
    // multiple of pi; the window end sits between zeros to keep the count exact
    MixedSeries f = univariate({{1.0, {1, 0}}});
    CHECK(crossing_count(f, 0.5, 100.5 * kPi, 40000) == 100);
    CHECK(crossing_count(f, 0.5, 200.5 * kPi, 80000) == 200);

    // a perturbed half-power: ~50 crossings over 100 pi (period 4 pi in t/2)
    MixedSeries g = univariate({{0.5, {1, 0}}, {1.5, {0.1, 0}}});
    int c = crossing_count(g, 1.0, 100 * kPi, 60000);
    CHECK(c >= 48);
    CHECK(c <= 52);

    // monotone growth in the window length
    int c1 = crossing_count(g, 1.0, 50 * kPi, 30000);
    int c2 = crossing_count(g, 1.0, 100 * kPi, 60000);
    CHECK(c1 <= c2);
    CHECK(c2 >= 2 * c1 - 2);

    // probing beyond the unit-norm radius of the remainder is refused:
    // here G = 0.9 X, radius 1/0.9 < 1.2
    MixedSeries h = univariate({{1.0, {1, 0}}, {2.0, {0.9, 0}}});
    CHECK_THROWS_AS(crossing_count(h, 1.2, 10 * kPi, 1000), std::domain_error);
}

TEST_CASE("series json round trip") {
    MixedSeries f;
    f.m = 2;
    f.n = 1;
    f.terms.push_back({{0.5, std::log(2.0)}, {3}, {1.25, -0.5}});
    f.terms.push_back({{0.0, 2.0}, {0}, {0, 1}});
    MixedSeries g = series_from_json(series_to_json(f));
    CHECK(g.m == 2);
    CHECK(g.n == 1);
    REQUIRE(g.terms.size() == 2);
    CHECK(g.terms[0].alpha[1] == doctest::Approx(std::log(2.0)).epsilon(1e-16));
    CHECK(g.terms[0].beta[0] == 3u);
    CHECK(g.terms[0].coeff == complex<double>(1.25, -0.5));
    CHECK(g.terms[1].coeff == complex<double>(0, 1));

    LogPoint z = logpoint_from_json(logpoint_to_json(LogPoint(2.5, -7.25)));
    CHECK(z.mod == 2.5);
    CHECK(z.arg == -7.25);
}
