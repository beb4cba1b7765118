// Numerical continuation of the level curves of |Gamma| and of the phase
// A(z) = Im((z - 1/2) Log z - z + phi(z)), plus the analogous curves for the
// companion function g(z) = Gamma(z)(1 - e^{2 pi i z}).
//
// All curves are parameterized by x and traced left to right on an explicit
// grid: a predictor extrapolates the previous samples, a Newton corrector
// with the analytic d/dy solves the level equation, and a bracketed
// bisection takes over whenever Newton stalls.
#ifndef LOGSURF_CURVES_HPP
#define LOGSURF_CURVES_HPP

#include <iosfwd>
#include <vector>

namespace logsurf {

enum class CurveKind { ModLevel, ArgLevel, CompanionArg };
enum class Quadrant { UpperRight, UpperLeft };

// Tracing knobs. xStep is the largest allowed grid spacing (the span is
// divided evenly); newtonTol bounds the accepted residual per sample.
struct TraceConfig {
    double xStep = 0.05;
    double newtonTol = 1e-10;
    int maxNewton = 60;
    double yBracket = 0.5;  // initial half-width for bracket recovery

    // Throws std::invalid_argument unless every field is positive.
    void validate() const;
};

// Rectangular search window: x runs over [x0, x1], y must stay in
// (yLo, yHi). Throws std::invalid_argument unless x0 < x1 and yLo < yHi.
struct Window {
    double x0 = 0.0;
    double x1 = 1.0;
    double yLo = 0.0;
    double yHi = 1.0;

    void validate() const;
};

// One accepted point: the level equation holds at (x, y) with the stated
// residual (|achieved - target| in the units of the traced quantity).
struct CurveSample {
    double x = 0.0;
    double y = 0.0;
    double residual = 0.0;
};

struct LevelCurve {
    CurveKind kind = CurveKind::ModLevel;
    double value = 0.0;  // r for ModLevel, theta for the phase curves
    Quadrant quadrant = Quadrant::UpperRight;
    std::vector<CurveSample> samples;
};

// Finite-difference derivative of A along a ModLevel curve, paired with the
// slope floor 2 (log floor(x) - 1)^2 evaluated at the left endpoint.
struct DerivativeSample {
    double x = 0.0;
    double derivative = 0.0;
    double bound = 0.0;
};

// Result of tracing {A_g = theta} and checking that the ordinary phase A
// stays inside [theta - 2 e^{-4 pi}, theta + 2 e^{-4 pi}] along it.
struct SandwichReport {
    LevelCurve curve;
    double halfWidth = 0.0;     // 2 e^{-4 pi}
    double maxDeviation = 0.0;  // max |A - theta| over the samples
    bool pass = false;
    std::vector<CurveSample> violations;  // offending (x, y, |A - theta|)
};

// Trace {|Gamma(x+iy)| = r} for y > 0 over x in [x0, x1]. Requires r > 0 and
// x0 greater than the positive root of Gamma'; the returned y(x) is strictly
// increasing. Throws std::runtime_error (naming the x) when the curve is not
// present above the real axis.
LevelCurve trace_mod_level(double r, double x0, double x1,
                           const TraceConfig& cfg = {});

// Trace {A(x+iy) = theta} inside the window. UpperRight requires
// window.x0 beyond the Gamma' root, yLo >= 0 and theta > 0; UpperLeft
// requires yLo >= 2. Throws std::runtime_error when the level is not
// attained at the first grid x or exits the window mid-trace.
LevelCurve trace_arg_level(double theta, Quadrant quadrant,
                           const Window& window, const TraceConfig& cfg = {});

// Trace {A_g(x+iy) = theta}, the phase curve of the companion g. Requires
// window.yLo >= 2 (where 1 - e^{2 pi i z} stays within e^{-4 pi} of 1).
LevelCurve trace_companion_arg(double theta, const Window& window,
                               const TraceConfig& cfg = {});

// The slope floor 2 (log floor(x) - 1)^2; zero (vacuous) below floor(x) = 3.
double phase_slope_bound(double x);

// Forward differences of A(x + i y(x)) along a ModLevel curve, one entry per
// adjacent sample pair, each paired with phase_slope_bound at its left x.
// Throws std::invalid_argument for other curve kinds.
std::vector<DerivativeSample> curve_A_derivative(const LevelCurve& curve);

// Trace {A_g = theta} across the window and verify the two-sided bound
// |A - theta| <= 2 e^{-4 pi} pointwise. Requires window.yLo >= 2.
SandwichReport sandwich_check(double theta, const Window& window,
                              const TraceConfig& cfg = {});

// CSV export with header x,y,residual,A,absGamma.
void write_csv(const LevelCurve& curve, std::ostream& os);

}  // namespace logsurf

#endif
