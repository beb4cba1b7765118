// Domain-coloring renders: the hue encodes arg f(z) on the color circle and
// the lightness encodes |f(z)|, either as a gradient (black at zeros, white
// at poles, midtone at |f| = 1) or as a fixed-lightness field with darkened
// level lines of log2 |f|. Region predicates can be blended on top.
//
// The file format is binary PPM (P6), which is lossless RGB.
#ifndef LOGSURF_RENDER_HPP
#define LOGSURF_RENDER_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace logsurf {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb& a, const Rgb& b) {
        return a.r == b.r && a.g == b.g && a.b == b.b;
    }
    friend bool operator!=(const Rgb& a, const Rgb& b) { return !(a == b); }
};

// Pixels whose evaluation throws (poles, cut points) are painted this.
inline constexpr Rgb kErrorColor{64, 64, 64};

enum class RenderStyle { GradientShade, ContourLines };

// A region predicate blended over the finished image. Predicates that throw
// are treated as false at that pixel.
struct Overlay {
    std::function<bool(std::complex<double>)> predicate;
    Rgb shade{255, 255, 255};
    double opacity = 0.45;
};

struct RenderSpec {
    double xmin = -1.0;
    double xmax = 1.0;
    double ymin = -1.0;
    double ymax = 1.0;
    int width = 512;
    int height = 512;
    RenderStyle style = RenderStyle::GradientShade;
    // log2 |f| values to darken in ContourLines style; empty means every
    // integer level.
    std::vector<double> contourLevels;
    std::vector<Overlay> overlays;

    // Throws std::invalid_argument unless the window is nondegenerate, the
    // resolution is positive, and overlay opacities lie in [0, 1].
    void validate() const;

    // Center of pixel (i, j); row j = 0 is the top of the window.
    std::complex<double> pixel_center(int i, int j) const;
};

struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<Rgb> pixels;  // row-major, top row first

    Rgb& at(int i, int j) { return pixels[static_cast<std::size_t>(j) * width + i]; }
    const Rgb& at(int i, int j) const {
        return pixels[static_cast<std::size_t>(j) * width + i];
    }
};

// The color assigned to one function value under the spec's style. NaN
// values map to kErrorColor, infinite moduli to white in gradient style.
Rgb domain_pixel(std::complex<double> value, const RenderSpec& spec);

// Evaluate f at every pixel center and color it; spec.overlays are blended
// afterward. Deterministic regardless of the thread count (the
// LOGSURF_THREADS environment variable, clamped to at least 1).
ImageBuffer domain_color(const std::function<std::complex<double>(std::complex<double>)>& f,
                         const RenderSpec& spec);

// Blend `shade` over the pixels whose center satisfies the predicate.
ImageBuffer overlay_region(ImageBuffer img, const RenderSpec& spec,
                           const std::function<bool(std::complex<double>)>& predicate,
                           Rgb shade, double opacity = 0.45);

// Binary PPM (P6) writer/reader; lossless on round trip. Throw
// std::runtime_error on I/O or format problems.
void write_image(const ImageBuffer& img, const std::string& path);
ImageBuffer read_image(const std::string& path);

// Gamma through the divergent-series tail at optimal truncation, after
// shifting to Re z >= 8 and dividing the recurrence factors back out.
// Relative accuracy is a few 1e-14; unlike gamma(), points on the negative
// real axis between the poles get their classical real values. Throws
// std::domain_error at the poles.
std::complex<double> gamma_fast(std::complex<double> z);

// zeta on the whole plane minus s = 1: Euler-Maclaurin summation for
// Re s >= 1/2 and the reflection formula
//   zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
// elsewhere, with exact zeros at the negative even integers. Throws
// std::domain_error at the pole s = 1.
std::complex<double> zeta_extended(std::complex<double> s);

}  // namespace logsurf

#endif
