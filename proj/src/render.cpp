#include "logsurf/render.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <thread>

#include "logsurf/stirling.hpp"

namespace logsurf {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.50662827463100050242;

int render_threads() {
    const char* env = std::getenv("LOGSURF_THREADS");
    if (env == nullptr) return 1;
    const long n = std::strtol(env, nullptr, 10);
    return static_cast<int>(std::clamp(n, 1L, 64L));
}

std::uint8_t to_channel(double c) {
    return static_cast<std::uint8_t>(
        std::lround(255.0 * std::clamp(c, 0.0, 1.0)));
}

// CSS-style HSL with h in [0, 1), s and l in [0, 1].
Rgb hsl_to_rgb(double h, double s, double l) {
    const double a = s * std::min(l, 1.0 - l);
    auto channel = [&](double n) {
        const double k = std::fmod(n + h * 12.0, 12.0);
        return l - a * std::max(-1.0, std::min({k - 3.0, 9.0 - k, 1.0}));
    };
    return {to_channel(channel(0.0)), to_channel(channel(8.0)),
            to_channel(channel(4.0))};
}

Rgb blend(Rgb base, Rgb shade, double opacity) {
    auto mix = [&](std::uint8_t x, std::uint8_t y) {
        return static_cast<std::uint8_t>(
            std::lround(x + (static_cast<double>(y) - x) * opacity));
    };
    return {mix(base.r, shade.r), mix(base.g, shade.g), mix(base.b, shade.b)};
}

// sin(pi w) with the integer part of Re w reduced exactly, so the zeros at
// real integers are exact.
std::complex<double> sin_pi(std::complex<double> w) {
    const double n = std::nearbyint(w.real());
    const std::complex<double> s =
        std::sin(kPi * std::complex<double>(w.real() - n, w.imag()));
    return std::fmod(std::abs(n), 2.0) == 1.0 ? -s : s;
}

// Euler-Maclaurin zeta for Re s >= 1/2, s != 1: direct sum to N, trapezoid
// and Bernoulli corrections. N grows with |Im s| so the remainder after 13
// correction terms stays far below double precision.
std::complex<double> zeta_em_right(std::complex<double> s) {
    const int N =
        std::max(24, static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))) + 8);
    const int K = 13;
    static const std::vector<double> coef = [] {
        std::vector<double> c(14, 0.0);
        double fact = 1.0;
        for (int k = 1; k <= 13; ++k) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            c[static_cast<std::size_t>(k)] = bernoulli(2 * k) / fact;
        }
        return c;
    }();

    std::complex<double> sum = 0.0;
    for (int n = 1; n < N; ++n)
        sum += std::exp(-s * std::log(static_cast<double>(n)));
    const std::complex<double> nPow =
        std::exp(-s * std::log(static_cast<double>(N)));  // N^{-s}
    sum += 0.5 * nPow;
    sum += nPow * static_cast<double>(N) / (s - 1.0);     // N^{1-s}/(s-1)

    std::complex<double> poch = s;                        // s(s+1)...(s+2k-2)
    std::complex<double> scale = nPow / static_cast<double>(N);  // N^{-s-2k+1}
    for (int k = 1; k <= K; ++k) {
        sum += coef[static_cast<std::size_t>(k)] * poch * scale;
        poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        scale /= static_cast<double>(N) * static_cast<double>(N);
    }
    return sum;
}

}  // namespace

void RenderSpec::validate() const {
    if (!(xmin < xmax) || !(ymin < ymax))
        throw std::invalid_argument("RenderSpec: degenerate window");
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("RenderSpec: resolution must be positive");
    for (const Overlay& ov : overlays) {
        if (!(ov.opacity >= 0.0 && ov.opacity <= 1.0))
            throw std::invalid_argument("RenderSpec: opacity outside [0, 1]");
        if (!ov.predicate)
            throw std::invalid_argument("RenderSpec: overlay lacks a predicate");
    }
}

std::complex<double> RenderSpec::pixel_center(int i, int j) const {
    // Affine blend of the window corners; symmetric windows get exactly
    // symmetric centers (a symmetric odd-height window puts one row exactly
    // on the real axis).
    const double x =
        (xmin * (2.0 * (width - i) - 1.0) + xmax * (2.0 * i + 1.0)) /
        (2.0 * width);
    const double y =
        (ymax * (2.0 * (height - j) - 1.0) + ymin * (2.0 * j + 1.0)) /
        (2.0 * height);
    return {x, y};
}

Rgb domain_pixel(std::complex<double> value, const RenderSpec& spec) {
    if (std::isnan(value.real()) || std::isnan(value.imag()))
        return kErrorColor;
    double hue = std::atan2(value.imag(), value.real()) * (0.5 / kPi);
    if (hue < 0.0) hue += 1.0;
    if (hue >= 1.0) hue = 0.0;
    const double mag = std::hypot(value.real(), value.imag());

    if (spec.style == RenderStyle::GradientShade) {
        double light;
        if (mag > 1e150) {
            light = 1.0;  // |f|^2 would overflow; visually white already
        } else {
            const double m2 = mag * mag;
            light = m2 / (m2 + 1.0);
        }
        return hsl_to_rgb(hue, 1.0, light);
    }

    double light = 0.5;
    const double l2 = std::log2(mag);
    if (std::isfinite(l2)) {
        double dist;
        if (spec.contourLevels.empty()) {
            dist = std::abs(l2 - std::nearbyint(l2));
        } else {
            dist = std::numeric_limits<double>::infinity();
            for (double level : spec.contourLevels)
                dist = std::min(dist, std::abs(l2 - level));
        }
        if (dist < 0.05) light = 0.15;
    }
    return hsl_to_rgb(hue, 1.0, light);
}

ImageBuffer domain_color(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const RenderSpec& spec) {
    spec.validate();
    if (!f) throw std::invalid_argument("domain_color: empty function");

    ImageBuffer img;
    img.width = spec.width;
    img.height = spec.height;
    img.pixels.resize(static_cast<std::size_t>(spec.width) * spec.height);

    auto paint_rows = [&](int j0, int j1) {
        for (int j = j0; j < j1; ++j) {
            for (int i = 0; i < spec.width; ++i) {
                const std::complex<double> z = spec.pixel_center(i, j);
                Rgb color;
                try {
                    color = domain_pixel(f(z), spec);
                } catch (const std::exception&) {
                    color = kErrorColor;
                }
                for (const Overlay& ov : spec.overlays) {
                    bool inside = false;
                    try {
                        inside = ov.predicate(z);
                    } catch (const std::exception&) {
                        inside = false;
                    }
                    if (inside) color = blend(color, ov.shade, ov.opacity);
                }
                img.at(i, j) = color;
            }
        }
    };

    const int threads = std::min(render_threads(), spec.height);
    if (threads <= 1) {
        paint_rows(0, spec.height);
        return img;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        const int j0 = spec.height * t / threads;
        const int j1 = spec.height * (t + 1) / threads;
        pool.emplace_back(paint_rows, j0, j1);
    }
    for (std::thread& th : pool) th.join();
    return img;
}

ImageBuffer overlay_region(
    ImageBuffer img, const RenderSpec& spec,
    const std::function<bool(std::complex<double>)>& predicate, Rgb shade,
    double opacity) {
    if (!predicate)
        throw std::invalid_argument("overlay_region: empty predicate");
    if (!(opacity >= 0.0 && opacity <= 1.0))
        throw std::invalid_argument("overlay_region: opacity outside [0, 1]");
    if (img.width != spec.width || img.height != spec.height)
        throw std::invalid_argument("overlay_region: buffer does not match spec");
    for (int j = 0; j < img.height; ++j) {
        for (int i = 0; i < img.width; ++i) {
            bool inside = false;
            try {
                inside = predicate(spec.pixel_center(i, j));
            } catch (const std::exception&) {
                inside = false;
            }
            if (inside) img.at(i, j) = blend(img.at(i, j), shade, opacity);
        }
    }
    return img;
}

void write_image(const ImageBuffer& img, const std::string& path) {
    if (img.width <= 0 || img.height <= 0 ||
        img.pixels.size() !=
            static_cast<std::size_t>(img.width) * img.height) {
        throw std::invalid_argument("write_image: malformed buffer");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_image: cannot open " + path);
    out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size() * 3));
    if (!out) throw std::runtime_error("write_image: write failed for " + path);
}

ImageBuffer read_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_image: cannot open " + path);
    auto next_token = [&in]() {
        std::string tok;
        while (true) {
            const int c = in.peek();
            if (c == '#') {
                std::string line;
                std::getline(in, line);
                continue;
            }
            if (std::isspace(c)) {
                in.get();
                continue;
            }
            break;
        }
        in >> tok;
        return tok;
    };
    if (next_token() != "P6")
        throw std::runtime_error("read_image: not a P6 file: " + path);
    ImageBuffer img;
    try {
        img.width = std::stoi(next_token());
        img.height = std::stoi(next_token());
        const int maxval = std::stoi(next_token());
        if (img.width <= 0 || img.height <= 0 || maxval != 255)
            throw std::runtime_error("bad header");
    } catch (const std::exception&) {
        throw std::runtime_error("read_image: malformed header in " + path);
    }
    in.get();  // the single whitespace after the header
    img.pixels.resize(static_cast<std::size_t>(img.width) * img.height);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size() * 3));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size() * 3))
        throw std::runtime_error("read_image: truncated pixel data in " + path);
    return img;
}

std::complex<double> gamma_fast(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 &&
        z.real() == std::floor(z.real())) {
        throw std::domain_error("gamma_fast: pole at a nonpositive integer");
    }
    int m = 0;
    if (z.real() < 8.0) m = static_cast<int>(std::ceil(8.0 - z.real()));
    const std::complex<double> w = z + static_cast<double>(m);
    const std::complex<double> form =
        (w - 0.5) * std::log(w) - w + phi_asymptotic(w).value;
    std::complex<double> g = kSqrt2Pi * std::exp(form);
    for (int j = 0; j < m; ++j) g /= z + static_cast<double>(j);
    return g;
}

std::complex<double> zeta_extended(std::complex<double> s) {
    if (s == std::complex<double>(1.0, 0.0))
        throw std::domain_error("zeta_extended: pole at s = 1");
    if (s.real() >= 0.5) return zeta_em_right(s);
    if (s == std::complex<double>(0.0, 0.0)) return {-0.5, 0.0};
    const std::complex<double> t = 1.0 - s;
    const std::complex<double> prefactor =
        std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi));
    return prefactor * sin_pi(0.5 * s) * gamma_fast(t) * zeta_em_right(t);
}

}  // namespace logsurf
