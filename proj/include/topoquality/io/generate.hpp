#pragma once

// Synthetic labelled planar datasets.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "topoquality/errors.hpp"
#include "topoquality/rips.hpp"

namespace topoquality::io {

enum class Shape { two_rings, ring_in_disk };

inline Shape parse_shape(const std::string& s) {
    if (s == "two_rings") return Shape::two_rings;
    if (s == "ring_in_disk") return Shape::ring_in_disk;
    throw InvalidArgument("unknown shape '" + s + "'");
}

struct GenerateOptions {
    Shape shape = Shape::two_rings;
    std::size_t red = 40;
    std::size_t blue = 40;
    double noise = 0.0;
    std::uint64_t seed = 0;
};

/// mt19937_64 is fully specified by the standard; the conversions below are
/// written out so output does not depend on the library's distributions.
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double gaussian() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

/// two_rings: red on a circle of radius 2, blue on a concentric circle of
/// radius 1. ring_in_disk: red on the annulus 1.6 <= r <= 2, blue filling the
/// unit disk, so the red class wraps around the blue one. Angles are
/// stratified so each ring is covered evenly. `noise` is the standard
/// deviation of Gaussian jitter added to every coordinate.
inline PointCloud generate(const GenerateOptions& opt) {
    if (opt.red == 0 || opt.blue == 0) throw InvalidArgument("class counts must be positive");
    if (!(opt.noise >= 0.0)) throw InvalidArgument("noise must be >= 0");
    PortableRng rng(opt.seed);
    constexpr double tau = 2.0 * std::numbers::pi;

    std::vector<std::vector<double>> pts;
    std::vector<std::string> labels;
    auto emit = [&](double x, double y, const char* label) {
        if (opt.noise > 0.0) {
            x += opt.noise * rng.gaussian();
            y += opt.noise * rng.gaussian();
        }
        pts.push_back({x, y});
        labels.emplace_back(label);
    };

    const double phase = tau * rng.uniform();
    if (opt.shape == Shape::two_rings) {
        for (std::size_t i = 0; i < opt.red; ++i) {
            const double t = phase + tau * static_cast<double>(i) / static_cast<double>(opt.red);
            emit(2.0 * std::cos(t), 2.0 * std::sin(t), "red");
        }
        for (std::size_t i = 0; i < opt.blue; ++i) {
            const double t = phase + tau * static_cast<double>(i) / static_cast<double>(opt.blue);
            emit(std::cos(t), std::sin(t), "blue");
        }
    } else {
        for (std::size_t i = 0; i < opt.red; ++i) {
            const double t = phase + tau * (static_cast<double>(i) + 0.5 * rng.uniform()) / static_cast<double>(opt.red);
            const double r = 1.6 + 0.4 * rng.uniform();
            emit(r * std::cos(t), r * std::sin(t), "red");
        }
        for (std::size_t i = 0; i < opt.blue; ++i) {
            const double t = tau * rng.uniform();
            const double r = std::sqrt(rng.uniform());
            emit(r * std::cos(t), r * std::sin(t), "blue");
        }
    }
    return PointCloud(std::move(pts), std::move(labels));
}

/// CSV with header `x,y,label`, coordinates at round-trip precision.
inline void write_csv(std::ostream& out, const PointCloud& cloud) {
    out << "x,y,label\n";
    char buf[64];
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (double v : cloud[i]) {
            std::snprintf(buf, sizeof buf, "%.17g,", v);
            out << buf;
        }
        out << cloud.labels()[i] << '\n';
    }
}

}  // namespace topoquality::io
