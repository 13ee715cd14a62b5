#pragma once

// Persistence-diagram panels showing a block function: codomain bars as
// squares, domain bars as circles, one segment per matched pair. Bars that
// never die sit on a gutter line above the plot area.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "topoquality/quality.hpp"

namespace topoquality::io {

struct SvgPanel {
    std::string title;
    BlockFunction block_function;
};

namespace svg_detail {

constexpr double kPanelSize = 320.0;
constexpr double kMargin = 40.0;
constexpr double kGutter = 16.0;
constexpr double kSquare = 8.0;
constexpr double kRadius = 4.0;

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

inline double snap(double v) { return std::round(v * 1000.0) / 1000.0; }

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Frame {
    double x0, y0;  // top-left corner of the panel
    double scale_max;

    double plot_size() const { return kPanelSize - 2 * kMargin; }
    double x(double birth) const { return snap(x0 + kMargin + birth / scale_max * plot_size()); }
    double y(const std::optional<double>& death) const {
        if (!death) return snap(y0 + kMargin - kGutter);
        return snap(y0 + kPanelSize - kMargin - *death / scale_max * plot_size());
    }
};

inline double finite_max(const BlockFunction& bf) {
    double m = 0.0;
    for (const Barcode* b : {&bf.domain, &bf.codomain})
        for (const auto& iv : *b) {
            m = std::max(m, iv.birth);
            if (iv.death) m = std::max(m, *iv.death);
        }
    return m > 0.0 ? m * 1.05 : 1.0;
}

}  // namespace svg_detail

inline std::string render_svg(const std::vector<SvgPanel>& panels) {
    using namespace svg_detail;
    const std::size_t per_row = std::max<std::size_t>(1, std::min<std::size_t>(panels.size(), 3));
    const std::size_t rows = panels.empty() ? 1 : (panels.size() + per_row - 1) / per_row;
    const double width = per_row * kPanelSize;
    const double height = rows * kPanelSize;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
        << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto& panel = panels[p];
        const auto& bf = panel.block_function;
        const Frame f{static_cast<double>(p % per_row) * kPanelSize, static_cast<double>(p / per_row) * kPanelSize,
                      finite_max(bf)};
        const double left = f.x0 + kMargin, right = f.x0 + kPanelSize - kMargin;
        const double top = f.y0 + kMargin, bottom = f.y0 + kPanelSize - kMargin;

        out << "<g class=\"panel\" data-degree=\"" << bf.degree << "\">\n";
        out << "<text x=\"" << num(left) << "\" y=\"" << num(f.y0 + 14) << "\" font-size=\"12\">"
            << escape(panel.title) << "</text>\n";
        out << "<rect class=\"frame\" x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\""
            << num(right - left) << "\" height=\"" << num(bottom - top) << "\" fill=\"none\" stroke=\"#888\"/>\n";
        out << "<line class=\"diagonal\" x1=\"" << num(left) << "\" y1=\"" << num(bottom) << "\" x2=\""
            << num(right) << "\" y2=\"" << num(top) << "\" stroke=\"#bbb\"/>\n";
        out << "<line class=\"infinity\" x1=\"" << num(left) << "\" y1=\"" << num(top - kGutter) << "\" x2=\""
            << num(right) << "\" y2=\"" << num(top - kGutter) << "\" stroke=\"#bbb\" stroke-dasharray=\"4 2\"/>\n";
        out << "<text x=\"" << num(f.x0 + 8) << "\" y=\"" << num(top - kGutter + 4)
            << "\" font-size=\"10\">inf</text>\n";

        for (const auto& [i, j] : matched_pairs(bf)) {
            const auto& I = bf.domain[i];
            const auto& J = bf.codomain[j];
            out << "<line class=\"match\" data-domain=\"" << i << "\" data-codomain=\"" << j << "\" x1=\""
                << num(f.x(I.birth)) << "\" y1=\"" << num(f.y(I.death)) << "\" x2=\"" << num(f.x(J.birth))
                << "\" y2=\"" << num(f.y(J.death)) << "\" stroke=\"#555\"/>\n";
        }
        for (const auto& J : bf.codomain) {
            const double cx = f.x(J.birth), cy = f.y(J.death);
            out << "<rect class=\"codomain\" data-index=\"" << J.index << "\" x=\"" << num(cx - kSquare / 2)
                << "\" y=\"" << num(cy - kSquare / 2) << "\" width=\"" << num(kSquare) << "\" height=\""
                << num(kSquare) << "\" fill=\"none\" stroke=\"#8b4513\"/>\n";
        }
        for (const auto& I : bf.domain) {
            out << "<circle class=\"domain\" data-index=\"" << I.index << "\" cx=\"" << num(f.x(I.birth))
                << "\" cy=\"" << num(f.y(I.death)) << "\" r=\"" << num(kRadius)
                << "\" fill=\"none\" stroke=\"#00bcd4\"/>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

/// One panel per (section, degree) of a quality report.
inline std::vector<SvgPanel> report_panels(const QualityReport& report) {
    std::vector<SvgPanel> panels;
    for (const auto& s : report.sections)
        for (const auto& [k, dq] : s.degrees) {
            std::string title = (s.label.empty() ? std::string("dataset") : "class " + s.label) + ", H" +
                                std::to_string(k) + ", TQ=" + std::to_string(dq.tq);
            panels.push_back({std::move(title), dq.block_function});
        }
    return panels;
}

}  // namespace topoquality::io
