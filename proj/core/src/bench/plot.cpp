#include "altmin/bench/plot.hpp"

#include "altmin/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace altmin::bench {
namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 90, kRight = 200, kTop = 50, kBottom = 70;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string tick_label(double x) {
    char buf[32];
    if (x == std::floor(x) && std::abs(x) < 1e9)
        std::snprintf(buf, sizeof buf, "%.0f", x);
    else
        std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

}  // namespace

PlotSeries series_from_trace(const std::string& label, const std::vector<TraceRecord>& trace, PlotAxis axis,
                             PlotMetric metric, double f_star) {
    PlotSeries s;
    s.label = label;
    for (const auto& r : trace) {
        s.x.push_back(axis == PlotAxis::Iterations ? static_cast<double>(r.k)
                                                   : static_cast<double>(r.calls.gradient_equivalent()));
        s.y.push_back(metric == PlotMetric::Gap ? r.f_val - f_star : std::sqrt(r.grad_norm_sq));
    }
    return s;
}

std::string axis_label(PlotAxis axis) {
    return axis == PlotAxis::Iterations ? "iterations" : "oracle calls (gradient equivalents)";
}

std::string metric_label(PlotMetric metric) {
    return metric == PlotMetric::Gap ? "f(x) - f* (log scale)" : "||grad f(x)|| (log scale)";
}

std::string render_svg(const std::vector<PlotSeries>& series, const std::string& title, const std::string& x_label,
                       const std::string& y_label) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    bool any = false;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size()) raise(ErrorCode::DimensionMismatch, "series '" + s.label + "': x/y lengths differ");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            any = true;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            if (s.y[i] > 0 && std::isfinite(s.y[i])) {
                ymin = std::min(ymin, s.y[i]);
                ymax = std::max(ymax, s.y[i]);
            }
        }
    }
    if (!any) raise(ErrorCode::InvalidArgument, "nothing to plot");
    if (xmax <= xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    double lo = 0.0, hi = 1.0;  // decades
    if (ymax > 0 && std::isfinite(ymax)) {
        lo = std::floor(std::log10(ymin));
        hi = std::ceil(std::log10(ymax));
        if (hi <= lo) hi = lo + 1;
    }
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) {
        const double d = (y > 0 && std::isfinite(y)) ? std::clamp(std::log10(y), lo, hi) : lo;
        return kTop + (hi - d) / (hi - lo) * ph;
    };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
      << "</text>\n";

    // y decades
    const int step = std::max(1, static_cast<int>(std::ceil((hi - lo) / 10)));
    for (double d = lo; d <= hi + 1e-9; d += step) {
        const double y = kTop + (hi - d) / (hi - lo) * ph;
        o << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(kLeft + pw) << "\" y2=\"" << fmt(y)
          << "\" stroke=\"#e0e0e0\"/>\n";
        o << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">1e" << tick_label(d)
          << "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5.0;
        const double x = px(xv);
        o << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop + ph) << "\" x2=\"" << fmt(x) << "\" y2=\""
          << fmt(kTop + ph + 5) << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kTop + ph + 20) << "\" text-anchor=\"middle\">"
          << tick_label(xv) << "</text>\n";
    }
    o << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(pw) << "\" height=\"" << fmt(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 20) << "\" text-anchor=\"middle\">"
      << escape(x_label) << "</text>\n";
    o << "<text transform=\"translate(24 " << fmt(kTop + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(y_label) << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        const char* color = kPalette[i % std::size(kPalette)];
        if (s.x.size() == 1) {
            o << "<circle cx=\"" << fmt(px(s.x[0])) << "\" cy=\"" << fmt(py(s.y[0])) << "\" r=\"3\" fill=\"" << color
              << "\"/>\n";
        } else if (!s.x.empty()) {
            o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t j = 0; j < s.x.size(); ++j) o << (j ? " " : "") << fmt(px(s.x[j])) << ',' << fmt(py(s.y[j]));
            o << "\"/>\n";
        }
        const double ly = kTop + 10 + 20.0 * static_cast<double>(i);
        const double lx = kLeft + pw + 15;
        o << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(lx + 25) << "\" y2=\"" << fmt(ly)
          << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << fmt(lx + 32) << "\" y=\"" << fmt(ly + 4) << "\">" << escape(s.label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

void emit_plot(const std::vector<PlotSeries>& series, const std::string& title, const std::string& x_label,
               const std::string& y_label, const std::string& path) {
    const std::string svg = render_svg(series, title, x_label, y_label);
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorCode::IoError, "cannot write plot '" + path + "'");
    out << svg;
    if (!out) raise(ErrorCode::IoError, "write failed for '" + path + "'");
}

}  // namespace altmin::bench
