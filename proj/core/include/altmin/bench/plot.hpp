#pragma once

#include "altmin/bench/config.hpp"
#include "altmin/trace.hpp"

#include <string>
#include <vector>

namespace altmin::bench {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

PlotSeries series_from_trace(const std::string& label, const std::vector<TraceRecord>& trace, PlotAxis axis,
                             PlotMetric metric, double f_star);

std::string axis_label(PlotAxis axis);
std::string metric_label(PlotMetric metric);

/// Standalone SVG: linear x axis, log10 y axis, one polyline per series and a
/// legend. Nonpositive y values are drawn at the bottom of the axis.
/// Identical input gives identical bytes. Throws InvalidArgument if every
/// series is empty.
std::string render_svg(const std::vector<PlotSeries>& series, const std::string& title, const std::string& x_label,
                       const std::string& y_label);

/// Writes render_svg output to `path`; throws IoError on failure.
void emit_plot(const std::vector<PlotSeries>& series, const std::string& title, const std::string& x_label,
               const std::string& y_label, const std::string& path);

}  // namespace altmin::bench
