#pragma once

#include "tclp/instance.hpp"
#include "tclp/pareto.hpp"
#include "tclp/solution.hpp"

#include <span>
#include <string>
#include <vector>

namespace tclp {

struct PlotSeries {
    std::string name;
    std::vector<ObjectivePair> points;
};

// Objective-space scatter: one marker shape per series, F1 on the
// horizontal axis, F2 on the vertical axis, legend with the series names.
// Markers carry data-series, data-f1 and data-f2 attributes. Throws
// ParameterError if there is no series or any series is empty.
std::string objective_plot_svg(std::span<const PlotSeries> series);

// Instance drawing for one solution. Demand points are
// <circle class="demand" cx cy data-center="site id">, opened centers are
// <rect class="center" data-site="id"> centered on the site, closed sites
// <circle class="site">, and the Voronoi edges of the opened centers are
// <line class="voronoi"> clipped to the drawing box. Coordinates are the
// instance coordinates; the y axis is flipped by a group transform.
// Throws ParameterError for matrix-metric instances.
std::string instance_plot_svg(const Instance& instance, const Solution& solution);

} // namespace tclp
