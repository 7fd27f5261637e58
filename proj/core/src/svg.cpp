#include "tclp/svg.hpp"

#include "tclp/errors.hpp"
#include "tclp/geometry.hpp"
#include "tclp/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace tclp {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += ch;
        }
    }
    return out;
}

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string marker(std::size_t series, double x, double y, const std::string& attrs) {
    const std::string color = kColors[series % std::size(kColors)];
    const double r = 4.0;
    switch (series % 4) {
    case 0:
        return "<circle class=\"marker\" cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" + num(r) +
               "\" fill=\"none\" stroke=\"" + color + "\"" + attrs + "/>";
    case 1:
        return "<rect class=\"marker\" x=\"" + num(x - r) + "\" y=\"" + num(y - r) + "\" width=\"" + num(2 * r) +
               "\" height=\"" + num(2 * r) + "\" fill=\"" + color + "\" fill-opacity=\"0.6\"" + attrs + "/>";
    case 2:
        return "<polygon class=\"marker\" points=\"" + num(x) + "," + num(y - r) + " " + num(x + r) + "," +
               num(y + r) + " " + num(x - r) + "," + num(y + r) + "\" fill=\"" + color + "\"" + attrs + "/>";
    default:
        return "<path class=\"marker\" d=\"M" + num(x - r) + "," + num(y - r) + "L" + num(x + r) + "," +
               num(y + r) + "M" + num(x - r) + "," + num(y + r) + "L" + num(x + r) + "," + num(y - r) +
               "\" stroke=\"" + color + "\"" + attrs + "/>";
    }
}

// Portion of the bisector of centers a and b where both are the closest
// centers, clipped to the box. Returns false when empty.
bool voronoi_edge(std::span<const Point> centers, std::size_t a, std::size_t b, double x0, double y0, double x1,
                  double y1, Point& from, Point& to) {
    const Point& pa = centers[a];
    const Point& pb = centers[b];
    const Point mid{(pa.x + pb.x) / 2.0, (pa.y + pb.y) / 2.0};
    const Point dir{-(pb.y - pa.y), pb.x - pa.x};
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    // Keep t with c0 + c1 * t <= 0.
    auto clip = [&](double c0, double c1) {
        if (c1 == 0.0) {
            return c0 <= 0.0;
        }
        const double t = -c0 / c1;
        if (c1 > 0.0) {
            hi = std::min(hi, t);
        } else {
            lo = std::max(lo, t);
        }
        return lo <= hi;
    };
    // |p - a|^2 <= |p - w|^2  <=>  2 p.(w - a) <= |w|^2 - |a|^2
    for (std::size_t w = 0; w < centers.size(); ++w) {
        if (w == a || w == b) {
            continue;
        }
        const Point& pw = centers[w];
        const double gx = pw.x - pa.x;
        const double gy = pw.y - pa.y;
        const double rhs = (pw.x * pw.x + pw.y * pw.y) - (pa.x * pa.x + pa.y * pa.y);
        if (!clip(2.0 * (mid.x * gx + mid.y * gy) - rhs, 2.0 * (dir.x * gx + dir.y * gy))) {
            return false;
        }
    }
    if (!clip(x0 - mid.x, -dir.x) || !clip(mid.x - x1, dir.x) || !clip(y0 - mid.y, -dir.y) ||
        !clip(mid.y - y1, dir.y)) {
        return false;
    }
    if (!(lo < hi)) {
        return false;
    }
    from = {mid.x + lo * dir.x, mid.y + lo * dir.y};
    to = {mid.x + hi * dir.x, mid.y + hi * dir.y};
    return true;
}

} // namespace

std::string objective_plot_svg(std::span<const PlotSeries> series) {
    if (series.empty()) {
        throw ParameterError("plot: no series");
    }
    double f1_lo = std::numeric_limits<double>::infinity();
    double f1_hi = -f1_lo;
    double f2_lo = f1_lo;
    double f2_hi = -f1_lo;
    for (const auto& s : series) {
        if (s.points.empty()) {
            throw ParameterError("plot: series '" + s.name + "' has no points");
        }
        for (const auto& p : s.points) {
            f1_lo = std::min(f1_lo, static_cast<double>(p.f1));
            f1_hi = std::max(f1_hi, static_cast<double>(p.f1));
            f2_lo = std::min(f2_lo, p.f2);
            f2_hi = std::max(f2_hi, p.f2);
        }
    }
    auto pad = [](double& lo, double& hi) {
        const double span = hi - lo;
        const double margin = span > 0.0 ? span * 0.05 : std::max(std::abs(lo) * 0.05, 1.0);
        lo -= margin;
        hi += margin;
    };
    pad(f1_lo, f1_hi);
    pad(f2_lo, f2_hi);

    const double width = 640.0;
    const double height = 480.0;
    const double left = 80.0;
    const double right = 160.0;
    const double top = 20.0;
    const double bottom = 60.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    auto sx = [&](double f1) { return left + (f1 - f1_lo) / (f1_hi - f1_lo) * plot_w; };
    auto sy = [&](double f2) { return top + plot_h - (f2 - f2_lo) / (f2_hi - f2_lo) * plot_h; };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";
    out += "<rect class=\"frame\" x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(plot_w) +
           "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 4; ++i) {
        const double v1 = f1_lo + (f1_hi - f1_lo) * i / 4.0;
        const double v2 = f2_lo + (f2_hi - f2_lo) * i / 4.0;
        out += "<text class=\"tick\" x=\"" + num(sx(v1)) + "\" y=\"" + num(top + plot_h + 16) +
               "\" text-anchor=\"middle\">" + num(std::round(v1 * 100.0) / 100.0) + "</text>\n";
        out += "<text class=\"tick\" x=\"" + num(left - 6) + "\" y=\"" + num(sy(v2) + 4) +
               "\" text-anchor=\"end\">" + num(std::round(v2 * 100.0) / 100.0) + "</text>\n";
    }
    out += "<text class=\"axis-label\" x=\"" + num(left + plot_w / 2) + "\" y=\"" + num(height - 16) +
           "\" text-anchor=\"middle\">F1</text>\n";
    out += "<text class=\"axis-label\" x=\"20\" y=\"" + num(top + plot_h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
           num(top + plot_h / 2) + ")\">F2</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const std::string name = escape(series[s].name);
        out += "<g class=\"series\" data-series=\"" + name + "\">\n";
        for (const auto& p : series[s].points) {
            const std::string attrs = " data-series=\"" + name + "\" data-f1=\"" + std::to_string(p.f1) +
                                      "\" data-f2=\"" + num(p.f2) + "\"";
            out += marker(s, sx(static_cast<double>(p.f1)), sy(p.f2), attrs) + "\n";
        }
        out += "</g>\n";
    }

    out += "<g class=\"legend\">\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
        const double ly = top + 16.0 + 20.0 * static_cast<double>(s);
        const double lx = width - right + 20.0;
        out += marker(s, lx, ly - 4.0, "") + "\n";
        out += "<text class=\"legend-entry\" x=\"" + num(lx + 12) + "\" y=\"" + num(ly) + "\">" +
               escape(series[s].name) + "</text>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string instance_plot_svg(const Instance& instance, const Solution& solution) {
    if (instance.metric() != Metric::EuclideanFromCoords) {
        throw ParameterError("plot: instance drawing needs coordinates-based distances");
    }
    validate_solution(instance, solution);
    const Evaluation eval = evaluate(instance, solution, AssignStrategy::LinearScan);

    double x0 = std::numeric_limits<double>::infinity();
    double y0 = x0;
    double x1 = -x0;
    double y1 = -x0;
    auto grow = [&](const Point& p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    };
    for (const auto& d : instance.demand()) {
        grow(d.position);
    }
    for (const auto& s : instance.sites()) {
        grow(s.position);
    }
    const double extent = std::max({x1 - x0, y1 - y0, 1.0});
    const double margin = extent * 0.05;
    x0 -= margin;
    y0 -= margin;
    x1 += margin;
    y1 += margin;
    const double r = extent * 0.006;

    std::vector<Point> centers;
    for (std::uint32_t c : solution.centers()) {
        centers.push_back(instance.sites()[c].position);
    }

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" +
           num(std::round(800.0 * (y1 - y0) / (x1 - x0))) + "\" viewBox=\"" + num(x0) + " " + num(-y1) + " " +
           num(x1 - x0) + " " + num(y1 - y0) + "\">\n";
    out += "<g transform=\"scale(1,-1)\">\n";
    out += "<rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(x1 - x0) + "\" height=\"" +
           num(y1 - y0) + "\" fill=\"white\" stroke=\"black\" stroke-width=\"" + num(r / 3) + "\"/>\n";

    out += "<g class=\"voronoi-edges\" stroke=\"gray\" stroke-width=\"" + num(r / 2) + "\">\n";
    if (centers.size() >= 2) {
        const VoronoiIndex index(centers);
        for (std::size_t a = 0; a < centers.size(); ++a) {
            for (std::uint32_t b : index.neighbors(a)) {
                if (b <= a) {
                    continue;
                }
                Point from;
                Point to;
                if (voronoi_edge(centers, a, b, x0, y0, x1, y1, from, to)) {
                    out += "<line class=\"voronoi\" x1=\"" + num(from.x) + "\" y1=\"" + num(from.y) + "\" x2=\"" +
                           num(to.x) + "\" y2=\"" + num(to.y) + "\" data-between=\"" +
                           std::to_string(solution.centers()[a]) + "," + std::to_string(solution.centers()[b]) +
                           "\"/>\n";
                }
            }
        }
    }
    out += "</g>\n";

    for (std::size_t j = 0; j < instance.m(); ++j) {
        if (solution.contains(static_cast<std::uint32_t>(j))) {
            continue;
        }
        const Point& p = instance.sites()[j].position;
        out += "<circle class=\"site\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" + num(r) +
               "\" fill=\"none\" stroke=\"gray\" stroke-width=\"" + num(r / 4) + "\" data-site=\"" +
               std::to_string(j) + "\"/>\n";
    }
    for (std::size_t i = 0; i < instance.n(); ++i) {
        const Point& p = instance.demand()[i].position;
        const std::uint32_t site = eval.assignment[i];
        out += "<circle class=\"demand\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" + num(r) +
               "\" fill=\"" + kColors[solution.position_of(site) % std::size(kColors)] + "\" data-center=\"" +
               std::to_string(site) + "\"/>\n";
    }
    for (std::size_t c = 0; c < centers.size(); ++c) {
        const Point& p = centers[c];
        out += "<rect class=\"center\" x=\"" + num(p.x - 1.5 * r) + "\" y=\"" + num(p.y - 1.5 * r) + "\" width=\"" +
               num(3 * r) + "\" height=\"" + num(3 * r) + "\" fill=\"black\" data-site=\"" +
               std::to_string(solution.centers()[c]) + "\" data-x=\"" + num(p.x) + "\" data-y=\"" + num(p.y) +
               "\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

} // namespace tclp
