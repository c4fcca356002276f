// Hand-written SVG for the landscape figures. Every number is printed with a
// fixed format so the output is byte-identical for identical input.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>

#include "fanoscape/errors.hpp"
#include "fanoscape/landscape.hpp"

namespace fanoscape {
namespace {

constexpr double kWidth = 800, kHeight = 600;
constexpr double kLeft = 70, kRight = 770, kTop = 40, kBottom = 540;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", std::abs(v) < 1e-9 ? 0.0 : v);
  return buf;
}

double nice_step(double span) {
  const double raw = span / 8;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  return std::max(step, 1.0);
}

AxisRange padded(double lo, double hi) {
  if (lo == hi) return {lo - 1, hi + 1};
  const double pad = (hi - lo) * 0.05;
  return {lo - pad, hi + pad};
}

void check_range(const AxisRange& r, const char* axis) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.lo < r.hi))
    throw InvalidArgument(std::string(axis) + " range must be finite and increasing");
}

class Canvas {
 public:
  Canvas(AxisRange x, AxisRange y) : x_(x), y_(y) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
            "viewBox=\"0 0 800 600\">\n";
    out_ += "<rect x=\"0\" y=\"0\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
            "\" fill=\"white\"/>\n";
  }

  double px(double v) const { return kLeft + (v - x_.lo) / (x_.hi - x_.lo) * (kRight - kLeft); }
  double py(double v) const { return kBottom - (v - y_.lo) / (y_.hi - y_.lo) * (kBottom - kTop); }

  void axes(const std::string& xname, const std::string& yname) {
    out_ += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    out_ += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(kRight) +
            "\" y2=\"" + fmt(kBottom) + "\"/>\n";
    out_ += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(kLeft) +
            "\" y2=\"" + fmt(kTop) + "\"/>\n";
    const double sx = nice_step(x_.hi - x_.lo);
    for (double t = std::ceil(x_.lo / sx) * sx; t <= x_.hi + 1e-9; t += sx) {
      out_ += "<line x1=\"" + fmt(px(t)) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(px(t)) +
              "\" y2=\"" + fmt(kBottom + 5) + "\"/>\n";
      ticks_ += "<text x=\"" + fmt(px(t)) + "\" y=\"" + fmt(kBottom + 20) +
                "\" text-anchor=\"middle\">" + label(t) + "</text>\n";
    }
    const double sy = nice_step(y_.hi - y_.lo);
    for (double t = std::ceil(y_.lo / sy) * sy; t <= y_.hi + 1e-9; t += sy) {
      out_ += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(py(t)) + "\" x2=\"" + fmt(kLeft) +
              "\" y2=\"" + fmt(py(t)) + "\"/>\n";
      ticks_ += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(py(t) + 4) +
                "\" text-anchor=\"end\">" + label(t) + "</text>\n";
    }
    out_ += "</g>\n";
    out_ += "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n" + ticks_ + "</g>\n";
    out_ += "<text class=\"xlabel\" x=\"" + fmt((kLeft + kRight) / 2) + "\" y=\"" +
            fmt(kHeight - 15) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            "font-size=\"14\">" + xname + "</text>\n";
    out_ += "<text class=\"ylabel\" x=\"20\" y=\"" + fmt((kTop + kBottom) / 2) +
            "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
            "transform=\"rotate(-90 20 " + fmt((kTop + kBottom) / 2) + ")\">" + yname + "</text>\n";
  }

  void raw(const std::string& s) { out_ += s; }

  std::string finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  AxisRange x_, y_;
  std::string out_, ticks_;
};

std::string scatter(const LandscapeStore& store, const PlotSpec& spec) {
  if (store.empty()) throw EmptyStore("cannot draw a scatter plot of an empty store");
  std::map<std::pair<long, long>, long> counts;
  long gmin = store.records().front().genus, gmax = gmin;
  long cmin = store.records().front().codimension, cmax = cmin;
  for (const auto& r : store.records()) {
    ++counts[{r.genus, r.codimension}];
    gmin = std::min(gmin, r.genus), gmax = std::max(gmax, r.genus);
    cmin = std::min(cmin, r.codimension), cmax = std::max(cmax, r.codimension);
  }
  const AxisRange xr = spec.x_range.value_or(padded(gmin, gmax));
  const AxisRange yr = spec.y_range.value_or(padded(std::min(cmin, 0L), cmax));
  check_range(xr, "x");
  check_range(yr, "y");

  Canvas canvas(xr, yr);
  canvas.axes("genus", "codimension");
  canvas.raw("<g class=\"markers\" fill=\"steelblue\">\n");
  for (const auto& [key, n] : counts) {
    const auto [g, c] = key;
    if (g < xr.lo || g > xr.hi || c < yr.lo || c > yr.hi) continue;
    const double weight = std::log2(static_cast<double>(n));
    const double radius = spec.marker_size * (1 + 0.25 * weight);
    const double opacity = std::min(1.0, 0.35 + 0.15 * weight);
    canvas.raw("<circle cx=\"" + fmt(canvas.px(g)) + "\" cy=\"" + fmt(canvas.py(c)) + "\" r=\"" +
               fmt(radius) + "\" fill-opacity=\"" + fmt(opacity) + "\" data-genus=\"" +
               std::to_string(g) + "\" data-codimension=\"" + std::to_string(c) +
               "\" data-count=\"" + std::to_string(n) + "\"/>\n");
  }
  canvas.raw("</g>\n");
  return canvas.finish();
}

std::string histogram(const LandscapeStore& store, const PlotSpec& spec) {
  std::map<long, long> bins;
  for (const auto& r : store.records()) ++bins[r.codimension];
  long top = 0;
  for (const auto& [c, n] : bins) top = std::max(top, n);
  AxisRange xr{-0.5, 0.5}, yr{0, 1};
  if (!bins.empty()) {
    xr = {static_cast<double>(bins.begin()->first) - 0.5,
          static_cast<double>(bins.rbegin()->first) + 0.5};
    yr = {0, static_cast<double>(top) * 1.05};
  }
  xr = spec.x_range.value_or(xr);
  yr = spec.y_range.value_or(yr);
  check_range(xr, "x");
  check_range(yr, "y");

  Canvas canvas(xr, yr);
  canvas.axes("codimension", "records");
  canvas.raw("<g class=\"bars\" fill=\"steelblue\">\n");
  for (const auto& [c, n] : bins) {
    if (c - 0.4 < xr.lo || c + 0.4 > xr.hi) continue;
    const double x0 = canvas.px(c - 0.4), x1 = canvas.px(c + 0.4);
    const double y0 = canvas.py(std::min<double>(n, yr.hi)), y1 = canvas.py(std::max(0.0, yr.lo));
    canvas.raw("<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y0) + "\" width=\"" + fmt(x1 - x0) +
               "\" height=\"" + fmt(y1 - y0) + "\" data-codimension=\"" + std::to_string(c) +
               "\" data-count=\"" + std::to_string(n) + "\"/>\n");
  }
  canvas.raw("</g>\n");
  return canvas.finish();
}

}  // namespace

std::string render_svg(const LandscapeStore& store, const PlotSpec& spec) {
  if (!(spec.marker_size > 0) || !std::isfinite(spec.marker_size))
    throw InvalidArgument("marker size must be positive");
  return spec.kind == PlotKind::scatter ? scatter(store, spec) : histogram(store, spec);
}

void emit_plot(const LandscapeStore& store, const PlotSpec& spec) {
  const std::string svg = render_svg(store, spec);
  std::ofstream out(spec.output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + spec.output_path);
  out << svg;
  if (!out) throw IoError("failed writing " + spec.output_path);
}

}  // namespace fanoscape
