#include "xcoh/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace xcoh {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 24.0;
constexpr double kTop = 24.0;
constexpr double kBottom = 56.0;
constexpr int kOverlayPoints = 201;

struct OverlayStyle {
  const char* color;
  const char* dash;  // nullptr for solid
};

OverlayStyle overlay_style(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Mnms: return {"#d62728", nullptr};
    case FamilyKind::Werner: return {"#e377c2", nullptr};
    case FamilyKind::Mems: return {"#2ca02c", nullptr};
    case FamilyKind::RhoL: return {"#000000", "6 4"};
  }
  return {"#000000", nullptr};
}

std::string num(double v, const char* fmt = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;

  void widen(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  void finalize() {
    if (hi - lo < 1e-12) hi = lo + 1.0;
    hi += 0.05 * (hi - lo);
  }
};

}  // namespace

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Mnms: return "MNMS";
    case FamilyKind::Werner: return "Werner";
    case FamilyKind::Mems: return "MEMS";
    case FamilyKind::RhoL: return "rho_L";
  }
  return "?";
}

std::string render_svg_scatter(const FigureSpec& spec,
                               std::span<const EnsembleRecord> records) {
  const auto x_col = parse_column(spec.x_column);
  const auto y_col = parse_column(spec.y_column);
  if (!x_col)
    throw std::invalid_argument("unknown column '" + spec.x_column + "'");
  if (!y_col)
    throw std::invalid_argument("unknown column '" + spec.y_column + "'");

  std::vector<std::vector<std::pair<double, double>>> overlay_points;
  for (FamilyKind kind : spec.overlays) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(kOverlayPoints);
    for (int i = 0; i < kOverlayPoints; ++i) {
      const double eps = static_cast<double>(i) / (kOverlayPoints - 1);
      const EnsembleRecord r = make_record(family(kind, eps));
      pts.emplace_back(record_value(r, *x_col), record_value(r, *y_col));
    }
    overlay_points.push_back(std::move(pts));
  }

  Range xr, yr;
  for (const auto& r : records) {
    xr.widen(record_value(r, *x_col));
    yr.widen(record_value(r, *y_col));
  }
  for (const auto& pts : overlay_points)
    for (const auto& [x, y] : pts) {
      xr.widen(x);
      yr.widen(y);
    }
  xr.finalize();
  yr.finalize();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double y) {
    return kTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         num(kWidth, "%.0f") + "\" height=\"" + num(kHeight, "%.0f") +
         "\" viewBox=\"0 0 " + num(kWidth, "%.0f") + " " +
         num(kHeight, "%.0f") + "\">\n";
  svg += "<rect width=\"" + num(kWidth, "%.0f") + "\" height=\"" +
         num(kHeight, "%.0f") + "\" fill=\"white\"/>\n";

  // axes
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) +
         "\" x2=\"" + num(kLeft + plot_w) + "\" y2=\"" + num(kTop + plot_h) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
         num(kLeft) + "\" y2=\"" + num(kTop + plot_h) +
         "\" stroke=\"black\"/>\n";

  constexpr int kTicks = 6;
  for (int t = 0; t < kTicks; ++t) {
    const double fx = xr.lo + (xr.hi - xr.lo) * t / (kTicks - 1);
    const double gx = px(fx);
    svg += "<line x1=\"" + num(gx) + "\" y1=\"" + num(kTop + plot_h) +
           "\" x2=\"" + num(gx) + "\" y2=\"" + num(kTop + plot_h + 5) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(gx) + "\" y=\"" + num(kTop + plot_h + 20) +
           "\" font-size=\"12\" text-anchor=\"middle\">" +
           escape_xml(num(fx, "%.3g")) + "</text>\n";
    const double fy = yr.lo + (yr.hi - yr.lo) * t / (kTicks - 1);
    const double gy = py(fy);
    svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(gy) +
           "\" x2=\"" + num(kLeft) + "\" y2=\"" + num(gy) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(kLeft - 9) + "\" y=\"" + num(gy + 4) +
           "\" font-size=\"12\" text-anchor=\"end\">" +
           escape_xml(num(fy, "%.3g")) + "</text>\n";
  }

  // axis labels
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" +
         num(kHeight - 14) + "\" font-size=\"14\" text-anchor=\"middle\">" +
         escape_xml(spec.x_column) + "</text>\n";
  svg += "<text x=\"18\" y=\"" + num(kTop + plot_h / 2) +
         "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "18 " +
         num(kTop + plot_h / 2) + ")\">" + escape_xml(spec.y_column) +
         "</text>\n";

  // sample points
  for (const auto& r : records) {
    svg += "<circle cx=\"" + num(px(record_value(r, *x_col))) + "\" cy=\"" +
           num(py(record_value(r, *y_col))) +
           "\" r=\"1.6\" fill=\"#1f77b4\" fill-opacity=\"0.45\"/>\n";
  }

  // family overlays
  for (std::size_t k = 0; k < spec.overlays.size(); ++k) {
    const OverlayStyle style = overlay_style(spec.overlays[k]);
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += style.color;
    svg += "\" stroke-width=\"1.8\"";
    if (style.dash) {
      svg += " stroke-dasharray=\"";
      svg += style.dash;
      svg += "\"";
    }
    svg += " points=\"";
    bool first = true;
    for (const auto& [x, y] : overlay_points[k]) {
      if (!first) svg += ' ';
      first = false;
      svg += num(px(x)) + "," + num(py(y));
    }
    svg += "\"/>\n";
  }

  // legend, bottom-right corner of the plot area
  if (!spec.overlays.empty()) {
    const double lx = kLeft + plot_w - 130.0;
    double ly = kTop + plot_h - 16.0 * static_cast<double>(spec.overlays.size()) - 10.0;
    for (FamilyKind kind : spec.overlays) {
      const OverlayStyle style = overlay_style(kind);
      svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" +
             num(lx + 26) + "\" y2=\"" + num(ly) + "\" stroke=\"";
      svg += style.color;
      svg += "\" stroke-width=\"1.8\"";
      if (style.dash) {
        svg += " stroke-dasharray=\"";
        svg += style.dash;
        svg += "\"";
      }
      svg += "/>\n";
      svg += "<text x=\"" + num(lx + 32) + "\" y=\"" + num(ly + 4) +
             "\" font-size=\"12\">" + escape_xml(family_name(kind)) +
             "</text>\n";
      ly += 16.0;
    }
  }

  svg += "</svg>\n";
  return svg;
}

void emit_svg_scatter(const FigureSpec& spec,
                      std::span<const EnsembleRecord> records,
                      const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os)
    throw std::runtime_error("emit_svg_scatter: cannot open '" +
                             path.string() + "' for writing");
  os << render_svg_scatter(spec, records);
  os.flush();
  if (!os)
    throw std::runtime_error("emit_svg_scatter: write to '" + path.string() +
                             "' failed");
}

}  // namespace xcoh
