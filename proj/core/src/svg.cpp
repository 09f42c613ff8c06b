#include "eulermerge/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace eulermerge {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps layout coordinates into the drawing area, flipping y.
struct Frame {
  double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
  double scale = 1, ox = 0, oy = 0, bottom = 0;

  void fit(double left, double top, double width, double height) {
    double w = std::max(max_x - min_x, 1e-9);
    double h = std::max(max_y - min_y, 1e-9);
    scale = std::min(width / w, height / h);
    ox = left + (width - w * scale) / 2.0;
    oy = top + (height - h * scale) / 2.0;
    bottom = h;
  }
  double x(double v) const { return ox + (v - min_x) * scale; }
  double y(double v) const { return oy + (bottom - (v - min_y)) * scale; }
};

}  // namespace

const std::array<std::string_view, 12>& palette() {
  static const std::array<std::string_view, 12> colors{
      "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
      "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#637939"};
  return colors;
}

std::string emit_svg(const Diagram& diagram, const SvgOptions& options) {
  Frame frame;
  frame.min_x = frame.min_y = std::numeric_limits<double>::infinity();
  frame.max_x = frame.max_y = -std::numeric_limits<double>::infinity();
  auto extend = [&](Point p) {
    frame.min_x = std::min(frame.min_x, p.x);
    frame.min_y = std::min(frame.min_y, p.y);
    frame.max_x = std::max(frame.max_x, p.x);
    frame.max_y = std::max(frame.max_y, p.y);
  };
  for (const auto& p : diagram.layout.positions) extend(p);
  for (const auto& c : diagram.curves)
    for (const auto& r : c.rings)
      for (const auto& cp : r) extend(cp.p);
  if (!std::isfinite(frame.min_x)) frame.min_x = frame.min_y = 0, frame.max_x = frame.max_y = 1;

  const double margin = 20.0;
  const bool legend = options.legend && !diagram.curves.empty();
  const double legend_width = legend ? std::min(320.0, options.width * 0.35) : 0.0;
  frame.fit(margin, margin, options.width - legend_width - 2 * margin, options.height - 2 * margin);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(options.width)
      << "\" height=\"" << num(options.height) << "\" viewBox=\"0 0 " << num(options.width) << " "
      << num(options.height) << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << num(options.width) << "\" height=\""
      << num(options.height) << "\" fill=\"white\"/>\n";

  const auto& pal = palette();
  out << "<g id=\"curves\">\n";
  for (std::size_t i = 0; i < diagram.curves.size(); ++i) {
    const auto& c = diagram.curves[i];
    auto color = pal[i % pal.size()];
    out << "<path class=\"curve\" data-label=\"" << escape(c.label) << "\" d=\"";
    bool first_ring = true;
    for (const auto& r : c.rings) {
      if (!first_ring) out << " ";
      first_ring = false;
      for (std::size_t k = 0; k < r.size(); ++k)
        out << (k == 0 ? "M" : " L") << num(frame.x(r[k].p.x)) << " " << num(frame.y(r[k].p.y));
      out << " Z";
    }
    out << "\" stroke=\"" << color << "\" stroke-width=\"2\" fill=\""
        << (options.fill ? std::string(color) : "none") << "\"";
    if (options.fill) out << " fill-opacity=\"0.12\"";
    out << " fill-rule=\"evenodd\"/>\n";
  }
  out << "</g>\n";

  if (options.show_dual) {
    const auto& pos = diagram.layout.positions;
    out << "<g id=\"dual\" stroke=\"#999999\" stroke-width=\"1\">\n";
    for (const auto& e : diagram.graph.edges())
      out << "<line x1=\"" << num(frame.x(pos[e.a].x)) << "\" y1=\"" << num(frame.y(pos[e.a].y))
          << "\" x2=\"" << num(frame.x(pos[e.b].x)) << "\" y2=\"" << num(frame.y(pos[e.b].y))
          << "\"/>\n";
    out << "</g>\n<g id=\"zones\" font-family=\"sans-serif\" font-size=\"10\">\n";
    for (std::size_t z = 0; z < pos.size(); ++z) {
      const auto& label = diagram.graph.zone_label(z);
      out << "<circle cx=\"" << num(frame.x(pos[z].x)) << "\" cy=\"" << num(frame.y(pos[z].y))
          << "\" r=\"3\" fill=\"#333333\"/>\n"
          << "<text x=\"" << num(frame.x(pos[z].x) + 4) << "\" y=\"" << num(frame.y(pos[z].y) - 4)
          << "\">" << escape(label.empty() ? "z0" : label.compact()) << "</text>\n";
    }
    out << "</g>\n";
  }

  out << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"14\" font-weight=\"bold\">\n";
  for (std::size_t i = 0; i < diagram.curves.size(); ++i) {
    const auto& c = diagram.curves[i];
    if (c.rings.empty()) continue;
    auto poly = c.polygons().front();
    Point m = centroid(poly);
    out << "<text x=\"" << num(frame.x(m.x)) << "\" y=\"" << num(frame.y(m.y))
        << "\" text-anchor=\"middle\" fill=\"" << pal[i % pal.size()] << "\">" << escape(c.label)
        << "</text>\n";
  }
  out << "</g>\n";

  if (legend) {
    double x = options.width - legend_width + 10.0;
    double y = margin + 10.0;
    out << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (std::size_t i = 0; i < diagram.curves.size(); ++i) {
      const auto& c = diagram.curves[i];
      out << "<g class=\"legend-entry\" data-label=\"" << escape(c.label) << "\">\n"
          << "<rect x=\"" << num(x) << "\" y=\"" << num(y - 9) << "\" width=\"10\" height=\"10\" fill=\""
          << pal[i % pal.size()] << "\"/>\n"
          << "<text class=\"legend-label\" x=\"" << num(x + 14) << "\" y=\"" << num(y)
          << "\" font-weight=\"bold\">" << escape(c.label) << "</text>\n";
      y += 14.0;
      auto it = diagram.graph.provenance().find(c.label);
      std::vector<std::string> originals =
          it != diagram.graph.provenance().end() ? it->second.items() : std::vector{c.label};
      for (const auto& o : originals) {
        auto name = options.names.find(o);
        std::string text = name != options.names.end() ? o + ": " + name->second : o;
        out << "<text class=\"legend-name\" x=\"" << num(x + 14) << "\" y=\"" << num(y) << "\">"
            << escape(text) << "</text>\n";
        y += 13.0;
      }
      out << "</g>\n";
      y += 6.0;
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string diagram_to_json(const Diagram& diagram, int indent) {
  using nlohmann::ordered_json;
  ordered_json doc;
  ordered_json zones = ordered_json::array();
  for (std::size_t z = 0; z < diagram.layout.positions.size(); ++z) {
    const auto& p = diagram.layout.positions[z];
    zones.push_back({{"label", diagram.graph.zone_label(z).items()}, {"x", p.x}, {"y", p.y}});
  }
  ordered_json curves = ordered_json::array();
  for (const auto& c : diagram.curves) {
    ordered_json rings = ordered_json::array();
    for (const auto& r : c.rings) {
      ordered_json ring = ordered_json::array();
      for (const auto& cp : r) ring.push_back({cp.p.x, cp.p.y});
      rings.push_back(std::move(ring));
    }
    curves.push_back({{"label", c.label}, {"rings", std::move(rings)}});
  }
  doc["zones"] = std::move(zones);
  doc["curves"] = std::move(curves);
  return doc.dump(indent) + "\n";
}

}  // namespace eulermerge
