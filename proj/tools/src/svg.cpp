#include "unitcircle_cli/svg.hpp"

#include <cstdio>
#include <sstream>

#include "unitcircle/errors.hpp"

namespace unitcircle::cli {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

std::string label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Frame {
  double x0, x1, y0, y1;
  double left, right, top, bottom;

  double px(double x) const { return left + (x - x0) / (x1 - x0) * (right - left); }
  double py(double y) const { return bottom - (y - y0) / (y1 - y0) * (bottom - top); }
};

}  // namespace

std::string region_to_svg(const RegionDataset& d, const std::string& tool_version, const SvgStyle& style) {
  if (d.s != 2) throw IndexOutOfRange("svg output needs s = 2");
  const double b1 = d.box_hat.bound(1).get_d(), b2 = d.box_hat.bound(2).get_d();
  const Frame f{-style.frame * b1, style.frame * b1, -style.frame * b2, style.frame * b2,
                double(style.margin), double(style.width - style.margin / 2),
                double(style.margin / 2), double(style.height - style.margin)};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << style.height
     << "\" viewBox=\"0 0 " << style.width << " " << style.height << "\">\n";
  os << "<!-- unitcircle " << tool_version << " region N=" << d.n << " s=" << d.s
     << " step=" << d.lattice.step.get_str() << " -->\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<defs><clipPath id=\"plot\"><rect x=\"" << num(f.left) << "\" y=\"" << num(f.top) << "\" width=\""
     << num(f.right - f.left) << "\" height=\"" << num(f.bottom - f.top) << "\"/></clipPath></defs>\n";

  // Inside lattice points as cells, merged into runs along gamma_1.
  const std::vector<long> sizes = d.lattice.axis_sizes();
  const double h = d.lattice.step.get_d();
  const double gx0 = d.lattice.lo[0].get_d(), gy0 = d.lattice.lo[1].get_d();
  os << "<g clip-path=\"url(#plot)\" fill=\"#c6dbef\" stroke=\"none\" shape-rendering=\"crispEdges\">\n";
  for (long iy = 0; iy < sizes[1]; ++iy) {
    long ix = 0;
    while (ix < sizes[0]) {
      if (!d.grid[static_cast<std::size_t>(iy * sizes[0] + ix)].inside) {
        ++ix;
        continue;
      }
      const long start = ix;
      while (ix < sizes[0] && d.grid[static_cast<std::size_t>(iy * sizes[0] + ix)].inside) ++ix;
      const double xa = f.px(gx0 + (start - 0.5) * h), xb = f.px(gx0 + (ix - 0.5) * h);
      const double ya = f.py(gy0 + (iy + 0.5) * h), yb = f.py(gy0 + (iy - 0.5) * h);
      os << "<rect x=\"" << num(xa) << "\" y=\"" << num(ya) << "\" width=\"" << num(xb - xa) << "\" height=\""
         << num(yb - ya) << "\"/>\n";
    }
  }
  os << "</g>\n";

  // Axes and frame.
  os << "<g stroke=\"#999999\" stroke-width=\"0.8\">\n";
  os << "<line x1=\"" << num(f.px(f.x0)) << "\" y1=\"" << num(f.py(0)) << "\" x2=\"" << num(f.px(f.x1)) << "\" y2=\""
     << num(f.py(0)) << "\"/>\n";
  os << "<line x1=\"" << num(f.px(0)) << "\" y1=\"" << num(f.py(f.y0)) << "\" x2=\"" << num(f.px(0)) << "\" y2=\""
     << num(f.py(f.y1)) << "\"/>\n";
  os << "</g>\n";
  os << "<rect x=\"" << num(f.left) << "\" y=\"" << num(f.top) << "\" width=\"" << num(f.right - f.left)
     << "\" height=\"" << num(f.bottom - f.top) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // Dashed: bound box and l1 ball.
  const double r = d.box_tilde_radius.get_d();
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\">\n";
  os << "<rect id=\"box-hat\" x=\"" << num(f.px(-b1)) << "\" y=\"" << num(f.py(b2)) << "\" width=\""
     << num(f.px(b1) - f.px(-b1)) << "\" height=\"" << num(f.py(-b2) - f.py(b2)) << "\"/>\n";
  os << "<polygon id=\"box-tilde\" points=\"" << num(f.px(r)) << "," << num(f.py(0)) << " " << num(f.px(0)) << ","
     << num(f.py(r)) << " " << num(f.px(-r)) << "," << num(f.py(0)) << " " << num(f.px(0)) << "," << num(f.py(-r))
     << "\"/>\n";
  os << "</g>\n";

  // Solid: boundary curves. U_tau is split wherever a sample is off the circle.
  os << "<g fill=\"none\" stroke=\"#08306b\" stroke-width=\"1.6\" stroke-linejoin=\"round\">\n";
  for (const auto& seg : d.segments) {
    os << "<polyline class=\"" << seg.name << "\" points=\"" << num(f.px(seg.from[0].get_d())) << ","
       << num(f.py(seg.from[1].get_d())) << " " << num(f.px(seg.to[0].get_d())) << "," << num(f.py(seg.to[1].get_d()))
       << "\"/>\n";
  }
  for (const auto& curve : d.curves) {
    if (curve.t.empty()) continue;  // straight pieces are drawn from their exact ends
    std::size_t i = 0;
    while (i < curve.points.size()) {
      if (!curve.on_circle[i]) {
        ++i;
        continue;
      }
      std::ostringstream pts;
      std::size_t count = 0;
      for (; i < curve.points.size() && curve.on_circle[i]; ++i, ++count)
        pts << (count ? " " : "") << num(f.px(curve.points[i][0])) << "," << num(f.py(curve.points[i][1]));
      if (count > 1) os << "<polyline class=\"" << curve.name << "\" points=\"" << pts.str() << "\"/>\n";
    }
  }
  os << "</g>\n";

  // Ticks at the box bounds and labels.
  os << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (double x : {-b1, 0.0, b1})
    os << "<text x=\"" << num(f.px(x)) << "\" y=\"" << num(f.bottom + 16) << "\" text-anchor=\"middle\">"
       << label(x) << "</text>\n";
  for (double y : {-b2, 0.0, b2})
    os << "<text x=\"" << num(f.left - 6) << "\" y=\"" << num(f.py(y) + 4) << "\" text-anchor=\"end\">" << label(y)
       << "</text>\n";
  os << "<text x=\"" << num((f.left + f.right) / 2) << "\" y=\"" << num(f.bottom + 36)
     << "\" text-anchor=\"middle\">&#947;1</text>\n";
  os << "<text x=\"" << num(f.left - 44) << "\" y=\"" << num((f.top + f.bottom) / 2)
     << "\" text-anchor=\"middle\">&#947;2</text>\n";
  os << "<text x=\"" << num(f.right - 8) << "\" y=\"" << num(f.top + 18) << "\" text-anchor=\"end\">N = " << d.n
     << ", s = " << d.s << "</text>\n";
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace unitcircle::cli
