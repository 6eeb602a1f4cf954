#include "frontlab/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace frontlab {

Shadow shadow_of_front(const Arrangement& arr) {
  Shadow s;
  s.total_compact_gleam = Half::of_twice(0);
  for (const auto& r : arr.regions()) {
    ShadowRegion sr;
    sr.id = r.id;
    sr.compact = r.compact;
    sr.stats = r.stats;
    sr.corner_visits = r.stats.corner_visits;
    sr.sample = r.sample;
    sr.ind = arr.region_index(r.id);
    if (r.compact) {
      // gl = chi + (C_in - C_out - V)/2, kept exact as a doubled integer.
      sr.gleam = Half::of_twice(2 * r.stats.chi + r.stats.c_in - r.stats.c_out -
                                r.stats.v_corners);
      s.total_compact_gleam = s.total_compact_gleam + *sr.gleam;
    }
    s.regions.push_back(std::move(sr));
  }
  return s;
}

Shadow shadow_of_front(const Front& f) {
  Arrangement arr(f);
  return shadow_of_front(arr);
}

bool parity_check(const Shadow& s) {
  for (const auto& r : s.regions) {
    if (!r.gleam) continue;
    bool even_corners = r.corner_visits % 2 == 0;
    if (r.gleam->is_integer() != even_corners) return false;
  }
  return true;
}

int sigma(const Shadow& s) {
  Half acc = Half::of_twice(0);
  for (const auto& r : s.regions) {
    if (!r.gleam) {
      if (r.ind != 0)
        throw FrontError("sigma: undefined gleam on a region with nonzero index");
      continue;
    }
    acc = acc + (*r.gleam) * r.ind;
  }
  if (!acc.is_integer()) throw FrontError("sigma: non-integer value");
  return static_cast<int>(acc.as_integer());
}

namespace {

double approx(const Rat& r) { return r.get_d(); }

struct Mapper {
  double minx, miny, maxy, scale, margin;
  double x(const Pt& p) const { return margin + (approx(p.x) - minx) * scale; }
  double y(const Pt& p) const { return margin + (maxy - approx(p.y)) * scale; }
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Front& f, const Shadow& s, const RenderOptions& opt) {
  double minx = 0, miny = 0, maxx = 0, maxy = 0;
  bool first = true;
  auto grow = [&](const Pt& p) {
    double px = approx(p.x), py = approx(p.y);
    if (first) {
      minx = maxx = px;
      miny = maxy = py;
      first = false;
    } else {
      minx = std::min(minx, px);
      maxx = std::max(maxx, px);
      miny = std::min(miny, py);
      maxy = std::max(maxy, py);
    }
  };
  for (const auto& v : f.verts) grow(v.p);
  for (const auto& c : f.cones) grow(c.p);
  Mapper m{minx, miny, maxy, opt.scale, opt.margin};
  double w = (maxx - minx) * opt.scale + 2 * opt.margin;
  double h = (maxy - miny) * opt.scale + 2 * opt.margin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w)
     << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h)
     << "\">\n";
  os << "<path fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" d=\"";
  for (int i = 0; i < f.size(); ++i) {
    const Pt& p = f.vertex(i);
    os << (i == 0 ? "M" : "L") << fmt(m.x(p)) << " " << fmt(m.y(p)) << " ";
  }
  os << "Z\"/>\n";
  for (int i = 0; i < f.size(); ++i)
    if (f.is_cusp(i))
      os << "<circle cx=\"" << fmt(m.x(f.vertex(i))) << "\" cy=\""
         << fmt(m.y(f.vertex(i))) << "\" r=\"3\" fill=\"red\"/>\n";
  auto dps = double_points(f);
  for (const auto& dp : dps) {
    os << "<circle cx=\"" << fmt(m.x(dp.pos)) << "\" cy=\"" << fmt(m.y(dp.pos))
       << "\" r=\"2.5\" fill=\"none\" stroke=\"blue\"/>\n"
       << "<text x=\"" << fmt(m.x(dp.pos) + 4) << "\" y=\"" << fmt(m.y(dp.pos) - 4)
       << "\" font-size=\"9\" fill=\"blue\">v" << dp.id
       << (dp.eps > 0 ? "+" : "-") << "</text>\n";
  }
  if (opt.label_regions) {
    for (const auto& r : s.regions) {
      if (!r.gleam) continue;
      os << "<text x=\"" << fmt(m.x(r.sample)) << "\" y=\"" << fmt(m.y(r.sample))
         << "\" font-size=\"11\" fill=\"darkgreen\" text-anchor=\"middle\">"
         << r.gleam->str() << "</text>\n";
    }
  }
  for (const auto& c : f.cones)
    os << "<path stroke=\"purple\" stroke-width=\"1.2\" d=\"M"
       << fmt(m.x(c.p) - 4) << " " << fmt(m.y(c.p) + 4) << " L" << fmt(m.x(c.p) + 4)
       << " " << fmt(m.y(c.p) - 4) << " M" << fmt(m.x(c.p) - 4) << " "
       << fmt(m.y(c.p) - 4) << " L" << fmt(m.x(c.p) + 4) << " " << fmt(m.y(c.p) + 4)
       << "\"/><text x=\"" << fmt(m.x(c.p) + 5) << "\" y=\"" << fmt(m.y(c.p) + 12)
       << "\" font-size=\"9\" fill=\"purple\">mu=" << c.mu << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace frontlab
