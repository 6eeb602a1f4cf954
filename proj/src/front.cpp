#include "frontlab/front.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace frontlab {

// --- rational helpers -------------------------------------------------------

Rat parse_rat(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("empty number");
  auto bad = [&] { throw std::invalid_argument("bad rational '" + tok + "'"); };
  std::size_t slash = tok.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad();
  };
  if (slash == std::string::npos) {
    check_int(tok);
    return Rat(Int(tok));
  }
  std::string num = tok.substr(0, slash), den = tok.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (d == 0) bad();
  Rat r(Int(num), d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
  if (orient(a, b, p) != 0) return false;
  return sgn(Rat(dot(p - a, b - a))) >= 0 && sgn(Rat(dot(p - b, a - b))) >= 0;
}

std::optional<Pt> proper_intersection(const Pt& a, const Pt& b, const Pt& c,
                                      const Pt& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    Rat denom = cross(b - a, d - c);
    Rat t = cross(c - a, d - c) / denom;
    return Pt{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
  }
  return std::nullopt;
}

int angle_quadrant(const Vec& v) {
  int sx = sgn(v.x), sy = sgn(v.y);
  if (sx > 0 && sy >= 0) return 0;
  if (sx <= 0 && sy > 0) return 1;
  if (sx < 0 && sy <= 0) return 2;
  return 3;
}

bool angle_less(const Vec& a, const Vec& b) {
  int qa = angle_quadrant(a), qb = angle_quadrant(b);
  if (qa != qb) return qa < qb;
  return sgn(Rat(cross(a, b))) > 0;
}

// --- Front basics ------------------------------------------------------------

int Front::cusp_count() const {
  int c = 0;
  for (const auto& v : verts) c += v.cusp ? 1 : 0;
  return c;
}

std::vector<Side> Front::edge_sides() const {
  int n = size();
  std::vector<Side> sides(n);
  Side s = seed;
  sides[0] = s;
  for (int i = 1; i < n; ++i) {
    if (verts[i].cusp) s = flip(s);
    sides[i] = s;
  }
  return sides;
}

Front Front::reversed() const {
  // Reversing traversal reverses every edge direction; to keep the same
  // geometric normals every edge side flips.
  Front r;
  r.cones = cones;
  int n = size();
  r.verts.resize(n);
  r.verts[0] = verts[0];
  for (int i = 1; i < n; ++i) r.verts[i] = verts[n - i];
  auto sides = edge_sides();
  // First edge of r is old edge n-1 reversed.
  r.seed = flip(sides[n - 1]);
  return r;
}

Front Front::cooriented_flipped() const {
  Front r = *this;
  r.seed = flip(r.seed);
  return r;
}

Front Front::rotated_start(int k) const {
  Front r;
  r.cones = cones;
  int n = size();
  r.verts.resize(n);
  for (int i = 0; i < n; ++i) r.verts[i] = verts[mod(k + i)];
  r.seed = edge_sides()[mod(k)];
  return r;
}

// --- FRONT v1 parsing --------------------------------------------------------

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Front parse_front_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Front f;
  if (!j.contains("version") || j["version"].get<int>() != 1)
    throw ParseError(1, 1, "unsupported version");
  auto num = [](const nlohmann::json& v) -> Rat {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    return parse_rat(v.get<std::string>());
  };
  for (const auto& vj : j.at("vertices")) {
    FrontVertex v;
    v.p = Pt{num(vj.at("x")), num(vj.at("y"))};
    v.cusp = vj.value("cusp", false);
    f.verts.push_back(v);
  }
  std::string seed = j.at("seed").get<std::string>();
  if (seed == "LEFT")
    f.seed = Side::kLeft;
  else if (seed == "RIGHT")
    f.seed = Side::kRight;
  else
    throw ParseError(1, 1, "seed must be LEFT or RIGHT");
  if (j.contains("cones"))
    for (const auto& cj : j["cones"]) {
      Cone c;
      c.p = Pt{num(cj.at("x")), num(cj.at("y"))};
      c.mu = cj.at("mu").get<int>();
      if (c.mu < 2) throw ParseError(1, 1, "cone multiplicity must be >= 2");
      f.cones.push_back(c);
    }
  return f;
}

}  // namespace

Front parse_front(const std::string& text) {
  // JSON mirror: a document that starts with '{'.
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      try {
        return parse_front_json(text);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("json: ") + e.what());
      }
    }
    break;
  }

  Front f;
  bool have_header = false, have_seed = false;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks[0] != "FRONT")
        throw ParseError(lineno, 1, "expected FRONT header");
      if (toks.size() != 2 || toks[1] != "1")
        throw ParseError(lineno, 7, "unsupported FRONT version");
      have_header = true;
      continue;
    }
    if (toks[0] == "V") {
      if (toks.size() != 3 && toks.size() != 4)
        throw ParseError(lineno, 1, "V wants: V <x> <y> [CUSP]");
      FrontVertex v;
      try {
        v.p = Pt{parse_rat(toks[1]), parse_rat(toks[2])};
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, 3, e.what());
      }
      if (toks.size() == 4) {
        if (toks[3] != "CUSP") throw ParseError(lineno, 1, "trailing token");
        v.cusp = true;
      }
      f.verts.push_back(v);
    } else if (toks[0] == "SEED") {
      if (have_seed) throw ParseError(lineno, 1, "duplicate SEED");
      if (toks.size() != 2 || (toks[1] != "LEFT" && toks[1] != "RIGHT"))
        throw ParseError(lineno, 6, "SEED wants LEFT or RIGHT");
      f.seed = toks[1] == "LEFT" ? Side::kLeft : Side::kRight;
      have_seed = true;
    } else if (toks[0] == "CONE") {
      if (toks.size() != 4) throw ParseError(lineno, 1, "CONE wants: CONE <x> <y> <mu>");
      Cone c;
      try {
        c.p = Pt{parse_rat(toks[1]), parse_rat(toks[2])};
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, 6, e.what());
      }
      try {
        c.mu = std::stoi(toks[3]);
      } catch (...) {
        throw ParseError(lineno, 1, "bad cone multiplicity");
      }
      if (c.mu < 2) throw ParseError(lineno, 1, "cone multiplicity must be >= 2");
      f.cones.push_back(c);
    } else {
      throw ParseError(lineno, 1, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_header) throw ParseError(1, 1, "missing FRONT header");
  if (!have_seed) throw ParseError(lineno, 1, "missing SEED");
  return f;
}

std::string serialize_front(const Front& f) {
  std::ostringstream os;
  os << "FRONT 1\n";
  for (const auto& v : f.verts) {
    os << "V " << rat_str(v.p.x) << " " << rat_str(v.p.y);
    if (v.cusp) os << " CUSP";
    os << "\n";
  }
  os << "SEED " << (f.seed == Side::kLeft ? "LEFT" : "RIGHT") << "\n";
  for (const auto& c : f.cones)
    os << "CONE " << rat_str(c.p.x) << " " << rat_str(c.p.y) << " " << c.mu << "\n";
  return os.str();
}

std::string front_to_json(const Front& f) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : f.verts) {
    nlohmann::ordered_json vj;
    vj["x"] = rat_str(v.p.x);
    vj["y"] = rat_str(v.p.y);
    vj["cusp"] = v.cusp;
    j["vertices"].push_back(vj);
  }
  j["seed"] = f.seed == Side::kLeft ? "LEFT" : "RIGHT";
  j["cones"] = nlohmann::json::array();
  for (const auto& c : f.cones) {
    nlohmann::ordered_json cj;
    cj["x"] = rat_str(c.p.x);
    cj["y"] = rat_str(c.p.y);
    cj["mu"] = c.mu;
    j["cones"].push_back(cj);
  }
  return j.dump(2);
}

// --- validation ---------------------------------------------------------------

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.message << "\n";
  return os.str();
}

ValidationReport validate(const Front& f, bool relaxed) {
  ValidationReport rep;
  auto add = [&](Violation::Code c, int idx, const std::string& m) {
    rep.violations.push_back({c, idx, m});
  };
  int n = f.size();
  if (n < 3) {
    add(Violation::kTooFewVertices, -1, "fewer than 3 vertices");
    return rep;
  }
  for (int i = 0; i < n; ++i)
    if (f.vertex(i) == f.vertex(i + 1))
      add(Violation::kDuplicatePoint, i,
          "consecutive duplicate point at vertex " + std::to_string(i));
  if (!rep.ok()) return rep;

  if (f.cusp_count() % 2 != 0)
    add(Violation::kOddCuspCount, -1, "odd number of cusp vertices");

  // Per-vertex turning constraints.  Vertex i joins edges i-1 and i.
  for (int i = 0; i < n; ++i) {
    Vec din = f.edge_dir(i - 1), dout = f.edge_dir(i);
    int d = sgn(Rat(dot(din, dout)));
    int c = sgn(Rat(cross(din, dout)));
    if (f.is_cusp(i)) {
      if (c == 0 && d > 0)
        add(Violation::kDegenerateCusp, i,
            "cusp with collinear equal directions at vertex " + std::to_string(i));
      else if (!relaxed && d >= 0)
        add(Violation::kCuspNotFold, i,
            "cusp vertex " + std::to_string(i) + " is not a fold (dot >= 0)");
      else if (!relaxed && c == 0)
        add(Violation::kDegenerateCusp, i,
            "cusp with exactly opposite directions at vertex " + std::to_string(i));
    } else {
      if (c == 0 && d < 0)
        add(Violation::kRegularTurnTooSharp, i,
            "reversal at regular vertex " + std::to_string(i));
      else if (!relaxed && d <= 0)
        add(Violation::kRegularTurnTooSharp, i,
            "turn at regular vertex " + std::to_string(i) + " not within (-pi/2, pi/2)");
    }
  }

  // Pairwise edge genericity.
  std::vector<Pt> cuts;
  for (int i = 0; i < n; ++i) {
    Pt a = f.vertex(i), b = f.vertex(i + 1);
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      Pt c = f.vertex(j), d = f.vertex(j + 1);
      if (sgn(Rat(cross(b - a, d - c))) == 0) {
        // Parallel: reject any collinear overlap beyond a shared vertex.
        if (orient(a, b, c) == 0) {
          bool overlap = false;
          if (!adjacent) {
            overlap = on_segment(a, b, c) || on_segment(a, b, d) ||
                      on_segment(c, d, a) || on_segment(c, d, b);
          } else {
            // Adjacent collinear edges overlap iff they fold back.
            Pt shared = (j == i + 1) ? b : a;
            Pt other1 = (j == i + 1) ? a : b;
            Pt other2 = (j == i + 1) ? d : c;
            overlap = sgn(Rat(dot(other1 - shared, other2 - shared))) > 0;
          }
          if (overlap)
            add(Violation::kCollinearOverlap, i,
                "edges " + std::to_string(i) + " and " + std::to_string(j) +
                    " overlap along a line");
        }
        continue;
      }
      if (adjacent) continue;
      // Non-adjacent: endpoints may not touch the other edge at all.
      bool endpoint_touch = on_segment(a, b, c) || on_segment(a, b, d) ||
                            on_segment(c, d, a) || on_segment(c, d, b);
      if (endpoint_touch) {
        add(Violation::kVertexOnEdge, j,
            "vertex of edge " + std::to_string(j) + " lies on edge " +
                std::to_string(i) + " (or vice versa)");
        continue;
      }
      if (auto p = proper_intersection(a, b, c, d)) cuts.push_back(*p);
    }
  }
  std::sort(cuts.begin(), cuts.end(), lex_less);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    if (cuts[k] == cuts[k + 1])
      add(Violation::kTriplePoint, -1,
          "three or more edges pass through (" + rat_str(cuts[k].x) + ", " +
              rat_str(cuts[k].y) + ")");
  return rep;
}

// --- index (degree of the coorienting-normal map) ------------------------------

namespace {

// Strictly inside the open ccw arc from a to b (arc shorter than pi).
bool in_open_ccw_arc(const Vec& a, const Vec& b, const Vec& u) {
  return sgn(Rat(cross(a, u))) > 0 && sgn(Rat(cross(u, b))) > 0;
}

Vec probe_direction(const std::vector<Vec>& avoid) {
  for (long k = 0;; ++k) {
    for (long sign : {1L, -1L}) {
      if (k == 0 && sign < 0) continue;
      Vec u{1, k * sign};
      bool ok = true;
      for (const auto& v : avoid)
        if (sgn(Rat(cross(u, v))) == 0) {
          ok = false;
          break;
        }
      if (ok) return u;
    }
  }
}

}  // namespace

int index_of(const Front& f) {
  int n = f.size();
  auto sides = f.edge_sides();
  std::vector<Vec> normals(n);
  for (int i = 0; i < n; ++i) normals[i] = Front::normal_of(f.edge_dir(i), sides[i]);

  // Flag consistency around the loop; otherwise the normal path does not close.
  if (f.cusp_count() % 2 != 0)
    throw FrontError("index undefined: odd cusp count (normal path does not close)");

  Vec u = probe_direction(normals);
  Vec mu = -u;
  long deg2 = 0;
  for (int i = 0; i < n; ++i) {
    const Vec& a = normals[f.mod(i - 1)];
    const Vec& b = normals[i];
    int c = sgn(Rat(cross(a, b)));
    int d = sgn(Rat(dot(a, b)));
    if (c == 0) {
      if (d < 0)
        throw FrontError("index undefined: antipodal normals at vertex " +
                         std::to_string(i));
      continue;  // no turn
    }
    if (c > 0) {
      if (in_open_ccw_arc(a, b, u)) ++deg2;
      if (in_open_ccw_arc(a, b, mu)) ++deg2;
    } else {
      if (in_open_ccw_arc(b, a, u)) --deg2;
      if (in_open_ccw_arc(b, a, mu)) --deg2;
    }
  }
  if (deg2 % 2 != 0)
    throw FrontError("internal: normal turning is not a multiple of 2*pi");
  return static_cast<int>(deg2 / 2);
}

// --- cusp data -----------------------------------------------------------------

CuspData cusp_data(const Front& f) {
  CuspData out;
  int n = f.size();
  auto sides = f.edge_sides();
  int plus = 0, minus = 0;
  for (int i = 0; i < n; ++i) {
    if (!f.is_cusp(i)) continue;
    Vec nin = Front::normal_of(f.edge_dir(i - 1), sides[f.mod(i - 1)]);
    Vec nout = Front::normal_of(f.edge_dir(i), sides[i]);
    int s = sgn(Rat(cross(nin, nout)));
    if (s == 0)
      throw FrontError("degenerate cusp at vertex " + std::to_string(i) +
                       ": zero residual normal turn");
    out.signs.push_back(s);
    (s > 0 ? plus : minus)++;
  }
  out.c_plus = Half::of_twice(plus);
  out.c_minus = Half::of_twice(minus);
  return out;
}

// --- double points ---------------------------------------------------------------

std::vector<DoublePoint> double_points(const Front& f) {
  int n = f.size();
  auto sides = f.edge_sides();
  std::vector<DoublePoint> dps;
  for (int i = 0; i < n; ++i) {
    Pt a = f.vertex(i), b = f.vertex(i + 1);
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      Pt c = f.vertex(j), d = f.vertex(j + 1);
      if (sgn(Rat(cross(b - a, d - c))) == 0) {
        if (orient(a, b, c) == 0 &&
            (on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a)))
          throw FrontError("non-transverse overlap between edges " +
                           std::to_string(i) + " and " + std::to_string(j));
        continue;
      }
      auto p = proper_intersection(a, b, c, d);
      if (!p) {
        // Touching configurations are genericity errors.
        if (on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
            on_segment(c, d, b))
          throw FrontError("non-transverse touching between edges " +
                           std::to_string(i) + " and " + std::to_string(j));
        continue;
      }
      DoublePoint dp;
      dp.pos = *p;
      dp.edge_a = i;
      dp.edge_b = j;
      dp.sign_a = sides[i] == Side::kRight ? +1 : -1;
      dp.sign_b = sides[j] == Side::kRight ? +1 : -1;
      dp.eps = dp.sign_a * dp.sign_b;
      dps.push_back(dp);
    }
  }
  std::sort(dps.begin(), dps.end(),
            [](const DoublePoint& x, const DoublePoint& y) {
              return lex_less(x.pos, y.pos);
            });
  for (std::size_t k = 0; k < dps.size(); ++k) {
    if (k + 1 < dps.size() && dps[k].pos == dps[k + 1].pos)
      throw FrontError("triple point in double_points");
    dps[k].id = static_cast<int>(k);
  }
  return dps;
}

// --- winding number ---------------------------------------------------------------

bool point_on_front(const Front& f, const Pt& p) {
  for (int i = 0; i < f.size(); ++i)
    if (on_segment(f.vertex(i), f.vertex(i + 1), p)) return true;
  return false;
}

int winding_number_ray(const Front& f, const Pt& p, const Vec& ray) {
  if (point_on_front(f, p)) throw FrontError("winding number of a point on the curve");
  int n = f.size();
  long w = 0;
  for (int i = 0; i < n; ++i) {
    Pt a = f.vertex(i), b = f.vertex(i + 1);
    Rat denom = cross(ray, b - a);
    if (sgn(denom) == 0) {
      // Edge parallel to the ray; reject if it lies on the ray itself.
      if (orient(p, Pt{p.x + ray.x, p.y + ray.y}, a) == 0) {
        Rat ta = dot(a - p, ray), tb = dot(b - p, ray);
        if (sgn(ta) > 0 || sgn(tb) > 0)
          throw FrontError("ray not generic: collinear edge");
      }
      continue;
    }
    // Solve p + t*ray = a + s*(b-a).
    Rat s = cross(ray, p - a) / denom;  // position along the edge
    Rat t = cross(a - p, b - a) / denom;  // position along the ray
    if (sgn(s) < 0 || cmp(s, Rat(1)) > 0) continue;
    if (sgn(s) == 0 || cmp(s, Rat(1)) == 0) {
      if (sgn(t) > 0) throw FrontError("ray not generic: passes through a vertex");
      continue;
    }
    if (sgn(t) <= 0) continue;
    w += sgn(denom) > 0 ? +1 : -1;
  }
  return static_cast<int>(w);
}

int winding_number(const Front& f, const Pt& p) {
  for (long k = 0;; ++k) {
    for (long s : {1L, -1L}) {
      if (k == 0 && s < 0) continue;
      try {
        return winding_number_ray(f, p, Vec{1, k * s});
      } catch (const FrontError& e) {
        if (std::string(e.what()).find("not generic") == std::string::npos) throw;
      }
    }
  }
}

// --- smoothing splits ---------------------------------------------------------------

std::pair<Front, Front> smooth_split_labeled(const Front& f, const DoublePoint& v,
                                             int plus_corner_sign) {
  int n = f.size();
  int i = v.edge_a, j = v.edge_b;
  if (i < 0 || j >= n || i >= j)
    throw FrontError("smooth_split: double point does not belong to this front");
  auto sides = f.edge_sides();
  bool joint_cusp = sides[i] != sides[j];

  auto build = [&](int out_edge, int in_edge) {
    // Component leaving the joint along the tail of out_edge and returning
    // along the head of in_edge.
    Front g;
    g.seed = sides[out_edge];
    g.verts.push_back({v.pos, joint_cusp});
    for (int k = f.mod(out_edge + 1);; k = f.mod(k + 1)) {
      g.verts.push_back(f.verts[k]);
      if (k == in_edge) break;
    }
    return g;
  };

  Front comp_y = build(/*out=*/i, /*in=*/j);  // continues past the first passage
  Front comp_x = build(/*out=*/j, /*in=*/i);  // continues past the second passage

  // Corner turn of comp_y at the joint: incoming along edge j, outgoing along
  // edge i.  comp_x turns the opposite way.
  int corner_y = sgn(Rat(cross(f.edge_dir(j), f.edge_dir(i))));
  if (corner_y == 0) throw FrontError("smooth_split: parallel branches");
  if (corner_y == plus_corner_sign) return {comp_y, comp_x};
  return {comp_x, comp_y};
}

std::pair<Front, Front> smooth_split(const Front& f, const DoublePoint& v) {
  return smooth_split_labeled(f, v, kSplitPlusCornerSign);
}

}  // namespace frontlab
