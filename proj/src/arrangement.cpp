#include "frontlab/arrangement.hpp"

#include <algorithm>
#include <map>

namespace frontlab {

int Arrangement::dart_tail(int d) const {
  const ArrArc& a = arcs_[dart_arc(d)];
  return dart_forward(d) ? a.from : a.to;
}

int Arrangement::dart_head(int d) const {
  const ArrArc& a = arcs_[dart_arc(d)];
  return dart_forward(d) ? a.to : a.from;
}

Vec Arrangement::dart_dir(int d) const {
  const ArrArc& a = arcs_[dart_arc(d)];
  Vec v = nodes_[a.to].p - nodes_[a.from].p;
  return dart_forward(d) ? v : -v;
}

Arrangement::Arrangement(const Front& f) : front_(&f) {
  dps_ = double_points(f);
  int n = f.size();
  auto sides = f.edge_sides();
  edge_normals_.resize(n);
  for (int i = 0; i < n; ++i)
    edge_normals_[i] = Front::normal_of(f.edge_dir(i), sides[i]);

  for (int i = 0; i < n; ++i)
    nodes_.push_back({f.is_cusp(i) ? ArrNode::kCuspVertex : ArrNode::kVertex,
                      f.vertex(i), i});
  for (const auto& dp : dps_)
    nodes_.push_back({ArrNode::kCross, dp.pos, dp.id});
  auto cross_node = [&](int dp_id) { return n + dp_id; };

  // Split every front edge at its crossings, ordered along the edge.
  for (int i = 0; i < n; ++i) {
    Pt a = f.vertex(i);
    Vec dir = f.edge_dir(i);
    std::vector<std::pair<Rat, int>> cuts;  // (parameter along edge, node)
    for (const auto& dp : dps_) {
      if (dp.edge_a != i && dp.edge_b != i) continue;
      Rat t = dot(dp.pos - a, dir) / dot(dir, dir);
      cuts.emplace_back(t, cross_node(dp.id));
    }
    std::sort(cuts.begin(), cuts.end(),
              [](const auto& x, const auto& y) { return cmp(x.first, y.first) < 0; });
    int prev = i;
    for (const auto& [t, node] : cuts) {
      arcs_.push_back({prev, node, i});
      prev = node;
    }
    arcs_.push_back({prev, f.mod(i + 1), i});
  }

  // Rotation system: outgoing darts sorted counterclockwise at every node.
  rotation_.assign(nodes_.size(), {});
  for (int a = 0; a < static_cast<int>(arcs_.size()); ++a) {
    rotation_[arcs_[a].from].push_back(2 * a);
    rotation_[arcs_[a].to].push_back(2 * a + 1);
  }
  for (auto& rot : rotation_)
    std::sort(rot.begin(), rot.end(), [&](int d1, int d2) {
      return angle_less(dart_dir(d1), dart_dir(d2));
    });
  rot_pos_.assign(2 * arcs_.size(), -1);
  for (const auto& rot : rotation_)
    for (std::size_t k = 0; k < rot.size(); ++k)
      rot_pos_[rot[k]] = static_cast<int>(k);

  build_faces();
}

void Arrangement::build_faces() {
  int ndarts = static_cast<int>(2 * arcs_.size());
  face_of_.assign(ndarts, -1);

  // Face on the left of each dart: after arriving at the head along d, the
  // walk continues with the dart one step clockwise from the reversal of d.
  auto next_in_face = [&](int d) {
    int tw = d ^ 1;
    int w = dart_tail(tw);
    const auto& rot = rotation_[w];
    int pos = rot_pos_[tw];
    int prev = (pos + static_cast<int>(rot.size()) - 1) % static_cast<int>(rot.size());
    return rot[prev];
  };

  for (int d0 = 0; d0 < ndarts; ++d0) {
    if (face_of_[d0] != -1) continue;
    Region r;
    r.id = static_cast<int>(regions_.size());
    int d = d0;
    do {
      face_of_[d] = r.id;
      r.darts.push_back(d);
      d = next_in_face(d);
    } while (d != d0);
    regions_.push_back(std::move(r));
  }

  // The outer face is the unique walk with clockwise (negative) total area.
  outer_ = -1;
  for (auto& r : regions_) {
    Rat area2(0);
    for (int d : r.darts) {
      const Pt& a = nodes_[dart_tail(d)].p;
      const Pt& b = nodes_[dart_head(d)].p;
      area2 += cross(a, b);
    }
    r.compact = sgn(area2) > 0;
    if (!r.compact) {
      if (outer_ != -1) throw FrontError("arrangement: several unbounded faces");
      outer_ = r.id;
    }
  }
  if (outer_ == -1) throw FrontError("arrangement: no unbounded face");

  for (auto& r : regions_) {
    r.sample = face_sample(r.darts, 0);
    r.stats = compute_stats(r.darts, r.compact, kCornerRuleSame);
  }
}

bool Arrangement::segment_clear(const Pt& a, const Pt& b) const {
  // True if the open segment (a, b) meets no arc of the subdivision.
  for (const auto& arc : arcs_) {
    const Pt& c = nodes_[arc.from].p;
    const Pt& d = nodes_[arc.to].p;
    if (proper_intersection(a, b, c, d)) return false;
    // Any touching counts as blocked, except contact exactly at b (which is
    // an interior point of its own arc by construction).
    if (on_segment(a, b, c) && !(c == b)) return false;
    if (on_segment(a, b, d) && !(d == b)) return false;
    if (on_segment(c, d, a)) return false;
  }
  return true;
}

Pt Arrangement::face_sample(const std::vector<int>& walk, int start_dart) const {
  int d = walk[start_dart];
  Pt a = nodes_[dart_tail(d)].p, b = nodes_[dart_head(d)].p;
  Pt m{(a.x + b.x) / 2, (a.y + b.y) / 2};
  Vec off = perp(b - a);  // left of the dart, where its face lies
  Rat scale(1, 4);
  for (int iter = 0; iter < 256; ++iter) {
    Pt p{m.x + off.x * scale, m.y + off.y * scale};
    if (segment_clear(p, m)) return p;
    scale /= 16;
  }
  throw FrontError("arrangement: could not place a region sample point");
}

Pt Arrangement::alternate_sample(int region_id) const {
  const Region& r = regions_[region_id];
  int k = static_cast<int>(r.darts.size()) / 2;
  return face_sample(r.darts, k);
}

int Arrangement::region_index(int region_id) const {
  return winding_number(*front_, regions_[region_id].sample);
}

int Arrangement::locate(const Pt& p) const {
  if (point_on_front(*front_, p))
    throw FrontError("locate: point lies on the curve");
  for (long k = 0;; ++k) {
    for (long s : {1L, -1L}) {
      if (k == 0 && s < 0) continue;
      Vec ray{1, k * s};
      // Find the first arc hit along the ray; the face on the near side wins.
      bool generic = true;
      Rat best_t;
      int best_arc = -1;
      for (int a = 0; a < static_cast<int>(arcs_.size()) && generic; ++a) {
        const Pt& c = nodes_[arcs_[a].from].p;
        const Pt& d = nodes_[arcs_[a].to].p;
        Rat denom = cross(ray, d - c);
        if (sgn(denom) == 0) {
          if (orient(p, Pt{p.x + ray.x, p.y + ray.y}, c) == 0 &&
              (sgn(Rat(dot(c - p, ray))) > 0 || sgn(Rat(dot(d - p, ray))) > 0))
            generic = false;
          continue;
        }
        Rat s_edge = cross(ray, p - c) / denom;
        Rat t = cross(c - p, d - c) / denom;
        if (sgn(s_edge) < 0 || cmp(s_edge, Rat(1)) > 0) continue;
        if (sgn(t) <= 0) continue;
        if (sgn(s_edge) == 0 || cmp(s_edge, Rat(1)) == 0) {
          generic = false;  // ray through a node
          continue;
        }
        if (best_arc == -1 || cmp(t, best_t) < 0) {
          best_t = t;
          best_arc = a;
        }
      }
      if (!generic) continue;
      if (best_arc == -1) return outer_;
      const Pt& c = nodes_[arcs_[best_arc].from].p;
      const Pt& d = nodes_[arcs_[best_arc].to].p;
      // p sits on the left of c->d iff the forward dart faces it.
      int side = orient(c, d, p);
      if (side == 0) continue;  // degenerate; try another ray
      int dart = side > 0 ? 2 * best_arc : 2 * best_arc + 1;
      return face_of_[dart];
    }
  }
}

RegionStats Arrangement::compute_stats(const std::vector<int>& walk, bool compact,
                                       bool corner_rule_same) const {
  RegionStats st;
  st.chi = compact ? 1 : 0;
  int m = static_cast<int>(walk.size());
  for (int k = 0; k < m; ++k) {
    int d_prev = walk[k];
    int d_next = walk[(k + 1) % m];
    int w = dart_head(d_prev);
    const ArrNode& node = nodes_[w];
    // The region's sector at this visit spans ccw from A to B.
    Vec A = dart_dir(d_next);
    Vec B = -dart_dir(d_prev);
    if (node.kind == ArrNode::kCross) {
      st.corner_visits++;
      int e_next = arcs_[dart_arc(d_next)].front_edge;
      int e_prev = arcs_[dart_arc(d_prev)].front_edge;
      const Vec& n_next = edge_normals_[e_next];
      const Vec& n_prev = edge_normals_[e_prev];
      bool into_next = sgn(Rat(cross(A, n_next))) > 0;
      bool into_prev = sgn(Rat(cross(B, n_prev))) < 0;
      bool same = into_next == into_prev;
      if (same == corner_rule_same) st.v_corners++;
    } else if (node.kind == ArrNode::kCuspVertex) {
      // Thin cuspidal sector inside the region: the cusp points out of it.
      if (sgn(Rat(cross(A, B))) > 0)
        st.c_out++;
      else
        st.c_in++;
    }
  }
  return st;
}

RegionStats Arrangement::stats_with_rule(int region_id, bool corner_rule_same) const {
  const Region& r = regions_[region_id];
  return compute_stats(r.darts, r.compact, corner_rule_same);
}

}  // namespace frontlab
