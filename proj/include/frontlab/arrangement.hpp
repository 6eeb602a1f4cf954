#pragma once

#include <vector>

#include "frontlab/front.hpp"

namespace frontlab {

// Planar subdivision induced by the edges of a single valid front.
// Nodes are front vertices and double points; arcs are the sub-segments
// between them; faces are walked with the region on the left of each dart.

struct ArrNode {
  enum Kind { kVertex, kCuspVertex, kCross };
  Kind kind;
  Pt p;
  int ref;  // front vertex index or double point id
};

struct ArrArc {
  int from, to;    // node ids; oriented along the front
  int front_edge;  // originating front edge
};

struct RegionStats {
  int chi = 0;
  int c_in = 0;       // cusps pointing into the region
  int c_out = 0;      // cusps pointing out of it
  int v_corners = 0;  // crossing corners of the counted type
  int corner_visits = 0;  // all crossing corners, with multiplicity
};

struct Region {
  int id = 0;
  bool compact = false;
  Pt sample;                // interior point, exact
  std::vector<int> darts;   // boundary walk, face on left
  RegionStats stats;
};

// Calibrated corner rule: a crossing corner counts in V exactly when the two
// branch normals agree about the sector (both point into it or both out).
// The calibration suite re-derives this against sigma = ind and the gleam
// parity rule over the corpus and fails the build unless it is unique.
inline constexpr bool kCornerRuleSame = true;

class Arrangement {
 public:
  explicit Arrangement(const Front& f);

  const Front& front() const { return *front_; }
  const std::vector<DoublePoint>& crossings() const { return dps_; }
  const std::vector<Region>& regions() const { return regions_; }
  const Region& outer() const { return regions_[outer_]; }
  int outer_id() const { return outer_; }

  // Region containing p (p must avoid the curve).
  int locate(const Pt& p) const;

  // Winding number of the front around the region's interior.
  int region_index(int region_id) const;

  // Recompute the stats of one region under the non-frozen corner rule;
  // used by the calibration suite.
  RegionStats stats_with_rule(int region_id, bool corner_rule_same) const;

  // Independent sample from a different boundary dart (property tests).
  Pt alternate_sample(int region_id) const;

  int dart_arc(int d) const { return d >> 1; }
  bool dart_forward(int d) const { return (d & 1) == 0; }
  int dart_tail(int d) const;
  int dart_head(int d) const;
  Vec dart_dir(int d) const;
  const std::vector<ArrNode>& nodes() const { return nodes_; }
  const std::vector<ArrArc>& arcs() const { return arcs_; }

 private:
  void build_faces();
  Pt face_sample(const std::vector<int>& walk, int start_dart) const;
  RegionStats compute_stats(const std::vector<int>& walk, bool compact,
                            bool corner_rule_same) const;
  bool segment_clear(const Pt& a, const Pt& b) const;

  const Front* front_;
  std::vector<DoublePoint> dps_;
  std::vector<ArrNode> nodes_;
  std::vector<ArrArc> arcs_;
  std::vector<std::vector<int>> rotation_;  // per node, outgoing darts ccw
  std::vector<int> rot_pos_;                // dart -> position in its rotation
  std::vector<int> face_of_;                // dart -> region id
  std::vector<Region> regions_;
  std::vector<Vec> edge_normals_;  // per front edge, coorienting normal
  int outer_ = -1;
};

}  // namespace frontlab
