#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frontlab/half.hpp"
#include "frontlab/rational.hpp"

namespace frontlab {

// Side of the coorienting normal relative to the directed edge.
enum class Side : std::uint8_t { kLeft, kRight };

inline Side flip(Side s) { return s == Side::kLeft ? Side::kRight : Side::kLeft; }

struct FrontVertex {
  Pt p;
  bool cusp = false;
};

struct Cone {
  Pt p;
  int mu = 2;
};

class FrontError : public std::runtime_error {
 public:
  explicit FrontError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line, col;
};

// Closed cooriented oriented PL wave front.  Vertices are cyclic; edge i runs
// from vertex i to vertex i+1 (mod n).  The coorienting side flips exactly at
// cusp vertices; `seed` is the side on edge 0.
struct Front {
  std::vector<FrontVertex> verts;
  Side seed = Side::kLeft;
  std::vector<Cone> cones;  // CONE lines ride along; consumed by the orbifold layer

  int size() const { return static_cast<int>(verts.size()); }
  const Pt& vertex(int i) const { return verts[mod(i)].p; }
  bool is_cusp(int i) const { return verts[mod(i)].cusp; }
  Vec edge_dir(int i) const { return vertex(i + 1) - vertex(i); }
  int mod(int i) const {
    int n = size();
    return ((i % n) + n) % n;
  }
  int cusp_count() const;

  // Per-edge coorientation sides; sides[0] == seed.
  std::vector<Side> edge_sides() const;

  // Coorienting normal of edge i (left normal for kLeft, right for kRight).
  static Vec normal_of(const Vec& dir, Side s) {
    return s == Side::kLeft ? perp(dir) : -perp(dir);
  }

  Front reversed() const;             // reverse orientation, keep coorientation
  Front cooriented_flipped() const;   // flip coorientation, keep orientation
  Front rotated_start(int k) const;   // same curve, vertex list re-rooted at k
};

struct Violation {
  enum Code {
    kTooFewVertices,
    kDuplicatePoint,
    kOddCuspCount,
    kRegularTurnTooSharp,
    kCuspNotFold,
    kDegenerateCusp,
    kCollinearOverlap,
    kVertexOnEdge,
    kNonTransverse,
    kTriplePoint,
  };
  Code code;
  int index;  // vertex or edge index, -1 when not applicable
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

struct DoublePoint {
  int id = 0;
  Pt pos;
  int edge_a = 0, edge_b = 0;  // edge_a < edge_b in traversal order
  int sign_a = 0, sign_b = 0;  // +1 iff the branch side is kRight
  int eps = 0;                 // sign_a * sign_b
};

// --- parsing / serialization (FRONT v1 text and the JSON mirror) ---

Front parse_front(const std::string& text);
std::string serialize_front(const Front& f);
std::string front_to_json(const Front& f);

// --- validation and basic combinatorics ---

ValidationReport validate(const Front& f, bool relaxed = false);

// Degree of the coorienting-normal map.  Exact; no angles are ever stored.
int index_of(const Front& f);

struct CuspData {
  std::vector<int> signs;  // per cusp vertex, in traversal order
  Half c_plus, c_minus;    // half the number of positive / negative cusps
};
CuspData cusp_data(const Front& f);

std::vector<DoublePoint> double_points(const Front& f);

// Signed winding number of the directed curve around p (ccw positive),
// by exact crossing counts along a generic ray.
int winding_number(const Front& f, const Pt& p);
int winding_number_ray(const Front& f, const Pt& p, const Vec& ray);
bool point_on_front(const Front& f, const Pt& p);

// Orientation-respecting smoothing at a double point.  Both outputs carry the
// former double point as a new vertex; it is marked as a cusp exactly when the
// two branch sides disagree (the coorientation could not otherwise stay
// continuous through the joint).  Outputs pass validate(relaxed = true).
// Labeling of (plus, minus) follows the frozen corner-sign convention below.
std::pair<Front, Front> smooth_split(const Front& f, const DoublePoint& v);

// Calibrated labeling constant: the L+ component is the one whose corner at
// the smoothing point turns with this cross-product sign (+1 = ccw).  The
// calibration suite re-derives the value and fails the build if it is not
// the unique move-invariant choice.
inline constexpr int kSplitPlusCornerSign = +1;

std::pair<Front, Front> smooth_split_labeled(const Front& f,
                                             const DoublePoint& v,
                                             int plus_corner_sign);

}  // namespace frontlab
