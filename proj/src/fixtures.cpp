#include "frontlab/fixtures.hpp"

#include <algorithm>
#include <cassert>

#include "frontlab/invariants.hpp"

namespace frontlab {

namespace {

Front make_front(std::vector<std::pair<long, long>> pts, Side seed,
                 std::vector<int> cusps = {}) {
  Front f;
  for (auto [x, y] : pts) f.verts.push_back({Pt{Rat(x), Rat(y)}, false});
  for (int c : cusps) f.verts[c].cusp = true;
  f.seed = seed;
  return f;
}

Pt frac(long xn, long xd, long yn, long yd) {
  return Pt{Rat(xn) / xd, Rat(yn) / yd};
}

}  // namespace

Front circle_fixture() {
  return make_front({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2},
                     {1, -2}, {2, -1}},
                    Side::kRight);
}

Front saucer_fixture() {
  // Lens with horizontal tips; both coorienting normals point upward.
  return make_front({{-4, 0}, {-2, 1}, {2, 1}, {4, 0}, {2, -1}, {-2, -1}},
                    Side::kLeft, {0, 3});
}

Front eight_fixture() {
  Front f;
  std::vector<Pt> pts = {
      Pt{Rat(-1), Rat(1)},        Pt{Rat(1), Rat(-1)},
      frac(5, 2, -3, 2),          frac(7, 2, 0, 1),
      frac(5, 2, 3, 2),           Pt{Rat(1), Rat(1)},
      Pt{Rat(-1), Rat(-1)},       frac(-5, 2, -3, 2),
      frac(-7, 2, 0, 1),          frac(-5, 2, 3, 2),
  };
  for (auto& p : pts) f.verts.push_back({p, false});
  f.seed = Side::kLeft;
  return f;
}

Front limacon_fixture() {
  // One crossing; a small ccw loop nested inside a large ccw loop.  The
  // unbounded region reaches the crossing from the west.
  Front f;
  std::vector<Pt> pts = {
      Pt{Rat(-1), Rat(1)}, Pt{Rat(1), Rat(-1)}, frac(5, 2, -3, 2),
      frac(7, 2, 0, 1),    frac(5, 2, 3, 2),    Pt{Rat(1), Rat(1)},
      Pt{Rat(-1), Rat(-1)}, Pt{Rat(-2), Rat(-3)}, Pt{Rat(0), Rat(-5)},
      Pt{Rat(5), Rat(-5)}, Pt{Rat(8), Rat(-2)},  Pt{Rat(8), Rat(2)},
      Pt{Rat(5), Rat(5)},  Pt{Rat(0), Rat(6)},   Pt{Rat(-3), Rat(4)},
      Pt{Rat(-2), Rat(2)},
  };
  for (auto& p : pts) f.verts.push_back({p, false});
  f.seed = Side::kLeft;
  return f;
}

// --- exact power map and sampled images ----------------------------------------

Pt power_map(const Pt& p, int mu) {
  // (x + iy)^mu by repeated exact complex multiplication.
  Rat re(1), im(0);
  for (int i = 0; i < mu; ++i) {
    Rat nre = re * p.x - im * p.y;
    Rat nim = re * p.y + im * p.x;
    re = nre;
    im = nim;
  }
  return Pt{re, im};
}

namespace {

// Subdivide every edge of a front into `pieces` equal parts and map each
// vertex through z -> z^mu.  Cusp flags ride on the original vertices.
Front sampled_power_image(const Front& f, int mu, int pieces) {
  Front g;
  g.seed = f.seed;
  int n = f.size();
  for (int i = 0; i < n; ++i) {
    const Pt& a = f.vertex(i);
    const Pt& b = f.vertex(i + 1);
    g.verts.push_back({power_map(a, mu), f.is_cusp(i)});
    for (int j = 1; j < pieces; ++j) {
      Rat t(j, pieces);
      Pt q{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
      g.verts.push_back({power_map(q, mu), false});
    }
  }
  return g;
}

}  // namespace

LensFixture lens_fixture(int k, int mu) {
  if (k < 1) throw FrontError("lens fixture needs k >= 1");
  // Plain lens around the origin, mapped through z -> z^k.  The map
  // multiplies the clockwise winding and keeps both cusps positive.  The
  // base is shifted off-center so no two of its points are antipodal images
  // of each other (a centered lens would map symmetric pairs to one point).
  Front base = make_front({{-4, 0}, {-2, 1}, {2, 1}, {4, 0}, {2, -1}, {-2, -1}},
                          Side::kLeft, {0, 3});
  for (auto& v : base.verts) {
    v.p.x += Rat(1, 3);
    v.p.y += Rat(1, 7);
  }
  Front image = k == 1 ? base : sampled_power_image(base, k, 8 * k);
  LensFixture out;
  out.front = std::move(image);
  out.orbifold.cones.push_back({Pt{Rat(0), Rat(0)}, mu});
  out.front.cones = out.orbifold.cones;
  return out;
}

// --- generic path/splice helpers -------------------------------------------------

namespace {

struct TemplatePoint {
  Rat alpha, beta;
  bool cusp = false;
};

// Replace part of edge (i, i+1) by the polyline through the template points
// given in the (edge direction, left normal) frame, shrunk into the parameter
// window [a0, a0 + w].  The frame is a similarity, so the template's angles
// and genericity carry over exactly.
Front splice(const Front& f, int edge, const std::vector<TemplatePoint>& tpl,
             Rat a0 = Rat(0), Rat w = Rat(1)) {
  Front g;
  g.seed = f.seed;
  g.cones = f.cones;
  int n = f.size();
  Vec d = f.edge_dir(edge);
  Vec nl = perp(d);
  const Pt& a = f.vertex(edge);
  for (int i = 0; i < n; ++i) {
    g.verts.push_back(f.verts[f.mod(i)]);
    if (i == edge) {
      for (const auto& tp : tpl) {
        Rat al = a0 + tp.alpha * w;
        Rat be = tp.beta * w;
        g.verts.push_back(
            {Pt{a.x + d.x * al + nl.x * be, a.y + d.y * al + nl.y * be},
             tp.cusp});
      }
    }
  }
  return g;
}

std::vector<TemplatePoint> curl_template(bool ccw) {
  // One loop with a single transverse self-crossing, re-entering the edge line.
  std::vector<TemplatePoint> t = {
      {Rat(3, 20), Rat(0)},      {Rat(11, 20), Rat(0)},
      {Rat(15, 20), Rat(3, 20)}, {Rat(14, 20), Rat(7, 20)},
      {Rat(9, 20), Rat(8, 20)},  {Rat(5, 20), Rat(5, 20)},
      {Rat(9, 20), Rat(-2, 20)}, {Rat(17, 20), Rat(0)},
  };
  if (!ccw)
    for (auto& tp : t) tp.beta = -tp.beta;
  return t;
}

std::vector<TemplatePoint> zigzag_template(bool left) {
  // Two fold vertices; no self-crossing; the strand continues along the edge.
  std::vector<TemplatePoint> t = {
      {Rat(5, 8), Rat(1, 8), true},
      {Rat(4, 8), Rat(2, 8), true},
  };
  if (!left)
    for (auto& tp : t) tp.beta = -tp.beta;
  return t;
}

std::vector<TemplatePoint> tooth_template(const Rat& height, bool left) {
  // A spike with a tip fold and a valley fold; reaches out to `height` times
  // the edge's normal length, spearing whatever strands lie in the way.
  Rat h = height;
  std::vector<TemplatePoint> t = {
      {Rat(3, 8), h, true},
      {Rat(2, 8), h * Rat(6, 8), true},
      {Rat(3, 8), h * Rat(7, 8)},
      {Rat(6, 8), h * Rat(7, 8)},
  };
  if (!left)
    for (auto& tp : t) tp.beta = -tp.beta;
  return t;
}

// Exact rigid-plus-scale jitter; preserves all genericity predicates.
Front place(const Front& f, int quarter_turns, const Rat& scale, const Pt& shift) {
  Front g;
  g.seed = f.seed;
  for (const auto& v : f.verts) {
    Pt p = v.p;
    for (int r = 0; r < quarter_turns; ++r) p = perp(p);
    p = Pt{p.x * scale + shift.x, p.y * scale + shift.y};
    g.verts.push_back({p, v.cusp});
  }
  for (const auto& c : f.cones) {
    Pt p = c.p;
    for (int r = 0; r < quarter_turns; ++r) p = perp(p);
    g.cones.push_back({Pt{p.x * scale + shift.x, p.y * scale + shift.y}, c.mu});
  }
  return g;
}

Front jitter(const Front& f, Rng& rng, bool allow_flips = true) {
  int q = static_cast<int>(rng.below(4));
  Rat scale(rng.range(1, 4), rng.range(1, 2));
  Pt shift{Rat(rng.range(-40, 40), rng.range(1, 3)),
           Rat(rng.range(-40, 40), rng.range(1, 3))};
  Front g = place(f, q, scale, shift);
  if (allow_flips && rng.coin()) g = g.reversed();
  if (allow_flips && rng.coin()) g = g.cooriented_flipped();
  return g;
}

}  // namespace

// --- move pairs -------------------------------------------------------------------

std::vector<MoveFamily> all_move_families() {
  return {MoveFamily::kCuspBirthA,    MoveFamily::kCuspBirthB,
          MoveFamily::kSafeTangency1, MoveFamily::kSafeTangency2,
          MoveFamily::kSafeTangency3, MoveFamily::kTriplePoint1,
          MoveFamily::kTriplePoint2,  MoveFamily::kCuspCrossing};
}

std::string family_name(MoveFamily f) {
  switch (f) {
    case MoveFamily::kCuspBirthA: return "cusp_birth_a";
    case MoveFamily::kCuspBirthB: return "cusp_birth_b";
    case MoveFamily::kSafeTangency1: return "safe_tangency_1";
    case MoveFamily::kSafeTangency2: return "safe_tangency_2";
    case MoveFamily::kSafeTangency3: return "safe_tangency_3";
    case MoveFamily::kTriplePoint1: return "triple_point_1";
    case MoveFamily::kTriplePoint2: return "triple_point_2";
    case MoveFamily::kCuspCrossing: return "cusp_crossing";
  }
  return "?";
}

std::optional<MoveFamily> family_by_name(const std::string& name) {
  for (auto f : all_move_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

namespace {

struct RawPair {
  Front before, after;
};

// Octagon host with a straight east-bound edge from (-8,0) to (8,0) that the
// move patch replaces.  The rest of the host closes the curve far away.
std::vector<std::pair<long, long>> host_ring() {
  return {{-8, 0}, {8, 0}, {14, 4}, {16, 10}, {8, 16}, {-8, 16}, {-16, 10}, {-14, 4}};
}

Front mirror_x(const Front& f) {
  // x -> -x reverses plane orientation; traversal order is kept, so the
  // curve is the mirror image traversed correspondingly.
  Front g;
  g.seed = flip(f.seed);  // mirrored normals keep their geometric side
  for (const auto& v : f.verts) g.verts.push_back({Pt{-v.p.x, v.p.y}, v.cusp});
  for (const auto& c : f.cones) g.cones.push_back({Pt{-c.p.x, c.p.y}, c.mu});
  return g;
}

RawPair cusp_birth_pair(bool variant_b) {
  // Birth of two cusps at a degenerate point of an arc: the arc develops a
  // small tail with two folds and one new self-crossing.  Both sides share
  // the entry E = (9, 5/2), the exit F = (9, -5/2) and the closing loop.
  auto closing = [&](Front& f) {
    f.verts.push_back({Pt{Rat(14), Rat(-4)}, false});
    f.verts.push_back({Pt{Rat(18), Rat(-2)}, false});
    f.verts.push_back({Pt{Rat(19), Rat(2)}, false});
    f.verts.push_back({Pt{Rat(16), Rat(6)}, false});
    f.verts.push_back({Pt{Rat(12), Rat(7)}, false});
    f.seed = Side::kLeft;
  };
  Front before;
  {
    auto& v = before.verts;
    v.push_back({Pt{Rat(9), Rat(5, 2)}, false});   // E
    v.push_back({Pt{Rat(4), Rat(1)}, false});      // simple arc down
    v.push_back({Pt{Rat(2), Rat(0)}, false});
    v.push_back({Pt{Rat(2), Rat(-1)}, false});
    v.push_back({Pt{Rat(4), Rat(-3, 2)}, false});
    v.push_back({Pt{Rat(9), Rat(-5, 2)}, false});  // F
    closing(before);
  }
  Front after;
  {
    auto& v = after.verts;
    v.push_back({Pt{Rat(9), Rat(5, 2)}, false});    // E
    v.push_back({Pt{Rat(4), Rat(-1, 2)}, false});
    v.push_back({Pt{Rat(1), Rat(-9, 4)}, false});
    v.push_back({Pt{Rat(-5, 4), Rat(-15, 4)}, false});
    v.push_back({Pt{Rat(-3, 2), Rat(-4)}, true});   // fold
    v.push_back({Pt{Rat(-9, 8), Rat(-7, 2)}, false});
    v.push_back({Pt{Rat(-1, 4), Rat(-7, 4)}, false});
    v.push_back({Pt{Rat(0), Rat(0)}, false});
    v.push_back({Pt{Rat(-1, 4), Rat(7, 4)}, false});
    v.push_back({Pt{Rat(-9, 8), Rat(7, 2)}, false});
    v.push_back({Pt{Rat(-3, 2), Rat(4)}, true});    // fold
    v.push_back({Pt{Rat(-5, 4), Rat(15, 4)}, false});
    v.push_back({Pt{Rat(1), Rat(9, 4)}, false});
    v.push_back({Pt{Rat(4), Rat(1, 2)}, false});
    v.push_back({Pt{Rat(9), Rat(-5, 2)}, false});   // F
    closing(after);
  }
  RawPair p{before, after};
  if (variant_b) {
    p.before = mirror_x(p.before);
    p.after = mirror_x(p.after);
  }
  return p;
}

RawPair safe_tangency_2() {
  // Strand A east at y = 0, strand B west at y = 3 with a flat-bottomed dip;
  // normals point away from each other at the near-contact.
  auto build = [&](long yb_num) {
    Front f;
    auto add = [&](long xn, long xd, long yn, long yd, bool cusp = false) {
      f.verts.push_back({frac(xn, xd, yn, yd), cusp});
    };
    add(-10, 1, 0, 1);   // A entry
    add(10, 1, 0, 1);    // A exit
    add(13, 1, 1, 1);    // c1: east U-turn up
    add(14, 1, 4, 1);
    add(12, 1, 6, 1);
    add(21, 2, 5, 1);
    add(10, 1, 3, 1);    // B entry (westbound)
    add(2, 1, 3, 1);
    add(1, 2, yb_num, 2);   // dip bottom (flat)
    add(-1, 2, yb_num, 2);
    add(-2, 1, 3, 1);
    add(-10, 1, 3, 1);   // B exit
    add(-13, 1, 2, 1);   // c2: west U-turn down
    add(-14, 1, 0, 1);
    add(-13, 1, -1, 1);
    f.seed = Side::kLeft;
    return f;
  };
  return {build(1), build(-1)};
}

RawPair safe_tangency_3() {
  auto [b, a] = safe_tangency_2();
  return {mirror_x(b), mirror_x(a)};
}

RawPair safe_tangency_1() {
  // Both strands eastbound; the coorientations oppose, so each connecting arc
  // carries one fold.
  auto build = [&](long yb_num) {
    Front f;
    auto add = [&](long xn, long xd, long yn, long yd, bool cusp = false) {
      f.verts.push_back({frac(xn, xd, yn, yd), cusp});
    };
    add(-10, 1, 0, 1);  // A entry, eastbound
    add(10, 1, 0, 1);   // A exit
    add(13, 1, 1, 1);   // c1 up and over, one fold on the top run
    add(14, 1, 4, 1);
    add(12, 1, 7, 1);
    add(2, 1, 7, 1, true);  // fold: heading west, bounce back east
    add(5, 1, 13, 2);
    add(8, 1, 6, 1);
    add(19, 2, 5, 1);
    add(9, 1, 4, 1);
    add(8, 1, 4, 1);
    add(-12, 1, 4, 1);
    add(-14, 1, 3, 1);
    add(-14, 1, 1, 1);
    add(-13, 1, 0, 1);
    add(-11, 1, 1, 1);
    add(-10, 1, 3, 1);  // B entry, eastbound
    add(-2, 1, 3, 1);
    add(-1, 2, yb_num, 2);
    add(1, 2, yb_num, 2);
    add(2, 1, 3, 1);
    add(10, 1, 3, 1);   // B exit
    add(13, 1, 2, 1);   // c2 down and under, one fold on the bottom run
    add(14, 1, 0, 1);
    add(13, 1, -2, 1);
    add(-12, 1, -2, 1, true);  // fold: heading west, bounce back east
    add(-9, 1, -5, 2);
    add(-6, 1, -3, 2);
    add(-5, 1, 1, 2);
    add(-6, 1, 5, 2);
    add(-9, 1, 7, 2);
    add(-29, 2, 5, 2);
    add(-15, 1, 1, 1);
    add(-14, 1, -1, 2);
    f.seed = Side::kLeft;
    return f;
  };
  return {build(1), build(-1)};
}

RawPair triple_point(bool variant_two) {
  // Strands A (east, y=0), B (northeast diagonal), C (shallow diagonal); the
  // move slides C across the A x B crossing.
  auto build = [&](long yl, long yr) {
    Front f;
    auto add = [&](long xn, long xd, long yn, long yd) {
      f.verts.push_back({frac(xn, xd, yn, yd), false});
    };
    add(-8, 1, 0, 1);  // A
    add(8, 1, 0, 1);
    add(11, 1, 1, 1);  // c1: around the south
    add(12, 1, -1, 1);
    add(11, 1, -4, 1);
    add(8, 1, -6, 1);
    add(-4, 1, -7, 1);
    add(-7, 1, -6, 1);
    add(-7, 1, -5, 1);
    add(-6, 1, -4, 1);
    add(-4, 1, -3, 1);  // B (northeast)
    add(4, 1, 3, 1);
    add(5, 1, 6, 1);  // c2: over the top, down the far west
    add(3, 1, 8, 1);
    add(-10, 1, 9, 1);
    add(-13, 1, 7, 1);
    add(-14, 1, 4, 1);
    add(-14, 1, 1, 1);
    add(-13, 1, -1, 1);
    add(-23, 2, -3, 2);
    add(-10, 1, -3, 2);  // C entry (shared)
    add(-8, 1, yl, 1);   // C through the patch
    add(8, 1, yr, 1);
    add(10, 1, 3, 2);    // C exit (shared)
    add(12, 1, 3, 1);    // c3: mid-height return
    add(12, 1, 5, 1);
    add(10, 1, 13, 2);
    add(-10, 1, 13, 2);
    add(-12, 1, 5, 1);
    add(-12, 1, 2, 1);
    add(-11, 1, 1, 2);
    f.seed = Side::kLeft;
    return f;
  };
  RawPair p{build(-2, 1), build(-1, 2)};
  if (variant_two) {
    p.before = mirror_x(p.before);
    p.after = mirror_x(p.after);
  }
  return p;
}

RawPair cusp_crossing_pair() {
  // A strand slides past the tip of a cusp; it crosses one branch of the
  // cusp before and the other after.
  auto build = [&](long ys) {
    Front f;
    auto add = [&](long xn, long yn, bool cusp = false) {
      f.verts.push_back({Pt{Rat(xn), Rat(yn)}, cusp});
    };
    add(-6, -2);        // lower branch start
    add(2, 0, true);    // the cusp tip
    add(-6, 2);         // upper branch end
    add(-10, 3);        // c1 to the strand entry
    add(-12, 2);
    add(-12, 0);
    add(-11, -1);
    add(-9, 0);         // strand entry
    add(-7, ys);        // strand plateau at y = +-1
    add(5, ys);
    add(9, 0);          // strand exit
    add(12, -1);        // c2 around the south back to the cusp piece,
    add(12, -4);        // carrying one fold so the cusp count stays even
    add(9, -6);
    f.verts.push_back({frac(0, 1, -13, 2), true});  // the balancing fold
    f.verts.push_back({frac(4, 1, -15, 2), false});
    f.verts.push_back({frac(5, 1, -19, 2), false});
    f.verts.push_back({frac(9, 2, -11, 1), false});
    f.verts.push_back({frac(3, 1, -23, 2), false});
    add(-4, -11);
    add(-8, -10);
    add(-9, -8);
    add(-8, -6);
    f.seed = Side::kLeft;
    return f;
  };
  return {build(1), build(-1)};
}

RawPair raw_move_pair(MoveFamily family) {
  switch (family) {
    case MoveFamily::kCuspBirthA: return cusp_birth_pair(false);
    case MoveFamily::kCuspBirthB: return cusp_birth_pair(true);
    case MoveFamily::kSafeTangency1: return safe_tangency_1();
    case MoveFamily::kSafeTangency2: return safe_tangency_2();
    case MoveFamily::kSafeTangency3: return safe_tangency_3();
    case MoveFamily::kTriplePoint1: return triple_point(false);
    case MoveFamily::kTriplePoint2: return triple_point(true);
    case MoveFamily::kCuspCrossing: return cusp_crossing_pair();
  }
  throw FrontError("unknown move family");
}

}  // namespace

MovePair move_pair(MoveFamily family, std::uint64_t seed) {
  Rng rng(seed ^ 0x6d0f27bd642b4d2bull);
  RawPair raw = raw_move_pair(family);
  // Identical placement on both sides keeps the pair a genuine local move.
  int q = static_cast<int>(rng.below(4));
  Rat scale(rng.range(1, 3), rng.range(1, 2));
  Pt shift{Rat(rng.range(-30, 30), rng.range(1, 3)),
           Rat(rng.range(-30, 30), rng.range(1, 3))};
  Front b = place(raw.before, q, scale, shift);
  Front a = place(raw.after, q, scale, shift);
  if (rng.coin()) {
    b = b.reversed();
    a = a.reversed();
  }
  if (rng.coin()) {
    b = b.cooriented_flipped();
    a = a.cooriented_flipped();
  }
  MovePair mp;
  mp.family = family;
  mp.before = std::move(b);
  mp.after = std::move(a);
  mp.delta_cusps = mp.after.cusp_count() - mp.before.cusp_count();
  mp.delta_crossings = static_cast<int>(double_points(mp.after).size()) -
                       static_cast<int>(double_points(mp.before).size());
  return mp;
}

// --- wall pairs -------------------------------------------------------------------

namespace {

struct WallLayout {
  Front before, after;
  Front loop_a, loop_b;  // explicit singular-moment loops
};

WallLayout wall_layout(int decor) {
  // Strand A east at y=0 and strand B east at y=3 dipping toward A; both
  // normals point up at the near-contact, so crossing through is the
  // dangerous tangency.  decor picks a loop decoration spliced into c2.
  auto build = [&](long yb_num, bool singular) {
    Front f;
    auto add = [&](long xn, long xd, long yn, long yd, bool cusp = false) {
      f.verts.push_back({frac(xn, xd, yn, yd), cusp});
    };
    add(-10, 1, 0, 1);  // A entry
    add(10, 1, 0, 1);   // A exit
    add(13, 1, 1, 1);   // c1: up and over the top
    add(14, 1, 4, 1);
    add(12, 1, 7, 1);
    add(-12, 1, 7, 1);
    add(-14, 1, 6, 1);
    add(-15, 1, 4, 1);
    add(-14, 1, 2, 1);
    add(-12, 1, 2, 1);
    add(-10, 1, 3, 1);  // B entry
    add(-2, 1, 3, 1);
    if (singular) {
      add(0, 1, 0, 1);  // the touch point itself
    } else {
      add(-1, 2, yb_num, 2);
      add(1, 2, yb_num, 2);
    }
    add(2, 1, 3, 1);
    add(10, 1, 3, 1);   // B exit
    add(13, 1, 2, 1);   // c2: down and under the bottom
    add(14, 1, 0, 1);
    add(13, 1, -3, 1);
    add(10, 1, -5, 1);
    add(-10, 1, -6, 1);
    add(-13, 1, -5, 1);
    add(-14, 1, -3, 1);
    add(-13, 1, -1, 1);
    f.seed = Side::kLeft;
    return f;
  };

  auto decorate = [&](Front f) {
    // Splice into the long bottom run of c2: edge (10,-5) -> (-10,-6).
    int edge = -1;
    for (int i = 0; i < f.size(); ++i)
      if (f.vertex(i) == Pt{Rat(10), Rat(-5)} &&
          f.vertex(i + 1) == Pt{Rat(-10), Rat(-6)})
        edge = i;
    if (edge < 0) throw FrontError("wall layout: decor edge not found");
    Rat a0(1, 4), w(1, 4);
    switch (decor) {
      case 0: return f;
      case 1: return splice(f, edge, curl_template(true), a0, w);
      case 2: return splice(f, edge, curl_template(false), a0, w);
      case 3: return splice(f, edge, zigzag_template(true), a0, w);
      case 4: return splice(f, edge, zigzag_template(false), a0, w);
      default: {
        Front g = splice(f, edge, curl_template(true), a0, w);
        // curl on c1's top run as well: edge (12,7) -> (-12,7)
        int e2 = -1;
        for (int i = 0; i < g.size(); ++i)
          if (g.vertex(i) == Pt{Rat(12), Rat(7)} &&
              g.vertex(i + 1) == Pt{Rat(-12), Rat(7)})
            e2 = i;
        if (e2 < 0) throw FrontError("wall layout: c1 decor edge not found");
        return splice(g, e2, curl_template(false), a0, w);
      }
    }
  };

  WallLayout out;
  out.before = decorate(build(1, false));
  out.after = decorate(build(-1, false));

  // Split the singular front at the touch vertex into its two loops.
  Front sing = decorate(build(0, true));
  int touch = -1;
  for (int i = 0; i < sing.size(); ++i)
    if (sing.vertex(i) == Pt{Rat(0), Rat(0)}) touch = i;
  if (touch < 0) throw FrontError("wall layout: touch vertex not found");
  // The touch vertex lies on strand A's edge (-10,0)->(10,0) of the closed
  // walk; loop_b follows B from the touch, loop_a follows A.
  int a_edge = -1;
  for (int i = 0; i < sing.size(); ++i)
    if (sing.vertex(i) == Pt{Rat(-10), Rat(0)} &&
        sing.vertex(i + 1) == Pt{Rat(10), Rat(0)})
      a_edge = i;
  if (a_edge < 0) throw FrontError("wall layout: strand A edge not found");
  auto sides = sing.edge_sides();
  auto build_loop = [&](bool along_b) {
    Front g;
    g.seed = sides[along_b ? touch : a_edge];
    g.verts.push_back({sing.verts[touch].p, false});
    if (along_b) {
      for (int k = sing.mod(touch + 1); k != sing.mod(a_edge + 1);
           k = sing.mod(k + 1))
        g.verts.push_back(sing.verts[k]);
    } else {
      for (int k = sing.mod(a_edge + 1); k != touch; k = sing.mod(k + 1))
        g.verts.push_back(sing.verts[k]);
    }
    return g;
  };
  out.loop_b = build_loop(true);
  out.loop_a = build_loop(false);
  return out;
}

}  // namespace

int wall_pair_variants() { return 6; }

WallPair wall_pair(int variant, std::uint64_t seed) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + variant);
  WallLayout lay = wall_layout(variant % wall_pair_variants());
  WallPair wp;
  wp.loop_ind_a = index_of(lay.loop_a);
  wp.loop_ind_b = index_of(lay.loop_b);
  int q = static_cast<int>(rng.below(4));
  Rat scale(rng.range(1, 2), 1);
  Pt shift{Rat(rng.range(-20, 20)), Rat(rng.range(-20, 20))};
  wp.before = place(lay.before, q, scale, shift);
  wp.after = place(lay.after, q, scale, shift);
  return wp;
}

// --- cone passage -----------------------------------------------------------------

namespace {

// Sample the open segment [P, Q) so that the image under z -> z^mu turns by a
// bounded angle per step.  The angular speed is bounded through the infinity
// norm of the position; steps snap to a coarse grid to keep numbers small.
void sample_segment(std::vector<Pt>& out, const Pt& p, const Pt& q, int mu) {
  const long den = 2048;
  Rat len1 = abs(q.x - p.x) + abs(q.y - p.y);
  Rat t(0);
  while (t < 1) {
    Pt z{p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t};
    out.push_back(z);
    Rat m = abs(z.x) > abs(z.y) ? abs(z.x) : abs(z.y);
    Rat step = m / (len1 * 3 * mu);
    if (step > Rat(1, 8)) step = Rat(1, 8);
    Rat nt = t + step;
    Int num;
    mpz_fdiv_q(num.get_mpz_t(), Int(nt.get_num() * den).get_mpz_t(),
               nt.get_den().get_mpz_t());
    nt = Rat(num, den);
    nt.canonicalize();
    if (!(nt > t)) nt = t + Rat(1, den);
    t = nt;
  }
}

}  // namespace

ConePassagePair cone_passage_pair(int mu, bool reversed_arc, std::uint64_t seed) {
  // A closed loop in the mu-fold cover, mapped through z -> z^mu: two fixed
  // legs, a dip of height +-d between the shoulders, and a fixed return arc
  // over the top.  Sliding the dip through the origin is the passage through
  // the cone point.  The generic height keeps the image self-crossings away
  // from sample vertices.
  Rat d(static_cast<long>(8 + (seed % 3)), 63);

  auto build = [&](const Rat& c) {
    // Corner radii are pairwise distinct, so no two corners lie in one orbit
    // of the deck rotation and the image never doubles a vertex.
    std::vector<Pt> loop = {
        Pt{Rat(-2), Rat(2)},      Pt{Rat(-1, 2), c},
        Pt{Rat(1, 2), c},         Pt{Rat(5, 2), Rat(2)},
        Pt{Rat(3), Rat(4)},       Pt{Rat(3), Rat(7)},
        Pt{Rat(1), Rat(9)},       Pt{Rat(-1), Rat(17, 2)},
        Pt{Rat(-3), Rat(15, 2)},  Pt{Rat(-13, 4), Rat(4)},
    };
    std::vector<Pt> cover;
    for (std::size_t i = 0; i < loop.size(); ++i)
      sample_segment(cover, loop[i], loop[(i + 1) % loop.size()], mu);
    Front f;
    for (const Pt& p : cover) f.verts.push_back({power_map(p, mu), false});
    f.seed = Side::kLeft;
    if (reversed_arc) f = f.reversed();
    return f;
  };

  ConePassagePair out;
  out.mu = mu;
  out.reversed_arc = reversed_arc;
  out.before = build(d);
  out.after = build(-d);
  out.orbifold.cones.push_back({Pt{Rat(0), Rat(0)}, mu});
  out.before.cones = out.orbifold.cones;
  out.after.cones = out.orbifold.cones;
  return out;
}

// --- randomized corpus ------------------------------------------------------------

Front random_front(std::uint64_t seed, const CorpusOptions& opt) {
  Rng rng(seed);
  for (int attempt = 0; attempt < opt.decor_attempts; ++attempt) {
    // Star polygon host.
    int spokes = static_cast<int>(10 + rng.below(5));
    Front f;
    // Directions advance by one octant step per spoke with jittered radius;
    // a mild radius band keeps every turn under 90 degrees.
    for (int i = 0; i < spokes; ++i) {
      // angle = 2*pi*i/spokes realized with rational points on a coarse wheel
      long num = static_cast<long>(rng.range(16, 24));
      Rat r(num, 2);
      // rational direction table of 20 roughly equally spaced unit-ish vectors
      static const long dirs[20][2] = {
          {20, 0},  {19, 6},  {16, 12}, {12, 16}, {6, 19},  {0, 20},  {-6, 19},
          {-12, 16}, {-16, 12}, {-19, 6}, {-20, 0}, {-19, -6}, {-16, -12},
          {-12, -16}, {-6, -19}, {0, -20}, {6, -19}, {12, -16}, {16, -12},
          {19, -6}};
      int di = static_cast<int>((static_cast<long>(i) * 20) / spokes);
      f.verts.push_back(
          {Pt{r * Rat(dirs[di][0], 20), r * Rat(dirs[di][1], 20)}, false});
    }
    f.seed = rng.coin() ? Side::kLeft : Side::kRight;
    if (!validate(f).ok()) continue;

    int features = static_cast<int>(rng.below(6));
    bool dead = false;
    for (int k = 0; k < features && !dead; ++k) {
      Front cand = f;
      int edge = static_cast<int>(rng.below(static_cast<std::uint64_t>(cand.size())));
      switch (rng.below(4)) {
        case 0: cand = splice(cand, edge, curl_template(rng.coin())); break;
        case 1: cand = splice(cand, edge, zigzag_template(rng.coin())); break;
        case 2: {
          Rat h(rng.range(2, 5), 2);
          cand = splice(cand, edge, tooth_template(h, true));
          break;
        }
        default: {
          Rat h(rng.range(2, 4), 4);
          cand = splice(cand, edge, tooth_template(h, false));
          break;
        }
      }
      if (!validate(cand).ok()) continue;  // skip this feature, keep going
      try {
        if (static_cast<int>(double_points(cand).size()) > opt.max_crossings ||
            cand.cusp_count() > opt.max_cusps)
          continue;
      } catch (const FrontError&) {
        continue;
      }
      f = std::move(cand);
    }
    if (dead) continue;
    if (rng.coin()) f = f.reversed();
    if (rng.coin()) f = f.cooriented_flipped();
    if (validate(f).ok()) return f;
  }
  throw FrontError("random_front: could not build a generic front");
}

}  // namespace frontlab
