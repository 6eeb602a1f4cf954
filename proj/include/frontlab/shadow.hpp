#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontlab/arrangement.hpp"
#include "frontlab/half.hpp"

namespace frontlab {

struct ShadowRegion {
  int id = 0;
  bool compact = false;
  std::optional<Half> gleam;  // undefined on non-compact regions
  int ind = 0;                // winding of the curve around the region
  int corner_visits = 0;      // crossing corners after cusp smoothing
  RegionStats stats;          // data the gleam was computed from
  Pt sample;
};

struct Shadow {
  std::vector<ShadowRegion> regions;
  Half total_compact_gleam;  // informational: sum over compact regions only
};

Shadow shadow_of_front(const Arrangement& arr);
Shadow shadow_of_front(const Front& f);

// Every defined gleam is integral exactly on regions with an even number of
// corners.
bool parity_check(const Shadow& s);

// Sum of ind * gleam over all regions with defined gleams.  Regions without
// a gleam must have ind = 0.
int sigma(const Shadow& s);

struct RenderOptions {
  double scale = 40.0;
  double margin = 30.0;
  bool label_regions = true;
};

std::string render_svg(const Front& f, const Shadow& s,
                       const RenderOptions& opt = {});

}  // namespace frontlab
