#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frontlab/front.hpp"
#include "frontlab/orbifold.hpp"

namespace frontlab {

// Deterministic splitmix64 stream; same seed, same fixtures, bit for bit.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (next() & 1) != 0; }
};

// --- basic fixtures ---

Front circle_fixture();        // ccw octagon, outward coorientation, index +1
Front saucer_fixture();        // two-cusp lens, index 0
Front eight_fixture();         // one crossing, lobes of index +1 / -1
Front limacon_fixture();       // nested loops, index +2 (corner-rule witness)

// Lens around a cone point: two positive cusps winding k times clockwise.
struct LensFixture {
  Front front;
  OrbifoldDisk orbifold;
};
LensFixture lens_fixture(int k, int mu);

// --- move pairs ---

enum class MoveFamily {
  kCuspBirthA,
  kCuspBirthB,
  kSafeTangency1,
  kSafeTangency2,
  kSafeTangency3,
  kTriplePoint1,
  kTriplePoint2,
  kCuspCrossing,
};

std::vector<MoveFamily> all_move_families();
std::string family_name(MoveFamily f);
std::optional<MoveFamily> family_by_name(const std::string& name);

struct MovePair {
  MoveFamily family;
  Front before, after;
  int delta_cusps = 0;      // |cusps(after)| - |cusps(before)|
  int delta_crossings = 0;  // analogous
};

// Seeded instance of a move family; deterministic.  Throws if the seeded
// perturbation cannot be made generic (does not happen for the shipped
// parameter ranges, which the tests pin down).
MovePair move_pair(MoveFamily family, std::uint64_t seed);

// --- dangerous self-tangency pairs ---

struct WallPair {
  Front before, after;
  int loop_ind_a = 0, loop_ind_b = 0;  // indices of the two singular loops
};

// variant selects the loop decorations; both loop indices are measured on
// explicitly constructed singular-moment loops, not assumed.
WallPair wall_pair(int variant, std::uint64_t seed);
int wall_pair_variants();

// --- cone passage pairs ---

struct ConePassagePair {
  Front before, after;
  OrbifoldDisk orbifold;
  int mu;
  bool reversed_arc;  // the other traversal orientation of the sliding arc
};

ConePassagePair cone_passage_pair(int mu, bool reversed_arc, std::uint64_t seed);

// --- randomized corpus ---

struct CorpusOptions {
  int max_crossings = 30;
  int max_cusps = 8;
  int decor_attempts = 40;
};

// Valid random front; deterministic under seed.
Front random_front(std::uint64_t seed, const CorpusOptions& opt = {});

// Exact (z -> z^mu) image of a rational point; used by the cone fixtures.
Pt power_map(const Pt& p, int mu);

}  // namespace frontlab
