#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "frontlab/report.hpp"

using namespace frontlab;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kParseError = 2;
constexpr int kInternalError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path);
  out << data;
}

Front load_front(const std::string& path) { return parse_front(read_file(path)); }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FRONTLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return 1;
}

OrbifoldDisk orbifold_of(const Front& f) {
  OrbifoldDisk o;
  o.cones = f.cones;
  return o;
}

int cmd_validate(const std::string& path, bool relaxed) {
  Front f = load_front(path);
  auto rep = validate(f, relaxed);
  if (rep.ok()) {
    std::cout << "ok\n";
    return kOk;
  }
  for (const auto& v : rep.violations) std::cout << v.message << "\n";
  return kDomainFailure;
}

int cmd_info(const std::string& path) {
  Front f = load_front(path);
  auto rep = validate(f);
  if (!rep.ok()) {
    std::cerr << rep.summary();
    return kDomainFailure;
  }
  std::cout << info_report(f).dump(2) << "\n";
  return kOk;
}

int cmd_shadow(const std::string& path, const std::string& svg_path) {
  Front f = load_front(path);
  auto rep = validate(f);
  if (!rep.ok()) {
    std::cerr << rep.summary();
    return kDomainFailure;
  }
  Shadow s = shadow_of_front(f);
  std::cout << shadow_report(f, s).dump(2) << "\n";
  if (!svg_path.empty()) write_file(svg_path, render_svg(f, s));
  return kOk;
}

int cmd_inv(const std::string& path, const std::string& which) {
  Front f = load_front(path);
  auto rep = validate(f);
  if (!rep.ok()) {
    std::cerr << rep.summary();
    return kDomainFailure;
  }
  Json full = invariants_report(f);
  if (which == "all") {
    std::cout << full.dump(2) << "\n";
    return kOk;
  }
  Json j;
  if (which == "l")
    j["l"] = full["l"];
  else if (which == "lq")
    j["l_q"] = full["l_q"];
  else if (which == "s")
    j["S_lambda"] = full["S_lambda"];
  else if (which == "lf")
    j["l_F"] = full["l_F"];
  else if (which == "sk")
    j["S_prime_K"] = full["S_prime_K"];
  else {
    std::cerr << "unknown selector '" << which << "'\n";
    return kDomainFailure;
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_convert(const std::string& to, int h, const std::string& poly) {
  if (to == "lq") {
    LaurentHalf s = LaurentHalf::parse(poly, "f");
    std::cout << to_lq(s, h).str("q") << "\n";
    return kOk;
  }
  LaurentHalf q = LaurentHalf::parse(poly, "q");
  std::cout << to_s(q, h).str("f") << "\n";
  return kOk;
}

int cmd_orbifold(const std::string& path) {
  Front f = load_front(path);
  auto rep = validate(f);
  if (!rep.ok()) {
    std::cerr << rep.summary();
    return kDomainFailure;
  }
  if (f.cones.empty())
    std::cerr << "note: no CONE lines; computing the plane value over Z<f>\n";
  std::cout << orbifold_report(f, orbifold_of(f)).dump(2) << "\n";
  return kOk;
}

int cmd_fixtures(const std::string& name, std::uint64_t seed, int mu, int variant,
                 const std::string& out_prefix) {
  auto emit_single = [&](const Front& f) {
    if (out_prefix.empty())
      std::cout << serialize_front(f);
    else
      write_file(out_prefix + ".front", serialize_front(f));
    return kOk;
  };
  auto emit_pair = [&](const Front& before, const Front& after) {
    if (out_prefix.empty()) {
      std::cout << "# before\n" << serialize_front(before) << "# after\n"
                << serialize_front(after);
    } else {
      write_file(out_prefix + "_before.front", serialize_front(before));
      write_file(out_prefix + "_after.front", serialize_front(after));
      std::cout << out_prefix + "_before.front\n" << out_prefix + "_after.front\n";
    }
    return kOk;
  };

  if (name == "circle") return emit_single(circle_fixture());
  if (name == "saucer") return emit_single(saucer_fixture());
  if (name == "eight") return emit_single(eight_fixture());
  if (name == "limacon") return emit_single(limacon_fixture());
  if (name == "corpus") return emit_single(random_front(seed));
  if (name == "lens") {
    auto lf = lens_fixture(variant < 1 ? 1 : variant, mu);
    return emit_single(lf.front);
  }
  if (name == "wall") {
    WallPair wp = wall_pair(variant, seed);
    std::cout << "# loops ind_a=" << wp.loop_ind_a << " ind_b=" << wp.loop_ind_b
              << "\n";
    return emit_pair(wp.before, wp.after);
  }
  if (name == "cone_passage") {
    ConePassagePair cp = cone_passage_pair(mu, variant != 0, seed);
    return emit_pair(cp.before, cp.after);
  }
  if (auto fam = family_by_name(name)) {
    MovePair mp = move_pair(*fam, seed);
    return emit_pair(mp.before, mp.after);
  }
  std::cerr << "unknown fixture '" << name << "'\n";
  return kDomainFailure;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int count,
               bool tamper) {
  VerifyOptions opt;
  opt.seed = seed;
  if (count > 0) {
    opt.count = count;
    opt.corpus = count;
  }
  opt.tamper_gleam = tamper;
  std::vector<SuiteResult> suites;
  if (suite == "moves")
    suites.push_back(run_moves_suite(opt));
  else if (suite == "identities")
    suites.push_back(run_identities_suite(opt));
  else if (suite == "orbifold")
    suites.push_back(run_orbifold_suite(opt));
  else if (suite == "wall")
    suites.push_back(run_wall_suite(opt));
  else if (suite == "quantum")
    suites.push_back(run_quantum_suite(opt));
  else if (suite == "calibration")
    suites.push_back(run_calibration_suite(opt));
  else if (suite == "all")
    suites = run_all_suites(opt);
  else {
    std::cerr << "unknown suite '" << suite << "'\n";
    return kDomainFailure;
  }
  std::cout << verify_report_text(suites);
  for (const auto& s : suites)
    if (!s.ok()) return kDomainFailure;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frontlab: shadows and Bennequin-type invariants of plane wave fronts"};
  app.require_subcommand(1);

  std::string path, svg_path, which = "all", to, poly, name, suite = "all",
              out_prefix;
  int h = 0, mu = 2, variant = 0, count = 0;
  bool relaxed = false, tamper = false;
  std::uint64_t seed = default_seed();

  auto* c_validate = app.add_subcommand("validate", "check a front for genericity");
  c_validate->add_option("path", path)->required();
  c_validate->add_flag("--relaxed", relaxed);

  auto* c_info = app.add_subcommand("info", "combinatorial data of a front");
  c_info->add_option("path", path)->required();

  auto* c_shadow = app.add_subcommand("shadow", "gleams, sigma and parity");
  c_shadow->add_option("path", path)->required();
  c_shadow->add_option("--svg", svg_path);

  auto* c_inv = app.add_subcommand("inv", "invariants of the Legendrian lift");
  c_inv->add_option("path", path)->required();
  c_inv->add_option("--which", which)->check(
      CLI::IsMember({"all", "l", "lq", "s", "lf", "sk"}));

  auto* c_convert = app.add_subcommand("convert", "translate between S and l_q");
  c_convert->add_option("--to", to)->required()->check(CLI::IsMember({"lq", "s"}));
  c_convert->add_option("--h", h)->required();
  c_convert->add_option("poly", poly)->required();

  auto* c_orbifold = app.add_subcommand("orbifold", "class and S(lambda) over cones");
  c_orbifold->add_option("path", path)->required();

  auto* c_fixtures = app.add_subcommand("fixtures", "emit fixture fronts");
  c_fixtures->add_option("name", name)->required();
  c_fixtures->add_option("--seed", seed);
  c_fixtures->add_option("--mu", mu);
  c_fixtures->add_option("--variant", variant);
  c_fixtures->add_option("--out", out_prefix);

  auto* c_verify = app.add_subcommand("verify", "run the verification suites");
  c_verify->add_option("--suite", suite);
  c_verify->add_option("--seed", seed);
  c_verify->add_option("--count", count);
  c_verify->add_flag("--dev-tamper-gleam", tamper);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_validate->parsed()) return cmd_validate(path, relaxed);
    if (c_info->parsed()) return cmd_info(path);
    if (c_shadow->parsed()) return cmd_shadow(path, svg_path);
    if (c_inv->parsed()) return cmd_inv(path, which);
    if (c_convert->parsed()) return cmd_convert(to, h, poly);
    if (c_orbifold->parsed()) return cmd_orbifold(path);
    if (c_fixtures->parsed()) return cmd_fixtures(name, seed, mu, variant, out_prefix);
    if (c_verify->parsed()) return cmd_verify(suite, seed, count, tamper);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const FrontError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}
