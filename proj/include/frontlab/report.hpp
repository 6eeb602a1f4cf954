#pragma once

#include <string>

#include "json.hpp"

#include "frontlab/orbifold.hpp"
#include "frontlab/shadow.hpp"
#include "frontlab/verify.hpp"

namespace frontlab {

using Json = nlohmann::ordered_json;

// {ind, C_plus, C_minus, l, l_q, S_lambda, l_F, S_prime_K, identities, pretty}
Json invariants_report(const Front& f);

// Front combinatorics: index, cusp signs, double points, region table.
Json info_report(const Front& f);

// region id -> {gleam "p/2" or null, ind, compact}
Json shadow_report(const Front& f, const Shadow& s);

// {class, S_lambda, relations, quotient_equal_checks}
Json orbifold_report(const Front& f, const OrbifoldDisk& o);

Json laurent_json(const LaurentHalf& p);
std::string verify_report_text(const std::vector<SuiteResult>& suites);

}  // namespace frontlab
