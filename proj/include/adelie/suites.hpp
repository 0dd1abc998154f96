#pragma once

// Named verification suites shared by the command line and the acceptance
// run. Each suite returns one Report per check, in a fixed order.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "adelie/chevalley.hpp"
#include "adelie/report.hpp"
#include "adelie/root_system.hpp"

namespace adelie {

struct SuiteOptions {
  ChevalleyVerifyOptions chevalley;
  // Coordinate-ball check of the Cht criterion: full radius-2 ball up to
  // rank cht_full_rank, otherwise a deterministic sample of cht_budget points.
  Int cht_radius = 2;
  std::size_t cht_full_rank = 4;
  std::size_t cht_budget = 2000;
  std::uint64_t seed = 1;  // shuffles the generator order in the obstruction suite
};

const std::vector<std::string>& suite_names();  // chevalley ... obstruction, all

// IllegalType for an unknown suite name.
std::vector<Report> run_suite(std::shared_ptr<const RootSystem> rs, const std::string& suite,
                              const SuiteOptions& opts = {});

Report verify_cht_roots(const RootSystem& rs);
Report verify_prop2_euler(const RootSystem& rs);
Report verify_decomposition(const RootSystem& rs);
Report verify_restriction_consistency(const RootSystem& rs);
Report verify_surface_oracle(const RootSystem& rs);
std::vector<Report> verify_obstruction(const ChevalleyConstants& c, std::uint64_t seed);

}  // namespace adelie
