// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: acceptance <path-to-adelie> <golden-dir> [--full-e8]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "adelie/chevalley.hpp"
#include "adelie/cotangent.hpp"
#include "adelie/flag_cohomology.hpp"
#include "adelie/obstruction.hpp"
#include "adelie/suites.hpp"
#include "adelie/surface.hpp"

using namespace adelie;

namespace {

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "D3",
                                         "D4", "D5", "D6", "D7", "E6", "E7", "E8"};

std::shared_ptr<const RootSystem> system_of(const std::string& name) {
  return std::make_shared<const RootSystem>(RootSystem::build(parse_type(name)));
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates reports: counts and the first violation seen.
struct Tally {
  std::size_t checked = 0, violations = 0;
  std::string first;

  void add(const Report& r, const std::string& where) {
    checked += r.checked;
    violations += r.violation_count;
    if (first.empty() && !r.ok()) first = where + " " + r.name + ": " + (r.violations.empty() ? "" : r.violations[0]);
  }
  void fail(const std::string& what) {
    ++violations;
    if (first.empty()) first = what;
  }
  Outcome outcome(const std::string& what) const {
    std::ostringstream s;
    s << what << ", " << checked << " checked, " << violations << " violations";
    if (!first.empty()) s << " (first: " << first << ")";
    return {violations == 0, s.str()};
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

Outcome ac1() {
  Tally t;
  for (const auto& name : kTypes) t.add(flag::verify_prop2(*system_of(name)), name);
  return t.outcome("H^i of root line bundles on G/B");
}

Outcome ac2() {
  Tally t;
  for (const auto& name : kTypes) t.add(flag::verify_lemma3(*system_of(name)), name);
  return t.outcome("index of alpha+rho at most one");
}

Outcome ac3(bool full_e8) {
  Tally t;
  for (const auto& name : kTypes) {
    ChevalleyVerifyOptions opts;
    opts.ad_pairs = 10'000;
    if (name == "E8") opts.jacobi_full = full_e8;
    const auto c = ChevalleyConstants::build(system_of(name));
    for (const auto& r : verify_chevalley(c, opts)) {
      t.add(r, name);
      if (r.name == "jacobi" && r.sampled && name != "E8") t.fail(name + " " + r.name + " was sampled");
    }
  }
  return t.outcome(full_e8 ? "structure constants, E8 Jacobi exhaustive" : "structure constants, E8 Jacobi sampled");
}

Outcome ac4() {
  Tally t;
  for (const auto& name : kTypes) {
    auto rs = system_of(name);
    t.add(verify_cht_roots(*rs), name);
    if (rs->r() <= 4) {
      const auto r = cotangent::verify_cht_lemma(*rs, 0, 2);
      t.add(r, name);
      if (r.sampled) t.fail(name + " cht ball was sampled");
    }
  }
  return t.outcome("cht on roots and the vanishing criterion");
}

Outcome ac5() {
  Tally t;
  for (const auto& name : kTypes) {
    auto rs = system_of(name);
    std::vector<cotangent::DescentChain> chains;
    t.add(cotangent::verify_prop11_induction(*rs, &chains), name);
    if (chains.size() != rs->num_positive()) t.fail(name + " chain count " + std::to_string(chains.size()));
  }
  return t.outcome("descent chains for every negative root");
}

Outcome ac6() {
  Tally t;
  for (const auto& name : kTypes) {
    auto rs = system_of(name);
    t.add(surface::verify_lemma15(*rs, surface::resolution_lattice(*rs)), name);
  }
  return t.outcome("root to divisor dictionary and isometry");
}

Outcome ac7() {
  Tally t;
  std::size_t e8_rank = 0;
  for (const auto& name : kTypes) {
    auto rs = system_of(name);
    t.add(verify_decomposition(*rs), name);
    const auto dec = surface::bundle_decomposition(*rs, surface::resolution_lattice(*rs));
    if (dec.enumerated != rs->num_roots() || dec.total_rank != rs->dimension()) t.fail(name + " decomposition size");
    if (name == "E8") e8_rank = dec.total_rank;
  }
  return t.outcome("(-2)-class decomposition, E8 total rank " + std::to_string(e8_rank));
}

Outcome ac8(const std::string& golden) {
  Tally t;
  for (const std::string name : {"A2", "A3", "D4"}) {
    auto rs = system_of(name);
    ++t.checked;
    const auto sys = build_system(ChevalleyConstants::build(rs), Half::Positive);
    if (format_system(*rs, sys) != read_file(golden + "/" + name + "_positive.txt")) t.fail(name + " golden mismatch");
  }
  for (const auto& name : kTypes) {
    auto rs = system_of(name);
    const auto c = ChevalleyConstants::build(rs);
    const auto lat = surface::resolution_lattice(*rs);
    for (Half half : {Half::Positive, Half::Negative}) {
      const auto sys = build_system(c, half);
      t.add(check_bianchi(sys, c), name);
      const std::vector<std::pair<std::string, H2Oracle>> oracles = {
          {"flag", flag_oracle(*rs)}, {"cotangent", cotangent_oracle(*rs)}, {"surface", surface::surface_oracle(*rs, lat)}};
      for (const auto& [label, oracle] : oracles) {
        ++t.checked;
        if (!certify_solvability(*rs, sys, oracle).complete) t.fail(name + " " + label + " certificate incomplete");
      }
    }
  }
  std::size_t flips = 0, caught = 0;
  for (const std::string name : {"A2", "D4"}) {
    auto rs = system_of(name);
    const auto c = ChevalleyConstants::build(rs);
    for (Half half : {Half::Positive, Half::Negative}) {
      const auto sys = build_system(c, half);
      for (std::size_t a = 0; a < rs->num_roots(); ++a)
        for (std::size_t b = 0; b < rs->num_roots(); ++b) {
          if (c.n(a, b) == 0) continue;
          ++flips;
          ++t.checked;
          if (!check_bianchi(sys, c.mutated(a, b)).ok())
            ++caught;
          else
            t.fail(name + " mutation undetected");
        }
    }
  }
  auto o = t.outcome("obstruction systems, Bianchi, certificates");
  o.detail += "; mutations caught " + std::to_string(caught) + "/" + std::to_string(flips);
  return o;
}

Outcome ac9() {
  Tally t;
  for (const auto& name : kTypes) {
    auto rs = system_of(name);
    t.add(verify_restriction_consistency(*rs), name);
    t.add(verify_prop2_euler(*rs), name);
  }
  return t.outcome("flag and surface restriction degrees, chi(-alpha_i)");
}

Outcome ac10(const std::string& cli) {
  const std::string cmd = "\"" + cli + "\" verify A3 all --format json";
  int s1 = 0, s2 = 0;
  const auto first = capture(cmd, s1);
  const auto second = capture(cmd, s2);
  const bool same = first == second && !first.empty();
  return {same && s1 == 0 && s2 == 0, "verify A3 all: " + std::to_string(first.size()) + " bytes, " +
                                          (same ? "identical" : "different") + ", exit " + std::to_string(s1)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <path-to-adelie> <golden-dir> [--full-e8]\n";
    return 2;
  }
  const std::string cli = argv[1], golden = argv[2];
  const bool full_e8 = argc > 3 && std::string(argv[3]) == "--full-e8";

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", ac1},
      {"AC2", ac2},
      {"AC3", [&] { return ac3(full_e8); }},
      {"AC4", ac4},
      {"AC5", ac5},
      {"AC6", ac6},
      {"AC7", ac7},
      {"AC8", [&] { return ac8(golden); }},
      {"AC9", ac9},
      {"AC10", [&] { return ac10(cli); }},
  };
  bool all = true;
  for (const auto& [id, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << id << " " << (o.pass ? "PASS" : "FAIL") << " [" << time << "] " << o.detail << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
