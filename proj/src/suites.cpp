#include "adelie/suites.hpp"

#include <algorithm>
#include <random>

#include "adelie/cotangent.hpp"
#include "adelie/error.hpp"
#include "adelie/flag_cohomology.hpp"
#include "adelie/format.hpp"
#include "adelie/obstruction.hpp"
#include "adelie/surface.hpp"

namespace adelie {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"chevalley", "prop2", "lemma3", "cht",
                                                 "prop11",    "surface", "obstruction", "all"};
  return names;
}

Report verify_cht_roots(const RootSystem& rs) {
  Report report("cht-roots");
  for (std::size_t k = 0; k < rs.num_roots(); ++k) {
    ++report.checked;
    const auto c = cotangent::cht(rs, LatticeVector::root(rs.roots()[k]));
    if (rs.is_positive(k) ? c.cht != 0 : c.cht < 1)
      report.fail("cht " + std::to_string(c.cht) + " at " + format_vector(rs.roots()[k]));
  }
  return report;
}

Report verify_prop2_euler(const RootSystem& rs) {
  Report report("prop2-euler");
  for (std::size_t i = 0; i < rs.r(); ++i) {
    ++report.checked;
    const auto chi = cotangent::euler_characteristic_graded(rs, LatticeVector::root(rs.roots()[rs.negation(i)]), 0);
    if (chi != -1) report.fail("chi(-a" + std::to_string(i + 1) + ") = " + chi.str());
  }
  return report;
}

Report verify_decomposition(const RootSystem& rs) {
  Report report("decomposition");
  ++report.checked;
  try {
    const auto lat = surface::resolution_lattice(rs);
    const auto b = surface::bundle_decomposition(rs, lat);
    if (b.enumerated != rs.num_roots())
      report.fail("found " + std::to_string(b.enumerated) + " (-2)-classes, expected " + std::to_string(rs.num_roots()));
    if (b.total_rank != rs.dimension())
      report.fail("total rank " + std::to_string(b.total_rank) + " != dim " + std::to_string(rs.dimension()));
  } catch (const Error& e) {
    report.fail(e.what());
  }
  return report;
}

Report verify_restriction_consistency(const RootSystem& rs) {
  Report report("restriction-consistency");
  const auto lat = surface::resolution_lattice(rs);
  const IntMatrix m = surface::restriction_matrix(rs, lat);
  for (std::size_t k = 0; k < rs.num_roots(); ++k)
    for (std::size_t i = 0; i < rs.r(); ++i) {
      ++report.checked;
      const Int flag_side = flag::schubert_restriction_degree(rs, LatticeVector::root(rs.roots()[k]), i);
      if (flag_side != -m(k, i))
        report.fail("degree mismatch at " + format_vector(rs.roots()[k]) + " on C" + std::to_string(i + 1));
    }
  return report;
}

Report verify_surface_oracle(const RootSystem& rs) {
  Report report("surface-h2");
  const auto lat = surface::resolution_lattice(rs);
  for (const auto& root : rs.positive_roots()) {
    ++report.checked;
    const auto v = surface::surface_h2_oracle(lat, surface::root_to_divisor(rs, lat, root));
    if (!v.vanishes) report.fail("H^2 not shown to vanish at " + format_vector(root));
    if (v.witness.size() != static_cast<std::size_t>(RootSystem::height(root)))
      report.fail("induction chain length mismatch at " + format_vector(root));
  }
  return report;
}

std::vector<Report> verify_obstruction(const ChevalleyConstants& c, std::uint64_t seed) {
  const RootSystem& rs = c.system();
  const auto lat = surface::resolution_lattice(rs);
  std::vector<Report> out;
  for (Half half : {Half::Positive, Half::Negative}) {
    const std::string tag = "-" + to_string(half);
    const ObstructionSystem sys = build_system(c, half);
    Report bianchi = check_bianchi(sys, c);
    bianchi.name += tag;
    out.push_back(std::move(bianchi));

    Report cert_report("certificates" + tag);
    const std::vector<std::pair<std::string, H2Oracle>> oracles = {
        {"flag", flag_oracle(rs)}, {"cotangent", cotangent_oracle(rs)}, {"surface", surface::surface_oracle(rs, lat)}};
    std::vector<SolvabilityCertificate> certs;
    for (const auto& [name, oracle] : oracles) {
      ++cert_report.checked;
      try {
        certs.push_back(certify_solvability(rs, sys, oracle));
        const auto& cert = certs.back();
        if (!cert.complete) cert_report.fail(name + " certificate incomplete at " + format_vector(*cert.first_failure));
        for (const auto& e : cert.entries)
          if (e.requires_nontrivial_class != (e.height == 1))
            cert_report.fail(name + " nontriviality flag wrong at " + format_vector(e.root_coords));
      } catch (const Error& e) {
        cert_report.fail(name + ": " + e.what());
      }
    }

    // Same certificate under a shuffled generator order.
    ++cert_report.checked;
    std::vector<std::size_t> roots = sys.order.roots;
    std::mt19937_64 rng(seed);
    std::shuffle(roots.begin(), roots.end(), rng);
    const ObstructionSystem shuffled = build_system(c, half, GeneratorOrder::from_roots(rs, half, roots));
    const auto cert = certify_solvability(rs, shuffled, flag_oracle(rs));
    auto by_root = [](std::vector<CertificateEntry> v) {
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
      return v;
    };
    if (certs.empty() || by_root(cert.entries) != by_root(certs.front().entries) || cert.complete != certs.front().complete)
      cert_report.fail("certificate depends on the generator order");
    out.push_back(std::move(cert_report));
  }
  return out;
}

std::vector<Report> run_suite(std::shared_ptr<const RootSystem> rs, const std::string& suite, const SuiteOptions& opts) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorCode::IllegalType, "unknown suite '" + suite + "'");
  const bool all = suite == "all";
  std::vector<Report> out;
  auto append = [&](std::vector<Report> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };

  std::optional<ChevalleyConstants> constants;
  auto get_constants = [&]() -> const ChevalleyConstants& {
    if (!constants) constants = ChevalleyConstants::build(rs);
    return *constants;
  };

  if (all || suite == "chevalley") append(verify_chevalley(get_constants(), opts.chevalley));
  if (all || suite == "prop2") append({flag::verify_prop2(*rs), verify_prop2_euler(*rs)});
  if (all || suite == "lemma3") append({flag::verify_lemma3(*rs)});
  if (all || suite == "cht") {
    const bool full = rs->r() <= opts.cht_full_rank;
    append({verify_cht_roots(*rs), cotangent::verify_cht_lemma(*rs, full ? 0 : opts.cht_budget, opts.cht_radius)});
  }
  if (all || suite == "prop11") append({cotangent::verify_prop11_induction(*rs)});
  if (all || suite == "surface") {
    const auto lat = surface::resolution_lattice(*rs);
    append({surface::verify_lemma15(*rs, lat), verify_decomposition(*rs), verify_restriction_consistency(*rs),
            verify_surface_oracle(*rs)});
  }
  if (all || suite == "obstruction") append(verify_obstruction(get_constants(), opts.seed));
  return out;
}

}  // namespace adelie
