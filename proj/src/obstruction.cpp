#include "adelie/obstruction.hpp"

#include <algorithm>
#include <cctype>

#include "adelie/cotangent.hpp"
#include "adelie/error.hpp"
#include "adelie/flag_cohomology.hpp"
#include "adelie/format.hpp"

namespace adelie {
namespace {

bool in_half(const RootSystem& rs, std::size_t root, Half half) {
  return rs.is_positive(root) == (half == Half::Positive);
}

using VectorForm = std::vector<FormalForm>;  // indexed by Chevalley basis

// d_phi applied to a Lie-algebra valued form.
VectorForm apply_operator(const VectorForm& v, const StructureTable& table, const RootSystem& rs,
                          const GeneratorOrder& order, const std::vector<FormalForm>& phi) {
  const std::size_t r = rs.r();
  VectorForm out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out[k] += v[k].d();
  for (std::size_t s = 0; s < order.roots.size(); ++s) {
    const std::size_t a = r + order.roots[s];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      auto terms = table.bracket(a, j);
      if (terms.empty()) continue;
      const FormalForm product = phi[s] * v[j];
      for (const Term& t : terms) out[t.index] += product * t.coeff;
    }
  }
  return out;
}

std::vector<std::size_t> solve_order(const RootSystem& rs, const GeneratorOrder& order) {
  std::vector<std::size_t> roots = order.roots;
  std::stable_sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) {
    const Int ha = RootSystem::height(rs.roots()[a]), hb = RootSystem::height(rs.roots()[b]);
    return ha != hb ? ha < hb : order.slot_of[a] < order.slot_of[b];
  });
  return roots;
}

}  // namespace

std::string to_string(Half h) { return h == Half::Positive ? "positive" : "negative"; }

Half parse_half(const std::string& text) {
  std::string t;
  for (char ch : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "positive" || t == "pos" || t == "+") return Half::Positive;
  if (t == "negative" || t == "neg" || t == "-") return Half::Negative;
  throw Error(ErrorCode::IllegalType, "half must be positive or negative, got '" + text + "'");
}

GeneratorOrder GeneratorOrder::canonical(const RootSystem& rs, Half half) {
  std::vector<std::size_t> roots;
  for (std::size_t k = 0; k < rs.num_roots(); ++k)
    if (in_half(rs, k, half)) roots.push_back(k);
  return from_roots(rs, half, std::move(roots));
}

GeneratorOrder GeneratorOrder::from_roots(const RootSystem& rs, Half half, std::vector<std::size_t> roots) {
  GeneratorOrder o;
  o.slot_of.assign(rs.num_roots(), kNone);
  for (std::size_t s = 0; s < roots.size(); ++s) {
    const std::size_t k = roots[s];
    if (k >= rs.num_roots() || !in_half(rs, k, half) || o.slot_of[k] != kNone)
      throw Error(ErrorCode::IndexOutOfRange, "generator order is not a permutation of the " + to_string(half) + " half");
    o.slot_of[k] = static_cast<std::uint32_t>(s);
  }
  if (roots.size() != rs.num_positive())
    throw Error(ErrorCode::IndexOutOfRange, "generator order is not a permutation of the " + to_string(half) + " half");
  o.roots = std::move(roots);
  return o;
}

std::vector<std::string> GeneratorOrder::labels(const RootSystem& rs) const {
  std::vector<std::string> out;
  for (std::size_t k : roots) out.push_back(format_combination(rs.roots()[k]));
  return out;
}

const Equation& ObstructionSystem::equation(std::size_t root) const {
  for (const auto& e : equations)
    if (e.root == root) return e;
  throw Error(ErrorCode::IndexOutOfRange, "no equation for root index " + std::to_string(root));
}

FormalForm ObstructionSystem::quadratic_part(std::size_t root) const {
  FormalForm q;
  for (const auto& t : equation(root).terms)
    q += FormalForm::phi(order.slot_of[t.beta]) * FormalForm::phi(order.slot_of[t.gamma]) * t.n;
  return q;
}

FormalForm ObstructionSystem::form(std::size_t root) const {
  return FormalForm::psi(order.slot_of[root]) + quadratic_part(root);
}

std::map<std::size_t, FormalForm> expand_curvature(const ChevalleyConstants& c, Half half) {
  return expand_curvature(c, half, GeneratorOrder::canonical(c.system(), half));
}

std::map<std::size_t, FormalForm> expand_curvature(const ChevalleyConstants& c, Half half,
                                                   const GeneratorOrder& order) {
  const RootSystem& rs = c.system();
  const StructureTable table(c);
  const std::size_t r = rs.r(), dim = rs.dimension();
  std::vector<FormalForm> phi;
  for (std::size_t s = 0; s < order.roots.size(); ++s) phi.push_back(FormalForm::phi(static_cast<std::uint32_t>(s)));

  std::vector<VectorForm> square(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    VectorForm e(dim);
    e[j] = FormalForm::constant(1);
    square[j] = apply_operator(apply_operator(e, table, rs, order, phi), table, rs, order, phi);
  }

  // [x_g, h_j] = -(g, a_j) x_g and nothing else lands on x_g, so the x_g
  // component of the image of h_j isolates the coefficient of ad(x_g).
  std::map<std::size_t, FormalForm> coeffs;
  for (std::size_t g = 0; g < rs.num_roots(); ++g) {
    std::size_t best = r;
    Int pairing = 0;
    for (std::size_t j = 0; j < r; ++j) {
      const Int p = rs.root_pairing(rs.roots()[g], rs.simple_root(j));
      if (p != 0 && (best == r || std::abs(p) < std::abs(pairing))) {
        best = j;
        pairing = p;
      }
    }
    const FormalForm& raw = square[best][r + g];
    FormalForm f;
    for (const auto& [m, v] : raw.terms()) {
      if (v % pairing != 0)
        throw Error(ErrorCode::CancellationFailure, "coefficient of ad(x" + format_vector(rs.roots()[g]) +
                                                         ") is not integral");
      f.add_term(m, -v / pairing);
    }
    if (f.is_zero()) continue;
    if (!in_half(rs, g, half))
      throw Error(ErrorCode::CancellationFailure, "ad(x" + format_vector(rs.roots()[g]) + ") survives outside the half");
    coeffs.emplace(g, std::move(f));
  }

  for (std::size_t j = 0; j < dim; ++j) {
    VectorForm residual = square[j];
    for (const auto& [g, f] : coeffs)
      for (const Term& t : table.bracket(r + g, j)) residual[t.index] -= f * t.coeff;
    for (std::size_t k = 0; k < dim; ++k)
      if (!residual[k].is_zero())
        throw Error(ErrorCode::CancellationFailure, "uncancelled term in component " + std::to_string(k) +
                                                         " of the image of basis vector " + std::to_string(j));
  }
  return coeffs;
}

ObstructionSystem build_system(const ChevalleyConstants& c, Half half) {
  return build_system(c, half, GeneratorOrder::canonical(c.system(), half));
}

ObstructionSystem build_system(const ChevalleyConstants& c, Half half, const GeneratorOrder& order) {
  const RootSystem& rs = c.system();
  ObstructionSystem sys;
  sys.type = rs.type();
  sys.half = half;
  sys.order = order;
  for (std::size_t g : solve_order(rs, order)) {
    Equation eq;
    eq.root = g;
    eq.height = RootSystem::height(rs.roots()[g]);
    for (std::size_t sb = 0; sb < order.roots.size(); ++sb) {
      const std::size_t b = order.roots[sb];
      auto sum = rs.sum_index(b, rs.negation(g));
      // b + d = g  <=>  d = g - b
      if (!sum) continue;
      const std::size_t d = rs.negation(*sum);
      if (order.slot_of[d] == GeneratorOrder::kNone || order.slot_of[d] <= sb) continue;
      eq.terms.push_back({c.n(b, d), b, d});
    }
    sys.equations.push_back(std::move(eq));
  }

  const auto expanded = expand_curvature(c, half, order);
  for (const auto& eq : sys.equations) {
    auto it = expanded.find(eq.root);
    if (it == expanded.end() || it->second != sys.form(eq.root))
      throw Error(ErrorCode::ConstructionFailure, "enumerated equation for " + format_vector(rs.roots()[eq.root]) +
                                                       " differs from the curvature expansion");
  }
  if (expanded.size() != sys.equations.size())
    throw Error(ErrorCode::ConstructionFailure, "curvature has components without an equation");
  return sys;
}

std::string format_system(const RootSystem& rs, const ObstructionSystem& system) {
  auto label = [&](std::size_t k) { return "phi[" + format_combination(rs.roots()[k]) + "]"; };
  std::string out = "# " + rs.name() + " " + to_string(system.half) +
                    " half: dbar0 phi[g] + sum over unordered b+c=g of n(b,c) phi[b] ^ phi[c] = 0\n";
  for (const auto& eq : system.equations) {
    out += "dbar0 " + label(eq.root) + " =";
    if (eq.terms.empty()) out += " 0";
    bool first = true;
    for (const auto& t : eq.terms) {
      const Int v = -t.n;
      out += first ? (v < 0 ? " -" : " ") : (v < 0 ? " - " : " + ");
      first = false;
      out += std::to_string(v < 0 ? -v : v) + " " + label(t.beta) + " ^ " + label(t.gamma);
    }
    out += "\n";
  }
  return out;
}

H2Oracle flag_oracle(const RootSystem& rs) {
  return [&rs](const IntVector& root) -> std::optional<H2VanishVerdict> {
    const auto v = flag::bwb(rs, LatticeVector::root(root));
    H2VanishVerdict out;
    out.vanishes = v.vanishes_in_degree(2);
    out.citation = v.status == flag::Status::AllVanish
                       ? "flag:bwb singular"
                       : "flag:bwb concentrated in degree " + std::to_string(v.degree);
    return out;
  };
}

H2Oracle cotangent_oracle(const RootSystem& rs) {
  return [&rs](const IntVector& root) -> std::optional<H2VanishVerdict> {
    const auto v = cotangent::cotangent_verdict(rs, LatticeVector::root(root));
    if (!v.h2_vanishes) return std::nullopt;
    return H2VanishVerdict{*v.h2_vanishes, "cotangent:" + v.h2_route, v.h2_chain};
  };
}

SolvabilityCertificate certify_solvability(const RootSystem& rs, const ObstructionSystem& system,
                                           const H2Oracle& oracle) {
  SolvabilityCertificate cert;
  cert.complete = true;
  for (const auto& eq : system.equations) {
    const IntVector& coords = rs.roots()[eq.root];
    auto verdict = oracle(coords);
    if (!verdict) throw Error(ErrorCode::IncompleteOracle, "no H^2 verdict for " + format_vector(coords));
    CertificateEntry e;
    e.root = eq.root;
    e.root_coords = coords;
    e.height = eq.height;
    e.h2_vanishes = verdict->vanishes;
    e.citation = verdict->citation;
    e.witness = verdict->witness;
    e.requires_nontrivial_class = eq.height == 1;
    if (eq.height >= 2 && !e.h2_vanishes) {
      cert.complete = false;
      if (!cert.first_failure) cert.first_failure = coords;
    }
    cert.entries.push_back(std::move(e));
  }
  return cert;
}

Report check_bianchi(const ObstructionSystem& system, const ChevalleyConstants& c) {
  const RootSystem& rs = c.system();
  Report report("bianchi");
  const auto names = system.order.labels(rs);

  std::map<std::uint32_t, FormalForm> lower;
  for (const auto& eq : system.equations) lower[system.order.slot_of[eq.root]] = system.quadratic_part(eq.root) * -1;
  for (const auto& eq : system.equations) {
    ++report.checked;
    const FormalForm residual = system.quadratic_part(eq.root).d().substitute_psi(lower);
    if (!residual.is_zero())
      report.fail("residual at " + format_vector(rs.roots()[eq.root]) + ": " + residual.to_string(names));
  }

  const StructureTable table(c);
  const std::size_t r = rs.r(), dim = rs.dimension();
  std::vector<Int> acc(dim, 0);
  std::vector<std::size_t> touched;
  auto add = [&](std::size_t k, Int v) {
    if (acc[k] == 0) touched.push_back(k);
    acc[k] += v;
  };
  for (std::size_t g : system.order.roots) {
    const std::size_t a = r + g;
    for (std::size_t u = 0; u < dim; ++u)
      for (std::size_t v = 0; v < dim; ++v) {
        ++report.checked;
        // [x, [u, v]] - [[x, u], v] - [u, [x, v]]
        for (const Term& t : table.bracket(u, v))
          for (const Term& s : table.bracket(a, t.index)) add(s.index, t.coeff * s.coeff);
        for (const Term& t : table.bracket(a, u))
          for (const Term& s : table.bracket(t.index, v)) add(s.index, -t.coeff * s.coeff);
        for (const Term& t : table.bracket(a, v))
          for (const Term& s : table.bracket(u, t.index)) add(s.index, -t.coeff * s.coeff);
        bool bad = false;
        for (std::size_t k : touched) {
          if (acc[k] != 0) bad = true;
          acc[k] = 0;
        }
        touched.clear();
        if (bad)
          report.fail("ad(x" + format_vector(rs.roots()[g]) + ") is not a derivation on basis pair (" +
                      std::to_string(u) + "," + std::to_string(v) + ")");
      }
  }
  return report;
}

}  // namespace adelie
