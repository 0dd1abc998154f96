#include "adelie/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "adelie/chevalley.hpp"
#include "adelie/cotangent.hpp"
#include "adelie/error.hpp"
#include "adelie/flag_cohomology.hpp"
#include "adelie/format.hpp"
#include "adelie/obstruction.hpp"
#include "adelie/suites.hpp"
#include "adelie/surface.hpp"

namespace adelie::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json vec(const IntVector& v) { return Json(v); }

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<Int>::min() && v <= std::numeric_limits<Int>::max()) return Json(static_cast<Int>(v));
  return Json(v.str());
}

Json one_based(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

Json matrix(const IntMatrix& m) { return Json(m.to_rows()); }

Json report_json(const Report& r) {
  Json j;
  j["name"] = r.name;
  j["checked"] = r.checked;
  j["violations"] = r.violation_count;
  j["sampled"] = r.sampled;
  j["witnesses"] = r.violations;
  return j;
}

bool is_scalar_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto inline_value = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !is_scalar_array(value))) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      } else {
        out << pad << key << ": " << inline_value(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        out << pad << "-\n";
        render_text(e, out, indent + 2);
      } else {
        out << pad << "- " << inline_value(e) << "\n";
      }
    }
  } else {
    out << pad << inline_value(j) << "\n";
  }
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << j.dump(2) << "\n";
  else
    render_text(j, out, 0);
}

// "1,-1,0" or "1 -1 0".
IntVector parse_list(const std::string& text) {
  IntVector out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + token + "'");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ')
      flush();
    else
      token += ch;
  }
  flush();
  return out;
}

Basis resolve_basis(const std::string& basis, bool root_flag, Basis fallback) {
  if (root_flag) {
    if (!basis.empty() && basis != "root") throw UsageError("--root conflicts with --basis " + basis);
    return Basis::SimpleRoot;
  }
  if (basis.empty()) return fallback;
  if (basis == "root") return Basis::SimpleRoot;
  if (basis == "weight") return Basis::FundamentalWeight;
  throw UsageError("--basis must be root or weight");
}

LatticeVector lattice_vector(const RootSystem& rs, const IntVector& coords, Basis basis) {
  if (coords.size() != rs.r())
    throw UsageError("expected " + std::to_string(rs.r()) + " coordinates, got " + std::to_string(coords.size()));
  return {coords, basis};
}

IntVector root_coords(const RootSystem& rs, const IntVector& coords, Basis basis) {
  return rs.to_basis(lattice_vector(rs, coords, basis), Basis::SimpleRoot).coords;
}

Json header(const std::string& command, const RootSystem& rs) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["type"] = rs.name();
  return j;
}

// "h2" or root coordinates.
LieElement parse_element(const RootSystem& rs, const std::string& text) {
  if (!text.empty() && (text[0] == 'h' || text[0] == 'H')) {
    const IntVector idx = parse_list(text.substr(1));
    if (idx.size() != 1 || idx[0] < 1 || static_cast<std::size_t>(idx[0]) > rs.r())
      throw UsageError("bad Cartan element '" + text + "'");
    return LieElement::h(rs, static_cast<std::size_t>(idx[0] - 1));
  }
  const IntVector root = parse_list(text);
  if (root.size() != rs.r()) throw UsageError("bad root '" + text + "'");
  auto k = rs.index_of(root);
  if (!k) throw Error(ErrorCode::NotARoot, format_vector(root) + " is not a root");
  return LieElement::x(rs, *k);
}

Json element_json(const RootSystem& rs, const LieElement& e) {
  Json j;
  j["cartan"] = vec(e.cartan_part);
  Json roots = Json::array();
  for (const auto& [k, c] : e.root_part) roots.push_back({{"root", vec(rs.roots()[k])}, {"coeff", c}});
  j["roots"] = roots;
  return j;
}

Json weight_json(const LatticeVector& v) { return vec(v.coords); }

std::shared_ptr<const RootSystem> load(const std::string& type) {
  return std::make_shared<const RootSystem>(RootSystem::build(parse_type(type)));
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConstructionFailure:
    case ErrorCode::CancellationFailure:
    case ErrorCode::IncompleteOracle:
    case ErrorCode::SingularSystem:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"roots", "cartan",      "bwb",     "cht",    "cotangent",
                                                 "euler", "chevalley", "obstruction", "surface", "verify"};
  return names;
}

const std::vector<Operation>& dispatch_table() {
  static const std::vector<Operation> table = {
      {"build", "roots"},
      {"height", "roots"},
      {"rho", "roots"},
      {"highest_root", "roots"},
      {"pairing", "cartan"},
      {"build_constants", "chevalley"},
      {"bracket", "chevalley"},
      {"adjoint_matrix", "chevalley"},
      {"root_string", "chevalley"},
      {"is_singular", "bwb"},
      {"index", "bwb"},
      {"dominant_conjugate", "bwb"},
      {"weyl_dim", "bwb"},
      {"bwb", "bwb"},
      {"schubert_restriction_degree", "bwb"},
      {"dominance_leq", "cht"},
      {"lambda_plus", "cht"},
      {"lambda_star", "cht"},
      {"dominant_interval", "cht"},
      {"cht", "cht"},
      {"cotangent_verdict", "cotangent"},
      {"descent_chain", "cotangent"},
      {"euler_characteristic_graded", "euler"},
      {"expand_curvature", "obstruction"},
      {"build_system", "obstruction"},
      {"certify_solvability", "obstruction"},
      {"check_bianchi", "obstruction"},
      {"triviality_criterion", "obstruction"},
      {"resolution_lattice", "surface"},
      {"root_to_divisor", "surface"},
      {"bundle_decomposition", "surface"},
      {"surface_h2_oracle", "surface"},
      {"restriction_matrix", "surface"},
      {"verify_chevalley", "verify"},
      {"verify_prop2", "verify"},
      {"verify_lemma3", "verify"},
      {"verify_cht_lemma", "verify"},
      {"verify_prop11_induction", "verify"},
      {"cmd_verify", "verify"},
  };
  return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computational checks for simply-laced Lie theory", "adelie"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "adelie 1.0");

  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  std::string type;
  std::vector<Int> coords;
  std::string basis;
  bool root_flag = false;
  auto add_vector = [&](CLI::App* sub, const char* what) {
    sub->add_option("coords", coords, what);
    sub->add_option("--basis", basis, "Coordinates of the input: root or weight");
    sub->add_flag("--root", root_flag, "Shorthand for --basis root");
  };

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "Root system data: roots, heights, rho, highest root");
  roots_cmd->add_option("type", type, "ADE type, e.g. A3, D5, E8")->required();
  std::string height_of;
  roots_cmd->add_option("--height", height_of, "Height of a root given as comma-separated coordinates");
  roots_cmd->add_option("--basis", basis, "Coordinates of --height: root (default) or weight");
  add_format(roots_cmd);

  // cartan
  auto* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix and the invariant pairing");
  cartan_cmd->add_option("type", type)->required();
  std::vector<std::string> pair;
  cartan_cmd->add_option("--pair", pair, "Two comma-separated vectors to pair")->expected(2);
  cartan_cmd->add_option("--basis", basis, "Coordinates of --pair: root (default) or weight");
  add_format(cartan_cmd);

  // bwb
  auto* bwb_cmd = app.add_subcommand("bwb", "Line bundle cohomology on G/B");
  bwb_cmd->add_option("type", type)->required();
  add_vector(bwb_cmd, "Weight lambda (weight basis unless --basis root)");
  add_format(bwb_cmd);

  // cht
  auto* cht_cmd = app.add_subcommand("cht", "Dominance interval, lambda*, lambda+ and Cht");
  cht_cmd->add_option("type", type)->required();
  add_vector(cht_cmd, "Weight lambda (weight basis unless --basis root)");
  std::string compare;
  bool show_interval = false;
  cht_cmd->add_option("--compare", compare, "Compare lambda with mu (comma-separated, same basis)");
  cht_cmd->add_flag("--interval", show_interval, "List the dominant interval");
  add_format(cht_cmd);

  // cotangent
  auto* cot_cmd = app.add_subcommand("cotangent", "Cohomology verdict on the cotangent bundle of G/B");
  cot_cmd->add_option("type", type)->required();
  add_vector(cot_cmd, "Weight lambda (weight basis unless --basis root)");
  add_format(cot_cmd);

  // euler
  auto* euler_cmd = app.add_subcommand("euler", "Graded Euler characteristic; last positional is the degree j");
  euler_cmd->add_option("type", type)->required();
  add_vector(euler_cmd, "Weight lambda followed by j");
  cotangent::EulerOptions euler_opts;
  euler_cmd->add_option("--max-degree", euler_opts.max_degree, "Largest accepted j");
  euler_cmd->add_option("--multiset-cap", euler_opts.multiset_cap, "Largest accepted number of multisets");
  add_format(euler_cmd);

  // chevalley
  auto* chev_cmd = app.add_subcommand("chevalley", "Chevalley basis structure constants");
  chev_cmd->add_option("type", type)->required();
  bool dump = false;
  std::vector<std::string> bracket_args, string_args;
  std::string ad_arg;
  chev_cmd->add_flag("--dump", dump, "List every nonzero n(a,b)");
  chev_cmd->add_option("--bracket", bracket_args, "Bracket of two basis elements (hN or root coords)")->expected(2);
  chev_cmd->add_option("--ad", ad_arg, "Matrix of ad of a basis element");
  chev_cmd->add_option("--string", string_args, "Root string (p, q) of beta through alpha: ALPHA BETA")->expected(2);
  add_format(chev_cmd);

  // obstruction
  auto* obs_cmd = app.add_subcommand("obstruction", "Integrability system and its solvability certificate");
  obs_cmd->add_option("type", type)->required();
  std::string half_text;
  obs_cmd->add_option("half", half_text, "positive or negative")->required();
  std::string space = "flag";
  obs_cmd->add_option("--space", space, "H^2 oracle")->check(CLI::IsMember({"flag", "cotangent", "surface"}));
  bool emit_system = false, expand = false;
  std::optional<std::uint64_t> shuffle;
  std::string nonvanishing;
  obs_cmd->add_flag("--emit-system", emit_system, "Print the equations as text");
  obs_cmd->add_flag("--expand", expand, "Include the raw curvature coefficients");
  obs_cmd->add_option("--shuffle", shuffle, "Shuffle the generator order with this seed");
  obs_cmd->add_option("--nonvanishing", nonvanishing, "Triviality criterion: one 0/1 per simple root");
  add_format(obs_cmd);

  // surface
  auto* surf_cmd = app.add_subcommand("surface", "Resolution lattice and bundle decomposition");
  surf_cmd->add_option("type", type)->required();
  std::string divisor_of, h2_of;
  bool restriction = false;
  surf_cmd->add_option("--divisor", divisor_of, "Divisor of a root (comma-separated)");
  surf_cmd->add_option("--basis", basis, "Coordinates of --divisor: root (default) or weight");
  surf_cmd->add_option("--h2", h2_of, "H^2 verdict for a divisor class (coefficients of C_i)");
  surf_cmd->add_flag("--restriction", restriction, "Include the restriction matrix");
  add_format(surf_cmd);

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  ver_cmd->add_option("type", type)->required();
  std::string suite;
  ver_cmd->add_option("suite", suite, "chevalley, prop2, lemma3, cht, prop11, surface, obstruction or all")->required();
  SuiteOptions suite_opts;
  ver_cmd->add_flag("--full", suite_opts.chevalley.jacobi_full, "Exhaustive Jacobi sweep regardless of size");
  ver_cmd->add_option("--jacobi-samples", suite_opts.chevalley.jacobi_samples, "Sampled Jacobi triples");
  ver_cmd->add_option("--ad-pairs", suite_opts.chevalley.ad_pairs, "Random pairs for the ad check");
  ver_cmd->add_option("--seed", suite_opts.seed, "Seed for every sampled check");
  ver_cmd->add_option("--cht-budget", suite_opts.cht_budget, "Weights sampled for the Cht criterion above rank 4");
  ver_cmd->add_option("--cht-radius", suite_opts.cht_radius, "Coordinate-ball radius for the Cht criterion");
  add_format(ver_cmd);

  std::vector<std::string> argv_store = {"adelie"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roots_cmd->parsed()) {
      auto rs = load(type);
      Json j = header("roots", *rs);
      j["rank"] = rs->r();
      j["dimension"] = rs->dimension();
      j["num_positive"] = rs->num_positive();
      j["num_roots"] = rs->num_roots();
      Json list = Json::array();
      for (std::size_t k = 0; k < rs->num_roots(); ++k)
        list.push_back({{"index", k + 1},
                        {"root", vec(rs->roots()[k])},
                        {"height", RootSystem::height(rs->roots()[k])},
                        {"positive", rs->is_positive(k)}});
      j["roots"] = list;
      j["rho"] = weight_json(rs->rho());
      IntVector two_rho(rs->r(), 0);
      for (const auto& a : rs->positive_roots())
        for (std::size_t i = 0; i < a.size(); ++i) two_rho[i] += a[i];
      j["two_rho_root"] = vec(two_rho);
      j["highest_root"] = vec(rs->highest_root());
      if (!height_of.empty()) {
        const IntVector root = root_coords(*rs, parse_list(height_of), resolve_basis(basis, false, Basis::SimpleRoot));
        if (!rs->is_root(root)) throw Error(ErrorCode::NotARoot, format_vector(root) + " is not a root");
        j["query"] = {{"root", vec(root)}, {"height", RootSystem::height(root)}};
      }
      emit(j, format, out);
      return 0;
    }

    if (cartan_cmd->parsed()) {
      auto rs = load(type);
      Json j = header("cartan", *rs);
      j["cartan"] = matrix(rs->cartan());
      j["determinant"] = rs->cartan_determinant();
      Json edges = Json::array();
      for (auto [a, b] : rs->dynkin_edges()) edges.push_back({a + 1, b + 1});
      j["dynkin_edges"] = edges;
      if (!pair.empty()) {
        const Basis b = resolve_basis(basis, false, Basis::SimpleRoot);
        const auto v = lattice_vector(*rs, parse_list(pair[0]), b);
        const auto w = lattice_vector(*rs, parse_list(pair[1]), b);
        j["pairing"] = {{"basis", to_string(b)}, {"v", vec(v.coords)}, {"w", vec(w.coords)}, {"value", rs->pairing(v, w)}};
      }
      emit(j, format, out);
      return 0;
    }

    if (bwb_cmd->parsed()) {
      auto rs = load(type);
      const auto lambda = lattice_vector(*rs, coords, resolve_basis(basis, root_flag, Basis::FundamentalWeight));
      const IntVector w = rs->weight_coords(lambda);
      IntVector shifted = w;
      for (Int& c : shifted) ++c;
      const auto shifted_v = LatticeVector::weight(shifted);
      const auto v = flag::bwb(*rs, lambda);
      Json j = header("bwb", *rs);
      j["lambda"] = vec(w);
      j["status"] = v.status == flag::Status::AllVanish ? "AllVanish" : "Concentrated";
      j["singular"] = flag::is_singular(*rs, shifted_v);
      j["index"] = flag::index(*rs, shifted_v);
      const auto sorted = flag::dominant_conjugate(*rs, shifted_v);
      j["dominant_conjugate"] = vec(sorted.dominant.coords);
      if (v.status == flag::Status::Concentrated) {
        j["degree"] = v.degree;
        j["mu"] = weight_json(v.highest_weight);
        j["dim"] = big(v.dimension);
      } else {
        j["degree"] = nullptr;
        j["mu"] = nullptr;
        j["dim"] = 0;
      }
      j["word"] = one_based(v.word);
      j["euler_characteristic"] = big(v.euler_characteristic());
      if (flag::is_dominant(*rs, lambda)) j["weyl_dim"] = big(flag::weyl_dim(*rs, lambda));
      IntVector degrees;
      for (std::size_t i = 0; i < rs->r(); ++i) degrees.push_back(flag::schubert_restriction_degree(*rs, lambda, i));
      j["schubert_degrees"] = vec(degrees);
      emit(j, format, out);
      return 0;
    }

    if (cht_cmd->parsed()) {
      auto rs = load(type);
      const Basis b = resolve_basis(basis, root_flag, Basis::FundamentalWeight);
      const auto lambda = lattice_vector(*rs, coords, b);
      const auto r = cotangent::cht(*rs, lambda);
      Json j = header("cht", *rs);
      j["lambda"] = weight_json(r.lambda);
      j["lambda_plus"] = weight_json(cotangent::lambda_plus(*rs, lambda));
      j["lambda_star"] = weight_json(cotangent::lambda_star(*rs, lambda));
      j["cht"] = r.cht;
      Json chain = Json::array();
      for (const auto& mu : r.chain_witness) chain.push_back(weight_json(mu));
      j["chain_witness"] = chain;
      j["shift"] = r.shift;
      j["interval_size"] = r.interval_size;
      if (show_interval) {
        Json iv = Json::array();
        for (const auto& mu : cotangent::dominant_interval(*rs, lambda)) iv.push_back(weight_json(mu));
        j["interval"] = iv;
      }
      if (!compare.empty()) {
        const auto mu = lattice_vector(*rs, parse_list(compare), b);
        j["compare"] = {{"mu", vec(rs->weight_coords(mu))},
                        {"lambda_leq_mu", cotangent::dominance_leq(*rs, lambda, mu)},
                        {"mu_leq_lambda", cotangent::dominance_leq(*rs, mu, lambda)}};
      }
      emit(j, format, out);
      return 0;
    }

    if (cot_cmd->parsed()) {
      auto rs = load(type);
      const auto lambda = lattice_vector(*rs, coords, resolve_basis(basis, root_flag, Basis::FundamentalWeight));
      const auto v = cotangent::cotangent_verdict(*rs, lambda);
      Json j = header("cotangent", *rs);
      j["lambda"] = weight_json(v.lambda);
      j["cht"] = v.cht;
      j["h_positive_vanish"] = v.h_positive_vanish;
      if (v.h1_structure)
        j["h1_structure"] = {{"lambda_star", weight_json(v.h1_structure->lambda_star)},
                             {"lambda_plus", weight_json(v.h1_structure->lambda_plus)},
                             {"shift", v.h1_structure->shift}};
      else
        j["h1_structure"] = nullptr;
      j["upper_vanishing_degree"] = v.upper_vanishing_degree;
      j["h2_vanishes"] = v.h2_vanishes ? Json(*v.h2_vanishes) : Json(nullptr);
      j["h2_route"] = v.h2_route;
      Json chain = Json::array();
      for (const auto& c : v.h2_chain) chain.push_back(vec(c));
      j["descent_chain"] = chain;
      emit(j, format, out);
      return 0;
    }

    if (euler_cmd->parsed()) {
      auto rs = load(type);
      if (coords.size() != rs->r() + 1)
        throw UsageError("expected " + std::to_string(rs->r()) + " coordinates followed by the degree j");
      const Int jdeg = coords.back();
      if (jdeg < 0) throw UsageError("degree j must be nonnegative");
      coords.pop_back();
      const auto lambda = lattice_vector(*rs, coords, resolve_basis(basis, root_flag, Basis::FundamentalWeight));
      const auto chi =
          cotangent::euler_characteristic_graded(*rs, lambda, static_cast<std::size_t>(jdeg), euler_opts);
      if (format == "text") {
        out << chi.str() << "\n";
        return 0;
      }
      Json j = header("euler", *rs);
      j["lambda"] = vec(rs->weight_coords(lambda));
      j["j"] = jdeg;
      j["euler_characteristic"] = big(chi);
      emit(j, format, out);
      return 0;
    }

    if (chev_cmd->parsed()) {
      auto rs = load(type);
      const auto c = ChevalleyConstants::build(rs);
      Json j = header("chevalley", *rs);
      j["dimension"] = rs->dimension();
      std::size_t nonzero = 0;
      for (std::size_t a = 0; a < rs->num_roots(); ++a)
        for (std::size_t b = 0; b < rs->num_roots(); ++b) nonzero += c.n(a, b) != 0;
      j["nonzero_constants"] = nonzero;
      j["basis_order"] = "h1..hr, then x_alpha in root order";
      if (dump) {
        Json lines = Json::array();
        std::istringstream in(c.dump());
        for (std::string line; std::getline(in, line);) lines.push_back(line);
        j["constants"] = lines;
      }
      if (!bracket_args.empty()) {
        const auto x = parse_element(*rs, bracket_args[0]);
        const auto y = parse_element(*rs, bracket_args[1]);
        j["bracket"] = element_json(*rs, bracket(x, y, c));
      }
      if (!ad_arg.empty()) j["adjoint_matrix"] = matrix(adjoint_matrix(parse_element(*rs, ad_arg), c));
      if (!string_args.empty()) {
        const auto s = rs->root_string(parse_list(string_args[0]), parse_list(string_args[1]));
        j["root_string"] = {{"p", s.p}, {"q", s.q}};
      }
      emit(j, format, out);
      return 0;
    }

    if (obs_cmd->parsed()) {
      auto rs = load(type);
      const Half half = parse_half(half_text);
      const auto c = ChevalleyConstants::build(rs);
      GeneratorOrder order = GeneratorOrder::canonical(*rs, half);
      if (shuffle) {
        std::mt19937_64 rng(*shuffle);
        std::vector<std::size_t> roots = order.roots;
        std::shuffle(roots.begin(), roots.end(), rng);
        order = GeneratorOrder::from_roots(*rs, half, std::move(roots));
      }
      const auto sys = build_system(c, half, order);
      if (emit_system) {
        out << format_system(*rs, sys);
        return 0;
      }
      const auto lat = surface::resolution_lattice(*rs);
      const H2Oracle oracle = space == "flag"        ? flag_oracle(*rs)
                              : space == "cotangent" ? cotangent_oracle(*rs)
                                                     : surface::surface_oracle(*rs, lat);
      const auto cert = certify_solvability(*rs, sys, oracle);
      const auto bianchi = check_bianchi(sys, c);

      Json j = header("obstruction", *rs);
      j["half"] = to_string(half);
      j["space"] = space;
      j["convention"] = {{"quadratic_terms", "one per unordered pair"},
                         {"ordered_sum_factor", sys.ordered_sum_factor}};
      Json eqs = Json::array();
      for (const auto& eq : sys.equations) {
        Json terms = Json::array();
        for (const auto& t : eq.terms)
          terms.push_back({{"n", t.n}, {"beta", vec(rs->roots()[t.beta])}, {"gamma", vec(rs->roots()[t.gamma])}});
        eqs.push_back({{"root", vec(rs->roots()[eq.root])}, {"height", eq.height}, {"terms", terms}});
      }
      j["equations"] = eqs;
      if (expand) {
        Json curv;
        const auto names = order.labels(*rs);
        for (const auto& [g, f] : expand_curvature(c, half, order)) curv[format_combination(rs->roots()[g])] = f.to_string(names);
        j["curvature"] = curv;
      }
      j["bianchi"] = report_json(bianchi);
      Json entries = Json::array();
      for (const auto& e : cert.entries) {
        Json w = Json::array();
        for (const auto& x : e.witness) w.push_back(vec(x));
        entries.push_back({{"root", vec(e.root_coords)},
                           {"height", e.height},
                           {"h2_vanishes", e.h2_vanishes},
                           {"citation", e.citation},
                           {"requires_nontrivial_class", e.requires_nontrivial_class},
                           {"witness", w}});
      }
      j["certificate"] = {{"complete", cert.complete},
                          {"first_failure", cert.first_failure ? vec(*cert.first_failure) : Json(nullptr)},
                          {"entries", entries}};
      if (!nonvanishing.empty()) {
        const IntVector flags = parse_list(nonvanishing);
        std::map<std::size_t, bool> m;
        for (std::size_t i = 0; i < flags.size(); ++i) m[i] = flags[i] != 0;
        const auto t = flag::triviality_criterion(*rs, m);
        j["triviality"] = {{"trivial", t.trivial}, {"failing", one_based(t.failing)}};
      }
      emit(j, format, out);
      return cert.complete && bianchi.ok() ? 0 : 1;
    }

    if (surf_cmd->parsed()) {
      auto rs = load(type);
      const auto lat = surface::resolution_lattice(*rs);
      Json j = header("surface", *rs);
      j["intersection"] = matrix(lat.intersection);
      j["minors_of_minus_intersection"] = vec(leading_principal_minors(-lat.intersection));
      bool pass = true;
      std::size_t count = 0, rank = 0;
      try {
        const auto b = surface::bundle_decomposition(*rs, lat);
        count = b.enumerated;
        rank = b.total_rank;
        j["trivial_rank"] = b.trivial_rank;
      } catch (const Error&) {
        pass = false;
      }
      pass = pass && count == rs->num_roots() && rank == rs->dimension() &&
             surface::verify_lemma15(*rs, lat).ok() && verify_restriction_consistency(*rs).ok();
      j["divisor_count"] = count;
      j["decomposition_rank"] = rank;
      j["cross_check"] = pass ? "pass" : "fail";
      if (!divisor_of.empty()) {
        const IntVector root = root_coords(*rs, parse_list(divisor_of), resolve_basis(basis, false, Basis::SimpleRoot));
        const auto d = surface::root_to_divisor(*rs, lat, root);
        j["divisor"] = {{"root", vec(root)},
                        {"coeffs", vec(d.coeffs)},
                        {"label", format_combination(d.coeffs, "C")},
                        {"self_intersection", surface::self_intersection(lat, d)}};
      }
      if (!h2_of.empty()) {
        const IntVector coeffs = parse_list(h2_of);
        if (coeffs.size() != rs->r()) throw UsageError("expected " + std::to_string(rs->r()) + " coefficients");
        const auto v = surface::surface_h2_oracle(lat, surface::DivisorClass{coeffs});
        Json w = Json::array();
        for (const auto& x : v.witness) w.push_back(vec(x));
        j["h2"] = {{"divisor", vec(coeffs)}, {"vanishes", v.vanishes}, {"citation", v.citation}, {"chain", w}};
      }
      if (restriction) {
        const IntMatrix m = surface::restriction_matrix(*rs, lat);
        Json rows = Json::array();
        for (std::size_t k = 0; k < rs->num_roots(); ++k) {
          IntVector row;
          for (std::size_t i = 0; i < lat.rank; ++i) row.push_back(m(k, i));
          rows.push_back({{"root", vec(rs->roots()[k])}, {"degrees", vec(row)}});
        }
        j["restriction"] = rows;
      }
      emit(j, format, out);
      return pass ? 0 : 1;
    }

    if (ver_cmd->parsed()) {
      auto rs = load(type);
      suite_opts.chevalley.seed = suite_opts.seed;
      const auto reports = run_suite(rs, suite, suite_opts);
      bool ok = true;
      Json checks = Json::array();
      for (const auto& r : reports) {
        ok = ok && r.ok();
        checks.push_back(report_json(r));
      }
      Json j = header("verify", *rs);
      j["suite"] = suite;
      j["seed"] = suite_opts.seed;
      j["ok"] = ok;
      j["checks"] = checks;
      emit(j, format, out);
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return 2;
}

}  // namespace adelie::cli
