#include "adelie/cotangent.hpp"

#include <algorithm>
#include <functional>

#include "adelie/error.hpp"
#include "adelie/flag_cohomology.hpp"
#include "adelie/format.hpp"
#include "adelie/sampling.hpp"

namespace adelie::cotangent {
namespace {

// Simple-root coordinates of mu - lambda when it lies in the root lattice.
std::optional<IntVector> root_difference(const RootSystem& rs, const IntVector& lambda_w, const IntVector& mu_w) {
  IntVector d(lambda_w.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = mu_w[i] - lambda_w[i];
  return rs.to_root_coords(d);
}

bool nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int c) { return c >= 0; });
}

bool componentwise_leq(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Offsets c (simple-root coordinates) with 0 <= c <= bound and
// lambda + c dominant.
std::vector<IntVector> dominant_offsets(const RootSystem& rs, const IntVector& lambda_w, const IntVector& bound) {
  const std::size_t n = rs.r();
  const IntMatrix& a = rs.cartan();
  std::vector<IntVector> found;
  IntVector c(n, 0);
  IntVector partial = lambda_w;  // weight coordinates of lambda + c so far
  // Off-diagonal Cartan entries are <= 0, so the remaining coordinates can
  // only lower partial[j] for fixed j <= k and can raise it by at most
  // 2 * bound[j] for j > k. Raising c_k lowers every partial[j] with j != k,
  // so a failure there ends the scan over c_k.
  std::function<void(std::size_t)> descend = [&](std::size_t k) {
    if (k == n) {
      found.push_back(c);
      return;
    }
    for (Int v = 0; v <= bound[k]; ++v) {
      c[k] = v;
      for (std::size_t j = 0; j < n; ++j) partial[j] += v * a(k, j);
      bool other_dead = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const Int best = j < k ? partial[j] : partial[j] + 2 * bound[j];
        if (best < 0) other_dead = true;
      }
      if (!other_dead && partial[k] >= 0) descend(k + 1);
      for (std::size_t j = 0; j < n; ++j) partial[j] -= v * a(k, j);
      c[k] = 0;
      if (other_dead) break;
    }
  };
  descend(0);
  return found;
}

struct Interval {
  IntVector lambda_w;
  IntVector plus_w;
  IntVector span;                  // root coords of lambda+ - lambda
  std::vector<IntVector> offsets;  // sorted by height, then lexicographically
};

Interval build_interval(const RootSystem& rs, const LatticeVector& lambda) {
  Interval iv;
  iv.lambda_w = rs.weight_coords(lambda);
  iv.plus_w = flag::dominant_conjugate(rs, lambda).dominant.coords;
  auto span = root_difference(rs, iv.lambda_w, iv.plus_w);
  if (!span || !nonnegative(*span))
    throw Error(ErrorCode::ConstructionFailure, "lambda <= lambda+ failed for " + format_vector(iv.lambda_w));
  iv.span = std::move(*span);
  iv.offsets = dominant_offsets(rs, iv.lambda_w, iv.span);
  std::sort(iv.offsets.begin(), iv.offsets.end(), [](const IntVector& x, const IntVector& y) {
    const Int hx = RootSystem::signed_height(x), hy = RootSystem::signed_height(y);
    return hx != hy ? hx < hy : x < y;
  });
  return iv;
}

LatticeVector offset_weight(const RootSystem& rs, const Interval& iv, const IntVector& c) {
  IntVector w = rs.to_weight_coords(c);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += iv.lambda_w[i];
  return LatticeVector::weight(std::move(w));
}

std::size_t minimal_offset(const Interval& iv) {
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < iv.offsets.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < iv.offsets.size() && is_min; ++j)
      if (j != i && componentwise_leq(iv.offsets[j], iv.offsets[i])) is_min = false;
    if (is_min) minimal.push_back(i);
  }
  if (minimal.size() != 1)
    throw Error(ErrorCode::NonUniqueMinimal, std::to_string(minimal.size()) + " minimal dominant weights above " +
                                                 format_vector(iv.lambda_w));
  return minimal.front();
}

}  // namespace

bool dominance_leq(const RootSystem& rs, const LatticeVector& lambda, const LatticeVector& mu) {
  auto d = root_difference(rs, rs.weight_coords(lambda), rs.weight_coords(mu));
  return d && nonnegative(*d);
}

LatticeVector lambda_plus(const RootSystem& rs, const LatticeVector& lambda) {
  LatticeVector plus = flag::dominant_conjugate(rs, lambda).dominant;
  if (!dominance_leq(rs, lambda, plus))
    throw Error(ErrorCode::ConstructionFailure, "lambda <= lambda+ failed");
  return plus;
}

std::vector<LatticeVector> dominant_interval(const RootSystem& rs, const LatticeVector& lambda) {
  const Interval iv = build_interval(rs, lambda);
  std::vector<LatticeVector> out;
  for (const auto& c : iv.offsets) out.push_back(offset_weight(rs, iv, c));
  return out;
}

LatticeVector lambda_star(const RootSystem& rs, const LatticeVector& lambda) {
  const Interval iv = build_interval(rs, lambda);
  return offset_weight(rs, iv, iv.offsets[minimal_offset(iv)]);
}

ChtReport cht(const RootSystem& rs, const LatticeVector& lambda) {
  const Interval iv = build_interval(rs, lambda);
  const std::size_t star = minimal_offset(iv);
  const std::size_t m = iv.offsets.size();

  // Longest strictly increasing chain; offsets are sorted by height so every
  // strict predecessor comes earlier.
  std::vector<std::size_t> length(m, 0);
  std::vector<std::size_t> prev(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (iv.offsets[j] != iv.offsets[i] && componentwise_leq(iv.offsets[j], iv.offsets[i]) &&
          length[j] + 1 > length[i]) {
        length[i] = length[j] + 1;
        prev[i] = j;
      }
  // The top of the interval is lambda+ itself (offset == span).
  std::size_t top = m;
  for (std::size_t i = 0; i < m; ++i)
    if (iv.offsets[i] == iv.span) top = i;
  if (top == m) throw Error(ErrorCode::ConstructionFailure, "lambda+ missing from its own interval");

  ChtReport report;
  report.lambda = LatticeVector::weight(iv.lambda_w);
  report.lambda_plus = LatticeVector::weight(iv.plus_w);
  report.lambda_star = offset_weight(rs, iv, iv.offsets[star]);
  report.cht = length[top];
  report.interval_size = m;
  std::vector<LatticeVector> chain;
  for (std::size_t i = top; i != SIZE_MAX; i = prev[i]) chain.push_back(offset_weight(rs, iv, iv.offsets[i]));
  std::reverse(chain.begin(), chain.end());
  if (chain.front() != report.lambda_star)
    throw Error(ErrorCode::ConstructionFailure, "longest chain does not start at lambda*");
  report.chain_witness = std::move(chain);
  report.shift = RootSystem::signed_height(iv.span) - RootSystem::signed_height(iv.offsets[star]);
  return report;
}

Report verify_cht_lemma(const RootSystem& rs, std::size_t sample_budget, Int radius) {
  Report report("cht-lemma");
  const auto ball = coordinate_ball(rs.r(), radius, sample_budget);
  std::size_t full = 1;
  for (std::size_t i = 0; i < rs.r() && full <= ball.size(); ++i) full *= static_cast<std::size_t>(2 * radius + 1);
  report.sampled = ball.size() < full;
  for (const auto& w : ball) {
    ++report.checked;
    const auto lambda = LatticeVector::weight(w);
    const std::size_t value = cht(rs, lambda).cht;
    bool criterion = true;
    for (const auto& beta : rs.positive_roots()) {
      Int p = 0;
      for (std::size_t i = 0; i < w.size(); ++i) p += w[i] * beta[i];
      if (p < -1) criterion = false;
    }
    if ((value == 0) != criterion) report.fail("(i) fails at " + format_vector(w));
    if (value != 0) continue;
    for (std::size_t i = 0; i < rs.r(); ++i) {
      IntVector shifted = w;
      ++shifted[i];
      if (cht(rs, LatticeVector::weight(shifted)).cht != 0)
        report.fail("(ii) fails at " + format_vector(w) + " + w" + std::to_string(i + 1));
    }
  }
  return report;
}

DescentChain descent_chain(const RootSystem& rs, const IntVector& negative_root) {
  auto idx = rs.index_of(negative_root);
  if (!idx || rs.is_positive(*idx)) throw Error(ErrorCode::NotARoot, format_vector(negative_root) + " is not a negative root");
  DescentChain chain;
  chain.root = negative_root;
  chain.path.push_back(negative_root);
  IntVector current = negative_root;
  while (RootSystem::height(current) > 1) {
    bool stepped = false;
    for (std::size_t i = 0; i < rs.r() && !stepped; ++i) {
      if (rs.root_pairing(current, rs.simple_root(i)) != -1) continue;
      IntVector next = current;
      ++next[i];
      auto k = rs.index_of(next);
      if (!k || rs.is_positive(*k)) continue;
      chain.simples.push_back(i);
      chain.path.push_back(next);
      current = std::move(next);
      stepped = true;
    }
    if (!stepped)
      throw Error(ErrorCode::ConstructionFailure, "no descent simple root at " + format_vector(current));
  }
  return chain;
}

Report verify_prop11_induction(const RootSystem& rs, std::vector<DescentChain>* chains) {
  Report report("prop11");
  for (std::size_t k = rs.num_positive(); k < rs.num_roots(); ++k) {
    ++report.checked;
    const IntVector& root = rs.roots()[k];
    try {
      DescentChain chain = descent_chain(rs, root);
      if (chain.simples.size() + 1 != static_cast<std::size_t>(RootSystem::height(root)))
        report.fail("chain length mismatch at " + format_vector(root));
      if (chains) chains->push_back(std::move(chain));
    } catch (const Error& e) {
      report.fail(e.what());
    }
  }
  return report;
}

CotangentVerdict cotangent_verdict(const RootSystem& rs, const LatticeVector& lambda) {
  const ChtReport c = cht(rs, lambda);
  CotangentVerdict v;
  v.lambda = c.lambda;
  v.cht = c.cht;
  v.h_positive_vanish = c.cht == 0;
  v.upper_vanishing_degree = c.cht;
  if (c.cht == 1) v.h1_structure = H1Structure{c.lambda_star, c.lambda_plus, c.shift};

  const IntVector w = rs.weight_coords(lambda);
  std::optional<IntVector> root_coords = rs.to_root_coords(w);
  std::optional<std::size_t> idx = root_coords ? rs.index_of(*root_coords) : std::nullopt;
  if (idx && !rs.is_positive(*idx)) {
    // Base case H^2(-alpha_i) = 0; each descent step preserves H^2 up to a
    // grading shift.
    const DescentChain chain = descent_chain(rs, *root_coords);
    v.h2_vanishes = true;
    v.h2_route = "negative-root-induction";
    v.h2_chain = chain.path;
  } else if (c.cht <= 1) {
    v.h2_vanishes = true;
    v.h2_route = "cht-bound";
  } else {
    v.h2_route = "undetermined";
  }
  return v;
}

BigInt euler_characteristic_graded(const RootSystem& rs, const LatticeVector& lambda, std::size_t j,
                                   const EulerOptions& opts) {
  if (j > opts.max_degree)
    throw Error(ErrorCode::BudgetExceeded, "graded degree " + std::to_string(j) + " exceeds cap " +
                                               std::to_string(opts.max_degree));
  const std::size_t n = rs.num_positive();
  // Multisets of size j from n items: C(n + j - 1, j).
  BigInt count = 1;
  for (std::size_t k = 1; k <= j; ++k) count = count * (n + j - k) / k;
  if (count > opts.multiset_cap)
    throw Error(ErrorCode::BudgetExceeded, "multiset count " + count.str() + " exceeds cap " +
                                               std::to_string(opts.multiset_cap));

  const IntVector base = rs.weight_coords(lambda);
  std::vector<IntVector> root_weights;
  for (const auto& alpha : rs.positive_roots()) root_weights.push_back(rs.to_weight_coords(alpha));

  BigInt total = 0;
  IntVector current = base;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t remaining) {
    if (remaining == 0) {
      total += flag::bwb(rs, LatticeVector::weight(current)).euler_characteristic();
      return;
    }
    for (std::size_t k = start; k < n; ++k) {
      for (std::size_t i = 0; i < current.size(); ++i) current[i] += root_weights[k][i];
      walk(k, remaining - 1);
      for (std::size_t i = 0; i < current.size(); ++i) current[i] -= root_weights[k][i];
    }
  };
  walk(0, j);
  return total;
}

}  // namespace adelie::cotangent
