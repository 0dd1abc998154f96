#pragma once

// Reference computations that share no code with the library: Cartan
// matrices from hand-written diagrams, roots by reflection closure, Weyl
// groups by breadth-first search, and so on. Slow but obviously correct.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;
using Big = boost::multiprecision::cpp_int;
using Frac = boost::multiprecision::cpp_rational;

inline Mat cartan(char kind, int n) {
  std::vector<std::pair<int, int>> edges;  // 1-based
  if (kind == 'A')
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  if (kind == 'D') {
    for (int i = 1; i < n - 1; ++i) edges.push_back({i, i + 1});
    edges.push_back({n - 2, n});
  }
  if (kind == 'E') {
    edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
    for (int i = 5; i < n; ++i) edges.push_back({i, i + 1});
  }
  Mat a(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (auto [i, j] : edges) a[i - 1][j - 1] = a[j - 1][i - 1] = -1;
  return a;
}

inline std::int64_t form(const Mat& a, const Vec& x, const Vec& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * a[i][j] * y[j];
  return s;
}

// Root coordinates -> weight coordinates.
inline Vec to_weight(const Mat& a, const Vec& c) {
  Vec w(c.size(), 0);
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < c.size(); ++i) w[j] += c[i] * a[i][j];
  return w;
}

// All roots as the orbit of the simple roots under simple reflections.
inline std::set<Vec> closure_roots(const Mat& a) {
  const std::size_t n = a.size();
  std::set<Vec> seen;
  std::deque<Vec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Vec b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t p = 0;
      for (std::size_t j = 0; j < n; ++j) p += b[j] * a[j][i];
      Vec s = b;
      s[i] -= p;
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  return seen;
}

inline std::vector<Vec> positive_roots(const Mat& a) {
  std::vector<Vec> out;
  for (const auto& r : closure_roots(a))
    if (std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c >= 0; })) out.push_back(r);
  return out;
}

// All vectors in the box [-b, b]^n of norm 2.
inline std::set<Vec> norm_two(const Mat& a, std::int64_t b) {
  const std::size_t n = a.size();
  std::set<Vec> out;
  Vec x(n, -b);
  while (true) {
    if (form(a, x, x) == 2) out.insert(x);
    std::size_t k = 0;
    while (k < n && x[k] == b) x[k++] = -b;
    if (k == n) break;
    ++x[k];
  }
  return out;
}

// chi(G/B, L_lambda) = prod over positive roots of (lambda+rho, a)/(rho, a),
// with lambda in weight coordinates. No Weyl group sorting involved.
inline Big euler_chi(const Mat& a, const Vec& lambda) {
  Frac prod = 1;
  for (const auto& r : positive_roots(a)) {
    std::int64_t num = 0, den = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      num += (lambda[i] + 1) * r[i];
      den += r[i];
    }
    prod *= Frac(num, den);
  }
  return boost::multiprecision::numerator(prod);
}

// Weyl group as a list of (matrix on weight coordinates, length), by BFS
// over words. Only for small groups.
struct WeylElement {
  Mat m;
  int length;
};

inline std::vector<WeylElement> weyl_group(const Mat& a) {
  const std::size_t n = a.size();
  Mat id(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  // s_i on weight coordinates: lambda -> lambda - lambda_i * (row i of a).
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Mat s = id;
    for (std::size_t j = 0; j < n; ++j) s[j][i] -= a[i][j];
    gens.push_back(s);
  }
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat z(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  std::map<Mat, int> seen{{id, 0}};
  std::deque<Mat> queue{id};
  while (!queue.empty()) {
    Mat w = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Mat ws = mul(s, w);
      if (seen.emplace(ws, seen[w] + 1).second) queue.push_back(ws);
    }
  }
  std::vector<WeylElement> out;
  for (const auto& [m, l] : seen) out.push_back({m, l});
  return out;
}

inline Vec apply(const Mat& m, const Vec& v) {
  Vec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

// Root coordinates of a weight-coordinate vector, if integral.
inline std::optional<Vec> weight_to_root(const Mat& a, const Vec& w) {
  const std::size_t n = a.size();
  std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[j][i];
    m[i][n] = w[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Frac f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Frac x = m[i][n] / m[i][i];
    if (boost::multiprecision::denominator(x) != 1) return std::nullopt;
    out[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(x));
  }
  return out;
}

// Dominant weights mu with lambda <= mu <= lambda_plus, found by walking down
// from lambda_plus one positive root at a time through dominant weights
// (every dominant weight below a dominant weight is reachable that way).
// Offsets d = lambda_plus - mu in root coordinates must stay <= span.
inline std::set<Vec> dominant_interval(const Mat& a, const Vec& lambda_w, const Vec& plus_w) {
  const std::size_t n = a.size();
  Vec diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = plus_w[i] - lambda_w[i];
  const Vec span = *weight_to_root(a, diff);
  const auto pos = positive_roots(a);
  std::set<Vec> out, seen;
  std::deque<Vec> queue{Vec(n, 0)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    const Vec d = queue.front();
    queue.pop_front();
    const Vec dw = to_weight(a, d);
    Vec mu(n);
    for (std::size_t i = 0; i < n; ++i) mu[i] = plus_w[i] - dw[i];
    out.insert(mu);
    for (const auto& r : pos) {
      Vec next = d;
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        next[i] += r[i];
        if (next[i] > span[i]) ok = false;
      }
      if (!ok) continue;
      const Vec nw = to_weight(a, next);
      for (std::size_t i = 0; i < n; ++i)
        if (plus_w[i] - nw[i] < 0) ok = false;
      if (ok && seen.insert(next).second) queue.push_back(next);
    }
  }
  return out;
}

}  // namespace oracle
