#include "adelie/formal_form.hpp"

#include <algorithm>

#include "adelie/error.hpp"

namespace adelie {

FormalForm FormalForm::constant(Int c) {
  FormalForm f;
  f.add_term(Monomial{}, c);
  return f;
}

FormalForm FormalForm::phi(std::uint32_t slot) {
  FormalForm f;
  f.add_term(Monomial{{slot}, {}}, 1);
  return f;
}

FormalForm FormalForm::psi(std::uint32_t slot) {
  FormalForm f;
  f.add_term(Monomial{{}, {slot}}, 1);
  return f;
}

void FormalForm::add_term(const Monomial& m, Int c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FormalForm& FormalForm::operator+=(const FormalForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FormalForm& FormalForm::operator-=(const FormalForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FormalForm& FormalForm::operator*=(Int s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

int multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out) {
  out.odd.clear();
  out.odd.reserve(a.odd.size() + b.odd.size());
  // Merge; each time an element of b jumps ahead of the remaining elements
  // of a it passes them all, contributing that many transpositions.
  std::size_t i = 0, j = 0, swaps = 0;
  while (i < a.odd.size() || j < b.odd.size()) {
    if (j == b.odd.size() || (i < a.odd.size() && a.odd[i] < b.odd[j])) {
      out.odd.push_back(a.odd[i++]);
    } else if (i < a.odd.size() && a.odd[i] == b.odd[j]) {
      return 0;
    } else {
      swaps += a.odd.size() - i;
      out.odd.push_back(b.odd[j++]);
    }
  }
  out.even.resize(a.even.size() + b.even.size());
  std::merge(a.even.begin(), a.even.end(), b.even.begin(), b.even.end(), out.even.begin());
  return swaps % 2 == 0 ? 1 : -1;
}

FormalForm operator*(const FormalForm& a, const FormalForm& b) {
  FormalForm out;
  Monomial m;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      const int sign = multiply_monomials(ma, mb, m);
      if (sign != 0) out.add_term(m, sign * ca * cb);
    }
  return out;
}

FormalForm FormalForm::d() const {
  FormalForm out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.odd.size(); ++i) {
      Monomial n;
      n.odd = m.odd;
      n.odd.erase(n.odd.begin() + static_cast<std::ptrdiff_t>(i));
      n.even = m.even;
      n.even.insert(std::upper_bound(n.even.begin(), n.even.end(), m.odd[i]), m.odd[i]);
      // psi_k is even, so once it replaces phi_k it moves out freely; the
      // sign is that of passing d over the i preceding odd generators.
      out.add_term(n, i % 2 == 0 ? c : -c);
    }
  }
  return out;
}

FormalForm FormalForm::substitute_psi(const std::map<std::uint32_t, FormalForm>& replacement) const {
  FormalForm out;
  for (const auto& [m, c] : terms_) {
    Monomial kept{m.odd, {}};
    FormalForm product;
    product.add_term(kept, c);
    for (std::uint32_t g : m.even) {
      auto it = replacement.find(g);
      if (it == replacement.end()) {
        product = product * FormalForm::psi(g);
        continue;
      }
      for (const auto& [rm, rc] : it->second.terms_)
        if (rm.odd.size() % 2 != 0)
          throw Error(ErrorCode::ConstructionFailure, "odd-degree replacement for psi" + std::to_string(g));
      product = product * it->second;
    }
    out += product;
  }
  return out;
}

std::string FormalForm::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](const char* prefix, std::uint32_t g) {
    return std::string(prefix) + "[" + (g < names.size() ? names[g] : std::to_string(g)) + "]";
  };
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int mag = c < 0 ? -c : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    std::string body;
    for (std::uint32_t g : m.even) body += (body.empty() ? "" : " ") + name("psi", g);
    for (std::uint32_t g : m.odd) body += (body.empty() ? "" : " ^ ") + name("phi", g);
    if (body.empty())
      s += std::to_string(mag);
    else
      s += (mag == 1 ? "" : std::to_string(mag) + " ") + body;
  }
  return s;
}

}  // namespace adelie
