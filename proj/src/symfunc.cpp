#include "satake/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "satake/errors.hpp"

namespace sph {

SymPoly::SymPoly(int n, Terms terms) : n_(n) {
  for (auto& [d, c] : terms) add_term(d, c);
}

SymPoly SymPoly::one(int n) { return monomial(NPartition::zero(n)); }

SymPoly SymPoly::monomial(const NPartition& d, const ValueScalar& c) {
  SymPoly p(d.size());
  p.add_term(d, c);
  return p;
}

void SymPoly::add_term(const NPartition& d, const ValueScalar& c) {
  if (d.size() != n_) throw std::invalid_argument("SymPoly: exponent length differs from rank");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ValueScalar SymPoly::coeff(const Composition& d) const {
  if (d.size() != n_) throw std::invalid_argument("SymPoly::coeff: exponent length differs from rank");
  auto it = terms_.find(NPartition(d.sorted_desc()));
  return it == terms_.end() ? ValueScalar() : it->second;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("SymPoly: rank mismatch");
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("SymPoly: rank mismatch");
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

SymPoly SymPoly::scaled(const ValueScalar& c) const {
  SymPoly r(n_);
  for (const auto& [d, x] : terms_) r.add_term(d, x * c);
  return r;
}

SymPoly SymPoly::specialized(std::int64_t q) const {
  SymPoly r(n_);
  for (const auto& [d, x] : terms_) r.add_term(d, x.specialize(q));
  return r;
}

std::vector<std::vector<int>> orbit(const std::vector<int>& d) {
  auto s = d;
  std::sort(s.begin(), s.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

SymPoly schur(const NPartition& lambda) {
  SymPoly::Terms terms;
  for (const auto& d : partitions_of(lambda.weight(), lambda.size())) {
    const auto k = kostka_number(lambda, d.as_composition());
    if (k != 0) terms.emplace(d, ValueScalar(k));
  }
  return SymPoly(lambda.size(), std::move(terms));
}

SymPoly multiply(const SymPoly& p, const SymPoly& q) {
  if (p.n() != q.n()) throw std::invalid_argument("multiply: rank mismatch");
  const int n = p.n();
  SymPoly out(n);
  // m_a m_b = Σ_c N_c m_c with N_c = |O(a)| #{β ∈ O(b) : sort(a+β) = c} / |O(c)|.
  for (const auto& [a, ca] : p.terms()) {
    const auto orbit_a = static_cast<std::int64_t>(orbit(a.parts()).size());
    for (const auto& [b, cb] : q.terms()) {
      std::map<std::vector<int>, std::int64_t> hits;
      for (const auto& beta : orbit(b.parts())) {
        std::vector<int> c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = a[i] + beta[static_cast<std::size_t>(i)];
        std::sort(c.begin(), c.end(), std::greater<>());
        ++hits[c];
      }
      const auto cab = ca * cb;
      for (const auto& [c, h] : hits) {
        const auto orbit_c = static_cast<std::int64_t>(orbit(c).size());
        out += SymPoly::monomial(NPartition(c), cab * ValueScalar(orbit_a * h / orbit_c));
      }
    }
  }
  return out;
}

std::map<NPartition, ValueScalar, std::greater<NPartition>> to_schur(const SymPoly& p) {
  std::map<NPartition, ValueScalar, std::greater<NPartition>> out;
  SymPoly rest = p;
  while (!rest.is_zero()) {
    const auto [lead, c] = *rest.terms().begin();
    out.emplace(lead, c);
    rest -= schur(lead).scaled(c);
  }
  return out;
}

SymPoly from_schur(int n, const std::map<NPartition, ValueScalar, std::greater<NPartition>>& coeffs) {
  SymPoly out(n);
  for (const auto& [l, c] : coeffs) out += schur(l).scaled(c);
  return out;
}

SymPoly adams(const SymPoly& p, int r) {
  if (r < 1) throw std::invalid_argument("adams: r must be positive");
  SymPoly::Terms terms;
  for (const auto& [d, c] : p.terms()) {
    auto e = d.parts();
    for (auto& x : e) x *= r;
    terms.emplace(NPartition(e), c);
  }
  return SymPoly(p.n(), std::move(terms));
}

ValueScalar qpoly_at_t(const QPoly& k, int r) {
  ValueScalar acc;
  for (int j = 0; j <= k.degree(); ++j) acc += ValueScalar::monomial(CycInt(k.coeff(j)), -2 * r * j);
  return acc;
}

SymPoly hall_littlewood(const NPartition& lambda, int r) {
  static std::mutex mu;
  static std::map<std::pair<NPartition, int>, SymPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({lambda, r});
    if (it != cache.end()) return it->second;
  }
  // s_λ = Σ_{μ ⊴ λ} K_{λμ}(t) P_μ with K_{λλ} = 1.
  SymPoly p = schur(lambda);
  for (const auto& m : partitions_of(lambda.weight(), lambda.size())) {
    if (m == lambda || !dominance_leq(m.as_composition(), lambda)) continue;
    const auto k = kostka_foulkes(lambda, m);
    if (k.is_zero()) continue;
    p -= hall_littlewood(m, r).scaled(qpoly_at_t(k, r));
  }
  std::lock_guard lock(mu);
  cache.emplace(std::make_pair(lambda, r), p);
  return p;
}

}  // namespace sph
