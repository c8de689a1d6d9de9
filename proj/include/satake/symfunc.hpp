#pragma once

// Symmetric polynomials in n variables, stored on the monomial basis m_d
// indexed by dominant exponent vectors.

#include <functional>
#include <map>
#include <vector>

#include "satake/exactnum.hpp"
#include "satake/partitions.hpp"

namespace sph {

class SymPoly {
 public:
  /// Decreasing lexicographic order; refines dominance.
  using Terms = std::map<NPartition, ValueScalar, std::greater<NPartition>>;

  explicit SymPoly(int n) : n_(n) {}
  SymPoly(int n, Terms terms);
  static SymPoly one(int n);
  static SymPoly monomial(const NPartition& d, const ValueScalar& c = ValueScalar(1));

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of m_d (equivalently of z^d for any rearrangement d).
  ValueScalar coeff(const Composition& d) const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  SymPoly scaled(const ValueScalar& c) const;
  SymPoly specialized(std::int64_t q) const;

  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  int n_;
  Terms terms_;

  void add_term(const NPartition& d, const ValueScalar& c);
};

/// Distinct rearrangements of d.
std::vector<std::vector<int>> orbit(const std::vector<int>& d);

SymPoly schur(const NPartition& lambda);
SymPoly multiply(const SymPoly& p, const SymPoly& q);
/// Unique expansion p = Σ c_λ s_λ.
std::map<NPartition, ValueScalar, std::greater<NPartition>> to_schur(const SymPoly& p);
SymPoly from_schur(int n, const std::map<NPartition, ValueScalar, std::greater<NPartition>>& coeffs);
/// z_i ↦ z_i^r.
SymPoly adams(const SymPoly& p, int r);
/// Hall–Littlewood P_λ(z; t) at t = v^{-2r}.
SymPoly hall_littlewood(const NPartition& lambda, int r = 1);

/// Σ_k c_k (v^{-2r})^k.
ValueScalar qpoly_at_t(const QPoly& k, int r);

}  // namespace sph
