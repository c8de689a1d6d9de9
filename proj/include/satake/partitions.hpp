#pragma once

// Partitions and compositions of fixed length n, dominance, the 2δ-pairing,
// semistandard tableaux, charge, Kostka and Kostka–Foulkes polynomials.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sph {

/// Tuple of n non-negative integers.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int weight() const;
  /// Weakly decreasing rearrangement.
  std::vector<int> sorted_desc() const;
  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing tuple of n non-negative integers.
class NPartition {
 public:
  NPartition() = default;
  explicit NPartition(std::vector<int> parts);
  static NPartition zero(int n) { return NPartition(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int weight() const;
  /// Number of nonzero parts.
  int length() const;
  Composition as_composition() const { return Composition(parts_); }
  std::string to_string() const;

  friend auto operator<=>(const NPartition&, const NPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// Parse "2,1,0" (whitespace tolerated).
std::vector<int> parse_int_list(const std::string& text);

/// Integer polynomial in one variable q.
struct QPoly {
  std::vector<std::int64_t> coeffs;  // coeffs[k] multiplies q^k; no trailing zeros

  QPoly() = default;
  explicit QPoly(std::vector<std::int64_t> c);
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::int64_t coeff(int k) const;
  std::int64_t eval(std::int64_t q) const;
  bool has_nonneg_coeffs() const;
  std::string to_string() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;
};

/// sort↓(mu) ⪯ lambda in dominance. Throws WeightMismatch on unequal weight or length.
bool dominance_leq(const Composition& mu, const NPartition& lambda);

/// 2⟨d,δ⟩ = Σ_i d_i (n+1-2i), i counted from 1.
int pairing_2delta(const Composition& d);
inline int pairing_2delta(const NPartition& l) { return pairing_2delta(l.as_composition()); }

/// Semistandard tableau stored as rows, top row first.
using Tableau = std::vector<std::vector<int>>;

/// Calls visit(t) for each SSYT of shape lambda and content d (letters 1..n).
void for_each_ssyt(const NPartition& lambda, const Composition& d, const std::function<void(const Tableau&)>& visit);

/// Rows read left to right, starting from the bottom row.
std::vector<int> reading_word(const Tableau& t);

std::int64_t kostka_number(const NPartition& lambda, const Composition& d);

/// Lascoux–Schützenberger charge. Throws std::invalid_argument if the content is not a partition.
int charge(const std::vector<int>& word);

/// K_{λμ}(q) = Σ_{T ∈ SSYT(λ, μ)} q^{charge(T)}.
QPoly kostka_foulkes(const NPartition& lambda, const NPartition& mu);

/// All NPartitions with n parts and the given weight, in decreasing lexicographic order.
std::vector<NPartition> partitions_of(int weight, int n);
/// All compositions of the given weight into n parts, in decreasing lexicographic order.
std::vector<Composition> compositions_of(int weight, int n);

}  // namespace sph
