#pragma once

// Truncated Laurent series over F_{p^k} as the working model of F_q((π)),
// matrices over them, elementary divisors, and the lattice and coset
// enumerations that turn local integrals into finite sums.

#include <climits>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "satake/dense_matrix.hpp"
#include "satake/exactnum.hpp"
#include "satake/partitions.hpp"

namespace sph {

/// Σ_{e ≥ lo} c_e π^e known modulo π^N. N == kExact marks an exact Laurent polynomial.
class TruncSeries {
 public:
  static constexpr int kExact = INT_MAX / 4;

  explicit TruncSeries(FqCtxPtr ctx, int precision = kExact);
  static TruncSeries monomial(FqCtxPtr ctx, FqElem c, int e, int precision = kExact);
  static TruncSeries constant(FqCtxPtr ctx, std::int64_t n) { auto c = ctx->from_int(n); return monomial(ctx, c, 0); }
  static TruncSeries pi_power(FqCtxPtr ctx, int e) { auto one = ctx->one(); return monomial(ctx, one, e); }
  /// coeffs[i] multiplies π^{lo+i}.
  static TruncSeries from_coeffs(FqCtxPtr ctx, int lo, const std::vector<FqElem>& coeffs, int precision = kExact);

  const FqCtxPtr& ctx() const { return ctx_; }
  int precision() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact; }
  /// Zero modulo π^N.
  bool is_zero() const { return c_.empty(); }
  std::optional<int> valuation() const;
  /// Valuation if certified, otherwise the precision (a lower bound for it).
  int val_or_prec() const { return c_.empty() ? prec_ : lo_; }
  /// Lowest stored exponent; meaningful only when nonzero.
  int lo() const { return lo_; }
  /// One past the highest stored exponent.
  int hi() const { return lo_ + static_cast<int>(c_.size()); }
  /// Throws PrecisionExhausted for e >= precision.
  FqElem coeff(int e) const;

  TruncSeries truncated(int precision) const;
  /// Terms with negative exponent (exact).
  TruncSeries principal_part() const;
  /// Terms with exponent >= 0, keeping the precision.
  TruncSeries integral_part() const;
  /// Multiply by π^k.
  TruncSeries shifted(int k) const;
  TruncSeries scaled(FqElem a) const;
  /// Coefficientwise Frobenius x ↦ x^{p^times}; π is fixed.
  TruncSeries frobenius(unsigned times) const;
  /// Coefficientwise conjugation over the index-2 subfield.
  TruncSeries conj() const { return frobenius(ctx_->k() / 2); }
  /// 1/x to absolute precision at most cap. Throws PrecisionExhausted when x is zero to precision.
  TruncSeries inverse(int cap) const;
  /// Coefficients in the subfield of degree m over F_p.
  bool in_subfield(unsigned m) const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  /// "2*pi^-1 + 1 + pi + O(pi^5)".
  std::string to_string() const;

 private:
  FqCtxPtr ctx_;
  int lo_ = 0;
  std::vector<FqElem> c_;  // no leading or trailing zeros
  int prec_;

  void normalize();
};

/// Parse the format produced by TruncSeries::to_string. Coefficients are F_p integers or
/// bracketed coordinate vectors [c0,c1,...] on the polynomial basis of the field.
TruncSeries parse_series(const FqCtxPtr& ctx, const std::string& text);

/// Coefficient of π^{-1}.
FqElem residue(const TruncSeries& x);

using SeriesMatrix = DenseMatrix<TruncSeries>;

SeriesMatrix zero_matrix(const FqCtxPtr& ctx, int n);
SeriesMatrix identity_matrix(const FqCtxPtr& ctx, int n);
SeriesMatrix diagonal_matrix(const std::vector<TruncSeries>& d);
SeriesMatrix conj_transpose(const SeriesMatrix& m);
SeriesMatrix matrix_frobenius(const SeriesMatrix& m, unsigned times);
SeriesMatrix truncate_matrix(const SeriesMatrix& m, int precision);
TruncSeries determinant(const SeriesMatrix& m);
SeriesMatrix adjugate(const SeriesMatrix& m);
/// Minimum over entries of val_or_prec.
int min_valuation(const SeriesMatrix& m);
bool is_integral(const SeriesMatrix& m);

/// Cartan type: invariant factors sorted decreasing (negative entries for non-integral M).
/// Computed from determinantal divisors. Throws PrecisionExhausted if some divisor cannot be certified.
std::vector<int> elementary_divisors(const SeriesMatrix& m);
/// elementary_divisors as an NPartition; nullopt when M is not integral.
std::optional<NPartition> cartan_type(const SeriesMatrix& m);

/// Lattice given by the columns of an upper triangular generator matrix in normal form:
/// diagonal π^{d_i}, entry (j,i) for j < i a polynomial of degree < d_j.
struct LatticeGens {
  Composition d;
  SeriesMatrix gens;
};

/// Visit every lattice in the cell of diagonal exponents d; q^{Σ_{j} d_j (n-j)} of them.
void mv_enumerate(const Composition& d, const FqCtxPtr& ctx, const std::function<void(const LatticeGens&)>& visit);
std::int64_t mv_count(const Composition& d, std::int64_t q);

/// Normal form of the lattice spanned by the columns of a nonsingular integral matrix.
LatticeGens hermite_normal_form(const SeriesMatrix& g);
/// Serialization of a normal form, usable as a map key.
std::vector<std::uint32_t> lattice_key(const LatticeGens& l);

/// All sublattices of O^n of the given colength, by successive colength-one refinement.
std::vector<LatticeGens> sublattices(int n, int colength, const FqCtxPtr& ctx);

/// Bounds on the pole order of superdiagonal unipotent entries: for n = 2 {x12};
/// for n = 3 {x12, x23, x13}.
struct PoleBounds {
  int n = 2;
  std::vector<int> bounds;
};

/// Visit one representative per coset x N(O) in the pole box. Entries are principal parts,
/// with coefficients drawn from `alphabet` (all field elements when empty).
void unipotent_cosets(const PoleBounds& pb, const FqCtxPtr& ctx, const std::function<void(const SeriesMatrix&)>& visit,
                      const std::vector<FqElem>& alphabet = {});
std::int64_t unipotent_coset_count(const PoleBounds& pb, std::int64_t alphabet_size);
/// Canonical representative of x N(O) for unipotent upper triangular x, n <= 3.
SeriesMatrix canonical_coset(const SeriesMatrix& x);
SeriesMatrix unipotent_from_entries(const FqCtxPtr& ctx, int n, const std::vector<TruncSeries>& superdiag);

/// Visit each tuple (s_1, ..., s_m) of principal parts with pole(s_i) <= bounds[i].
void for_each_principal_parts(const FqCtxPtr& ctx, const std::vector<int>& bounds, const std::vector<FqElem>& alphabet,
                              const std::function<void(const std::vector<TruncSeries>&)>& visit);

/// Elements of the subfield of degree m over F_p inside ctx.
std::vector<FqElem> subfield_elements(const FqCtx& ctx, unsigned m);

}  // namespace sph
