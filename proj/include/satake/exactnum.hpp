#pragma once

// Exact coefficient arithmetic: cyclotomic integers Z[ζ_p], Laurent
// polynomials in v = q^{1/2} over Q(ζ_p), and small finite fields F_{p^k}.

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sph {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t ipow(std::int64_t base, unsigned exp);
bool is_prime(std::int64_t p);

/// Element of Z[ζ_p] on the basis ζ^0, ..., ζ^{p-2}.
///
/// p == 1 marks a plain integer that has not been tied to any root of unity
/// yet; it is promoted silently when combined with a genuine cyclotomic value.
class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(std::int64_t n, unsigned p = 1);

  /// ζ_p^e, reduced so that no basis exponent reaches p-1.
  static CycInt zeta_power(unsigned p, std::int64_t e);

  unsigned prime() const { return p_; }
  std::span<const std::int64_t> coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Constant term when is_rational().
  std::int64_t rational_value() const;
  /// Content: gcd of all basis coefficients (0 for zero).
  std::int64_t content() const;

  CycInt promoted(unsigned p) const;
  CycInt divided_exact(std::int64_t d) const;

  std::complex<double> embed() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  CycInt operator-() const;
  friend bool operator==(const CycInt& a, const CycInt& b);

  std::string to_string() const;

 private:
  unsigned p_ = 1;
  std::vector<std::int64_t> c_ = {0};

  void unify(CycInt& o);
};

/// Σ_e (num_e / den) v^e with v^2 = q kept formal until specialize().
class ValueScalar {
 public:
  ValueScalar() = default;
  ValueScalar(std::int64_t n);  // NOLINT: integers are values
  ValueScalar(const CycInt& c);  // NOLINT
  ValueScalar(std::map<int, CycInt> terms, std::int64_t den);

  /// v^k.
  static ValueScalar v_power(int k);
  /// c * v^k.
  static ValueScalar monomial(const CycInt& c, int k);

  const std::map<int, CycInt>& terms() const { return terms_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned prime() const;

  /// Multiply by v^k.
  ValueScalar shifted(int k) const;

  /// Reduce with v^2 = q: only exponents 0 and 1 survive.
  ValueScalar specialize(std::int64_t q) const;

  /// Substitute v^{-2} = t for integer t; requires all exponents even and <= 0.
  ValueScalar substitute_t(std::int64_t t) const;

  /// Exponents are even and every numerator is a rational integer.
  bool is_integral_poly_in_v2() const;
  /// is_integral_poly_in_v2() with non-negative exponents and coefficients.
  bool is_nonneg_poly_in_v2() const;

  ValueScalar& operator+=(const ValueScalar& o);
  ValueScalar& operator-=(const ValueScalar& o);
  ValueScalar& operator*=(const ValueScalar& o);
  friend ValueScalar operator+(ValueScalar a, const ValueScalar& b) { return a += b; }
  friend ValueScalar operator-(ValueScalar a, const ValueScalar& b) { return a -= b; }
  friend ValueScalar operator*(ValueScalar a, const ValueScalar& b) { return a *= b; }
  ValueScalar operator-() const;
  friend bool operator==(const ValueScalar& a, const ValueScalar& b);

  std::string to_string() const;

 private:
  std::map<int, CycInt> terms_;
  std::int64_t den_ = 1;

  void normalize();
};

struct ApproxValue {
  std::complex<double> value;
  double abs = 0.0;
};

/// Embed with v = √q and ζ_p = e^{2πi/p}.
ApproxValue approx_real(const ValueScalar& s, std::int64_t q);

/// Field element; the code is Σ c_i p^i over the polynomial basis 1, x, ..., x^{k-1}.
struct FqElem {
  std::uint32_t code = 0;
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/// F_{p^k} = F_p[x]/(modulus) with full addition and multiplication tables.
class FqCtx {
 public:
  FqCtx(unsigned p, unsigned k, std::vector<unsigned> modulus);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint32_t size() const { return q_; }
  std::span<const unsigned> modulus() const { return modulus_; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  FqElem from_int(std::int64_t n) const;
  FqElem from_coeffs(std::span<const unsigned> c) const;
  std::vector<unsigned> coeffs(FqElem x) const;
  /// The class of x (the polynomial generator); equals from_int(0) when k == 1.
  FqElem generator() const;

  FqElem add(FqElem a, FqElem b) const { return {add_[a.code * q_ + b.code]}; }
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem mul(FqElem a, FqElem b) const { return {mul_[a.code * q_ + b.code]}; }
  FqElem neg(FqElem a) const { return {neg_[a.code]}; }
  /// Throws std::domain_error on zero.
  FqElem inv(FqElem a) const;
  FqElem pow(FqElem a, std::uint64_t e) const;

  /// x ↦ x^{p^times}.
  FqElem frobenius(FqElem x, unsigned times = 1) const;
  bool in_subfield(FqElem x, unsigned m) const;
  /// Nontrivial automorphism of F_{p^k} over F_{p^{k/2}}; requires even k.
  FqElem conj(FqElem x) const;
  /// Norm to the index-2 subfield, x · conj(x).
  FqElem norm2(FqElem x) const { return mul(x, conj(x)); }

  std::vector<FqElem> elements() const;
  std::string to_string(FqElem x) const;

 private:
  unsigned p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> frob_;
};

using FqCtxPtr = std::shared_ptr<const FqCtx>;

/// Irreducibility of a monic polynomial over F_p (coefficients low to high).
bool is_irreducible(unsigned p, std::span<const unsigned> monic);

/// Field F_{p^k}. Without a modulus, the monic irreducible of least code Σ c_i p^i is used.
FqCtxPtr build_field(unsigned p, unsigned k, std::optional<std::vector<unsigned>> modulus = {});

/// Tr_{F_{p^k}/F_{p^m}}(x) = Σ_j x^{p^{mj}}; the result is in the subfield (same encoding).
FqElem fq_trace(const FqCtx& ctx, FqElem x, unsigned m);

/// ψ(t) = ζ_p^{Tr_{F_{p^k}/F_p}(t)}.
CycInt psi_char(const FqCtx& ctx, FqElem t);
/// ψ on the subfield F_{p^m}: ζ_p^{Tr_{F_{p^m}/F_p}(t)} for t in that subfield.
CycInt psi_char(const FqCtx& ctx, FqElem t, unsigned m);

}  // namespace sph
