#pragma once

// Spherical Hecke algebra of GL(n) over a local field with residue field of size q^r,
// on the Cartan basis c_λ, with the Satake transform and base change.

#include <map>
#include <string>

#include "satake/exactnum.hpp"
#include "satake/localmodel.hpp"
#include "satake/partitions.hpp"
#include "satake/symfunc.hpp"

namespace sph {

class HeckeElem {
 public:
  using Terms = std::map<NPartition, ValueScalar, std::greater<NPartition>>;

  HeckeElem(int n, int r);
  HeckeElem(int n, int r, Terms terms);
  /// c_λ.
  static HeckeElem basis(const NPartition& lambda, int r);
  static HeckeElem unit(int n, int r) { return basis(NPartition::zero(n), r); }

  int n() const { return n_; }
  int r() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of c_λ.
  ValueScalar coeff(const NPartition& lambda) const;

  HeckeElem& operator+=(const HeckeElem& o);
  HeckeElem& operator-=(const HeckeElem& o);
  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
  HeckeElem scaled(const ValueScalar& c) const;

  friend bool operator==(const HeckeElem& a, const HeckeElem& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  int r_;
  Terms terms_;

  void add_term(const NPartition& l, const ValueScalar& c);
};

/// Φ_r(c_λ) = v^{r·2⟨λ,δ⟩} P_λ(z; v^{-2r}), extended linearly.
SymPoly satake(const HeckeElem& f);
/// Inverse of satake by unitriangular back-substitution.
HeckeElem satake_inv(const SymPoly& p, int r);
/// a_λ = Φ_r^{-1}(s_λ).
HeckeElem a_basis(const NPartition& lambda, int r);
/// b(f) = Φ_1^{-1}(adams(Φ_r(f), r)).
HeckeElem base_change(const HeckeElem& f);
HeckeElem convolve(const HeckeElem& f, const HeckeElem& g);
/// f evaluated at a matrix: the coefficient of its Cartan type (zero off the support).
ValueScalar eval_hecke(const HeckeElem& f, const SeriesMatrix& m);
ValueScalar eval_on_type(const HeckeElem& f, const std::optional<NPartition>& type);

/// Constant term by lattice enumeration: v^{-2⟨d,δ⟩} Σ_{L ∈ S_d} f(L). Requires r = 1.
/// Generators are truncated to `precision` before their type is read off.
ValueScalar satake_oracle(const HeckeElem& f, const Composition& d, const FqCtxPtr& ctx,
                          int precision = TruncSeries::kExact);
/// #{R' : O^n/R' of type λ, R'/M O^n of type μ}.
std::int64_t convolve_oracle(const NPartition& lambda, const NPartition& mu, const SeriesMatrix& m, const FqCtxPtr& ctx);

/// Parse "c:2,0", "a:1,1", "2*c:1,0 + a:0,0", "-v^-2*c:1,1".
HeckeElem parse_hecke(const std::string& text, int n, int r);

}  // namespace sph
