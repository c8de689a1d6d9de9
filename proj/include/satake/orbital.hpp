#pragma once

// Characters θ and θ′, relative orbital integrals over unipotent cosets,
// their w₀ variants, and the harness comparing the two sides of the
// fundamental lemma.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "satake/hecke.hpp"
#include "satake/hermitian.hpp"
#include "satake/localmodel.hpp"

namespace sph {

/// Field embedding F_q → F_{q^e} sending the small generator to the least-code root of its modulus.
class FieldEmbedding {
 public:
  FieldEmbedding(FqCtxPtr small, FqCtxPtr big);
  FqElem operator()(FqElem x) const;
  TruncSeries operator()(const TruncSeries& x) const;
  const FqCtxPtr& small() const { return small_; }
  const FqCtxPtr& big() const { return big_; }

 private:
  FqCtxPtr small_;
  FqCtxPtr big_;
  std::vector<FqElem> image_;  // indexed by small code
};

/// a = diag(a_1, a_1^{-1}a_2, ..., a_{n-1}^{-1}a_n), described by the partial products a_i = u_i π^{v_i}
/// with residue units u_i ∈ F_q.
class TorusElem {
 public:
  TorusElem(FqCtxPtr ctx, std::vector<int> vals, std::vector<FqElem> units = {});
  /// (u π^d)·Id.
  static TorusElem central(FqCtxPtr ctx, int n, int d);

  int n() const { return static_cast<int>(vals_.size()); }
  const FqCtxPtr& ctx() const { return ctx_; }
  const std::vector<int>& vals() const { return vals_; }
  const std::vector<FqElem>& units() const { return units_; }
  /// Partial product a_i for 1 <= i <= n.
  TruncSeries partial(int i) const;
  std::vector<TruncSeries> diagonal() const;
  SeriesMatrix matrix() const;
  /// Same element over a larger field.
  SeriesMatrix matrix(const FieldEmbedding& emb) const;
  bool is_central() const;
  /// Σ_{i<n} val a_i.
  int sign_exponent() const;
  /// "1,0" or "1:2,0" (unit parts shown only when not 1).
  std::string to_string() const;

 private:
  FqCtxPtr ctx_;
  std::vector<int> vals_;
  std::vector<FqElem> units_;
};

/// θ_α(x) = ψ(Σ α_i res x_{i,i+1}) for unipotent upper triangular x over F_q.
CycInt theta(const SeriesMatrix& x, const std::vector<FqElem>& alpha);
/// θ′_α(x) = ψ(Σ α_i res(x_{i,i+1} + x̄_{i,i+1})) for x over F_{q²}; α lies in F_q ⊂ F_{q²}.
CycInt theta_prime(const SeriesMatrix& x, const std::vector<FqElem>& alpha);

struct MinorFactorization {
  SeriesMatrix x;                 // upper unipotent, g = ᵗx · diag · x′
  std::vector<TruncSeries> diag;  // a_1, a_1^{-1}a_2, ...
  std::vector<TruncSeries> partials;
  SeriesMatrix xp;
};
/// Throws SingularMinor when a leading principal minor is zero to precision.
MinorFactorization minor_factorize(const SeriesMatrix& g);

/// Character-weighted count of coset data by Cartan type; pairing with f gives the integral.
using TypeProfile = std::map<NPartition, ValueScalar>;
ValueScalar pair_profile(const HeckeElem& f, const TypeProfile& profile);

/// Pole bounds val(a_j) on x_{jk}, from the minors a_j·x_{jk} of ᵗx₁ a x₂.
PoleBounds support_bounds(const TorusElem& a);

/// Σ_{x₁,x₂} θ(x₁)θ(x₂) per type of ᵗx₁ a x₂, which is truncated to `precision`.
TypeProfile orbital_I_profile(const TorusElem& a, const std::vector<FqElem>& alpha, int precision);
ValueScalar orbital_I(const TorusElem& a, const std::vector<FqElem>& alpha, const HeckeElem& phi, int precision);

/// Σ_x θ′(x)·#{self-dual lattices of type λ for ᵗx̄ a x} over x ∈ N(F_2)/N(O_2).
TypeProfile orbital_J_profile(const TorusElem& a, const std::vector<FqElem>& alpha, const FqCtxPtr& ctx2, int precision);
/// Generic form with an arbitrary evaluator φ′ on hermitian matrices.
ValueScalar orbital_J(const TorusElem& a, const std::vector<FqElem>& alpha,
                      const std::function<ValueScalar(const SeriesMatrix&)>& phi_prime, const FqCtxPtr& ctx2,
                      int precision);

/// Σ_{x ∈ N(F)/N(O)} θ(x)·[type of w₀ a x] for central a.
TypeProfile orbital_I_w0_profile(const TorusElem& a, const std::vector<FqElem>& alpha, int precision);
/// Same over x with entries in F and x_{23} = x_{12}, weighted by θ′(x) and the b′ lattice counts of w₀ a x.
TypeProfile orbital_J_w0_profile(const TorusElem& a, const std::vector<FqElem>& alpha, const FqCtxPtr& ctx2,
                                 int precision);
ValueScalar orbital_I_w0(const TorusElem& a, const std::vector<FqElem>& alpha, const HeckeElem& phi, int precision);
ValueScalar orbital_J_w0(const TorusElem& a, const std::vector<FqElem>& alpha, const HeckeElem& f, const FqCtxPtr& ctx2,
                         int precision);

/// Σ_{x ∈ F_q^×} ψ(αx + β/x).
CycInt kloosterman(const FqCtx& ctx, FqElem alpha, FqElem beta);

/// Window large enough for every type computation on the support of a.
int default_precision(const TorusElem& a);

struct Report {
  std::string id;
  std::string kind;  // "fl" or "w0"
  int n = 0;
  std::int64_t q = 0;
  std::string a;
  std::string alpha;
  std::string f;
  ValueScalar lhs;
  ValueScalar rhs;
  ValueScalar lhs_at_q;
  ValueScalar rhs_at_q;
  int sign_exponent = 0;
  bool pass = false;
  bool stable = true;
  int precision = 0;
  std::string error;
  bool precision_error = false;
  double seconds = 0;
};

struct NamedHecke {
  std::string label;
  HeckeElem f;  // r = 2
};

/// I(a, b(f)) against (-1)^{val(a_1⋯a_{n-1})} J(a, b′(f)) for every a and f, at precision N and N+2.
/// precision <= 0 picks default_precision per a. Reports come back in (a, f) order for any job count.
std::vector<Report> verify_fundamental_lemma(const std::vector<TorusElem>& as, const std::vector<FqElem>& alpha,
                                    const std::vector<NamedHecke>& fs, const FqCtxPtr& ctx2, int precision = 0,
                                    int jobs = 1);
/// I(w₀π^d, b(f)) against (-1)^{d·n(n-1)/2} J(w₀π^d, b′(f)).
std::vector<Report> verify_w0_identity(int n, const std::vector<int>& ds, const std::vector<FqElem>& alpha,
                                    const std::vector<NamedHecke>& fs, const FqCtxPtr& ctx, const FqCtxPtr& ctx2,
                                    int precision = 0, int jobs = 1);

/// Closed-form satake(c_λ) coefficients against lattice counting, for every |λ| <= max_weight and
/// every exponent d of that weight. Values compare at v² = q; the oracle is re-run at precision N+2.
std::vector<Report> verify_satake_oracle(int n, const FqCtxPtr& ctx, int max_weight, int precision = 0, int jobs = 1);

/// Run body(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(int count, int jobs, const std::function<void(int)>& body);

}  // namespace sph
