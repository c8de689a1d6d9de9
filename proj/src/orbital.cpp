#include "satake/orbital.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "satake/errors.hpp"

namespace sph {

FieldEmbedding::FieldEmbedding(FqCtxPtr small, FqCtxPtr big) : small_(std::move(small)), big_(std::move(big)) {
  if (small_->p() != big_->p() || big_->k() % small_->k() != 0)
    throw std::invalid_argument("field embedding: degrees are incompatible");
  const auto& S = *small_;
  const auto& B = *big_;
  FqElem root = B.zero();
  if (S.k() > 1) {
    const auto mod = S.modulus();
    bool found = false;
    for (auto r : B.elements()) {
      FqElem acc = B.zero();
      for (std::size_t i = mod.size(); i-- > 0;) acc = B.add(B.mul(acc, r), B.from_int(mod[i]));
      if (acc.code == 0) {
        root = r;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("field embedding: modulus has no root in the larger field");
  }
  image_.resize(S.size());
  for (auto x : S.elements()) {
    const auto c = S.coeffs(x);
    FqElem acc = B.zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = B.add(B.mul(acc, root), B.from_int(c[i]));
    image_[x.code] = acc;
  }
}

FqElem FieldEmbedding::operator()(FqElem x) const { return image_.at(x.code); }

TruncSeries FieldEmbedding::operator()(const TruncSeries& x) const {
  if (x.is_zero()) return TruncSeries(big_, x.precision());
  std::vector<FqElem> c;
  for (int e = x.lo(); e < x.hi(); ++e) c.push_back((*this)(x.coeff(e)));
  return TruncSeries::from_coeffs(big_, x.lo(), c, x.precision());
}

TorusElem::TorusElem(FqCtxPtr ctx, std::vector<int> vals, std::vector<FqElem> units)
    : ctx_(std::move(ctx)), vals_(std::move(vals)), units_(std::move(units)) {
  if (vals_.empty()) throw std::invalid_argument("torus element needs at least one entry");
  if (units_.empty()) units_.assign(vals_.size(), ctx_->one());
  if (units_.size() != vals_.size()) throw std::invalid_argument("torus element: unit and valuation counts differ");
  for (auto u : units_)
    if (u.code == 0) throw std::invalid_argument("torus element: unit parts must be nonzero");
}

TorusElem TorusElem::central(FqCtxPtr ctx, int n, int d) {
  std::vector<int> vals;
  for (int i = 1; i <= n; ++i) vals.push_back(i * d);
  return TorusElem(std::move(ctx), std::move(vals));
}

TruncSeries TorusElem::partial(int i) const {
  return TruncSeries::monomial(ctx_, units_.at(static_cast<std::size_t>(i - 1)), vals_.at(static_cast<std::size_t>(i - 1)));
}

std::vector<TruncSeries> TorusElem::diagonal() const {
  std::vector<TruncSeries> d;
  for (int i = 0; i < n(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (i == 0) {
      d.push_back(TruncSeries::monomial(ctx_, units_[0], vals_[0]));
    } else {
      d.push_back(TruncSeries::monomial(ctx_, ctx_->mul(units_[ui], ctx_->inv(units_[ui - 1])), vals_[ui] - vals_[ui - 1]));
    }
  }
  return d;
}

SeriesMatrix TorusElem::matrix() const { return diagonal_matrix(diagonal()); }

SeriesMatrix TorusElem::matrix(const FieldEmbedding& emb) const {
  std::vector<TruncSeries> d;
  for (const auto& x : diagonal()) d.push_back(emb(x));
  return diagonal_matrix(d);
}

bool TorusElem::is_central() const {
  const auto d = diagonal();
  for (const auto& x : d)
    if (!(x == d[0])) return false;
  return true;
}

int TorusElem::sign_exponent() const {
  int s = 0;
  for (int i = 0; i + 1 < n(); ++i) s += vals_[static_cast<std::size_t>(i)];
  return s;
}

std::string TorusElem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vals_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vals_[i]);
    if (units_[i] != ctx_->one()) {
      out += ":";
      auto c = ctx_->coeffs(units_[i]);
      while (c.size() > 1 && c.back() == 0) c.pop_back();
      for (std::size_t j = 0; j < c.size(); ++j) out += (j ? "/" : "") + std::to_string(c[j]);
    }
  }
  return out;
}

namespace {

void check_alpha(const std::vector<FqElem>& alpha, int n) {
  if (static_cast<int>(alpha.size()) != n - 1)
    throw std::invalid_argument("alpha must have n-1 entries, got " + std::to_string(alpha.size()));
  for (auto x : alpha)
    if (x.code == 0) throw std::invalid_argument("alpha entries must be nonzero");
}

void check_rank(int n) {
  if (n < 1 || n > 3) throw UnsupportedRank("orbital integrals are implemented for n <= 3, got n = " + std::to_string(n));
}

FqElem residue_sum(const SeriesMatrix& x, const std::vector<FqElem>& alpha) {
  const auto& ctx = *x(0, 0).ctx();
  FqElem acc = ctx.zero();
  for (int i = 0; i + 1 < x.rows(); ++i) acc = ctx.add(acc, ctx.mul(alpha[static_cast<std::size_t>(i)], residue(x(i, i + 1))));
  return acc;
}

using CycProfile = std::map<NPartition, CycInt>;

TypeProfile finish(const CycProfile& p) {
  TypeProfile out;
  for (const auto& [t, c] : p)
    if (!c.is_zero()) out.emplace(t, ValueScalar(c));
  return out;
}

SeriesMatrix long_element(const FqCtxPtr& ctx, int n) {
  auto w = zero_matrix(ctx, n);
  for (int i = 0; i < n; ++i) w(i, n - 1 - i) = TruncSeries::constant(ctx, 1);
  return w;
}

std::vector<FqElem> embed_all(const FieldEmbedding& emb, const std::vector<FqElem>& xs) {
  std::vector<FqElem> out;
  for (auto x : xs) out.push_back(emb(x));
  return out;
}

void check_quadratic(const FqCtx& small, const FqCtx& big) {
  if (big.p() != small.p() || big.k() != 2 * small.k())
    throw std::invalid_argument("hermitian side needs the quadratic extension of the base field");
  if (big.p() == 2) throw EvenCharacteristic("hermitian side needs odd residue characteristic");
}

}  // namespace

CycInt theta(const SeriesMatrix& x, const std::vector<FqElem>& alpha) {
  check_alpha(alpha, x.rows());
  return psi_char(*x(0, 0).ctx(), residue_sum(x, alpha));
}

CycInt theta_prime(const SeriesMatrix& x, const std::vector<FqElem>& alpha) {
  check_alpha(alpha, x.rows());
  const auto& ctx = *x(0, 0).ctx();
  if (ctx.k() % 2 != 0) throw std::invalid_argument("theta_prime needs an even-degree field");
  const FqElem t = residue_sum(x, alpha);
  // Σ α_i (r_i + r̄_i) = t + t̄ since α_i is conjugation-fixed.
  return psi_char(ctx, ctx.add(t, ctx.conj(t)), ctx.k() / 2);
}

MinorFactorization minor_factorize(const SeriesMatrix& g) {
  const int n = g.rows();
  if (g.cols() != n) throw std::invalid_argument("minor_factorize: matrix must be square");
  const auto ctx = g(0, 0).ctx();
  int cap = TruncSeries::kExact;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cap = std::min(cap, g(i, j).precision());
  if (cap == TruncSeries::kExact) cap = 64;
  auto lower = identity_matrix(ctx, n);
  auto upper = identity_matrix(ctx, n);
  std::vector<TruncSeries> d;
  for (int i = 0; i < n; ++i) {
    auto di = g(i, i);
    for (int k = 0; k < i; ++k) di = di - lower(i, k) * d[static_cast<std::size_t>(k)] * upper(k, i);
    if (di.is_zero()) throw SingularMinor("leading principal minor " + std::to_string(i + 1) + " vanishes to precision");
    d.push_back(di);
    const auto inv = di.inverse(cap);
    for (int j = i + 1; j < n; ++j) {
      auto u = g(i, j);
      auto l = g(j, i);
      for (int k = 0; k < i; ++k) {
        u = u - lower(i, k) * d[static_cast<std::size_t>(k)] * upper(k, j);
        l = l - lower(j, k) * d[static_cast<std::size_t>(k)] * upper(k, i);
      }
      upper(i, j) = u * inv;
      lower(j, i) = l * inv;
    }
  }
  MinorFactorization out{lower.transpose(), d, {}, upper};
  auto acc = TruncSeries::constant(ctx, 1);
  for (const auto& x : d) {
    acc = acc * x;
    out.partials.push_back(acc);
  }
  return out;
}

ValueScalar pair_profile(const HeckeElem& f, const TypeProfile& profile) {
  ValueScalar acc;
  for (const auto& [type, w] : profile) acc += f.coeff(type) * w;
  return acc;
}

PoleBounds support_bounds(const TorusElem& a) {
  check_rank(a.n());
  const auto& v = a.vals();
  for (int x : v)
    if (x < 0) throw std::invalid_argument("support_bounds: empty support for negative valuations");
  switch (a.n()) {
    case 1:
      return {1, {}};
    case 2:
      return {2, {v[0]}};
    default:
      return {3, {v[0], v[1], v[0]}};
  }
}

namespace {

bool empty_support(const TorusElem& a) {
  for (int x : a.vals())
    if (x < 0) return true;
  return false;
}

std::vector<SeriesMatrix> cosets(const PoleBounds& pb, const FqCtxPtr& ctx, const std::vector<FqElem>& alphabet = {}) {
  std::vector<SeriesMatrix> out;
  if (pb.n == 1) {
    out.push_back(identity_matrix(ctx, 1));
    return out;
  }
  unipotent_cosets(pb, ctx, [&](const SeriesMatrix& x) { out.push_back(x); }, alphabet);
  return out;
}

}  // namespace

TypeProfile orbital_I_profile(const TorusElem& a, const std::vector<FqElem>& alpha, int precision) {
  check_rank(a.n());
  check_alpha(alpha, a.n());
  if (empty_support(a)) return {};
  const auto ctx = a.ctx();
  const auto xs = cosets(support_bounds(a), ctx);
  std::vector<CycInt> th;
  for (const auto& x : xs) th.push_back(a.n() == 1 ? CycInt(1) : theta(x, alpha));
  const auto A = a.matrix();
  CycProfile acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto left = xs[i].transpose() * A;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const auto type = cartan_type(truncate_matrix(left * xs[j], precision));
      if (!type) continue;
      auto [it, inserted] = acc.emplace(*type, th[i] * th[j]);
      if (!inserted) it->second += th[i] * th[j];
    }
  }
  return finish(acc);
}

ValueScalar orbital_I(const TorusElem& a, const std::vector<FqElem>& alpha, const HeckeElem& phi, int precision) {
  if (phi.n() != a.n() || phi.r() != 1) throw std::invalid_argument("orbital_I: phi must be a rank-n function with r = 1");
  return pair_profile(phi, orbital_I_profile(a, alpha, precision));
}

namespace {

template <typename Visit>
void for_each_j_coset(const TorusElem& a, const std::vector<FqElem>& alpha, const FqCtxPtr& ctx2, int precision,
                      Visit&& visit) {
  check_rank(a.n());
  check_alpha(alpha, a.n());
  check_quadratic(*a.ctx(), *ctx2);
  if (empty_support(a)) return;
  const FieldEmbedding emb(a.ctx(), ctx2);
  const auto alpha2 = embed_all(emb, alpha);
  const auto A = a.matrix(emb);
  for (const auto& x : cosets(support_bounds(a), ctx2)) {
    const auto s = truncate_matrix(conj_transpose(x) * A * x, precision);
    visit(s, a.n() == 1 ? CycInt(1) : theta_prime(x, alpha2));
  }
}

}  // namespace

TypeProfile orbital_J_profile(const TorusElem& a, const std::vector<FqElem>& alpha, const FqCtxPtr& ctx2, int precision) {
  CycProfile acc;
  for_each_j_coset(a, alpha, ctx2, precision, [&](const SeriesMatrix& s, const CycInt& th) {
    for (const auto& [type, count] : bprime_profile(s, precision)) {
      auto term = th * CycInt(count);
      auto [it, inserted] = acc.emplace(type, term);
      if (!inserted) it->second += term;
    }
  });
  return finish(acc);
}

ValueScalar orbital_J(const TorusElem& a, const std::vector<FqElem>& alpha,
                      const std::function<ValueScalar(const SeriesMatrix&)>& phi_prime, const FqCtxPtr& ctx2,
                      int precision) {
  ValueScalar acc;
  for_each_j_coset(a, alpha, ctx2, precision,
                   [&](const SeriesMatrix& s, const CycInt& th) { acc += phi_prime(s) * ValueScalar(th); });
  return acc;
}

namespace {

int central_exponent(const TorusElem& a) {
  check_rank(a.n());
  if (!a.is_central()) throw std::invalid_argument("w0 integrals need a central torus element");
  return a.vals()[0];
}

}  // namespace

TypeProfile orbital_I_w0_profile(const TorusElem& a, const std::vector<FqElem>& alpha, int precision) {
  const int d = central_exponent(a);
  check_alpha(alpha, a.n());
  if (d < 0) return {};
  const int n = a.n();
  const auto ctx = a.ctx();
  const auto wa = long_element(ctx, n) * a.matrix();
  PoleBounds pb{n, std::vector<int>(static_cast<std::size_t>(n * (n - 1) / 2), d)};
  CycProfile acc;
  for (const auto& x : cosets(pb, ctx)) {
    const auto type = cartan_type(truncate_matrix(wa * x, precision));
    if (!type) continue;
    const CycInt th = n == 1 ? CycInt(1) : theta(x, alpha);
    auto [it, inserted] = acc.emplace(*type, th);
    if (!inserted) it->second += th;
  }
  return finish(acc);
}

TypeProfile orbital_J_w0_profile(const TorusElem& a, const std::vector<FqElem>& alpha, const FqCtxPtr& ctx2,
                                 int precision) {
  const int d = central_exponent(a);
  check_alpha(alpha, a.n());
  check_quadratic(*a.ctx(), *ctx2);
  if (d < 0) return {};
  const int n = a.n();
  const FieldEmbedding emb(a.ctx(), ctx2);
  const auto alpha2 = embed_all(emb, alpha);
  const auto wa = long_element(ctx2, n) * a.matrix(emb);
  const auto base = subfield_elements(*ctx2, ctx2->k() / 2);
  CycProfile acc;
  auto visit = [&](const SeriesMatrix& x) {
    const auto s = truncate_matrix(wa * x, precision);
    if (!is_hermitian(s)) throw std::logic_error("w0 a x is not hermitian");
    const CycInt th = n == 1 ? CycInt(1) : theta_prime(x, alpha2);
    for (const auto& [type, count] : bprime_profile(s, precision)) {
      auto term = th * CycInt(count);
      auto [it, inserted] = acc.emplace(type, term);
      if (!inserted) it->second += term;
    }
  };
  if (n == 1) {
    visit(identity_matrix(ctx2, 1));
  } else if (n == 2) {
    for_each_principal_parts(ctx2, {d}, base, [&](const std::vector<TruncSeries>& p) {
      visit(unipotent_from_entries(ctx2, 2, p));
    });
  } else {
    // Hermitian w₀ a x forces x_{23} = x̄_{12} = x_{12} and x_{13} ∈ F.
    for_each_principal_parts(ctx2, {d, d}, base, [&](const std::vector<TruncSeries>& p) {
      visit(unipotent_from_entries(ctx2, 3, {p[0], p[0], p[1]}));
    });
  }
  return finish(acc);
}

ValueScalar orbital_I_w0(const TorusElem& a, const std::vector<FqElem>& alpha, const HeckeElem& phi, int precision) {
  if (phi.n() != a.n() || phi.r() != 1) throw std::invalid_argument("orbital_I_w0: phi must be a rank-n function with r = 1");
  return pair_profile(phi, orbital_I_w0_profile(a, alpha, precision));
}

ValueScalar orbital_J_w0(const TorusElem& a, const std::vector<FqElem>& alpha, const HeckeElem& f, const FqCtxPtr& ctx2,
                         int precision) {
  if (f.n() != a.n() || f.r() != 2) throw std::invalid_argument("orbital_J_w0: f must be a rank-n function with r = 2");
  return pair_profile(f, orbital_J_w0_profile(a, alpha, ctx2, precision));
}

CycInt kloosterman(const FqCtx& ctx, FqElem alpha, FqElem beta) {
  if (alpha.code == 0 || beta.code == 0) throw std::invalid_argument("kloosterman: alpha and beta must be nonzero");
  CycInt acc(0);
  for (auto x : ctx.elements()) {
    if (x.code == 0) continue;
    acc += psi_char(ctx, ctx.add(ctx.mul(alpha, x), ctx.mul(beta, ctx.inv(x))));
  }
  return acc;
}

int default_precision(const TorusElem& a) {
  int m = 0;
  for (int v : a.vals()) m = std::max(m, std::abs(v));
  return 2 * m + 2 * a.n() + 2;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(jobs, count); ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

std::string alpha_string(const FqCtx& ctx, const std::vector<FqElem>& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) s += (i ? "," : "") + ctx.to_string(alpha[i]);
  return s;
}

struct Profiles {
  TypeProfile i;
  TypeProfile j;
};

// Compare each f at windows N and N+2; a profile failure marks every report of the block.
std::vector<Report> compare_block(const Report& stub, const std::function<Profiles(int)>& profiles,
                                  const std::vector<NamedHecke>& fs, int precision) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Report> out;
  std::optional<Profiles> lo;
  std::optional<Profiles> hi;
  std::string error;
  bool precision_error = false;
  try {
    lo = profiles(precision);
    hi = profiles(precision + 2);
  } catch (const PrecisionExhausted& e) {
    error = e.what();
    precision_error = true;
  } catch (const std::exception& e) {
    error = e.what();
  }
  for (const auto& nf : fs) {
    Report r = stub;
    r.f = nf.label;
    r.id = stub.id + "/f=" + nf.label;
    r.precision = precision;
    if (!error.empty()) {
      r.error = error;
      r.precision_error = precision_error;
      r.pass = false;
      out.push_back(r);
      continue;
    }
    const auto bf = base_change(nf.f);
    r.lhs = pair_profile(bf, lo->i);
    r.rhs = pair_profile(nf.f, lo->j);
    r.stable = r.lhs == pair_profile(bf, hi->i) && r.rhs == pair_profile(nf.f, hi->j);
    // Lattice counts on the hermitian side are integers in q, so compare at v² = q.
    r.lhs_at_q = r.lhs.specialize(r.q);
    r.rhs_at_q = r.rhs.specialize(r.q);
    const ValueScalar expected = r.sign_exponent % 2 == 0 ? r.rhs_at_q : -r.rhs_at_q;
    r.pass = r.stable && r.lhs_at_q == expected;
    if (!r.stable) r.error = "values differ between precision " + std::to_string(precision) + " and " + std::to_string(precision + 2);
    out.push_back(r);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : out) r.seconds = secs / static_cast<double>(std::max<std::size_t>(1, out.size()));
  return out;
}

void check_fs(const std::vector<NamedHecke>& fs, int n) {
  for (const auto& nf : fs)
    if (nf.f.n() != n || nf.f.r() != 2)
      throw std::invalid_argument("test function " + nf.label + " must have rank " + std::to_string(n) + " and r = 2");
}

std::vector<Report> flatten(std::vector<std::vector<Report>>&& blocks) {
  std::vector<Report> out;
  for (auto& b : blocks)
    for (auto& r : b) out.push_back(std::move(r));
  return out;
}

}  // namespace

std::vector<Report> verify_fundamental_lemma(const std::vector<TorusElem>& as, const std::vector<FqElem>& alpha,
                                    const std::vector<NamedHecke>& fs, const FqCtxPtr& ctx2, int precision, int jobs) {
  std::vector<std::vector<Report>> blocks(as.size());
  for (const auto& a : as) check_fs(fs, a.n());
  parallel_for(static_cast<int>(as.size()), jobs, [&](int idx) {
    const auto& a = as[static_cast<std::size_t>(idx)];
    Report stub;
    stub.kind = "fl";
    stub.n = a.n();
    stub.q = a.ctx()->size();
    stub.a = a.to_string();
    stub.alpha = alpha_string(*a.ctx(), alpha);
    stub.sign_exponent = a.sign_exponent();
    stub.id = "fl/n=" + std::to_string(a.n()) + "/q=" + std::to_string(stub.q) + "/a=" + stub.a;
    const int n0 = precision > 0 ? precision : default_precision(a);
    blocks[static_cast<std::size_t>(idx)] = compare_block(
        stub, [&](int prec) { return Profiles{orbital_I_profile(a, alpha, prec), orbital_J_profile(a, alpha, ctx2, prec)}; },
        fs, n0);
  });
  return flatten(std::move(blocks));
}

std::vector<Report> verify_w0_identity(int n, const std::vector<int>& ds, const std::vector<FqElem>& alpha,
                                    const std::vector<NamedHecke>& fs, const FqCtxPtr& ctx, const FqCtxPtr& ctx2,
                                    int precision, int jobs) {
  check_rank(n);
  check_fs(fs, n);
  std::vector<std::vector<Report>> blocks(ds.size());
  parallel_for(static_cast<int>(ds.size()), jobs, [&](int idx) {
    const int d = ds[static_cast<std::size_t>(idx)];
    const auto a = TorusElem::central(ctx, n, d);
    Report stub;
    stub.kind = "w0";
    stub.n = n;
    stub.q = ctx->size();
    stub.a = "w0*pi^" + std::to_string(d);
    stub.alpha = alpha_string(*ctx, alpha);
    stub.sign_exponent = d * n * (n - 1) / 2;
    stub.id = "w0/n=" + std::to_string(n) + "/q=" + std::to_string(stub.q) + "/d=" + std::to_string(d);
    const int n0 = precision > 0 ? precision : default_precision(a);
    blocks[static_cast<std::size_t>(idx)] = compare_block(
        stub,
        [&](int prec) {
          return Profiles{orbital_I_w0_profile(a, alpha, prec), orbital_J_w0_profile(a, alpha, ctx2, prec)};
        },
        fs, n0);
  });
  return flatten(std::move(blocks));
}

std::vector<Report> verify_satake_oracle(int n, const FqCtxPtr& ctx, int max_weight, int precision, int jobs) {
  if (n < 1) throw std::invalid_argument("verify_satake_oracle: n must be positive");
  std::vector<NPartition> lambdas;
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& l : partitions_of(w, n)) lambdas.push_back(l);
  std::vector<std::vector<Report>> blocks(lambdas.size());
  const std::int64_t q = ctx->size();
  parallel_for(static_cast<int>(lambdas.size()), jobs, [&](int idx) {
    const auto& lambda = lambdas[static_cast<std::size_t>(idx)];
    const auto f = HeckeElem::basis(lambda, 1);
    const auto closed = satake(f);
    const int n0 = precision > 0 ? precision : 2 * lambda.weight() + 4;
    for (const auto& d : compositions_of(lambda.weight(), n)) {
      const auto start = std::chrono::steady_clock::now();
      Report r;
      r.kind = "satake-oracle";
      r.n = n;
      r.q = q;
      r.a = d.to_string();
      r.f = "c:" + lambda.to_string();
      r.id = "satake-oracle/n=" + std::to_string(n) + "/q=" + std::to_string(q) + "/f=" + r.f + "/d=" + r.a;
      r.precision = n0;
      try {
        r.lhs = closed.coeff(d);
        r.rhs = satake_oracle(f, d, ctx, n0);
        r.lhs_at_q = r.lhs.specialize(q);
        r.rhs_at_q = r.rhs.specialize(q);
        r.stable = r.rhs == satake_oracle(f, d, ctx, n0 + 2);
        r.pass = r.stable && r.lhs_at_q == r.rhs_at_q;
        if (!r.stable) r.error = "oracle differs between precision " + std::to_string(n0) + " and " + std::to_string(n0 + 2);
      } catch (const PrecisionExhausted& e) {
        r.error = e.what();
        r.precision_error = true;
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      blocks[static_cast<std::size_t>(idx)].push_back(std::move(r));
    }
  });
  return flatten(std::move(blocks));
}

}  // namespace sph
