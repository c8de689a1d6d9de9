#include "satake/hermitian.hpp"

#include <stdexcept>

#include "satake/errors.hpp"

namespace sph {

namespace {

void require_quadratic(const FqCtx& ctx) {
  if (ctx.k() % 2 != 0) throw std::invalid_argument("hermitian data needs a field of even degree");
  if (ctx.p() == 2) throw EvenCharacteristic("hermitian computations need odd residue characteristic");
}

}  // namespace

bool is_hermitian(const SeriesMatrix& s) {
  const auto& ctx = *s(0, 0).ctx();
  if (ctx.k() % 2 != 0 || s.rows() != s.cols()) return false;
  const auto t = conj_transpose(s);
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) {
      const auto diff = s(i, j) - t(i, j);
      if (!diff.is_zero()) return false;
    }
  return true;
}

void validate_hermitian(const SeriesMatrix& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("hermitian matrix must be square");
  if (s(0, 0).ctx()->k() % 2 != 0) throw std::invalid_argument("hermitian matrix needs a field of even degree");
  if (!is_hermitian(s)) throw std::invalid_argument("matrix is not hermitian");
}

TruncSeries norm_solve(const TruncSeries& u, int precision) {
  const auto& ctxp = u.ctx();
  const auto& ctx = *ctxp;
  require_quadratic(ctx);
  if (u.valuation() != std::optional<int>(0)) throw std::invalid_argument("norm_solve: argument must be a unit");
  if (!u.in_subfield(ctx.k() / 2)) throw std::invalid_argument("norm_solve: argument must lie in the base field");
  const FqElem u0 = u.coeff(0);
  FqElem w0 = ctx.zero();
  bool found = false;
  for (auto x : ctx.elements())
    if (ctx.norm2(x) == u0) {
      w0 = x;
      found = true;
      break;
    }
  if (!found) throw std::logic_error("norm_solve: norm map not surjective on residues");
  auto w = TruncSeries::monomial(ctxp, w0, 0);
  precision = std::min(precision, u.precision());
  // Each level solves Tr(c·w̄0) = t, taking c = t / (2 w̄0).
  const FqElem half_inv_conj = ctx.inv(ctx.mul(ctx.from_int(2), ctx.conj(w0)));
  for (int k = 1; k < precision; ++k) {
    const auto err = (u - w * w.conj()).truncated(k + 1);
    const FqElem t = err.coeff(k);
    if (t.code == 0) continue;
    w = w + TruncSeries::monomial(ctxp, ctx.mul(t, half_inv_conj), k);
  }
  return w.truncated(precision);
}

namespace {

SeriesMatrix elementary(const FqCtxPtr& ctx, int n, int row, int col, const TruncSeries& m) {
  auto e = identity_matrix(ctx, n);
  e(row, col) = m;
  return e;
}

}  // namespace

SeriesMatrix represent_hermitian(const SeriesMatrix& s0, int precision) {
  validate_hermitian(s0);
  const auto ctx = s0(0, 0).ctx();
  require_quadratic(*ctx);
  const int n = s0.rows();
  const auto det = determinant(s0);
  const auto vdet = det.valuation();
  if (!vdet) throw PrecisionExhausted("represent_hermitian: determinant not certified");
  if (*vdet % 2 != 0) throw OddDiscriminant("represent_hermitian: val det s = " + std::to_string(*vdet) + " is odd");
  const int work = precision + 2 * std::abs(*vdet) + 2 * n + 4;
  auto s = truncate_matrix(s0, work);
  auto pinv = identity_matrix(ctx, n);
  std::vector<bool> done(static_cast<std::size_t>(n), false);

  for (int step = 0; step < n; ++step) {
    int vmin = TruncSeries::kExact;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!done[static_cast<std::size_t>(i)] && !done[static_cast<std::size_t>(j)])
          if (auto v = s(i, j).valuation()) vmin = std::min(vmin, *v);
    if (vmin == TruncSeries::kExact) throw PrecisionExhausted("represent_hermitian: no certified pivot");
    int pivot = -1;
    for (int i = 0; i < n && pivot < 0; ++i)
      if (!done[static_cast<std::size_t>(i)] && s(i, i).valuation() == std::optional<int>(vmin)) pivot = i;
    if (pivot < 0) {
      // Minimum sits off the diagonal: add μ·(row j) to row i so the new diagonal reaches it.
      int pi = -1;
      int pj = -1;
      for (int i = 0; i < n && pi < 0; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && !done[static_cast<std::size_t>(i)] && !done[static_cast<std::size_t>(j)] &&
              s(i, j).valuation() == std::optional<int>(vmin)) {
            pi = i;
            pj = j;
            break;
          }
      const FqElem cji = s(pj, pi).coeff(vmin);
      FqElem mu = ctx->one();
      for (auto x : ctx->elements()) {
        const FqElem t = ctx->mul(x, cji);
        if (ctx->add(t, ctx->conj(t)).code != 0) {
          mu = x;
          break;
        }
      }
      const auto mus = TruncSeries::monomial(ctx, mu, 0);
      const auto e = elementary(ctx, n, pi, pj, mus);
      s = truncate_matrix(e * s * conj_transpose(e), work);
      pinv = pinv * elementary(ctx, n, pi, pj, -mus);
      pivot = pi;
    }
    const auto inv_pivot = s(pivot, pivot).inverse(work);
    for (int j = 0; j < n; ++j) {
      if (j == pivot || done[static_cast<std::size_t>(j)] || s(j, pivot).is_zero()) continue;
      const auto m = (s(j, pivot) * inv_pivot).truncated(work);
      const auto e = elementary(ctx, n, j, pivot, -m);
      s = truncate_matrix(e * s * conj_transpose(e), work);
      pinv = pinv * elementary(ctx, n, j, pivot, m);
    }
    done[static_cast<std::size_t>(pivot)] = true;
  }

  // s is now diagonal with entries in F; split each into g ᵗḡ.
  const unsigned half = ctx->k() / 2;
  auto g = zero_matrix(ctx, n);
  std::vector<int> odd;
  for (int i = 0; i < n; ++i) {
    const auto& d = s(i, i);
    const int v = *d.valuation();
    const auto unit = d.shifted(-v).truncated(work);
    if (v % 2 == 0) {
      g(i, i) = norm_solve(unit, work).shifted(v / 2);
    } else {
      odd.push_back(i);
    }
  }
  for (std::size_t t = 0; t + 1 < odd.size(); t += 2) {
    const int i1 = odd[t];
    const int i2 = odd[t + 1];
    const int a = *s(i1, i1).valuation();
    const int b = *s(i2, i2).valuation();
    const auto u1 = s(i1, i1).shifted(-a).truncated(work);
    const auto u2 = s(i2, i2).shifted(-b).truncated(work);
    // Rows (1, w) and μ(-w̄, 1) with N(w) = π u1 - 1 and N(μ) = u2/u1 give diag(π u1, π u2).
    const auto w = norm_solve((u1.shifted(1) - TruncSeries::constant(ctx, 1)).truncated(work), work);
    const auto mu = norm_solve((u2 * u1.inverse(work)).truncated(work), work);
    g(i1, i1) = TruncSeries::pi_power(ctx, (a - 1) / 2);
    g(i1, i2) = w.shifted((a - 1) / 2);
    g(i2, i1) = (-(mu * w.conj())).shifted((b - 1) / 2);
    g(i2, i2) = mu.shifted((b - 1) / 2);
  }
  (void)half;
  auto out = truncate_matrix(pinv * g, work);
  const auto check = out * conj_transpose(out);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(check(i, j) - s0(i, j)).truncated(precision).is_zero())
        throw PrecisionExhausted("represent_hermitian: verification failed at the requested precision");
  return truncate_matrix(out, precision);
}

namespace {

// Residue-level n×n matrix over the field, row-major.
using Res = std::vector<FqElem>;

struct UnitaryWalker {
  int n;
  int levels;
  FqCtxPtr ctxp;
  const FqCtx& ctx;
  std::vector<FqElem> skew_diag;  // x with x̄ = -x
  const std::function<void(const SeriesMatrix&)>* visit;
  std::int64_t count = 0;

  // coeffs[t] is the residue matrix of π^t.
  std::vector<Res> coeffs;

  FqElem& at(Res& m, int i, int j) const { return m[static_cast<std::size_t>(i * n + j)]; }
  FqElem at(const Res& m, int i, int j) const { return m[static_cast<std::size_t>(i * n + j)]; }

  void emit() {
    ++count;
    if (!visit || !*visit) return;
    auto h = zero_matrix(ctxp, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<FqElem> c(static_cast<std::size_t>(levels));
        for (int t = 0; t < levels; ++t) c[static_cast<std::size_t>(t)] = at(coeffs[static_cast<std::size_t>(t)], i, j);
        h(i, j) = TruncSeries::from_coeffs(ctxp, 0, c, levels);
      }
    (*visit)(h);
  }

  // Coefficient of π^k in 1 - h h* for the current partial lift (levels 0..k-1 known).
  Res defect(int k) const {
    Res r(static_cast<std::size_t>(n * n), ctx.zero());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        FqElem acc = ctx.zero();
        for (int a = 0; a <= k; ++a) {
          const int b = k - a;
          if (a >= k || b >= k) continue;
          for (int l = 0; l < n; ++l)
            acc = ctx.add(acc, ctx.mul(at(coeffs[static_cast<std::size_t>(a)], i, l),
                                       ctx.conj(at(coeffs[static_cast<std::size_t>(b)], j, l))));
        }
        at(r, i, j) = ctx.neg(acc);
      }
    return r;
  }

  void lift(int k) {
    if (k == levels) {
      emit();
      return;
    }
    const Res r = defect(k);
    const FqElem half = ctx.inv(ctx.from_int(2));
    // E = (R/2 + K) h0 for K skew-hermitian.
    std::vector<std::pair<int, int>> upper;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) upper.emplace_back(i, j);
    const auto all = ctx.elements();
    std::vector<std::size_t> di(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> ui(upper.size(), 0);
    auto bump = [](std::vector<std::size_t>& idx, std::size_t radix) {
      for (auto& x : idx) {
        if (++x < radix) return true;
        x = 0;
      }
      return false;
    };
    do {
      do {
        Res y(static_cast<std::size_t>(n * n));
        for (int i = 0; i < n; ++i) at(y, i, i) = ctx.add(ctx.mul(at(r, i, i), half), skew_diag[di[static_cast<std::size_t>(i)]]);
        for (std::size_t t = 0; t < upper.size(); ++t) {
          const auto [i, j] = upper[t];
          const FqElem kij = all[ui[t]];
          at(y, i, j) = ctx.add(ctx.mul(at(r, i, j), half), kij);
          at(y, j, i) = ctx.add(ctx.mul(at(r, j, i), half), ctx.neg(ctx.conj(kij)));
        }
        Res e(static_cast<std::size_t>(n * n), ctx.zero());
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            FqElem acc = ctx.zero();
            for (int l = 0; l < n; ++l) acc = ctx.add(acc, ctx.mul(at(y, i, l), at(coeffs[0], l, j)));
            at(e, i, j) = acc;
          }
        coeffs.push_back(e);
        lift(k + 1);
        coeffs.pop_back();
      } while (bump(ui, all.size()));
    } while (bump(di, skew_diag.size()));
  }

  // Residue level: orthonormal rows chosen one at a time.
  void rows(int i, Res& h0) {
    if (i == n) {
      coeffs.assign(1, h0);
      lift(1);
      coeffs.clear();
      return;
    }
    const auto all = ctx.elements();
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    do {
      for (int j = 0; j < n; ++j) at(h0, i, j) = all[idx[static_cast<std::size_t>(j)]];
      bool ok = true;
      for (int r = 0; r <= i && ok; ++r) {
        FqElem acc = ctx.zero();
        for (int j = 0; j < n; ++j) acc = ctx.add(acc, ctx.mul(at(h0, i, j), ctx.conj(at(h0, r, j))));
        ok = (r == i) ? acc == ctx.one() : acc.code == 0;
      }
      if (ok) rows(i + 1, h0);
    } while ([&] {
      for (auto& x : idx) {
        if (++x < all.size()) return true;
        x = 0;
      }
      return false;
    }());
  }
};

}  // namespace

void unitary_enumerate(int n, const FqCtxPtr& ctx, int levels, const std::function<void(const SeriesMatrix&)>& visit) {
  require_quadratic(*ctx);
  if (n < 1 || levels < 1) throw std::invalid_argument("unitary_enumerate: need n >= 1 and at least one level");
  UnitaryWalker w{n, levels, ctx, *ctx, {}, &visit, 0, {}};
  for (auto x : ctx->elements())
    if (ctx->add(ctx->conj(x), x).code == 0) w.skew_diag.push_back(x);
  Res h0(static_cast<std::size_t>(n * n), ctx->zero());
  w.rows(0, h0);
}

std::int64_t unitary_count(int n, const FqCtxPtr& ctx, int levels) {
  std::int64_t count = 0;
  unitary_enumerate(n, ctx, levels, [&](const SeriesMatrix&) { ++count; });
  return count;
}

std::int64_t unitary_expected_count(int n, std::int64_t q, int levels) {
  // |U(n,q)| = q^{n(n-1)/2} Π_{i=1}^{n} (q^i - (-1)^i).
  std::int64_t order = ipow(q, static_cast<unsigned>(n * (n - 1) / 2));
  for (int i = 1; i <= n; ++i) order = checked_mul(order, ipow(q, static_cast<unsigned>(i)) - (i % 2 == 0 ? 1 : -1));
  return checked_mul(order, ipow(q, static_cast<unsigned>(n * n * (levels - 1))));
}

std::map<NPartition, std::int64_t> bprime_profile(const SeriesMatrix& s0, int precision) {
  const auto ctx = s0(0, 0).ctx();
  require_quadratic(*ctx);
  const int n = s0.rows();
  const auto s = truncate_matrix(s0, precision);
  validate_hermitian(s);
  std::map<NPartition, std::int64_t> profile;
  if (!is_integral(s)) return profile;
  const auto vdet = determinant(s).valuation();
  if (!vdet) throw PrecisionExhausted("bprime: determinant of s not certified");
  if (*vdet % 2 != 0) return profile;
  const int m = *vdet / 2;
  if (m == 0) {
    profile[NPartition::zero(n)] = 1;
    return profile;
  }
  // L = g O_2^n is self-dual for s^{-1} iff ᵗḡ adj(s) g ≡ 0 mod π^{2m}.
  const auto adj = adjugate(s);
  for (const auto& d : compositions_of(m, n))
    mv_enumerate(d, ctx, [&](const LatticeGens& l) {
      const auto form = conj_transpose(l.gens) * adj * l.gens;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (form(i, j).val_or_prec() < 2 * m) {
            if (form(i, j).is_zero()) throw PrecisionExhausted("bprime: self-duality test beyond precision");
            return;
          }
      ++profile[NPartition(elementary_divisors(l.gens))];
    });
  return profile;
}

ValueScalar pair_profile(const HeckeElem& f, const std::map<NPartition, std::int64_t>& profile) {
  ValueScalar acc;
  for (const auto& [type, count] : profile) acc += f.coeff(type) * ValueScalar(count);
  return acc;
}

ValueScalar bprime(const HeckeElem& f, const SeriesMatrix& s, int precision) {
  if (f.r() != 2) throw std::invalid_argument("bprime: f must live in the degree-2 Hecke algebra");
  if (f.n() != s.rows()) throw std::invalid_argument("bprime: rank mismatch");
  return pair_profile(f, bprime_profile(s, precision));
}

}  // namespace sph
