#include <algorithm>
#include <map>
#include <stdexcept>

#include "satake/errors.hpp"
#include "satake/localmodel.hpp"

namespace sph {

SeriesMatrix zero_matrix(const FqCtxPtr& ctx, int n) { return SeriesMatrix(n, n, TruncSeries(ctx)); }

SeriesMatrix identity_matrix(const FqCtxPtr& ctx, int n) {
  auto m = zero_matrix(ctx, n);
  for (int i = 0; i < n; ++i) m(i, i) = TruncSeries::constant(ctx, 1);
  return m;
}

SeriesMatrix diagonal_matrix(const std::vector<TruncSeries>& d) {
  if (d.empty()) throw std::invalid_argument("diagonal_matrix: empty diagonal");
  const int n = static_cast<int>(d.size());
  auto m = zero_matrix(d.front().ctx(), n);
  for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

SeriesMatrix conj_transpose(const SeriesMatrix& m) {
  return m.transpose().map([](const TruncSeries& x) { return x.conj(); });
}

SeriesMatrix matrix_frobenius(const SeriesMatrix& m, unsigned times) {
  return m.map([times](const TruncSeries& x) { return x.frobenius(times); });
}

SeriesMatrix truncate_matrix(const SeriesMatrix& m, int precision) {
  return m.map([precision](const TruncSeries& x) { return x.truncated(precision); });
}

namespace {

TruncSeries minor_det(const SeriesMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const auto k = rows.size();
  if (k == 1) return m(rows[0], cols[0]);
  if (k == 2) return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  // Laplace expansion along the first row.
  TruncSeries acc(m(0, 0).ctx());
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<int> sub_cols;
    for (std::size_t t = 0; t < k; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    auto term = m(rows[0], cols[j]) * minor_det(m, sub_rows, sub_cols);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

std::vector<int> all_indices(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace

TruncSeries determinant(const SeriesMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const auto idx = all_indices(m.rows());
  return minor_det(m, idx, idx);
}

SeriesMatrix adjugate(const SeriesMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("adjugate: matrix not square");
  auto out = zero_matrix(m(0, 0).ctx(), n);
  if (n == 1) {
    out(0, 0) = TruncSeries::constant(m(0, 0).ctx(), 1);
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows;
      std::vector<int> cols;
      for (int t = 0; t < n; ++t) {
        if (t != j) rows.push_back(t);
        if (t != i) cols.push_back(t);
      }
      auto c = minor_det(m, rows, cols);
      out(i, j) = ((i + j) % 2 == 0) ? c : -c;
    }
  return out;
}

int min_valuation(const SeriesMatrix& m) {
  int v = TruncSeries::kExact;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v = std::min(v, m(i, j).val_or_prec());
  return v;
}

bool is_integral(const SeriesMatrix& m) { return min_valuation(m) >= 0; }

std::vector<int> elementary_divisors(const SeriesMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("elementary_divisors: matrix not square");
  // D_k = min valuation of k×k minors; invariant factors are successive differences.
  std::vector<int> det_div(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) {
    int certified = TruncSeries::kExact;
    int uncertain = TruncSeries::kExact;
    const auto sets = subsets(n, k);
    for (const auto& rows : sets)
      for (const auto& cols : sets) {
        const auto d = minor_det(m, rows, cols);
        if (auto v = d.valuation())
          certified = std::min(certified, *v);
        else
          uncertain = std::min(uncertain, d.precision());
      }
    if (certified == TruncSeries::kExact || certified > uncertain)
      throw PrecisionExhausted("elementary divisors: " + std::to_string(k) + "x" + std::to_string(k) +
                               " minors not certified at this precision");
    det_div[static_cast<std::size_t>(k)] = certified;
  }
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    e[static_cast<std::size_t>(k) - 1] = det_div[static_cast<std::size_t>(k)] - det_div[static_cast<std::size_t>(k) - 1];
  std::sort(e.begin(), e.end(), std::greater<>());
  return e;
}

std::optional<NPartition> cartan_type(const SeriesMatrix& m) {
  if (!is_integral(m)) return std::nullopt;
  return NPartition(elementary_divisors(m));
}

namespace {

// Odometer over alphabet indices for `digits` positions.
bool advance(std::vector<std::size_t>& idx, std::size_t radix) {
  for (auto& x : idx) {
    if (++x < radix) return true;
    x = 0;
  }
  return false;
}

std::vector<FqElem> full_alphabet(const FqCtx& ctx, const std::vector<FqElem>& alphabet) {
  return alphabet.empty() ? ctx.elements() : alphabet;
}

}  // namespace

void mv_enumerate(const Composition& d, const FqCtxPtr& ctx, const std::function<void(const LatticeGens&)>& visit) {
  const int n = d.size();
  const auto alpha = ctx->elements();
  std::vector<std::pair<int, int>> slots;  // (row j, column i), j < i
  int digits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (d[j] > 0) {
        slots.emplace_back(j, i);
        digits += d[j];
      }
  std::vector<std::size_t> idx(static_cast<std::size_t>(digits), 0);
  LatticeGens lat{d, zero_matrix(ctx, n)};
  do {
    auto& g = lat.gens;
    for (int i = 0; i < n; ++i) g(i, i) = TruncSeries::pi_power(ctx, d[i]);
    std::size_t pos = 0;
    for (const auto& [j, i] : slots) {
      std::vector<FqElem> c(static_cast<std::size_t>(d[j]));
      for (auto& x : c) x = alpha[idx[pos++]];
      g(j, i) = TruncSeries::from_coeffs(ctx, 0, c);
    }
    visit(lat);
  } while (advance(idx, alpha.size()));
}

std::int64_t mv_count(const Composition& d, std::int64_t q) {
  const int n = d.size();
  unsigned e = 0;
  for (int j = 0; j < n; ++j) e += static_cast<unsigned>(d[j] * (n - 1 - j));
  return ipow(q, e);
}

LatticeGens hermite_normal_form(const SeriesMatrix& g0) {
  const int n = g0.rows();
  const auto ctx = g0(0, 0).ctx();
  if (!is_integral(g0)) throw std::invalid_argument("hermite_normal_form: matrix not integral");
  const auto det = determinant(g0);
  const auto w = det.valuation();
  if (!w) throw PrecisionExhausted("hermite_normal_form: determinant not certified");
  // The lattice contains π^w O^n, so working modulo π^{(n+1)(w+1)} leaves ample room.
  const int cap = (n + 1) * (*w + 1);
  SeriesMatrix g = truncate_matrix(g0, cap);
  std::vector<int> dexp(static_cast<std::size_t>(n), 0);
  for (int k = n - 1; k >= 0; --k) {
    int best = -1;
    int best_v = TruncSeries::kExact;
    for (int c = 0; c <= k; ++c)
      if (auto v = g(k, c).valuation(); v && *v < best_v) {
        best_v = *v;
        best = c;
      }
    if (best < 0) throw PrecisionExhausted("hermite_normal_form: no certified pivot");
    g.swap_cols(best, k);
    const auto unit_inv = g(k, k).shifted(-best_v).inverse(cap);
    for (int r = 0; r < n; ++r) g(r, k) = (g(r, k) * unit_inv).truncated(cap);
    g(k, k) = TruncSeries::pi_power(ctx, best_v);
    for (int c = 0; c < k; ++c) {
      if (g(k, c).is_zero()) continue;
      const auto factor = g(k, c).shifted(-best_v);
      for (int r = 0; r < n; ++r) g(r, c) = (g(r, c) - factor * g(r, k)).truncated(cap);
      g(k, c) = TruncSeries(ctx);
    }
    dexp[static_cast<std::size_t>(k)] = best_v;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i - 1; j >= 0; --j) {
      const int dj = dexp[static_cast<std::size_t>(j)];
      const auto e = g(j, i);
      if (e.precision() < dj) throw PrecisionExhausted("hermite_normal_form: reduction beyond precision");
      std::vector<FqElem> low(static_cast<std::size_t>(dj), ctx->zero());
      for (int t = 0; t < dj; ++t) low[static_cast<std::size_t>(t)] = e.coeff(t);
      const auto rem = TruncSeries::from_coeffs(ctx, 0, low);
      const auto quot = (e - rem).shifted(-dj);
      if (!quot.is_zero() || !quot.is_exact())
        for (int r = 0; r < j; ++r) g(r, i) = (g(r, i) - quot * g(r, j)).truncated(cap);
      g(j, i) = rem;
    }
  for (int i = 0; i < n; ++i)
    for (int r = i + 1; r < n; ++r) g(r, i) = TruncSeries(ctx);
  return {Composition(dexp), g};
}

std::vector<std::uint32_t> lattice_key(const LatticeGens& l) {
  const int n = l.d.size();
  std::vector<std::uint32_t> key;
  for (int i = 0; i < n; ++i) key.push_back(static_cast<std::uint32_t>(l.d[i]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      for (int t = 0; t < l.d[j]; ++t) key.push_back(l.gens(j, i).coeff(t).code);
  return key;
}

std::vector<LatticeGens> sublattices(int n, int colength, const FqCtxPtr& ctx) {
  if (colength < 0) throw std::invalid_argument("sublattices: negative colength");
  std::vector<LatticeGens> steps;
  for (const auto& d : compositions_of(1, n)) mv_enumerate(d, ctx, [&](const LatticeGens& l) { steps.push_back(l); });
  std::map<std::vector<std::uint32_t>, LatticeGens> current;
  LatticeGens top{Composition(std::vector<int>(static_cast<std::size_t>(n), 0)), identity_matrix(ctx, n)};
  current.emplace(lattice_key(top), top);
  for (int w = 0; w < colength; ++w) {
    std::map<std::vector<std::uint32_t>, LatticeGens> next;
    for (const auto& [key, lat] : current)
      for (const auto& s : steps) {
        auto h = hermite_normal_form(lat.gens * s.gens);
        auto k = lattice_key(h);
        next.emplace(std::move(k), std::move(h));
      }
    current = std::move(next);
  }
  std::vector<LatticeGens> out;
  out.reserve(current.size());
  for (auto& [key, lat] : current) out.push_back(std::move(lat));
  return out;
}

std::vector<FqElem> subfield_elements(const FqCtx& ctx, unsigned m) {
  std::vector<FqElem> out;
  for (auto x : ctx.elements())
    if (ctx.in_subfield(x, m)) out.push_back(x);
  return out;
}

void for_each_principal_parts(const FqCtxPtr& ctx, const std::vector<int>& bounds, const std::vector<FqElem>& alphabet,
                              const std::function<void(const std::vector<TruncSeries>&)>& visit) {
  const auto alpha = full_alphabet(*ctx, alphabet);
  int digits = 0;
  for (int b : bounds) {
    if (b < 0) throw std::invalid_argument("pole bounds must be non-negative");
    digits += b;
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(digits), 0);
  std::vector<TruncSeries> parts(bounds.size(), TruncSeries(ctx));
  do {
    std::size_t pos = 0;
    for (std::size_t s = 0; s < bounds.size(); ++s) {
      std::vector<FqElem> c(static_cast<std::size_t>(bounds[s]));
      for (auto& x : c) x = alpha[idx[pos++]];
      parts[s] = TruncSeries::from_coeffs(ctx, -bounds[s], c);
    }
    visit(parts);
  } while (advance(idx, alpha.size()));
}

namespace {

std::vector<std::pair<int, int>> superdiag_positions(int n) {
  switch (n) {
    case 1:
      return {};
    case 2:
      return {{0, 1}};
    case 3:
      return {{0, 1}, {1, 2}, {0, 2}};
    default:
      throw UnsupportedRank("unipotent cosets are implemented for n <= 3, got n = " + std::to_string(n));
  }
}

}  // namespace

SeriesMatrix unipotent_from_entries(const FqCtxPtr& ctx, int n, const std::vector<TruncSeries>& superdiag) {
  const auto pos = superdiag_positions(n);
  if (pos.size() != superdiag.size()) throw std::invalid_argument("unipotent_from_entries: wrong number of entries");
  auto x = identity_matrix(ctx, n);
  for (std::size_t s = 0; s < pos.size(); ++s) x(pos[s].first, pos[s].second) = superdiag[s];
  return x;
}

void unipotent_cosets(const PoleBounds& pb, const FqCtxPtr& ctx, const std::function<void(const SeriesMatrix&)>& visit,
                      const std::vector<FqElem>& alphabet) {
  const auto pos = superdiag_positions(pb.n);
  if (pb.bounds.size() != pos.size()) throw std::invalid_argument("unipotent_cosets: wrong number of pole bounds");
  for_each_principal_parts(ctx, pb.bounds, alphabet, [&](const std::vector<TruncSeries>& parts) {
    visit(unipotent_from_entries(ctx, pb.n, parts));
  });
}

std::int64_t unipotent_coset_count(const PoleBounds& pb, std::int64_t alphabet_size) {
  superdiag_positions(pb.n);
  unsigned e = 0;
  for (int b : pb.bounds) e += static_cast<unsigned>(b);
  return ipow(alphabet_size, e);
}

SeriesMatrix canonical_coset(const SeriesMatrix& x) {
  const int n = x.rows();
  const auto ctx = x(0, 0).ctx();
  superdiag_positions(n);
  if (n == 1) return identity_matrix(ctx, 1);
  if (n == 2) return unipotent_from_entries(ctx, 2, {x(0, 1).principal_part()});
  // x·(α,β,γ) = (a+α, b+β+aγ, c+γ): kill the integral parts of a and c, then of b - a·c₊.
  const auto& a = x(0, 1);
  const auto& c = x(1, 2);
  const auto& b = x(0, 2);
  const auto c_plus = c.integral_part();
  const auto b_new = (b - a * c_plus).principal_part();
  return unipotent_from_entries(ctx, 3, {a.principal_part(), c.principal_part(), b_new});
}

}  // namespace sph
