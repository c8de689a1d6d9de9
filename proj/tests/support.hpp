#pragma once

// Shared helpers for the test suites: seeded randomness, numeric evaluation
// of symmetric polynomials, and small matrix builders.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "satake/localmodel.hpp"
#include "satake/symfunc.hpp"

namespace testing_support {

using namespace sph;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline FqElem random_elem(const FqCtx& ctx, bool nonzero = false) {
  for (;;) {
    FqElem x{static_cast<std::uint32_t>(uniform(0, static_cast<int>(ctx.size()) - 1))};
    if (!nonzero || x.code != 0) return x;
  }
}

/// Random polynomial in π of degree < len.
inline TruncSeries random_poly(const FqCtxPtr& ctx, int len, int lo = 0) {
  std::vector<FqElem> c;
  for (int i = 0; i < len; ++i) c.push_back(random_elem(*ctx));
  return TruncSeries::from_coeffs(ctx, lo, c);
}

inline TruncSeries random_unit(const FqCtxPtr& ctx, int len) {
  auto u = random_poly(ctx, len);
  return u + TruncSeries::monomial(ctx, random_elem(*ctx, true), 0) - TruncSeries::monomial(ctx, u.coeff(0), 0);
}

/// Random matrix in GL(n, O): unipotent lower times unit diagonal times unipotent upper, then a row shuffle.
inline SeriesMatrix random_unimodular(const FqCtxPtr& ctx, int n, int len = 3) {
  auto lo = identity_matrix(ctx, n);
  auto up = identity_matrix(ctx, n);
  auto d = zero_matrix(ctx, n);
  for (int i = 0; i < n; ++i) {
    d(i, i) = random_unit(ctx, len);
    for (int j = 0; j < i; ++j) {
      lo(i, j) = random_poly(ctx, len);
      up(j, i) = random_poly(ctx, len);
    }
  }
  auto g = lo * d * up;
  for (int i = n - 1; i > 0; --i) {
    const int j = uniform(0, i);
    for (int c = 0; c < n; ++c) std::swap(g(i, c), g(j, c));
  }
  return g;
}

inline double eval_real(const ValueScalar& c, double q) { return approx_real(c, static_cast<std::int64_t>(q)).value.real(); }

/// Σ_d c_d m_d(z) evaluated numerically, coefficients specialized at v² = q.
inline double eval_sym(const SymPoly& p, const std::vector<double>& z, std::int64_t q) {
  double acc = 0;
  for (const auto& [d, c] : p.terms()) {
    double m = 0;
    for (const auto& perm : orbit(d.parts())) {
      double t = 1;
      for (std::size_t i = 0; i < z.size(); ++i) t *= std::pow(z[i], perm[i]);
      m += t;
    }
    acc += approx_real(c, q).value.real() * m;
  }
  return acc;
}

inline double det_real(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (a[piv][c] == 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace testing_support
