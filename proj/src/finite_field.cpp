#include <stdexcept>
#include <sstream>

#include "satake/exactnum.hpp"

namespace sph {

namespace {

using Poly = std::vector<unsigned>;  // coefficients low to high over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw std::domain_error("inv_mod: not invertible");
}

// Remainder of a modulo b (b nonzero) over F_p.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const auto lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] = (a[i + shift] + (p - (factor * b[i]) % p)) % p;
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t code, unsigned p, unsigned k) {
  Poly c(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

std::uint32_t encode(const Poly& c, unsigned p) {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

}  // namespace

bool is_irreducible(unsigned p, std::span<const unsigned> monic) {
  const std::size_t k = monic.size() - 1;
  if (monic.empty() || monic.back() != 1) throw std::invalid_argument("is_irreducible: polynomial must be monic");
  if (k <= 1) return true;
  const Poly f(monic.begin(), monic.end());
  // Trial division by every monic polynomial of degree 1..k/2.
  for (std::size_t deg = 1; deg <= k / 2; ++deg) {
    std::uint32_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint32_t code = 0; code < count; ++code) {
      Poly g = decode(code, p, static_cast<unsigned>(deg));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FqCtx::FqCtx(unsigned p, unsigned k, std::vector<unsigned> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("build_field: p is not prime");
  if (k == 0) throw std::invalid_argument("build_field: k must be positive");
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  if (q_ > 2048) throw std::invalid_argument("build_field: field too large for table arithmetic");
  if (modulus_.size() != k + 1 || modulus_.back() != 1)
    throw std::invalid_argument("build_field: modulus must be monic of degree k");
  for (auto c : modulus_)
    if (c >= p) throw std::invalid_argument("build_field: modulus coefficient out of range");
  if (!is_irreducible(p, modulus_)) throw std::invalid_argument("build_field: modulus is reducible");

  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  frob_.resize(q_);
  std::vector<Poly> polys(q_);
  for (std::uint32_t a = 0; a < q_; ++a) polys[a] = decode(a, p, k);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly n(k);
    for (unsigned i = 0; i < k; ++i) n[i] = (p - polys[a][i]) % p;
    neg_[a] = encode(n, p);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly s(k);
      for (unsigned i = 0; i < k; ++i) s[i] = (polys[a][i] + polys[b][i]) % p;
      add_[a * q_ + b] = encode(s, p);
      Poly prod(2 * k, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p;
      Poly r = poly_mod(prod, modulus_, p);
      r.resize(k, 0);
      mul_[a * q_ + b] = encode(r, p);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
  for (std::uint32_t a = 0; a < q_; ++a) frob_[a] = pow({a}, p).code;
}

FqElem FqCtx::from_int(std::int64_t n) const {
  const auto r = static_cast<std::uint32_t>(((n % static_cast<std::int64_t>(p_)) + p_) % p_);
  return {r};
}

FqElem FqCtx::from_coeffs(std::span<const unsigned> c) const {
  if (c.size() > k_) throw std::invalid_argument("FqCtx::from_coeffs: too many coefficients");
  Poly poly(c.begin(), c.end());
  for (auto& x : poly) x %= p_;
  return {encode(poly, p_)};
}

std::vector<unsigned> FqCtx::coeffs(FqElem x) const { return decode(x.code, p_, k_); }

FqElem FqCtx::generator() const {
  if (k_ == 1) return {0};
  return {p_};
}

FqElem FqCtx::inv(FqElem a) const {
  if (a.code == 0) throw std::domain_error("FqCtx::inv: zero has no inverse");
  return {inv_[a.code]};
}

FqElem FqCtx::pow(FqElem a, std::uint64_t e) const {
  FqElem r = one();
  FqElem b = a;
  while (e > 0) {
    if (e & 1U) r = mul(r, b);
    b = mul(b, b);
    e >>= 1U;
  }
  return r;
}

FqElem FqCtx::frobenius(FqElem x, unsigned times) const {
  for (unsigned i = 0; i < times; ++i) x = {frob_[x.code]};
  return x;
}

bool FqCtx::in_subfield(FqElem x, unsigned m) const {
  if (m == 0 || k_ % m != 0) throw std::invalid_argument("in_subfield: m must divide k");
  return frobenius(x, m) == x;
}

FqElem FqCtx::conj(FqElem x) const {
  if (k_ % 2 != 0) throw std::invalid_argument("FqCtx::conj: field degree must be even");
  return frobenius(x, k_ / 2);
}

std::vector<FqElem> FqCtx::elements() const {
  std::vector<FqElem> out(q_);
  for (std::uint32_t a = 0; a < q_; ++a) out[a] = {a};
  return out;
}

std::string FqCtx::to_string(FqElem x) const {
  if (k_ == 1) return std::to_string(x.code);
  std::ostringstream os;
  os << "[";
  const auto c = coeffs(x);
  for (unsigned i = 0; i < k_; ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

FqCtxPtr build_field(unsigned p, unsigned k, std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("build_field: p is not prime");
  if (k == 0) throw std::invalid_argument("build_field: k must be positive");
  if (modulus) return std::make_shared<const FqCtx>(p, k, std::move(*modulus));
  if (k == 1) return std::make_shared<const FqCtx>(p, 1, std::vector<unsigned>{0, 1});
  std::uint32_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint32_t code = 0; code < count; ++code) {
    Poly f = decode(code, p, k);
    f.push_back(1);
    if (is_irreducible(p, f)) return std::make_shared<const FqCtx>(p, k, std::move(f));
  }
  throw std::logic_error("build_field: no irreducible polynomial found");
}

FqElem fq_trace(const FqCtx& ctx, FqElem x, unsigned m) {
  if (m == 0 || ctx.k() % m != 0) throw std::invalid_argument("fq_trace: m must divide k");
  FqElem acc = ctx.zero();
  FqElem y = x;
  for (unsigned j = 0; j < ctx.k() / m; ++j) {
    acc = ctx.add(acc, y);
    y = ctx.frobenius(y, m);
  }
  return acc;
}

CycInt psi_char(const FqCtx& ctx, FqElem t) { return psi_char(ctx, t, ctx.k()); }

CycInt psi_char(const FqCtx& ctx, FqElem t, unsigned m) {
  if (m == 0 || ctx.k() % m != 0) throw std::invalid_argument("psi_char: m must divide k");
  if (!ctx.in_subfield(t, m)) throw std::invalid_argument("psi_char: argument not in the subfield");
  FqElem acc = ctx.zero();
  FqElem y = t;
  for (unsigned j = 0; j < m; ++j) {
    acc = ctx.add(acc, y);
    y = ctx.frobenius(y);
  }
  // acc lies in F_p, whose elements are the codes 0..p-1.
  return CycInt::zeta_power(ctx.p(), acc.code);
}

}  // namespace sph
