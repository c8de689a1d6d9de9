#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "satake/exactnum.hpp"

namespace sph {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

std::int64_t ipow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::size_t basis_size(unsigned p) { return p <= 2 ? 1 : p - 1; }

}  // namespace

CycInt::CycInt(std::int64_t n, unsigned p) : p_(p), c_(basis_size(p), 0) {
  if (p != 1 && !is_prime(p)) throw std::invalid_argument("CycInt: p must be prime");
  c_[0] = n;
}

CycInt CycInt::zeta_power(unsigned p, std::int64_t e) {
  if (!is_prime(p)) throw std::invalid_argument("zeta_power: p must be prime");
  CycInt z(0, p);
  const auto ep = static_cast<std::size_t>(((e % p) + p) % p);
  if (ep + 1 < p || p == 2) {
    if (p == 2 && ep == 1)
      z.c_[0] = -1;
    else
      z.c_[ep] = 1;
  } else {
    // ζ^{p-1} = -(1 + ζ + ... + ζ^{p-2})
    for (auto& c : z.c_) c = -1;
  }
  return z;
}

bool CycInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t c) { return c == 0; });
}

bool CycInt::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t CycInt::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycInt is not rational");
  return c_[0];
}

std::int64_t CycInt::content() const {
  std::int64_t g = 0;
  for (auto c : c_) g = std::gcd(g, c);
  return g;
}

CycInt CycInt::promoted(unsigned p) const {
  if (p == p_) return *this;
  if (p_ != 1) throw std::invalid_argument("CycInt: mixing different cyclotomic primes");
  CycInt r(0, p);
  r.c_[0] = c_[0];
  return r;
}

CycInt CycInt::divided_exact(std::int64_t d) const {
  CycInt r = *this;
  for (auto& c : r.c_) {
    if (c % d != 0) throw std::domain_error("CycInt: inexact division");
    c /= d;
  }
  return r;
}

void CycInt::unify(CycInt& o) {
  if (p_ == o.p_) return;
  if (p_ == 1)
    *this = promoted(o.p_);
  else
    o = o.promoted(p_);
}

CycInt& CycInt::operator+=(const CycInt& o) {
  CycInt b = o;
  unify(b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], b.c_[i]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) { return *this += -o; }

CycInt& CycInt::operator*=(const CycInt& o) {
  CycInt b = o;
  unify(b);
  if (p_ <= 2) {
    c_[0] = checked_mul(c_[0], b.c_[0]);
    return *this;
  }
  // Product in Z[x]/(x^p - 1), then fold ζ^{p-1} back onto the basis.
  std::vector<std::int64_t> full(p_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      auto& slot = full[(i + j) % p_];
      slot = checked_add(slot, checked_mul(c_[i], b.c_[j]));
    }
  }
  const std::int64_t top = full[p_ - 1];
  for (std::size_t i = 0; i + 1 < p_; ++i) c_[i] = checked_sub(full[i], top);
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.c_) c = checked_sub(0, c);
  return r;
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.p_ == b.p_) return a.c_ == b.c_;
  if (a.p_ == 1) return a.promoted(b.p_).c_ == b.c_;
  if (b.p_ == 1) return b.promoted(a.p_).c_ == a.c_;
  return a.is_zero() && b.is_zero();
}

std::complex<double> CycInt::embed() const {
  std::complex<double> z = 0.0;
  const double p = p_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const double angle = p_ <= 2 ? 0.0 : 2.0 * M_PI * static_cast<double>(i) / p;
    z += static_cast<double>(c_[i]) * std::polar(1.0, angle);
  }
  return z;
}

std::string CycInt::to_string() const {
  if (is_rational()) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const auto c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const auto a = c < 0 ? -c : c;
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "z" << p_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace sph
