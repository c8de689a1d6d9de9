#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "satake/exactnum.hpp"

namespace sph {

ValueScalar::ValueScalar(std::int64_t n) {
  if (n != 0) terms_.emplace(0, CycInt(n));
}

ValueScalar::ValueScalar(const CycInt& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

ValueScalar::ValueScalar(std::map<int, CycInt> terms, std::int64_t den)
    : terms_(std::move(terms)), den_(den) {
  if (den_ == 0) throw std::invalid_argument("ValueScalar: zero denominator");
  normalize();
}

ValueScalar ValueScalar::v_power(int k) { return monomial(CycInt(1), k); }

ValueScalar ValueScalar::monomial(const CycInt& c, int k) {
  ValueScalar r;
  if (!c.is_zero()) r.terms_.emplace(k, c);
  return r;
}

unsigned ValueScalar::prime() const {
  for (const auto& [e, c] : terms_)
    if (c.prime() != 1) return c.prime();
  return 1;
}

void ValueScalar::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& [e, c] : terms_) c = -c;
  }
  if (terms_.empty()) {
    den_ = 1;
    return;
  }
  std::int64_t g = den_;
  for (const auto& [e, c] : terms_) g = std::gcd(g, c.content());
  if (g > 1) {
    den_ /= g;
    for (auto& [e, c] : terms_) c = c.divided_exact(g);
  }
}

ValueScalar ValueScalar::shifted(int k) const {
  ValueScalar r;
  r.den_ = den_;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

ValueScalar ValueScalar::specialize(std::int64_t q) const {
  if (q < 2) throw std::invalid_argument("specialize: q must be at least 2");
  int min_half = 0;
  for (const auto& [e, c] : terms_) {
    const int h = (e >= 0) ? e / 2 : -((-e + 1) / 2);  // floor(e / 2)
    min_half = std::min(min_half, h);
  }
  // v^e = q^{floor(e/2)} v^{e mod 2}; clear negative powers into the denominator.
  const auto shift = static_cast<unsigned>(-min_half);
  std::map<int, CycInt> out;
  for (const auto& [e, c] : terms_) {
    const int h = (e >= 0) ? e / 2 : -((-e + 1) / 2);
    const int parity = e - 2 * h;
    const auto factor = ipow(q, static_cast<unsigned>(h + static_cast<int>(shift)));
    auto term = c * CycInt(factor);
    auto [it, inserted] = out.emplace(parity, term);
    if (!inserted) it->second += term;
  }
  return ValueScalar(std::move(out), checked_mul(den_, ipow(q, shift)));
}

ValueScalar ValueScalar::substitute_t(std::int64_t t) const {
  CycInt acc(0);
  for (const auto& [e, c] : terms_) {
    if (e > 0 || (-e) % 2 != 0) throw std::domain_error("substitute_t: not a polynomial in v^-2");
    acc += c * CycInt(ipow(t, static_cast<unsigned>(-e / 2)));
  }
  return ValueScalar(std::map<int, CycInt>{{0, acc}}, den_);
}

bool ValueScalar::is_integral_poly_in_v2() const {
  if (den_ != 1) return false;
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0 || !c.is_rational()) return false;
  return true;
}

bool ValueScalar::is_nonneg_poly_in_v2() const {
  if (!is_integral_poly_in_v2()) return false;
  for (const auto& [e, c] : terms_)
    if (e < 0 || c.rational_value() < 0) return false;
  return true;
}

ValueScalar& ValueScalar::operator+=(const ValueScalar& o) {
  if (o.is_zero()) return *this;
  const std::int64_t l = std::lcm(den_, o.den_);
  const std::int64_t fa = l / den_;
  const std::int64_t fb = l / o.den_;
  std::map<int, CycInt> out;
  for (const auto& [e, c] : terms_) out.emplace(e, c * CycInt(fa));
  for (const auto& [e, c] : o.terms_) {
    auto term = c * CycInt(fb);
    auto [it, inserted] = out.emplace(e, term);
    if (!inserted) it->second += term;
  }
  terms_ = std::move(out);
  den_ = l;
  normalize();
  return *this;
}

ValueScalar& ValueScalar::operator-=(const ValueScalar& o) { return *this += -o; }

ValueScalar& ValueScalar::operator*=(const ValueScalar& o) {
  std::map<int, CycInt> out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      auto term = ca * cb;
      auto [it, inserted] = out.emplace(ea + eb, term);
      if (!inserted) it->second += term;
    }
  }
  terms_ = std::move(out);
  den_ = checked_mul(den_, o.den_);
  normalize();
  return *this;
}

ValueScalar ValueScalar::operator-() const {
  ValueScalar r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const ValueScalar& a, const ValueScalar& b) {
  if (a.den_ != b.den_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

std::string ValueScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c0] : terms_) {
    CycInt c = c0;
    const bool bare = c.is_rational();
    const bool negative = bare && c.rational_value() < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const auto s = c.to_string();
    if (e == 0) {
      os << (bare ? s : "(" + s + ")");
      continue;
    }
    if (!(bare && c.rational_value() == 1)) os << (bare ? s : "(" + s + ")") << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  if (den_ != 1) return "(" + os.str() + ")/" + std::to_string(den_);
  return os.str();
}

ApproxValue approx_real(const ValueScalar& s, std::int64_t q) {
  const double v = std::sqrt(static_cast<double>(q));
  std::complex<double> z = 0.0;
  for (const auto& [e, c] : s.terms()) z += c.embed() * std::pow(v, e);
  z /= static_cast<double>(s.den());
  return {z, std::abs(z)};
}

}  // namespace sph
